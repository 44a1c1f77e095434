"""Gorenstein and almost Gorenstein classification for three ring families.

Families: quotients of a generic symmetric matrix by minors of size t+1
("symmetric"), Hankel determinantal rings ("hankel"), and quotients by the
square of the submaximal-Pfaffian ideal of a generic skew-symmetric matrix of
odd size ("pfaffian-square").  Invariants that a family's closed forms do not
supply are reported as not computed rather than guessed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import resolution
from .resolution import RingParams

__all__ = [
    "ObstructionReport",
    "Classification",
    "gorenstein_symmetric",
    "classify_symmetric",
    "ag_obstruction",
    "ag_level_criterion",
    "classify_hankel",
    "classify_pfaffian_square",
    "pfaffian_square_betti",
]


@dataclass(frozen=True)
class ObstructionReport:
    """Exact evaluation of the inequality every almost Gorenstein ring of
    this kind must satisfy.

    The bound chain: a minimal-generator count of the cokernel forces
    lower_bound = mu * beta_last - beta_prev, while multiplicity counting
    caps it at upper_bound = mu + (dim - 1)(beta_last - 1), where mu is the
    embedding dimension.  `passes` is their comparison and nothing else.
    sharp_lhs <= sharp_rhs is the same inequality rearranged to
    (beta_last - 1)(mu - dim + 1) <= beta_prev, the form convenient for hand
    checking.
    """

    embedding_dim: int
    beta_last: int
    beta_prev: int
    lower_bound: int
    upper_bound: int
    sharp_lhs: int
    sharp_rhs: int
    passes: bool

    def to_json_dict(self) -> dict:
        return {
            "lower": str(self.lower_bound),
            "upper": str(self.upper_bound),
            "passes": self.passes,
        }


@dataclass(frozen=True)
class Classification:
    """Classification verdict plus the invariants it rests on.

    cm_type and projdim are None when the family's closed forms do not
    determine them; inventing values is worse than admitting that.
    """

    family: str
    n: int
    t: int | None
    dim: int
    projdim: int | None
    a_invariant: int
    cm_type: int | None
    gorenstein: bool
    almost_gorenstein: bool
    obstruction: ObstructionReport | None
    notes: str

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "t": self.t,
            "dim": self.dim,
            "projdim": "not computed" if self.projdim is None else self.projdim,
            "a_invariant": self.a_invariant,
            "cm_type": "not computed" if self.cm_type is None else str(self.cm_type),
            "gorenstein": self.gorenstein,
            "almost_gorenstein": self.almost_gorenstein,
            "obstruction": None if self.obstruction is None else self.obstruction.to_json_dict(),
            "notes": self.notes,
        }

    def summary(self) -> str:
        def yesno(flag: bool) -> str:
            return "yes" if flag else "no"

        head = f"{self.family}(n={self.n}" + ("" if self.t is None else f", t={self.t}") + ")"
        fields = [
            f"dim={self.dim}",
            "projdim=?" if self.projdim is None else f"projdim={self.projdim}",
            f"a={self.a_invariant}",
            "type=?" if self.cm_type is None else f"type={self.cm_type}",
            f"gorenstein={yesno(self.gorenstein)}",
            f"almost_gorenstein={yesno(self.almost_gorenstein)}",
        ]
        if self.obstruction is not None:
            rel = "<=" if self.obstruction.passes else ">"
            fields.append(
                f"obstruction={self.obstruction.lower_bound}{rel}{self.obstruction.upper_bound}"
            )
        return f"{head}: " + " ".join(fields)


def gorenstein_symmetric(params: RingParams) -> bool:
    """The symmetric determinantal ring is Gorenstein exactly when n - t is odd."""
    return (params.n - params.t) % 2 == 1


def ag_obstruction(params: RingParams) -> ObstructionReport:
    """Evaluate the necessary inequality for the non-Gorenstein symmetric
    family (n - t even).  Passing is necessary for almost Gorenstein, not
    sufficient; on this family it happens to single out n=3, t=1.
    """
    if (params.n - params.t) % 2:
        raise ValueError(
            "n - t is odd, so the ring is Gorenstein and trivially almost "
            "Gorenstein; the obstruction test covers only even n - t"
        )
    beta_last, beta_prev = resolution.last_two_closed_form(params)
    mu = params.num_vars
    d = params.dim
    lower = mu * beta_last - beta_prev
    upper = mu + (d - 1) * (beta_last - 1)
    return ObstructionReport(
        embedding_dim=mu,
        beta_last=beta_last,
        beta_prev=beta_prev,
        lower_bound=lower,
        upper_bound=upper,
        sharp_lhs=(beta_last - 1) * (mu - d + 1),
        sharp_rhs=beta_prev,
        passes=lower <= upper,
    )


def ag_level_criterion(a_invariant: int, dim: int) -> bool:
    """Sufficient test for a non-Gorenstein Cohen-Macaulay level graded
    domain to be almost Gorenstein: the a-invariant equals 1 - dim."""
    return a_invariant == 1 - dim


def classify_symmetric(params: RingParams) -> Classification:
    """Full verdict for the symmetric determinantal ring.

    Almost Gorenstein holds exactly when n - t is odd or (n, t) = (3, 1);
    dimension, projective dimension, a-invariant and type come from the
    computed resolution, and the obstruction report is attached in the
    non-Gorenstein case.
    """
    table = resolution.betti_table(params)
    gorenstein = gorenstein_symmetric(params)
    return Classification(
        family="symmetric",
        n=params.n,
        t=params.t,
        dim=params.dim,
        projdim=table.projdim,
        a_invariant=table.a_invariant,
        cm_type=table.cm_type,
        gorenstein=gorenstein,
        almost_gorenstein=gorenstein or (params.n, params.t) == (3, 1),
        obstruction=None if gorenstein else ag_obstruction(params),
        notes=(
            "graded and local verdicts agree for this family; the same ring "
            "is the invariant ring of an orthogonal group acting on a space "
            "of generic matrices"
        ),
    )


def classify_hankel(n: int, t: int) -> Classification:
    """Verdict for Hankel determinantal rings, 1 <= t <= n.

    Closed forms: dimension 2t - 2, a-invariant 1 - t, Gorenstein exactly
    for n = t, almost Gorenstein exactly for n = t or t = 2.  Type and
    projective dimension are not computed for this family.
    """
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got n={n}, t={t}")
    gorenstein = n == t
    return Classification(
        family="hankel",
        n=n,
        t=t,
        dim=2 * t - 2,
        projdim=None,
        a_invariant=1 - t,
        cm_type=None,
        gorenstein=gorenstein,
        almost_gorenstein=gorenstein or t == 2,
        obstruction=None,
        notes=(
            "Cohen-Macaulay; minors of size t of a Hankel matrix in n "
            "variables; type and projective dimension are not computed for "
            "this family"
        ),
    )


def pfaffian_square_betti(n: int) -> tuple[tuple[int, int], ...]:
    """(degree, rank) pairs of the length-3 resolution of the quotient by
    the squared submaximal-Pfaffian ideal, homological indices 0..3."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and at least 3, got {n}")
    return (
        (0, 1),
        (n - 1, comb(n + 1, 2)),
        (n, n * n - 1),
        (n + 1, comb(n, 2)),
    )


def classify_pfaffian_square(n: int) -> Classification:
    """Verdict for the quotient by the square of the submaximal-Pfaffian
    ideal of a generic skew-symmetric n x n matrix, n odd.

    Almost Gorenstein exactly for n = 3.  The graded a-invariant is the top
    resolution twist n + 1 minus the binomial(n,2) variables; the bare twist
    is quoted in the notes since both readings circulate.
    """
    betti = pfaffian_square_betti(n)
    num_vars = comb(n, 2)
    top_twist = betti[-1][0]
    return Classification(
        family="pfaffian-square",
        n=n,
        t=None,
        dim=num_vars - 3,
        projdim=3,
        a_invariant=top_twist - num_vars,
        cm_type=betti[-1][1],
        gorenstein=False,
        almost_gorenstein=n == 3,
        obstruction=None,
        notes=(
            f"betti numbers {tuple(rank for _, rank in betti)} in degrees "
            f"{tuple(deg for deg, _ in betti)}; graded a-invariant "
            f"{top_twist - num_vars} = top twist {top_twist} minus "
            f"{num_vars} variables (the bare top twist is the other reading "
            "in circulation)"
        ),
    )
