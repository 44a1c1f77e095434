import json
from math import comb

import pytest

from symdet.partitions import Partition
from symdet.resolution import (
    DEFAULT_FILTER_CAP,
    BettiTable,
    ResolutionTerm,
    RingParams,
    a_invariant_symmetric,
    betti_table,
    enumerate_shapes,
    enumerate_shapes_oracle,
    enumerate_terms,
    is_level,
    last_two_closed_form,
    projective_dimension,
)
from symdet.schur import OracleCapExceeded


def even_grid(n_max):
    for n in range(2, n_max + 1):
        for t in range(1, n):
            if (n - t) % 2 == 0:
                yield RingParams(n, t)


def full_grid(n_max):
    for n in range(2, n_max + 1):
        for t in range(1, n):
            yield RingParams(n, t)


def test_ring_params_validation():
    with pytest.raises(ValueError):
        RingParams(2, 2)
    with pytest.raises(ValueError):
        RingParams(3, 0)
    with pytest.raises(ValueError):
        RingParams(1, 2)
    params = RingParams(5, 3)
    assert params.num_vars == 15
    assert params.dim == 12


def test_projective_dimension_values():
    assert projective_dimension(RingParams(3, 1)) == 3
    assert projective_dimension(RingParams(5, 3)) == 3
    assert projective_dimension(RingParams(2, 1)) == 1


def test_projective_dimension_matches_table():
    for params in full_grid(6):
        table = betti_table(params)
        top = max(i for i, _ in table.entries())
        assert top == table.projdim == projective_dimension(params)


def test_enumerate_terms_worked_examples():
    terms = enumerate_terms(RingParams(3, 1), 1)
    assert len(terms) == 1
    term = terms[0]
    assert term.shape == Partition((2, 2))
    assert (term.half_rank, term.degree, term.rank) == (1, 2, 6)

    terms = enumerate_terms(RingParams(3, 1), 3)
    assert len(terms) == 1
    assert terms[0].shape == Partition((3, 3, 2))
    assert (terms[0].degree, terms[0].rank) == (4, 3)

    terms = enumerate_terms(RingParams(5, 3), 2)
    assert len(terms) == 1
    assert terms[0].shape == Partition((5, 4, 1))
    assert (terms[0].degree, terms[0].rank) == (5, 24)


def test_enumerate_terms_rejects_nonpositive_index():
    with pytest.raises(ValueError):
        enumerate_terms(RingParams(3, 1), 0)


def test_term_invariants():
    for params in full_grid(6):
        for i in range(1, projective_dimension(params) + 1):
            for term in enumerate_terms(params, i):
                assert term.hom_index == i
                assert term.degree - i == term.half_rank * params.t
                assert 2 * term.degree == term.shape.weight
                assert term.rank > 0
                assert term.shape.diagonal_rank() == 2 * term.half_rank
                hook = term.shape.to_hook_notation()
                assert all(a - b == params.t - 1 for a, b in zip(hook.arms, hook.legs))


def test_resolution_term_validation():
    with pytest.raises(ValueError):
        ResolutionTerm(Partition((2, 2)), half_rank=2, hom_index=1, degree=2, rank=6)
    with pytest.raises(ValueError):
        ResolutionTerm(Partition((2, 2)), half_rank=1, hom_index=1, degree=3, rank=6)
    with pytest.raises(ValueError):
        ResolutionTerm(Partition((2, 2)), half_rank=1, hom_index=1, degree=2, rank=0)


def test_betti_table_worked_examples():
    table = betti_table(RingParams(3, 1))
    assert table.betti_numbers() == (1, 6, 8, 3)
    assert table.entries() == {(0, 0): 1, (1, 2): 6, (2, 3): 8, (3, 4): 3}

    table = betti_table(RingParams(5, 3))
    assert table.betti_numbers() == (1, 15, 24, 10)
    assert table.entries() == {(0, 0): 1, (1, 4): 15, (2, 5): 24, (3, 6): 10}

    table = betti_table(RingParams(2, 1))
    assert table.betti_numbers() == (1, 1)
    assert table.entries() == {(0, 0): 1, (1, 2): 1}


def test_alternating_sum_vanishes():
    for params in full_grid(6):
        assert betti_table(params).alternating_sum() == 0


def test_last_two_closed_form():
    assert last_two_closed_form(RingParams(5, 3)) == (10, 24)
    assert last_two_closed_form(RingParams(3, 1)) == (3, 8)
    assert last_two_closed_form(RingParams(4, 2)) == (6, 15)
    with pytest.raises(ValueError, match="Gorenstein"):
        last_two_closed_form(RingParams(4, 1))


def test_closed_form_matches_table():
    for params in even_grid(7):
        betti = betti_table(params).betti_numbers()
        assert (betti[-1], betti[-2]) == last_two_closed_form(params)


def test_a_invariant_values():
    assert a_invariant_symmetric(RingParams(3, 1)) == -2
    assert a_invariant_symmetric(RingParams(5, 3)) == -9
    assert a_invariant_symmetric(RingParams(2, 1)) == -1


def test_is_level():
    assert is_level(RingParams(3, 1))
    assert is_level(RingParams(5, 3))
    assert is_level(RingParams(6, 2))


def test_forced_top_shapes():
    for params in even_grid(8):
        n, t = params.n, params.t
        s = n - t
        ell = projective_dimension(params)
        last = enumerate_terms(params, ell)
        prev = enumerate_terms(params, ell - 1)
        assert [term.shape for term in last] == [Partition((n,) * s + (s,))]
        assert [term.shape for term in prev] == [Partition((n,) * (s - 1) + (n - 1, s - 1))]
        assert last[0].shape.diagonal_rank() == s


def test_enumerate_shapes_examples():
    assert enumerate_shapes(1, 4) == [Partition((2, 2))]
    assert enumerate_shapes(2, 3) == []  # odd weight never occurs
    assert enumerate_shapes_oracle(3, 2) == []
    with pytest.raises(ValueError):
        enumerate_shapes(0, 4)
    with pytest.raises(ValueError):
        enumerate_shapes(1, 0)


def test_shape_oracle_cap():
    with pytest.raises(OracleCapExceeded):
        enumerate_shapes_oracle(1, DEFAULT_FILTER_CAP + 2)
    assert enumerate_shapes_oracle(1, 26, cap=26) == enumerate_shapes(1, 26)


def test_shapes_construction_equals_filter():
    # the acceptance suite pushes this to weight 20
    for t in (1, 2, 3):
        for weight in range(2, 13, 2):
            assert enumerate_shapes(t, weight) == enumerate_shapes_oracle(t, weight)


def test_json_schema():
    doc = betti_table(RingParams(5, 3)).to_json_dict()
    assert doc["n"] == 5 and doc["t"] == 3
    assert doc["char"] == "0"
    assert doc["projdim"] == 3
    assert doc["entries"][0] == {"i": 0, "degree": 0, "rank": "1", "partitions": []}
    assert [e["rank"] for e in doc["entries"]] == ["1", "15", "24", "10"]
    assert doc["entries"][2]["partitions"] == ["5,4,1"]
    keys = [(e["i"], e["degree"]) for e in doc["entries"]]
    assert keys == sorted(keys)
    json.dumps(doc)  # serializable as is


def test_render_text_layout():
    text = betti_table(RingParams(3, 1)).render_text()
    lines = text.splitlines()
    assert lines[1].startswith("0:")
    assert lines[-1].startswith("total:")
    assert "6  8  3" in lines[-1]
    # column 0 carries only the ring itself
    assert "1  .  .  ." in lines[1]
