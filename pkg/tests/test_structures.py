"""Structure-function validation and evaluation."""

from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relage import build_structure, evaluate_structure, k_out_of_n_structure, path_sets_structure
from relage.errors import (
    BadThreshold,
    EmptyPathSets,
    IndexOutOfRange,
    IrrelevantComponent,
    LengthMismatch,
    NonMinimalPathSet,
)


def test_minmax_structure_valid():
    phi = path_sets_structure(3, [[1, 2], [1, 3]])
    assert phi.n == 3
    assert len(phi.path_sets) == 2


def test_parallel_symbolic():
    phi = k_out_of_n_structure(1, 4)
    assert phi.is_k_out_of_n
    assert phi.path_sets is None


def test_non_minimal_rejected():
    with pytest.raises(NonMinimalPathSet) as exc:
        path_sets_structure(2, [[1], [1, 2]])
    assert exc.value.subset == frozenset({1})


def test_irrelevant_component_rejected():
    with pytest.raises(IrrelevantComponent) as exc:
        path_sets_structure(3, [[1, 2]])
    assert exc.value.index == 3


def test_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        path_sets_structure(2, [[1, 5]])


def test_empty_path_sets():
    with pytest.raises(EmptyPathSets):
        path_sets_structure(2, [])


def test_bad_threshold():
    with pytest.raises(BadThreshold):
        k_out_of_n_structure(4, 3)
    with pytest.raises(BadThreshold):
        k_out_of_n_structure(0, 3)


def test_build_structure_from_dicts():
    phi = build_structure({"type": "path_sets", "n": 3, "path_sets": [[1, 2], [1, 3]]})
    assert phi.path_sets is not None
    phi = build_structure({"type": "k_out_of_n", "k": 2, "n": 3})
    assert phi.k == 2


def test_evaluate_minmax():
    phi = path_sets_structure(3, [[1, 2], [1, 3]])
    assert evaluate_structure(phi, (1, 0, 1)) is True
    assert evaluate_structure(phi, (0, 1, 1)) is False
    assert evaluate_structure(phi, (0, 0, 0)) is False


def test_evaluate_k_out_of_n():
    phi = k_out_of_n_structure(2, 3)
    assert evaluate_structure(phi, (1, 1, 0)) is True
    assert evaluate_structure(phi, (1, 0, 0)) is False


def test_length_mismatch():
    phi = k_out_of_n_structure(2, 3)
    with pytest.raises(LengthMismatch):
        evaluate_structure(phi, (1, 1))


def test_k_out_of_n_matches_explicit_subsets_exhaustively():
    # all 2^n states for every threshold, n <= 8
    for n in range(1, 9):
        for k in range(1, n + 1):
            sym = k_out_of_n_structure(k, n)
            explicit = path_sets_structure(
                n, [list(c) for c in combinations(range(1, n + 1), k)]
            )
            for states in product((0, 1), repeat=n):
                assert sym.evaluate(states) == explicit.evaluate(states)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_monotone_in_every_component(data):
    n = data.draw(st.integers(2, 6))
    universe = list(range(1, n + 1))
    r = data.draw(st.integers(1, 4))
    raw = data.draw(
        st.lists(
            st.sets(st.sampled_from(universe), min_size=1, max_size=n),
            min_size=r, max_size=r,
        )
    )
    minimal = [s for s in raw if not any(o < s for o in raw)]
    seen, sets = set(), []
    for s in minimal:
        fs = frozenset(s)
        if fs not in seen:
            seen.add(fs)
            sets.append(fs)
    if not set().union(*sets) == set(universe):
        # pad with the missing components as one extra path set if minimality allows
        missing = set(universe) - set().union(*sets)
        candidate = frozenset(missing)
        if any(candidate <= s or s <= candidate for s in sets):
            return
        sets.append(candidate)
    try:
        phi = path_sets_structure(n, [sorted(s) for s in sets])
    except NonMinimalPathSet:
        return
    for states in product((0, 1), repeat=n):
        base = phi.evaluate(states)
        for i in range(n):
            if states[i] == 0:
                flipped = list(states)
                flipped[i] = 1
                assert phi.evaluate(flipped) >= base


def test_materialized_path_sets_cap():
    phi = k_out_of_n_structure(3, 6)
    sets = phi.materialized_path_sets()
    assert len(sets) == 20
    big = k_out_of_n_structure(7, 20)
    with pytest.raises(BadThreshold):
        big.materialized_path_sets(cap=12)
