from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from doldcalc.doldcore import (
    DoldSequence,
    RootSpectrum,
    dold_to_spectrum,
    genus_of,
    is_realizable,
)
from doldcalc.genus_opt import (
    divisor_closure,
    min_genus_exact,
    min_genus_odd,
    upper_bound_genus,
)
from doldcalc.spectra_enum import enumerate_catalog


def _check_witness(w):
    assert is_realizable(w.dold)[0]
    assert w.spectrum == dold_to_spectrum(w.dold)
    assert genus_of(w.spectrum) == w.genus


def test_upper_bound_examples():
    w = upper_bound_genus({15})
    assert w.genus == 16 and w.dold == DoldSequence({15: -2})
    assert w.spectrum.multiset() == (1, 1, 1, 1, 3, 3, 5, 5, 15, 15)
    w = upper_bound_genus({1, 2})
    assert w.genus == 4 and w.dold.to_dense() == (-2, -2)
    assert w.spectrum == RootSpectrum({1: 6, 2: 2})
    w = upper_bound_genus({1})
    assert w.genus == 2 and w.dold == DoldSequence({1: -2})


@given(st.frozensets(st.integers(1, 40), min_size=1, max_size=6))
def test_upper_bound_always_realizable_with_exact_support(A):
    w = upper_bound_genus(A)
    _check_witness(w)
    assert w.dold.support == A
    assert set(w.dold.values()) <= {-1, -2}


def test_empty_target_rejected():
    with pytest.raises(ValueError):
        upper_bound_genus(set())
    with pytest.raises(ValueError):
        min_genus_exact([])


def test_min_genus_exact_examples():
    w = min_genus_exact({1, 2})
    assert w.genus == 1 and w.spectrum == RootSpectrum({2: 2})
    assert w.dold.to_dense() == (4, -2)
    assert min_genus_exact({15}).genus == 16
    w = min_genus_exact({1})
    assert w.genus == 2 and w.dold == DoldSequence({1: -2})


def test_min_genus_odd_examples():
    w = min_genus_odd({1})
    assert w.genus == 1 and w.spectrum == RootSpectrum({2: 2})
    w = min_genus_odd({1, 3})
    assert w.genus == 1 and w.spectrum == RootSpectrum({3: 1})
    with pytest.raises(ValueError):
        min_genus_odd({2, 3})


def test_min_genus_odd_fifteen():
    w = min_genus_odd({15})
    _check_witness(w)
    assert w.genus == 14
    assert w.spectrum == RootSpectrum({6: 2, 10: 2, 30: 2})
    assert w.dold.support == {2, 15, 30}
    assert dict(w.dold) == {2: 2, 15: 2, 30: -2}


def test_min_genus_exact_agrees_with_catalog_scan():
    targets = [frozenset(c) for m in range(1, 7) for c in combinations(range(1, 7), m)]
    pending = {A: upper_bound_genus(A).genus for A in targets}
    first_seen = {}
    g = 0
    while pending:
        g += 1
        aps = {rec.ap for rec in enumerate_catalog(g)}
        for A in list(pending):
            if A in aps:
                first_seen[A] = g
                del pending[A]
            elif g >= pending[A]:
                pytest.fail(f"{sorted(A)} not realized up to its bound")
    for A in targets:
        w = min_genus_exact(A)
        _check_witness(w)
        assert w.dold.support == A
        assert w.genus == first_seen[A] <= upper_bound_genus(A).genus


@given(st.dictionaries(st.integers(1, 60), st.integers(-4, 4), max_size=6).map(DoldSequence))
def test_spectrum_support_lies_in_divisor_closure(a):
    allowed = set(divisor_closure(a.support)) | {1}
    assert set(dold_to_spectrum(a)) <= allowed


def test_divisor_closure():
    assert divisor_closure({15}) == [1, 3, 5, 15]
    assert divisor_closure({4, 6}) == [1, 2, 3, 4, 6]
