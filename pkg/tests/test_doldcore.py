from fractions import Fraction
from math import lcm

import pytest
from hypothesis import given, settings, strategies as st

from doldcalc.doldcore import (
    DoldSequence,
    HorizonError,
    LefschetzView,
    PeriodBound,
    RootSpectrum,
    StructuralError,
    algebraic_periods,
    check_dold_congruences,
    dold_coefficients,
    dold_to_spectrum,
    evaluate_expansion,
    genus_of,
    horizon,
    is_realizable,
    lefschetz_of,
    periodic_point_bounds,
    spectrum_to_dold,
)
from doldcalc.numtheory import totient

S = RootSpectrum.from_multiset
D = DoldSequence.from_dense

sparse_dold = st.dictionaries(st.integers(1, 30), st.integers(-5, 5), max_size=8).map(DoldSequence)
sparse_spectrum = st.dictionaries(st.integers(1, 30), st.integers(-5, 5), max_size=8).map(
    RootSpectrum
)
realizable_spectrum = (
    st.dictionaries(st.integers(1, 24), st.integers(0, 3), max_size=5)
    .map(lambda d: RootSpectrum({k: (2 * v if k <= 2 else v) for k, v in d.items()}))
    .filter(lambda r: r.period <= 360)
)


def test_sparse_sequences_drop_zeros():
    a = DoldSequence({1: 0, 3: 2, 5: 0})
    assert dict(a) == {3: 2}
    assert a[1] == 0 and a.horizon == 3
    assert a.to_dense() == (0, 0, 2)
    assert D((0, 0, 2)) == a
    with pytest.raises(ValueError):
        DoldSequence({0: 1})


def test_dold_coefficients_examples():
    assert dold_coefficients([0, 0, 0, 0]) == [0, 0, 0, 0]
    assert dold_coefficients([4, 0, 4, 0]) == [4, -2, 0, 0]
    assert dold_coefficients([1, 2, 1, 2]) == [1, Fraction(1, 2), 0, 0]
    with pytest.raises(ValueError):
        dold_coefficients([])


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=30))
def test_dold_coefficients_invert_the_expansion(psi):
    a = dold_coefficients(psi)
    for n in range(1, len(psi) + 1):
        assert sum(d * a[d - 1] for d in range(1, n + 1) if n % d == 0) == psi[n - 1]


def test_evaluate_expansion_examples():
    assert all(evaluate_expansion({}, n) == 0 for n in range(1, 10))
    assert evaluate_expansion({1: 3, 3: -1}, 3) == 0
    assert evaluate_expansion({1: 4, 2: -2}, 2) == 0
    assert evaluate_expansion({1: 3, 3: -1}, 3) == lefschetz_of(S([3]), 3)


def test_check_dold_congruences_examples():
    assert check_dold_congruences([0] * 10)
    assert not check_dold_congruences([1, 2])
    assert check_dold_congruences([4, 0, 4, 0])


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=24))
def test_congruences_iff_integral_coefficients(psi):
    integral = all(x.denominator == 1 for x in dold_coefficients(psi))
    assert check_dold_congruences(psi) == integral


def test_spectrum_to_dold_examples():
    assert spectrum_to_dold(S([3, 4])).to_dense() == (3, 1, -1, -1)
    assert spectrum_to_dold(S([12])).to_dense() == (2, -1, 0, 1, 0, 1, 0, 0, 0, 0, 0, -1)
    assert spectrum_to_dold(RootSpectrum()) == DoldSequence({1: 2})


def test_dold_to_spectrum_examples():
    assert dold_to_spectrum(D((1, 2, 1, -1, 0, -1))) == RootSpectrum({4: 1, 6: 1})
    assert dold_to_spectrum(DoldSequence()) == RootSpectrum({1: 2})
    assert dold_to_spectrum({15: -2}) == RootSpectrum({1: 4, 3: 2, 5: 2, 15: 2})


@settings(max_examples=300)
@given(sparse_dold)
def test_round_trip_from_dold(a):
    assert spectrum_to_dold(dold_to_spectrum(a)) == a


@settings(max_examples=300)
@given(sparse_spectrum)
def test_round_trip_from_spectrum(r):
    assert dold_to_spectrum(spectrum_to_dold(r)) == r


def test_is_realizable_examples():
    assert is_realizable({1: 2}) == (True, [])
    ok, diag = is_realizable({1: 1})
    assert not ok and diag == ["r_1 = 1 odd"]
    assert is_realizable({1: -2})[0]
    assert genus_of(dold_to_spectrum({1: -2})) == 2


def test_is_realizable_names_negative_entries():
    ok, diag = is_realizable({1: 3})
    assert not ok and "r_1 = -1 negative" in diag and "r_1 = -1 odd" in diag


def test_genus_examples():
    assert genus_of(S([4, 6])) == 2
    assert genus_of(S([1, 1])) == 1
    assert genus_of(S([1, 1, 1, 1, 3, 3, 5, 5, 15, 15])) == 16


def test_genus_errors():
    with pytest.raises(ValueError):
        genus_of(RootSpectrum({1: -2}))
    with pytest.raises(StructuralError):
        genus_of(RootSpectrum({1: 1}))


@given(st.dictionaries(st.integers(1, 40), st.integers(0, 4), max_size=6).map(RootSpectrum))
def test_genus_consistency(r):
    a = spectrum_to_dold(r)
    assert sum(v * totient(k) for k, v in r.items()) == 2 - sum(n * v for n, v in a.items())


def test_lefschetz_examples():
    assert all(lefschetz_of(S([1, 1]), n) == 0 for n in range(1, 13))
    assert lefschetz_of(S([2, 2]), 1) == 4
    assert all(lefschetz_of(RootSpectrum(), n) == 2 for n in range(1, 13))


@given(realizable_spectrum)
def test_lefschetz_view_is_periodic(r):
    view = LefschetzView(r)
    p = view.period
    assert p == horizon(r)
    vals = view.values(2 * p)
    assert vals[:p] == vals[p:]


@settings(max_examples=200)
@given(realizable_spectrum)
def test_expansion_matches_lefschetz(r):
    a = spectrum_to_dold(r)
    for n in range(1, horizon(r) + 1):
        assert evaluate_expansion(a, n) == lefschetz_of(r, n)


@settings(max_examples=200)
@given(realizable_spectrum)
def test_lefschetz_sequences_satisfy_congruences(r):
    h = horizon(r)
    seq = [lefschetz_of(r, n) for n in range(1, 2 * h + 1)]
    assert check_dold_congruences(seq)
    coeffs = dold_coefficients(seq)
    assert DoldSequence((i + 1, int(c)) for i, c in enumerate(coeffs)) == spectrum_to_dold(r)


@given(realizable_spectrum)
def test_top_coefficient_is_minus_top_multiplicity(r):
    K = max(r, default=1)
    if K >= 2:
        assert spectrum_to_dold(r)[K] == -r[K]


nonpositive_even = st.dictionaries(st.integers(1, 30), st.integers(-6, -1), max_size=8).filter(
    lambda d: sum(d.values()) % 2 == 0 and sum(v for n, v in d.items() if n % 2 == 0) % 2 == 0
)


@settings(max_examples=300)
@given(nonpositive_even)
def test_nonpositive_even_sequences_are_realizable(a):
    assert is_realizable(a)[0]


def test_horizon_cap():
    assert horizon(S([4, 6])) == 12
    assert horizon(RootSpectrum()) == 1
    with pytest.raises(HorizonError):
        horizon(S([7, 11, 13]), cap=100)


def test_algebraic_periods_examples():
    a = spectrum_to_dold(S([1, 1, 6]))
    assert algebraic_periods(a) == {1, 2, 3, 6}
    assert algebraic_periods(a, odd_only=True) == {1, 3}
    assert algebraic_periods(DoldSequence()) == frozenset()
    b = spectrum_to_dold(S([6, 6]))
    assert algebraic_periods(b) == {2, 3, 6}
    assert algebraic_periods(b, odd_only=True) == {3}


def test_periodic_point_bounds_examples():
    assert periodic_point_bounds({15: -2}) == [PeriodBound(15, "odd-exact", 2)]
    assert periodic_point_bounds({}) == []
    assert periodic_point_bounds({2: -2, 1: 2}) == [
        PeriodBound(1, "odd-exact", 2),
        PeriodBound(2, "even-pair", 2),
    ]


@given(sparse_dold)
def test_bounds_report_one_record_per_support_element(a):
    report = periodic_point_bounds(a)
    assert [b.n for b in report] == sorted(a)
    assert all(b.bound == abs(a[b.n]) for b in report)


def test_spectrum_multiset_view():
    r = S([3, 1, 1, 6])
    assert r.multiset() == (1, 1, 3, 6)
    assert r.period == lcm(1, 3, 6)
    with pytest.raises(ValueError):
        RootSpectrum({1: -2}).multiset()
