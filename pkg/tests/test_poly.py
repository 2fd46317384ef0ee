from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bgpoly.limits import InputError
from bgpoly.poly import (
    IntPolynomial, count_roots, gamma_extract, gamma_substitute, interlaces, is_log_concave,
    is_palindromic, is_real_rooted, is_unimodal, isolate_real_roots, real_root_certificate,
    squarefree_decomposition, squarefree_part, sturm_sequence,
)

W_37 = (1, 32, 336, 1420, 2534, 1946, 658, 86, 3)
H_37 = (1, 145, 7432, 174888, 2128332, 14547884, 59233240, 148792184, 234916470,
        234916470, 148792184, 59233240, 14547884, 2128332, 174888, 7432, 145, 1)

small_coeffs = st.lists(st.integers(-20, 20), min_size=1, max_size=7)


def from_roots(roots):
    f = IntPolynomial([1])
    for r in roots:
        f = f * IntPolynomial([-r, 1])
    return f


def test_arithmetic_basics():
    f = IntPolynomial([1, 2, 0, 0])
    assert f.coeffs == (1, 2) and f.degree == 1
    assert IntPolynomial().degree == -1 and IntPolynomial().is_zero()
    assert (f * f).coeffs == (1, 4, 4)
    assert (f - f).is_zero()
    assert f(3) == 7
    assert IntPolynomial.binomial_power(3) == [1, 3, 3, 1]
    assert f.reversed() == [2, 1]
    assert IntPolynomial([2, 4, 6]).content() == 2


def test_gamma_substitute_reference_example():
    assert gamma_substitute(W_37, 17).coeffs == H_37


def test_gamma_extract_inverts():
    gv = gamma_extract(H_37, 17)
    assert gv.gammas == tuple(4**k * c for k, c in enumerate(W_37))
    assert gv.reconstruct() == H_37
    assert gv.is_positive()


def test_gamma_preconditions():
    with pytest.raises(InputError):
        gamma_substitute([1, 1, 1], 3)
    with pytest.raises(InputError):
        gamma_extract([1, 2], 1)
    with pytest.raises(InputError):
        is_palindromic([1, 2, 1], 1)


def test_shape_predicates():
    assert is_palindromic([1, 6, 1], 2) and not is_palindromic([1, 6, 1], 3)
    assert is_palindromic([0, 1, 0], 2)
    assert is_unimodal([1, 3, 3, 2]) and not is_unimodal([1, 0, 1])
    assert is_log_concave([1, 2, 1]) and not is_log_concave([1, 1, 3])


def test_root_structure_of_reference_polynomials():
    cw = real_root_certificate(W_37)
    assert not cw.is_real_rooted and cw.distinct_real_roots == 6 and cw.squarefree_degree == 8
    assert not is_real_rooted(H_37)


def test_repeated_roots_counted_once():
    c = real_root_certificate(IntPolynomial.binomial_power(5))
    assert c.distinct_real_roots == 1 and c.squarefree_degree == 1 and c.is_real_rooted
    assert not is_real_rooted([1, 0, 1])
    assert is_real_rooted([5])


def test_isolation_brackets_known_roots():
    f = from_roots([-3, -1, 0, 2, 2])
    ivs = isolate_real_roots(f)
    assert len(ivs) == 4
    for (lo, hi), r in zip(ivs, [-3, -1, 0, 2]):
        assert lo < r <= hi


def test_sturm_counts_on_half_open_interval():
    seq = sturm_sequence(from_roots([1, 2]))
    assert count_roots(seq, 1, 2) == 1
    assert count_roots(seq, 0, 2) == 2
    assert count_roots(seq, Fraction(3, 2), "inf") == 1


def test_squarefree_decomposition_multiplicities():
    f = from_roots([1, 1, 1, -2, -2, 5])
    parts = squarefree_decomposition(f)
    assert [p.degree for p in parts] == [1, 1, 1]
    assert squarefree_part(f).degree == 3


def test_interlacing():
    assert interlaces([1, 6, 1], [1, 11, 11, 1])
    assert interlaces([1, 1], [1, 2, 1])
    # equal degrees: the largest root belongs to f
    assert interlaces(from_roots([-3, -1]), from_roots([-4, -2]))
    assert not interlaces(from_roots([-4, -2]), from_roots([-3, -1]))
    assert interlaces(from_roots([-2, -2]), from_roots([-2, -2]))
    assert not interlaces(from_roots([-1, -2]), from_roots([-10, -9, -8]))
    with pytest.raises(InputError):
        interlaces([1, 0, 1], [1, 1])
    with pytest.raises(InputError):
        interlaces([1, 1], [1, 3, 3, 1])


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6))
def test_real_rooted_products_certified(roots):
    f = from_roots(roots)
    c = real_root_certificate(f)
    assert c.is_real_rooted
    assert c.distinct_real_roots == len(set(roots))


@settings(max_examples=60, deadline=None)
@given(small_coeffs, st.integers(0, 4))
def test_gamma_roundtrip(g, extra):
    g = IntPolynomial(g)
    d = 2 * max(g.degree, 0) + extra
    f = gamma_substitute(g, d)
    assert is_palindromic(f, d)
    if not g.is_zero():
        assert list(gamma_extract(f, d).polynomial().coeffs) == [4**k * c for k, c in enumerate(g.coeffs)]


@settings(max_examples=40, deadline=None)
@given(small_coeffs)
def test_root_count_bounded_and_stable(cs):
    f = IntPolynomial(cs)
    if f.is_zero():
        return
    c = real_root_certificate(f)
    assert c.distinct_real_roots <= c.squarefree_degree <= max(f.degree, 0)
    assert real_root_certificate(f * IntPolynomial([3])).distinct_real_roots == c.distinct_real_roots
    assert real_root_certificate(f * f).distinct_real_roots == c.distinct_real_roots
