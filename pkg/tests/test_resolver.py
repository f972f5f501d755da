from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from apcubes.cubic import CertificateKind
from apcubes.enumeration.vector import CoefficientVector
from apcubes.resolver import (
    KNOWN_SOLUTIONS,
    CoprimalityError,
    NotACubeError,
    PatternMismatch,
    SolutionError,
    ZeroTermError,
    coefficient_vector_of,
    corollary_points,
    flip,
    involute,
    resolve_edge,
    resolve_k7_i3,
    resolve_two_adic_descent,
    theorem_table,
    verify_solution,
)

EXPECTED_Y = {
    (5, 0, -14, 5): 6, (5, 0, -11, 5): 6, (5, 1, -8, 3): 4, (5, 3, -4, 3): 4,
    (5, 4, -9, 5): 6, (5, 4, -6, 5): 6, (7, 3, -10, 7): 120, (7, 3, -32, 7): 120,
}


def test_table_cube_roots():
    for rec in theorem_table():
        assert rec.y == EXPECTED_Y[rec.key]
        assert EXPECTED_Y[rec.key] ** 3 == abs(rec.y) ** 3


def test_y_sign_is_real_cube_root():
    # (-8)(-2)(1)(4) = 64 and y = 4
    assert verify_solution(5, 1, -8, 3).y == 4


def test_errors():
    with pytest.raises(ZeroTermError):
        verify_solution(5, 1, -2, 1)
    with pytest.raises(CoprimalityError):
        verify_solution(5, 1, -8, 4)
    with pytest.raises(NotACubeError):
        verify_solution(5, 1, 1, 1)
    with pytest.raises(SolutionError):
        verify_solution(5, 1, -8, 0)


def test_flip_is_an_involution_on_solutions():
    keys = set(KNOWN_SOLUTIONS)
    for key in KNOWN_SOLUTIONS:
        assert flip(*key) in keys
        assert flip(*flip(*key)) == key
        rec = verify_solution(*key)
        assert involute(rec).vector == rec.vector.mirror()


@given(st.integers(5, 11).flatmap(lambda k: st.tuples(st.just(k), st.integers(0, k - 1))),
       st.integers(-10**6, 10**6), st.integers(1, 10**4))
def test_flip_property(ki, n, d):
    k, i = ki
    assert flip(*flip(k, i, n, d)) == (k, i, n, d)
    k2, i2, n2, d2 = flip(k, i, n, d)
    # the housed terms are negated and reversed
    terms = [n + j * d for j in range(k) if j != i]
    mirrored = [n2 + j * d2 for j in range(k) if j != i2]
    assert mirrored == [-t for t in reversed(terms)]


def test_edge_cases():
    for k in range(5, 12):
        for i in (0, k - 1):
            res = resolve_edge(k, i)
            assert res.certificate.kind is CertificateKind.EDGE_CASE_HTT and res.certificate.trusted
            want = sorted(t for t in KNOWN_SOLUTIONS if t[:2] == (k, i))
            assert [s.key for s in res.solutions] == want
    with pytest.raises(PatternMismatch):
        resolve_edge(5, 2)


def test_two_adic_descent():
    res = resolve_two_adic_descent(CoefficientVector(5, 1, (1, 2, 1, 4)))
    assert [s.key for s in res.solutions] == [(5, 1, -8, 3)]
    assert all(r["d"] < 1 or "reason" in r for r in res.rejected)
    res = resolve_two_adic_descent(CoefficientVector(5, 3, (4, 1, 2, 1)))
    assert [s.key for s in res.solutions] == [(5, 3, -4, 3)]
    assert res.certificate.kind is CertificateKind.SPECIAL_EQUATION


def test_k7_pair():
    a = resolve_k7_i3(CoefficientVector(7, 3, (10, 3, 4, 18, 25, 4)))
    b = resolve_k7_i3(CoefficientVector(7, 3, (4, 25, 18, 4, 3, 10)))
    assert [s.key for s in a.solutions] == [(7, 3, -10, 7)]
    assert [s.key for s in b.solutions] == [(7, 3, -32, 7)]
    assert a.certificate.kind is CertificateKind.PAIR_OF_CUBICS
    with pytest.raises(PatternMismatch):
        resolve_k7_i3(CoefficientVector(7, 3, (1,) * 6))


def test_coefficient_vector_of():
    assert coefficient_vector_of(7, 3, -10, 7).entries == (10, 3, 4, 18, 25, 4)
    with pytest.raises(SolutionError):
        coefficient_vector_of(5, 1, 7, 1)  # 11 is not 4-smooth


def test_corollary_points_small():
    pts = corollary_points(50)
    trivial = {(Fraction(-c), Fraction(0)) for c in (1, 2, 3, 5, 6, 7)}
    assert set(pts) == trivial | {(Fraction(-17, 7), Fraction(120, 49)), (Fraction(-39, 7), Fraction(120, 49))}
