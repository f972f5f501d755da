import pytest
from hypothesis import given, settings, strategies as st

from apcubes.enumeration.tables import admissible_entries
from apcubes.enumeration.vector import CoefficientVector
from apcubes.resolver import KNOWN_SOLUTIONS, coefficient_vector_of
from apcubes.sieve import DEFAULT_MODULI, filter_sieve, sieve, sieve_brute, surviving_pairs


@pytest.mark.parametrize(
    "k, i, entries, m",
    [(5, 1, (6, 1, 9, 4), 8), (5, 3, (4, 9, 1, 6), 8), (6, 1, (50, 36, 1, 1, 15), 16), (6, 4, (15, 1, 1, 36, 50), 16)],
)
def test_known_infeasible(k, i, entries, m):
    v = CoefficientVector(k, i, entries)
    rep = sieve(v, m)
    assert not rep.feasible and rep.surviving_residue_pairs == 0
    assert sieve_brute(v, m) == 0
    assert filter_sieve(v) is not None


@pytest.mark.parametrize("sol", KNOWN_SOLUTIONS)
def test_solutions_pass_every_default_modulus(sol):
    v = coefficient_vector_of(*sol)
    for m in DEFAULT_MODULI:
        assert sieve(v, m).feasible
    assert filter_sieve(v) is None


def test_k7_pair_feasible():
    v = CoefficientVector(7, 3, (10, 3, 4, 18, 25, 4))
    assert all(sieve(v, m).feasible for m in DEFAULT_MODULI)


def test_modulus_must_be_at_least_two():
    with pytest.raises(ValueError):
        sieve(CoefficientVector(5, 1, (1, 1, 1, 1)), 1)


vectors = st.integers(5, 8).flatmap(
    lambda k: st.builds(
        CoefficientVector,
        st.just(k),
        st.integers(0, k - 1),
        st.lists(st.sampled_from(admissible_entries(k)), min_size=k - 1, max_size=k - 1).map(tuple),
    )
)


@settings(max_examples=40, deadline=None)
@given(vectors, st.sampled_from([2, 3, 4, 8, 9, 12, 16, 27]))
def test_vectorised_matches_loop(v, m):
    assert sieve(v, m).surviving_residue_pairs == sieve_brute(v, m)


@settings(max_examples=40, deadline=None)
@given(vectors, st.sampled_from([(16, 8), (16, 4), (27, 9), (72, 8), (72, 9), (63, 7), (63, 9)]))
def test_monotone_projection(v, mm):
    m, m2 = mm
    big, small = surviving_pairs(v, m), surviving_pairs(v, m2)
    for n, d in zip(*big.nonzero()):
        assert small[n % m2, d % m2]
    if not small.any():
        assert not big.any()
