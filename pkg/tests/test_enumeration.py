from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from apcubes.arith import cube_free_part, factor_smooth_part
from apcubes.enumeration.filters import (
    bennett_form,
    filter_bennett,
    filter_rank_zero,
    filter_three_ones,
)
from apcubes.enumeration.kernel import KERNELS, get_kernel
from apcubes.enumeration.search import (
    PartialVector,
    close_final_entry,
    enumerate_vectors,
    extend,
)
from apcubes.enumeration.tables import admissible_entries
from apcubes.enumeration.vector import CoefficientVector, check_ki
from apcubes.resolver import KNOWN_SOLUTIONS, coefficient_vector_of


def naive_vectors(k, i):
    """Every tuple over the admissible alphabet that passes the structural check."""
    alphabet = admissible_entries(k)
    out = []
    for entries in product(alphabet, repeat=k - 1):
        v = CoefficientVector(k, i, entries)
        if not v.structural_violations():
            out.append(v)
    return out


def prefix_tree(k, i):
    """Vectors and per-depth node counts by repeated ``extend``."""
    alphabet = admissible_entries(k)
    level = [PartialVector(k, i)]
    depth = []
    for _ in range(k - 2):
        level = [q for p in level for a in alphabet if (q := extend(p, a)) is not None]
        depth.append(len(level))
    complete = [v for p in level if (v := close_final_entry(p)) is not None]
    return sorted(complete), depth


def test_alphabet():
    assert admissible_entries(5) == (1, 2, 3, 4, 6, 9, 12, 18, 36)
    for k in range(5, 12):
        vals = admissible_entries(k)
        assert all(cube_free_part(a) == a and factor_smooth_part(a, k - 1).is_smooth for a in vals)
    assert len(admissible_entries(11)) == 81


@pytest.mark.parametrize("i", range(5))
def test_k5_matches_naive_product(i):
    got = list(enumerate_vectors(5, i))
    assert got == sorted(naive_vectors(5, i))


@pytest.mark.parametrize("k, i", [(6, 0), (6, 2), (7, 3)])
def test_matches_prefix_tree(k, i):
    enum = enumerate_vectors(k, i)
    vectors, depth = prefix_tree(k, i)
    assert list(enum) == vectors
    assert enum.stats().depth_counts == tuple(depth)
    assert enum.stats().incomplete_nodes == sum(depth)


def test_all_emitted_vectors_are_structural():
    enum = enumerate_vectors(8, 3)
    assert all(not v.structural_violations() for v in enum)
    rows = [tuple(r) for r in enum.rows.tolist()]
    assert rows == sorted(rows) and len(set(rows)) == len(rows)


@pytest.mark.parametrize("k, i", [(5, 1), (6, 0), (7, 3), (8, 2)])
def test_kernel_parity(k, i):
    if "cython" not in KERNELS:
        pytest.skip("compiled kernel not built")
    a = enumerate_vectors(k, i, kernel="python")
    b = enumerate_vectors(k, i, kernel="cython")
    assert np.array_equal(a.rows, b.rows)
    assert np.array_equal(a.depth_counts, b.depth_counts)
    assert np.array_equal(a.rank_zero_triples(), b.rank_zero_triples())


def test_threads_do_not_change_output():
    one = enumerate_vectors(7, 2, threads=1)
    many = enumerate_vectors(7, 2, threads=3)
    assert np.array_equal(one.rows, many.rows)
    assert one.stats() == many.stats()


@pytest.mark.parametrize("k", [5, 6, 7])
def test_mirror_symmetry(k):
    for i in range(k):
        here = {v.mirror() for v in enumerate_vectors(k, i)}
        there = set(enumerate_vectors(k, k - 1 - i))
        assert here == there


def test_solution_vectors_are_enumerated():
    for k, i, n, d in KNOWN_SOLUTIONS:
        v = coefficient_vector_of(k, i, n, d)
        assert v in set(enumerate_vectors(k, i))


@pytest.mark.parametrize("k, i", [(5, 1), (5, 2), (6, 1), (7, 3), (8, 4)])
def test_kernel_certificate_is_lexicographic_first(k, i):
    enum = enumerate_vectors(k, i)
    rz = enum.rank_zero_triples()
    for r, v in enumerate(enum):
        cert = filter_rank_zero(v)
        if rz[r] < 0:
            assert cert is None
        else:
            assert cert is not None and tuple(cert.witness["triple"]) == enum.triple(int(rz[r]))


def test_rank_zero_never_hits_a_solution():
    for k, i, n, d in KNOWN_SOLUTIONS:
        assert filter_rank_zero(coefficient_vector_of(k, i, n, d)) is None


def test_rank_zero_example():
    cert = filter_rank_zero(CoefficientVector(5, 1, (1, 4, 1, 2)))
    assert cert.witness == {"triple": [0, 2, 3], "form": [-1, 12, -2], "D": 3}


def test_three_ones_and_bennett():
    assert filter_three_ones(CoefficientVector(6, 4, (1, 1, 1, 2, 3))).witness == {"j": 0}
    assert filter_three_ones(CoefficientVector(5, 1, (1, 1, 1, 1))).witness == {"j": 2}
    assert filter_three_ones(CoefficientVector(5, 2, (1, 1, 1, 1))) is None  # indices 0,1,3,4
    v = CoefficientVector(5, 2, (1, 36, 2, 3))
    assert bennett_form(v, 0).coefficients == (36**2 * 3, -1 * 2**2, -4)
    assert filter_bennett(v) is not None
    assert filter_bennett(CoefficientVector(5, 1, (1, 2, 1, 4))) is None


def test_bad_parameters():
    with pytest.raises(ValueError):
        check_ki(12, 0)
    with pytest.raises(ValueError):
        enumerate_vectors(5, 5)
    with pytest.raises(ValueError):
        get_kernel("fortran")
    with pytest.raises(ValueError):
        extend(PartialVector(5, 1), 5)


@settings(max_examples=60, deadline=None)
@given(st.integers(5, 11).flatmap(lambda k: st.tuples(st.just(k), st.integers(0, k - 1),
       st.lists(st.sampled_from(admissible_entries(k)), min_size=k - 1, max_size=k - 1))))
def test_structural_check_agrees_with_definition(args):
    k, i, entries = args
    v = CoefficientVector(k, i, entries)
    ok = all((l - j) % np.gcd(a, b) == 0 for (j, a), (l, b) in combinations(list(v.items()), 2))
    cube = cube_free_part(int(np.prod([int(a) for a in entries], dtype=object))) == 1
    assert (not v.structural_violations()) == (ok and cube)


@settings(max_examples=40, deadline=None)
@given(st.integers(5, 11).flatmap(lambda k: st.tuples(st.just(k), st.integers(0, k - 1),
       st.lists(st.sampled_from(admissible_entries(k)), min_size=k - 1, max_size=k - 1))))
def test_mirror_preserves_structure_and_certificates(args):
    k, i, entries = args
    v = CoefficientVector(k, i, entries)
    w = v.mirror()
    assert w.mirror() == v
    assert bool(v.structural_violations()) == bool(w.structural_violations())
    assert (filter_rank_zero(v) is None) == (filter_rank_zero(w) is None)


def test_env_var_forces_pure_python_fallback():
    import subprocess
    import sys

    code = "from apcubes.enumeration.kernel import default_kernel_name; print(default_kernel_name())"
    out = subprocess.run([sys.executable, "-c", code], env={"APCUBES_PURE_PYTHON": "1", "PATH": ""},
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
