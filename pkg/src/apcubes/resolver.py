"""Turning surviving coefficient vectors into solutions or contradictions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod

from .arith import cube_free_part, factor_smooth_part, is_perfect_cube
from .cubic import Certificate, CertificateKind, TernaryCubic, from_triple, special_equation_solutions
from .enumeration.vector import CoefficientVector, check_ki, housed_indices

# (k, i, n, d) of every solution with 5 <= k <= 11.
KNOWN_SOLUTIONS: tuple[tuple[int, int, int, int], ...] = (
    (5, 0, -14, 5), (5, 0, -11, 5), (5, 1, -8, 3), (5, 3, -4, 3),
    (5, 4, -9, 5), (5, 4, -6, 5), (7, 3, -10, 7), (7, 3, -32, 7),
)

# Full progressions m(m+d)...(m+(k'-1)d) = y^3, 4 <= k' <= 38: trusted table (k', m, d).
FULL_PROGRESSION_RANGE = (4, 38)
FULL_PROGRESSION_SOLUTIONS: tuple[tuple[int, int, int], ...] = ((4, -9, 5), (4, -6, 5))

# x^3 + y^3 = 9 z^3 and 5 x^3 - y^3 = 3 w^3 with x, y coprime: trusted (x, y, z, w).
PAIR_SOLUTIONS: frozenset[tuple[int, int, int, int]] = frozenset({(1, 2, 1, -1), (-1, -2, -1, 1)})


class SolutionError(ValueError):
    pass


class ZeroTermError(SolutionError):
    pass


class CoprimalityError(SolutionError):
    pass


class NotACubeError(SolutionError):
    pass


class PatternMismatch(ValueError):
    """The resolver does not handle this vector or triple."""


@dataclass(frozen=True)
class SolutionRecord:
    k: int
    i: int
    n: int
    d: int
    y: int
    vector: CoefficientVector = field(compare=False)
    term_factorizations: tuple[tuple[int, int, int], ...] = field(compare=False)

    def __post_init__(self) -> None:
        terms = [self.n + j * self.d for j in housed_indices(self.k, self.i)]
        assert self.d >= 1 and self.n * self.y != 0 and gcd(self.n, self.d) == 1
        assert prod(terms) == self.y**3
        for j, a, x in self.term_factorizations:
            assert self.n + j * self.d == a * x**3 and a == cube_free_part(a * x**3)

    @property
    def key(self) -> tuple[int, int, int, int]:
        return (self.k, self.i, self.n, self.d)


def verify_solution(k: int, i: int, n: int, d: int) -> SolutionRecord:
    check_ki(k, i)
    if d < 1:
        raise SolutionError(f"d must be positive, got {d}")
    if gcd(n, d) != 1:
        raise CoprimalityError(f"gcd({n}, {d}) = {gcd(n, d)}")
    idx = housed_indices(k, i)
    terms = [n + j * d for j in idx]
    if n == 0 or 0 in terms:
        raise ZeroTermError(f"zero term in ({k}, {i}, {n}, {d})")
    y = is_perfect_cube(prod(terms))
    if y is None:
        raise NotACubeError(f"product for ({k}, {i}, {n}, {d}) is not a cube")
    facts = []
    for j, t in zip(idx, terms):
        a = cube_free_part(t)
        x = is_perfect_cube(t // a)
        facts.append((j, a, x))
    vector = CoefficientVector(k, i, tuple(a for _, a, _ in facts))
    for j, a, _ in facts:
        if not factor_smooth_part(a, k - 1).is_smooth:
            raise SolutionError(f"a_{j} = {a} is not {k - 1}-smooth")
    return SolutionRecord(k, i, n, d, y, vector, tuple(facts))


def coefficient_vector_of(k: int, i: int, n: int, d: int) -> CoefficientVector:
    check_ki(k, i)
    if d < 1 or gcd(n, d) != 1:
        raise SolutionError(f"need d >= 1 and gcd(n, d) = 1, got n={n}, d={d}")
    entries = []
    for j in housed_indices(k, i):
        t = n + j * d
        if t == 0:
            raise ZeroTermError(f"term {j} vanishes")
        a = cube_free_part(t)
        if not factor_smooth_part(a, k - 1).is_smooth:
            raise SolutionError(f"a_{j} = {a} is not {k - 1}-smooth; not a solution")
        entries.append(a)
    return CoefficientVector(k, i, tuple(entries))


def flip(k: int, i: int, n: int, d: int) -> tuple[int, int, int, int]:
    return (k, k - 1 - i, -n - (k - 1) * d, d)


def involute(s: SolutionRecord) -> SolutionRecord:
    """The mirror solution. ``y`` is recomputed so the product is literally y^3."""
    return verify_solution(*flip(s.k, s.i, s.n, s.d))


@dataclass
class Resolution:
    solutions: list[SolutionRecord]
    certificate: Certificate
    rejected: list[dict] = field(default_factory=list)


def _solve_nd(r: int, tr: int, s: int, ts: int) -> tuple[int, int] | None:
    """(n, d) from n + r d = tr, n + s d = ts, if integral."""
    num = ts - tr
    if num % (s - r):
        return None
    d = num // (s - r)
    return tr - r * d, d


def _accept(k, i, n, d, vector, rejected, branch) -> SolutionRecord | None:
    if d < 1:
        rejected.append({**branch, "n": n, "d": d, "reason": "d < 1"})
        return None
    try:
        rec = verify_solution(k, i, n, d)
    except SolutionError as exc:
        rejected.append({**branch, "n": n, "d": d, "reason": str(exc)})
        return None
    if rec.vector != vector:
        rejected.append({**branch, "n": n, "d": d, "reason": f"vector {rec.vector} differs"})
        return None
    return rec


def resolve_edge(k: int, i: int) -> Resolution:
    """i = 0 or k-1: the k-1 remaining terms form a full progression."""
    check_ki(k, i)
    if i not in (0, k - 1):
        raise PatternMismatch(f"i = {i} is not an edge index for k = {k}")
    length = k - 1
    assert FULL_PROGRESSION_RANGE[0] <= length <= FULL_PROGRESSION_RANGE[1]
    sols = []
    for kk, m, d in FULL_PROGRESSION_SOLUTIONS:
        if kk != length:
            continue
        # i = 0: the terms start at m = n + d; i = k-1: they start at n.
        n = m - d if i == 0 else m
        sols.append(verify_solution(k, i, n, d))
    cert = Certificate(
        CertificateKind.EDGE_CASE_HTT,
        {"length": length, "solutions": [[s.n, s.d] for s in sols], "trusted": True},
    )
    return Resolution(sorted(sols, key=lambda s: s.key), cert)


def _two_adic_reduce(form: TernaryCubic) -> tuple[int, TernaryCubic]:
    """Substitute x = 2 x' in the one variable forced even; return (position, reduced form)."""
    coefs = list(form.normalized().coefficients)
    odd = [q for q, c in enumerate(coefs) if c % 2]
    if len(odd) != 1 or any(coefs[q] % 4 for q in range(3) if q != odd[0]):
        raise PatternMismatch(f"no forced even variable in {coefs}")
    q = odd[0]
    coefs[q] *= 8
    return q, TernaryCubic(*coefs).normalized()


def resolve_two_adic_descent(v: CoefficientVector, triple: tuple[int, int, int] = (0, 2, 4)) -> Resolution:
    """Reduce the triple's cubic to +-X^3 +- Y^3 +- 2 Z^3 = 0 and lift its solutions."""
    form = from_triple(v, triple)
    q, reduced = _two_adic_reduce(form)
    coefs = reduced.coefficients
    if sorted(map(abs, coefs)) != [1, 1, 2]:
        raise PatternMismatch(f"reduced form {coefs} is not of type x^3 + y^3 + 2 z^3")
    zq = [p for p in range(3) if abs(coefs[p]) == 2][0]
    xq, yq = [p for p in range(3) if p != zq]
    k, i = v.k, v.i
    sols, rejected = [], []
    for X, Y, Z in sorted(special_equation_solutions()):
        u = [0, 0, 0]
        # coef * u^3 = (sign(coef) u)^3 * |coef| for odd powers
        for p, val in ((xq, X), (yq, Y), (zq, Z)):
            u[p] = val if coefs[p] > 0 else -val
        xs = list(u)
        xs[q] *= 2
        r, s, t = triple
        nd = _solve_nd(r, v[r] * xs[0] ** 3, s, v[s] * xs[1] ** 3)
        branch = {"x": xs, "eps": X}
        if nd is None:
            rejected.append({**branch, "reason": "d not integral"})
            continue
        n, d = nd
        if n + t * d != v[t] * xs[2] ** 3:
            rejected.append({**branch, "n": n, "d": d, "reason": "third term mismatch"})
            continue
        rec = _accept(k, i, n, d, v, rejected, branch)
        if rec:
            sols.append(rec)
    cert = Certificate(
        CertificateKind.SPECIAL_EQUATION,
        {
            "triple": list(triple),
            "halved": triple[q],
            "reduced_form": list(coefs),
            "solutions": [[s.n, s.d] for s in sols],
            "trusted": True,
        },
    )
    return Resolution(sols, cert, rejected)


K7_I3_VECTOR = (10, 3, 4, 18, 25, 4)


def resolve_k7_i3(v: CoefficientVector) -> Resolution:
    if (v.k, v.i) != (7, 3) or v.entries not in (K7_I3_VECTOR, K7_I3_VECTOR[::-1]):
        raise PatternMismatch(f"unexpected vector {v} for (7, 3)")
    if v.entries != K7_I3_VECTOR:
        res = resolve_k7_i3(v.mirror())
        sols = sorted((involute(s) for s in res.solutions), key=lambda s: s.key)
        cert = Certificate(res.certificate.kind, {**res.certificate.witness, "mirrored": True,
                                                  "solutions": [[s.n, s.d] for s in sols]})
        return Resolution(sols, cert, res.rejected)
    first = from_triple(v, (2, 6, 4)).normalized()
    second = from_triple(v, (2, 6, 1)).normalized()
    # x = x_2, y = x_6, z = x_4, w = x_1
    assert first.coefficients == (1, 1, -9), first
    assert second.coefficients == (5, -1, -3), second
    sols, rejected = [], []
    for x, y, z, w in sorted(PAIR_SOLUTIONS):
        branch = {"x2": x, "x6": y, "x4": z, "x1": w}
        nd = _solve_nd(2, v[2] * x**3, 6, v[6] * y**3)
        if nd is None:
            rejected.append({**branch, "reason": "d not integral"})
            continue
        rec = _accept(7, 3, *nd, v, rejected, branch)
        if rec:
            sols.append(rec)
    cert = Certificate(
        CertificateKind.PAIR_OF_CUBICS,
        {"triples": [[2, 6, 4], [2, 6, 1]], "solutions": [[s.n, s.d] for s in sols], "trusted": True},
    )
    return Resolution(sols, cert, rejected)


def theorem_table() -> list[SolutionRecord]:
    return [verify_solution(*t) for t in KNOWN_SOLUTIONS]


SEXTIC_SHIFTS = (1, 2, 3, 5, 6, 7)


def corollary_points(height: int) -> list[tuple[Fraction, Fraction]]:
    """Rational points of y^3 = (x+1)(x+2)(x+3)(x+5)(x+6)(x+7) with x = a/b, |a|, b <= height.

    Writing y = t/u forces u = b^2, so y = t / b^2 with t^3 = prod(a + c b).
    """
    if height < 1:
        raise ValueError("height must be positive")
    points = []
    for b in range(1, height + 1):
        for a in range(-height, height + 1):
            if gcd(a, b) != 1:
                continue
            t = is_perfect_cube(prod(a + c * b for c in SEXTIC_SHIFTS))
            if t is not None:
                points.append((Fraction(a, b), Fraction(t, b * b)))
    return sorted(points)
