from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from ..arith import cube_free_part, factor_smooth_part, is_perfect_cube

K_MIN, K_MAX = 5, 11


def check_ki(k: int, i: int | None = None) -> None:
    if not K_MIN <= k <= K_MAX:
        raise ValueError(f"k must lie in [{K_MIN}, {K_MAX}], got {k}")
    if i is not None and not 0 <= i < k:
        raise ValueError(f"i must lie in [0, {k - 1}], got {i}")


def housed_indices(k: int, i: int) -> tuple[int, ...]:
    return tuple(j for j in range(k) if j != i)


@dataclass(frozen=True, order=True)
class CoefficientVector:
    """Entries ``a_j`` for ``j`` in ``[0, k-1]`` minus ``i``, stored in index order."""

    k: int
    i: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(a) for a in self.entries))
        if len(self.entries) != self.k - 1:
            raise ValueError(f"expected {self.k - 1} entries, got {len(self.entries)}")

    @property
    def indices(self) -> tuple[int, ...]:
        return housed_indices(self.k, self.i)

    def __getitem__(self, j: int) -> int:
        if j == self.i or not 0 <= j < self.k:
            raise IndexError(f"index {j} not housed for (k, i) = ({self.k}, {self.i})")
        return self.entries[j if j < self.i else j - 1]

    def items(self):
        return zip(self.indices, self.entries)

    def mirror(self) -> CoefficientVector:
        """Vector of the flipped solution (k, k-1-i, -n-(k-1)d, d)."""
        return CoefficientVector(self.k, self.k - 1 - self.i, self.entries[::-1])

    def structural_violations(self) -> list[str]:
        """Empty iff the vector meets every structural constraint."""
        problems = []
        for j, a in self.items():
            if a <= 0 or cube_free_part(a) != a:
                problems.append(f"a_{j}={a} is not positive cube-free")
            elif not factor_smooth_part(a, self.k - 1).is_smooth:
                problems.append(f"a_{j}={a} is not {self.k - 1}-smooth")
        items = list(self.items())
        for p, (j, a) in enumerate(items):
            for l, b in items[p + 1 :]:
                if (l - j) % gcd(a, b):
                    problems.append(f"gcd(a_{j}, a_{l}) = {gcd(a, b)} does not divide {l - j}")
        if is_perfect_cube(prod(self.entries)) is None:
            problems.append("product of entries is not a cube")
        return problems

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.entries)) + ")"
