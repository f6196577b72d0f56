"""Index arithmetic behind the constructions and bigraphic degree sequences."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from kcbg.bigraph import BipartiteGraph
from kcbg.errors import IndexOutOfRange, InvalidOrder, InvalidProfileArgs, NotSorted


def _check_order(n: int, m: int, j: int) -> None:
    if not n > m > 1:
        raise InvalidOrder(f"need n > m > 1, got ({n}, {m})")
    if not 0 <= j < m:
        raise IndexOutOfRange(f"j={j} not in [0, {m})")


def count_solutions(n: int, m: int, j: int) -> int:
    """Number of ``i in [n]`` with ``ceil(i*m/n) = j (mod m)``.

    Closed form ``floor(j*x/y) - floor((j-1)*x/y)`` with ``x/y`` the reduced
    ratio ``n/m``.  For ``j = 0`` the second floor is of a negative number and
    rounds toward minus infinity, which is what makes ``i = 0`` and the
    wrap-around ``ceil = m`` both land in class 0.
    """
    _check_order(n, m, j)
    c = gcd(n, m)
    x, y = n // c, m // c
    return (j * x) // y - ((j - 1) * x) // y


def max_solution_index(n: int, m: int, j: int) -> int:
    """Largest ``i in [n]`` with ``ceil(i*m/n) = j (mod m)``, i.e. ``floor(j*n/m)``."""
    _check_order(n, m, j)
    return (j * n) // m


@dataclass(frozen=True)
class DegreeProfile:
    """Bigraphic pair ``(P, Q)`` with the rotation offsets ``D``.

    ``P`` has ``l`` entries equal to ``ceil(y*b/x)`` followed by entries equal
    to ``floor(y*b/x)``; ``Q`` is constantly ``b``; ``D[i]`` is the running sum
    of ``P[:i]`` reduced mod ``y``.
    """

    x: int
    y: int
    b: int
    l: int
    P: tuple[int, ...]
    Q: tuple[int, ...]
    D: tuple[int, ...]


def degree_profile(x: int, y: int, b: int) -> DegreeProfile:
    if not x > y > 1:
        raise InvalidProfileArgs(f"need x > y > 1, got ({x}, {y})")
    if not 1 <= b <= x:
        raise InvalidProfileArgs(f"need 1 <= b <= x, got b={b}, x={x}")
    lo = (y * b) // x
    hi = -((-y * b) // x)
    l = b * y - x * lo
    P = tuple(hi if i < l else lo for i in range(x))
    D = []
    acc = 0
    for p in P:
        D.append(acc % y)
        acc += p
    return DegreeProfile(x, y, b, l, P, (b,) * y, tuple(D))


def _check_sequence(seq: Sequence[int], name: str) -> None:
    if any(s < 0 for s in seq):
        raise ValueError(f"{name} has a negative entry")
    if any(seq[t] < seq[t + 1] for t in range(len(seq) - 1)):
        raise NotSorted(f"{name} must be non-increasing, got {tuple(seq)}")


def realize_bigraphic(P: Sequence[int], Q: Sequence[int]) -> BipartiteGraph | None:
    """Build a bipartite realization of ``(P, Q)`` or return None.

    Repeatedly removes the largest remaining ``p`` and joins its vertex to the
    ``p`` V-vertices of largest residual degree.  Among equal residuals the
    lowest index is taken first.  Edge indices refer to positions in the
    original sequences.
    """
    P, Q = list(P), list(Q)
    if not P or not Q:
        raise ValueError("degree sequences must be non-empty")
    _check_sequence(P, "P")
    _check_sequence(Q, "Q")
    residual = Q[:]
    edges = []
    for i, p in enumerate(P):
        if p > len(Q):
            return None
        order = sorted(range(len(Q)), key=lambda j: (-residual[j], j))
        for j in order[:p]:
            if residual[j] == 0:
                return None
            residual[j] -= 1
            edges.append((i, j))
    if any(residual):
        return None
    return BipartiteGraph(len(P), len(Q), tuple(edges))


def is_bigraphic(P: Sequence[int], Q: Sequence[int]) -> bool:
    return realize_bigraphic(P, Q) is not None
