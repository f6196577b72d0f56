"""Generators for the positive, negative and baseline graph families.

All index arithmetic is 0-based and every ``mod`` result is normalised into
``[0, size)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Callable

from kcbg.bigraph import BipartiteGraph, complete_bipartite
from kcbg.errors import (
    InvalidA,
    InvalidC,
    InvalidKappa,
    InvalidOrder,
    InvalidParameter,
    InvalidProfileArgs,
    NotIntegerA,
)
from kcbg.numeric import degree_profile

FAMILIES: tuple[str, ...] = (
    "hat", "bar", "check", "dot", "ddot", "tripledot", "star", "kappa_tuned", "complete",
)


def _require_order(n: int, m: int) -> None:
    if not n > m > 1:
        raise InvalidOrder(f"need n > m > 1, got ({n}, {m})")


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def hat_g(n: int, m: int, a: int) -> BipartiteGraph:
    """``u_i`` is joined to ``a`` cyclically consecutive V-vertices from ``ceil(i*m/n)``."""
    _require_order(n, m)
    if not 1 <= a <= m:
        raise InvalidA(f"need 1 <= a <= m, got a={a}, m={m}")
    edges = []
    for i in range(n):
        j = _ceil_div(i * m, n)
        edges.extend((i, (j + alpha) % m) for alpha in range(a))
    return BipartiteGraph(n, m, tuple(edges))


def bar_g(n: int, m: int) -> BipartiteGraph:
    """The minimum k-critical-bipartite graph of order ``(n, m)``.

    ``v_j`` is joined to the ``k+1`` cyclically consecutive U-vertices ending
    at ``floor(j*n/m)``.
    """
    _require_order(n, m)
    k = n - m
    edges = []
    for j in range(m):
        i = (j * n) // m
        edges.extend(((i - beta) % n, j) for beta in range(k + 1))
    return BipartiteGraph(n, m, tuple(edges))


def optimal_a(n: int, m: int) -> int:
    """``ceil(m(k+1)/n)``, the maximum U-degree of a minimum graph."""
    return _ceil_div(m * (n - m + 1), n)


def check_g(n: int, m: int) -> BipartiteGraph:
    """Biregular blow-up graph; requires ``a = (n-m+1)m/n`` to be an integer."""
    _require_order(n, m)
    num = (n - m + 1) * m
    if num % n:
        raise NotIntegerA(f"a = {num}/{n} not integer")
    a = num // n
    c = gcd(n, m)
    x, y = n // c, m // c
    edges = []
    for i in range(n):
        j = (i // x) * y
        edges.extend((i, (j + alpha) % m) for alpha in range(a))
    return BipartiteGraph(n, m, tuple(edges))


def dot_g(x: int, y: int, b: int) -> BipartiteGraph:
    """Realise the profile of ``degree_profile(x, y, b)`` by rotating U-neighbourhoods."""
    prof = degree_profile(x, y, b)
    edges = []
    for i, (p, d) in enumerate(zip(prof.P, prof.D)):
        edges.extend((i, (d + pi) % y) for pi in range(p))
    return BipartiteGraph(x, y, tuple(edges))


def ddot_g(x: int, y: int, b: int) -> BipartiteGraph:
    """``v_j`` is joined to the ``b`` U-vertices starting at ``j*b`` (mod ``x``)."""
    if x < 1 or y < 1 or not 1 <= b <= x:
        raise InvalidProfileArgs(f"need x, y >= 1 and 1 <= b <= x, got ({x}, {y}, {b})")
    edges = [((j * b + beta) % x, j) for j in range(y) for beta in range(b)]
    return BipartiteGraph(x, y, tuple(edges))


def tripledot_g(n: int, m: int, c: int) -> BipartiteGraph:
    """Disjoint union of ``c`` copies of ``dot_g(n/c, m/c, k+1)``."""
    _require_order(n, m)
    if c < 2 or n % c or m % c:
        raise InvalidC(f"c={c} must be > 1 and divide both n={n} and m={m}")
    x, y, k = n // c, m // c, n - m
    if k + 1 > x:
        raise InvalidC(f"need k+1 <= n/c, got k+1={k + 1}, n/c={x}")
    block = dot_g(x, y, k + 1)
    edges = [(t * x + i, t * y + j) for t in range(c) for i, j in block.edges]
    return BipartiteGraph(n, m, tuple(edges))


def valid_tripledot_c(n: int, m: int) -> list[int]:
    k = n - m
    return [c for c in range(2, m + 1) if n % c == 0 and m % c == 0 and k + 1 <= n // c]


def star_g(n: int, m: int) -> BipartiteGraph:
    """A matching of size ``m`` plus ``k`` U-vertices joined to all of V."""
    _require_order(n, m)
    edges = [(i, i) for i in range(m)]
    edges.extend((i, j) for i in range(m, n) for j in range(m))
    return BipartiteGraph(n, m, tuple(edges))


def kappa_tuned(n: int, m: int, kappa: int) -> BipartiteGraph:
    """``K_{n,m}`` with edges ``(u_0, v_j)``, ``j < m - kappa``, removed."""
    _require_order(n, m)
    if not 1 <= kappa <= m:
        raise InvalidKappa(f"need 1 <= kappa <= m, got kappa={kappa}, m={m}")
    drop = m - kappa
    edges = [(i, j) for i in range(n) for j in range(m) if not (i == 0 and j < drop)]
    return BipartiteGraph(n, m, tuple(edges))


def complete_g(n: int, m: int) -> BipartiteGraph:
    if n < 1 or m < 1:
        raise InvalidOrder(f"need n, m >= 1, got ({n}, {m})")
    return complete_bipartite(n, m)


@dataclass(frozen=True)
class ConstructionSpec:
    """A family name plus its parameters; ``build()`` runs the generator.

    Parameters not given explicitly fall back to the values used throughout
    the test matrices: ``a = ceil(m(k+1)/n)`` for ``hat``, ``b = k+1`` for
    ``dot``/``ddot``, the smallest valid ``c`` for ``tripledot``.
    """

    family: str
    n: int
    m: int
    params: dict = field(default_factory=dict)

    def resolved(self) -> dict:
        n, m, p = self.n, self.m, dict(self.params)
        k = n - m
        if self.family == "hat":
            p.setdefault("a", optimal_a(n, m) if n > m > 1 else 1)
        elif self.family in ("dot", "ddot"):
            p.setdefault("b", k + 1)
        elif self.family == "tripledot" and "c" not in p:
            cs = valid_tripledot_c(n, m) if n > m > 1 else []
            if not cs:
                raise InvalidC(f"no valid c for ({n}, {m})")
            p["c"] = cs[0]
        elif self.family == "kappa_tuned":
            p.setdefault("kappa", 1)
        return p

    def build(self) -> BipartiteGraph:
        if self.family not in _BUILDERS:
            raise InvalidParameter(f"unknown family {self.family!r}; expected one of {FAMILIES}")
        return _BUILDERS[self.family](self.n, self.m, self.resolved())


_BUILDERS: dict[str, Callable[[int, int, dict], BipartiteGraph]] = {
    "hat": lambda n, m, p: hat_g(n, m, p["a"]),
    "bar": lambda n, m, p: bar_g(n, m),
    "check": lambda n, m, p: check_g(n, m),
    "dot": lambda n, m, p: dot_g(n, m, p["b"]),
    "ddot": lambda n, m, p: ddot_g(n, m, p["b"]),
    "tripledot": lambda n, m, p: tripledot_g(n, m, p["c"]),
    "star": lambda n, m, p: star_g(n, m),
    "kappa_tuned": lambda n, m, p: kappa_tuned(n, m, p["kappa"]),
    "complete": lambda n, m, p: complete_g(n, m),
}


def construct(family: str, n: int, m: int, **params) -> BipartiteGraph:
    clean = {key: val for key, val in params.items() if val is not None}
    return ConstructionSpec(family, n, m, clean).build()
