"""Finite root systems of types A-E7, built from Cartan matrices.

Roots are plain tuples of integers: the coefficients of a root in the basis
of simple roots.  Node indices in the public API are 1-based and follow the
Bourbaki numbering.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

Root = tuple  # tuple[int, ...]

FAMILIES = ("A", "B", "C", "D", "E6", "E7")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


def _chain(rank: int) -> list[list[int]]:
    m = [[0] * rank for _ in range(rank)]
    for k in range(rank):
        m[k][k] = 2
        if k + 1 < rank:
            m[k][k + 1] = m[k + 1][k] = -1
    return m


def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """Return the Cartan matrix ``a[i][j] = <alpha_i^vee, alpha_j>`` (0-based).

    The pairing of a root ``beta = sum c_k alpha_k`` with the coroot of
    ``alpha_j`` is then ``sum_k c_k a[j][k]``.
    """
    family = normalize_family(family)
    check_family_rank(family, rank)
    if family == "A":
        return _chain(rank)
    if family == "B":
        m = _chain(rank)
        # alpha_n short
        m[rank - 1][rank - 2] = -2
        return m
    if family == "C":
        m = _chain(rank)
        # alpha_n long
        m[rank - 2][rank - 1] = -2
        return m
    if family == "D":
        m = _chain(rank)
        m[rank - 2][rank - 1] = m[rank - 1][rank - 2] = 0
        m[rank - 3][rank - 1] = m[rank - 1][rank - 3] = -1
        return m
    # E6, E7: chain 1-3-4-5-6(-7) with node 2 attached to node 4
    m = [[0] * rank for _ in range(rank)]
    edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
    if rank == 7:
        edges.append((6, 7))
    for k in range(rank):
        m[k][k] = 2
    for a, b in edges:
        m[a - 1][b - 1] = m[b - 1][a - 1] = -1
    return m


def normalize_family(family: str) -> str:
    f = str(family).strip().upper()
    if f not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    return f


def check_family_rank(family: str, rank: int) -> None:
    if family == "E6" and rank != 6:
        raise ValueError("E6 has rank 6")
    if family == "E7" and rank != 7:
        raise ValueError("E7 has rank 7")
    if family in _MIN_RANK and (not isinstance(rank, int) or rank < _MIN_RANK[family]):
        raise ValueError(f"type {family} needs rank >= {_MIN_RANK[family]}, got {rank!r}")


def height(root: Sequence[int]) -> int:
    return sum(root)


def is_positive(root: Sequence[int]) -> bool:
    return all(c >= 0 for c in root) and any(root)


def negate(root: Sequence[int]) -> Root:
    return tuple(-c for c in root)


def add(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[int], b: Sequence[int]) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def grade(root: Sequence[int], nodes: Iterable[int]) -> int:
    """Pair a root against ``sum_{j in nodes} Z_j``: the sum of its coefficients at ``nodes``."""
    return sum(root[j - 1] for j in nodes)


def _generate_positive_roots(cartan: list[list[int]]) -> list[Root]:
    rank = len(cartan)
    simple = [tuple(1 if k == j else 0 for k in range(rank)) for j in range(rank)]
    known = set(simple)
    layer = sorted(simple)
    ordered = list(layer)
    while layer:
        nxt = set()
        for beta in layer:
            for j in range(rank):
                if beta == simple[j]:
                    continue
                # alpha_j-string through beta: p - q = <beta, alpha_j^vee>
                p = 0
                probe = sub(beta, simple[j])
                while probe in known:
                    p += 1
                    probe = sub(probe, simple[j])
                pairing = sum(c * a for c, a in zip(beta, cartan[j]))
                if p - pairing > 0:
                    nxt.add(add(beta, simple[j]))
        layer = sorted(nxt - known)
        known.update(layer)
        ordered.extend(layer)
    return ordered


@dataclass(frozen=True)
class RootSystem:
    """A reduced irreducible root system with its positive roots enumerated.

    ``positive_roots`` is ordered by height, ties broken lexicographically.
    """

    family: str
    rank: int
    cartan: tuple = field(repr=False)
    positive_roots: tuple = field(repr=False)
    _positive: frozenset = field(repr=False, compare=False)
    _all: frozenset = field(repr=False, compare=False)

    @property
    def roots(self) -> frozenset:
        return self._all

    @property
    def negative_roots(self) -> tuple:
        return tuple(negate(r) for r in self.positive_roots)

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._all

    def is_positive_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._positive

    def simple_root(self, j: int) -> Root:
        if not 1 <= j <= self.rank:
            raise ValueError(f"simple index {j} out of range 1..{self.rank}")
        return tuple(1 if k == j - 1 else 0 for k in range(self.rank))

    @property
    def highest_root(self) -> Root:
        return self.positive_roots[-1]

    def pairing(self, v: Sequence[int], j: int) -> int:
        """``<v, alpha_j^vee>`` for 1-based ``j``."""
        return sum(v[k] * a for k, a in self._sparse_cartan[j - 1])

    @cached_property
    def _sparse_cartan(self) -> tuple:
        return tuple(tuple((k, a) for k, a in enumerate(row) if a) for row in self.cartan)

    def label(self) -> str:
        return self.family if self.family.startswith("E") else f"{self.family}{self.rank}"

    @cached_property
    def addition_triples(self) -> tuple:
        """All ``(a, b, a + b)`` with ``a <= b`` positive and ``a + b`` a root."""
        pos = self.positive_roots
        out = []
        for x, a in enumerate(pos):
            for b in pos[x:]:
                s = add(a, b)
                if s in self._positive:
                    out.append((a, b, s))
        return tuple(out)


def build_root_system(family: str, rank: Optional[int] = None) -> RootSystem:
    family = normalize_family(family)
    if rank is None and family.startswith("E"):
        rank = int(family[1])
    check_family_rank(family, rank)
    cartan = cartan_matrix(family, rank)
    pos = _generate_positive_roots(cartan)
    posset = frozenset(pos)
    return RootSystem(
        family=family,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        positive_roots=tuple(pos),
        _positive=posset,
        _all=posset | frozenset(negate(r) for r in pos),
    )


def add_roots(sys: RootSystem, a: Sequence[int], b: Sequence[int]) -> Optional[Root]:
    """Return ``a + b`` when it is a root, else ``None``.

    By ``[g_a, g_b] = g_{a+b}`` this decides whether two root spaces bracket
    nontrivially (for ``a != -b``).
    """
    s = add(a, b)
    return s if s in sys.roots else None


def reflect(sys: RootSystem, j: int, a: Sequence[int]) -> Root:
    """Simple reflection ``r_j(a) = a - <a, alpha_j^vee> alpha_j``."""
    out = list(a)
    out[j - 1] -= sys.pairing(a, j)
    return tuple(out)


def cominuscule_nodes(sys: RootSystem) -> list[int]:
    return [j + 1 for j, c in enumerate(sys.highest_root) if c == 1]


def format_root(root: Sequence[int]) -> str:
    """Human-readable form such as ``a2+2a3+2a4+a5``; negative roots get a leading ``-``."""
    if not any(root):
        return "0"
    sign = ""
    if all(c <= 0 for c in root):
        sign, root = "-", negate(root)
    terms = []
    for j, c in enumerate(root, start=1):
        if c == 0:
            continue
        terms.append(f"a{j}" if c == 1 else f"{c}a{j}")
    return sign + ("(" + "+".join(terms) + ")" if sign and len(terms) > 1 else "+".join(terms))


def span_root(rank: int, first: int, last: int, coeff: int = 1) -> Root:
    """``coeff * (alpha_first + ... + alpha_last)`` as a coefficient tuple."""
    return tuple(coeff if first <= k <= last else 0 for k in range(1, rank + 1))
