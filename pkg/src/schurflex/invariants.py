"""The integer ``a(w)``, the marking ``J(w)`` and the induced bigrading.

With ``Z_w = sum_{j in J} Z_j`` every root gets a bigrade ``(alpha(Z_i), alpha(Z_w))``
and the ideal of a class is cut out by a single inequality
``Delta(w) = {alpha in Delta(g1) : alpha(Z_w) <= a}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cominuscule import CominusculeSpace, SchubertClass
from .errors import ConsistencyError, ExtremalClassError, InvalidInput
from .rootsys import Root, add, grade, sub

HIGHEST = "highest"
LOWEST = "lowest"


@dataclass(frozen=True)
class AJInvariant:
    a: int
    J: tuple  # sorted node indices

    def __str__(self) -> str:
        return f"{self.a}:" + ",".join(str(j) for j in self.J)

    @classmethod
    def parse(cls, text: str) -> "AJInvariant":
        """Read the ``"a:j1,j2,..."`` notation."""
        head, sep, tail = str(text).partition(":")
        if not sep:
            raise InvalidInput(f"expected 'a:j1,j2,...', got {text!r}")
        try:
            a = int(head)
            J = tuple(sorted(int(t) for t in tail.split(",") if t.strip()))
        except ValueError:
            raise InvalidInput(f"expected 'a:j1,j2,...', got {text!r}") from None
        if a < 0:
            raise InvalidInput(f"a must be nonnegative, got {a}")
        if len(set(J)) != len(J):
            raise InvalidInput(f"repeated index in J: {J}")
        return cls(a, J)


@dataclass(frozen=True)
class Bigrade:
    k: int
    l: int


def bigrade(space: CominusculeSpace, J: Iterable[int], root: Root) -> Bigrade:
    return Bigrade(root[space.node - 1], grade(root, J))


def compute_aJ(space: CominusculeSpace, cls: SchubertClass) -> AJInvariant:
    """``(a, J)`` from the stabilizer of ``n_w`` in ``g_0``.

    ``j`` is marked when some ``mu`` in the ideal has ``mu + alpha_j`` in
    ``Delta(g1)`` but outside the ideal: ``g_{-alpha_j}`` then fails to
    stabilize ``n_w``.
    """
    if space.is_extremal(cls):
        raise ExtremalClassError("a(w) and J(w) are undefined for the point and the fundamental class")
    ideal = cls.set
    J = []
    for j in range(1, space.rank + 1):
        if j == space.node:
            continue
        aj = space.sys.simple_root(j)
        for mu in ideal:
            up = add(mu, aj)
            if up in space.g1_set and up not in ideal:
                J.append(j)
                break
    a = max(grade(mu, J) for mu in ideal)
    rebuilt = frozenset(al for al in space.g1 if grade(al, J) <= a)
    if rebuilt != ideal:
        raise ConsistencyError(f"(a, J) = ({a}, {J}) does not cut out {cls}")
    return AJInvariant(a, tuple(J))


def ideal_from_aj(space: CominusculeSpace, aj: AJInvariant) -> SchubertClass:
    """The set ``{alpha in Delta(g1) : alpha(Z_w) <= a}``; no shape checks."""
    bad = [j for j in aj.J if not 1 <= j <= space.rank or j == space.node]
    if bad:
        raise InvalidInput(f"J contains invalid indices {bad} for {space.name}")
    return SchubertClass.of(al for al in space.g1 if grade(al, aj.J) <= aj.a)


def slice_roots(space: CominusculeSpace, J: Iterable[int], k: int, l: int) -> list:
    """All roots (either sign) of bigrade ``(k, l)``, in root-system order."""
    J = tuple(J)
    out = []
    for sign in (1, -1):
        for al in space.sys.positive_roots:
            r = al if sign == 1 else tuple(-c for c in al)
            if r[space.node - 1] == k and grade(r, J) == l:
                out.append(r)
    return out


def levi_simple(space: CominusculeSpace, J: Iterable[int]) -> list:
    """Simple indices of ``g_{0,0}``: everything outside ``J`` and the node."""
    J = set(J)
    return [j for j in range(1, space.rank + 1) if j not in J and j != space.node]


def extremal_weights(space: CominusculeSpace, J: Iterable[int], k: int, l: int, direction: str = HIGHEST) -> list:
    """``g_{0,0}``-highest (or lowest) weights of the slice ``g_{k,l}``, sorted."""
    if direction not in (HIGHEST, LOWEST):
        raise InvalidInput(f"direction must be {HIGHEST!r} or {LOWEST!r}")
    J = tuple(J)
    step = add if direction == HIGHEST else sub
    simples = [space.sys.simple_root(j) for j in levi_simple(space, J)]
    return sorted(
        g
        for g in slice_roots(space, J, k, l)
        if all(not space.sys.is_root(step(g, s)) for s in simples)
    )


def is_smooth(space: CominusculeSpace, cls: SchubertClass) -> bool:
    """Smooth Schubert varieties are those with ``a = 0``; extremal ones are smooth too."""
    if space.is_extremal(cls):
        return True
    return compute_aJ(space, cls).a == 0


def d_epsilon(space: CominusculeSpace, J: Iterable[int]) -> int:
    """``alpha_{n-1}(Z_w)`` for type D: 1 if ``n-1`` is marked."""
    return int(space.rank - 1 in set(J))


def spinor_r(space: CominusculeSpace, aj: AJInvariant) -> int:
    eps = d_epsilon(space, aj.J)
    return (aj.a + eps + 1) // 2


def shape_violation(space: CominusculeSpace, aj: AJInvariant):
    """Name the first family constraint on ``(a, J)`` that fails, else ``None``."""
    n, i, a, J = space.rank, space.node, aj.a, list(aj.J)
    if a < 0:
        return "a must be nonnegative"
    if not J:
        return "J must be non-empty"
    if any(j == i or not 1 <= j <= n for j in J):
        return f"J must lie in 1..{n} minus the node {i}"
    kind = space.kind
    if kind == "grassmannian":
        p = sum(1 for j in J if j < i)
        q = sum(1 for j in J if j > i)
        if p not in (a, a + 1) or q not in (a, a + 1):
            return f"p={p}, q={q} must lie in {{a, a+1}} = {{{a}, {a + 1}}}"
        return None
    if kind == "lagrangian":
        if len(J) not in (a, a + 1):
            return f"|J|={len(J)} must lie in {{{a}, {a + 1}}}"
        return None
    if kind == "spinor":
        if i != n:
            return "the spinor dictionary uses node n"
        if n in J:
            return f"J must lie in 1..{n - 1}"
        eps = d_epsilon(space, J)
        p = len(J)
        if p - eps not in (a, a + 1):
            return f"p - eps = {p - eps} must lie in {{{a}, {a + 1}}}"
        r = spinor_r(space, aj)
        js = [None] + sorted(J, reverse=True) + [0]  # js[l] = j_l, js[p+1] = 0
        if r > eps and r <= p and js[r] - js[r + 1] < 2:
            return f"j_r - j_(r+1) = {js[r] - js[r + 1]} must be at least 2 (r={r})"
        if r > eps and r > p:
            return f"r={r} exceeds p={p}"
        return None
    if kind == "odd_quadric":
        if a not in (0, 1) or len(J) != 1 or not 2 <= J[0] <= n:
            return "need a in {0,1} and J = {j} with 2 <= j <= n"
        return None
    if kind == "even_quadric":
        if J == [n - 1, n]:
            return None if a in (0, 1) else "need a in {0,1}"
        if len(J) != 1:
            return "J must be {j} or {n-1, n}"
        hi = n if a == 0 else n - 2
        if a not in (0, 1) or not 2 <= J[0] <= hi:
            return f"with a={a} need 2 <= j <= {hi}"
        return None
    return None
