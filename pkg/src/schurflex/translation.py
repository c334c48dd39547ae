"""Partitions versus ``(a, J)`` for Grassmannians, Lagrangian Grassmannians
and spinor varieties, the partition-level rigidity criteria, quadrics, and
flag-incidence descriptions.

Partitions are strictly increasing tuples ``1 <= l_1 < ... < l_k``.  The
``decreasing`` helpers convert to and from Young-diagram shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .cominuscule import CominusculeSpace, SchubertClass, build_space
from .errors import ConsistencyError, ExtremalClassError, InvalidInput
from .invariants import AJInvariant, compute_aJ, d_epsilon, ideal_from_aj, shape_violation

GR = "Gr"
LG = "LG"
SPINOR = "Spinor"

PLUS = "plus"
MINUS = "minus"


@dataclass(frozen=True)
class PartitionIndex:
    """``family`` is Gr, LG or Spinor; ``params`` is ``(i, n+1)`` for Gr and ``(n,)`` otherwise."""

    family: str
    params: tuple
    parts: tuple

    def __post_init__(self):
        rule = partition_violation(self.family, self.params, self.parts)
        if rule:
            label = ",".join(map(str, self.params))
            raise InvalidInput(f"invalid {self.family}({label}) partition {self.parts}: {rule}")

    @property
    def n(self) -> int:
        return self.params[-1] - 1 if self.family == GR else self.params[0]

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.parts) + ")"


def partition_violation(family: str, params: Sequence[int], parts: Sequence[int]) -> Optional[str]:
    parts = tuple(parts)
    if family == GR:
        i, top = params
        length, bound = i, top
    elif family in (LG, SPINOR):
        (n,) = params
        length, bound = n, 2 * n
    else:
        return f"unknown partition family {family!r}"
    if len(parts) != length:
        return f"needs exactly {length} parts, got {len(parts)}"
    if any(not isinstance(x, int) for x in parts):
        return "parts must be integers"
    if any(b <= a for a, b in zip(parts, parts[1:])):
        return "parts must be strictly increasing"
    if parts[0] < 1 or parts[-1] > bound:
        return f"parts must lie in 1..{bound}"
    if family in (LG, SPINOR):
        s = set(parts)
        for x in parts:
            if 2 * n + 1 - x in s:
                return f"{x} and {2 * n + 1 - x} may not both occur (l in lambda iff 2n+1-l not in lambda)"
    if family == SPINOR and sum(1 for x in parts if x > n) % 2:
        return "the number of parts exceeding n must be even"
    return None


def partition_family(space: CominusculeSpace):
    """``(family, params)`` of the partition model of ``space``."""
    kind, n, i = space.kind, space.rank, space.node
    if kind == "grassmannian":
        return GR, (i, n + 1)
    if kind == "lagrangian":
        return LG, (n,)
    if kind == "spinor":
        if i != n:
            raise InvalidInput(f"partitions for D{n} use node {n}; node {i} is its mirror image")
        return SPINOR, (n,)
    raise InvalidInput(f"{space.name} has no partition model here")


def make_partition(space: CominusculeSpace, parts: Sequence[int]) -> PartitionIndex:
    family, params = partition_family(space)
    return PartitionIndex(family, params, tuple(int(x) for x in parts))


def space_for(p: PartitionIndex) -> CominusculeSpace:
    if p.family == GR:
        i, top = p.params
        return build_space("A", top - 1, i)
    if p.family == LG:
        return build_space("C", p.n, p.n)
    return build_space("D", p.n, p.n)


# ---- blocks


def _blocks(parts, linked=lambda x, y: y == x + 1):
    """Maximal runs, lowest first: ``[mu_p, ..., mu_1, mu_0]``."""
    out = [[parts[0]]]
    for x, y in zip(parts, parts[1:]):
        if linked(x, y):
            out[-1].append(y)
        else:
            out.append([y])
    return out


def blocks(p: PartitionIndex) -> list:
    if p.family == SPINOR:
        n = p.n
        return _blocks(p.parts, lambda x, y: y == x + 1 or (y == x + 2 and x in (n - 1, n)))
    return _blocks(p.parts)


def _j_values(bl) -> list:
    """``[j_p, ..., j_1]`` from blocks ``[mu_p, ..., mu_0]``."""
    out, total = [], 0
    for b in bl[:-1]:
        total += len(b)
        out.append(total)
    return out


def extremal_partitions(family: str, params: Sequence[int]):
    """Partitions ``(bottom, top)`` of the point class and the fundamental class."""
    k = params[0]
    bound = params[1] if family == GR else 2 * k
    top = list(range(bound - k + 1, bound + 1))
    if family == SPINOR and k % 2:
        top[0] = k
    return tuple(range(1, k + 1)), tuple(top)


def is_extremal_partition(p: PartitionIndex) -> bool:
    return p.parts in extremal_partitions(p.family, p.params)


def partition_to_aj(p: PartitionIndex) -> AJInvariant:
    if is_extremal_partition(p):
        raise ExtremalClassError(f"{p} indexes an extremal class")
    bl = blocks(p)
    P = len(bl) - 1
    js = _j_values(bl)  # j_p < ... < j_1
    lam = p.parts
    first = lam[0] == 1
    if p.family == GR:
        i, top = p.params
        ks = {i - j + lam[j - 1] for j in js} | {lam[-1]}
        ks -= {i, top}
        return AJInvariant(P - 1 if first else P, tuple(sorted(set(js) | ks)))
    if p.family == LG:
        return AJInvariant(P - 1 if first else P, tuple(js))
    gap = lam[-1] - lam[-2] > 1
    if first:
        a = P - 2 if gap else P - 1
    else:
        a = P - 1 if gap else P
    return AJInvariant(a, tuple(js))


def _check_shape(family, params, aj):
    if family == GR:
        space = build_space("A", params[1] - 1, params[0])
    elif family == LG:
        space = build_space("C", params[0], params[0])
    else:
        space = build_space("D", params[0], params[0])
    rule = shape_violation(space, aj)
    if rule:
        raise InvalidInput(f"(a, J) = {aj} is not valid for {space.name}: {rule}")


def aj_to_partition(family: str, params: Sequence[int], aj: AJInvariant) -> PartitionIndex:
    params = tuple(params)
    _check_shape(family, params, aj)
    a = aj.a
    if family == GR:
        i, top = params
        low = sorted((j for j in aj.J if j < i), reverse=True)  # j_1 > ... > j_p
        high = sorted(j for j in aj.J if j > i)  # k_1 < ... < k_q
        p, q = len(low), len(high)
        j = [i] + low + [0]  # j[l] = j_l, j[p+1] = 0
        k = [i] + high + [top]  # k[m] = k_m, k[q+1] = n+1
        parts = []
        for ell in range(p, -1, -1):
            m = a + 1 - ell
            parts.extend(range(j[ell + 1] + k[m] - i + 1, j[ell] + k[m] - i + 1))
        return PartitionIndex(family, params, tuple(parts))
    (n,) = params
    eps = d_epsilon(build_space("D", n, n), aj.J) if family == SPINOR else 0
    low = sorted(aj.J, reverse=True)
    p = len(low)
    j = [n] + low + [0]
    parts = []
    for ell in range(p, -1, -1):
        m = a + 1 + eps - ell
        parts.extend(range(n + 1 + j[ell + 1] - j[m], n + j[ell] - j[m] + 1))
    if family == SPINOR and sum(1 for x in parts if x > n) % 2:
        have = [x for x in (n, n + 1) if x in parts]
        if len(have) != 1:
            raise ConsistencyError(f"parity fix needs exactly one of {n}, {n + 1} in {parts}")
        swap = 2 * n + 1 - have[0]
        parts = sorted(swap if x == have[0] else x for x in parts)
    return PartitionIndex(family, params, tuple(parts))


def spinor_r(p: PartitionIndex) -> int:
    """Index of the block meeting ``{n, n+1}``: ``floor(P/2)`` if ``l_1 = 1``, else ``ceil(P/2)``."""
    if p.family != SPINOR:
        raise InvalidInput("r is defined for spinor partitions only")
    P = len(blocks(p)) - 1
    return P // 2 if p.parts[0] == 1 else (P + 1) // 2


def _condensed(parts) -> list:
    """Multiplicities ``[c_p, ..., c_0]`` and values ``[nu_p, ..., nu_0]`` of ``l_k - k``."""
    vals = [x - k for k, x in enumerate(parts, start=1)]
    nus, cs = [], []
    for v in vals:
        if nus and nus[-1] == v:
            cs[-1] += 1
        else:
            nus.append(v)
            cs.append(1)
    return nus, cs


def rigid_by_partition(p: PartitionIndex) -> bool:
    if is_extremal_partition(p):
        return True
    if p.family == GR:
        i, top = p.params
        nus, cs = _condensed(p.parts)
        P = len(nus) - 1
        nu = lambda s: nus[P - s]
        c = lambda s: cs[P - s]
        if any(nu(s - 1) - nu(s) < 2 for s in range(1, P + 1)):
            return False
        if any(c(s) < 2 for s in range(1, P)):
            return False
        if nu(P) > 0 and c(P) < 2:
            return False
        if nu(0) < top - i and c(0) < 2:
            return False
        return True
    if p.family == LG:
        nus, cs = _condensed(p.parts)
        P = len(nus) - 1
        c = lambda s: cs[P - s]
        span = range(1, P + 1) if nus[0] > 0 else range(0, P)
        return all(c(s) >= 2 for s in span)
    bl = blocks(p)
    P = len(bl) - 1
    c = lambda s: len(bl[P - s])
    r = spinor_r(p)
    n = p.n
    if not set(bl[P - r]) & {n, n + 1}:
        raise ConsistencyError(f"block r={r} of {p} misses {{{n}, {n + 1}}}")
    span = range(1, P + 1) if p.parts[0] > 1 else range(0, P)
    return all(c(s) >= 2 for s in span) and c(r) >= 3


# ---- classes <-> partitions


def partition_to_class(space: CominusculeSpace, parts: Sequence[int]) -> SchubertClass:
    p = make_partition(space, parts)
    if is_extremal_partition(p):
        return space.bottom if p.parts[0] == 1 else space.top
    return ideal_from_aj(space, partition_to_aj(p))


def class_to_partition(space: CominusculeSpace, cls: SchubertClass) -> PartitionIndex:
    family, params = partition_family(space)
    bottom, top = extremal_partitions(family, params)
    if cls.dim == 0:
        return PartitionIndex(family, params, bottom)
    if cls.dim == space.dim:
        return PartitionIndex(family, params, top)
    return aj_to_partition(family, params, compute_aJ(space, cls))


def partition_dimension(p: PartitionIndex) -> int:
    """Dimension read off the partition directly, independent of ``(a, J)``."""
    if p.family == GR:
        return sum(x - k for k, x in enumerate(p.parts, start=1))
    n = p.n
    if p.family == LG:
        return sum(x - n for x in p.parts if x > n)
    return sum(x - n - 1 for x in p.parts if x > n)


def to_decreasing(p: PartitionIndex) -> tuple:
    """Young-diagram shape: weakly decreasing for Gr, strict for LG and Spinor."""
    if p.family == GR:
        return tuple(sorted((x - k for k, x in enumerate(p.parts, start=1)), reverse=True))
    n = p.n
    shift = n if p.family == LG else n + 1
    return tuple(sorted((x - shift for x in p.parts if x - shift > 0), reverse=True))


def from_decreasing(family: str, params: Sequence[int], shape: Sequence[int]) -> PartitionIndex:
    params = tuple(params)
    shape = [int(x) for x in shape if int(x) != 0]
    if family == GR:
        i, top = params
        if len(shape) > i:
            raise InvalidInput(f"shape {shape} has more than {i} rows")
        if any(b > a for a, b in zip(shape, shape[1:])):
            raise InvalidInput("shape must be weakly decreasing")
        rows = [0] * (i - len(shape)) + list(reversed(shape))
        return PartitionIndex(family, params, tuple(r + k for k, r in enumerate(rows, start=1)))
    (n,) = params
    if any(b >= a for a, b in zip(shape, shape[1:])):
        raise InvalidInput("shape must be strictly decreasing")
    shift = n if family == LG else n + 1
    upper = {x + shift for x in shape}
    if family == SPINOR and len(upper) % 2:
        upper.add(n + 1)
    lower = {x for x in range(1, n + 1) if 2 * n + 1 - x not in upper}
    return PartitionIndex(family, params, tuple(sorted(lower | upper)))


# ---- LG <-> spinor


def lg_spinor_map(p: PartitionIndex) -> PartitionIndex:
    """Spinor partition for ``S_{n+1}`` to the LG partition for ``LG(n, 2n)``."""
    if p.family != SPINOR:
        raise InvalidInput("lg_spinor_map takes a spinor partition")
    n = p.n - 1
    if n < 2:
        raise InvalidInput("need a spinor variety S_m with m >= 3")
    mid = [x for x in p.parts if x in (n + 1, n + 2)]
    if len(mid) != 1:
        raise ConsistencyError(f"{p} should contain exactly one of {n + 1}, {n + 2}")
    parts = tuple(x if x < n + 1 else x - 2 for x in p.parts if x not in mid)
    return PartitionIndex(LG, (n,), parts)


# ---- quadrics


def quadric_rigid(parity: str, m: int, d: int, branch: Optional[str] = None) -> bool:
    """Rigidity in ``Q^{2m-1}`` (``parity='odd'``) or ``Q^{2m}`` (``'even'``) by dimension."""
    if parity not in ("odd", "even"):
        raise InvalidInput("parity must be 'odd' or 'even'")
    if m < 1:
        raise InvalidInput("m must be positive")
    top = 2 * m - 1 if parity == "odd" else 2 * m
    if not 0 <= d <= top:
        raise InvalidInput(f"dimension {d} outside 0..{top}")
    if branch is not None and (parity == "odd" or d != m or branch not in (PLUS, MINUS)):
        raise InvalidInput(f"branch tag {branch!r} only applies to the middle dimension of an even quadric")
    if d in (0, top):
        return True
    return parity == "even" and d == m


def quadric_parameters(space: CominusculeSpace):
    """``(parity, m)`` with the quadric of dimension ``2m-1`` or ``2m``."""
    if space.kind == "odd_quadric":
        return "odd", space.rank
    if space.kind == "even_quadric":
        return "even", space.rank - 1
    raise InvalidInput(f"{space.name} is not a quadric")


def quadric_selector(space: CominusculeSpace, cls: SchubertClass):
    """``(d, branch)``; the two middle classes of an even quadric get ``plus``
    (lexicographically smaller ideal) and ``minus``."""
    parity, m = quadric_parameters(space)
    if parity == "even" and cls.dim == m:
        mids = sorted(c.roots for c in _middle_classes(space))
        return cls.dim, PLUS if cls.roots == mids[0] else MINUS
    return cls.dim, None


def _middle_classes(space):
    from .cominuscule import enumerate_classes

    m = space.rank - 1
    return [c for c in enumerate_classes(space).classes if c.dim == m]


# ---- incidence descriptions


@dataclass(frozen=True)
class IncidenceCondition:
    ell: int
    basis: tuple  # 1-based basis indices spanning F_ell
    jump: int
    trivial: bool

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True)
class Incidence:
    space: str
    conditions: tuple
    text: str
    dim: Optional[int] = None  # set when the description determines the dimension


def _span(idx) -> str:
    idx = list(idx)
    if not idx:
        return "0"
    runs, start = [], idx[0]
    for x, y in zip(idx, idx[1:] + [None]):
        if y != x + 1:
            runs.append(f"e{start}" if start == x else f"e{start}..e{x}")
            start = y
    return "<" + ", ".join(runs) + ">"


def incidence_description(space: CominusculeSpace, cls: SchubertClass) -> Incidence:
    if space.kind == "exceptional":
        raise InvalidInput(f"{space.name} has no flag-incidence model")
    if space.is_extremal(cls):
        raise ExtremalClassError("no incidence description for the point or the fundamental class")
    aj = compute_aJ(space, cls)
    a = aj.a
    n, i = space.rank, space.node
    if space.kind in ("odd_quadric", "even_quadric"):
        return _quadric_incidence(space, aj)
    conds = []
    if space.kind == "grassmannian":
        low = sorted((j for j in aj.J if j < i), reverse=True)
        high = sorted(j for j in aj.J if j > i)
        j = [i] + low + [0]
        k = [i] + high + [n + 1]
        ambient = n + 1
        for ell in range(a + 1, -1, -1):
            m = a + 1 - ell
            basis = tuple(range(1, j[ell] + 1)) + tuple(range(i + 1, k[m] + 1))
            conds.append(IncidenceCondition(ell, basis, j[ell], j[ell] == 0 or len(basis) == ambient))
        head = f"E in Gr({i},{n + 1})"
    else:
        eps = d_epsilon(space, aj.J) if space.kind == "spinor" else 0
        low = sorted(aj.J, reverse=True)
        p = len(low)
        j = [n] + low + [0]
        ambient = 2 * n
        for ell in range(p, -1, -1):
            m = a + 1 + eps - ell
            basis = tuple(range(1, j[ell] + 1)) + tuple(range(n + j[m] + 1, 2 * n + 1))
            conds.append(IncidenceCondition(ell, basis, j[ell], j[ell] == 0 or len(basis) == ambient))
        head = f"E in {space.name}"
    lines = [head + " with"]
    for c in conds:
        if not c.trivial:
            lines.append(f"  dim(E ∩ F{c.ell}) >= {c.jump},  F{c.ell} = {_span(c.basis)} (dim {c.dim})")
    return Incidence(space.name, tuple(conds), "\n".join(lines))


def _quadric_incidence(space, aj) -> Incidence:
    n, a, J = space.rank, aj.a, aj.J
    if space.kind == "odd_quadric":
        (j,) = J
        if a == 0:
            basis, quadric = tuple(range(1, j + 1)), False
        else:
            basis, quadric = tuple(range(1, n + 2)) + tuple(range(n + j + 1, 2 * n + 2)), True
    else:
        if a == 0:
            if J == (n - 1, n):
                basis = tuple(range(1, n))
            elif J[0] in (n - 1, n):
                basis = tuple(range(1, n + 1))
            else:
                basis = tuple(range(1, J[0] + 1))
            quadric = False
        else:
            if J == (n - 1, n):
                basis = tuple(range(1, n + 2)) + (2 * n,)
            else:
                basis = tuple(range(1, n + 2)) + tuple(range(n + J[0] + 1, 2 * n + 1))
            quadric = True
    proj = len(basis) - 1
    if quadric:
        text = f"Q ∩ P{_span(basis)}, a quadric of dimension {proj - 1} in P^{proj}"
        dim = proj - 1
    else:
        text = f"P{_span(basis)} = P^{proj}"
        dim = proj
    return Incidence(space.name, (), text, dim)
