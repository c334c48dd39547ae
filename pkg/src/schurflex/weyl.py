"""Weyl group elements as words in simple reflections.

A word ``(j1, j2, ..., jk)`` stands for ``r_{j1} r_{j2} ... r_{jk}`` and acts
right to left.  Elements are identified by their inversion sets
``Delta(w) = {a > 0 : w^{-1}(a) < 0}``; words are only a way to realize them.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .errors import ConsistencyError, InvalidInput
from .rootsys import Root, RootSystem, is_positive, negate, reflect

Word = tuple  # tuple[int, ...]


def act(sys: RootSystem, word: Sequence[int], root: Sequence[int]) -> Root:
    out = tuple(root)
    for j in reversed(word):
        out = reflect(sys, j, out)
    return out


def inverse(word: Sequence[int]) -> Word:
    return tuple(reversed(word))


def inversion_set(sys: RootSystem, word: Sequence[int]) -> frozenset:
    inv = inverse(word)
    return frozenset(a for a in sys.positive_roots if not is_positive(act(sys, inv, a)))


def closure_violation(sys: RootSystem, roots: Iterable[Root]) -> Optional[tuple]:
    """First ``(a, b)`` with ``a, b`` in ``roots`` and ``a + b`` a root outside it, else ``None``."""
    pool = sorted(set(tuple(r) for r in roots))
    members = set(pool)
    if all(is_positive(r) for r in pool):
        for a, b, s in sys.addition_triples:
            if a in members and b in members and s not in members:
                return a, b
        return None
    for x, a in enumerate(pool):
        for b in pool[x:]:
            s = tuple(u + v for u, v in zip(a, b))
            if s in sys.roots and s not in members:
                return a, b
    return None


def word_from_inversions(sys: RootSystem, roots: Iterable[Root]) -> Word:
    """A reduced word whose inversion set is ``roots``.

    Peels off the lowest-index simple root in the set, reflects the rest and
    recurses.  Raises :class:`InvalidInput` with a witness pair if the set is
    not an inversion set.
    """
    phi = frozenset(tuple(r) for r in roots)
    bad = [r for r in phi if r not in sys.positive_roots]
    if bad:
        raise InvalidInput(f"not positive roots: {sorted(bad)}")
    witness = closure_violation(sys, phi)
    if witness is not None:
        raise InvalidInput(f"set is not closed: {witness[0]} + {witness[1]} is a root outside it")
    witness = closure_violation(sys, set(sys.positive_roots) - phi)
    if witness is not None:
        raise InvalidInput(f"complement is not closed: {witness[0]} + {witness[1]} is a root inside the set")

    letters = []
    current = set(phi)
    while current:
        j = next((j for j in range(1, sys.rank + 1) if sys.simple_root(j) in current), None)
        if j is None:
            raise InvalidInput("no simple root in the remaining set; not an inversion set")
        letters.append(j)
        current.discard(sys.simple_root(j))
        current = {reflect(sys, j, a) for a in current}
    word = tuple(letters)
    if inversion_set(sys, word) != phi:
        raise InvalidInput("peeling did not reproduce the set; not an inversion set")
    return word


def longest_element(sys: RootSystem, support: Iterable[int]) -> Word:
    """Longest element of the parabolic subgroup generated by ``r_j``, ``j`` in ``support``."""
    return _longest(sys, frozenset(support))


@lru_cache(maxsize=256)
def _longest(sys: RootSystem, support: frozenset) -> Word:
    if not support:
        raise InvalidInput("support must be non-empty")
    if not support <= set(range(1, sys.rank + 1)):
        raise InvalidInput(f"support {sorted(support)} outside 1..{sys.rank}")
    outside = [k for k in range(sys.rank) if k + 1 not in support]
    phi = [a for a in sys.positive_roots if all(a[k] == 0 for k in outside)]
    return word_from_inversions(sys, phi)


def reflection_word(sys: RootSystem, root: Sequence[int]) -> Word:
    """A word for the reflection ``r_root`` (not necessarily reduced).

    Walks ``root`` down to a simple root ``alpha_j = u^{-1}(root)`` and returns
    ``u r_j u^{-1}``.
    """
    gamma = tuple(root)
    if not is_positive(gamma):
        gamma = negate(gamma)
    if gamma not in sys.positive_roots:
        raise InvalidInput(f"{root} is not a root")
    path = []
    while sum(gamma) > 1:
        j = next(j for j in range(1, sys.rank + 1) if sys.pairing(gamma, j) > 0)
        path.append(j)
        gamma = reflect(sys, j, gamma)
    j = gamma.index(1) + 1
    return tuple(path) + (j,) + inverse(path)


def coset_minimal_inversions(sys: RootSystem, node: int, inv: Iterable[Root]) -> frozenset:
    """Inversion set of the minimal representative of ``W_P u`` given ``Delta(u)``.

    ``W_P`` is generated by the simple reflections other than ``node``.  Uses
    ``Delta(r_j u) = r_j(Delta(u) minus alpha_j)`` whenever ``alpha_j`` is in ``Delta(u)``.
    """
    current = set(inv)
    while True:
        j = next(
            (j for j in range(1, sys.rank + 1) if j != node and sys.simple_root(j) in current),
            None,
        )
        if j is None:
            return frozenset(current)
        current.discard(sys.simple_root(j))
        current = {reflect(sys, j, a) for a in current}


def dual_candidates(space, cls) -> dict:
    """The dual ideal of ``cls`` computed two independent ways.

    ``"word"``: the ``W^p`` content of ``w0P w w0`` from reduced words.
    ``"levi"``: ``w0P`` applied to the complement of ``Delta(w)`` in ``Delta(g1)``;
    ``w0P`` reverses the order on ``Delta(g1)``, turning the complementary
    upper set into a lower one.
    """
    sys = space.sys
    w = word_from_inversions(sys, cls.roots)
    w0 = longest_element(sys, range(1, sys.rank + 1))
    levi = [j for j in range(1, sys.rank + 1) if j != space.node]
    w0p = longest_element(sys, levi) if levi else ()
    word = coset_minimal_inversions(sys, space.node, inversion_set(sys, w0p + w + w0))
    rest = space.g1_set - frozenset(cls.roots)
    return {"word": word, "levi": frozenset(act(sys, w0p, a) for a in rest)}


def poincare_dual(space, cls):
    """The class ``w*`` whose Schubert class is Poincare dual to that of ``cls``.

    Raises :class:`ConsistencyError` if the two routes of
    :func:`dual_candidates` disagree or miss the complementary dimension.
    """
    from .cominuscule import SchubertClass

    cands = dual_candidates(space, cls)
    if cands["word"] != cands["levi"]:
        raise ConsistencyError(f"dual routes disagree for {cls}: {cands}")
    out = cands["word"]
    if len(out) != space.dim - cls.dim or not out <= space.g1_set:
        raise ConsistencyError(f"dual of {cls} has dimension {len(out)}, expected {space.dim - cls.dim}")
    return SchubertClass.of(out)
