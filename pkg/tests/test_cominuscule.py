import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from schurflex.cominuscule import SchubertClass, build_space, degree, enumerate_classes
from schurflex.errors import InvalidInput
from schurflex.verification import all_spaces


@pytest.mark.parametrize(
    "space_args,dim",
    [(("A", 12, 5), 40), (("C", 5, 5), 15), (("D", 6, 6), 15), (("E6", 6, 6), 16), (("E7", 7, 7), 27), (("B", 5, 1), 9)],
)
def test_dimensions(space_args, dim):
    assert build_space(*space_args).dim == dim


@pytest.mark.parametrize("n", range(1, 8))
def test_dimension_formulas(n):
    for i in range(1, n + 1):
        assert build_space("A", n, i).dim == i * (n + 1 - i)
    if n >= 2:
        assert build_space("C", n).dim == n * (n + 1) // 2
    if n >= 3:
        assert build_space("D", n, n).dim == n * (n - 1) // 2


def test_names_and_defaults():
    assert build_space("A", 12, 5).name == "Gr(5,13)"
    assert build_space("C", 5).node == 5
    assert build_space("B", 4).name == "Q^7"
    assert build_space("D", 6, 1).name == "Q^10"
    assert build_space("E6").node == 6
    assert build_space("E7").node == 7


def test_non_cominuscule_node_rejected():
    with pytest.raises(InvalidInput):
        build_space("C", 5, 1)
    with pytest.raises(InvalidInput):
        build_space("E7", 7, 1)
    with pytest.raises(InvalidInput):
        build_space("A", 4)


@pytest.mark.parametrize(
    "space_args,count", [(("A", 3, 2), 6), (("C", 5, 5), 32), (("E6", 6, 6), 27), (("D", 6, 6), 32), (("E7", 7, 7), 56)]
)
def test_class_counts(poset, space_args, count):
    assert len(poset(*space_args)) == count


def test_gr24_shape(poset):
    P = poset("A", 3, 2)
    assert P.betti() == [1, 1, 2, 1, 1]
    assert len(P.covers) == 6


def test_deterministic_order(poset):
    P = poset("E6", 6, 6)
    assert [c.sort_key() for c in P.classes] == sorted(c.sort_key() for c in P.classes)
    again = enumerate_classes(build_space("E6"))
    assert again.classes == P.classes and again.covers == P.covers


def test_degree_examples(poset):
    e6, e7 = poset("E6", 6, 6), poset("E7", 7, 7)
    assert degree(e6, e6.bottom) == 1
    assert degree(e6, e6.top) == 78
    assert degree(e7, e7.top) == 13110
    # bottom chain of projective spaces
    assert all(e6.degrees[k] == 1 for k, c in enumerate(e6.classes) if c.dim <= 4)
    assert 2 in [e6.degrees[k] for k, c in enumerate(e6.classes) if c.dim == 8]
    assert sorted(e7.degrees[k] for k, c in enumerate(e7.classes) if c.dim == 8) == [2, 5]


def test_degree_is_chain_count(poset):
    # oracle: count maximal chains by brute-force path enumeration on a small poset
    P = poset("A", 5, 3)
    up = {k: [hi for lo, hi in P.covers if lo == k] for k in range(len(P))}

    def paths(k, target):
        return 1 if k == target else sum(paths(h, target) for h in up[k])

    for k in range(len(P)):
        assert P.degrees[k] == paths(0, k)
    # top of Gr(3,6): number of standard Young tableaux of the 3x3 square
    assert P.degrees[-1] == 42


def test_schubert_class_rejects_non_ideals():
    space = build_space("A", 3, 2)
    top_root = max(space.g1, key=sum)
    with pytest.raises(InvalidInput):
        space.schubert_class([top_root])


@pytest.mark.parametrize("space_args", all_spaces(), ids=lambda s: "-".join(map(str, s)))
def test_structure_every_space(poset, space_args):
    P = poset(*space_args)
    space = P.space
    assert P.bottom == SchubertClass(()) and P.top.set == space.g1_set
    b = P.betti()
    assert b == b[::-1]
    assert sum(b) == len(P)
    for lo, hi in P.covers:
        big, small = P.classes[hi].set, P.classes[lo].set
        assert small < big and len(big - small) == 1
    assert all(a[space.node - 1] in (0, 1) for a in space.sys.positive_roots)


# ---- ideal / closure equivalence, checked by an independent bitmask oracle


SMALL = [s for s in all_spaces() if build_space(*s).dim <= 16]


def _oracle_masks(space):
    """Boolean arrays over all subsets of Delta(g1): (is lower ideal, complement closed)."""
    g1 = list(space.g1)
    pos = list(space.sys.positive_roots)
    idx = {r: k for k, r in enumerate(g1)}
    n = len(g1)
    subsets = np.arange(1 << n, dtype=np.int64)
    bit = lambda k: (subsets >> k) & 1

    ideal = np.ones(1 << n, dtype=bool)
    for a, b in itertools.permutations(g1, 2):
        d = tuple(y - x for x, y in zip(a, b))
        if all(c >= 0 for c in d):  # a <= b
            ideal &= ~((bit(idx[b]) == 1) & (bit(idx[a]) == 0))

    member = lambda r: bit(idx[r]) == 1 if r in idx else np.zeros(1 << n, dtype=bool)
    closed = np.ones(1 << n, dtype=bool)
    roots = set(pos)
    for a, b in itertools.combinations_with_replacement(pos, 2):
        s = tuple(x + y for x, y in zip(a, b))
        if s in roots:
            out_a, out_b = ~member(a), ~member(b)
            closed &= ~(out_a & out_b & member(s))
    return ideal, closed


@pytest.mark.parametrize("space_args", SMALL, ids=lambda s: "-".join(map(str, s)))
def test_ideal_iff_complement_closed_exhaustive(poset, space_args):
    P = poset(*space_args)
    space = P.space
    ideal, closed = _oracle_masks(space)
    assert np.array_equal(ideal, closed)
    idx = {r: k for k, r in enumerate(space.g1)}
    enumerated = sorted(sum(1 << idx[r] for r in c.roots) for c in P.classes)
    assert enumerated == np.flatnonzero(ideal).tolist()


@given(st.sampled_from([("E7", 7, 7), ("A", 7, 4), ("C", 6, 6), ("D", 7, 7)]), st.data())
@settings(max_examples=300, deadline=None)
def test_ideal_iff_complement_closed_sampled(space_args, data):
    space = build_space(*space_args)
    g1 = list(space.g1)
    if data.draw(st.booleans()):
        picked = data.draw(st.sets(st.sampled_from(g1)))
    else:
        # sample near an ideal so both outcomes are exercised
        cut = data.draw(st.integers(0, len(g1)))
        picked = set(sorted(g1, key=sum)[:cut])
    assert space.is_ideal(picked) == space.complement_closed(picked)
