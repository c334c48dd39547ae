import itertools

import pytest
from hypothesis import given, settings, strategies as st

from schurflex.cominuscule import build_space
from schurflex.errors import ExtremalClassError, InvalidInput
from schurflex.invariants import AJInvariant, compute_aJ
from schurflex.translation import (
    GR,
    LG,
    MINUS,
    PLUS,
    SPINOR,
    PartitionIndex,
    aj_to_partition,
    blocks,
    class_to_partition,
    extremal_partitions,
    from_decreasing,
    incidence_description,
    lg_spinor_map,
    partition_dimension,
    partition_to_aj,
    partition_to_class,
    quadric_rigid,
    quadric_selector,
    rigid_by_partition,
    spinor_r,
    to_decreasing,
)
from schurflex.verification import grassmannians, lagrangians, partition_spaces, quadrics, spinors


def test_partition_to_aj_examples():
    assert partition_to_aj(PartitionIndex(GR, (5, 13), (3, 4, 7, 11, 12))) == AJInvariant(2, (2, 3, 7, 9, 12))
    assert partition_to_aj(PartitionIndex(LG, (5,), (1, 3, 5, 7, 9))) == AJInvariant(3, (1, 2, 3, 4))
    assert partition_to_aj(PartitionIndex(SPINOR, (6,), (1, 3, 5, 6, 9, 11))) == AJInvariant(2, (1, 2, 4, 5))


def test_aj_to_partition_examples():
    assert aj_to_partition(LG, (5,), AJInvariant(1, (3,))).parts == (3, 4, 5, 9, 10)
    assert aj_to_partition(SPINOR, (6,), AJInvariant(1, (4,))).parts == (3, 4, 5, 6, 11, 12)
    assert aj_to_partition(GR, (5, 13), AJInvariant(2, (2, 3, 7, 9, 12))).parts == (3, 4, 7, 11, 12)
    assert aj_to_partition(LG, (5,), AJInvariant(3, (1, 2, 3, 4))).parts == (1, 3, 5, 7, 9)
    assert aj_to_partition(SPINOR, (6,), AJInvariant(2, (1, 2, 4, 5))).parts == (1, 3, 5, 6, 9, 11)


def test_aj_to_partition_rejects_bad_shape():
    with pytest.raises(InvalidInput):
        aj_to_partition(LG, (5,), AJInvariant(0, (1, 2)))


@pytest.mark.parametrize(
    "family,params,parts,rule",
    [
        (GR, (2, 4), (1, 5), "1..4"),
        (GR, (2, 4), (2, 2), "strictly"),
        (GR, (2, 4), (1,), "exactly 2"),
        (LG, (5,), (1, 2, 3, 4, 10), "may not both occur"),
        (SPINOR, (6,), (1, 2, 3, 4, 5, 7), "even"),
        ("Xx", (3,), (1, 2, 3), "unknown"),
    ],
)
def test_invalid_partitions_name_the_rule(family, params, parts, rule):
    with pytest.raises(InvalidInput, match=rule):
        PartitionIndex(family, params, parts)


def test_extremal_partitions_have_no_aj():
    with pytest.raises(ExtremalClassError):
        partition_to_aj(PartitionIndex(LG, (5,), (6, 7, 8, 9, 10)))
    # odd spinor: the top partition has to use n instead of n+1
    assert extremal_partitions(SPINOR, (5,)) == ((1, 2, 3, 4, 5), (5, 7, 8, 9, 10))
    assert extremal_partitions(SPINOR, (6,)) == ((1, 2, 3, 4, 5, 6), (7, 8, 9, 10, 11, 12))


def test_rigid_by_partition_examples():
    assert not rigid_by_partition(PartitionIndex(GR, (5, 13), (3, 4, 7, 11, 12)))
    assert rigid_by_partition(PartitionIndex(LG, (5,), (1, 2, 3, 6, 7)))
    assert rigid_by_partition(PartitionIndex(SPINOR, (6,), (2, 3, 4, 5, 7, 12)))
    assert not rigid_by_partition(PartitionIndex(GR, (2, 4), (2, 4)))


def test_quadric_rigid_examples():
    assert not quadric_rigid("odd", 5, 4)
    assert quadric_rigid("even", 4, 4, PLUS) and quadric_rigid("even", 4, 4, MINUS)
    assert quadric_rigid("even", 4, 0)
    assert quadric_rigid("odd", 5, 9) and not quadric_rigid("even", 4, 3)
    with pytest.raises(InvalidInput):
        quadric_rigid("odd", 5, 10)
    with pytest.raises(InvalidInput):
        quadric_rigid("odd", 5, 4, PLUS)
    with pytest.raises(InvalidInput):
        quadric_rigid("twisted", 5, 4)


def test_quadric_branch_tags(poset):
    P = poset("D", 5, 1)
    mids = [c for c in P.classes if c.dim == 4]
    tags = sorted(quadric_selector(P.space, c)[1] for c in mids)
    assert len(mids) == 2 and tags == sorted([PLUS, MINUS])
    plus = next(c for c in mids if quadric_selector(P.space, c)[1] == PLUS)
    assert plus.roots == min(c.roots for c in mids)


def test_lg_spinor_examples():
    sp = lambda parts: PartitionIndex(SPINOR, (6,), parts)
    assert lg_spinor_map(sp((2, 3, 4, 5, 7, 12))).parts == (2, 3, 4, 5, 10)
    assert lg_spinor_map(sp((1, 2, 3, 4, 5, 6))).parts == (1, 2, 3, 4, 5)
    assert lg_spinor_map(sp((7, 8, 9, 10, 11, 12))).parts == (6, 7, 8, 9, 10)
    with pytest.raises(InvalidInput):
        lg_spinor_map(PartitionIndex(LG, (5,), (1, 2, 3, 4, 5)))


def test_spinor_blocks_examples():
    sp = lambda parts: PartitionIndex(SPINOR, (5,), parts)
    assert blocks(sp((2, 3, 4, 6, 10))) == [[2, 3, 4, 6], [10]]
    assert blocks(sp((1, 2, 5, 7, 8))) == [[1, 2], [5, 7, 8]]


def test_spinor_r_matches_table_row():
    assert spinor_r(PartitionIndex(SPINOR, (6,), (2, 3, 4, 5, 7, 12))) == 1


def test_decreasing_convention():
    p = PartitionIndex(GR, (5, 13), (3, 4, 7, 11, 12))
    assert to_decreasing(p) == (7, 7, 4, 2, 2)
    assert from_decreasing(GR, (5, 13), (7, 7, 4, 2, 2)) == p
    q = PartitionIndex(LG, (5,), (2, 5, 7, 8, 10))
    assert to_decreasing(q) == (5, 3, 2)
    assert from_decreasing(LG, (5,), (5, 3, 2)) == q
    with pytest.raises(InvalidInput):
        from_decreasing(LG, (5,), (3, 3))
    with pytest.raises(InvalidInput):
        from_decreasing(GR, (2, 4), (1, 2))


@pytest.mark.parametrize("space_args", partition_spaces(), ids=lambda s: "-".join(map(str, s)))
def test_decreasing_round_trip(poset, space_args):
    P = poset(*space_args)
    for cls in P.classes:
        p = class_to_partition(P.space, cls)
        shape = to_decreasing(p)
        assert sum(shape) == cls.dim == partition_dimension(p)
        assert from_decreasing(p.family, p.params, shape) == p


def _all_partitions(family, params):
    if family == GR:
        i, top = params
        return [c for c in itertools.combinations(range(1, top + 1), i)]
    (n,) = params
    out = []
    for choice in itertools.product((0, 1), repeat=n):
        parts = tuple(sorted(x if c == 0 else 2 * n + 1 - x for x, c in zip(range(1, n + 1), choice)))
        if family == SPINOR and sum(1 for x in parts if x > n) % 2:
            continue
        out.append(parts)
    return out


def _params(space_args):
    fam, n, i = space_args
    return {"A": (GR, (i, n + 1)), "C": (LG, (n,)), "D": (SPINOR, (n,))}[fam]


@pytest.mark.parametrize("space_args", partition_spaces(), ids=lambda s: "-".join(map(str, s)))
def test_dictionary_exhaustive(poset, space_args):
    """Every valid partition round-trips and agrees with the stabilizer (a, J)."""
    P = poset(*space_args)
    space = P.space
    family, params = _params(space_args)
    parts_list = _all_partitions(family, params)
    assert len(parts_list) == len(P)
    seen = set()
    for parts in parts_list:
        p = PartitionIndex(family, params, parts)
        cls = partition_to_class(space, parts)
        seen.add(cls)
        assert class_to_partition(space, cls) == p
        assert cls.dim == partition_dimension(p)
        if not space.is_extremal(cls):
            aj = partition_to_aj(p)
            assert aj == compute_aJ(space, cls)
            assert aj_to_partition(family, params, aj) == p
    assert seen == set(P.classes)


@pytest.mark.parametrize("space_args", partition_spaces(), ids=lambda s: "-".join(map(str, s)))
def test_partition_criteria_agree_with_roots(poset, space_args):
    P = poset(*space_args)
    for cls, rep in zip(P.classes, P.reports):
        assert rigid_by_partition(class_to_partition(P.space, cls)) == rep.rigid


@pytest.mark.parametrize("space_args", quadrics(), ids=lambda s: "-".join(map(str, s)))
def test_quadric_criterion_agrees_with_roots(poset, space_args):
    P = poset(*space_args)
    parity = "odd" if space_args[0] == "B" else "even"
    m = space_args[1] if parity == "odd" else space_args[1] - 1
    rigid_dims = sorted({c.dim for c, r in zip(P.classes, P.reports) if r.rigid})
    expected = [0, 2 * m - 1] if parity == "odd" else [0, m, 2 * m]
    assert rigid_dims == expected
    for cls, rep in zip(P.classes, P.reports):
        assert quadric_rigid(parity, m, *quadric_selector(P.space, cls)) == rep.rigid


@pytest.mark.parametrize("n", range(2, 7))
def test_lg_spinor_bijection(poset, n):
    lg, sp = poset("C", n, n), poset("D", n + 1, n + 1)
    image = {}
    for k, cls in enumerate(sp.classes):
        p = class_to_partition(sp.space, cls)
        r = spinor_r(p)
        bl = blocks(p)
        assert set(bl[len(bl) - 1 - r]) & {n + 1, n + 2}
        q = lg_spinor_map(p)
        image[k] = lg.index[partition_to_class(lg.space, q.parts)]
        assert lg.reports[image[k]].rigid == sp.reports[k].rigid
    assert sorted(image.values()) == list(range(len(lg)))
    assert sorted((image[a], image[b]) for a, b in sp.covers) == sorted(lg.covers)


# ---- incidence descriptions


def test_incidence_gr_5_13():
    space = build_space("A", 12, 5)
    inc = incidence_description(space, partition_to_class(space, (3, 4, 7, 11, 12)))
    assert [c.dim for c in inc.conditions] == [0, 4, 7, 12]
    assert [c.jump for c in inc.conditions] == [0, 2, 3, 5]
    assert "dim(E ∩ F2) >= 2" in inc.text


def test_incidence_lg_5_10():
    space = build_space("C", 5)
    inc = incidence_description(space, partition_to_class(space, (2, 5, 7, 8, 10)))
    nontrivial = [c for c in inc.conditions if not c.trivial]
    assert [(c.ell, c.dim, c.jump) for c in nontrivial] == [(3, 2, 1), (2, 5, 2), (1, 8, 4)]
    assert nontrivial[0].basis == (1, 10)


def test_incidence_gr24_one_part():
    space = build_space("A", 3, 2)
    inc = incidence_description(space, partition_to_class(space, (1, 4)))
    nontrivial = [c for c in inc.conditions if not c.trivial]
    assert len(nontrivial) == 1
    assert (nontrivial[0].dim, nontrivial[0].jump) == (1, 1)


def test_incidence_rejections():
    with pytest.raises(InvalidInput):
        incidence_description(build_space("E6"), build_space("E6").bottom)
    space = build_space("C", 3)
    with pytest.raises(ExtremalClassError):
        incidence_description(space, space.top)


@pytest.mark.parametrize("space_args", grassmannians(), ids=lambda s: "-".join(map(str, s)))
def test_gr_incidence_recovers_partition(poset, space_args):
    # oracle: a condition dim(E ∩ F) >= j forces dim(E ∩ F') >= j - (dim F - dim F') on
    # coordinate subspaces F' of F, so lambda_k = min over conditions with j >= k of dim F - j + k
    P = poset(*space_args)
    space = P.space
    i, ambient = space.node, space.rank + 1
    for cls in P.classes:
        if space.is_extremal(cls):
            continue
        conds = incidence_description(space, cls).conditions
        for a, b in zip(conds, conds[1:]):
            assert set(a.basis) <= set(b.basis) and a.jump <= b.jump
        pairs = [(c.dim, c.jump) for c in conds] + [(ambient, i)]
        lam = tuple(min(d - j + k for d, j in pairs if j >= k) for k in range(1, i + 1))
        assert lam == class_to_partition(space, cls).parts


@pytest.mark.parametrize("space_args", lagrangians() + spinors(), ids=lambda s: "-".join(map(str, s)))
def test_isotropic_incidence_flags(poset, space_args):
    P = poset(*space_args)
    n = space_args[1]
    for cls in P.classes:
        if P.space.is_extremal(cls):
            continue
        conds = incidence_description(P.space, cls).conditions
        for c in conds:
            s = set(c.basis)
            partner = lambda x: x + n if x <= n else x - n  # the form pairs e_a with e_{n+a}
            perp = {x for x in range(1, 2 * n + 1) if partner(x) not in s}
            assert s <= perp or perp <= s  # isotropic or coisotropic
        for a, b in zip(conds, conds[1:]):
            assert set(a.basis) <= set(b.basis) and a.jump <= b.jump


@pytest.mark.parametrize("space_args", quadrics(), ids=lambda s: "-".join(map(str, s)))
def test_quadric_incidence_dimension(poset, space_args):
    P = poset(*space_args)
    for cls in P.classes:
        if not P.space.is_extremal(cls):
            assert incidence_description(P.space, cls).dim == cls.dim


@given(st.integers(2, 7), st.data())
@settings(max_examples=80, deadline=None)
def test_gr_from_decreasing_random(n, data):
    i = data.draw(st.integers(1, n))
    shape = sorted(data.draw(st.lists(st.integers(0, n + 1 - i), min_size=i, max_size=i)), reverse=True)
    p = from_decreasing(GR, (i, n + 1), shape)
    assert to_decreasing(p) == tuple(shape)
    assert partition_dimension(p) == sum(shape)
