import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfext.core import check_coalgebra, check_hopf, is_algebra_map, is_coalgebra_map, ground_bialgebra
from hopfext.groups import (
    FiniteGroup,
    GroupError,
    PointedMagma,
    RightGSet,
    cyclic,
    enumerate_actions,
    group_algebra,
    group_by_name,
    grouplike_coalgebra,
    magma_bialgebra,
    piecewise_magma,
    small_groups,
    symmetric3,
    trivial_action,
    trivial_group,
    validate_gset,
)
from hopfext.linalg import LinMap, compose, identity, permutation_map, tensor_space


def swap(V):
    n = V.dim
    return permutation_map([j * n + i for i in range(n) for j in range(n)], tensor_space(V, V))


@pytest.mark.parametrize("G", small_groups(8), ids=lambda g: g.name)
def test_group_algebras_are_cocommutative_hopf(G):
    H = group_algebra(G)
    assert check_hopf(H).ok
    assert compose(swap(H.space), H.comult) == H.comult


def test_catalogue_orders():
    assert [g.order for g in small_groups(8)] == [1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]
    assert len({g.table for g in small_groups(8)}) == 14


def test_s3_noncommutative():
    H = group_algebra(symmetric3())
    assert H.dim == 6
    assert compose(H.mult, swap(H.space)) != H.mult


def test_c1_is_the_ground_field():
    H = group_algebra(trivial_group())
    k = ground_bialgebra()
    assert H.dim == 1
    for f, g in ((H.mult, k.mult), (H.comult, k.comult), (H.unit, k.unit), (H.counit, k.counit)):
        assert list(f.matrix.ravel()) == list(g.matrix.ravel())


def test_c2_antipode_identity():
    H = group_algebra(cyclic(2))
    assert H.antipode == identity(H.space)


def test_invalid_group_rejected():
    with pytest.raises(GroupError):
        FiniteGroup([[0, 1], [1, 1]])
    with pytest.raises(GroupError):
        PointedMagma([[1, 1], [1, 0]])
    with pytest.raises(KeyError):
        group_by_name("C9")


def test_piecewise_operation():
    X = piecewise_magma(2, ["1", "x"])
    assert X.op(1, 1) == 1
    assert all(X.op(x, y) == (x if y == 0 else y) for x in range(4) for y in range(4)
               for X in [piecewise_magma(4)])


@pytest.mark.parametrize("seed", range(5))
def test_random_magma_grouplike_coalgebra(seed):
    rng = random.Random(seed)
    n = 4
    table = [[x if y == 0 else (y if x == 0 else rng.randrange(n)) for y in range(n)] for x in range(n)]
    X = PointedMagma(table)
    C, alg = grouplike_coalgebra(X)
    assert check_coalgebra(C).ok
    assert not alg.assoc_required
    B = magma_bialgebra(X)
    k = ground_bialgebra()
    assert is_algebra_map(B.counit.with_spaces(B.space, k.space), B, k)
    from hopfext.core import tensor_bialgebra
    assert is_algebra_map(B.comult, B, tensor_bialgebra(B, B))


def test_trivial_action_valid():
    X, G = piecewise_magma(3), symmetric3()
    assert validate_gset(trivial_action(X, G), G).ok


def _brute_actions(X, G):
    n, m = X.size, G.order
    out = []
    for rows in itertools.product(itertools.product(range(n), repeat=m), repeat=n - 1):
        act = [[0] * m] + [list(r) for r in rows]
        if all(act[x][G.identity] == x for x in range(n)) and all(
                act[act[x][g]][h] == act[x][G.mul(g, h)] for x in range(n) for g in range(m) for h in range(m)):
            out.append(tuple(map(tuple, act)))
    return sorted(out)


@pytest.mark.parametrize("G", small_groups(4), ids=lambda g: g.name)
@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumerate_actions_matches_brute_force(G, n):
    X = piecewise_magma(n)
    assert [D.act for D in enumerate_actions(X, G)] == _brute_actions(X, G)


@pytest.mark.parametrize("G", small_groups(8), ids=lambda g: g.name)
def test_two_point_set_has_only_trivial_action(G):
    acts = enumerate_actions(piecewise_magma(2), G)
    assert len(acts) == 1 and acts[0].act == trivial_action(piecewise_magma(2), G).act


def test_invalid_action_witness():
    G = cyclic(3)
    X = piecewise_magma(3)
    # x1◁c1 = x2, x2◁c1 = x1 is an order-two permutation, impossible for C3
    act = [[0, 0, 0], [1, 2, 1], [2, 1, 2]]
    rep = validate_gset(RightGSet(X, act), G)
    res = rep["(x◁g)◁h = x◁(gh)"]
    assert not res.passed
    x, g, h = res.witness.indices
    assert act[act[x][g]][h] != act[x][G.mul(g, h)]


@given(st.lists(st.integers(0, 2), min_size=3, max_size=3), st.lists(st.integers(-2, 2), min_size=9, max_size=9),
       st.booleans())
def test_grouplike_coalgebra_maps_are_tables(table, noise, use_table):
    X, Y = piecewise_magma(3), piecewise_magma(3)
    CX, _ = grouplike_coalgebra(X)
    CY, _ = grouplike_coalgebra(Y)
    if use_table:
        cols = [{table[j]: 1} for j in range(3)]
    else:
        cols = [{i: noise[3 * j + i] for i in range(3)} for j in range(3)]
    f = LinMap.from_columns(CX.space, CY.space, cols)
    is_table = all(sorted(f.matrix[:, j].tolist()) == [0, 0, 1] for j in range(3))
    assert is_coalgebra_map(f, CX, CY) == is_table
