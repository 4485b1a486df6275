from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfext.core import convolution, unit_counit
from hopfext.groups import cyclic, group_algebra, symmetric3
from hopfext.linalg import (
    K,
    LinMap,
    ShapeError,
    VectorSpace,
    add,
    compose,
    identity,
    inverse,
    nullspace,
    rref,
    scale,
    solve,
    space,
    tensor_map,
    tensor_space,
    zero_map,
)
from hopfext.core import coinvariant_like_subspace
from hopfext.products import canonical_projection
from hopfext.scalars import QQ, PrimeField, ScalarError, parse_field

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
F7 = PrimeField(7)


def rand_map(draw_vals, n, m, field=QQ):
    return LinMap(space(m), space(n), np.array(draw_vals, dtype=object).reshape(n, m), field)


# scalars ------------------------------------------------------------------

@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    x, y, z = QQ(a), QQ(b), QQ(c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    if y:
        assert QQ.reduce(QQ.div(x, y) * y) == x


@given(st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(a, b, c):
    x, y, z = F7(a), F7(b), F7(c)
    assert F7.reduce((x + y) + z) == F7.reduce(x + (y + z))
    assert F7.reduce(x * (y + z)) == F7.reduce(x * y + x * z)
    assert 0 <= x < 7
    if y:
        assert F7.reduce(F7.div(x, y) * y) == x


def test_rational_canonical_form():
    v = QQ.parse("6/4")
    assert v == Fraction(3, 2) and v.denominator == 2
    assert QQ.parse("4/2") == 2 and type(QQ.parse("4/2")) is int


def test_division_by_zero_is_an_error():
    with pytest.raises(ScalarError):
        QQ.parse("1/0")
    with pytest.raises(ZeroDivisionError):
        QQ.inv(0)
    with pytest.raises(ZeroDivisionError):
        F7(Fraction(1, 14))


def test_field_specs():
    assert parse_field("rational") is QQ
    assert parse_field("mod:5").modulus == 5
    with pytest.raises(ScalarError):
        parse_field("mod:6")


# tensor spaces and maps ---------------------------------------------------

def test_tensor_dimensions():
    assert tensor_space(space(2), space(3)).dim == 6
    assert tensor_space(space(4), K).dim == 4


def test_tensor_order_is_row_major():
    V = group_algebra(cyclic(2)).space
    assert tensor_space(V, V).labels == ("(1,1)", "(1,g)", "(g,1)", "(g,g)")
    V3, W = space(3), space(4)
    VW = tensor_space(V3, W)
    for i in range(3):
        for j in range(4):
            assert VW.labels[i * 4 + j] == f"({V3.labels[i]},{W.labels[j]})"


def test_distinct_labels_required():
    with pytest.raises(ValueError):
        VectorSpace(("a", "a"))


def test_tensor_identity_and_counits():
    V = space(3)
    assert tensor_map(identity(V), identity(V)) == identity(tensor_space(V, V))
    eps = LinMap(V, K, np.array([[1, 1, 1]], dtype=object))
    ee = tensor_map(eps, eps)
    assert list(ee.matrix[0]) == [1] * 9


def test_coassociativity_of_kc2_entrywise(kc2):
    I = identity(kc2.space)
    lhs = compose(tensor_map(kc2.comult, I), kc2.comult)
    rhs = compose(tensor_map(I, kc2.comult), kc2.comult)
    assert (lhs.matrix == rhs.matrix).all()


@given(st.lists(rationals, min_size=9, max_size=9), st.lists(rationals, min_size=9, max_size=9))
def test_compose_matches_triple_loop(a, b):
    f, g = rand_map(a, 3, 3), rand_map(b, 3, 3)
    oracle = [[sum(Fraction(a[3 * i + k]) * Fraction(b[3 * k + j]) for k in range(3)) for j in range(3)]
              for i in range(3)]
    assert [[Fraction(v) for v in row] for row in compose(f, g).matrix.tolist()] == oracle


@given(st.lists(rationals, min_size=6, max_size=6))
def test_compose_add_scale_trivia(a):
    f = rand_map(a, 2, 3)
    assert compose(f, identity(f.domain)) == f
    assert add(f, scale(-1, f)).is_zero()


def test_shape_mismatch():
    with pytest.raises(ShapeError):
        compose(identity(space(2)), identity(space(3)))
    with pytest.raises(ShapeError):
        add(identity(space(2)), identity(space(3)))


# convolution --------------------------------------------------------------

@pytest.mark.parametrize("G", [cyclic(2), symmetric3()], ids=["C2", "S3"])
def test_convolution_unit_and_antipode(G):
    H = group_algebra(G)
    e = unit_counit(H)
    I = identity(H.space)
    assert convolution(e, I, H, H) == I
    assert convolution(H.antipode, I, H, H) == e
    # per basis element: S(g) g = 1
    for g in range(G.order):
        assert H.antipode.matrix[G.inv(g), g] == 1


def test_convolution_inverse_of_coalgebra_map(c2x_gamma):
    A, H, gamma = c2x_gamma.A, c2x_gamma.H, c2x_gamma.gamma
    ginv = compose(A.antipode, gamma)
    e = compose(A.unit, H.counit)
    assert convolution(gamma, ginv, H, A) == e
    assert convolution(ginv, gamma, H, A) == e


@settings(max_examples=25)
@given(st.lists(st.integers(-3, 3), min_size=12, max_size=12))
def test_convolution_associative(vals):
    H = group_algebra(cyclic(2))
    f = rand_map(vals[:4], 2, 2)
    g = rand_map(vals[4:8], 2, 2)
    h = rand_map(vals[8:], 2, 2)
    f, g, h = (m.with_spaces(H.space, H.space) for m in (f, g, h))
    assert convolution(convolution(f, g, H, H), h, H, H) == convolution(f, convolution(g, h, H, H), H, H)


# nullspace, rref, solve ---------------------------------------------------

def test_nullspace_trivia():
    assert nullspace(identity(space(3))).dim == 0
    N = nullspace(zero_map(space(3), space(2)))
    assert N.basis == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


matrices = st.integers(1, 4).flatmap(lambda n: st.integers(1, 4).flatmap(
    lambda m: st.lists(st.lists(st.integers(-3, 3), min_size=m, max_size=m), min_size=n, max_size=n)))


@given(matrices)
def test_nullspace_matches_sympy(rows):
    n, m = len(rows), len(rows[0])
    f = LinMap(space(m), space(n), np.array(rows, dtype=object))
    N = nullspace(f)
    oracle = sympy.Matrix(rows).nullspace()
    assert N.dim == len(oracle)
    if oracle:
        expected = sympy.Matrix.hstack(*oracle).T.rref()[0]
        got = [[Fraction(v) for v in r] for r in N.basis]
        assert got == [[Fraction(int(v.p), int(v.q)) for v in expected.row(i)] for i in range(len(oracle))]
    for v in N.basis:
        assert not any(f(list(v)))


@given(matrices)
def test_rref_fixed_point_and_sympy(rows):
    R, piv = rref(rows)
    assert rref(R) == (R, piv)
    M, opiv = sympy.Matrix(rows).rref()
    assert tuple(piv) == tuple(opiv)


@given(matrices)
def test_rref_mod_p_fixed_point(rows):
    R, piv = rref(rows, F7)
    assert rref(R, F7) == (R, piv)


@given(st.lists(st.integers(-4, 4), min_size=9, max_size=9))
def test_inverse_and_solve(vals):
    f = rand_map(vals, 3, 3)
    inv = inverse(f)
    det = sympy.Matrix(3, 3, vals).det()
    assert (inv is None) == (det == 0)
    if inv is not None:
        assert compose(f, inv) == identity(f.codomain)
        assert solve(f, identity(f.codomain)) == inv


def test_solve_reports_unsolvable():
    f = zero_map(space(2), space(2))
    assert solve(f, identity(space(2))) is None


def test_coinvariants_of_c2x_unified(c2x_datum, c2x_unified):
    A, H = c2x_datum.A, c2x_datum.H
    V = coinvariant_like_subspace(canonical_projection(A, H), c2x_unified, A)
    labels = c2x_unified.space.labels
    expected = [[1 if l == "(1,1)" else 0 for l in labels], [1 if l == "(1,x)" else 0 for l in labels]]
    assert V.dim == 2
    assert [list(r) for r in V.basis] == expected
