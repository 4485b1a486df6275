"""Algebras, coalgebras, bialgebras and Hopf algebras by structure constants.

Structure maps are :class:`~hopfext.linalg.LinMap` objects; the unit is the
map ``k -> V`` and the counit the map ``V -> k``.  Every checker evaluates
both sides of an axiom on all basis tuples and records the first failing
tuple as a witness.
"""
from __future__ import annotations

from dataclasses import dataclass

from .legs import Tensor
from .linalg import (
    K,
    LinMap,
    ShapeError,
    Subspace,
    VectorSpace,
    compose,
    functional,
    identity,
    nullspace,
    tensor_map,
    tensor_space,
    vector_map,
)
from .report import AxiomResult, VerificationReport, Witness, compare
from .scalars import QQ, Field


class AxiomError(ValueError):
    """An operation refused its input; ``report`` says which axiom failed."""

    def __init__(self, message: str, report: VerificationReport | None = None):
        super().__init__(message if report is None else f"{message}\n{report.format()}")
        self.report = report


@dataclass(frozen=True, eq=False)
class FinAlgebra:
    space: VectorSpace
    mult: LinMap
    unit: LinMap
    # H in an extending datum is only unital; associativity is then reported, not required
    assoc_required: bool = True

    def __post_init__(self):
        V = self.space
        if self.mult.domain.dim != V.dim ** 2 or self.mult.codomain.dim != V.dim:
            raise ShapeError("multiplication must be V (x) V -> V")
        if self.unit.domain.dim != 1 or self.unit.codomain.dim != V.dim:
            raise ShapeError("unit must be k -> V")

    @property
    def field(self) -> Field:
        return self.mult.field

    @property
    def unit_vector(self) -> list:
        return list(self.unit.matrix[:, 0])


@dataclass(frozen=True, eq=False)
class FinCoalgebra:
    space: VectorSpace
    comult: LinMap
    counit: LinMap

    def __post_init__(self):
        V = self.space
        if self.comult.domain.dim != V.dim or self.comult.codomain.dim != V.dim ** 2:
            raise ShapeError("comultiplication must be V -> V (x) V")
        if self.counit.codomain.dim != 1 or self.counit.domain.dim != V.dim:
            raise ShapeError("counit must be V -> k")

    @property
    def field(self) -> Field:
        return self.comult.field


@dataclass(frozen=True, eq=False)
class FinBialgebra:
    """An algebra and a coalgebra on the same space, plus an optional antipode.

    Nothing is verified on construction; use :func:`check_bialgebra`.
    """

    algebra: FinAlgebra
    coalgebra: FinCoalgebra
    antipode: LinMap | None = None
    name: str = ""

    def __post_init__(self):
        if self.algebra.space.dim != self.coalgebra.space.dim:
            raise ShapeError("algebra and coalgebra live on different spaces")

    space = property(lambda self: self.algebra.space)
    mult = property(lambda self: self.algebra.mult)
    unit = property(lambda self: self.algebra.unit)
    comult = property(lambda self: self.coalgebra.comult)
    counit = property(lambda self: self.coalgebra.counit)
    field = property(lambda self: self.algebra.field)
    dim = property(lambda self: self.algebra.space.dim)

    @property
    def unit_vector(self) -> list:
        return self.algebra.unit_vector

    def with_antipode(self, S: LinMap) -> "HopfAlgebra":
        return HopfAlgebra(self.algebra, self.coalgebra, S, self.name)

    def __repr__(self):
        kind = type(self).__name__
        return f"{kind}({self.name or '?'}, dim={self.dim})"


class HopfAlgebra(FinBialgebra):
    def __post_init__(self):
        super().__post_init__()
        if self.antipode is None:
            raise ValueError("a HopfAlgebra needs an antipode")


def make_bialgebra(space: VectorSpace, mult: LinMap, unit: LinMap, comult: LinMap, counit: LinMap,
                   antipode: LinMap | None = None, assoc_required: bool = True,
                   name: str = "") -> FinBialgebra:
    alg = FinAlgebra(space, mult.with_spaces(tensor_space(space, space), space),
                     unit.with_spaces(K, space), assoc_required)
    coalg = FinCoalgebra(space, comult.with_spaces(space, tensor_space(space, space)),
                         counit.with_spaces(space, K))
    cls = HopfAlgebra if antipode is not None else FinBialgebra
    S = antipode.with_spaces(space, space) if antipode is not None else None
    return cls(alg, coalg, S, name)


# ---------------------------------------------------------------------------
# axiom checkers

def _report(title: str) -> VerificationReport:
    return VerificationReport(title)


def check_algebra(A: FinAlgebra | FinBialgebra) -> VerificationReport:
    alg = A.algebra if isinstance(A, FinBialgebra) else A
    V, m, u, F = alg.space, alg.mult, alg.unit, alg.field
    rep = _report("algebra")
    t = Tensor.grid(F, x=V)
    lhs = t.insert("u", u).mul(m, "u", "x", "o")
    rep.add(compare("unit left: 1x = x", lhs, t.rename("x", "o"), ["o"], [V], [V]))
    lhs = t.insert("u", u).mul(m, "x", "u", "o")
    rep.add(compare("unit right: x1 = x", lhs, t.rename("x", "o"), ["o"], [V], [V]))
    t3 = Tensor.grid(F, x=V, y=V, z=V)
    lhs = t3.mul(m, "x", "y", "xy").mul(m, "xy", "z", "o")
    rhs = t3.mul(m, "y", "z", "yz").mul(m, "x", "yz", "o")
    rep.add(compare("associativity: (xy)z = x(yz)", lhs, rhs, ["o"], [V] * 3, [V],
                    required=alg.assoc_required))
    return rep


def check_coalgebra(C: FinCoalgebra | FinBialgebra) -> VerificationReport:
    co = C.coalgebra if isinstance(C, FinBialgebra) else C
    V, d, e, F = co.space, co.comult, co.counit, co.field
    rep = _report("coalgebra")
    t = Tensor.grid(F, x=V).apply(d, ["x"], ["a", "b"])
    lhs = t.apply(d, ["a"], ["a1", "a2"])
    rhs = t.apply(d, ["b"], ["b1", "b2"])
    rep.add(compare("coassociativity", lhs, rhs, ["a1", "a2", "b"], [V], [V] * 3,
                    rhs_outs=["a", "b1", "b2"]))
    rep.add(compare("counit left: (ε⊗id)Δ = id", t.apply(e, ["a"], []), Tensor.grid(F, x=V).rename("x", "b"),
                    ["b"], [V], [V]))
    rep.add(compare("counit right: (id⊗ε)Δ = id", t.apply(e, ["b"], []), Tensor.grid(F, x=V).rename("x", "a"),
                    ["a"], [V], [V]))
    return rep


def _compat_checks(B: FinBialgebra) -> VerificationReport:
    V, m, u, d, e, F = B.space, B.mult, B.unit, B.comult, B.counit, B.field
    rep = _report("bialgebra compatibility")
    t = Tensor.grid(F, x=V, y=V)
    lhs = t.mul(m, "x", "y", "p").apply(d, ["p"], ["p1", "p2"])
    rhs = (t.apply(d, ["x"], ["x1", "x2"]).apply(d, ["y"], ["y1", "y2"])
           .mul(m, "x1", "y1", "p1").mul(m, "x2", "y2", "p2"))
    rep.add(compare("Δ multiplicative", lhs, rhs, ["p1", "p2"], [V, V], [V, V]))
    t0 = Tensor.grid(F)
    lhs = t0.insert("u", u).apply(d, ["u"], ["u1", "u2"])
    rhs = t0.insert("u1", u).insert("u2", u)
    rep.add(compare("Δ(1) = 1⊗1", lhs, rhs, ["u1", "u2"], [], [V, V]))
    lhs = t.mul(m, "x", "y", "p").apply(e, ["p"], [])
    rhs = t.apply(e, ["x"], []).apply(e, ["y"], [])
    rep.add(compare("ε multiplicative", lhs, rhs, [], [V, V], []))
    lhs = t0.insert("u", u).apply(e, ["u"], [])
    rep.add(compare("ε(1) = 1", lhs, t0, [], [], []))
    return rep


def check_bialgebra(B: FinBialgebra) -> VerificationReport:
    rep = _report("bialgebra")
    rep.extend(check_algebra(B))
    rep.extend(check_coalgebra(B))
    rep.extend(_compat_checks(B))
    return rep


def unit_counit(B: FinBialgebra) -> LinMap:
    """The convolution unit ``η o ε``."""
    return compose(B.unit, B.counit)


def _convolution_tensor(f: LinMap, g: LinMap, comult: LinMap, mult: LinMap, C: VectorSpace) -> Tensor:
    return (Tensor.grid(f.field, x=C).apply(comult, ["x"], ["a", "b"])
            .apply(f, ["a"], ["fa"]).apply(g, ["b"], ["gb"]).mul(mult, "fa", "gb", "o"))


def convolution(f: LinMap, g: LinMap, C, A) -> LinMap:
    """``f * g = μ_A o (f ⊗ g) o Δ_C``.

    ``C`` supplies ``comult`` and ``A`` supplies ``mult``; either may be any
    of the structure classes.
    """
    Cs = C.space
    As = A.space
    if f.domain.dim != Cs.dim or g.domain.dim != Cs.dim:
        raise ShapeError("convolution factors must be defined on the coalgebra")
    if f.codomain.dim != As.dim or g.codomain.dim != As.dim:
        raise ShapeError("convolution factors must land in the algebra")
    t = _convolution_tensor(f, g, C.comult, A.mult, Cs)
    return t.to_map(Cs, As, ["o"])


def check_hopf(H: FinBialgebra) -> VerificationReport:
    rep = _report("Hopf algebra")
    rep.extend(check_bialgebra(H))
    S = H.antipode
    if S is None:
        rep.add(AxiomResult("antipode present", False, Witness((), (), "None", "S")))
        return rep
    V, F = H.space, H.field
    eta_eps = Tensor.grid(F, x=V).apply(H.counit, ["x"], []).insert("o", H.unit)
    I = identity(V, F)
    rep.add(compare("S*id = ηε", _convolution_tensor(S, I, H.comult, H.mult, V), eta_eps, ["o"], [V], [V]))
    rep.add(compare("id*S = ηε", _convolution_tensor(I, S, H.comult, H.mult, V), eta_eps, ["o"], [V], [V]))
    return rep


def solve_antipode(B: FinBialgebra) -> LinMap | None:
    """Convolution inverse of the identity, or ``None`` if it does not exist.

    ``End(B)`` under convolution is a finite-dimensional associative algebra,
    so ``id`` is invertible iff its minimal polynomial has a nonzero constant
    term.  The minimal polynomial is found from the Krylov sequence
    ``(ηε, id, id*id, ...)``.  The result is re-verified on both sides.
    Assumes ``B`` passes :func:`check_bialgebra`.
    """
    F, V = B.field, B.space
    n = V.dim
    I = identity(V, F)
    powers = [unit_counit(B)]
    echelon: list[tuple[list, int, dict]] = []  # (row with unit pivot, pivot, combination)
    nterms = n * n + 2
    for k in range(nterms):
        if k > 0:
            powers.append(convolution(powers[-1], I, B, B))
        vec = list(powers[k].matrix.flat)
        comb = {k: F.one}
        for row, piv, rc in echelon:
            c = vec[piv]
            if c:
                vec = [F.reduce(x - c * y) for x, y in zip(vec, row)]
                for j, v in rc.items():
                    comb[j] = F.reduce(comb.get(j, 0) - c * v)
        nz = next((i for i, x in enumerate(vec) if x), None)
        if nz is None:
            # sum_j comb[j] P_j = 0 with comb[k] = 1, i.e. P_k = sum_{j<k} c_j P_j
            c = {j: F.reduce(-v) for j, v in comb.items() if j != k}
            c0 = c.get(0, 0)
            if not F.reduce(c0):
                return None
            acc = powers[k - 1].matrix
            for j in range(1, k):
                if c.get(j):
                    acc = acc - powers[j - 1].matrix * c[j]
            S = LinMap(V, V, acc * F.inv(c0), F)
            if convolution(S, I, B, B) != powers[0] or convolution(I, S, B, B) != powers[0]:
                return None
            return S
        inv = F.inv(vec[nz])
        vec = [F.reduce(x * inv) for x in vec]
        comb = {j: F.reduce(v * inv) for j, v in comb.items()}
        # keep existing rows reduced against the new pivot
        new_echelon = []
        for row, piv, rc in echelon:
            c = row[nz]
            if c:
                row = [F.reduce(x - c * y) for x, y in zip(row, vec)]
                rc = dict(rc)
                for j, v in comb.items():
                    rc[j] = F.reduce(rc.get(j, 0) - c * v)
            new_echelon.append((row, piv, rc))
        echelon = new_echelon + [(vec, nz, comb)]
    return None


# ---------------------------------------------------------------------------
# tensor products and the ground bialgebra

def tensor_algebra(A: FinAlgebra, B: FinAlgebra) -> FinAlgebra:
    """``(a⊗b)(c⊗d) = ac⊗bd``."""
    V = tensor_space(A.space, B.space)
    F = A.field
    t = Tensor.grid(F, a=A.space, b=B.space, c=A.space, d=B.space)
    t = t.mul(A.mult, "a", "c", "x").mul(B.mult, "b", "d", "y")
    mult = t.to_map(tensor_space(V, V), V, ["x", "y"])
    unit = Tensor.grid(F).insert("x", A.unit).insert("y", B.unit).to_map(K, V, ["x", "y"])
    return FinAlgebra(V, mult, unit, A.assoc_required and B.assoc_required)


def tensor_coalgebra(C: FinCoalgebra, D: FinCoalgebra) -> FinCoalgebra:
    """``Δ(c⊗d) = c(1)⊗d(1) ⊗ c(2)⊗d(2)``."""
    V = tensor_space(C.space, D.space)
    F = C.field
    t = Tensor.grid(F, c=C.space, d=D.space).apply(C.comult, ["c"], ["c1", "c2"]).apply(D.comult, ["d"], ["d1", "d2"])
    comult = t.to_map(V, tensor_space(V, V), ["c1", "d1", "c2", "d2"])
    counit = tensor_map(C.counit, D.counit).with_spaces(V, K)
    return FinCoalgebra(V, comult, counit)


def tensor_bialgebra(A: FinBialgebra, B: FinBialgebra, name: str = "") -> FinBialgebra:
    alg = tensor_algebra(A.algebra, B.algebra)
    coalg = tensor_coalgebra(A.coalgebra, B.coalgebra)
    S = None
    if A.antipode is not None and B.antipode is not None:
        S = tensor_map(A.antipode, B.antipode)
    cls = HopfAlgebra if S is not None else FinBialgebra
    return cls(alg, coalg, S, name or f"{A.name}⊗{B.name}")


def ground_bialgebra(field: Field = QQ) -> HopfAlgebra:
    one = identity(K, field)
    V1 = VectorSpace(("1",))
    return make_bialgebra(V1, LinMap(tensor_space(V1, V1), V1, [[field.one]], field),
                          LinMap(K, V1, [[field.one]], field),
                          LinMap(V1, tensor_space(V1, V1), [[field.one]], field),
                          LinMap(V1, K, [[field.one]], field),
                          antipode=one.with_spaces(V1, V1), name="k")


# ---------------------------------------------------------------------------
# morphism predicates

def check_algebra_map(phi: LinMap, A, B) -> VerificationReport:
    """``φ(xy) = φ(x)φ(y)`` and ``φ(1) = 1``."""
    F = phi.field
    V, W = A.space, B.space
    rep = _report("algebra map")
    t = Tensor.grid(F, x=V, y=V)
    lhs = t.mul(A.mult, "x", "y", "p").apply(phi, ["p"], ["o"])
    rhs = t.apply(phi, ["x"], ["fx"]).apply(phi, ["y"], ["fy"]).mul(B.mult, "fx", "fy", "o")
    rep.add(compare("φ multiplicative", lhs, rhs, ["o"], [V, V], [W]))
    t0 = Tensor.grid(F)
    rep.add(compare("φ(1) = 1", t0.insert("u", A.unit).apply(phi, ["u"], ["o"]), t0.insert("o", B.unit),
                    ["o"], [], [W]))
    return rep


def check_coalgebra_map(phi: LinMap, C, D) -> VerificationReport:
    """``(φ⊗φ)Δ = Δφ`` and ``εφ = ε``."""
    F = phi.field
    V, W = C.space, D.space
    rep = _report("coalgebra map")
    t = Tensor.grid(F, x=V)
    lhs = t.apply(C.comult, ["x"], ["a", "b"]).apply(phi, ["a"], ["o1"]).apply(phi, ["b"], ["o2"])
    rhs = t.apply(phi, ["x"], ["y"]).apply(D.comult, ["y"], ["o1", "o2"])
    rep.add(compare("φ comultiplicative", lhs, rhs, ["o1", "o2"], [V], [W, W]))
    rep.add(compare("ε φ = ε", t.apply(phi, ["x"], ["y"]).apply(D.counit, ["y"], []),
                    t.apply(C.counit, ["x"], []), [], [V], []))
    return rep


def check_bialgebra_map(phi: LinMap, A, B) -> VerificationReport:
    rep = _report("bialgebra map")
    rep.extend(check_algebra_map(phi, A, B))
    rep.extend(check_coalgebra_map(phi, A, B))
    return rep


def check_left_module_map(phi: LinMap, act_src: LinMap, act_dst: LinMap) -> VerificationReport:
    """``φ(a·x) = a·φ(x)`` for actions ``A⊗M -> M`` and ``A⊗N -> N``."""
    F = phi.field
    Adim = act_src.domain.dim // phi.domain.dim
    Asp = VectorSpace(tuple(f"a{i}" for i in range(Adim)))
    rep = _report("left module map")
    t = Tensor.grid(F, a=Asp, x=phi.domain)
    lhs = t.apply(act_src, ["a", "x"], ["y"]).apply(phi, ["y"], ["o"])
    rhs = t.apply(phi, ["x"], ["fx"]).apply(act_dst, ["a", "fx"], ["o"])
    rep.add(compare("φ(a·x) = a·φ(x)", lhs, rhs, ["o"], [Asp, phi.domain], [phi.codomain]))
    return rep


def check_right_module_map(phi: LinMap, act_src: LinMap, act_dst: LinMap) -> VerificationReport:
    """``φ(x·a) = φ(x)·a`` for actions ``M⊗A -> M`` and ``N⊗A -> N``."""
    F = phi.field
    Adim = act_src.domain.dim // phi.domain.dim
    Asp = VectorSpace(tuple(f"a{i}" for i in range(Adim)))
    rep = _report("right module map")
    t = Tensor.grid(F, x=phi.domain, a=Asp)
    lhs = t.apply(act_src, ["x", "a"], ["y"]).apply(phi, ["y"], ["o"])
    rhs = t.apply(phi, ["x"], ["fx"]).apply(act_dst, ["fx", "a"], ["o"])
    rep.add(compare("φ(x·a) = φ(x)·a", lhs, rhs, ["o"], [phi.domain, Asp], [phi.codomain]))
    return rep


def is_algebra_map(phi: LinMap, A, B) -> bool:
    return check_algebra_map(phi, A, B).ok


def is_coalgebra_map(phi: LinMap, C, D) -> bool:
    return check_coalgebra_map(phi, C, D).ok


def is_bialgebra_map(phi: LinMap, A, B) -> bool:
    return check_bialgebra_map(phi, A, B).ok


def is_left_module_map(phi: LinMap, act_src: LinMap, act_dst: LinMap) -> bool:
    return check_left_module_map(phi, act_src, act_dst).ok


def is_right_module_map(phi: LinMap, act_src: LinMap, act_dst: LinMap) -> bool:
    return check_right_module_map(phi, act_src, act_dst).ok


def left_regular_action(i: LinMap, E: FinBialgebra) -> LinMap:
    """``A⊗E -> E``, ``a·x = i(a)x``."""
    return compose(E.mult, tensor_map(i, identity(E.space, E.field)))


def right_regular_action(i: LinMap, E: FinBialgebra) -> LinMap:
    """``E⊗A -> E``, ``x·a = x i(a)``."""
    return compose(E.mult, tensor_map(identity(E.space, E.field), i))


def check_bijective_bialgebra_map(phi: LinMap, A, B) -> VerificationReport:
    from .linalg import rank
    rep = check_bialgebra_map(phi, A, B)
    n = phi.domain.dim
    rep.check("bijective", phi.codomain.dim == n and rank(phi) == n)
    rep.title = "bialgebra isomorphism"
    return rep


# ---------------------------------------------------------------------------
# coinvariants and normality

def coinvariant_like_subspace(pi: LinMap, E, A) -> Subspace:
    """``{x ∈ E | π(x(1)) ⊗ x(2) = 1_A ⊗ x}`` as an RREF basis.

    ``E`` needs only a comultiplication; ``A`` needs only a unit.
    """
    F = pi.field
    t = Tensor.grid(F, x=E.space)
    lhs = t.apply(E.comult, ["x"], ["a", "y"]).apply(pi, ["a"], ["p"])
    rhs = t.rename("x", "y").insert("p", A.unit)
    T = (lhs - rhs).to_map(E.space, tensor_space(A.space, E.space), ["p", "y"])
    return nullspace(T)


def _comult_matrix(E, vec) -> list[list]:
    n = E.space.dim
    t = Tensor.from_vector("x", E.space, vec, E.comult.field).apply(E.comult, ["x"], ["l", "r"])
    M = [[E.comult.field.zero] * n for _ in range(n)]
    for (l, r), v in t.terms.items():
        M[l][r] = v
    return M


def subcoalgebra_report(V: Subspace, E) -> VerificationReport:
    """``Δ(V) ⊆ V⊗E`` and ``Δ(V) ⊆ E⊗V``; together they give ``Δ(V) ⊆ V⊗V``."""
    rep = _report("subcoalgebra")
    n = E.space.dim
    left_fail = right_fail = None
    for k, b in enumerate(V.basis):
        M = _comult_matrix(E, b)
        if left_fail is None and not all(V.contains([M[l][r] for l in range(n)]) for r in range(n)):
            left_fail = k
        if right_fail is None and not all(V.contains(M[l]) for l in range(n)):
            right_fail = k
    for label, bad in (("Δ(V) ⊆ V⊗E", left_fail), ("Δ(V) ⊆ E⊗V", right_fail)):
        w = None if bad is None else Witness((bad,), (f"v{bad}",), "Δ(v)", "outside")
        rep.add(AxiomResult(label, bad is None, w))
    return rep


def is_normal_coalgebra_map(pi: LinMap, E, A) -> bool:
    """True iff the coinvariant-like subspace of ``π`` is a subcoalgebra."""
    return subcoalgebra_report(coinvariant_like_subspace(pi, E, A), E).ok


# ---------------------------------------------------------------------------
# Hopf modules and Yetter-Drinfel'd modules

@dataclass(frozen=True, eq=False)
class HopfModule:
    """Left-left Hopf module: action ``A⊗M -> M``, coaction ``M -> A⊗M``."""

    over: HopfAlgebra
    space: VectorSpace
    action: LinMap
    coaction: LinMap


@dataclass(frozen=True, eq=False)
class YDModule:
    """Left-left Yetter-Drinfel'd module."""

    over: HopfAlgebra
    space: VectorSpace
    action: LinMap
    coaction: LinMap


def _module_comodule_checks(M, rep: VerificationReport):
    A, V, act, co = M.over, M.space, M.action, M.coaction
    F = act.field
    t = Tensor.grid(F, m=V)
    rep.add(compare("module unit: 1·m = m", t.insert("u", A.unit).apply(act, ["u", "m"], ["o"]),
                    t.rename("m", "o"), ["o"], [V], [V]))
    t3 = Tensor.grid(F, a=A.space, b=A.space, m=V)
    lhs = t3.apply(act, ["b", "m"], ["bm"]).apply(act, ["a", "bm"], ["o"])
    rhs = t3.mul(A.mult, "a", "b", "ab").apply(act, ["ab", "m"], ["o"])
    rep.add(compare("module: a·(b·m) = (ab)·m", lhs, rhs, ["o"], [A.space, A.space, V], [V]))
    c = t.apply(co, ["m"], ["c", "m0"])
    lhs = c.apply(A.comult, ["c"], ["c1", "c2"])
    rhs = c.apply(co, ["m0"], ["c2", "m00"]).rename("c", "c1")
    rep.add(compare("comodule coassociativity", lhs, rhs, ["c1", "c2", "m0"], [V], [A.space, A.space, V],
                    rhs_outs=["c1", "c2", "m00"]))
    rep.add(compare("comodule counit", c.apply(A.counit, ["c"], []), t.rename("m", "m0"),
                    ["m0"], [V], [V]))


def check_hopf_module(M: HopfModule) -> VerificationReport:
    rep = _report("Hopf module")
    _module_comodule_checks(M, rep)
    A, V, act, co = M.over, M.space, M.action, M.coaction
    t = Tensor.grid(act.field, a=A.space, m=V)
    lhs = t.apply(act, ["a", "m"], ["am"]).apply(co, ["am"], ["c", "n"])
    rhs = (t.split("a", A.comult, "a1", "a2").apply(co, ["m"], ["m1", "m0"])
           .mul(A.mult, "a1", "m1", "c").apply(act, ["a2", "m0"], ["n"]))
    rep.add(compare("ρ(a·m) = a(1)m(-1) ⊗ a(2)·m(0)", lhs, rhs, ["c", "n"], [A.space, V], [A.space, V]))
    return rep


def check_yetter_drinfeld(M: YDModule) -> VerificationReport:
    rep = _report("Yetter-Drinfel'd module")
    _module_comodule_checks(M, rep)
    A, V, act, co = M.over, M.space, M.action, M.coaction
    t = Tensor.grid(act.field, a=A.space, m=V)
    lhs = t.apply(act, ["a", "m"], ["am"]).apply(co, ["am"], ["c", "n"])
    rhs = (t.split("a", A.comult, "a1", "a2", "a3").apply(co, ["m"], ["m1", "m0"])
           .apply(A.antipode, ["a3"], ["s3"])
           .chain(A.mult, ["a1", "m1", "s3"], "c").apply(act, ["a2", "m0"], ["n"]))
    rep.add(compare("ρ(a·m) = a(1)m(-1)S(a(3)) ⊗ a(2)·m(0)", lhs, rhs, ["c", "n"], [A.space, V], [A.space, V]))
    return rep


def module_coinvariants(M: HopfModule) -> Subspace:
    """``M^co(A) = {m | ρ(m) = 1⊗m}``."""
    t = Tensor.grid(M.action.field, m=M.space)
    T = (t.apply(M.coaction, ["m"], ["c", "n"]) - t.rename("m", "n").insert("c", M.over.unit))
    return nullspace(T.to_map(M.space, tensor_space(M.over.space, M.space), ["c", "n"]))


def fundamental_maps(M: HopfModule) -> tuple[LinMap, LinMap]:
    """``φ: A⊗M^co -> M, a⊗m ↦ a·m`` and ``φ⁻¹(m) = m(-2) ⊗ S(m(-1))·m(0)``.

    Raises :class:`AxiomError` if ``M`` is not a Hopf module.
    """
    rep = check_hopf_module(M)
    if not rep.ok:
        raise AxiomError("not a Hopf module", rep)
    A, F = M.over, M.action.field
    Mco = module_coinvariants(M)
    dom = tensor_space(A.space, Mco.space)
    phi = compose(M.action, tensor_map(identity(A.space, F), Mco.inclusion())).with_spaces(dom, M.space)
    t = (Tensor.grid(F, m=M.space).apply(M.coaction, ["m"], ["c", "m0"])
         .split("c", A.comult, "c1", "c2").apply(A.antipode, ["c2"], ["s"])
         .apply(M.action, ["s", "m0"], ["n"]).apply(Mco.coordinate_map(), ["n"], ["k"]))
    phi_inv = t.to_map(M.space, dom, ["c1", "k"])
    return phi, phi_inv


def regular_hopf_module(A: HopfAlgebra) -> HopfModule:
    return HopfModule(A, A.space, A.mult, A.comult)


def trivial_yd_module(A: HopfAlgebra, V: VectorSpace) -> YDModule:
    """Action ``a·m = ε(a)m`` and coaction ``m ↦ 1⊗m``."""
    F = A.field
    I = identity(V, F)
    act = tensor_map(A.counit, I).with_spaces(tensor_space(A.space, V), V)
    co = tensor_map(A.unit, I).with_spaces(V, tensor_space(A.space, V))
    return YDModule(A, V, act, co)


def eta(B, field: Field | None = None) -> LinMap:
    return B.unit


def counit_functional(values, V: VectorSpace, field: Field = QQ) -> LinMap:
    return functional(values, V, field)


def unit_vector_map(values, V: VectorSpace, field: Field = QQ) -> LinMap:
    return vector_map(values, V, field)
