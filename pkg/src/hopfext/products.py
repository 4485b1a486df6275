"""Unified, twisted, smash, circled and biproduct bialgebras.

Products of ``A`` and ``H`` live on ``A⊗H`` with pair labels ``(a,h)``; a
product element ``a⋉h`` has index ``i_a * dim H + i_h``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    AxiomError,
    FinAlgebra,
    FinBialgebra,
    FinCoalgebra,
    HopfAlgebra,
    YDModule,
    check_algebra_map,
    check_bialgebra_map,
    check_coalgebra_map,
    check_left_module_map,
    check_right_module_map,
    check_yetter_drinfeld,
    coinvariant_like_subspace,
    left_regular_action,
    right_regular_action,
    subcoalgebra_report,
    tensor_coalgebra,
)
from .datum import (
    ExtendingDatum,
    PreconditionError,
    check_BE,
    check_extending_datum,
    check_smash_conditions,
    is_trivial_cocycle,
    is_trivial_ract,
    trivial_datum,
)
from .legs import Tensor
from .linalg import K, LinMap, compose, identity, tensor_map, tensor_space
from .report import AxiomResult, VerificationReport, merge


class InvalidDatumError(AxiomError):
    """A builder refused its input; ``report`` holds the failing checks."""


@dataclass(frozen=True, eq=False)
class ProductBialgebra(FinBialgebra):
    kind: str = ""
    datum: object = None
    left: FinBialgebra | None = None
    right: FinBialgebra | None = None
    gamma: LinMap | None = None


def _assemble(kind: str, mult: LinMap, coalg: FinCoalgebra, unit: LinMap, left, right,
              datum=None, gamma=None, name: str = "") -> ProductBialgebra:
    alg = FinAlgebra(coalg.space, mult, unit, assoc_required=True)
    return ProductBialgebra(alg, coalg, None, name, kind, datum, left, right, gamma)


def _pair_unit(A, H) -> LinMap:
    P = tensor_space(A.space, H.space)
    return Tensor.grid(A.field).insert("a", A.unit).insert("h", H.unit).to_map(K, P, ["a", "h"])


def _gate(report: VerificationReport, what: str, force: bool):
    if not force and not report.ok:
        raise InvalidDatumError(f"refusing to build the {what}", report)


def datum_report(D: ExtendingDatum) -> VerificationReport:
    return merge("extending datum and compatibilities", [check_extending_datum(D), check_BE(D)])


# ---------------------------------------------------------------------------
# unified, twisted, smash

def unified_product(D: ExtendingDatum, force: bool = False) -> ProductBialgebra:
    """``(a⋉h)(c⋉g) = a(h1▷c1) f(h2◁c2, g1) ⋉ (h3◁c3)·g2`` with the tensor coalgebra."""
    if not force:
        _gate(datum_report(D), "unified product", force)
    A, H, F = D.A, D.H, D.field
    P = tensor_space(A.space, H.space)
    t = (Tensor.grid(F, a=A.space, h=H.space, c=A.space, g=H.space)
         .split("h", H.comult, "h1", "h2", "h3").split("c", A.comult, "c1", "c2", "c3")
         .split("g", H.comult, "g1", "g2")
         .apply(D.ract, ["h1", "c1"], ["X"]).apply(D.lact, ["h2", "c2"], ["Y"])
         .apply(D.cocycle, ["Y", "g1"], ["Fv"]).apply(D.lact, ["h3", "c3"], ["Z"])
         .mul(H.mult, "Z", "g2", "oh").chain(A.mult, ["a", "X", "Fv"], "oa"))
    mult = t.to_map(tensor_space(P, P), P, ["oa", "oh"])
    coalg = tensor_coalgebra(A.coalgebra, H.coalgebra)
    return _assemble("unified", mult, coalg, _pair_unit(A, H), A, H, D, name=f"{A.name}⋉{H.name}")


def twisted_product(D: ExtendingDatum, force: bool = False) -> ProductBialgebra:
    """``(a◊h)(c◊g) = a c1 f(h1◁c2, g1) ◊ (h2◁c3)·g2``; needs a trivial ▷."""
    if not force:
        if not is_trivial_ract(D):
            raise PreconditionError("the twisted product needs a trivial ▷")
        _gate(datum_report(D), "twisted product", force)
    A, H, F = D.A, D.H, D.field
    P = tensor_space(A.space, H.space)
    t = (Tensor.grid(F, a=A.space, h=H.space, c=A.space, g=H.space)
         .split("h", H.comult, "h1", "h2").split("c", A.comult, "c1", "c2", "c3")
         .split("g", H.comult, "g1", "g2")
         .apply(D.lact, ["h1", "c2"], ["Y"]).apply(D.cocycle, ["Y", "g1"], ["Fv"])
         .apply(D.lact, ["h2", "c3"], ["Z"]).mul(H.mult, "Z", "g2", "oh")
         .chain(A.mult, ["a", "c1", "Fv"], "oa"))
    mult = t.to_map(tensor_space(P, P), P, ["oa", "oh"])
    coalg = tensor_coalgebra(A.coalgebra, H.coalgebra)
    return _assemble("twisted", mult, coalg, _pair_unit(A, H), A, H, D, name=f"{A.name}◊{H.name}")


def smash_product(A: FinBialgebra, H: FinBialgebra, lact: LinMap, force: bool = False) -> ProductBialgebra:
    """``(a#h)(c#g) = a c1 # (h◁c2) g``."""
    _gate(check_smash_conditions(A, H, lact), "smash product", force)
    F = A.field
    P = tensor_space(A.space, H.space)
    t = (Tensor.grid(F, a=A.space, h=H.space, c=A.space, g=H.space)
         .split("c", A.comult, "c1", "c2").apply(lact, ["h", "c2"], ["Y"])
         .mul(H.mult, "Y", "g", "oh").mul(A.mult, "a", "c1", "oa"))
    mult = t.to_map(tensor_space(P, P), P, ["oa", "oh"])
    coalg = tensor_coalgebra(A.coalgebra, H.coalgebra)
    D = trivial_datum(A, H, lact)
    return _assemble("smash", mult, coalg, _pair_unit(A, H), A, H, D, name=f"{A.name}#{H.name}")


# ---------------------------------------------------------------------------
# the γ-deformed product

def gamma_inverse(A: FinBialgebra, gamma: LinMap) -> LinMap:
    """``γ⁻¹ = S_A ∘ γ``."""
    if A.antipode is None:
        raise PreconditionError("γ⁻¹ needs an antipode on A")
    return compose(A.antipode, gamma)


def circled_product(A: FinBialgebra, H: FinBialgebra, lact: LinMap, gamma: LinMap,
                    force: bool = False) -> ProductBialgebra:
    """``(a⊛h)(c⊛g) = a c1 ⊛ (h◁(c2 γ⁻¹(g1)))·g2`` and
    ``Δ(a⊛h) = a1⊛h2 ⊗ a2 γ⁻¹(h1) γ(h3) ⊛ h4``."""
    if not force:
        from .gamma import GammaDatum, check_gamma_datum, check_induced_conditions
        G = GammaDatum(A, H, lact, gamma)
        _gate(merge("γ datum", [check_gamma_datum(G), check_induced_conditions(G)]), "circled product", force)
    F = A.field
    P = tensor_space(A.space, H.space)
    ginv = gamma_inverse(A, gamma)
    t = (Tensor.grid(F, a=A.space, h=H.space, c=A.space, g=H.space)
         .split("c", A.comult, "c1", "c2").split("g", H.comult, "g1", "g2")
         .apply(ginv, ["g1"], ["q"]).mul(A.mult, "c2", "q", "r")
         .apply(lact, ["h", "r"], ["s"]).mul(H.mult, "s", "g2", "oh")
         .mul(A.mult, "a", "c1", "oa"))
    mult = t.to_map(tensor_space(P, P), P, ["oa", "oh"])
    t = (Tensor.grid(F, a=A.space, h=H.space).split("a", A.comult, "a1", "a2")
         .split("h", H.comult, "h1", "h2", "h3", "h4")
         .apply(ginv, ["h1"], ["p"]).apply(gamma, ["h3"], ["q"]).chain(A.mult, ["a2", "p", "q"], "b"))
    comult = t.to_map(P, tensor_space(P, P), ["a1", "h2", "b", "h4"])
    counit = tensor_map(A.counit, H.counit).with_spaces(P, K)
    coalg = FinCoalgebra(P, comult, counit)
    return _assemble("circled", mult, coalg, _pair_unit(A, H), A, H, None, gamma, name=f"{A.name}⊛{H.name}")


# ---------------------------------------------------------------------------
# Radford biproduct

@dataclass(frozen=True, eq=False)
class YDBialgebra:
    """An algebra and coalgebra ``L`` with a Yetter-Drinfel'd structure over ``A``."""

    L: FinBialgebra
    over: HopfAlgebra
    action: LinMap
    coaction: LinMap

    @property
    def module(self) -> YDModule:
        return YDModule(self.over, self.L.space, self.action, self.coaction)


def radford_biproduct(Y: YDBialgebra, force: bool = False) -> ProductBialgebra:
    """``(l∗a)(m∗b) = l(a1·m) ∗ a2 b`` and ``Δ(l∗a) = l1 ∗ l2(-1) a1 ⊗ l2(0) ∗ a2``."""
    _gate(check_yetter_drinfeld(Y.module), "biproduct", force)
    L, A, F = Y.L, Y.over, Y.over.field
    P = tensor_space(L.space, A.space)
    t = (Tensor.grid(F, l=L.space, a=A.space, m=L.space, b=A.space)
         .split("a", A.comult, "a1", "a2").apply(Y.action, ["a1", "m"], ["x"])
         .mul(L.mult, "l", "x", "ol").mul(A.mult, "a2", "b", "oa"))
    mult = t.to_map(tensor_space(P, P), P, ["ol", "oa"])
    t = (Tensor.grid(F, l=L.space, a=A.space).split("l", L.comult, "l1", "l2")
         .apply(Y.coaction, ["l2"], ["c", "l0"]).split("a", A.comult, "a1", "a2")
         .mul(A.mult, "c", "a1", "p"))
    comult = t.to_map(P, tensor_space(P, P), ["l1", "p", "l0", "a2"])
    counit = tensor_map(L.counit, A.counit).with_spaces(P, K)
    unit = Tensor.grid(F).insert("l", L.unit).insert("a", A.unit).to_map(K, P, ["l", "a"])
    return _assemble("biproduct", mult, FinCoalgebra(P, comult, counit), unit, L, A,
                     name=f"{L.name or 'L'}∗{A.name}")


# ---------------------------------------------------------------------------
# canonical maps

@dataclass(frozen=True, eq=False)
class CanonicalMaps:
    i_A: LinMap
    pi_A: LinMap
    report: VerificationReport


def canonical_embedding(A: FinBialgebra, H: FinBialgebra) -> LinMap:
    """``i_A(a) = a⋉1_H``."""
    return tensor_map(identity(A.space, A.field), H.unit).with_spaces(A.space, tensor_space(A.space, H.space))


def canonical_projection(A: FinBialgebra, H: FinBialgebra) -> LinMap:
    """``π_A(a⋉h) = ε_H(h)a``."""
    return tensor_map(identity(A.space, A.field), H.counit).with_spaces(tensor_space(A.space, H.space), A.space)


def canonical_maps(P: ProductBialgebra) -> CanonicalMaps:
    """``i_A``, ``π_A`` and the property report for a unified product.

    Required entries are the unconditional properties and the two
    biconditionals; the individual facts entering the biconditionals are
    recorded as informational entries.
    """
    D = P.datum
    if D is None:
        raise PreconditionError("canonical maps need a product built from an extending datum")
    A, H = D.A, D.H
    i = canonical_embedding(A, H)
    pi = canonical_projection(A, H)
    rep = VerificationReport("canonical maps")

    def conj(label, sub, required=True):
        bad = next((r for r in sub.results if not r.passed), None)
        return rep.add(AxiomResult(label, bad is None, None if bad is None else bad.witness, required,
                                   "" if bad is None else bad.label))

    conj("i_A bialgebra map", check_bialgebra_map(i, A, P))
    conj("π_A coalgebra map", check_coalgebra_map(pi, P, A))
    conj("π_A left A-module map", check_left_module_map(pi, left_regular_action(i, P), A.mult))
    V = coinvariant_like_subspace(pi, P, A)
    conj("π_A normal", subcoalgebra_report(V, P))
    rep.check("π_A∘i_A = id", compose(pi, i) == identity(A.space, A.field))
    right = conj("π_A right A-module map", check_right_module_map(pi, right_regular_action(i, P), A.mult),
                 required=False)
    alg = conj("π_A bialgebra map", check_algebra_map(pi, P, A), required=False)
    tr, tf = is_trivial_ract(D), is_trivial_cocycle(D)
    rep.check("▷ trivial", tr, required=False)
    rep.check("f trivial", tf, required=False)
    rep.check("π_A right module map ⇔ ▷ trivial", right.passed == tr)
    rep.check("π_A bialgebra map ⇔ ▷, f trivial", alg.passed == (tr and tf))
    return CanonicalMaps(i, pi, rep)
