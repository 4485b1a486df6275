"""Recover extending data from factorizations and from split extensions.

Every recovered datum is re-verified and every claimed isomorphism is
checked on all basis elements.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    AxiomError,
    FinAlgebra,
    FinBialgebra,
    FinCoalgebra,
    HopfModule,
    check_bialgebra_map,
    check_coalgebra,
    check_coalgebra_map,
    check_left_module_map,
    check_right_module_map,
    coinvariant_like_subspace,
    fundamental_maps,
    left_regular_action,
    right_regular_action,
    solve_antipode,
    subcoalgebra_report,
)
from .datum import (
    ExtendingDatum,
    _conj,
    is_trivial_cocycle,
    is_trivial_ract,
)
from .gamma import verify_isomorphism
from .legs import Tensor
from .linalg import K, LinMap, Subspace, compose, identity, inverse, tensor_map, tensor_space
from .products import ProductBialgebra, datum_report, smash_product, twisted_product, unified_product
from .report import VerificationReport


class RecoveryError(AxiomError):
    """Recovery refused its input or its output failed verification."""


@dataclass(frozen=True, eq=False)
class FactorizationInput:
    """``E`` with a sub-bialgebra ``i: A -> E`` and a subcoalgebra ``j: H -> E``.

    Only the coalgebra structure of ``H`` is used; its product is recovered.
    """

    E: FinBialgebra
    A: FinBialgebra
    H: FinCoalgebra | FinBialgebra
    embed_A: LinMap
    embed_H: LinMap


@dataclass(frozen=True, eq=False)
class Recovery:
    datum: ExtendingDatum
    iso: LinMap
    iso_inv: LinMap
    product: ProductBialgebra
    report: VerificationReport
    H: Subspace | None = None
    kind: str = "unified"

    def __iter__(self):
        return iter((self.datum, self.iso))


def _coalgebra_of(H) -> FinCoalgebra:
    return H.coalgebra if isinstance(H, FinBialgebra) else H


def recover_datum(inp: FactorizationInput) -> Recovery:
    """Read ``(◁, ▷, f, ·)`` off ``u(a⊗h) = i(a) j(h)`` and verify that
    ``u: A⋉H -> E`` is a bialgebra isomorphism."""
    E, A, i, j = inp.E, inp.A, inp.embed_A, inp.embed_H
    Hc = _coalgebra_of(inp.H)
    F, As, Hs = A.field, A.space, Hc.space
    rep = VerificationReport("factorization")
    i = i.with_spaces(As, E.space)
    j = j.with_spaces(Hs, E.space)
    rep.add(_conj("i bialgebra map", check_bialgebra_map(i, A, E).results))
    rep.add(_conj("j coalgebra map", check_coalgebra_map(j, Hc, E).results))
    P = tensor_space(As, Hs)
    u = compose(E.mult, tensor_map(i, j)).with_spaces(P, E.space)
    u_inv = inverse(u)
    rep.check("u: A⊗H -> E bijective", u_inv is not None)
    if not rep.ok:
        raise RecoveryError("not a factorization", rep)

    def split_off(t: Tensor, out: str) -> Tensor:
        return t.apply(u_inv, [out], ["a", "h"])

    mu = split_off(Tensor.grid(F, h=Hs, x=As).apply(j, ["h"], ["p"]).apply(i, ["x"], ["q"])
                   .mul(E.mult, "p", "q", "e"), "e")
    nu = split_off(Tensor.grid(F, h=Hs, g=Hs).apply(j, ["h"], ["p"]).apply(j, ["g"], ["q"])
                   .mul(E.mult, "p", "q", "e"), "e")
    HA, HH = tensor_space(Hs, As), tensor_space(Hs, Hs)
    ract = mu.apply(Hc.counit, ["h"], []).to_map(HA, As, ["a"])
    lact = mu.apply(A.counit, ["a"], []).to_map(HA, Hs, ["h"])
    cocycle = nu.apply(Hc.counit, ["h"], []).to_map(HH, As, ["a"])
    dot = nu.apply(A.counit, ["a"], []).to_map(HH, Hs, ["h"])
    one = (Tensor.grid(F).insert("e", E.unit).apply(u_inv, ["e"], ["a", "h"])
           .apply(A.counit, ["a"], []).to_map(K, Hs, ["h"]))
    H = FinBialgebra(FinAlgebra(Hs, dot, one, assoc_required=False), Hc, None,
                     getattr(inp.H, "name", "") or "H")
    D = ExtendingDatum(A, H, lact, ract, cocycle, "recovered")
    rep.extend(datum_report(D))
    if not rep.ok:
        raise RecoveryError("the recovered datum fails verification", rep)
    U = unified_product(D)
    rep.extend(verify_isomorphism(u, u_inv, U, E, "u"), "u: ")
    if not rep.ok:
        raise RecoveryError("u is not a bialgebra isomorphism", rep)
    return Recovery(D, u, u_inv, U, rep)


def canonical_factorization(P: ProductBialgebra) -> FactorizationInput:
    """``A -> A⋉H, a ↦ a⋉1`` and ``H -> A⋉H, h ↦ 1⋉h``."""
    D = P.datum
    A, H = D.A, D.H
    F = A.field
    jA = tensor_map(identity(A.space, F), H.unit).with_spaces(A.space, P.space)
    jH = tensor_map(A.unit, identity(H.space, F)).with_spaces(H.space, P.space)
    return FactorizationInput(P, A, H.coalgebra, jA, jH)


# ---------------------------------------------------------------------------
# split extensions

@dataclass(frozen=True, eq=False)
class SplitExtensionInput:
    """A bialgebra map ``i: A -> E`` and a retraction ``π: E -> A``."""

    E: FinBialgebra
    A: FinBialgebra
    i: LinMap
    pi: LinMap


def split_input_report(inp: SplitExtensionInput) -> VerificationReport:
    E, A = inp.E, inp.A
    i = inp.i.with_spaces(A.space, E.space)
    pi = inp.pi.with_spaces(E.space, A.space)
    rep = VerificationReport("split extension input")
    rep.check("A has an antipode", A.antipode is not None)
    rep.check("π∘i = id_A", compose(pi, i) == identity(A.space, A.field))
    rep.add(_conj("i bialgebra map", check_bialgebra_map(i, A, E).results))
    rep.add(_conj("π coalgebra map", check_coalgebra_map(pi, E, A).results))
    rep.add(_conj("π left A-module map", check_left_module_map(pi, left_regular_action(i, E), A.mult).results))
    V = coinvariant_like_subspace(pi, E, A)
    rep.add(_conj("π normal", subcoalgebra_report(V, E).results))
    return rep


def split_hopf_module(inp: SplitExtensionInput) -> HopfModule:
    """``E`` as a Hopf module over ``A``: ``a·x = i(a)x`` and ``x ↦ π(x1) ⊗ x2``."""
    E, A = inp.E, inp.A
    i = inp.i.with_spaces(A.space, E.space)
    pi = inp.pi.with_spaces(E.space, A.space)
    coaction = compose(tensor_map(pi, identity(E.space, E.field)), E.comult).with_spaces(
        E.space, tensor_space(A.space, E.space))
    return HopfModule(A, E.space, left_regular_action(i, E), coaction)


def fundamental_report(inp: SplitExtensionInput) -> VerificationReport:
    """``φ: A⊗E^co -> E`` and ``φ⁻¹`` for the Hopf module of a split extension."""
    E = inp.E
    rep = VerificationReport("fundamental theorem of Hopf modules")
    phi, phi_inv = fundamental_maps(split_hopf_module(inp))
    rep.check("φ⁻¹∘φ = id", compose(phi_inv, phi) == identity(phi.domain, E.field))
    rep.check("φ∘φ⁻¹ = id", compose(phi, phi_inv) == identity(E.space, E.field))
    return rep


def _closed(V: Subspace, m: LinMap) -> bool:
    return all(V.contains(list(m.matrix[:, c])) for c in range(m.domain.dim))


def split_extension_datum(inp: SplitExtensionInput) -> Recovery:
    """Recover ``(H, ◁, ▷, f)`` from a normal split extension and verify
    ``φ(a⋉h) = i(a)h`` as a bialgebra isomorphism ``A⋉H -> E``."""
    E, A = inp.E, inp.A
    F = A.field
    rep = split_input_report(inp)
    if not rep.ok:
        raise RecoveryError("split extension preconditions fail", rep)
    i = inp.i.with_spaces(A.space, E.space)
    pi = inp.pi.with_spaces(E.space, A.space)
    S = A.antipode
    V = coinvariant_like_subspace(pi, E, A)
    Hs, incl, crd = V.space, V.inclusion(), V.coordinate_map()
    rep.check("1_E ∈ H", V.contains(E.unit_vector))
    rep.extend(fundamental_report(inp))

    def back(t: Tensor, leg: str, label: str, dom) -> LinMap | None:
        m = t.to_map(dom, E.space, [leg])
        ok = _closed(V, m)
        rep.check(label, ok)
        return compose(crd, m) if ok else None

    # Δ_H and ε_H by restriction
    t = Tensor.grid(F, h=Hs).apply(incl, ["h"], ["x"]).apply(E.comult, ["x"], ["l", "r"])
    comult_E = t.to_map(Hs, tensor_space(E.space, E.space), ["l", "r"])
    HH, HA = tensor_space(Hs, Hs), tensor_space(Hs, A.space)
    comult = compose(tensor_map(crd, crd), comult_E).with_spaces(Hs, HH)
    counit = compose(E.counit, incl).with_spaces(Hs, E.counit.codomain)
    # h·g = i(S(π(h1 g1))) h2 g2
    t = (Tensor.grid(F, h=Hs, g=Hs).apply(incl, ["h"], ["x"]).apply(incl, ["g"], ["y"])
         .split("x", E.comult, "x1", "x2").split("y", E.comult, "y1", "y2")
         .mul(E.mult, "x1", "y1", "p").apply(pi, ["p"], ["q"]).apply(S, ["q"], ["s"]).apply(i, ["s"], ["r"])
         .chain(E.mult, ["r", "x2", "y2"], "o"))
    dot = back(t, "o", "H closed under ·", HH)
    # f(h,g) = π(hg)
    t = (Tensor.grid(F, h=Hs, g=Hs).apply(incl, ["h"], ["x"]).apply(incl, ["g"], ["y"])
         .mul(E.mult, "x", "y", "p").apply(pi, ["p"], ["o"]))
    cocycle = t.to_map(HH, A.space, ["o"])
    # h◁a = i(S(π(h1 i(a1)))) h2 i(a2)
    t = (Tensor.grid(F, h=Hs, a=A.space).apply(incl, ["h"], ["x"]).split("x", E.comult, "x1", "x2")
         .split("a", A.comult, "a1", "a2").apply(i, ["a1"], ["b1"]).apply(i, ["a2"], ["b2"])
         .mul(E.mult, "x1", "b1", "p").apply(pi, ["p"], ["q"]).apply(S, ["q"], ["s"]).apply(i, ["s"], ["r"])
         .chain(E.mult, ["r", "x2", "b2"], "o"))
    lact = back(t, "o", "H closed under ◁", HA)
    # h▷a = π(h i(a))
    t = (Tensor.grid(F, h=Hs, a=A.space).apply(incl, ["h"], ["x"]).apply(i, ["a"], ["b"])
         .mul(E.mult, "x", "b", "p").apply(pi, ["p"], ["o"]))
    ract = t.to_map(HA, A.space, ["o"])
    if not rep.ok:
        raise RecoveryError("H is not closed under the recovered operations", rep)
    one = compose(crd, E.unit)
    Hc = FinCoalgebra(Hs, comult, counit)
    rep.extend(check_coalgebra(Hc), "H: ")
    H = FinBialgebra(FinAlgebra(Hs, dot, one, assoc_required=False), Hc, None, "H")
    D = ExtendingDatum(A, H, lact, ract, cocycle, "recovered")
    rep.extend(datum_report(D))
    if not rep.ok:
        raise RecoveryError("the recovered datum fails verification", rep)
    U = unified_product(D)
    P = U.space
    phi = compose(E.mult, tensor_map(i, incl)).with_spaces(P, E.space)
    # φ⁻¹(x) = π(x1) ⊗ i(S(π(x2))) x3
    t = (Tensor.grid(F, x=E.space).split("x", E.comult, "x1", "x2", "x3").apply(pi, ["x1"], ["a"])
         .apply(pi, ["x2"], ["q"]).apply(S, ["q"], ["s"]).apply(i, ["s"], ["r"])
         .mul(E.mult, "r", "x3", "y").apply(crd, ["y"], ["h"]))
    phi_inv = t.to_map(E.space, P, ["a", "h"])
    rep.extend(verify_isomorphism(phi, phi_inv, U, E, "φ"), "φ: ")
    if not rep.ok:
        raise RecoveryError("φ is not a bialgebra isomorphism", rep)
    return Recovery(D, phi, phi_inv, U, rep, V)


def bimodule_split(inp: SplitExtensionInput) -> Recovery:
    """A split extension whose retraction is also a right ``A``-module map
    gives a datum with trivial ▷, so ``E ≅ A◊H``."""
    E, A = inp.E, inp.A
    i = inp.i.with_spaces(A.space, E.space)
    pi = inp.pi.with_spaces(E.space, A.space)
    pre = VerificationReport("A-bimodule retraction")
    pre.add(_conj("π right A-module map",
                  check_right_module_map(pi, right_regular_action(i, E), A.mult).results))
    if not pre.ok:
        raise RecoveryError("π is not a right A-module map", pre)
    res = split_extension_datum(inp)
    rep = res.report.extend(pre)
    rep.check("▷ trivial", is_trivial_ract(res.datum))
    if not rep.ok:
        raise RecoveryError("recovered ▷ is nontrivial for an A-bimodule retraction", rep)
    T = twisted_product(res.datum)
    rep.extend(verify_isomorphism(res.iso, res.iso_inv, T, E, "A◊H ≅ E"), "A◊H: ")
    if not rep.ok:
        raise RecoveryError("E is not isomorphic to the twisted product via φ", rep)
    return Recovery(res.datum, res.iso, res.iso_inv, T, rep, res.H, "twisted")


def normal_epi_split(inp: SplitExtensionInput) -> Recovery:
    """A split extension whose retraction is a bialgebra map gives a smash
    datum with ``h◁a = i(S(a1)) h i(a2)``; ``H`` is a sub-Hopf algebra when
    ``E`` has an antipode."""
    E, A = inp.E, inp.A
    F = A.field
    i = inp.i.with_spaces(A.space, E.space)
    pi = inp.pi.with_spaces(E.space, A.space)
    pre = VerificationReport("normal split epimorphism")
    pre.add(_conj("π bialgebra map", check_bialgebra_map(pi, E, A).results))
    if not pre.ok:
        raise RecoveryError("π is not a bialgebra map", pre)
    res = split_extension_datum(inp)
    rep = res.report.extend(pre)
    D, V = res.datum, res.H
    rep.check("▷ trivial", is_trivial_ract(D))
    rep.check("f trivial", is_trivial_cocycle(D))
    Hs, incl, crd = V.space, V.inclusion(), V.coordinate_map()
    t = (Tensor.grid(F, h=Hs, a=A.space).apply(incl, ["h"], ["x"]).split("a", A.comult, "a1", "a2")
         .apply(A.antipode, ["a1"], ["s"]).apply(i, ["s"], ["b1"]).apply(i, ["a2"], ["b2"])
         .chain(E.mult, ["b1", "x", "b2"], "o").apply(crd, ["o"], ["h'"]))
    simple = t.to_map(tensor_space(Hs, A.space), Hs, ["h'"])
    rep.check("h◁a = i(S(a1)) h i(a2)", simple == D.lact)
    # H is a sub-Hopf algebra: closed under the product of E and the antipode
    prod = (Tensor.grid(F, h=Hs, g=Hs).apply(incl, ["h"], ["x"]).apply(incl, ["g"], ["y"])
            .mul(E.mult, "x", "y", "o").to_map(tensor_space(Hs, Hs), E.space, ["o"]))
    rep.check("H closed under the product of E", _closed(V, prod))
    SE = E.antipode if E.antipode is not None else solve_antipode(E)
    rep.check("E has an antipode", SE is not None, required=False)
    if SE is not None:
        rep.check("S_E(H) ⊆ H", _closed(V, compose(SE, incl)))
    if not rep.ok:
        raise RecoveryError("the smash-product specialization fails", rep)
    Sm = smash_product(A, D.H, D.lact)
    rep.extend(verify_isomorphism(res.iso, res.iso_inv, Sm, E, "A#H ≅ E"), "A#H: ")
    if not rep.ok:
        raise RecoveryError("E is not isomorphic to the smash product via φ", rep)
    return Recovery(D, res.iso, res.iso_inv, Sm, rep, V, "smash")


def analyze_split(inp: SplitExtensionInput) -> Recovery:
    """Pick the most special applicable reconstruction."""
    E, A = inp.E, inp.A
    i = inp.i.with_spaces(A.space, E.space)
    pi = inp.pi.with_spaces(E.space, A.space)
    if check_bialgebra_map(pi, E, A).ok:
        return normal_epi_split(inp)
    if check_right_module_map(pi, right_regular_action(i, E), A.mult).ok:
        return bimodule_split(inp)
    return split_extension_datum(inp)
