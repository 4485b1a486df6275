"""Constructions driven by a unitary coalgebra map ``γ: H -> A``.

``γ⁻¹`` always means the convolution inverse ``S_A ∘ γ``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    AxiomError,
    FinAlgebra,
    FinBialgebra,
    FinCoalgebra,
    check_algebra,
    check_bialgebra,
    check_bialgebra_map,
    check_coalgebra,
    check_coalgebra_map,
    check_yetter_drinfeld,
    tensor_coalgebra,
)
from .datum import ExtendingDatum, PreconditionError, _conj, _module_entries, check_BE, check_extending_datum
from .legs import Tensor
from .linalg import K, LinMap, NotInSubspace, Subspace, compose, identity, nullspace, tensor_map, tensor_space
from .products import (
    InvalidDatumError,
    ProductBialgebra,
    YDBialgebra,
    canonical_embedding,
    circled_product,
    gamma_inverse,
    radford_biproduct,
    unified_product,
)
from .report import AxiomResult, VerificationReport, compare, merge


@dataclass(frozen=True, eq=False)
class GammaDatum:
    A: FinBialgebra
    H: FinBialgebra
    lact: LinMap
    gamma: LinMap
    name: str = ""

    def __post_init__(self):
        HA = tensor_space(self.H.space, self.A.space)
        object.__setattr__(self, "lact", self.lact.with_spaces(HA, self.H.space))
        object.__setattr__(self, "gamma", self.gamma.with_spaces(self.H.space, self.A.space))


def check_gamma_map(A: FinBialgebra, H: FinBialgebra, gamma: LinMap) -> VerificationReport:
    """``γ`` is a coalgebra map with ``γ(1_H) = 1_A``."""
    rep = VerificationReport("γ")
    rep.add(_conj("γ coalgebra map", check_coalgebra_map(gamma, H, A).results))
    t0 = Tensor.grid(A.field)
    rep.add(compare("γ(1_H) = 1_A", t0.insert("u", H.unit).apply(gamma, ["u"], ["o"]), t0.insert("o", A.unit),
                    ["o"], [], [A.space]))
    return rep


def check_gamma_datum(G: GammaDatum) -> VerificationReport:
    A, H, F = G.A, G.H, G.A.field
    rep = VerificationReport("γ datum")
    rep.extend(check_coalgebra(H), "H: ")
    alg = check_algebra(H)
    rep.add(_conj("H: unital", [alg["unit left: 1x = x"], alg["unit right: x1 = x"]]))
    rep.extend(check_gamma_map(A, H, G.gamma))
    HA = tensor_coalgebra(H.coalgebra, A.coalgebra)
    rep.add(_conj("◁ coalgebra map", check_coalgebra_map(G.lact, HA, H).results))
    probe = ExtendingDatum(A, H, G.lact, induced_ract(G), induced_cocycle(G))
    rep.add(_conj("(H,◁) right module", _module_entries(probe)))
    ta = Tensor.grid(F, a=A.space)
    rep.add(compare("1_H◁a = ε(a)1_H", ta.insert("u", H.unit).apply(G.lact, ["u", "a"], ["o"]),
                    ta.apply(A.counit, ["a"], []).insert("o", H.unit), ["o"], [A.space], [H.space]))
    return rep


def induced_ract(G: GammaDatum) -> LinMap:
    """``h▷a = γ(h1) a1 γ⁻¹(h2◁a2)``."""
    A, H = G.A, G.H
    ginv = gamma_inverse(A, G.gamma)
    t = (Tensor.grid(A.field, h=H.space, a=A.space).split("h", H.comult, "h1", "h2")
         .split("a", A.comult, "a1", "a2").apply(G.gamma, ["h1"], ["p"])
         .apply(G.lact, ["h2", "a2"], ["y"]).apply(ginv, ["y"], ["q"]).chain(A.mult, ["p", "a1", "q"], "o"))
    return t.to_map(tensor_space(H.space, A.space), A.space, ["o"])


def induced_cocycle(G: GammaDatum) -> LinMap:
    """``f(h,g) = γ(h1) γ(g1) γ⁻¹(h2·g2)``."""
    A, H = G.A, G.H
    ginv = gamma_inverse(A, G.gamma)
    t = (Tensor.grid(A.field, h=H.space, g=H.space).split("h", H.comult, "h1", "h2")
         .split("g", H.comult, "g1", "g2").apply(G.gamma, ["h1"], ["p"]).apply(G.gamma, ["g1"], ["q"])
         .mul(H.mult, "h2", "g2", "y").apply(ginv, ["y"], ["r"]).chain(A.mult, ["p", "q", "r"], "o"))
    return t.to_map(tensor_space(H.space, H.space), A.space, ["o"])


def induced_datum(G: GammaDatum) -> ExtendingDatum:
    """The datum ``(H, ◁, ▷_γ, f_γ)`` without any verification."""
    return ExtendingDatum(G.A, G.H, G.lact, induced_ract(G), induced_cocycle(G), G.name)


def check_induced_conditions(G: GammaDatum) -> VerificationReport:
    """The four compatibilities the construction needs: BE1, BE3, BE6, BE7."""
    return check_BE(induced_datum(G), only=("BE1", "BE3", "BE6", "BE7"))


def gamma_induced_datum(G: GammaDatum) -> ExtendingDatum:
    """Build ``(H, ◁, ▷_γ, f_γ)`` and verify it is a bialgebra extending structure.

    Raises :class:`InvalidDatumError` if an input requirement or one of the
    four needed compatibilities fails, and :class:`AxiomError` if those
    hold but the full verification does not.
    """
    pre = merge("γ-induced datum", [check_gamma_datum(G), check_induced_conditions(G)])
    if not pre.ok:
        raise InvalidDatumError("γ datum rejected", pre)
    D = induced_datum(G)
    full = merge("γ-induced datum, full check", [check_extending_datum(D), check_BE(D)])
    if not full.ok:
        raise AxiomError("the induced datum passes BE1, BE3, BE6, BE7 but not the full verification", full)
    return D


# ---------------------------------------------------------------------------
# split monomorphisms

def p_gamma(A: FinBialgebra, H: FinBialgebra, gamma: LinMap) -> LinMap:
    """``p(a⋉h) = a γ(h)``."""
    return compose(A.mult, tensor_map(identity(A.space, A.field), gamma)).with_spaces(
        tensor_space(A.space, H.space), A.space)


@dataclass(frozen=True, eq=False)
class SplitMonoResult:
    holds: bool
    p_gamma: LinMap | None
    report: VerificationReport

    def __bool__(self):
        return self.holds


def split_mono_test(D: ExtendingDatum, gamma: LinMap) -> SplitMonoResult:
    """Decide whether ``γ`` induces ``▷`` and ``f`` of ``D``.

    When it does, ``p_γ`` is returned after checking that it is a bialgebra
    map splitting ``i_A``.
    """
    A, H, F = D.A, D.H, D.field
    gamma = gamma.with_spaces(H.space, A.space)
    pre = check_gamma_map(A, H, gamma)
    if not pre.ok:
        raise PreconditionError(f"γ must be a unitary coalgebra map\n{pre.format()}")
    As, Hs = A.space, H.space
    rep = VerificationReport("split monomorphism")
    G = GammaDatum(A, H, D.lact, gamma)
    t = Tensor.grid(F, h=Hs, a=As)
    rep.add(compare("(iner1) h▷a = γ(h1)a1γ⁻¹(h2◁a2)", t.apply(D.ract, ["h", "a"], ["o"]),
                    t.apply(induced_ract(G), ["h", "a"], ["o"]), ["o"], [Hs, As], [As]))
    t2 = Tensor.grid(F, h=Hs, g=Hs)
    rep.add(compare("(iner2) f(h,g) = γ(h1)γ(g1)γ⁻¹(h2·g2)", t2.apply(D.cocycle, ["h", "g"], ["o"]),
                    t2.apply(induced_cocycle(G), ["h", "g"], ["o"]), ["o"], [Hs, Hs], [As]))
    lhs = t.apply(gamma, ["h"], ["p"]).mul(A.mult, "p", "a", "o")
    rhs = (t.split("h", H.comult, "h1", "h2").split("a", A.comult, "a1", "a2")
           .apply(D.ract, ["h1", "a1"], ["x"]).apply(D.lact, ["h2", "a2"], ["y"])
           .apply(gamma, ["y"], ["q"]).mul(A.mult, "x", "q", "o"))
    s1 = rep.add(compare("(s1) γ(h)a = (h1▷a1)γ(h2◁a2)", lhs, rhs, ["o"], [Hs, As], [As], required=False))
    lhs = t2.apply(gamma, ["h"], ["p"]).apply(gamma, ["g"], ["q"]).mul(A.mult, "p", "q", "o")
    rhs = (t2.split("h", H.comult, "h1", "h2").split("g", H.comult, "g1", "g2")
           .apply(D.cocycle, ["h1", "g1"], ["x"]).mul(H.mult, "h2", "g2", "y")
           .apply(gamma, ["y"], ["q"]).mul(A.mult, "x", "q", "o"))
    s2 = rep.add(compare("(s2) γ(h)γ(g) = f(h1,g1)γ(h2·g2)", lhs, rhs, ["o"], [Hs, Hs], [As], required=False))
    holds = rep.ok
    agree = holds == (s1.passed and s2.passed)
    rep.check("(iner1),(iner2) ⇔ (s1),(s2)", agree)
    if not agree:
        raise AxiomError("the two forms of the splitting criterion disagree", rep)
    if not holds:
        return SplitMonoResult(False, None, rep)
    p = p_gamma(A, H, gamma)
    U = unified_product(D, force=True)
    rep.add(_conj("p_γ bialgebra map", check_bialgebra_map(p, U, A).results))
    rep.check("p_γ∘i_A = id", compose(p, canonical_embedding(A, H)) == identity(As, F))
    if not rep.ok:
        raise AxiomError("criterion holds but p_γ is not a splitting bialgebra map", rep)
    return SplitMonoResult(True, p, rep)


# ---------------------------------------------------------------------------
# isomorphisms

@dataclass(frozen=True, eq=False)
class Transport:
    """A verified candidate isomorphism between two product bialgebras."""

    forward: LinMap
    backward: LinMap
    source: FinBialgebra
    target: FinBialgebra
    report: VerificationReport

    @property
    def ok(self) -> bool:
        return self.report.ok


def verify_isomorphism(phi: LinMap, phi_inv: LinMap, S: FinBialgebra, T: FinBialgebra,
                       title: str = "isomorphism") -> VerificationReport:
    rep = VerificationReport(title)
    rep.check("inverse∘forward = id", compose(phi_inv, phi) == identity(S.space, S.field))
    rep.check("forward∘inverse = id", compose(phi, phi_inv) == identity(T.space, T.field))
    sub = check_bialgebra_map(phi, S, T)
    rep.add(_conj("algebra map", sub.results[:2]))
    rep.add(_conj("coalgebra map", sub.results[2:]))
    return rep


def circled_transport(A: FinBialgebra, H: FinBialgebra, gamma: LinMap) -> tuple[LinMap, LinMap]:
    """``φ(a⋉h) = aγ(h1) ⊗ h2`` and ``φ⁻¹(a⊗h) = aγ⁻¹(h1) ⊗ h2``."""
    P = tensor_space(A.space, H.space)
    ginv = gamma_inverse(A, gamma)
    maps = []
    for g in (gamma, ginv):
        t = (Tensor.grid(A.field, a=A.space, h=H.space).split("h", H.comult, "h1", "h2")
             .apply(g, ["h1"], ["q"]).mul(A.mult, "a", "q", "oa"))
        maps.append(t.to_map(P, P, ["oa", "h2"]))
    return maps[0], maps[1]


def iso_to_circled(D: ExtendingDatum, gamma: LinMap, circled: ProductBialgebra | None = None) -> Transport:
    """Transport ``A⋉H`` onto ``A⊛H`` and verify the result.

    ``circled`` may supply an alternative target, which is how competing
    readings of the ⊛ multiplication are arbitrated.
    """
    if not split_mono_test(D, gamma):
        raise PreconditionError("γ does not split i_A for this datum")
    A, H = D.A, D.H
    U = unified_product(D, force=True)
    C = circled if circled is not None else circled_product(A, H, D.lact, gamma, force=True)
    phi, phi_inv = circled_transport(A, H, gamma)
    return Transport(phi, phi_inv, U, C, verify_isomorphism(phi, phi_inv, U, C, "A⋉H ≅ A⊛H"))


@dataclass(frozen=True, eq=False)
class ExtractedL:
    basis: Subspace
    yd: YDBialgebra
    unified: ProductBialgebra
    p_gamma: LinMap
    projection: LinMap
    report: VerificationReport

    @property
    def L(self) -> FinBialgebra:
        return self.yd.L

    @property
    def dim(self) -> int:
        return self.basis.dim


def extract_L(D: ExtendingDatum, gamma: LinMap) -> ExtractedL:
    """``L = {x ∈ A⋉H | x1 ⊗ p_γ(x2) = x ⊗ 1_A}`` with its structure.

    * product: the restriction of • (closure is checked)
    * ``Δ_L(x) = x1 • i_A(S_A p_γ(x2)) ⊗ x3`` and ``ε_L = ε`` restricted
    * ``a⇀x = i_A(a1) • x • i_A(S_A(a2))``
    * ``ρ_L(x) = p_γ(x1) ⊗ x2``
    """
    sm = split_mono_test(D, gamma)
    if not sm:
        raise PreconditionError("γ does not split i_A for this datum")
    A, H, F = D.A, D.H, D.field
    U = unified_product(D, force=True)
    p = sm.p_gamma
    S = A.antipode
    i = canonical_embedding(A, H)
    P = U.space
    t = Tensor.grid(F, x=P)
    T = (t.apply(U.comult, ["x"], ["y", "z"]).apply(p, ["z"], ["q"])
         - t.rename("x", "y").insert("q", A.unit))
    V = nullspace(T.to_map(P, tensor_space(P, A.space), ["y", "q"]))
    Ls = V.space
    inc = V.inclusion()
    rep = VerificationReport("extracted L")

    def to_L(raw: LinMap, n_legs: int, label: str) -> LinMap | None:
        """``raw`` maps into ``P^{⊗n}`` (possibly after an A leg); read it in L coordinates."""
        cols = []
        ok = True
        lead = raw.codomain.dim // (P.dim ** n_legs)
        for j in range(raw.domain.dim):
            col = list(raw.matrix[:, j])
            # split into blocks: lead index outermost, then P legs
            out = {}
            for blk in range(lead):
                chunk = col[blk * P.dim ** n_legs:(blk + 1) * P.dim ** n_legs]
                if n_legs == 1:
                    try:
                        c = V.coords(chunk)
                    except NotInSubspace:
                        ok = False
                        c = [0] * V.dim
                    for k, v in enumerate(c):
                        if v:
                            out[blk * V.dim + k] = v
                else:  # two P legs: coordinates in V⊗V
                    M = [chunk[r * P.dim:(r + 1) * P.dim] for r in range(P.dim)]
                    try:
                        right = [V.coords(row) for row in M]          # M[r] = Σ_k right[r][k] v_k
                        for k in range(V.dim):
                            colk = [right[r][k] for r in range(P.dim)]
                            left = V.coords(colk)
                            for m, v in enumerate(left):
                                if v:
                                    out[blk * V.dim * V.dim + m * V.dim + k] = v
                    except NotInSubspace:
                        ok = False
            cols.append(out)
        rep.check(label, ok)
        return cols if ok else None

    # product
    t2 = Tensor.grid(F, x=P, y=P).mul(U.mult, "x", "y", "o")
    mult_U = t2.to_map(tensor_space(P, P), P, ["o"])
    mult_raw = compose(mult_U, tensor_map(inc, inc))
    mcols = to_L(mult_raw, 1, "L closed under •")
    unit_raw = U.unit
    ucols = to_L(unit_raw, 1, "1 ∈ L")
    # coproduct
    t = (Tensor.grid(F, x=P).split("x", U.comult, "x1", "x2", "x3").apply(p, ["x2"], ["q"])
         .apply(S, ["q"], ["s"]).apply(i, ["s"], ["r"]).mul(U.mult, "x1", "r", "y"))
    delta_raw = compose(t.to_map(P, tensor_space(P, P), ["y", "x3"]), inc)
    dcols = to_L(delta_raw, 2, "Δ_L lands in L⊗L")
    # action and coaction
    t = (Tensor.grid(F, a=A.space, x=P).split("a", A.comult, "a1", "a2").apply(i, ["a1"], ["p1"])
         .apply(S, ["a2"], ["s"]).apply(i, ["s"], ["p2"]).chain(U.mult, ["p1", "x", "p2"], "o"))
    act_raw = compose(t.to_map(tensor_space(A.space, P), P, ["o"]), tensor_map(identity(A.space, F), inc))
    acols = to_L(act_raw, 1, "⇀ preserves L")
    t = Tensor.grid(F, x=P).apply(U.comult, ["x"], ["x1", "x2"]).apply(p, ["x1"], ["q"])
    co_raw = compose(t.to_map(P, tensor_space(A.space, P), ["q", "x2"]), inc)
    ccols = to_L(co_raw, 1, "ρ_L lands in A⊗L")
    if not rep.ok:
        raise AxiomError("the extracted L is not closed under its structure maps", rep)

    LL = tensor_space(Ls, Ls)
    AL = tensor_space(A.space, Ls)
    mult = LinMap.from_columns(LL, Ls, mcols, F)
    unit = LinMap.from_columns(K, Ls, ucols, F)
    comult = LinMap.from_columns(Ls, LL, dcols, F)
    counit = compose(U.counit, inc).with_spaces(Ls, K)
    action = LinMap.from_columns(AL, Ls, acols, F)
    coaction = LinMap.from_columns(Ls, AL, ccols, F)
    Lb = FinBialgebra(FinAlgebra(Ls, mult, unit), FinCoalgebra(Ls, comult, counit), None, "L")
    Y = YDBialgebra(Lb, A, action, coaction)
    rep.extend(check_coalgebra(Lb), "L: ")
    rep.extend(check_yetter_drinfeld(Y.module), "YD: ")
    # Π(x) = x1 • i_A(S_A p_γ(x2)), the projection of A⋉H onto L
    t = (Tensor.grid(F, x=P).split("x", U.comult, "x1", "x2").apply(p, ["x2"], ["q"])
         .apply(S, ["q"], ["s"]).apply(i, ["s"], ["r"]).mul(U.mult, "x1", "r", "y"))
    proj = t.to_map(P, P, ["y"])
    return ExtractedL(V, Y, U, p, proj, rep)


def iso_to_biproduct(D: ExtendingDatum, gamma: LinMap, ext: ExtractedL | None = None) -> Transport:
    """``θ(x) = Π(x1) ⊗ p_γ(x2)`` with inverse ``l⊗a ↦ l • i_A(a)``, verified
    as a bialgebra isomorphism ``A⋉H -> L∗A``."""
    ext = ext if ext is not None else extract_L(D, gamma)
    A, H, F = D.A, D.H, D.field
    U, p, V = ext.unified, ext.p_gamma, ext.basis
    B = radford_biproduct(ext.yd, force=True)
    P = U.space
    crd = V.coordinate_map()
    t = (Tensor.grid(F, x=P).apply(U.comult, ["x"], ["x1", "x2"]).apply(ext.projection, ["x1"], ["y"])
         .apply(crd, ["y"], ["l"]).apply(p, ["x2"], ["a"]))
    theta = t.to_map(P, B.space, ["l", "a"])
    i = canonical_embedding(A, H)
    t = (Tensor.grid(F, l=ext.L.space, a=A.space).apply(V.inclusion(), ["l"], ["x"])
         .apply(i, ["a"], ["y"]).mul(U.mult, "x", "y", "o"))
    theta_inv = t.to_map(B.space, P, ["o"])
    return Transport(theta, theta_inv, U, B, verify_isomorphism(theta, theta_inv, U, B, "A⋉H ≅ L∗A"))


# ---------------------------------------------------------------------------
# the whole pipeline

def gamma_pipeline(G: GammaDatum) -> VerificationReport:
    """Run every γ construction on one datum and record each verdict.

    Entries: full BE check of the induced datum, ``φ: A⋉H ≅ A⊛H``, the
    extraction of ``L`` with its Yetter-Drinfel'd structure, the biproduct
    ``L∗A`` as a bialgebra, ``θ: A⋉H ≅ L∗A`` and the dimension count.
    """
    rep = VerificationReport(f"γ pipeline {G.name}".rstrip())
    try:
        D = gamma_induced_datum(G)
    except AxiomError as exc:
        sub = exc.report
        bad = next((r for r in sub.results if not r.passed and r.required), None)
        rep.add(AxiomResult("induced datum: full BE check", False,
                            bad.witness if bad is not None else None, note=bad.label if bad else str(exc)))
        return rep
    rep.add(_conj("induced datum: full BE check", check_BE(D).results))
    rep.add(_conj("φ: A⋉H ≅ A⊛H", iso_to_circled(D, G.gamma).report.results))
    ext = extract_L(D, G.gamma)
    rep.add(_conj("L extracted", ext.report.results))
    if not ext.report.ok:
        return rep
    rep.add(_conj("L: Yetter-Drinfel'd module", check_yetter_drinfeld(ext.yd.module).results))
    rep.add(_conj("L∗A bialgebra", check_bialgebra(radford_biproduct(ext.yd)).results))
    rep.add(_conj("θ: A⋉H ≅ L∗A", iso_to_biproduct(D, G.gamma, ext).report.results))
    rep.check("dim L · dim A = dim A⋉H", ext.dim * D.A.dim == ext.unified.dim,
              note=f"{ext.dim}·{D.A.dim} vs {ext.unified.dim}")
    return rep
