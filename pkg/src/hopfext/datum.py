"""Extending data ``(H, ◁, ▷, f)`` of a bialgebra ``A`` and their axioms.

Every compatibility is compiled to a leg plan whose leg names follow the
Sweedler indices of the formula (``h1, h2, h3`` for ``h(1), h(2), h(3)``).
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    FinBialgebra,
    check_algebra,
    check_bialgebra,
    check_coalgebra,
    check_coalgebra_map,
    tensor_coalgebra,
)
from .legs import Tensor
from .linalg import LinMap, compose, identity, tensor_map, tensor_space
from .report import AxiomResult, VerificationReport, compare


@dataclass(frozen=True, eq=False)
class ExtendingDatum:
    """``lact: H⊗A -> H`` is ◁, ``ract: H⊗A -> A`` is ▷ and ``cocycle: H⊗H -> A`` is f.

    ``H`` is a coalgebra with a unital, possibly nonassociative product,
    packaged as a :class:`FinBialgebra` (its bialgebra axioms are not assumed).
    """

    A: FinBialgebra
    H: FinBialgebra
    lact: LinMap
    ract: LinMap
    cocycle: LinMap
    name: str = ""

    def __post_init__(self):
        A, H = self.A.space, self.H.space
        HA, HH = tensor_space(H, A), tensor_space(H, H)
        object.__setattr__(self, "lact", self.lact.with_spaces(HA, H))
        object.__setattr__(self, "ract", self.ract.with_spaces(HA, A))
        object.__setattr__(self, "cocycle", self.cocycle.with_spaces(HH, A))

    @property
    def field(self):
        return self.A.field

    def replace(self, **changes) -> "ExtendingDatum":
        kw = dict(A=self.A, H=self.H, lact=self.lact, ract=self.ract, cocycle=self.cocycle, name=self.name)
        kw.update(changes)
        return ExtendingDatum(**kw)

    def __repr__(self):
        return f"ExtendingDatum({self.name or '?'}, dim A={self.A.dim}, dim H={self.H.dim})"


# ---------------------------------------------------------------------------
# trivial structure maps

def trivial_lact(A: FinBialgebra, H: FinBialgebra) -> LinMap:
    """``h◁a = ε(a)h``."""
    return tensor_map(identity(H.space, A.field), A.counit).with_spaces(tensor_space(H.space, A.space), H.space)


def trivial_ract(A: FinBialgebra, H: FinBialgebra) -> LinMap:
    """``h▷a = ε(h)a``."""
    return tensor_map(H.counit, identity(A.space, A.field)).with_spaces(tensor_space(H.space, A.space), A.space)


def trivial_cocycle(A: FinBialgebra, H: FinBialgebra) -> LinMap:
    """``f(h,g) = ε(h)ε(g)1_A``."""
    eps = tensor_map(H.counit, H.counit)
    return compose(A.unit, eps).with_spaces(tensor_space(H.space, H.space), A.space)


def trivial_datum(A: FinBialgebra, H: FinBialgebra, lact: LinMap | None = None, name: str = "") -> ExtendingDatum:
    return ExtendingDatum(A, H, lact if lact is not None else trivial_lact(A, H),
                          trivial_ract(A, H), trivial_cocycle(A, H), name)


def is_trivial_lact(D: ExtendingDatum) -> bool:
    return D.lact == trivial_lact(D.A, D.H)


def is_trivial_ract(D: ExtendingDatum) -> bool:
    return D.ract == trivial_ract(D.A, D.H)


def is_trivial_cocycle(D: ExtendingDatum) -> bool:
    return D.cocycle == trivial_cocycle(D.A, D.H)


def data_equal(D1: ExtendingDatum, D2: ExtendingDatum) -> bool:
    """Exact equality of all structure matrices."""
    pairs = [(D1.lact, D2.lact), (D1.ract, D2.ract), (D1.cocycle, D2.cocycle),
             (D1.H.mult, D2.H.mult), (D1.H.unit, D2.H.unit), (D1.H.comult, D2.H.comult),
             (D1.H.counit, D2.H.counit), (D1.A.mult, D2.A.mult), (D1.A.comult, D2.A.comult)]
    return all(x == y for x, y in pairs)


def data_diff(D1: ExtendingDatum, D2: ExtendingDatum) -> list[str]:
    names = ["◁", "▷", "f", "·", "1_H", "Δ_H", "ε_H"]
    pairs = [(D1.lact, D2.lact), (D1.ract, D2.ract), (D1.cocycle, D2.cocycle), (D1.H.mult, D2.H.mult),
             (D1.H.unit, D2.H.unit), (D1.H.comult, D2.H.comult), (D1.H.counit, D2.H.counit)]
    return [n for n, (x, y) in zip(names, pairs) if x != y]


# ---------------------------------------------------------------------------
# normalization and coalgebra-map requirements

def _conj(label: str, results: list[AxiomResult], required: bool = True) -> AxiomResult:
    """One entry that passes iff every partial check passes."""
    for r in results:
        if not r.passed and r.required:
            return AxiomResult(label, False, r.witness, required, r.note or r.label)
    return AxiomResult(label, True, None, required)


def check_extending_datum(D: ExtendingDatum) -> VerificationReport:
    A, H, F = D.A, D.H, D.field
    As, Hs = A.space, H.space
    rep = VerificationReport("extending datum")
    rep.extend(check_bialgebra(A), "A: ")
    rep.extend(check_coalgebra(H), "H: ")
    alg = check_algebra(H)
    rep.add(_conj("H: unital", [alg["unit left: 1x = x"], alg["unit right: x1 = x"]]))
    HA = tensor_coalgebra(H.coalgebra, A.coalgebra)
    HH = tensor_coalgebra(H.coalgebra, H.coalgebra)
    for sym, m, src, tgt in (("◁", D.lact, HA, H), ("▷", D.ract, HA, A), ("f", D.cocycle, HH, A)):
        rep.add(_conj(f"{sym} coalgebra map", check_coalgebra_map(m, src, tgt).results))

    th = Tensor.grid(F, h=Hs)
    ta = Tensor.grid(F, a=As)
    rep.add(compare("h▷1 = ε(h)1", th.insert("u", A.unit).apply(D.ract, ["h", "u"], ["o"]),
                    th.apply(H.counit, ["h"], []).insert("o", A.unit), ["o"], [Hs], [As]))
    rep.add(compare("1_H▷a = a", ta.insert("u", H.unit).apply(D.ract, ["u", "a"], ["o"]),
                    ta.rename("a", "o"), ["o"], [As], [As]))
    rep.add(compare("1_H◁a = ε(a)1_H", ta.insert("u", H.unit).apply(D.lact, ["u", "a"], ["o"]),
                    ta.apply(A.counit, ["a"], []).insert("o", H.unit), ["o"], [As], [Hs]))
    rep.add(compare("h◁1 = h", th.insert("u", A.unit).apply(D.lact, ["h", "u"], ["o"]),
                    th.rename("h", "o"), ["o"], [Hs], [Hs]))
    t0 = Tensor.grid(F)
    rep.add(compare("Δ_H(1) = 1⊗1", t0.insert("u", H.unit).apply(H.comult, ["u"], ["o1", "o2"]),
                    t0.insert("o1", H.unit).insert("o2", H.unit), ["o1", "o2"], [], [Hs, Hs]))
    eps_one = th.apply(H.counit, ["h"], []).insert("o", A.unit)
    rep.add(compare("f(h,1) = ε(h)1", th.insert("u", H.unit).apply(D.cocycle, ["h", "u"], ["o"]),
                    eps_one, ["o"], [Hs], [As]))
    rep.add(compare("f(1,h) = ε(h)1", th.insert("u", H.unit).apply(D.cocycle, ["u", "h"], ["o"]),
                    eps_one, ["o"], [Hs], [As]))
    return rep


# ---------------------------------------------------------------------------
# the compatibilities

def _h_bialgebra_entries(D: ExtendingDatum, rep: VerificationReport):
    H, F, Hs = D.H, D.field, D.H.space
    t = Tensor.grid(F, g=Hs, h=Hs)
    lhs = t.mul(H.mult, "g", "h", "p").apply(H.comult, ["p"], ["o1", "o2"])
    rhs = (t.split("g", H.comult, "g1", "g2").split("h", H.comult, "h1", "h2")
           .mul(H.mult, "g1", "h1", "o1").mul(H.mult, "g2", "h2", "o2"))
    r1 = compare("Δ_H(gh) = Δ_H(g)Δ_H(h)", lhs, rhs, ["o1", "o2"], [Hs, Hs], [Hs, Hs])
    t0 = Tensor.grid(F)
    r2 = compare("Δ_H(1) = 1⊗1", t0.insert("u", H.unit).apply(H.comult, ["u"], ["o1", "o2"]),
                 t0.insert("o1", H.unit).insert("o2", H.unit), ["o1", "o2"], [], [Hs, Hs])
    rep.add(_conj("Δ_H alg map", [r1, r2]))
    r1 = compare("ε_H(gh) = ε_H(g)ε_H(h)", t.mul(H.mult, "g", "h", "p").apply(H.counit, ["p"], []),
                 t.apply(H.counit, ["g"], []).apply(H.counit, ["h"], []), [], [Hs, Hs], [])
    r2 = compare("ε_H(1) = 1", t0.insert("u", H.unit).apply(H.counit, ["u"], []), t0, [], [], [])
    rep.add(_conj("ε_H alg map", [r1, r2]))


def _module_entries(D: ExtendingDatum) -> list[AxiomResult]:
    A, F, As, Hs = D.A, D.field, D.A.space, D.H.space
    t = Tensor.grid(F, h=Hs, a=As, b=As)
    lhs = t.mul(A.mult, "a", "b", "ab").apply(D.lact, ["h", "ab"], ["o"])
    rhs = t.apply(D.lact, ["h", "a"], ["x"]).apply(D.lact, ["x", "b"], ["o"])
    r1 = compare("h◁(ab) = (h◁a)◁b", lhs, rhs, ["o"], [Hs, As, As], [Hs])
    th = Tensor.grid(F, h=Hs)
    r2 = compare("h◁1 = h", th.insert("u", A.unit).apply(D.lact, ["h", "u"], ["o"]), th.rename("h", "o"),
                 ["o"], [Hs], [Hs])
    return [r1, r2]


def be_plans(D: ExtendingDatum) -> dict[str, tuple]:
    """Both sides of every compatibility as leg plans.

    Returns ``{label: (lhs, rhs, outs, rhs_outs, tag spaces, out spaces)}``.
    """
    A, H, F = D.A, D.H, D.field
    As, Hs = A.space, H.space
    mA, mH, dA, dH = A.mult, H.mult, A.comult, H.comult
    L, R, f = D.lact, D.ract, D.cocycle
    plans = {}

    # (g·h)·l = (g ◁ f(h1,l1)) · (h2·l2)
    t = Tensor.grid(F, g=Hs, h=Hs, l=Hs)
    lhs = t.mul(mH, "g", "h", "gh").mul(mH, "gh", "l", "o")
    rhs = (t.split("h", dH, "h1", "h2").split("l", dH, "l1", "l2")
           .apply(f, ["h1", "l1"], ["F"]).apply(L, ["g", "F"], ["G"])
           .mul(mH, "h2", "l2", "P").mul(mH, "G", "P", "o"))
    plans["BE1"] = (lhs, rhs, ["o"], None, [Hs, Hs, Hs], [Hs])

    # g▷(ab) = (g1▷a1)[(g2◁a2)▷b]
    t = Tensor.grid(F, g=Hs, a=As, b=As)
    lhs = t.mul(mA, "a", "b", "ab").apply(R, ["g", "ab"], ["o"])
    rhs = (t.split("g", dH, "g1", "g2").split("a", dA, "a1", "a2")
           .apply(R, ["g1", "a1"], ["X"]).apply(L, ["g2", "a2"], ["Y"])
           .apply(R, ["Y", "b"], ["Z"]).mul(mA, "X", "Z", "o"))
    plans["BE2"] = (lhs, rhs, ["o"], None, [Hs, As, As], [As])

    # (g·h)◁a = [g◁(h1▷a1)]·(h2◁a2)
    t = Tensor.grid(F, g=Hs, h=Hs, a=As)
    lhs = t.mul(mH, "g", "h", "gh").apply(L, ["gh", "a"], ["o"])
    rhs = (t.split("h", dH, "h1", "h2").split("a", dA, "a1", "a2")
           .apply(R, ["h1", "a1"], ["X"]).apply(L, ["g", "X"], ["Y"])
           .apply(L, ["h2", "a2"], ["Z"]).mul(mH, "Y", "Z", "o"))
    plans["BE3"] = (lhs, rhs, ["o"], None, [Hs, Hs, As], [Hs])

    # [g1▷(h1▷a1)] f(g2◁(h2▷a2), h3◁a3) = f(g1,h1)[(g2·h2)▷a]
    lhs = (t.split("g", dH, "g1", "g2").split("h", dH, "h1", "h2", "h3").split("a", dA, "a1", "a2", "a3")
           .apply(R, ["h1", "a1"], ["X1"]).apply(R, ["g1", "X1"], ["Lf"])
           .apply(R, ["h2", "a2"], ["X2"]).apply(L, ["g2", "X2"], ["Y"])
           .apply(L, ["h3", "a3"], ["Z"]).apply(f, ["Y", "Z"], ["Fv"]).mul(mA, "Lf", "Fv", "o"))
    rhs = (t.split("g", dH, "g1", "g2").split("h", dH, "h1", "h2")
           .apply(f, ["g1", "h1"], ["Fv"]).mul(mH, "g2", "h2", "P")
           .apply(R, ["P", "a"], ["Rv"]).mul(mA, "Fv", "Rv", "o"))
    plans["BE4"] = (lhs, rhs, ["o"], None, [Hs, Hs, As], [As])

    # (g1▷f(h1,l1)) f(g2◁f(h2,l2), h3·l3) = f(g1,h1) f(g2·h2, l)
    t = Tensor.grid(F, g=Hs, h=Hs, l=Hs)
    lhs = (t.split("g", dH, "g1", "g2").split("h", dH, "h1", "h2", "h3").split("l", dH, "l1", "l2", "l3")
           .apply(f, ["h1", "l1"], ["F1"]).apply(R, ["g1", "F1"], ["X"])
           .apply(f, ["h2", "l2"], ["F2"]).apply(L, ["g2", "F2"], ["Y"])
           .mul(mH, "h3", "l3", "P").apply(f, ["Y", "P"], ["F3"]).mul(mA, "X", "F3", "o"))
    rhs = (t.split("g", dH, "g1", "g2").split("h", dH, "h1", "h2")
           .apply(f, ["g1", "h1"], ["Fv"]).mul(mH, "g2", "h2", "P")
           .apply(f, ["P", "l"], ["F2"]).mul(mA, "Fv", "F2", "o"))
    plans["BE5"] = (lhs, rhs, ["o"], None, [Hs, Hs, Hs], [As])

    # g1◁a1 ⊗ g2▷a2 = g2◁a2 ⊗ g1▷a1
    t = Tensor.grid(F, g=Hs, a=As).split("g", dH, "g1", "g2").split("a", dA, "a1", "a2")
    lhs = t.apply(L, ["g1", "a1"], ["x"]).apply(R, ["g2", "a2"], ["y"])
    rhs = t.apply(L, ["g2", "a2"], ["x"]).apply(R, ["g1", "a1"], ["y"])
    plans["BE6"] = (lhs, rhs, ["x", "y"], None, [Hs, As], [Hs, As])

    # g1·h1 ⊗ f(g2,h2) = g2·h2 ⊗ f(g1,h1)
    t = Tensor.grid(F, g=Hs, h=Hs).split("g", dH, "g1", "g2").split("h", dH, "h1", "h2")
    lhs = t.mul(mH, "g1", "h1", "x").apply(f, ["g2", "h2"], ["y"])
    rhs = t.mul(mH, "g2", "h2", "x").apply(f, ["g1", "h1"], ["y"])
    plans["BE7"] = (lhs, rhs, ["x", "y"], None, [Hs, Hs], [Hs, As])
    return plans


BE_LABELS = ("BE1", "BE2", "BE3", "BE4", "BE5", "BE6", "BE7")


def check_BE(D: ExtendingDatum, only: tuple[str, ...] | None = None) -> VerificationReport:
    """BE1..BE7 plus the bialgebra-type requirements on ``H`` and ◁.

    ``only`` restricts the BE entries evaluated (the other entries are
    always included).
    """
    rep = VerificationReport("bialgebra extending structure")
    _h_bialgebra_entries(D, rep)
    rep.add(_conj("(H,◁) right module", _module_entries(D)))
    plans = be_plans(D)
    for label in BE_LABELS:
        if only is not None and label not in only:
            continue
        lhs, rhs, outs, rhs_outs, tags, out_spaces = plans[label]
        rep.add(compare(label, lhs, rhs, outs, tags, out_spaces, rhs_outs=rhs_outs))
    return rep


# ---------------------------------------------------------------------------
# special cases

def classify_special_case(D: ExtendingDatum) -> frozenset[str]:
    labels = {"unified"}
    if is_trivial_ract(D):
        labels.add("twisted")
        if is_trivial_cocycle(D):
            labels.add("smash")
    return frozenset(labels)


class PreconditionError(ValueError):
    pass


def check_twisted_conditions(D: ExtendingDatum) -> VerificationReport:
    """The reduced axiom list for a datum whose ▷ is trivial."""
    if not is_trivial_ract(D):
        raise PreconditionError("the twisted conditions need a trivial ▷")
    A, H, F = D.A, D.H, D.field
    As, Hs = A.space, H.space
    mA, mH, dA, dH = A.mult, H.mult, A.comult, H.comult
    L, f = D.lact, D.cocycle
    rep = VerificationReport("twisted extending structure")
    _h_bialgebra_entries(D, rep)

    t = Tensor.grid(F, g=Hs, h=Hs, a=As)
    lhs = t.mul(mH, "g", "h", "gh").apply(L, ["gh", "a"], ["o"])
    rhs = (t.split("a", dA, "a1", "a2").apply(L, ["g", "a1"], ["X"]).apply(L, ["h", "a2"], ["Y"])
           .mul(mH, "X", "Y", "o"))
    r3 = compare("(gh)◁a = (g◁a1)(h◁a2)", lhs, rhs, ["o"], [Hs, Hs, As], [Hs])
    ta = Tensor.grid(F, a=As)
    r4 = compare("1_H◁a = ε(a)1_H", ta.insert("u", H.unit).apply(L, ["u", "a"], ["o"]),
                 ta.apply(A.counit, ["a"], []).insert("o", H.unit), ["o"], [As], [Hs])
    rep.add(_conj("(H,◁) right module algebra", _module_entries(D) + [r3, r4]))

    plans = be_plans(D)
    lhs, rhs, outs, _, tags, outsp = plans["BE1"]
    rep.add(compare("(1)", lhs, rhs, outs, tags, outsp))

    # a1 f(g◁a2, h◁a3) = f(g,h) a
    lhs = (t.split("a", dA, "a1", "a2", "a3").apply(L, ["g", "a2"], ["X"]).apply(L, ["h", "a3"], ["Y"])
           .apply(f, ["X", "Y"], ["Fv"]).mul(mA, "a1", "Fv", "o"))
    rhs = t.apply(f, ["g", "h"], ["Fv"]).mul(mA, "Fv", "a", "o")
    rep.add(compare("(2)", lhs, rhs, ["o"], [Hs, Hs, As], [As]))

    # f(h1,l1) f(g◁f(h2,l2), h3·l3) = f(g1,h1) f(g2·h2, l)
    t = Tensor.grid(F, g=Hs, h=Hs, l=Hs)
    lhs = (t.split("h", dH, "h1", "h2", "h3").split("l", dH, "l1", "l2", "l3")
           .apply(f, ["h1", "l1"], ["F1"]).apply(f, ["h2", "l2"], ["F2"]).apply(L, ["g", "F2"], ["Y"])
           .mul(mH, "h3", "l3", "P").apply(f, ["Y", "P"], ["F3"]).mul(mA, "F1", "F3", "o"))
    _, rhs, _, _, _, _ = plans["BE5"]
    rep.add(compare("(3)", lhs, rhs, ["o"], [Hs, Hs, Hs], [As]))

    # g◁a1 ⊗ a2 = g◁a2 ⊗ a1
    t = Tensor.grid(F, g=Hs, a=As).split("a", dA, "a1", "a2")
    lhs = t.apply(L, ["g", "a1"], ["x"])
    rhs = t.apply(L, ["g", "a2"], ["x"])
    rep.add(compare("(4)", lhs, rhs, ["x", "a2"], [Hs, As], [Hs, As], rhs_outs=["x", "a1"]))

    lhs, rhs, outs, _, tags, outsp = plans["BE7"]
    rep.add(compare("(5)", lhs, rhs, outs, tags, outsp))
    return rep


def check_smash_conditions(A: FinBialgebra, H: FinBialgebra, lact: LinMap) -> VerificationReport:
    """``H`` a bialgebra, ``(H,◁)`` a right A-module bialgebra, and
    ``g◁a1 ⊗ a2 = g◁a2 ⊗ a1``."""
    D = trivial_datum(A, H, lact)
    rep = VerificationReport("smash datum")
    rep.extend(check_bialgebra(H), "H: ")
    HA = tensor_coalgebra(H.coalgebra, A.coalgebra)
    rep.add(_conj("◁ coalgebra map", check_coalgebra_map(D.lact, HA, H).results))
    tw = check_twisted_conditions(D)
    rep.add(tw["(H,◁) right module algebra"])
    rep.add(AxiomResult("g◁a1 ⊗ a2 = g◁a2 ⊗ a1", tw["(4)"].passed, tw["(4)"].witness))
    return rep
