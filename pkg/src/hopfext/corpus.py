"""Small named Hopf algebras and a deterministic corpus of extending data."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import FinAlgebra, FinBialgebra, HopfAlgebra, make_bialgebra, solve_antipode
from .datum import (
    BE_LABELS,
    ExtendingDatum,
    check_BE,
    check_extending_datum,
    is_trivial_cocycle,
    is_trivial_ract,
    trivial_datum,
)
from .gamma import GammaDatum, gamma_induced_datum
from .groups import (
    FiniteGroup,
    PointedMagma,
    RightGSet,
    cyclic,
    direct_product,
    enumerate_actions,
    group_algebra,
    magma_bialgebra,
    piecewise_magma,
    symmetric3,
    trivial_action,
)
from .gset import GSetDatum, to_gamma_datum
from .linalg import K, LinMap, VectorSpace, identity, tensor_space
from .reconstruction import FactorizationInput, SplitExtensionInput
from .scalars import QQ, Field


# ---------------------------------------------------------------------------
# named Hopf algebras

def _from_rules(labels, mult, unit: int, comult, counit, field: Field, name: str) -> HopfAlgebra:
    """Assemble a bialgebra from basis-level rules and solve for its antipode.

    ``mult(i, j)`` and ``comult(i)`` return ``{index or pair: coefficient}``.
    """
    V = VectorSpace(tuple(labels))
    n = V.dim
    VV = tensor_space(V, V)
    m = LinMap.from_columns(VV, V, [mult(i, j) for i in range(n) for j in range(n)], field)
    u = LinMap.from_columns(K, V, [{unit: field.one}], field)
    d = LinMap.from_columns(V, VV, [{a * n + b: c for (a, b), c in comult(i).items()} for i in range(n)], field)
    e = LinMap.from_columns(V, K, [{0: counit(i)} if counit(i) else {} for i in range(n)], field)
    B = make_bialgebra(V, m, u, d, e, name=name)
    S = solve_antipode(B)
    if S is None:
        raise ValueError(f"{name} has no antipode")
    return B.with_antipode(S)


def sweedler_h4(field: Field = QQ) -> HopfAlgebra:
    """Basis ``g^i x^j``: ``g² = 1``, ``x² = 0``, ``xg = -gx``,
    ``Δg = g⊗g``, ``Δx = x⊗1 + g⊗x``."""
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]
    idx = {e: k for k, e in enumerate(elems)}

    def mult(a, b):
        (i, j), (k, l) = elems[a], elems[b]
        if j + l > 1:
            return {}
        sign = -1 if (j and k) else 1
        return {idx[((i + k) % 2, j + l)]: sign}

    def comult(a):
        i, j = elems[a]
        gi = idx[(i, 0)]
        if not j:
            return {(gi, gi): 1}
        # g^i x ↦ g^i x ⊗ g^i + g^(i+1) ⊗ g^i x
        return {(a, gi): 1, (idx[((i + 1) % 2, 0)], a): 1}

    return _from_rules(["1", "g", "x", "gx"], mult, 0, comult, lambda a: 1 if elems[a][1] == 0 else 0,
                       field, "H4")


def dual_group_algebra(G: FiniteGroup, field: Field = QQ) -> HopfAlgebra:
    """``k^G`` with basis ``δ_g``: ``δ_g δ_h = [g = h] δ_g``,
    ``Δδ_g = Σ_{ab=g} δ_a ⊗ δ_b``, unit ``Σ δ_g``."""
    n = G.order
    labels = ["d" + s for s in G.labels]
    V = VectorSpace(tuple(labels))
    VV = tensor_space(V, V)
    one = field.one
    m = LinMap.from_columns(VV, V, [{i: one} if i == j else {} for i in range(n) for j in range(n)], field)
    u = LinMap.from_columns(K, V, [{i: one for i in range(n)}], field)
    d = LinMap.from_columns(V, VV, [{a * n + G.mul(G.inv(a), g): one for a in range(n)} for g in range(n)], field)
    e = LinMap.from_columns(V, K, [{0: one} if g == G.identity else {} for g in range(n)], field)
    S = LinMap.from_columns(V, V, [{G.inv(g): one} for g in range(n)], field)
    return make_bialgebra(V, m, u, d, e, antipode=S, name=f"k^{G.name}")


def grouplike_action(A: FinBialgebra, H: FinBialgebra, table, field: Field = QQ) -> LinMap:
    """``◁: H⊗A -> H`` from ``table[h][a] = {index: coeff}`` (or an index)."""
    cols = []
    for h in range(H.dim):
        for a in range(A.dim):
            v = table[h][a]
            cols.append({v: field.one} if isinstance(v, int) else v)
    return LinMap.from_columns(tensor_space(H.space, A.space), H.space, cols, field)


def automorphism_action(G: FiniteGroup, H: FinBialgebra, autos, field: Field = QQ) -> LinMap:
    """``h◁g = σ_g(h)`` for linear maps ``autos[g]`` given as column dicts."""
    A = group_algebra(G, field)
    return grouplike_action(A, H, [[autos[g][h] for g in range(G.order)] for h in range(H.dim)], field)


# ---------------------------------------------------------------------------
# the corpus

@dataclass(frozen=True, eq=False)
class CorpusDatum:
    name: str
    datum: ExtendingDatum
    family: str

    @property
    def combination(self) -> tuple[bool, bool]:
        """``(▷ trivial, f trivial)``."""
        return is_trivial_ract(self.datum), is_trivial_cocycle(self.datum)


def _group_magma(G: FiniteGroup) -> PointedMagma:
    return PointedMagma(G.table, G.identity, G.labels)


def four_combinations(field: Field = QQ) -> list[CorpusDatum]:
    """One group-like datum for each of ``▷ ∈ {trivial, not}``, ``f ∈ {trivial, not}``."""
    C2, S3 = cyclic(2), symmetric3()
    X2 = piecewise_magma(2)
    t = S3.labels.index("t")
    items = [
        ("smash C2/X2", GSetDatum(C2, X2, trivial_action(X2, C2), (0, 0))),
        ("twisted C2/X2 γ(x)=g", GSetDatum(C2, X2, trivial_action(X2, C2), (0, 1))),
        ("S3/C2 γ hom", GSetDatum(S3, _group_magma(C2), trivial_action(_group_magma(C2), S3), (0, t))),
        ("S3/X2 γ(x)=t", GSetDatum(S3, X2, trivial_action(X2, S3), (0, t))),
    ]
    return [CorpusDatum(name, gamma_induced_datum(to_gamma_datum(D, field)), "gamma") for name, D in items]


def tensor_data(field: Field = QQ) -> list[CorpusDatum]:
    As = [group_algebra(cyclic(n), field) for n in (1, 2, 3)] + [
        group_algebra(symmetric3(), field), sweedler_h4(field), dual_group_algebra(cyclic(2), field),
        dual_group_algebra(symmetric3(), field)]
    Hs = [group_algebra(cyclic(2), field), magma_bialgebra(piecewise_magma(3), field),
          sweedler_h4(field), dual_group_algebra(cyclic(3), field)]
    out = []
    for A, H in itertools.product(As, Hs):
        if A.dim * H.dim <= 16 or (A.dim, H.dim) in ((6, 2), (6, 3)):
            out.append(CorpusDatum(f"{A.name}⊗{H.name}", trivial_datum(A, H), "tensor"))
    return out


def smash_data(field: Field = QQ) -> list[CorpusDatum]:
    C2, C3 = cyclic(2), cyclic(3)
    A = group_algebra(C2, field)
    H4 = sweedler_h4(field)
    ident = [{h: 1} for h in range(4)]
    neg = [{0: 1}, {1: 1}, {2: -1}, {3: -1}]
    out = [CorpusDatum("k[C2]#H4, x↦-x", trivial_datum(A, H4, automorphism_action(C2, H4, [ident, neg], field)),
                       "smash")]
    kC3 = dual_group_algebra(C3, field)
    inv = [{C3.inv(h): 1} for h in range(3)]
    out.append(CorpusDatum("k[C2]#k^C3, inversion",
                           trivial_datum(A, kC3, automorphism_action(C2, kC3, [[{h: 1} for h in range(3)], inv],
                                                                      field)), "smash"))
    kC3g = group_algebra(C3, field)
    out.append(CorpusDatum("k[C2]#k[C3], inversion",
                           trivial_datum(A, kC3g, automorphism_action(C2, kC3g, [[{h: 1} for h in range(3)], inv],
                                                                       field)), "smash"))
    # γ ≡ 1 on piecewise G-sets: k[G] # k[X]
    for G, n in ((cyclic(2), 3), (cyclic(3), 4), (symmetric3(), 3), (direct_product(C2, C2, "V4"), 3)):
        X = piecewise_magma(n)
        act = enumerate_actions(X, G)[-1]
        D = GSetDatum(G, X, RightGSet(X, act.act), (0,) * n)
        out.append(CorpusDatum(f"k[{G.name}]#k[X{n}]", gamma_induced_datum(to_gamma_datum(D, field)), "smash"))
    return out


def gamma_data(field: Field = QQ) -> list[CorpusDatum]:
    """γ-induced data: group-like ones and two over Sweedler's H4."""
    out = []
    specs = [(cyclic(2), 2), (cyclic(2), 3), (cyclic(3), 2), (cyclic(3), 3), (cyclic(4), 2),
             (direct_product(cyclic(2), cyclic(2), "V4"), 3), (cyclic(6), 2), (symmetric3(), 2), (symmetric3(), 3),
             (cyclic(2), 4), (symmetric3(), 4)]
    for G, n in specs:
        X = piecewise_magma(n)
        acts = enumerate_actions(X, G)
        act = acts[-1]
        gamma = tuple([G.identity] + [(k % (G.order - 1)) + 1 for k in range(n - 1)]) if G.order > 1 else (0,) * n
        D = GSetDatum(G, X, RightGSet(X, act.act), gamma)
        out.append(CorpusDatum(f"γ {G.name}/X{n} γ={gamma}", gamma_induced_datum(to_gamma_datum(D, field)),
                               "gamma"))
    # trivial action, varying γ
    for G, n, gamma in ((cyclic(5), 2, (0, 2)), (cyclic(4), 3, (0, 1, 3)), (cyclic(6), 3, (0, 5, 2)),
                        (symmetric3(), 2, (0, 4)), (cyclic(2), 4, (0, 1, 0, 1)),
                        (direct_product(cyclic(2), cyclic(2), "V4"), 4, (0, 1, 2, 3))):
        X = piecewise_magma(n)
        D = GSetDatum(G, X, trivial_action(X, G), gamma)
        out.append(CorpusDatum(f"γ {G.name}/X{n} trivial ◁ γ={gamma}",
                               gamma_induced_datum(to_gamma_datum(D, field)), "gamma"))
    # A = H4 with γ(t) = g on H = k[C2] and on H = k[X2]
    H4 = sweedler_h4(field)
    for H in (group_algebra(cyclic(2), field), magma_bialgebra(piecewise_magma(2), field)):
        lact = grouplike_action(H4, H, [[{h: 1} if a < 2 else {} for a in range(4)] for h in range(2)], field)
        gamma = LinMap.from_columns(H.space, H4.space, [{0: 1}, {1: 1}], field)
        G = GammaDatum(H4, H, lact, gamma, f"H4/{H.name}")
        out.append(CorpusDatum(f"γ H4/{H.name} γ=g", gamma_induced_datum(G), "gamma-h4"))
    return out


def generate_corpus(field: Field = QQ) -> list[CorpusDatum]:
    """Deterministic corpus: every datum passes the full verification."""
    return four_combinations(field) + tensor_data(field) + smash_data(field) + gamma_data(field)


# ---------------------------------------------------------------------------
# perturbations

@dataclass(frozen=True, eq=False)
class Perturbed:
    name: str
    datum: ExtendingDatum
    failing: str


def _replace_column(f: LinMap, col: int, target: int) -> LinMap:
    m = f.matrix.copy()
    m.flags.writeable = True
    m[:, col] = f.field.zero
    m[target, col] = f.field.one
    return LinMap(f.domain, f.codomain, m, f.field)


def _is_single_column(f: LinMap, col: int) -> int | None:
    nz = [i for i, v in enumerate(f.matrix[:, col]) if v]
    return nz[0] if len(nz) == 1 and f.matrix[nz[0], col] == 1 else None


def single_failure_data(bases: list[CorpusDatum], want: int = 14, per_label: int = 4) -> list[Perturbed]:
    """Group-like data with one structure-map column moved to another basis
    vector such that exactly one of BE1..BE7 fails and every other
    requirement still holds."""
    out: list[Perturbed] = []
    seen: dict[str, int] = {}
    for base in bases:
        D = base.datum
        A, H = D.A, D.H
        for which in ("ract", "cocycle", "lact", "mult"):
            f = H.mult if which == "mult" else getattr(D, which)
            nH = H.dim
            inner = A.dim if which in ("ract", "lact") else nH
            for col in range(f.domain.dim):
                h, a = divmod(col, inner)
                if h == 0 or a == 0:
                    continue  # keep the normalization conditions
                cur = _is_single_column(f, col)
                if cur is None:
                    continue
                for target in range(f.codomain.dim):
                    if target == cur:
                        continue
                    g = _replace_column(f, col, target)
                    if which == "mult":
                        alg = FinAlgebra(H.space, g, H.unit, assoc_required=False)
                        P = D.replace(H=FinBialgebra(alg, H.coalgebra, None, H.name))
                    else:
                        P = D.replace(**{which: g})
                    if not check_extending_datum(P).ok:
                        continue
                    rep = check_BE(P)
                    pre_ok = all(rep[l].passed for l in ("Δ_H alg map", "ε_H alg map", "(H,◁) right module"))
                    bad = [l for l in BE_LABELS if not rep[l].passed]
                    if not pre_ok or len(bad) != 1 or seen.get(bad[0], 0) >= per_label:
                        continue
                    seen[bad[0]] = seen.get(bad[0], 0) + 1
                    out.append(Perturbed(f"{base.name}: {which}[{col}]→{target}", P, bad[0]))
                    break
                if len(out) >= want:
                    return out
    return out


# ---------------------------------------------------------------------------
# factorizations and split extensions

def s3_factorization(field: Field = QQ) -> FactorizationInput:
    """``k[S3]`` with ``A = k[C3] = k[⟨r⟩]`` and ``H = k[{1, t}]``."""
    S3 = symmetric3()
    E = group_algebra(S3, field)
    C3 = cyclic(3)
    A = group_algebra(C3, field)
    r = S3.labels.index("r")
    powers = [S3.identity, r, S3.mul(r, r)]
    i = LinMap.from_columns(A.space, E.space, [{p: 1} for p in powers], field)
    X = PointedMagma([[0, 1], [1, 0]], 0, ("1", "t"))
    H = magma_bialgebra(X, field)
    t = S3.labels.index("t")
    j = LinMap.from_columns(H.space, E.space, [{S3.identity: 1}, {t: 1}], field)
    return FactorizationInput(E, A, H.coalgebra, i, j)


def sign_split(field: Field = QQ) -> SplitExtensionInput:
    """``k[C2] -> k[S3] -> k[C2]`` through a transposition and the sign."""
    S3 = symmetric3()
    E = group_algebra(S3, field)
    A = group_algebra(cyclic(2), field)
    t = S3.labels.index("t")
    i = LinMap.from_columns(A.space, E.space, [{S3.identity: 1}, {t: 1}], field)
    odd = {k for k, s in enumerate(S3.labels) if s.startswith("t")}
    pi = LinMap.from_columns(E.space, A.space, [{1 if k in odd else 0: 1} for k in range(6)], field)
    return SplitExtensionInput(E, A, i, pi)


def coset_split(field: Field = QQ) -> SplitExtensionInput:
    """``k[C2] -> k[S3]`` with the retraction ``π(a r) = a`` on right cosets
    of ``{1, t}``: a coalgebra and left module map that is not multiplicative."""
    S3 = symmetric3()
    E = group_algebra(S3, field)
    A = group_algebra(cyclic(2), field)
    t = S3.labels.index("t")
    i = LinMap.from_columns(A.space, E.space, [{S3.identity: 1}, {t: 1}], field)
    cols = []
    for k in range(6):
        cols.append({0: 1} if k in (S3.identity, *_coset_reps(S3, t)) else {1: 1})
    pi = LinMap.from_columns(E.space, A.space, cols, field)
    return SplitExtensionInput(E, A, i, pi)


def _coset_reps(S3: FiniteGroup, t: int) -> list[int]:
    """Representatives of the right cosets ``{1,t}g`` other than the subgroup itself."""
    reps, covered = [], {S3.identity, t}
    for g in range(S3.order):
        if g not in covered:
            # alternate between g and tg so the representatives do not form a subgroup
            reps.append(g if len(reps) % 2 == 0 else S3.mul(t, g))
            covered |= {g, S3.mul(t, g)}
    return reps


def h4_projection(field: Field = QQ) -> SplitExtensionInput:
    """``k[C2] -> H4 -> k[C2]`` killing ``x``: a split epimorphism of Hopf
    algebras whose coinvariants ``span{1, gx}`` are not a subcoalgebra."""
    H4 = sweedler_h4(field)
    A = group_algebra(cyclic(2), field)
    i = LinMap.from_columns(A.space, H4.space, [{0: 1}, {1: 1}], field)
    pi = LinMap.from_columns(H4.space, A.space, [{0: 1}, {1: 1}, {}, {}], field)
    return SplitExtensionInput(H4, A, i, pi)


def canonical_split(P) -> SplitExtensionInput:
    from .products import canonical_maps

    cm = canonical_maps(P)
    return SplitExtensionInput(P, P.datum.A, cm.i_A, cm.pi_A)


def trivial_split(A: FinBialgebra) -> SplitExtensionInput:
    I = identity(A.space, A.field)
    return SplitExtensionInput(A, A, I, I)
