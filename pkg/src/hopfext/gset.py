"""Group-like extending data built from ``(G, X, ·, ◁, γ)``.

Compatibilities, for ``c(y,z) = γ(y)γ(z)γ(y·z)⁻¹``::

    (be1)  (x·y)·z = (x◁c(y,z))·(y·z)
    (be3)  (x·y)◁g = (x◁(γ(y) g γ(y◁g)⁻¹))·(y◁g)
"""
from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .core import FinAlgebra, tensor_coalgebra
from .gamma import GammaDatum, circled_transport, induced_datum, verify_isomorphism
from .groups import (
    FiniteGroup,
    PointedMagma,
    RightGSet,
    enumerate_actions,
    group_algebra,
    magma_bialgebra,
    piecewise_magma,
    small_groups,
    validate_gset,
)
from .linalg import K, LinMap, tensor_space
from .products import InvalidDatumError, ProductBialgebra, unified_product
from .report import AxiomResult, VerificationReport, Witness
from .scalars import QQ, Field


@dataclass(frozen=True)
class GSetDatum:
    G: FiniteGroup
    X: PointedMagma
    act: RightGSet
    gamma: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(int(v) for v in self.gamma))

    def c(self, y: int, z: int) -> int:
        G, g, op = self.G, self.gamma, self.X.table
        return G.prod(g[y], g[z], G.inv(g[op[y][z]]))

    def describe(self) -> str:
        return f"G={self.G.name} |X|={self.X.size} op={self.X.table} act={self.act.act} γ={self.gamma}"


def _be1_violation(G, op, act, gamma, n):
    inv, mul = G.inverses, G.table
    for x in range(n):
        for y in range(n):
            xy = op[x][y]
            for z in range(n):
                yz = op[y][z]
                c = mul[mul[gamma[y]][gamma[z]]][inv[gamma[yz]]]
                if op[xy][z] != op[act[x][c]][yz]:
                    return (x, y, z)
    return None


def _be3_violation(G, op, act, gamma, n):
    inv, mul = G.inverses, G.table
    for x in range(n):
        for y in range(n):
            xy = op[x][y]
            for g in range(G.order):
                yg = act[y][g]
                c = mul[mul[gamma[y]][g]][inv[gamma[yg]]]
                if act[xy][g] != op[act[x][c]][yg]:
                    return (x, y, g)
    return None


def validate_gset_datum(D: GSetDatum) -> VerificationReport:
    G, X, n = D.G, D.X, D.X.size
    rep = VerificationReport("G-set datum")
    rep.extend(validate_gset(D.act, G))
    shape = len(D.gamma) == n and all(0 <= v < G.order for v in D.gamma)
    rep.check("γ: X -> G is a table", shape)
    if not rep.ok:
        return rep
    ok = D.gamma[X.base] == G.identity
    rep.add(AxiomResult("γ(1_X) = 1_G", ok, None if ok else
                        Witness((X.base,), (X.labels[X.base],), G.labels[D.gamma[X.base]], G.labels[G.identity])))
    op, act, gm = X.table, D.act.act, D.gamma
    bad = _be1_violation(G, op, act, gm, n)
    if bad is None:
        rep.add(AxiomResult("(be1)", True))
    else:
        x, y, z = bad
        lhs = op[op[x][y]][z]
        rhs = op[act[x][D.c(y, z)]][op[y][z]]
        rep.add(AxiomResult("(be1)", False, Witness(bad, tuple(X.labels[i] for i in bad), X.labels[lhs], X.labels[rhs])))
    bad = _be3_violation(G, op, act, gm, n)
    if bad is None:
        rep.add(AxiomResult("(be3)", True))
    else:
        x, y, g = bad
        yg = act[y][g]
        c = G.prod(gm[y], g, G.inv(gm[yg]))
        lhs, rhs = act[op[x][y]][g], op[act[x][c]][yg]
        rep.add(AxiomResult("(be3)", False, Witness(bad, (X.labels[x], X.labels[y], G.labels[g]),
                                                    X.labels[lhs], X.labels[rhs])))
    return rep


# ---------------------------------------------------------------------------
# linear-algebra views

def to_gamma_datum(D: GSetDatum, field: Field = QQ) -> GammaDatum:
    A = group_algebra(D.G, field)
    H = magma_bialgebra(D.X, field)
    n, m = D.X.size, D.G.order
    HA = tensor_space(H.space, A.space)
    lact = LinMap.from_columns(HA, H.space, [{D.act.act[x][g]: field.one} for x in range(n) for g in range(m)], field)
    gamma = LinMap.from_columns(H.space, A.space, [{D.gamma[x]: field.one} for x in range(n)], field)
    return GammaDatum(A, H, lact, gamma, f"{D.G.name}/X{n}")


def _grouplike_product(D: GSetDatum, rule, kind: str, field: Field) -> ProductBialgebra:
    Gd = to_gamma_datum(D, field)
    A, H = Gd.A, Gd.H
    n, m = D.X.size, D.G.order
    P = tensor_space(A.space, H.space)
    cols = []
    for g, x, h, y in itertools.product(range(m), range(n), range(m), range(n)):
        a, z = rule(g, x, h, y)
        cols.append({a * n + z: field.one})
    mult = LinMap.from_columns(tensor_space(P, P), P, cols, field)
    unit = LinMap.from_columns(K, P, [{D.G.identity * n + D.X.base: field.one}], field)
    coalg = tensor_coalgebra(A.coalgebra, H.coalgebra)
    alg = FinAlgebra(P, mult, unit)
    datum = induced_datum(Gd) if kind == "unified" else None
    return ProductBialgebra(alg, coalg, None, f"k[{D.G.name}]{'⋉' if kind == 'unified' else '⊛'}k[X]",
                            kind, datum, A, H, Gd.gamma)


def _require_valid(D: GSetDatum, force: bool):
    if not force:
        rep = validate_gset_datum(D)
        if not rep.ok:
            raise InvalidDatumError("invalid G-set datum", rep)


def build_gset_unified(D: GSetDatum, field: Field = QQ, force: bool = False) -> ProductBialgebra:
    """``(g⋉x)(h⋉y) = g γ(x) h γ(y) γ((x◁h)·y)⁻¹ ⋉ (x◁h)·y``."""
    _require_valid(D, force)
    G, op, act, gm = D.G, D.X.table, D.act.act, D.gamma

    def rule(g, x, h, y):
        z = op[act[x][h]][y]
        return G.prod(g, gm[x], h, gm[y], G.inv(gm[z])), z

    return _grouplike_product(D, rule, "unified", field)


READINGS = ("general", "printed")


def build_gset_circled(D: GSetDatum, field: Field = QQ, reading: str = "general",
                       force: bool = False) -> ProductBialgebra:
    """``(g⊛x)(h⊛y) = gh ⊛ (x◁(h γ(y)⁻¹))·y``.

    ``reading="printed"`` uses the alternative parenthesisation
    ``x◁((h γ(y))⁻¹)``, kept only so that the two can be compared.
    """
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    _require_valid(D, force)
    G, op, act, gm = D.G, D.X.table, D.act.act, D.gamma

    def rule(g, x, h, y):
        if reading == "general":
            k = G.mul(h, G.inv(gm[y]))
        else:
            k = G.inv(G.mul(h, gm[y]))
        return G.mul(g, h), op[act[x][k]][y]

    return _grouplike_product(D, rule, "circled", field)


@dataclass(frozen=True)
class Arbitration:
    datum: GSetDatum
    verdicts: dict  # reading -> "consistent" | "inconsistent"
    associative: dict  # reading -> bool
    matches_generic: bool
    reports: dict = field(default_factory=dict)

    def format(self) -> str:
        lines = [f"⊛ arbitration on {self.datum.describe()}"]
        for r in READINGS:
            lines.append(f"  {r:<8} reading: {self.verdicts[r]} with φ(g⋉x) = gγ(x)⊛x"
                         f" (associative: {'yes' if self.associative[r] else 'no'})")
            for res in self.reports[r].results:
                lines.append("    " + res.line())
        lines.append(f"  general reading equals the γ-deformed product built from Hopf data: "
                     f"{'yes' if self.matches_generic else 'no'}")
        return "\n".join(lines)

    @property
    def decisive(self) -> bool:
        return len(set(self.verdicts.values())) == 2


def arbitrate_circled(D: GSetDatum, field: Field = QQ) -> Arbitration:
    """Test both readings of the group-like ⊛ multiplication against the
    transport ``φ(g⋉x) = g γ(x) ⊛ x`` of ``k[G]⋉k[X]``."""
    from .core import check_algebra
    from .products import circled_product

    U = build_gset_unified(D, field)
    Gd = to_gamma_datum(D, field)
    phi, phi_inv = circled_transport(Gd.A, Gd.H, Gd.gamma)
    verdicts, assoc, reports = {}, {}, {}
    for r in READINGS:
        C = build_gset_circled(D, field, r)
        rep = verify_isomorphism(phi, phi_inv, U, C, f"φ onto the {r} reading")
        reports[r] = rep
        verdicts[r] = "consistent" if rep.ok else "inconsistent"
        assoc[r] = check_algebra(C)["associativity: (xy)z = x(yz)"].passed
    generic = circled_product(Gd.A, Gd.H, Gd.lact, Gd.gamma, force=True)
    general = build_gset_circled(D, field, "general")
    same = generic.mult == general.mult and generic.comult == general.comult
    return Arbitration(D, verdicts, assoc, same, reports)


# ---------------------------------------------------------------------------
# enumeration

def _gammas(G: FiniteGroup, X: PointedMagma) -> Iterator[tuple[int, ...]]:
    others = [x for x in range(X.size) if x != X.base]
    for vals in itertools.product(range(G.order), repeat=len(others)):
        g = [G.identity] * X.size
        for x, v in zip(others, vals):
            g[x] = v
        yield tuple(g)


def _search_ops(G: FiniteGroup, n: int, act, gamma) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All operation tables with unit 0 satisfying (be1) and (be3), in
    lexicographic order, by backtracking over the non-unit cells."""
    inv, mul = G.inverses, G.table
    op = [[x if y == 0 else (y if x == 0 else -1) for y in range(n)] for x in range(n)]
    cells = [(x, y) for x in range(1, n) for y in range(1, n)]

    def consistent() -> bool:
        for x in range(n):
            for y in range(n):
                xy = op[x][y]
                if xy < 0:
                    continue
                for z in range(n):
                    yz = op[y][z]
                    if yz < 0:
                        continue
                    lhs = op[xy][z]
                    if lhs < 0:
                        continue
                    c = mul[mul[gamma[y]][gamma[z]]][inv[gamma[yz]]]
                    rhs = op[act[x][c]][yz]
                    if rhs >= 0 and lhs != rhs:
                        return False
                for g in range(G.order):
                    yg = act[y][g]
                    c = mul[mul[gamma[y]][g]][inv[gamma[yg]]]
                    rhs = op[act[x][c]][yg]
                    if rhs >= 0 and act[xy][g] != rhs:
                        return False
        return True

    def rec(k):
        if k == len(cells):
            yield tuple(tuple(r) for r in op)
            return
        x, y = cells[k]
        for v in range(n):
            op[x][y] = v
            if consistent():
                yield from rec(k + 1)
        op[x][y] = -1

    yield from rec(0)


def fingerprint(D: GSetDatum) -> str:
    """SHA-256 of the sorted nonzero structure constants of ``k[G]⋉k[X]``."""
    G, op, act, gm, n, m = D.G, D.X.table, D.act.act, D.gamma, D.X.size, D.G.order
    triples = []
    for g, x, h, y in itertools.product(range(m), range(n), range(m), range(n)):
        z = op[act[x][h]][y]
        a = G.prod(g, gm[x], h, gm[y], G.inv(gm[z]))
        triples.append(((g * n + x) * m * n + h * n + y, a * n + z, 1))
    return hashlib.sha256(repr(sorted(triples)).encode()).hexdigest()[:16]


@dataclass(frozen=True)
class CatalogEntry:
    datum: GSetDatum
    fingerprint: str

    def as_dict(self) -> dict:
        D = self.datum
        return {"group": D.G.name, "x_size": D.X.size, "op": [list(r) for r in D.X.table],
                "action": [list(r) for r in D.act.act], "gamma": list(D.gamma),
                "fingerprint": self.fingerprint}


def iter_gset_data(max_G: int, max_X: int, op_family: str = "piecewise",
                   groups: list[FiniteGroup] | None = None) -> Iterator[GSetDatum]:
    """Valid G-set data in deterministic order: group, |X|, action, γ, operation."""
    if op_family not in ("piecewise", "all"):
        raise ValueError("op_family must be 'piecewise' or 'all'")
    if max_G > 8 or max_X > 5:
        raise ValueError("enumeration is limited to |G| <= 8 and |X| <= 5")
    groups = groups if groups is not None else small_groups(max_G)
    for G in groups:
        for n in range(1, max_X + 1):
            carrier = piecewise_magma(n)
            for action in enumerate_actions(carrier, G):
                for gamma in _gammas(G, carrier):
                    if op_family == "piecewise":
                        D = GSetDatum(G, carrier, RightGSet(carrier, action.act), gamma)
                        if validate_gset_datum(D).ok:
                            yield D
                        continue
                    for table in _search_ops(G, n, action.act, gamma):
                        X = PointedMagma(table, 0)
                        D = GSetDatum(G, X, RightGSet(X, action.act), gamma)
                        if validate_gset_datum(D).ok:
                            yield D


def enumerate_gset_data(max_G: int, max_X: int, op_family: str = "piecewise",
                        groups: list[FiniteGroup] | None = None) -> list[CatalogEntry]:
    return [CatalogEntry(D, fingerprint(D)) for D in iter_gset_data(max_G, max_X, op_family, groups)]


def gamma_counts(entries: list[CatalogEntry]) -> dict[tuple, int]:
    """Number of valid γ per ``(group, |X|, operation, action)``."""
    out: dict[tuple, int] = {}
    for e in entries:
        D = e.datum
        key = (D.G.name, D.X.size, D.X.table, D.act.act)
        out[key] = out.get(key, 0) + 1
    return out


def gset_pipeline(D: GSetDatum, field: Field = QQ) -> VerificationReport:
    """The full γ pipeline on ``k[G]``, ``k[X]`` plus agreement of the direct
    group-like builder with the generic unified product."""
    from .gamma import gamma_pipeline

    Gd = to_gamma_datum(D, field)
    rep = gamma_pipeline(Gd)
    if rep.ok:
        generic = unified_product(induced_datum(Gd), force=True)
        direct = build_gset_unified(D, field, force=True)
        rep.check("direct builder = generic unified product", generic.mult == direct.mult)
    return rep
