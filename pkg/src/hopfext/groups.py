"""Finite groups, pointed magmas and right G-sets given by tables, and the
bialgebras they span."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from .core import FinAlgebra, FinBialgebra, FinCoalgebra, HopfAlgebra, make_bialgebra
from .linalg import K, LinMap, VectorSpace, tensor_space
from .report import AxiomResult, VerificationReport, Witness
from .scalars import QQ, Field


class GroupError(ValueError):
    pass


def _table(rows) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in r) for r in rows)


@dataclass(frozen=True)
class FiniteGroup:
    """A group by its Cayley table: ``table[a][b]`` is the index of ``ab``."""

    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    labels: tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "table", _table(self.table))
        n = len(self.table)
        if not self.labels:
            object.__setattr__(self, "labels", tuple("1" if i == self.identity else f"g{i}" for i in range(n)))
        object.__setattr__(self, "labels", tuple(self.labels))
        rep = group_report(self)
        if not rep.ok:
            raise GroupError(f"invalid group table{' ' + self.name if self.name else ''}: {rep.failed()}")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        e = self.identity
        return tuple(next(b for b in range(self.order) if self.table[a][b] == e) for a in range(self.order))

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def prod(self, *elems: int) -> int:
        out = self.identity
        for x in elems:
            out = self.table[out][x]
        return out

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A greedy generating set (first element not yet generated, in index order)."""
        gens: list[int] = []
        span = {self.identity}
        for g in range(self.order):
            if g not in span:
                gens.append(g)
                span = self._closure(gens)
        return tuple(gens)

    def _closure(self, gens: Sequence[int]) -> set[int]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            w = frontier.pop()
            for s in gens:
                v = self.table[w][s]
                if v not in seen:
                    seen.add(v)
                    frontier.append(v)
        return seen

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"


def group_report(G: FiniteGroup) -> VerificationReport:
    rep = VerificationReport("group")
    t, n, e = G.table, len(G.table), G.identity
    shape_ok = n > 0 and all(len(r) == n for r in t) and all(0 <= v < n for r in t for v in r) and 0 <= e < n
    rep.check("table is n×n over range(n)", shape_ok)
    if not shape_ok:
        return rep
    rep.check("labels distinct", len(G.labels) == n and len(set(G.labels)) == n)
    bad = next(((a,) for a in range(n) if t[e][a] != a or t[a][e] != a), None)
    rep.add(AxiomResult("identity", bad is None,
                        None if bad is None else Witness(bad, (str(bad[0]),), "e·a or a·e", "a")))
    latin = all(len(set(r)) == n for r in t) and all(len({t[a][b] for a in range(n)}) == n for b in range(n))
    rep.check("Latin square (inverses exist)", latin)
    bad = next(((a, b, c) for a in range(n) for b in range(n) for c in range(n)
                if t[t[a][b]][c] != t[a][t[b][c]]), None)
    rep.add(AxiomResult("associativity", bad is None, None if bad is None else
                        Witness(bad, tuple(map(str, bad)), str(t[t[bad[0]][bad[1]]][bad[2]]),
                                str(t[bad[0]][t[bad[1]][bad[2]]]))))
    return rep


# ---------------------------------------------------------------------------
# small groups

def cyclic(n: int) -> FiniteGroup:
    labels = tuple("1" if i == 0 else (f"c{i}" if n > 2 else "g") for i in range(n))
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)], 0, labels, f"C{n}")


def _from_elements(elems: list, mul, name: str, labels=None) -> FiniteGroup:
    index = {x: i for i, x in enumerate(elems)}
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return FiniteGroup(table, 0, tuple(labels) if labels else (), name)


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str = "") -> FiniteGroup:
    pairs = [(a, b) for a in range(G.order) for b in range(H.order)]
    labels = ["1" if p == (G.identity, H.identity) else f"({G.labels[p[0]]},{H.labels[p[1]]})" for p in pairs]
    return _from_elements(pairs, lambda x, y: (G.mul(x[0], y[0]), H.mul(x[1], y[1])),
                          name or f"{G.name}x{H.name}", labels)


def _compose_perm(p, q):
    """Permutation product ``pq`` acting on the right: first p, then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def symmetric3() -> FiniteGroup:
    """S3 on {0,1,2}; elements ordered 1, (012), (021), (01), (02), (12)."""
    elems = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (2, 1, 0), (0, 2, 1)]
    labels = ["1", "r", "r2", "t", "tr", "tr2"]
    return _from_elements(elems, _compose_perm, "S3", labels)


def dihedral4() -> FiniteGroup:
    """Symmetries of the square as permutations of its vertices 0..3."""
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    elems = [(0, 1, 2, 3)]
    for k in range(1, 4):
        elems.append(_compose_perm(elems[-1], r))
    elems += [_compose_perm(s, e) for e in elems[:4]]
    return _from_elements(elems, _compose_perm, "D4", ["1", "r", "r2", "r3", "s", "sr", "sr2", "sr3"])


def quaternion8() -> FiniteGroup:
    # elements (sign, unit) with unit in 1, i, j, k
    mult = {("1", u): (1, u) for u in "1ijk"}
    mult.update({(u, "1"): (1, u) for u in "1ijk"})
    mult.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                 ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    elems = [(s, u) for s in (1, -1) for u in "1ijk"]

    def mul(a, b):
        s, u = mult[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    # z is the central element of order two; labels avoid a leading minus sign
    labels = ["1", "i", "j", "k", "z", "zi", "zj", "zk"]
    return _from_elements(elems, mul, "Q8", labels)


def trivial_group() -> FiniteGroup:
    return FiniteGroup([[0]], 0, ("1",), "C1")


def small_groups(max_order: int = 8) -> list[FiniteGroup]:
    """One representative of every group of order ``<= max_order`` (at most 8)."""
    if max_order > 8:
        raise GroupError("the built-in catalogue stops at order 8")
    out = []
    for n in range(1, max_order + 1):
        out.extend(g for g in _CATALOGUE() if g.order == n)
    return out


_CACHE: list[FiniteGroup] = []


def _CATALOGUE() -> list[FiniteGroup]:
    if not _CACHE:
        C2 = cyclic(2)
        _CACHE.extend([
            trivial_group(), C2, cyclic(3), cyclic(4), direct_product(C2, C2, "V4"), cyclic(5),
            cyclic(6), symmetric3(), cyclic(7), cyclic(8), direct_product(cyclic(4), C2, "C4xC2"),
            direct_product(direct_product(C2, C2), C2, "C2^3"), dihedral4(), quaternion8(),
        ])
    return _CACHE


def group_by_name(name: str) -> FiniteGroup:
    for g in _CATALOGUE():
        if g.name == name:
            return g
    raise KeyError(f"no built-in group named {name!r}")


# ---------------------------------------------------------------------------
# pointed magmas and G-sets

@dataclass(frozen=True)
class PointedMagma:
    """A set with a binary operation having ``base`` as two-sided unit.

    Associativity is not required.
    """

    table: tuple[tuple[int, ...], ...]
    base: int = 0
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "table", _table(self.table))
        n = len(self.table)
        if not self.labels:
            object.__setattr__(self, "labels", tuple("1" if i == self.base else f"x{i}" for i in range(n)))
        object.__setattr__(self, "labels", tuple(self.labels))
        rep = magma_report(self)
        if not rep.ok:
            raise GroupError(f"invalid pointed magma: {rep.failed()}")

    @property
    def size(self) -> int:
        return len(self.table)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    @cached_property
    def is_associative(self) -> bool:
        t, n = self.table, self.size
        return all(t[t[a][b]][c] == t[a][t[b][c]] for a in range(n) for b in range(n) for c in range(n))


def magma_report(X: PointedMagma) -> VerificationReport:
    rep = VerificationReport("pointed magma")
    t, n, e = X.table, len(X.table), X.base
    shape_ok = n > 0 and all(len(r) == n for r in t) and all(0 <= v < n for r in t for v in r) and 0 <= e < n
    rep.check("table is n×n over range(n)", shape_ok)
    if not shape_ok:
        return rep
    rep.check("labels distinct", len(X.labels) == n and len(set(X.labels)) == n)
    bad = next(((x,) for x in range(n) if t[e][x] != x or t[x][e] != x), None)
    rep.add(AxiomResult("unit: 1·x = x·1 = x", bad is None,
                        None if bad is None else Witness(bad, (X.labels[bad[0]],), "1·x or x·1", "x")))
    return rep


def piecewise_magma(n: int, labels: Sequence[str] | None = None) -> PointedMagma:
    """``x·y = x`` if ``y = 1`` and ``y`` otherwise."""
    table = [[x if y == 0 else y for y in range(n)] for x in range(n)]
    return PointedMagma(table, 0, tuple(labels) if labels else ())


def unital_magmas(n: int) -> Iterator[PointedMagma]:
    """Every operation on ``range(n)`` with unit 0, in lexicographic order."""
    cells = [(x, y) for x in range(1, n) for y in range(1, n)]
    for values in itertools.product(range(n), repeat=len(cells)):
        table = [[x if y == 0 else (y if x == 0 else 0) for y in range(n)] for x in range(n)]
        for (x, y), v in zip(cells, values):
            table[x][y] = v
        yield PointedMagma(table, 0)


@dataclass(frozen=True)
class RightGSet:
    """A pointed magma with a right action table ``act[x][g] = x◁g``.

    Validity is checked by :func:`validate_gset`, not on construction.
    """

    X: PointedMagma
    act: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "act", _table(self.act))

    def __call__(self, x: int, g: int) -> int:
        return self.act[x][g]


def trivial_action(X: PointedMagma, G: FiniteGroup) -> RightGSet:
    return RightGSet(X, [[x] * G.order for x in range(X.size)])


def validate_gset(D: RightGSet, G: FiniteGroup) -> VerificationReport:
    rep = VerificationReport("right G-set")
    X, a, n, m = D.X, D.act, D.X.size, G.order
    shape_ok = len(a) == n and all(len(r) == m and all(0 <= v < n for v in r) for r in a)
    rep.check("action table is |X|×|G| over X", shape_ok)
    if not shape_ok:
        return rep

    def first(pred, ranges):
        return next((tup for tup in itertools.product(*ranges) if not pred(*tup)), None)

    def wit(tup, names, lhs, rhs):
        return None if tup is None else Witness(tup, names(tup), lhs(tup), rhs(tup))

    e = G.identity
    bad = first(lambda x: a[x][e] == x, [range(n)])
    rep.add(AxiomResult("x◁1 = x", bad is None, wit(bad, lambda t: (X.labels[t[0]],),
                                                     lambda t: X.labels[a[t[0]][e]], lambda t: X.labels[t[0]])))
    bad = first(lambda x, g, h: a[a[x][g]][h] == a[x][G.mul(g, h)], [range(n), range(m), range(m)])
    rep.add(AxiomResult("(x◁g)◁h = x◁(gh)", bad is None, wit(
        bad, lambda t: (X.labels[t[0]], G.labels[t[1]], G.labels[t[2]]),
        lambda t: X.labels[a[a[t[0]][t[1]]][t[2]]], lambda t: X.labels[a[t[0]][G.mul(t[1], t[2])]])))
    b = X.base
    bad = first(lambda g: a[b][g] == b, [range(m)])
    rep.add(AxiomResult("1_X◁g = 1_X", bad is None, wit(bad, lambda t: (G.labels[t[0]],),
                                                         lambda t: X.labels[a[b][t[0]]], lambda t: X.labels[b])))
    return rep


def enumerate_actions(X: PointedMagma, G: FiniteGroup) -> list[RightGSet]:
    """All right actions of ``G`` on ``X`` fixing the base point.

    Each action is determined by the permutations of the generators; every
    candidate is extended along the Cayley graph and then validated.
    """
    n = X.size
    others = [x for x in range(n) if x != X.base]
    perms = []
    for p in itertools.permutations(others):
        full = list(range(n))
        for src, dst in zip(others, p):
            full[src] = dst
        perms.append(tuple(full))
    gens = G.generators
    out = []
    for choice in itertools.product(perms, repeat=len(gens)):
        images = {G.identity: tuple(range(n))}
        frontier = [G.identity]
        ok = True
        while frontier and ok:
            w = frontier.pop()
            for s, ps in zip(gens, choice):
                v = G.mul(w, s)
                pv = tuple(ps[images[w][x]] for x in range(n))
                if v in images:
                    if images[v] != pv:
                        ok = False
                        break
                else:
                    images[v] = pv
                    frontier.append(v)
        if not ok:
            continue
        act = [[images[g][x] for g in range(G.order)] for x in range(n)]
        D = RightGSet(X, act)
        if validate_gset(D, G).ok:
            out.append(D)
    out.sort(key=lambda d: d.act)
    return out


# ---------------------------------------------------------------------------
# bialgebras spanned by group-likes

def _grouplike_structure(labels: Sequence[str], table, unit: int, field: Field):
    n = len(labels)
    V = VectorSpace(tuple(labels))
    VV = tensor_space(V, V)
    one = field.one
    mult = LinMap.from_columns(VV, V, [{table[i][j]: one} for i in range(n) for j in range(n)], field)
    unit_map = LinMap.from_columns(K, V, [{unit: one}], field)
    comult = LinMap.from_columns(V, VV, [{i * n + i: one} for i in range(n)], field)
    counit = LinMap.from_columns(V, K, [{0: one} for _ in range(n)], field)
    return V, mult, unit_map, comult, counit


def group_algebra(G: FiniteGroup, field: Field = QQ) -> HopfAlgebra:
    V, mult, unit, comult, counit = _grouplike_structure(G.labels, G.table, G.identity, field)
    S = LinMap.from_columns(V, V, [{G.inv(g): field.one} for g in range(G.order)], field)
    return make_bialgebra(V, mult, unit, comult, counit, antipode=S, name=f"k[{G.name}]")


def grouplike_coalgebra(X: PointedMagma, field: Field = QQ) -> tuple[FinCoalgebra, FinAlgebra]:
    """``k[X]``: every element group-like, product from the table, unit ``1_X``."""
    V, mult, unit, comult, counit = _grouplike_structure(X.labels, X.table, X.base, field)
    return FinCoalgebra(V, comult, counit), FinAlgebra(V, mult, unit, assoc_required=False)


def magma_bialgebra(X: PointedMagma, field: Field = QQ, name: str = "") -> FinBialgebra:
    """``k[X]`` packaged as a (possibly nonassociative) bialgebra."""
    coalg, alg = grouplike_coalgebra(X, field)
    if X.is_associative:
        alg = FinAlgebra(alg.space, alg.mult, alg.unit, assoc_required=True)
    return FinBialgebra(alg, coalg, None, name or f"k[X{X.size}]")
