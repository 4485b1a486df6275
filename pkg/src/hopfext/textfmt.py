"""Plain-text input format: parse, serialize and resolve to library objects.

The grammar is documented in ``docs/format.md``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .core import FinBialgebra, make_bialgebra
from .datum import ExtendingDatum, trivial_cocycle, trivial_lact, trivial_ract
from .gamma import GammaDatum
from .groups import (
    FiniteGroup,
    GroupError,
    PointedMagma,
    RightGSet,
    group_algebra,
    group_by_name,
    magma_bialgebra,
    piecewise_magma,
)
from .gset import GSetDatum
from .linalg import K, LinMap, VectorSpace, tensor_space
from .reconstruction import FactorizationInput, SplitExtensionInput
from .scalars import QQ, Field, ScalarError, parse_field


class InputError(ValueError):
    """A syntax or resolution error with a source location."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.message, self.line, self.col = message, line, col
        where = f"line {line}, col {col}: " if line else ""
        super().__init__(where + message)


# ---------------------------------------------------------------------------
# document model

Lincomb = tuple  # ((Fraction, (label, ...)), ...)


@dataclass(frozen=True)
class Entry:
    key: str
    args: tuple[str, ...]
    rhs: object = None  # tokens tuple | Lincomb | Fraction | None
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass
class Section:
    kind: str
    name: str
    entries: list[Entry] = field(default_factory=list)
    line: int = field(default=0, compare=False)

    def get(self, key: str) -> list[Entry]:
        return [e for e in self.entries if e.key == key]

    def one(self, key: str) -> Entry | None:
        found = self.get(key)
        return found[0] if found else None


@dataclass
class InputDocument:
    scalars: str = "rational"
    sections: dict[str, Section] = field(default_factory=dict)

    def of_kind(self, kind: str) -> list[Section]:
        return [s for s in self.sections.values() if s.kind == kind]


# key -> (number of args or -1 for any, rhs kind, referenced section kinds)
_NONE, _TOKENS, _LIN, _SCALAR = "none", "tokens", "lincomb", "scalar"
SCHEMA: dict[str, dict[str, tuple]] = {
    "group": {"builtin": (1, _NONE, ()), "elements": (-1, _NONE, ()), "row": (1, _TOKENS, ())},
    "magma": {"builtin": (-1, _NONE, ()), "elements": (-1, _NONE, ()), "row": (1, _TOKENS, ())},
    "gset": {"group": (1, _NONE, ("group",)), "magma": (1, _NONE, ("magma",)), "act": (1, _TOKENS, ())},
    "gamma": {"gset": (1, _NONE, ("gset",)), "A": (1, _NONE, ("bialgebra",)), "H": (1, _NONE, ("bialgebra",)),
              "lact": (2, _LIN, ()), "map": (1, _LIN, ())},
    "bialgebra": {"builtin": (1, _NONE, ()), "group": (1, _NONE, ("group",)), "dual": (1, _NONE, ("group",)),
                  "magma": (1, _NONE, ("magma",)), "basis": (-1, _NONE, ()), "unit": (0, _LIN, ()),
                  "mult": (2, _LIN, ()), "comult": (1, _LIN, ()), "counit": (1, _SCALAR, ()),
                  "antipode": (1, _LIN, ()), "coalgebra-only": (0, _NONE, ())},
    "datum": {"A": (1, _NONE, ("bialgebra",)), "H": (1, _NONE, ("bialgebra",)), "gamma": (1, _NONE, ("gamma",)),
              "lact": (2, _LIN, ()), "ract": (2, _LIN, ()), "cocycle": (2, _LIN, ())},
    "morphism": {"from": (1, _NONE, ("bialgebra",)), "to": (1, _NONE, ("bialgebra",)), "map": (1, _LIN, ())},
    "extension": {"E": (1, _NONE, ("bialgebra",)), "A": (1, _NONE, ("bialgebra",)),
                  "i": (1, _NONE, ("morphism",)), "pi": (1, _NONE, ("morphism",))},
    "factorization": {"E": (1, _NONE, ("bialgebra",)), "A": (1, _NONE, ("bialgebra",)),
                      "H": (1, _NONE, ("bialgebra",)), "i": (1, _NONE, ("morphism",)),
                      "j": (1, _NONE, ("morphism",))},
}
_SINGLE = {"builtin", "elements", "group", "magma", "gset", "A", "H", "E", "i", "j", "pi", "from", "to", "basis",
           "unit", "dual", "gamma", "coalgebra-only"}
# kind -> alternatives; a section must contain every key of at least one
REQUIRED: dict[str, tuple[tuple[str, ...], ...]] = {
    "group": (("builtin",), ("elements",)),
    "magma": (("builtin",), ("elements",)),
    "gset": (("group", "magma"),),
    "gamma": (("gset",), ("A", "H")),
    "bialgebra": (("builtin",), ("group",), ("dual",), ("magma",), ("basis", "unit")),
    "datum": (("gamma",), ("A", "H")),
    "morphism": (("from", "to"),),
    "extension": (("E", "A", "i", "pi"),),
    "factorization": (("E", "A", "H", "i", "j"),),
}
_NAME = re.compile(r"[^\s|*:+#]+")
_SCALAR_RE = re.compile(r"\d+(?:/\d+)?")


# ---------------------------------------------------------------------------
# parsing

def _tokens(text: str, start_col: int) -> list[tuple[str, int]]:
    return [(m.group(), start_col + m.start()) for m in re.finditer(r"\S+", text)]


def _parse_scalar(text: str, line: int, col: int, modulus: int) -> Fraction:
    m = re.fullmatch(r"([+-]?)(\d+)(?:/(\d+))?", text)
    if not m:
        raise InputError(f"malformed scalar {text!r}", line, col)
    num, den = int(m.group(2)), int(m.group(3) or 1)
    if den == 0:
        raise InputError(f"zero denominator in {text!r}", line, col)
    if modulus and den % modulus == 0:
        raise InputError(f"denominator of {text!r} vanishes mod {modulus}", line, col)
    value = Fraction(num, den)
    return -value if m.group(1) == "-" else value


def _parse_lincomb(text: str, line: int, col0: int, modulus: int) -> Lincomb:
    """``[±] [c*] l1|l2|... (± [c*] l1|...)*``; an empty text is zero."""
    terms = []
    pos, n = 0, len(text)

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    skip()
    first = True
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
            skip()
        elif not first:
            raise InputError("expected '+' or '-' between terms", line, col0 + pos)
        first = False
        coeff = Fraction(1)
        m = _SCALAR_RE.match(text, pos)
        if m and m.end() < n and text[m.end()] == "*":
            coeff = _parse_scalar(m.group(), line, col0 + pos, modulus)
            pos = m.end() + 1
        labels = []
        while True:
            m = _NAME.match(text, pos)
            if not m:
                raise InputError("expected a basis label", line, col0 + pos)
            labels.append(m.group())
            pos = m.end()
            if pos < n and text[pos] == "|":
                pos += 1
                continue
            break
        terms.append((sign * coeff, tuple(labels)))
        skip()
    return tuple(terms)


def parse(text: str) -> InputDocument:
    doc = InputDocument()
    modulus = 0
    current: Section | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        toks = _tokens(body, 1)
        head, hcol = toks[0]
        if current is None:
            if head == "scalars":
                if doc.sections:
                    raise InputError("'scalars' must precede every section", lineno, hcol)
                mode = " ".join(t for t, _ in toks[1:])
                try:
                    F = parse_field(mode)
                except (ScalarError, ValueError) as exc:
                    raise InputError(str(exc), lineno, toks[1][1] if len(toks) > 1 else hcol) from None
                doc.scalars, modulus = F.name, F.modulus
                continue
            if head not in SCHEMA:
                raise InputError(f"unknown section kind {head!r}", lineno, hcol)
            if len(toks) != 2:
                raise InputError(f"expected '{head} <name>'", lineno, hcol)
            name, ncol = toks[1]
            if name in doc.sections:
                raise InputError(f"duplicate section name {name!r}", lineno, ncol)
            current = Section(head, name, [], lineno)
            doc.sections[name] = current
            continue
        if head == "end" and len(toks) == 1:
            current = None
            continue
        current.entries.append(_parse_entry(current, body, toks, lineno, modulus))
    if current is not None:
        raise InputError(f"section {current.name!r} is not closed with 'end'", current.line, 1)
    _check_document(doc)
    return doc


def _parse_entry(sec: Section, body: str, toks, lineno: int, modulus: int) -> Entry:
    key, kcol = toks[0]
    schema = SCHEMA[sec.kind]
    if key not in schema:
        raise InputError(f"unknown key {key!r} in {sec.kind} section", lineno, kcol)
    nargs, rhs_kind, _ = schema[key]
    colon = body.find(":")
    if rhs_kind == _NONE:
        if colon >= 0:
            raise InputError(f"'{key}' takes no ':' part", lineno, colon + 1)
        args = tuple(t for t, _ in toks[1:])
        rhs = None
    else:
        if colon < 0:
            raise InputError(f"'{key}' needs ':' before its value", lineno, kcol)
        args = tuple(t for t, _ in _tokens(body[:colon], 1)[1:])
        rest, rcol = body[colon + 1:], colon + 2
        if rhs_kind == _TOKENS:
            rhs = tuple(t for t, _ in _tokens(rest, rcol))
        elif rhs_kind == _SCALAR:
            st = _tokens(rest, rcol)
            if len(st) != 1:
                raise InputError("expected one scalar", lineno, rcol)
            rhs = _parse_scalar(st[0][0], lineno, st[0][1], modulus)
        else:
            rhs = _parse_lincomb(rest.rstrip(), lineno, rcol, modulus)
    if nargs >= 0 and len(args) != nargs:
        raise InputError(f"'{key}' expects {nargs} argument(s), got {len(args)}", lineno, kcol)
    if key in _SINGLE and sec.get(key):
        raise InputError(f"'{key}' given twice in section {sec.name!r}", lineno, kcol)
    if key in ("elements", "basis") and len(set(args)) != len(args):
        dup = next(a for a in args if args.count(a) > 1)
        raise InputError(f"duplicate label {dup!r}", lineno, kcol)
    for other in sec.entries:
        if other.key == key and rhs_kind != _NONE and other.args == args:
            raise InputError(f"duplicate entry '{key} {' '.join(args)}'", lineno, kcol)
    return Entry(key, args, rhs, lineno, kcol)


def _check_document(doc: InputDocument):
    """Required keys are present and every reference names a section of an
    allowed kind."""
    for sec in doc.sections.values():
        for e in sec.entries:
            kinds = SCHEMA[sec.kind][e.key][2]
            if not kinds:
                continue
            target = doc.sections.get(e.args[0])
            if target is None:
                raise InputError(f"unresolved reference {e.args[0]!r}", e.line, e.col)
            if target.kind not in kinds:
                raise InputError(f"{e.args[0]!r} is a {target.kind}, expected {' or '.join(kinds)}", e.line, e.col)
    for sec in doc.sections.values():
        alts = REQUIRED[sec.kind]
        if not any(all(sec.get(k) for k in keys) for keys in alts):
            want = " or ".join("/".join(keys) for keys in alts)
            raise InputError(f"{sec.kind} {sec.name!r} needs {want}", sec.line, 1)


# ---------------------------------------------------------------------------
# serialization

def _format_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_lincomb(terms: Lincomb) -> str:
    parts = []
    for k, (c, labels) in enumerate(terms):
        name = "|".join(labels)
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        body = name if mag == 1 else f"{_format_scalar(mag)}*{name}"
        if k == 0:
            parts.append(("-" if sign == "-" else "") + body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def _format_entry(sec: Section, e: Entry) -> str:
    rhs_kind = SCHEMA[sec.kind][e.key][1]
    head = " ".join((e.key,) + e.args)
    if rhs_kind == _NONE:
        return head
    if rhs_kind == _TOKENS:
        value = " ".join(e.rhs)
    elif rhs_kind == _SCALAR:
        value = _format_scalar(e.rhs)
    else:
        value = format_lincomb(e.rhs)
    return f"{head} : {value}".rstrip()


def serialize(doc: InputDocument) -> str:
    out = [f"scalars {doc.scalars}", ""]
    for sec in doc.sections.values():
        out.append(f"{sec.kind} {sec.name}")
        out.extend("  " + _format_entry(sec, e) for e in sec.entries)
        out.append("end")
        out.append("")
    return "\n".join(out)


def load(path: str) -> InputDocument:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


# ---------------------------------------------------------------------------
# resolution

class Resolver:
    """Turn sections into library objects, memoizing by name."""

    def __init__(self, doc: InputDocument, field: Field | None = None):
        self.doc = doc
        self.field = field or parse_field(doc.scalars)
        self._cache: dict[str, object] = {}

    def __getitem__(self, name: str):
        if name not in self._cache:
            sec = self.doc.sections.get(name)
            if sec is None:
                raise InputError(f"no section named {name!r}")
            try:
                self._cache[name] = getattr(self, "_" + sec.kind)(sec)
            except InputError:
                raise
            except (GroupError, ValueError, ZeroDivisionError) as exc:
                raise InputError(f"{sec.kind} {name!r}: {exc}", sec.line, 1) from None
        return self._cache[name]

    def _scalar(self, c: Fraction, e: Entry):
        try:
            return self.field(c)
        except ZeroDivisionError as exc:
            raise InputError(str(exc), e.line, e.col) from None

    def _vector(self, terms: Lincomb, spaces: list[VectorSpace], e: Entry) -> dict[int, object]:
        """Column ``{flat index: coefficient}`` over the tensor product of ``spaces``."""
        col: dict[int, object] = {}
        for c, labels in terms:
            if len(labels) != len(spaces):
                raise InputError(f"expected {len(spaces)} tensor factor(s) in {'|'.join(labels)!r}", e.line, e.col)
            idx = 0
            for lab, V in zip(labels, spaces):
                if lab not in V.labels:
                    raise InputError(f"unknown basis label {lab!r}", e.line, e.col)
                idx = idx * V.dim + V.index(lab)
            col[idx] = col.get(idx, 0) + self._scalar(c, e)
        return col

    def _index(self, label: str, labels, e: Entry) -> int:
        if label not in labels:
            raise InputError(f"unknown label {label!r}", e.line, e.col)
        return labels.index(label)

    # -- kinds ---------------------------------------------------------------
    def _table(self, sec: Section) -> tuple[list[str], list[list[int]]]:
        el = sec.one("elements")
        if el is None:
            raise InputError(f"{sec.kind} {sec.name!r} needs 'elements' or 'builtin'", sec.line, 1)
        labels = list(el.args)
        rows: dict[int, list[int]] = {}
        for e in sec.get("row"):
            i = self._index(e.args[0], labels, e)
            if len(e.rhs) != len(labels):
                raise InputError(f"row has {len(e.rhs)} entries, expected {len(labels)}", e.line, e.col)
            rows[i] = [self._index(v, labels, e) for v in e.rhs]
        missing = [labels[i] for i in range(len(labels)) if i not in rows]
        if missing:
            raise InputError(f"missing rows for {missing}", sec.line, 1)
        return labels, [rows[i] for i in range(len(labels))]

    def _group(self, sec: Section) -> FiniteGroup:
        b = sec.one("builtin")
        if b is not None:
            try:
                return group_by_name(b.args[0])
            except (KeyError, ValueError, GroupError):
                raise InputError(f"unknown builtin group {b.args[0]!r}", b.line, b.col) from None
        labels, table = self._table(sec)
        ident = next((i for i in range(len(labels)) if table[i] == list(range(len(labels)))), None)
        if ident is None:
            raise InputError("table has no identity element", sec.line, 1)
        return FiniteGroup(table, ident, tuple(labels), sec.name)

    def _magma(self, sec: Section) -> PointedMagma:
        b = sec.one("builtin")
        if b is not None:
            if len(b.args) != 2 or b.args[0] != "piecewise" or not b.args[1].isdigit():
                raise InputError("expected 'builtin piecewise <n>'", b.line, b.col)
            return piecewise_magma(int(b.args[1]))
        labels, table = self._table(sec)
        return PointedMagma(table, 0, tuple(labels))

    def _gset(self, sec: Section) -> tuple[FiniteGroup, RightGSet]:
        G, X = self[sec.one("group").args[0]], self[sec.one("magma").args[0]]
        act = [[x] * G.order for x in range(X.size)]
        for e in sec.get("act"):
            x = self._index(e.args[0], X.labels, e)
            if len(e.rhs) != G.order:
                raise InputError(f"act row needs {G.order} entries", e.line, e.col)
            act[x] = [self._index(v, X.labels, e) for v in e.rhs]
        return G, RightGSet(X, act)

    def _gamma(self, sec: Section):
        gs = sec.one("gset")
        if gs is not None:
            G, D = self[gs.args[0]]
            gamma = [G.identity] * D.X.size
            for e in sec.get("map"):
                x = self._index(e.args[0], D.X.labels, e)
                if len(e.rhs) != 1 or e.rhs[0][0] != 1 or len(e.rhs[0][1]) != 1:
                    raise InputError("a group-like γ maps to a single group element", e.line, e.col)
                gamma[x] = self._index(e.rhs[0][1][0], G.labels, e)
            return GSetDatum(G, D.X, D, tuple(gamma))
        A, H = self._pair(sec)
        lact = self._lact(sec, A, H)
        cols = [dict() for _ in range(H.dim)]
        for e in sec.get("map"):
            cols[self._index(e.args[0], H.space.labels, e)] = self._vector(e.rhs, [A.space], e)
        gamma = LinMap.from_columns(H.space, A.space, cols, self.field)
        return GammaDatum(A, H, lact, gamma, sec.name)

    def _pair(self, sec: Section):
        a, h = sec.one("A"), sec.one("H")
        if a is None or h is None:
            raise InputError(f"{sec.kind} {sec.name!r} needs 'A' and 'H'", sec.line, 1)
        return self[a.args[0]], self[h.args[0]]

    def _bilinear(self, sec: Section, key: str, left: VectorSpace, right: VectorSpace, out: VectorSpace,
                  default) -> LinMap:
        cols = {}
        for e in sec.get(key):
            i = self._index(e.args[0], left.labels, e)
            j = self._index(e.args[1], right.labels, e)
            cols[i * right.dim + j] = self._vector(e.rhs, [out], e)
        if not cols:
            return default
        base = default.matrix
        full = []
        for c in range(left.dim * right.dim):
            full.append(cols[c] if c in cols else {r: v for r, v in enumerate(base[:, c]) if v})
        return LinMap.from_columns(tensor_space(left, right), out, full, self.field)

    def _lact(self, sec: Section, A, H) -> LinMap:
        return self._bilinear(sec, "lact", H.space, A.space, H.space, trivial_lact(A, H))

    def _datum(self, sec: Section) -> ExtendingDatum:
        g = sec.one("gamma")
        if g is not None:
            from .gamma import induced_datum
            from .gset import to_gamma_datum

            src = self[g.args[0]]
            Gd = to_gamma_datum(src, self.field) if isinstance(src, GSetDatum) else src
            return induced_datum(Gd)
        A, H = self._pair(sec)
        lact = self._lact(sec, A, H)
        ract = self._bilinear(sec, "ract", H.space, A.space, A.space, trivial_ract(A, H))
        f = self._bilinear(sec, "cocycle", H.space, H.space, A.space, trivial_cocycle(A, H))
        return ExtendingDatum(A, H, lact, ract, f, sec.name)

    def _bialgebra(self, sec: Section) -> FinBialgebra:
        F = self.field
        for key in ("group", "dual", "magma", "builtin"):
            e = sec.one(key)
            if e is None:
                continue
            if key == "group":
                return group_algebra(self[e.args[0]], F)
            if key == "dual":
                from .corpus import dual_group_algebra

                return dual_group_algebra(self[e.args[0]], F)
            if key == "magma":
                return magma_bialgebra(self[e.args[0]], F, f"k[{e.args[0]}]")
            if e.args[0] != "H4":
                raise InputError(f"unknown builtin bialgebra {e.args[0]!r}", e.line, e.col)
            from .corpus import sweedler_h4

            return sweedler_h4(F)
        b = sec.one("basis")
        if b is None:
            raise InputError(f"bialgebra {sec.name!r} needs 'basis'", sec.line, 1)
        V = VectorSpace(b.args)
        n = V.dim
        VV = tensor_space(V, V)
        u = sec.one("unit")
        if u is None:
            raise InputError(f"bialgebra {sec.name!r} needs 'unit'", sec.line, 1)
        unit = LinMap.from_columns(K, V, [self._vector(u.rhs, [V], u)], F)
        mcols = [dict() for _ in range(n * n)]
        for e in sec.get("mult"):
            mcols[self._index(e.args[0], V.labels, e) * n + self._index(e.args[1], V.labels, e)] = \
                self._vector(e.rhs, [V], e)
        dcols = [dict() for _ in range(n)]
        for e in sec.get("comult"):
            dcols[self._index(e.args[0], V.labels, e)] = self._vector(e.rhs, [V, V], e)
        ecols = [dict() for _ in range(n)]
        for e in sec.get("counit"):
            ecols[self._index(e.args[0], V.labels, e)] = {0: self._scalar(e.rhs, e)}
        S = None
        if sec.get("antipode"):
            scols = [dict() for _ in range(n)]
            for e in sec.get("antipode"):
                scols[self._index(e.args[0], V.labels, e)] = self._vector(e.rhs, [V], e)
            S = LinMap.from_columns(V, V, scols, F)
        return make_bialgebra(V, LinMap.from_columns(VV, V, mcols, F), unit, LinMap.from_columns(V, VV, dcols, F),
                              LinMap.from_columns(V, K, ecols, F), antipode=S,
                              assoc_required=sec.one("coalgebra-only") is None, name=sec.name)

    def _morphism(self, sec: Section) -> LinMap:
        src, dst = self[sec.one("from").args[0]], self[sec.one("to").args[0]]
        cols = [dict() for _ in range(src.dim)]
        for e in sec.get("map"):
            cols[self._index(e.args[0], src.space.labels, e)] = self._vector(e.rhs, [dst.space], e)
        return LinMap.from_columns(src.space, dst.space, cols, self.field)

    def _extension(self, sec: Section) -> SplitExtensionInput:
        return SplitExtensionInput(self[sec.one("E").args[0]], self[sec.one("A").args[0]],
                                   self[sec.one("i").args[0]], self[sec.one("pi").args[0]])

    def _factorization(self, sec: Section) -> FactorizationInput:
        H = self[sec.one("H").args[0]]
        return FactorizationInput(self[sec.one("E").args[0]], self[sec.one("A").args[0]], H.coalgebra,
                                  self[sec.one("i").args[0]], self[sec.one("j").args[0]])


def resolve(doc: InputDocument, field: Field | None = None) -> dict[str, object]:
    R = Resolver(doc, field)
    return {name: R[name] for name in doc.sections}


# ---------------------------------------------------------------------------
# writers

def _lincomb_of(column, spaces: list[VectorSpace], F: Field) -> Lincomb:
    dims = [V.dim for V in spaces]
    terms = []
    for idx, v in enumerate(column):
        if not F.reduce(v):
            continue
        labels, rest = [], idx
        for d in reversed(dims):
            rest, r = divmod(rest, d)
            labels.append(r)
        labels = tuple(V.labels[r] for V, r in zip(spaces, reversed(labels)))
        c = Fraction(v) if not F.modulus else Fraction(int(v))
        terms.append((c, labels))
    return tuple(terms)


def bialgebra_section(name: str, B: FinBialgebra, coalgebra_only: bool = False) -> Section:
    """Explicit structure constants; ``coalgebra_only`` marks the H of a datum,
    whose product is only unital."""
    F, V = B.field, B.space
    labels = tuple(V.labels)
    sec = Section("bialgebra", name, [Entry("basis", labels)])
    if coalgebra_only:
        sec.entries.append(Entry("coalgebra-only", ()))
    sec.entries.append(Entry("unit", (), _lincomb_of(B.unit.matrix[:, 0], [V], F)))
    n = V.dim
    for i in range(n):
        for j in range(n):
            col = B.mult.matrix[:, i * n + j]
            if any(col):
                sec.entries.append(Entry("mult", (labels[i], labels[j]), _lincomb_of(col, [V], F)))
    for i in range(n):
        sec.entries.append(Entry("comult", (labels[i],), _lincomb_of(B.comult.matrix[:, i], [V, V], F)))
    for i in range(n):
        c = B.counit.matrix[0, i]
        if F.reduce(c):
            sec.entries.append(Entry("counit", (labels[i],), Fraction(c) if not F.modulus else Fraction(int(c))))
    if B.antipode is not None:
        for i in range(n):
            sec.entries.append(Entry("antipode", (labels[i],), _lincomb_of(B.antipode.matrix[:, i], [V], F)))
    return sec


def morphism_section(name: str, f: LinMap, src: str, dst: str) -> Section:
    sec = Section("morphism", name, [Entry("from", (src,)), Entry("to", (dst,))])
    for j, lab in enumerate(f.domain.labels):
        col = f.matrix[:, j]
        if any(col):
            sec.entries.append(Entry("map", (lab,), _lincomb_of(col, [f.codomain], f.field)))
    return sec


def datum_section(name: str, D: ExtendingDatum, A_name: str, H_name: str) -> Section:
    """Only entries that differ from the trivial structure are written."""
    sec = Section("datum", name, [Entry("A", (A_name,)), Entry("H", (H_name,))])
    Hs, As = D.H.space, D.A.space
    for key, f, triv, right, out in (("lact", D.lact, trivial_lact(D.A, D.H), As, Hs),
                                      ("ract", D.ract, trivial_ract(D.A, D.H), As, As),
                                      ("cocycle", D.cocycle, trivial_cocycle(D.A, D.H), Hs, As)):
        for c in range(f.domain.dim):
            col = f.matrix[:, c]
            if list(col) != list(triv.matrix[:, c]):
                i, j = divmod(c, right.dim)
                sec.entries.append(Entry(key, (Hs.labels[i], right.labels[j]), _lincomb_of(col, [out], f.field)))
    return sec


def document(sections: list[Section], field: Field = QQ) -> InputDocument:
    return InputDocument(field.name, {s.name: s for s in sections})
