from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfext.corpus import sweedler_h4
from hopfext.gset import GSetDatum
from hopfext.scalars import PrimeField
from hopfext.textfmt import (
    InputDocument,
    InputError,
    Resolver,
    bialgebra_section,
    document,
    format_lincomb,
    load,
    parse,
    resolve,
    serialize,
)

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"
ALL_FIXTURES = sorted(FIXTURES.glob("*.txt"))


def test_empty_document():
    doc = parse("")
    assert doc == InputDocument() and doc.sections == {} and doc.scalars == "rational"
    assert parse("# only a comment\n\n") == doc


def test_golden_gset_fixture(c2x, c2x_datum):
    objs = resolve(load(str(FIXTURES / "c2_x2.txt")))
    G1 = objs["G1"]
    assert isinstance(G1, GSetDatum)
    assert G1.G.table == c2x.G.table and G1.X.table == c2x.X.table
    assert G1.act.act == c2x.act.act and G1.gamma == c2x.gamma == (0, 1)
    assert G1.X.labels == ("1", "x") and G1.G.labels == ("1", "g")
    D = objs["D"]
    assert D.ract == c2x_datum.ract and D.cocycle == c2x_datum.cocycle and D.lact == c2x_datum.lact


@pytest.mark.parametrize("path", ALL_FIXTURES, ids=[p.name for p in ALL_FIXTURES])
def test_round_trip(path):
    doc = load(str(path))
    text = serialize(doc)
    again = parse(text)
    assert again == doc
    assert serialize(again) == text


def test_explicit_h4_matches_builtin():
    H = resolve(load(str(FIXTURES / "h4.txt")))["H4"]
    B = sweedler_h4()
    assert H.mult == B.mult and H.comult == B.comult and H.counit == B.counit and H.antipode == B.antipode


def test_writer_round_trip_mod_p():
    F = PrimeField(5)
    B = sweedler_h4(F)
    doc = document([bialgebra_section("B", B)], F)
    back = resolve(parse(serialize(doc)))["B"]
    assert doc.scalars == "mod:5"
    assert back.mult == B.mult and back.antipode == B.antipode
    assert back.antipode.matrix[3, 2] == 4  # S(x) = -gx


def test_scalars_override():
    doc = load(str(FIXTURES / "h4.txt"))
    H = Resolver(doc, PrimeField(3))["H4"]
    assert H.field.modulus == 3 and H.mult.matrix[3, 2 * 4 + 1] == 2


terms = st.lists(st.tuples(st.fractions().filter(lambda c: c != 0),
                           st.lists(st.sampled_from(["1", "g", "x", "gx", "t2"]), min_size=1, max_size=3)),
                 max_size=4)


@settings(max_examples=80, deadline=None)
@given(terms)
def test_lincomb_round_trip(ts):
    lc = tuple((Fraction(c), tuple(labels)) for c, labels in ts)
    text = (f"scalars rational\nbialgebra B\n  builtin H4\nend\n"
            f"morphism m\n  from B\n  to B\n  map a : {format_lincomb(lc)}\nend\n")
    doc = parse(text)
    assert doc.sections["m"].one("map").rhs == lc


def _err(text):
    with pytest.raises(InputError) as exc:
        parse(text)
    return exc.value


def test_zero_denominator_location():
    e = _err("scalars rational\nbialgebra B\n  basis 1\n  counit 1 : 1/0\nend\n")
    assert (e.line, e.col) == (4, 14) and "1/0" in str(e)
    assert str(e).startswith("line 4, col 14:")


def test_denominator_divisible_by_p():
    e = _err("scalars mod:3\nbialgebra B\n  basis 1\n  counit 1 : 2/3\nend\n")
    assert e.line == 4


@pytest.mark.parametrize("text,line,fragment", [
    ("scalars rational\ngroup G\n  elements 1 a a\nend\n", 3, "duplicate label"),
    ("scalars rational\ngset S\n  group Nope\n  magma M\nend\n", 3, "unresolved reference"),
    ("scalars rational\ngroup G\n  builtin C2\nend\ngset S\n  group G\nend\n", 5, "needs group/magma"),
    ("scalars rational\nmagma M\n  builtin piecewise 2\nend\ngset S\n  group M\n  magma M\nend\n", 6,
     "expected group"),
    ("scalars rational\ngroup G\n  colour red\nend\n", 3, "unknown key"),
    ("scalars rational\nwidget W\nend\n", 2, "unknown section kind"),
    ("scalars rational\ngroup G\n  builtin C2\n", 2, "not closed"),
    ("group G\n  builtin C2\nend\nscalars rational\n", 4, "must precede"),
    ("scalars rational\ngroup G\n  builtin C2\nend\ngroup G\n  builtin C3\nend\n", 5, "duplicate section"),
    ("scalars rational\ngroup G\n  builtin C2\n  builtin C3\nend\n", 4, "given twice"),
    ("scalars rational\nmorphism m\n  map a : 1\n  map a : 2\nend\n", 4, "duplicate entry"),
    ("scalars rational\nmorphism m\n  map a : 2 x\nend\n", 3, ""),
    ("scalars rational\nmorphism m\n  map a : 1\nend\n", 2, "needs from/to"),
    ("scalars real\n", 1, ""),
])
def test_syntax_errors(text, line, fragment):
    e = _err(text)
    assert e.line == line and fragment in str(e)


def test_resolution_errors():
    doc = parse("scalars rational\ngroup G\n  builtin Z9\nend\n")
    with pytest.raises(InputError):
        resolve(doc)
    doc = parse("scalars rational\ngroup G\n  elements 1 a\n  row 1 : 1 a\n  row a : 1 1\nend\n")
    with pytest.raises(InputError):
        resolve(doc)
