"""Command-line interface.

Exit codes: 0 every required check passed, 1 a check failed (the report
shows the witness), 2 the input could not be read or resolved.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .core import (
    AxiomError,
    check_algebra_map,
    check_bialgebra,
    check_bijective_bialgebra_map,
    check_coalgebra,
    check_coalgebra_map,
    check_hopf,
)
from .datum import ExtendingDatum, data_diff
from .gamma import check_gamma_datum, extract_L, gamma_pipeline, induced_datum, split_mono_test
from .gset import GSetDatum, arbitrate_circled, enumerate_gset_data, gamma_counts, gset_pipeline, to_gamma_datum, \
    validate_gset_datum
from .linalg import inverse
from .products import (
    ProductBialgebra,
    canonical_maps,
    circled_product,
    datum_report,
    radford_biproduct,
    smash_product,
    twisted_product,
    unified_product,
)
from .reconstruction import (
    FactorizationInput,
    SplitExtensionInput,
    analyze_split,
    canonical_factorization,
    recover_datum,
    split_input_report,
)
from .report import AxiomResult, VerificationReport
from .scalars import ScalarError, parse_field
from .textfmt import (
    Entry,
    InputDocument,
    InputError,
    Resolver,
    Section,
    bialgebra_section,
    datum_section,
    document,
    load,
    morphism_section,
    serialize,
)

KINDS = ("unified", "twisted", "smash", "circled", "biproduct")
CASES = {
    "smash": "normal split epimorphism of Hopf algebras: E ≅ A#H (▷ and f trivial)",
    "twisted": "π is a right A-module map: E ≅ A◊H (▷ trivial)",
    "unified": "general split extension: E ≅ A⋉H",
}


@dataclass
class Outcome:
    text: str
    code: int
    doc: InputDocument | None = None


def _pick(doc: InputDocument, kinds: tuple[str, ...], name: str | None) -> Section:
    if name is not None:
        sec = doc.sections.get(name)
        if sec is None or sec.kind not in kinds:
            raise InputError(f"no {' or '.join(kinds)} section named {name!r}")
        return sec
    found = [s for s in doc.sections.values() if s.kind in kinds]
    if not found:
        raise InputError(f"the document has no {' or '.join(kinds)} section")
    return found[-1]


def _code(*reports: VerificationReport) -> int:
    return 0 if all(r.ok for r in reports) else 1


def _informational(title: str, sub: VerificationReport) -> VerificationReport:
    rep = VerificationReport(title)
    for r in sub.results:
        rep.add(AxiomResult(r.label, r.passed, r.witness, False, r.note))
    return rep


# ---------------------------------------------------------------------------
# commands

def cmd_verify(doc: InputDocument, R: Resolver, args) -> Outcome:
    """Check every section that carries axioms."""
    reports = []
    for sec in doc.sections.values():
        obj = R[sec.name]
        if sec.kind == "bialgebra":
            if sec.one("coalgebra-only") is not None:
                rep = check_coalgebra(obj)
                rep.title = f"coalgebra {sec.name}"
            else:
                rep = check_bialgebra(obj)
                rep.title = f"bialgebra {sec.name}"
                if obj.antipode is not None:
                    rep.extend(check_hopf(obj))
        elif sec.kind == "datum":
            rep = datum_report(obj)
            rep.title = f"datum {sec.name}"
        elif sec.kind == "gamma":
            rep = validate_gset_datum(obj) if isinstance(obj, GSetDatum) else check_gamma_datum(obj)
            rep.title = f"gamma {sec.name}"
        elif sec.kind == "morphism":
            src, dst = R[sec.one("from").args[0]], R[sec.one("to").args[0]]
            rep = _informational(f"morphism {sec.name}", check_algebra_map(obj, src, dst))
            rep.extend(_informational("", check_coalgebra_map(obj, src, dst)))
        elif sec.kind == "extension":
            rep = split_input_report(obj)
            rep.title = f"extension {sec.name}"
        else:
            continue
        reports.append(rep)
    text = "\n\n".join(r.format() for r in reports) or "nothing to verify"
    return Outcome(text, _code(*reports))


def cmd_verify_datum(doc, R, args) -> Outcome:
    sec = _pick(doc, ("datum",), args.name)
    rep = datum_report(R[sec.name])
    rep.title = f"datum {sec.name}"
    return Outcome(rep.format(), _code(rep))


def _product(doc, R, args) -> tuple[ProductBialgebra, ExtendingDatum | None, VerificationReport | None]:
    kind, force = args.kind, args.force
    if kind in ("circled", "biproduct"):
        sec = _pick(doc, ("gamma",), args.name)
        G = R[sec.name]
        Gd = to_gamma_datum(G, R.field) if isinstance(G, GSetDatum) else G
        if kind == "circled":
            return circled_product(Gd.A, Gd.H, Gd.lact, Gd.gamma, force=force), None, None
        ext = extract_L(induced_datum(Gd), Gd.gamma)
        if not ext.report.ok:
            return None, None, ext.report
        return radford_biproduct(ext.yd, force=force), None, None
    sec = _pick(doc, ("datum",), args.name)
    D = R[sec.name]
    if kind == "unified":
        return unified_product(D, force=force), D, None
    if kind == "twisted":
        return twisted_product(D, force=force), D, None
    return smash_product(D.A, D.H, D.lact, force=force), D, None


def product_document(P: ProductBialgebra, D: ExtendingDatum | None, field) -> InputDocument:
    """Structure constants of ``P`` and, for products of a datum, the
    embeddings, the canonical split extension and the source datum."""
    sections = []
    if D is not None:
        sections += [bialgebra_section("A", D.A), bialgebra_section("H", D.H, coalgebra_only=True)]
    sections.append(bialgebra_section("E", P))
    if D is not None:
        fac = canonical_factorization(P)
        maps = canonical_maps(P)
        sections += [
            morphism_section("i", fac.embed_A, "A", "E"),
            morphism_section("j", fac.embed_H, "H", "E"),
            morphism_section("pi", maps.pi_A, "E", "A"),
            Section("factorization", "F", [Entry(k, (v,)) for k, v in
                                           (("E", "E"), ("A", "A"), ("H", "H"), ("i", "i"), ("j", "j"))]),
            Section("extension", "S", [Entry(k, (v,)) for k, v in
                                       (("E", "E"), ("A", "A"), ("i", "i"), ("pi", "pi"))]),
            datum_section("source", D, "A", "H"),
        ]
    return document(sections, field)


def cmd_build(doc, R, args) -> Outcome:
    try:
        P, D, failed = _product(doc, R, args)
    except AxiomError as exc:
        text = f"build refused: {exc}"
        return Outcome(text, 1)
    if failed is not None:
        return Outcome(failed.format(), 1)
    rep = check_bialgebra(P)
    rep.title = f"{args.kind} product"
    return Outcome(rep.format(), _code(rep), product_document(P, D, R.field))


def _datum_document(D: ExtendingDatum, field) -> InputDocument:
    return document([bialgebra_section("A", D.A), bialgebra_section("H", D.H, coalgebra_only=True),
                     datum_section("D", D, "A", "H")], field)


def cmd_recover(doc, R, args) -> Outcome:
    sec = _pick(doc, ("factorization",), args.name)
    inp: FactorizationInput = R[sec.name]
    try:
        rec = recover_datum(inp)
    except AxiomError as exc:
        return Outcome(f"recovery failed: {exc}", 1)
    rep = rec.report
    a_name, h_name = sec.one("A").args[0], sec.one("H").args[0]
    for other in doc.of_kind("datum"):
        if other.one("A") and other.one("A").args[0] == a_name and other.one("H").args[0] == h_name:
            diff = data_diff(rec.datum, R[other.name])
            rep.check(f"recovered datum = {other.name}", not diff, note="; ".join(diff))
    return Outcome(rep.format(), _code(rep), _datum_document(rec.datum, R.field))


def cmd_split_analyze(doc, R, args) -> Outcome:
    sec = _pick(doc, ("extension",), args.name)
    inp: SplitExtensionInput = R[sec.name]
    try:
        rec = analyze_split(inp)
    except AxiomError as exc:
        text = f"split analysis failed: {exc}"
        if exc.report is not None:
            text += "\n" + exc.report.format()
        return Outcome(text, 1)
    text = f"case: {CASES[rec.kind]}\ndim H = {rec.datum.H.dim}\n{rec.report.format()}"
    return Outcome(text, _code(rec.report), _datum_document(rec.datum, R.field))


def cmd_gamma_check(doc, R, args) -> Outcome:
    sec = _pick(doc, ("gamma",), args.name)
    G = R[sec.name]
    parts, reports = [], []
    if isinstance(G, GSetDatum):
        valid = validate_gset_datum(G)
        reports.append(valid)
        parts.append(valid.format())
        if valid.ok:
            rep = gset_pipeline(G, R.field)
            reports.append(rep)
            parts.append(rep.format())
            parts.append(arbitrate_circled(G, R.field).format())
        Gd = to_gamma_datum(G, R.field)
    else:
        rep = gamma_pipeline(G)
        reports.append(rep)
        parts.append(rep.format())
        Gd = G
    if args.datum:
        D = R[_pick(doc, ("datum",), args.datum).name]
        res = split_mono_test(D, Gd.gamma)
        reports.append(res.report)
        parts.append(f"split-mono criterion for {args.datum}: {'holds' if res else 'fails'}\n{res.report.format()}")
    return Outcome("\n\n".join(parts), _code(*reports))


def cmd_enumerate(doc, R, args) -> Outcome:
    entries = enumerate_gset_data(args.max_g, args.max_x, args.op_family)
    counts = gamma_counts(entries)
    lines = [f"{len(entries)} valid G-set data (|G| <= {args.max_g}, |X| <= {args.max_x}, {args.op_family})"]
    for (g, n, op, act), c in counts.items():
        lines.append(f"  G={g} |X|={n} op={op} act={act}: {c} γ")
    payload = {"max_g": args.max_g, "max_x": args.max_x, "op_family": args.op_family,
               "entries": [e.as_dict() for e in entries],
               "counts": [{"group": g, "size": n, "op": op, "action": act, "gammas": c}
                          for (g, n, op, act), c in counts.items()]}
    return Outcome("\n".join(lines), 0, payload)


def cmd_check_iso(doc, R, args) -> Outcome:
    sec = _pick(doc, ("morphism",), args.name)
    phi = R[sec.name]
    src, dst = R[sec.one("from").args[0]], R[sec.one("to").args[0]]
    rep = check_bijective_bialgebra_map(phi, src, dst)
    rep.title = f"{sec.name} is a bialgebra isomorphism"
    if rep.ok and inverse(phi) is None:
        rep.check("inverse exists", False)
    return Outcome(rep.format(), _code(rep))


COMMANDS = {
    "verify": cmd_verify,
    "verify-datum": cmd_verify_datum,
    "build": cmd_build,
    "recover": cmd_recover,
    "split-analyze": cmd_split_analyze,
    "gamma-check": cmd_gamma_check,
    "enumerate-gset": cmd_enumerate,
    "check-iso": cmd_check_iso,
}


def run(command: str, doc: InputDocument | None, args) -> Outcome:
    if command not in COMMANDS:
        raise InputError(f"unknown command {command!r}")
    field = parse_field(args.scalars) if getattr(args, "scalars", None) else None
    R = Resolver(doc, field) if doc is not None else None
    return COMMANDS[command](doc, R, args)


# ---------------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfext", description="Exact computations with extending structures.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_text, needs_file=True, name_help="section to use (default: the last one)"):
        sp = sub.add_parser(name, help=help_text)
        if needs_file:
            sp.add_argument("file")
            sp.add_argument("--name", help=name_help)
        sp.add_argument("--scalars", help="rational or mod:<p>; overrides the file")
        sp.add_argument("--out", help="write the emitted document here")
        return sp

    add("verify", "check every bialgebra, datum, gamma, morphism and extension section")
    add("verify-datum", "normalization and (BE1)-(BE7) for a datum section")
    b = add("build", "build a product and write its structure constants")
    b.add_argument("--kind", choices=KINDS, default="unified")
    b.add_argument("--force", action="store_true", help="skip precondition gating")
    add("recover", "recover a datum from a factorization section")
    add("split-analyze", "reconstruct a split extension, naming the applicable case")
    g = add("gamma-check", "γ pipeline for a gamma section")
    g.add_argument("--datum", help="also run the split-mono criterion against this datum")
    e = add("enumerate-gset", "enumerate valid G-set data", needs_file=False)
    e.add_argument("--max-g", type=int, default=4)
    e.add_argument("--max-x", type=int, default=3)
    e.add_argument("--op-family", choices=("piecewise", "all"), default="piecewise")
    add("check-iso", "verify a morphism section is a bialgebra isomorphism")
    return p


def _write(out: Outcome, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        if isinstance(out.doc, InputDocument):
            fh.write(serialize(out.doc))
        else:
            json.dump(out.doc, fh, indent=1, ensure_ascii=False)
            fh.write("\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = load(args.file) if hasattr(args, "file") else None
        out = run(args.command, doc, args)
    except InputError as exc:
        where = getattr(args, "file", "<input>")
        print(f"{where}: {exc}", file=sys.stderr)
        return 2
    except (ScalarError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out.text)
    if args.out and out.doc is not None:
        _write(out, args.out)
    return out.code


if __name__ == "__main__":
    sys.exit(main())
