import json
from pathlib import Path

import pytest

from hopfext.cli import KINDS, main
from hopfext.textfmt import load, serialize

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"
C2X = str(FIXTURES / "c2_x2.txt")


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_datum_fixture(capsys):
    code, out, _ = run(capsys, "verify-datum", C2X)
    assert code == 0
    for label in ("BE1", "BE2", "BE3", "BE4", "BE5", "BE6", "BE7"):
        assert any(line.split()[:2] == [label, "pass"] for line in out.splitlines())


@pytest.mark.parametrize("kind", KINDS)
def test_build_output_reverifies(capsys, tmp_path, kind):
    dst = tmp_path / f"{kind}.txt"
    code, built, _ = run(capsys, "build", C2X, "--kind", kind, "--out", dst)
    assert code == 0 and dst.exists()
    code1, v1, _ = run(capsys, "verify", dst)
    again = tmp_path / "again.txt"
    again.write_text(serialize(load(str(dst))), encoding="utf-8")
    code2, v2, _ = run(capsys, "verify", again)
    assert code1 == code2 == 0 and v1 == v2


def test_build_then_recover(capsys, tmp_path):
    dst = tmp_path / "E.txt"
    assert run(capsys, "build", C2X, "--kind", "unified", "--out", dst)[0] == 0
    rec = tmp_path / "rec.txt"
    code, out, _ = run(capsys, "recover", dst, "--out", rec)
    assert code == 0 and "recovered datum = source" in out and "pass" in out
    assert run(capsys, "verify-datum", rec)[0] == 0


def test_build_product_table(capsys, tmp_path):
    dst = tmp_path / "E.txt"
    run(capsys, "build", C2X, "--out", dst)
    E = load(str(dst)).sections["E"]
    entry = next(e for e in E.get("mult") if e.args == ("(1,x)", "(1,x)"))
    assert entry.rhs == ((1, ("(g,x)",)),)


def test_split_analyze_names_smash_case(capsys, tmp_path):
    dst = tmp_path / "d.txt"
    code, out, _ = run(capsys, "split-analyze", FIXTURES / "sign_split.txt", "--out", dst)
    assert code == 0
    assert "normal split epimorphism of Hopf" in out and "A#H" in out
    doc = load(str(dst))
    D = doc.of_kind("datum")[-1]
    assert not D.get("ract") and not D.get("cocycle") and D.get("lact")
    assert run(capsys, "verify-datum", dst)[0] == 0


def test_recover_s3(capsys):
    code, out, _ = run(capsys, "recover", FIXTURES / "s3_factorization.txt")
    assert code == 0 and "u: A⊗H -> E bijective" in out


def test_gamma_check(capsys):
    code, out, _ = run(capsys, "gamma-check", C2X)
    assert code == 0 and "θ: A⋉H ≅ L∗A" in out
    code, out, _ = run(capsys, "gamma-check", C2X, "--datum", "D")
    assert code == 0 and "(iner1)" in out


def test_enumerate(capsys, tmp_path):
    dst = tmp_path / "cat.json"
    code, out, _ = run(capsys, "enumerate-gset", "--max-g", 2, "--max-x", 2, "--out", dst)
    assert code == 0 and out.startswith("5 valid G-set data")
    data = json.loads(dst.read_text())
    assert data["op_family"] == "piecewise" and len(data["entries"]) == 5
    assert [e["gamma"] for e in data["entries"] if e["group"] == "C2" and e["x_size"] == 2] == [[0, 0], [0, 1]]


H4_MAPS = "\n".join([
    "morphism m", "  from H4", "  to H4", "  map 1 : 1", "  map g : g", "  map x : {x}", "  map gx : {gx}", "end", ""])


@pytest.mark.parametrize("x,gx,want", [("-x", "-gx", 0), ("2*x", "2*gx", 0), ("", "", 1), ("x", "x", 1)])
def test_check_iso(capsys, tmp_path, x, gx, want):
    f = tmp_path / "iso.txt"
    f.write_text((FIXTURES / "h4.txt").read_text() + "\n" + H4_MAPS.format(x=x, gx=gx), encoding="utf-8")
    code, out, _ = run(capsys, "check-iso", f)
    assert code == want


def test_input_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("scalars rational\nbialgebra B\n  basis 1\n  counit 1 : 1/0\nend\n", encoding="utf-8")
    code, _, err = run(capsys, "verify", bad)
    assert code == 2 and "line 4, col 14" in err
    bad.write_text("scalars rational\ndatum D\n  A missing\n  H missing\nend\n", encoding="utf-8")
    code, _, err = run(capsys, "verify-datum", bad)
    assert code == 2 and "unresolved reference" in err
    bad.write_text("scalars rational\nbialgebra A\n  builtin H4\nend\nmorphism m\n  to A\nend\n", encoding="utf-8")
    code, _, err = run(capsys, "check-iso", bad)
    assert code == 2 and "needs from/to" in err
    assert run(capsys, "verify", tmp_path / "absent.txt")[0] == 2


INVALID = """scalars rational
group C2
  builtin C2
end
bialgebra A
  group C2
end
bialgebra H
  group C2
end
datum D
  A A
  H H
  cocycle g g : 1 + g
end
"""


def test_invalid_datum_exit_1_with_witness(capsys, tmp_path):
    f = tmp_path / "inv.txt"
    f.write_text(INVALID, encoding="utf-8")
    code, out, _ = run(capsys, "verify-datum", f)
    assert code == 1 and "FAIL" in out and " at " in out
    code, out, _ = run(capsys, "build", f)
    assert code == 1 and "build refused" in out
    code, out, _ = run(capsys, "build", f, "--force")
    assert code == 1 and "FAIL" in out


def test_exit_codes_deterministic(capsys, tmp_path):
    f = tmp_path / "inv.txt"
    f.write_text(INVALID, encoding="utf-8")
    first = run(capsys, "verify-datum", f)
    assert run(capsys, "verify-datum", f) == first


def test_scalars_flag(capsys):
    code, out, _ = run(capsys, "verify-datum", C2X, "--scalars", "mod:7")
    assert code == 0
