from dataclasses import replace

import pytest

from hopfext.core import check_bialgebra, identity
from hopfext.corpus import (
    canonical_split,
    coset_split,
    generate_corpus,
    h4_projection,
    s3_factorization,
    sign_split,
    single_failure_data,
    smash_data,
    trivial_split,
)
from hopfext.datum import is_trivial_cocycle, is_trivial_ract
from hopfext.groups import symmetric3
from hopfext.linalg import LinMap, compose
from hopfext.products import smash_product, twisted_product, unified_product
from hopfext.reconstruction import (
    RecoveryError,
    analyze_split,
    bimodule_split,
    canonical_factorization,
    fundamental_report,
    normal_epi_split,
    recover_datum,
    split_extension_datum,
    split_input_report,
)


@pytest.fixture(scope="module")
def corpus():
    return generate_corpus()


def _same_datum(D, R):
    return (D.lact == R.lact and D.ract == R.ract and D.cocycle == R.cocycle
            and D.H.mult == R.H.mult and D.H.unit == R.H.unit
            and D.H.comult == R.H.comult and D.H.counit == R.H.counit)


def test_factorization_round_trip(corpus):
    for cd in corpus:
        rec = recover_datum(canonical_factorization(unified_product(cd.datum)))
        assert _same_datum(cd.datum, rec.datum), cd.name
        assert rec.iso == identity(rec.iso.domain, rec.iso.field)


def test_s3_factorization_against_group_table():
    S3 = symmetric3()
    rec = recover_datum(s3_factorization())
    r, t = S3.labels.index("r"), S3.labels.index("t")
    powers = [S3.identity, r, S3.mul(r, r)]
    hs = [S3.identity, t]
    # oracle: write j(h)i(a) = r^m t^n uniquely
    for hi, h in enumerate(hs):
        for ai, a in enumerate(powers):
            g = S3.mul(h, a)
            (m, n), = [(m, n) for m in range(3) for n in range(2) if S3.mul(powers[m], hs[n]) == g]
            col = hi * 3 + ai
            assert [i for i, v in enumerate(rec.datum.ract.matrix[:, col]) if v] == [m]
            assert [i for i, v in enumerate(rec.datum.lact.matrix[:, col]) if v] == [n]
    assert check_bialgebra(rec.product).ok
    assert rec.report.ok and not is_trivial_ract(rec.datum)


def test_non_bijective_factorization_refused():
    inp = s3_factorization()
    collapsed = LinMap.from_columns(inp.H.space, inp.E.space, [{0: 1}, {0: 1}], inp.A.field)
    with pytest.raises(RecoveryError) as err:
        recover_datum(replace(inp, embed_H=collapsed))
    assert not err.value.report.ok


def test_split_round_trip(corpus):
    for cd in corpus:
        rec = split_extension_datum(canonical_split(unified_product(cd.datum)))
        assert _same_datum(cd.datum, rec.datum), cd.name
        assert compose(rec.iso_inv, rec.iso) == identity(rec.iso.domain, rec.iso.field)


def test_split_preconditions():
    rep = split_input_report(h4_projection())
    assert not rep["π normal"].passed
    assert rep["π coalgebra map"].passed and rep["π left A-module map"].passed
    with pytest.raises(RecoveryError):
        split_extension_datum(h4_projection())


def test_sign_split_is_smash():
    rec = normal_epi_split(sign_split())
    assert rec.kind == "smash" and rec.datum.H.dim == 3
    assert is_trivial_ract(rec.datum) and is_trivial_cocycle(rec.datum)
    assert analyze_split(sign_split()).kind == "smash"


def test_coset_split_general():
    inp = coset_split()
    with pytest.raises(RecoveryError):
        normal_epi_split(inp)
    rec = analyze_split(inp)
    assert rec.kind == "unified" and rec.datum.H.dim == 3
    assert not is_trivial_ract(rec.datum)


def test_trivial_split():
    from hopfext.corpus import sweedler_h4
    rec = split_extension_datum(trivial_split(sweedler_h4()))
    assert rec.datum.H.dim == 1


def test_bimodule_split_on_twisted(corpus):
    seen = 0
    for cd in corpus:
        if is_trivial_ract(cd.datum) and not is_trivial_cocycle(cd.datum):
            rec = bimodule_split(canonical_split(twisted_product(cd.datum)))
            assert rec.kind == "twisted" and is_trivial_ract(rec.datum)
            seen += 1
    assert seen >= 3


def test_bimodule_split_refuses_nontrivial_ract(corpus):
    cd = next(c for c in corpus if not c.combination[0])
    with pytest.raises(RecoveryError):
        bimodule_split(canonical_split(unified_product(cd.datum)))


def test_normal_epi_split_on_smash():
    for cd in smash_data():
        D = cd.datum
        rec = normal_epi_split(canonical_split(smash_product(D.A, D.H, D.lact)))
        assert is_trivial_ract(rec.datum) and is_trivial_cocycle(rec.datum)
        assert rec.datum.lact == D.lact


def test_fundamental_maps_inverse(corpus):
    insts = [sign_split(), coset_split(), trivial_split(smash_data()[0].datum.A)]
    insts += [canonical_split(unified_product(cd.datum)) for cd in corpus[::3]]
    for inp in insts:
        assert fundamental_report(inp).ok


def test_refuses_corrupt_factorization_product():
    bad = single_failure_data(generate_corpus()[:20], want=1)[0].datum
    P = unified_product(bad, force=True)
    with pytest.raises(RecoveryError):
        recover_datum(canonical_factorization(P))
