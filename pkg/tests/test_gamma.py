import itertools

import pytest

from hopfext.core import check_bialgebra, check_yetter_drinfeld
from hopfext.corpus import four_combinations, gamma_data
from hopfext.datum import PreconditionError, check_BE
from hopfext.gamma import (
    GammaDatum,
    circled_transport,
    extract_L,
    gamma_induced_datum,
    gamma_pipeline,
    induced_datum,
    iso_to_biproduct,
    iso_to_circled,
    split_mono_test,
)
from hopfext.groups import PointedMagma, RightGSet, enumerate_actions, piecewise_magma, symmetric3
from hopfext.linalg import LinMap, compose, identity
from hopfext.products import InvalidDatumError, canonical_embedding, radford_biproduct
from hopfext.gset import GSetDatum, to_gamma_datum, validate_gset_datum


def _s3_x3():
    """S3 swapping two points of a three-element set, with the piecewise
    operation and with a non-piecewise one."""
    G = symmetric3()
    act = enumerate_actions(piecewise_magma(3), G)[-1]
    out = []
    for X in (piecewise_magma(3), PointedMagma([[0, 1, 2], [1, 2, 2], [2, 2, 2]], 0)):
        out += [GSetDatum(G, X, RightGSet(X, act.act), (0, a, b)) for a in range(6) for b in range(6)]
    return out


def _nonzero(col):
    return [(i, v) for i, v in enumerate(col) if v]


def test_induced_operations_match_group_formulas():
    """▷_γ(x, g) = γ(x) g γ(x◁g)⁻¹ and f_γ(x, y) = γ(x)γ(y)γ(xy)⁻¹ on group-likes."""
    for D in _s3_x3()[:12]:
        G, n, m = D.G, D.X.size, D.G.order
        Dd = induced_datum(to_gamma_datum(D))
        for x, g in itertools.product(range(n), range(m)):
            want = G.prod(D.gamma[x], g, G.inv(D.gamma[D.act.act[x][g]]))
            assert _nonzero(Dd.ract.matrix[:, x * m + g]) == [(want, 1)]
        for x, y in itertools.product(range(n), repeat=2):
            assert _nonzero(Dd.cocycle.matrix[:, x * n + y]) == [(D.c(x, y), 1)]


def test_gamma_induced_datum_validity_matches_tables():
    valid = invalid = 0
    for D in _s3_x3():
        ok = validate_gset_datum(D).ok
        if ok:
            assert check_BE(gamma_induced_datum(to_gamma_datum(D))).ok
            valid += 1
        else:
            with pytest.raises(InvalidDatumError):
                gamma_induced_datum(to_gamma_datum(D))
            invalid += 1
    assert valid and invalid


def test_split_mono_holds_for_inducing_gamma(c2x_gamma, c2x_datum):
    res = split_mono_test(c2x_datum, c2x_gamma.gamma)
    assert res and res.report.ok
    assert compose(res.p_gamma, canonical_embedding(c2x_datum.A, c2x_datum.H)) == identity(
        c2x_datum.A.space, c2x_datum.field)


def test_split_mono_fails_for_other_gamma(c2x_gamma):
    smash = four_combinations()[0].datum
    res = split_mono_test(smash, c2x_gamma.gamma)
    assert not res and res.p_gamma is None
    assert not res.report["(iner2) f(h,g) = γ(h1)γ(g1)γ⁻¹(h2·g2)"].passed
    assert not res.report["(s2) γ(h)γ(g) = f(h1,g1)γ(h2·g2)"].passed


def test_split_mono_requires_coalgebra_map(c2x_gamma, c2x_datum):
    A, H = c2x_datum.A, c2x_datum.H
    bad = LinMap.from_columns(H.space, A.space, [{0: 1}, {0: 1, 1: 1}], A.field)
    with pytest.raises(PreconditionError):
        split_mono_test(c2x_datum, bad)


def test_transport_is_grouplike_formula(c2x_gamma):
    """φ(g⋉x) = gγ(x) ⊛ x."""
    G = c2x_gamma
    phi, phi_inv = circled_transport(G.A, G.H, G.gamma)
    n = G.H.dim
    for g, x in itertools.product(range(G.A.dim), range(n)):
        k = G.A.mult.matrix[:, g * G.A.dim + list(G.gamma.matrix[:, x]).index(1)]
        assert _nonzero(phi.matrix[:, g * n + x]) == [(list(k).index(1) * n + x, 1)]
    assert compose(phi_inv, phi) == identity(phi.domain, G.A.field)


def test_worked_pipeline(c2x_gamma, c2x_datum):
    assert iso_to_circled(c2x_datum, c2x_gamma.gamma).report.ok
    ext = extract_L(c2x_datum, c2x_gamma.gamma)
    assert ext.report.ok and ext.dim == 2
    assert check_yetter_drinfeld(ext.yd.module).ok
    assert check_bialgebra(radford_biproduct(ext.yd)).ok
    assert iso_to_biproduct(c2x_datum, c2x_gamma.gamma, ext).report.ok
    assert ext.dim * c2x_datum.A.dim == ext.unified.dim


def test_pipeline_on_gamma_corpus():
    # includes the two data over Sweedler's H4
    for G in [_gamma_of(cd) for cd in gamma_data()[-2:]] + [to_gamma_datum(D) for D in _s3_x3()
                                                             if validate_gset_datum(D).ok][:4]:
        rep = gamma_pipeline(G)
        assert rep.ok, rep.format()
        assert len(rep.results) == 7


def _gamma_of(cd):
    # the H4 corpus entries use γ(1) = 1, γ(t) = g
    D = cd.datum
    gamma = LinMap.from_columns(D.H.space, D.A.space, [{0: 1}, {1: 1}], D.field)
    return GammaDatum(D.A, D.H, D.lact, gamma, cd.name)


def test_pipeline_reports_invalid():
    bad = next(D for D in _s3_x3() if not validate_gset_datum(D).ok)
    rep = gamma_pipeline(to_gamma_datum(bad))
    assert not rep.ok
    assert rep.failed() == ["induced datum: full BE check"]
