"""Moment maps, covariants, and the identity ladder on the octonion modules."""

import pytest

from specialortho import linalg
from specialortho.altmap import PairingSpec, compose, wedge_rel, as_dual_element
from specialortho.clifford import CliffordAlgebra
from specialortho.errors import ShapeMismatch
from specialortho.exterior import QuadraticSpace, scalar_codomain, wedge
from specialortho.octonions import build_algebra
from specialortho.scalars import L1, L2, L3, ONE, ZERO, parse, rat
from specialortho import quadlie as ql


@pytest.fixture(scope="module")
def octs():
    return build_algebra(L1, L2, L3)


@pytest.fixture(scope="module")
def cliff(octs):
    return CliffordAlgebra(octs)


@pytest.fixture(scope="module")
def scalar():
    return scalar_codomain()


@pytest.fixture(scope="module")
def g2(cliff):
    return ql.build_g2_rep(cliff)


@pytest.fixture(scope="module")
def so7(cliff):
    return ql.build_spinor_rep(cliff)


@pytest.fixture(scope="module")
def cov_im(g2, scalar):
    rep, _ = g2
    return ql.covariants(rep, scalar)


@pytest.fixture(scope="module")
def cov_oct(so7, scalar):
    return ql.covariants(so7, scalar)


# -- generic so(V) -----------------------------------------------------------


def small_space():
    gram = [[ONE, ZERO, ZERO], [ZERO, L1, ZERO], [ZERO, ZERO, L2]]
    return QuadraticSpace(("x", "y", "z"), gram, name="V3")


def hyperbolic_space():
    g = [[ZERO] * 4 for _ in range(4)]
    g[0][3] = g[3][0] = ONE
    g[1][2] = g[2][1] = -ONE
    return QuadraticSpace(("t1", "t2", "t3", "t4"), g, name="T4")


@pytest.mark.parametrize("space_fn", [small_space, hyperbolic_space])
def test_so_fundamental_moment_is_canonical(space_fn):
    rep, mu_can = ql.build_so(space_fn())
    assert rep.check_jacobi() is None
    assert rep.check_rep_property() is None
    assert rep.check_action_skew() is None
    assert rep.check_form_invariance() is None
    mu = ql.moment_map(rep)
    assert mu == mu_can
    assert ql.moment_equivariance_witness(rep, mu) is None
    ok, witness = ql.check_special(rep, mu)
    assert ok and witness is None


def test_check_special_reports_first_witness():
    rep, mu_can = ql.build_so(small_space())
    ok, witness = ql.check_special(rep, mu_can.scale(rat(2)))
    assert not ok
    assert witness == "(u,v,w) = (e1, e1, e2) of V3"


def test_so_covariants_vanish_for_canonical_map(scalar):
    rep, _ = ql.build_so(small_space())
    cov = ql.covariants(rep, scalar)
    assert cov.special
    # psi = 3 (mu - mu_can) = 0 when mu is canonical
    assert cov.psi.is_zero()
    assert cov.quad.is_zero()
    assert all(c.status == "vacuous" for c in ql.mathews_status(cov))


def test_bracket_antisymmetry_and_guards():
    rep, _ = ql.build_so(small_space())
    fwd = rep.bracket(0, 1)
    bwd = rep.bracket(1, 0)
    assert fwd and bwd == {k: -c for k, c in fwd.items()}
    assert rep.bracket(2, 2) == {}
    with pytest.raises(ShapeMismatch):
        ql.QuadLieRep(
            "bad",
            rep.algebra_space,
            {(1, 0): {0: ONE}},
            rep.action,
            rep.space,
        )
    with pytest.raises(ShapeMismatch):
        ql.QuadLieRep("bad", rep.algebra_space, {}, rep.action[:-1], rep.space)


# -- the 14-dimensional annihilator on imaginaries --------------------------


def test_g2_structure(g2):
    rep, kernel = g2
    assert rep.dim == 14 and rep.space.dim == 7
    assert len(kernel) == 14
    assert rep.check_jacobi() is None
    assert rep.check_rep_property() is None
    assert rep.check_action_skew() is None
    assert rep.check_form_invariance() is None


def test_g2_form_is_seven_dimensional_trace(g2):
    rep, _ = g2
    third = rat(-1, 3)
    for a in range(0, 14, 5):
        for b in range(a, 14, 4):
            tr = linalg.trace(linalg.mat_mul(rep.action[a], rep.action[b]))
            assert rep.algebra_space.gram[a][b] == third * tr


def test_g2_moment_closed_forms(octs, g2):
    rep, _ = g2
    mu = ql.moment_map(rep)
    ok, witness = ql.check_special(rep, mu)
    assert ok and witness is None
    assert ql.moment_equivariance_witness(rep, mu) is None
    assert ql.mu_im_pointwise_witness(octs, rep, mu) is None
    assert ql.mu_im_canonical_split_witness(octs, rep, mu) is None
    assert ql.g2_cyclic_witness(octs, mu) is None


def test_im_covariants_match_closed_forms(octs, cov_im, scalar):
    assert cov_im.special
    assert cov_im.psi == ql.psi_im_expected(octs)
    assert cov_im.quad == ql.quad_im_expected(octs, scalar)


def test_im_identity_ladder(cov_im, scalar):
    checks = {c.name: c for c in ql.mathews_status(cov_im)}
    assert checks["wedge-mu-psi"].status == "holds"
    assert checks["compose-mu-psi"].status == "holds"
    assert checks["compose-psi-psi"].status == "vacuous"
    assert checks["compose-quad-psi"].status == "vacuous"
    # on imaginaries the composition identity holds because both sides vanish
    assert compose(cov_im.mu, cov_im.psi).is_zero()
    k_g = PairingSpec.scalar_multiply(scalar, cov_im.rep.algebra_space)
    assert wedge_rel(cov_im.quad, cov_im.mu, k_g).is_zero()


# -- the spinor representation on the octonions ------------------------------


def test_spinor_structure(octs, so7):
    assert so7.dim == 21 and so7.space.dim == 8
    assert so7.check_jacobi() is None
    assert so7.check_rep_property() is None
    assert so7.check_action_skew() is None
    assert so7.check_form_invariance() is None
    # the invariant form is diagonal with B(s_ij, s_ij) = 3 q_i q_j
    gram = so7.algebra_space.gram
    qs = octs.space_im.diag
    t = 0
    for i in range(7):
        for j in range(i + 1, 7):
            assert gram[t][t] == rat(3) * qs[i] * qs[j]
            for s in range(t + 1, 21):
                assert gram[t][s].is_zero()
            t += 1


def test_oct_covariants_match_closed_forms(octs, cov_oct, scalar):
    assert cov_oct.special
    assert cov_oct.psi == ql.psi_oct_expected(octs)
    assert cov_oct.quad == ql.quad_oct_expected(octs, scalar)


def test_oct_identity_ladder(cov_oct):
    checks = {c.name: c for c in ql.mathews_status(cov_oct)}
    assert checks["wedge-mu-psi"].status == "holds"
    assert checks["compose-mu-psi"].status == "holds"
    assert checks["compose-psi-psi"].status == "vacuous"
    assert checks["compose-quad-psi"].status == "vacuous"


def test_oct_moment_decomposes_through_clifford(octs, cliff, g2, cov_oct):
    rep, kernel = g2
    mu_im = ql.moment_map(rep)
    assert (
        ql.mu_oct_from_mu_im_witness(octs, cliff, kernel, mu_im, cov_oct.mu) is None
    )
    assert ql.spinor_cyclic_witness(octs, cov_oct.mu) is None


# -- decompositions and volumes ----------------------------------------------


def test_phi_dual_decomposition(octs, scalar):
    terms = ql.decompose_phi_dual(octs, scalar)
    assert len(terms) == 7
    by_index = {t.index: t.coefficient for t in terms}
    assert by_index[(1, 2, 3)] == parse("1/(l1*l2)")
    assert by_index[(1, 6, 7)] == parse("-1/(l1*l2*l3)")
    assert by_index[(3, 5, 6)] == parse("-1/(l1*l2*l3)")


def test_quad_im_decomposition(octs, cov_im):
    terms = ql.decompose_quad_im(octs, cov_im.quad)
    assert len(terms) == 7
    by_index = {t.index: t.coefficient for t in terms}
    assert by_index[(1, 2, 4, 7)] == parse("6/(l1*l2*l3)")
    assert by_index[(1, 3, 5, 7)] == parse("-6/(l1^2*l2*l3)")
    assert by_index[(2, 3, 6, 7)] == parse("-6/(l1*l2^2*l3)")
    assert by_index[(4, 5, 6, 7)] == parse("-6/(l1*l2*l3^2)")
    assert all("complement of line" in t.annotation for t in terms)


def test_quad_oct_decomposition(octs, cov_oct):
    terms = ql.decompose_quad_oct(octs, cov_oct.quad)
    assert len(terms) == 14
    by_index = {t.index: t.coefficient for t in terms}
    assert by_index[(1, 2, 3, 4)] == parse("4/(l1*l2)")
    assert by_index[(1, 2, 7, 8)] == parse("-4/(l1*l2*l3)")
    assert by_index[(2, 4, 6, 8)] == parse("-4/(l1^2*l2*l3)")
    assert by_index[(3, 4, 7, 8)] == parse("-4/(l1*l2^2*l3)")
    assert by_index[(5, 6, 7, 8)] == parse("-4/(l1*l2*l3^2)")
    assert all(ql.is_affine_plane(t.index) for t in terms)


def test_affine_plane_predicate():
    assert ql.is_affine_plane((1, 2, 3, 4))
    assert ql.is_affine_plane((5, 6, 7, 8))
    assert ql.is_affine_plane((1, 4, 6, 7))
    assert not ql.is_affine_plane((1, 2, 3, 5))
    assert not ql.is_affine_plane((1, 2, 3))
    assert not ql.is_affine_plane((1, 1, 2, 2))


def test_top_volume_constants(octs, cov_im, cov_oct, scalar):
    from specialortho.octonions import phi_as_altmap

    phi = as_dual_element(phi_as_altmap(octs, scalar))
    q_im = as_dual_element(cov_im.quad)
    top = wedge(phi, q_im)
    assert list(top.coeffs) == [(1, 2, 3, 4, 5, 6, 7)]
    assert top.coeffs[(1, 2, 3, 4, 5, 6, 7)] == parse("-42*l1^2*l2^2*l3^2")

    q_oct = as_dual_element(cov_oct.quad)
    top8 = wedge(q_oct, q_oct)
    assert list(top8.coeffs) == [(1, 2, 3, 4, 5, 6, 7, 8)]
    assert top8.coeffs[(1, 2, 3, 4, 5, 6, 7, 8)] == parse("-224*l1^2*l2^2*l3^2")
