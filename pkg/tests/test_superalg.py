"""Superalgebra assembly, graded Jacobi sectors, and serialization."""

import json

import pytest

from specialortho.clifford import CliffordAlgebra
from specialortho.errors import NotSpecial, ParseError, ShapeMismatch
from specialortho.octonions import build_algebra
from specialortho.scalars import ALPHA, L1, L2, L3, ONE, ZERO, rat
from specialortho import family as fam
from specialortho import quadlie as ql
from specialortho import superalg as sup


@pytest.fixture(scope="module")
def octs():
    return build_algebra(L1, L2, L3)


@pytest.fixture(scope="module")
def cliff(octs):
    return CliffordAlgebra(octs)


@pytest.fixture(scope="module")
def d21():
    rep = fam.build_family(ALPHA, -ONE - ALPHA)
    return sup.build_tilde(rep, ql.moment_map(rep), "D(2,1;a)")


@pytest.fixture(scope="module")
def g3(cliff):
    rep, _ = ql.build_g2_rep(cliff)
    return sup.build_tilde(rep, ql.moment_map(rep), "G3")


@pytest.fixture(scope="module")
def f4(cliff):
    rep = ql.build_spinor_rep(cliff)
    return sup.build_tilde(rep, ql.moment_map(rep), "F4")


@pytest.mark.parametrize(
    "fixture_name,even,odd",
    [("d21", 9, 8), ("g3", 17, 14), ("f4", 24, 16)],
)
def test_dimensions(fixture_name, even, odd, request):
    sa = request.getfixturevalue(fixture_name)
    assert (sa.even_dim, sa.odd_dim) == (even, odd)
    assert sa.dim == even + odd


@pytest.mark.parametrize("fixture_name", ["d21", "g3", "f4"])
def test_jacobi_all_sectors_clean(fixture_name, request):
    sa = request.getfixturevalue(fixture_name)
    assert sa.super_jacobi_check() == {
        "EEE": None,
        "EEO": None,
        "EOO": None,
        "OOO": None,
    }


@pytest.mark.parametrize("fixture_name", ["d21", "g3", "f4"])
def test_form_invariant(fixture_name, request):
    sa = request.getfixturevalue(fixture_name)
    assert sa.form_invariance_witness() is None


@pytest.mark.parametrize("fixture_name", ["d21", "g3", "f4"])
def test_odd_bracket_needs_no_rescaling(fixture_name, request):
    sa = request.getfixturevalue(fixture_name)
    assert sa.odd_odd_scale == ONE


def test_not_special_is_refused():
    rep = fam.build_family(rat(1), rat(1))
    mu = ql.moment_map(rep)
    with pytest.raises(NotSpecial):
        sup.build_tilde(rep, mu, "refused")


def test_forced_build_fails_only_in_odd_sector():
    rep = fam.build_family(rat(1), rat(1))
    mu = ql.moment_map(rep)
    sa = sup.build_tilde(rep, mu, "forced", force=True)
    sectors = sa.super_jacobi_check()
    assert sectors["EEE"] is None
    assert sectors["EEO"] is None
    assert sectors["EOO"] is None
    assert sectors["OOO"] is not None and "J(" in sectors["OOO"]


def test_perturbed_sl2_block_breaks_invariance():
    rep = fam.build_family(ALPHA, -ONE - ALPHA)
    mu = ql.moment_map(rep)
    sa = sup.build_tilde(rep, mu, "scaled", sl2_form_scale=rat(2))
    witness = sa.form_invariance_witness()
    assert witness is not None and "B(" in witness


def test_bracket_super_antisymmetry(d21):
    # even-even and even-odd flip sign; odd-odd is symmetric
    e0 = 0
    odd0, odd1 = d21.even_dim, d21.even_dim + 3
    row = d21.bracket(e0, odd0)
    assert row and d21.bracket(odd0, e0) == {k: -c for k, c in row.items()}
    sym = d21.bracket(odd0, odd1)
    assert sym and d21.bracket(odd1, odd0) == sym
    ee = d21.bracket(0, 1)
    assert ee and d21.bracket(1, 0) == {k: -c for k, c in ee.items()}


def test_even_self_bracket_rejected(d21):
    with pytest.raises(ShapeMismatch):
        sup.SuperAlgebra(
            "bad",
            ("x",),
            (),
            {(0, 0): {0: ONE}},
            [[ONE]],
        )


def test_form_parity_blocks_enforced():
    with pytest.raises(ShapeMismatch):
        sup.SuperAlgebra(
            "bad",
            ("x",),
            ("p",),
            {},
            [[ONE, ONE], [ONE, ZERO]],
        )


def test_purely_even_wrapping(cliff):
    rep, _ = ql.build_g2_rep(cliff)
    sa = sup.from_quad_rep(rep, "g2")
    assert (sa.even_dim, sa.odd_dim) == (14, 0)
    assert sa.super_jacobi_check()["EEE"] is None
    assert sa.form_invariance_witness() is None


def test_export_import_round_trip(d21):
    text = sup.export_superalgebra(d21, {"a": "a"})
    doc = json.loads(text)
    assert doc["even_dim"] == 9 and doc["odd_dim"] == 8
    assert doc["parameters"] == {"a": "a"}
    assert len(doc["digest"]) == 64
    back = sup.import_superalgebra(text)
    assert sup.export_superalgebra(back, {"a": "a"}) == text


def test_import_rejects_tampering(d21):
    text = sup.export_superalgebra(d21)
    tampered = text.replace('"1"', '"2"', 1)
    with pytest.raises(ParseError):
        sup.import_superalgebra(tampered)
    with pytest.raises(ParseError):
        sup.import_superalgebra("{not json")
    with pytest.raises(ParseError):
        sup.import_superalgebra("{}")


def test_export_specialized_parameters():
    rep = fam.build_family(rat(3), rat(-4))
    sa = sup.build_tilde(rep, ql.moment_map(rep), "D(2,1;3)")
    text = sup.export_superalgebra(sa, {"a": "3"})
    back = sup.import_superalgebra(text)
    assert back._imported_parameters == {"a": "3"}
    assert back.super_jacobi_check()["OOO"] is None
