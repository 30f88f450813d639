import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lie2.liealg import (
    InputError,
    LieAlgebraPresentation,
    ce_three_cocycle_residual,
    load_presentation,
    sl2,
    so3,
    su2,
)

E1, E2, E3 = np.eye(3)


def test_su2_bracket_cyclic(g):
    assert np.allclose(g.bracket(E1, E2), E3)
    assert np.allclose(g.bracket(E2, E3), E1)
    assert np.allclose(g.bracket(E3, E1), E2)


def test_bracket_antisymmetry_on_diagonal(g, rng):
    x = rng.uniform(-1, 1, 3)
    assert np.allclose(g.bracket(x, x), 0.0)


def test_bracket_bilinearity_example(g):
    assert np.allclose(g.bracket(E1 + E2, E2), E3)


def test_bracket_dimension_mismatch(g):
    with pytest.raises(InputError):
        g.bracket(np.ones(2), np.ones(3))


def test_nu_worked_value(g):
    assert g.nu(E1, E2, E3) == pytest.approx(1.0)


def test_nu_antisymmetry(g, rng):
    x, z = rng.uniform(-1, 1, (2, 3))
    assert g.nu(x, x, z) == pytest.approx(0.0, abs=1e-15)
    assert g.nu(E1, E3, E2) == pytest.approx(-g.nu(E1, E2, E3))


def test_nu_totally_antisymmetric_on_basis(g):
    for i in range(3):
        for j in range(3):
            for k in range(3):
                v = g.nu(np.eye(3)[i], np.eye(3)[j], np.eye(3)[k])
                assert v == pytest.approx(-g.nu(np.eye(3)[j], np.eye(3)[i], np.eye(3)[k]))
                assert v == pytest.approx(-g.nu(np.eye(3)[i], np.eye(3)[k], np.eye(3)[j]))


def test_bundled_presentations_validate_exactly():
    for make in (su2, so3, sl2):
        make().validate(tol=0.0)


def test_ce_cocycle_residual_vanishes(g, rng):
    worst = max(
        ce_three_cocycle_residual(g, *rng.uniform(-1, 1, (4, 3)))
        for _ in range(100)
    )
    assert worst <= 1e-12


def test_ce_cocycle_repeated_argument(g, rng):
    w = rng.uniform(-1, 1, 3)
    y, z = rng.uniform(-1, 1, (2, 3))
    assert ce_three_cocycle_residual(g, w, w, y, z) == pytest.approx(0.0, abs=1e-15)


def test_ce_cocycle_vacuous_in_dimension_three(g, rng):
    # an alternating 4-form on a 3-dimensional space is identically zero, so
    # in dim 3 the residual vanishes for any symmetric form whatsoever
    bad_form = np.eye(3)
    bad_form[0, 1] = bad_form[1, 0] = 0.4
    broken = LieAlgebraPresentation("su2-skewed", 3, g.structure, bad_form)
    worst = max(
        ce_three_cocycle_residual(broken, *rng.uniform(-1, 1, (4, 3)))
        for _ in range(20)
    )
    assert worst <= 1e-13


def test_ce_cocycle_detects_non_invariant_form(g6, rng):
    # sanity oracle on a 6-dimensional algebra: a form mixing the two simple
    # blocks breaks closedness, so the test has power
    g6.validate(tol=0.0)
    worst_good = max(
        ce_three_cocycle_residual(g6, *rng.uniform(-1, 1, (4, 6)))
        for _ in range(50)
    )
    assert worst_good <= 1e-12
    bad_form = np.eye(6)
    bad_form[0, 4] = bad_form[4, 0] = 0.4
    bad_form[1, 1] = 2.0
    broken = LieAlgebraPresentation("broken6", 6, g6.structure, bad_form)
    worst = max(
        ce_three_cocycle_residual(broken, *rng.uniform(-1, 1, (4, 6)))
        for _ in range(50)
    )
    assert worst > 1e-2


def test_sl2_trace_form_is_invariant():
    a = sl2()
    a.validate(tol=0.0)
    h, e, f = np.eye(3)
    assert np.allclose(a.bracket(h, e), 2 * e)
    assert np.allclose(a.bracket(e, f), h)
    assert a.pair(e, f) == pytest.approx(1.0)


def test_loader_bundled_names():
    assert load_presentation("su2").name == "su2"
    assert load_presentation("so3").dim == 3


def test_loader_unknown_name():
    with pytest.raises(InputError):
        load_presentation("nonesuch")


def test_loader_roundtrip(tmp_path):
    doc = {
        "name": "su2-file",
        "dim": 3,
        "structure": [[1, 2, 3, 1.0], [2, 3, 1, 1.0], [3, 1, 2, 1.0]],
    }
    path = tmp_path / "su2.json"
    path.write_text(json.dumps(doc))
    g = load_presentation(path)
    assert np.allclose(g.structure, su2().structure)
    assert np.allclose(g.form, np.eye(3))


def test_loader_rejects_non_jacobi(tmp_path):
    doc = {"name": "bad", "dim": 3,
           "structure": [[1, 2, 3, 1.0], [1, 3, 2, 1.0]]}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    with pytest.raises(InputError):
        load_presentation(path)


def test_form_scale_only_rescales_form(g):
    scaled = g.scaled(0.25)
    scaled.validate(tol=0.0)
    assert np.allclose(scaled.form, 0.25 * np.eye(3))
    assert np.allclose(scaled.structure, g.structure)


coords = st.lists(st.floats(min_value=-5, max_value=5, allow_nan=False),
                  min_size=3, max_size=3).map(np.array)


@given(coords, coords, coords)
def test_bracket_bilinear_and_antisymmetric(x, y, z):
    g = su2()
    assert np.allclose(g.bracket(x + z, y), g.bracket(x, y) + g.bracket(z, y))
    assert np.allclose(g.bracket(x, y), -g.bracket(y, x))


@given(coords, coords, coords)
def test_form_invariance(x, y, z):
    g = su2()
    assert g.pair(g.bracket(x, y), z) + g.pair(y, g.bracket(x, z)) == \
        pytest.approx(0.0, abs=1e-9)
