"""Smoke tests for the python module; runs standalone or under pytest."""

import math

import hopfcalc


def test_poly_algebra():
    a = hopfcalc.Poly("a")
    astar = hopfcalc.Poly("as")
    c = hopfcalc.Poly("c")
    cstar = hopfcalc.Poly("cs")
    one = hopfcalc.Poly.one()
    assert astar * a + cstar * c == one
    assert str(astar * a) == "1 - csc"
    assert a.star() == astar
    assert a.winding() == 1
    assert (astar * a).is_invariant()
    assert hopfcalc.Poly("(1/2 + 3/4i)*a^2c").winding() == 3
    assert hopfcalc.alpha_power(-2) == astar * astar
    assert hopfcalc.counit(a) == 1 + 0j
    assert hopfcalc.counit(c) == 0j
    assert hopfcalc.antipode(c) == -hopfcalc.Poly("c")


def test_idempotents():
    assert hopfcalc.e_tilde(0) == [["1"]]
    assert hopfcalc.e_tilde(1) == [["1 - csc", "asc"], ["acs", "csc"]]
    proj = hopfcalc.projector(-1)
    assert proj["den"] == "1"
    assert proj["num"][0][0] == "1 - csc"


def test_decompose_round_trip():
    f = hopfcalc.Poly("a^2 + (1/2)*ac")
    report = hopfcalc.decompose(f, -2)
    assert report["reconstructs"]
    assert len(report["coefficients"]) == 3
    try:
        hopfcalc.decompose(f, 2)
    except ValueError:
        pass
    else:
        raise AssertionError("wrong winding must be rejected")


def test_chern_numbers():
    for mu in (-2, -1, 0, 1, 3):
        integral = hopfcalc.chern_number(mu, n_theta=24, n_phi=48)
        assert abs(integral + mu) < 1e-9, (mu, integral)
    report = hopfcalc.pairing(2)
    assert report["nearest"] == -2 and report["residual"] < 1e-8
    degree0, degree2 = hopfcalc.chern_character_line(1)
    assert abs(degree0 - 1.0) < 1e-9 and abs(degree2 + 1.0) < 1e-6


def test_plane_flow():
    x, y = hopfcalc.flow(0.3, -1.0, 0.8)
    xx, yy = hopfcalc.flow(x, y, -0.8)
    assert abs(xx - 0.3) < 1e-12 and abs(yy + 1.0) < 1e-12
    assert abs(hopfcalc.translation_time((0.3, -1.0), (x, y)) - 0.8) < 1e-9


def test_sphere_models():
    s = 1.0 / math.sqrt(2.0)
    z, height = hopfcalc.hopf_projection(s, s * 1j)
    assert abs(z + 1j) < 1e-12 and abs(height) < 1e-12
    z1, z2 = hopfcalc.heegaard(s, s * 1j)
    assert abs(abs(z1) - 1.0) < 1e-12 and abs(abs(z2) - 1.0) < 1e-12
    a, c = hopfcalc.heegaard_inverse(z1, z2)
    assert abs(a - s) < 1e-12 and abs(c - s * 1j) < 1e-12
    assert abs(hopfcalc.transition_function(s, s * 1j) - (-1j)) < 1e-12


def test_verify_suite():
    results = hopfcalc.verify("hopf", seed=hopfcalc.default_seed)
    assert results and all(r["ok"] for r in results), results


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"ok {name}")
    print("python smoke tests passed")
