import numpy as np
import pytest
from hypothesis import given, strategies as st

from extpoincare import group
from extpoincare.group import OrbitClass

coords = st.floats(-100.0, 100.0, allow_nan=False, allow_infinity=False)
angles = st.floats(0.0, 2 * np.pi, allow_nan=False, allow_infinity=False)


@given(st.tuples(coords, coords, coords, coords),
       st.tuples(coords, coords, coords, coords),
       st.floats(-10, 10), st.floats(-10, 10))
def test_minkowski_is_symmetric_and_bilinear(u, v, a, b):
    u, v = np.array(u), np.array(v)
    assert group.minkowski(u, v) == pytest.approx(group.minkowski(v, u), abs=1e-9)
    lhs = group.minkowski(a * u + b * v, u)
    rhs = a * group.minkowski(u, u) + b * group.minkowski(v, u)
    assert lhs == pytest.approx(rhs, abs=1e-6, rel=1e-9)


def test_coordinate_convention_swaps_t_and_z():
    m = group.make_lambda_inf(0.0, 0.0, "coordinate").matrix
    expected = np.array([
        [0, 0, 0, 1],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [1, 0, 0, 0],
    ], dtype=float)
    assert np.array_equal(m, expected)


def test_momentum_convention_reverses_aligned_representative():
    m = group.make_lambda_inf(0.0, 0.0, "momentum").matrix
    p0 = np.array([1.0, 0.0, 0.0, 1.0])
    assert np.max(np.abs(m @ p0 + p0)) < 1e-12


def test_momentum_convention_fixes_representative_under_negative():
    for theta, phi in [(0.0, 0.0), (0.7, 1.3), (np.pi / 2, np.pi)]:
        li = group.make_lambda_inf(theta, phi, "momentum").matrix
        p0 = group.lightlike_representative(1.7, theta, phi)
        assert np.max(np.abs(li @ p0 + p0)) < 1e-12
        assert np.max(np.abs(-li @ p0 - p0)) < 1e-12


@given(angles, angles, st.sampled_from(["momentum", "coordinate"]))
def test_involution_squares_to_identity(theta, phi, convention):
    m = group.make_lambda_inf(theta, phi, convention).matrix
    assert np.max(np.abs(m @ m - np.eye(4))) < 1e-12


def test_involution_squares_on_angle_grid():
    for theta in np.linspace(0, np.pi, 10):
        for phi in np.linspace(0, 2 * np.pi, 10):
            for convention in ("momentum", "coordinate"):
                m = group.make_lambda_inf(theta, phi, convention).matrix
                assert np.max(np.abs(m @ m - np.eye(4))) < 1e-12


def test_unknown_convention_rejected():
    with pytest.raises(ValueError):
        group.make_lambda_inf(0.0, 0.0, "cartesian")


def test_generated_elements_are_proper_orthochronous():
    rng = np.random.default_rng(7)
    for _ in range(50):
        m = group.random_proper_orthochronous(rng)
        assert group.eta_deviation(m) < 1e-10
        assert np.linalg.det(m) == pytest.approx(1.0, abs=1e-10)
        assert m[0, 0] >= 1.0 - 1e-12


def test_identity_is_neutral():
    rng = np.random.default_rng(3)
    g = group.ExtPoincareElement(
        group.LorentzMatrix(group.random_proper_orthochronous(rng)),
        rng.uniform(-1, 1, 4))
    e = group.poincare_identity()
    for prod in (group.poincare_mul(e, g), group.poincare_mul(g, e)):
        assert np.array_equal(prod.linear.matrix, g.linear.matrix)
        assert np.array_equal(prod.translation, g.translation)


def test_pure_translations_add():
    a = np.array([1.0, 2.0, -3.0, 0.5])
    b = np.array([-0.5, 0.0, 1.0, 4.0])
    ga = group.ExtPoincareElement(group.LorentzMatrix(np.eye(4), "I"), a)
    gb = group.ExtPoincareElement(group.LorentzMatrix(np.eye(4), "I"), b)
    prod = group.poincare_mul(ga, gb)
    assert np.array_equal(prod.translation, a + b)
    assert np.array_equal(prod.linear.matrix, np.eye(4))


def test_rotation_acts_on_the_translation():
    # R_z(pi/2) sends the x translation to the y translation
    rz = group.rotation_matrix([0, 0, 1], np.pi / 2)
    g1 = group.ExtPoincareElement(group.LorentzMatrix(rz), np.zeros(4))
    g2 = group.ExtPoincareElement(group.LorentzMatrix(np.eye(4), "I"),
                                  np.array([0.0, 1.0, 0.0, 0.0]))
    prod = group.poincare_mul(g1, g2)
    assert np.max(np.abs(prod.translation - np.array([0.0, 0.0, 1.0, 0.0]))) < 1e-12
    assert np.array_equal(prod.linear.matrix, rz)


def test_product_associativity_and_inverses():
    rng = np.random.default_rng(11)
    for _ in range(100):
        # rapidity capped at 2: the round trip rounds at eps * cond(M)
        gs = [group.ExtPoincareElement(
                group.LorentzMatrix(group.random_proper_orthochronous(rng, max_rapidity=2.0)),
                rng.uniform(-2, 2, 4)) for _ in range(3)]
        left = group.poincare_mul(group.poincare_mul(gs[0], gs[1]), gs[2])
        right = group.poincare_mul(gs[0], group.poincare_mul(gs[1], gs[2]))
        assert np.max(np.abs(left.linear.matrix - right.linear.matrix)) < 1e-12
        assert np.max(np.abs(left.translation - right.translation)) < 1e-12
        for prod in (group.poincare_mul(gs[0], group.poincare_inverse(gs[0])),
                     group.poincare_mul(group.poincare_inverse(gs[0]), gs[0])):
            assert np.max(np.abs(prod.linear.matrix - np.eye(4))) < 1e-12
            assert np.max(np.abs(prod.translation)) < 1e-12


def test_alpha_z_identity_element_does_nothing():
    rng = np.random.default_rng(5)
    n = group.ExtPoincareElement(
        group.LorentzMatrix(group.random_proper_orthochronous(rng)),
        rng.uniform(-1, 1, 4))
    zi = group.z_set()[0]
    out = group.alpha_z(zi, n)
    assert np.array_equal(out.linear.matrix, n.linear.matrix)
    assert np.array_equal(out.translation, n.translation)


def test_alpha_z_minus_identity_flips_translations():
    a = np.array([0.3, -1.0, 2.0, 0.7])
    n = group.ExtPoincareElement(group.LorentzMatrix(np.eye(4), "I"), a)
    out = group.alpha_z(group.z_set()[1], n)
    assert np.max(np.abs(out.translation + a)) < 1e-15
    assert np.max(np.abs(out.linear.matrix - np.eye(4))) < 1e-15


def test_alpha_z_lambda_inf_on_time_translation():
    n = group.ExtPoincareElement(group.LorentzMatrix(np.eye(4), "I"),
                                 np.array([1.0, 0.0, 0.0, 0.0]))
    z = group.make_lambda_inf(0.0, 0.0, "momentum")
    out = group.alpha_z(z, n)
    assert np.max(np.abs(out.translation - np.array([0.0, 0.0, 0.0, -1.0]))) < 1e-15


def test_alpha_z_requires_discrete_tag():
    rng = np.random.default_rng(2)
    h = group.LorentzMatrix(group.random_proper_orthochronous(rng))
    n = group.poincare_identity()
    with pytest.raises(ValueError):
        group.alpha_z(h, n)


def test_alpha_z_is_a_product_automorphism():
    rng = np.random.default_rng(13)
    for _ in range(50):
        n1 = group.ExtPoincareElement(
            group.LorentzMatrix(group.random_proper_orthochronous(rng)),
            rng.uniform(-2, 2, 4))
        n2 = group.ExtPoincareElement(
            group.LorentzMatrix(group.random_proper_orthochronous(rng)),
            rng.uniform(-2, 2, 4))
        for z in group.z_set(0.4, 0.9):
            lhs = group.poincare_mul(group.alpha_z(z, n1), group.alpha_z(z, n2))
            rhs = group.alpha_z(z, group.poincare_mul(n1, n2))
            assert np.max(np.abs(lhs.linear.matrix - rhs.linear.matrix)) < 1e-12
            assert np.max(np.abs(lhs.translation - rhs.translation)) < 1e-12


def test_alpha_z_is_involutive():
    rng = np.random.default_rng(17)
    for _ in range(100):
        n = group.ExtPoincareElement(
            group.LorentzMatrix(group.random_proper_orthochronous(rng)),
            rng.uniform(-2, 2, 4))
        for z in group.z_set(1.2, 0.3):
            nn = group.alpha_z(z, group.alpha_z(z, n))
            assert np.max(np.abs(nn.linear.matrix - n.linear.matrix)) < 1e-12
            assert np.max(np.abs(nn.translation - n.translation)) < 1e-12


@pytest.mark.parametrize("p,expected", [
    ((1, 0, 0, 0), OrbitClass.MASSIVE_FORWARD),
    ((-2, 0, 1, 0), OrbitClass.MASSIVE_BACKWARD),
    ((0, 0, 0, 1), OrbitClass.TACHYONIC),
    ((1, 0, 0, 1), OrbitClass.LIGHTLIKE_FORWARD),
    ((-1, 0, 0, 1), OrbitClass.LIGHTLIKE_BACKWARD),
    ((0, 0, 0, 0), OrbitClass.ZERO),
])
def test_classify_orbit_examples(p, expected):
    assert group.classify_orbit(np.array(p, dtype=float)) is expected


def test_classify_orbit_tolerance_band():
    p = np.array([1.0, 0.0, 0.0, 1.0 + 1e-12])
    assert group.classify_orbit(p) is OrbitClass.LIGHTLIKE_FORWARD
    p = np.array([1.0, 0.0, 0.0, 1.1])
    assert group.classify_orbit(p) is OrbitClass.TACHYONIC


def test_classify_orbit_invariant_under_identity_component():
    rng = np.random.default_rng(23)
    for _ in range(100):
        p = rng.uniform(-2, 2, 4)
        lam = group.random_proper_orthochronous(rng, max_rapidity=3.0)
        assert group.classify_orbit(lam @ p) is group.classify_orbit(p)


def test_z_orbit_of_timelike_vector_merges_classes():
    rows = group.z_orbit(np.array([1.0, 0, 0, 0]), 0.0, 0.0)
    by_tag = {tag: (image, cls) for tag, image, cls in rows}
    assert np.max(np.abs(by_tag["I"][0] - [1, 0, 0, 0])) < 1e-15
    assert np.max(np.abs(by_tag["-I"][0] - [-1, 0, 0, 0])) < 1e-15
    assert np.max(np.abs(by_tag["lambda-inf"][0] - [0, 0, 0, -1])) < 1e-15
    assert np.max(np.abs(by_tag["-lambda-inf"][0] - [0, 0, 0, 1])) < 1e-15
    assert by_tag["I"][1] is OrbitClass.MASSIVE_FORWARD
    assert by_tag["-I"][1] is OrbitClass.MASSIVE_BACKWARD
    assert by_tag["lambda-inf"][1] is OrbitClass.TACHYONIC
    assert by_tag["-lambda-inf"][1] is OrbitClass.TACHYONIC


def test_z_orbit_of_aligned_lightlike_vector_stays_on_the_cone():
    rows = group.z_orbit(np.array([1.0, 0, 0, 1.0]), 0.0, 0.0)
    classes = {cls for _, _, cls in rows}
    assert classes == {OrbitClass.LIGHTLIKE_FORWARD, OrbitClass.LIGHTLIKE_BACKWARD}
    for _, image, _ in rows:
        assert (np.max(np.abs(image - [1, 0, 0, 1])) < 1e-15
                or np.max(np.abs(image + [1, 0, 0, 1])) < 1e-15)


def test_z_orbit_of_zero_vector():
    rows = group.z_orbit(np.zeros(4))
    assert all(cls is OrbitClass.ZERO for _, _, cls in rows)


def test_pairing_sign_flip_on_the_time_direction_plane():
    rng = np.random.default_rng(29)
    for _ in range(50):
        theta, phi = rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi)
        li = group.make_lambda_inf(theta, phi).matrix
        e_t = np.array([1.0, 0, 0, 0])
        e_n = np.concatenate([[0.0], group.direction_unit(theta, phi)])
        u = rng.uniform(-2, 2) * e_t + rng.uniform(-2, 2) * e_n
        v = rng.uniform(-2, 2) * e_t + rng.uniform(-2, 2) * e_n
        assert group.minkowski(li @ u, li @ v) == pytest.approx(
            -group.minkowski(u, v), abs=1e-12)
