"""Element arithmetic, the Hopf projection and induced sphere isometries."""

import math
import random
from fractions import Fraction

import pytest

from orbiseif.groups import FamilySpec, goursat_group, standard_group
from orbiseif.groups import BINARY_ICOSAHEDRAL, BINARY_OCTAHEDRAL, BINARY_TETRAHEDRAL
from orbiseif.quaternions import (
    CIRCLE_J,
    CircleJElement,
    PairElement,
    QUAT_I,
    QUAT_J,
    QUAT_K,
    RepresentationMismatchError,
    SnapFailureError,
    SpherePoint,
    SPHERE_INFINITY,
    chordal_distance,
    circle_root,
    float_quat_multiply,
    hopf_project,
    hopf_project_float,
    induced_base_isometry,
    inverse,
    multiply,
    snap_angle,
    to_float_quaternion,
)

F = Fraction


# -- products and inverses ---------------------------------------------------

def test_defining_relation_ij_equals_k():
    assert multiply(QUAT_I, QUAT_J) == QUAT_K


def test_j_squared_is_minus_one():
    q = CircleJElement(F(1, 4), True)
    assert multiply(q, q) == CircleJElement(F(1, 2), False)


def test_circle_angle_addition():
    assert multiply(circle_root(3), circle_root(2)) == CircleJElement(F(5, 6))


def test_mixed_representation_product_rejected():
    with pytest.raises(RepresentationMismatchError):
        multiply(QUAT_I, CIRCLE_J)


def test_inverse_of_i():
    assert inverse(QUAT_I) == multiply(multiply(QUAT_I, QUAT_I), QUAT_I)


def test_circle_inverses():
    t = F(3, 7)
    plain = CircleJElement(t, False)
    assert inverse(plain) == CircleJElement(-t % 1, False)
    # the j case solves (t, j)(u, j) = identity, giving u = t + 1/2
    flipped = CircleJElement(t, True)
    assert inverse(flipped) == CircleJElement(t + F(1, 2), True)
    assert multiply(flipped, inverse(flipped)).is_identity()


def test_unit_norm_exact_for_polyhedral_groups():
    for gid in (BINARY_TETRAHEDRAL, BINARY_OCTAHEDRAL, BINARY_ICOSAHEDRAL):
        for el in standard_group(gid):
            assert el.norm_squared() == 1


# -- the Hopf projection ------------------------------------------------------

def test_hopf_projection_examples():
    one = CircleJElement(F(0), False)
    assert hopf_project(one).infinite
    assert hopf_project(CIRCLE_J) == SpherePoint(0j)
    from orbiseif.exactfield import QF_HALF_SQRT2, QF_ZERO
    from orbiseif.quaternions import AlgebraicQuaternion
    diag = AlgebraicQuaternion(QF_HALF_SQRT2, QF_ZERO, QF_HALF_SQRT2, QF_ZERO)
    assert abs(hopf_project(diag).value - 1) < 1e-12


# -- induced isometries of the base sphere -----------------------------------

def _apply(iso, lam):
    return iso.apply(SpherePoint(lam) if lam is not None else SPHERE_INFINITY)


def test_right_j_factor_rotates_half_turn():
    # (1, j) acts by lam -> -1/lam, orientation preserving
    iso = induced_base_isometry(PairElement(CircleJElement(F(0)), CIRCLE_J))
    assert not iso.orientation_reversing
    for lam in (2 + 1j, -0.5j, 3.0):
        assert abs(_apply(iso, lam).value - (-1 / lam)) < 1e-12


def test_right_rotation_factor():
    n = 5
    iso = induced_base_isometry(
        PairElement(CircleJElement(F(0)), circle_root(2 * n)))
    w = complex(math.cos(-2 * math.pi / n), math.sin(-2 * math.pi / n))
    for lam in (1 + 2j, 0.3 - 0.7j):
        assert abs(_apply(iso, lam).value - w * lam) < 1e-12


def test_left_j_factor_is_antipodal():
    iso = induced_base_isometry(PairElement(CIRCLE_J, CircleJElement(F(0))))
    assert iso.orientation_reversing
    for lam in (1 + 1j, 2 - 0.25j):
        assert abs(_apply(iso, lam).value - (-1 / lam.conjugate())) < 1e-12
    # the antipode has no fixed point on the sphere
    assert chordal_distance(_apply(iso, 1.0), SpherePoint(1.0)) > 1


SAMPLE_SPECS = [
    FamilySpec("2", m=2, n=3),
    FamilySpec("34", m=1, n=3),
    FamilySpec("11", m=1, n=1, r=2, s=1),
    FamilySpec("6", m=1),
]

SAMPLE_POINTS = [
    (1.0, 0.0, 0.0, 0.0),
    (0.5, 0.5, 0.5, 0.5),
    (0.1, -0.3, 0.7, 0.636396103067893),
    (0.0, 0.6, -0.8, 0.0),
]


def _normalize4(h):
    norm = math.sqrt(sum(c * c for c in h))
    return tuple(c / norm for c in h)


def test_equivariance_of_projection():
    """Projection of the pair action equals the induced isometry applied
    to the projection, for every element of several built groups."""
    for spec in SAMPLE_SPECS:
        group = goursat_group(spec)
        for pair in group.elements:
            iso = induced_base_isometry(pair)
            for h in SAMPLE_POINTS:
                h = _normalize4(h)
                direct = hopf_project_float(pair.apply_float(h))
                routed = iso.apply(hopf_project_float(h))
                assert chordal_distance(direct, routed) < 1e-9


def test_induced_map_is_a_homomorphism():
    rng = random.Random(5)
    for spec in SAMPLE_SPECS:
        group = goursat_group(spec)
        for _ in range(60):
            g1, g2 = rng.choice(group.elements), rng.choice(group.elements)
            combined = induced_base_isometry(g1.multiply(g2))
            composed = induced_base_isometry(g1).compose(
                induced_base_isometry(g2))
            assert combined.same_isometry(composed)


def test_exact_and_float_products_agree():
    rng = random.Random(9)
    for _ in range(300):
        a = CircleJElement(F(rng.randint(0, 48), 48), rng.random() < 0.5)
        b = CircleJElement(F(rng.randint(0, 36), 36), rng.random() < 0.5)
        exact = to_float_quaternion(multiply(a, b))
        approx = float_quat_multiply(to_float_quaternion(a),
                                     to_float_quaternion(b))
        assert max(abs(x - y) for x, y in zip(exact, approx)) < 1e-12


# -- angle snapping -----------------------------------------------------------

def test_snap_angle_examples():
    assert snap_angle(0.33333333, 6) == F(1, 3)
    assert snap_angle(0.5000000001, 4) == F(1, 2)
    with pytest.raises(SnapFailureError):
        snap_angle(0.41, 4)
