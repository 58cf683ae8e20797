"""Brute-force recomputation of the quotient invariants from group elements.

Nothing in this module reads the closed-form tables.  Starting from an
explicit pair group it

* classifies the induced isometry group of the base 2-sphere and reads
  the quotient 2-orbifold off the fixed-point geometry,
* gets the Euler number from the covering degrees (the Hopf fibration
  itself has Euler number -1),
* recomputes every local invariant from the solid-torus quotient
  homology: conjugate the fiber to the core at infinity by an explicit
  fibration-preserving isometry, reduce the now-diagonal stabilizer to
  exact rational rotation pairs, and push the fiber class through the
  quotient matrices,
* for the abelian families, assembles the underlying lens space from
  the boundary matrices of the two solid tori and the meridian exchange.

When every factor is circle-type (cyclic and binary dihedral groups,
which covers all the large parameter sweeps) the whole computation is
exact rational arithmetic: the induced isometries fall into four
explicit shapes (rotation about the poles, half turn about an
equatorial axis, the antipode composed with a polar rotation, and
reflection in a meridian) and the conjugations to the core can be done
symbolically.  Binary polyhedral right factors go through floats for
the spherical geometry only; every angle that enters homology is
snapped back to an exact rational first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .engine import (
    CONE,
    CORNER,
    DISC,
    PROJECTIVE,
    SPHERE,
    BaseSignature,
    LocalInvariant,
    SeifertData,
    TopologyReport,
    THREE_SPHERE,
    derive_xi,
    lens_report,
    modinv_pos,
)
from .groups import PairGroup, phi_order
from .quaternions import (
    HALF,
    CircleJElement,
    NotHopfPreservingError,
    SpherePoint,
    SPHERE_INFINITY,
    float_quat_conjugate,
    float_quat_multiply,
    induced_base_isometry,
    snap_phase,
    to_float_quaternion,
)

GEOM_TOL = 1e-6
HOPF_FIBER = (1, 1)


# ---------------------------------------------------------------------------
# boundary homology of solid torus quotients
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TorusQuotientMap:
    """Boundary homology of the quotient of a fibered solid torus.

    Columns of `matrix` are the images of the meridian and longitude in
    the (meridian', longitude') basis of the quotient torus; the map is
    upper triangular and its determinant equals the order of the acting
    cyclic group.  `core_fix` is the order of the subgroup fixing the
    core pointwise, which is the singularity index the core acquires.
    """

    matrix: tuple
    core_fix: int

    def determinant(self) -> int:
        return self.matrix[0][0] * self.matrix[1][1]

    def image_of(self, p: int, q: int):
        (m00, m01), (m10, m11) = self.matrix
        assert m10 == 0
        return (m00 * p + m01 * q, m11 * q)

    def compose_after(self, first: "TorusQuotientMap") -> "TorusQuotientMap":
        (a, b), (_, d) = self.matrix
        (e, f), (_, h) = first.matrix
        return TorusQuotientMap(((a * e, a * f + b * h), (0, d * h)),
                                self.core_fix * first.core_fix)


IDENTITY_TORUS_MAP = TorusQuotientMap(((1, 0), (0, 1)), 1)


def torus_quotient_map(d: int, e: int, g: int) -> TorusQuotientMap:
    """Quotient of the solid torus by z1 -> e^(2 pi i g/e) z1,
    z2 -> e^(2 pi i d/e) z2 (the core is the z1 = 0 circle).

    The meridian multiplies by gcd(d, e) and the longitude picks up the
    twist -g * dbar' where dbar' inverts d/gcd(d,e) modulo e/gcd(d,e);
    when that modulus is 1 the inverse is defined to be 0 (the twist is
    only defined modulo the modulus, and downstream slope arithmetic
    never reads it in that case).
    """
    if e < 1 or math.gcd(math.gcd(abs(d), e), abs(g)) != 1:
        raise ValueError(f"need gcd(d, e, g) = 1 and e >= 1, got {(d, e, g)}")
    k = math.gcd(abs(d), e)
    e_prime = e // k
    d_prime = d // k
    d_bar = 0 if e_prime == 1 else modinv_pos(d_prime, e_prime)
    return TorusQuotientMap(((k, -g * d_bar), (0, e_prime)), k)


def slope_invariant(tq: TorusQuotientMap, fiber=HOPF_FIBER,
                    location: str = CONE) -> LocalInvariant:
    """Local invariant of the quotient core from the image fiber slope.

    The fiber class (p, q) maps to a possibly non-primitive class; the
    reduced slope a/b inverts to abar/b, and both entries are scaled by
    the core fix order so the invariant keeps the singularity index.
    """
    p, q = fiber
    assert math.gcd(p, q) == 1
    num, den = tq.image_of(p, q)
    assert den >= 1
    c = math.gcd(abs(num), den)
    a, b = num // c, den // c
    a_bar = 0 if b == 1 else modinv_pos(a, b)
    k = tq.core_fix
    return LocalInvariant(a_bar * k, b * k, location)


def _invariant_from_int_vectors(vectors, grid: int,
                                location: str) -> LocalInvariant:
    """Local invariant of the core at infinity under a diagonal group.

    `vectors` are the exact torus translations (u, v) as numerators over
    the common denominator `grid`: the element rotates z1 by u/grid and
    z2 by v/grid, and the core in question is the z1 circle (z2 = 0).
    Quotient in two steps, each a solid-torus quotient: first by the
    subgroup fixing the core pointwise (u = 0), then by the residual
    group, which acts freely on the core and is cyclic because it embeds
    in the circle of z1 rotations.
    """
    size = len(vectors)
    vertical = [v for u, v in vectors if u == 0]
    k = len(vertical)
    assert k >= 1 and size % k == 0
    if k == 1:
        pre = IDENTITY_TORUS_MAP
    else:
        step = grid // k
        gen = next(v for v in vertical if math.gcd(v, grid) == step)
        pre = torus_quotient_map(0, k, gen // step)

    residual = {(u, (k * v) % grid) for u, v in vectors}
    e2 = size // k
    assert len(residual) == e2, "residual does not act faithfully on the core"
    if e2 == 1:
        main = IDENTITY_TORUS_MAP
    else:
        step = grid // e2
        gen = next(((u, v) for u, v in residual
                    if math.gcd(u, grid) == step), None)
        assert gen is not None, "residual core action is not cyclic"
        u0, v0 = gen
        assert v0 % step == 0, "residual generator is not on the grid"
        main = torus_quotient_map(u0 // step, e2, v0 // step)
    return slope_invariant(main.compose_after(pre), HOPF_FIBER, location)


def _invariant_from_vectors(vectors, location: str) -> LocalInvariant:
    """Fraction-vector front end for the integer core."""
    grid = 1
    for u, v in vectors:
        grid = math.lcm(grid, math.lcm(u.denominator, v.denominator))
    scaled = {(int(u * grid), int(v * grid)) for u, v in vectors}
    return _invariant_from_int_vectors(scaled, grid, location)


# ---------------------------------------------------------------------------
# the induced action on the base sphere: common data model
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SingularOrbit:
    """One equivalence class of singular base points.

    `exact` carries symbolic position data when the group is circle
    type: ("pole", swap) marks the core at infinity (swap False) or at
    zero (swap True), ("equator", a) the unit-circle point of angle a.
    """

    representative: tuple          # point of S^2 in R^3
    rep_lambda: SpherePoint
    rotation_order: int            # order of the orientation-preserving stabilizer
    corner: bool                   # lies on a reflection circle
    exact: Optional[tuple] = None


@dataclass
class BaseActionGroup:
    order: int
    signature: BaseSignature
    orbits: list                   # SingularOrbit entries, deterministic order
    mode: str                      # "circle" or "float"
    class_pairs: list              # one representative pair per induced class
    # circle-mode payload: common angle denominator and per-element
    # integer rows (left jflag, right jflag, left angle, right angle)
    grid: Optional[int] = None
    rows: Optional[list] = None
    # float-mode payload
    rotations: Optional[list] = None
    reversing: Optional[list] = None
    pair_class: Optional[list] = None

    @property
    def isometries(self):
        """One BaseIsometry per induced isometry class."""
        return [induced_base_isometry(p) for p in self.class_pairs]


def _check_chi(kind, cones, corners, order, signature):
    chi = Fraction(2 if kind == SPHERE else 1)
    chi -= sum(1 - Fraction(1, q) for q in cones)
    chi -= sum(Fraction(1, 2) * (1 - Fraction(1, q)) for q in corners)
    assert chi * order == 2, f"quotient signature {signature} fails chi*order=2"


def base_group(group: PairGroup) -> BaseActionGroup:
    """Deduplicated induced action on the base sphere and its quotient type.

    The quotient signature is read off the geometry: maximal cyclic
    stabilizers of orientation-preserving elements give cone points or
    corner reflectors, orientation-reversing elements with a fixed
    circle force a mirror boundary, free ones alone force a projective
    quotient, and incidence of reflection circles with rotation axes
    decides corner against interior cone.
    """
    for pair in group.elements:
        if not isinstance(pair.left, CircleJElement):
            raise NotHopfPreservingError(
                "left factor is not circle-type; the group moves the fibration")
    if all(isinstance(p.right, CircleJElement) for p in group.elements):
        return _base_group_circle(group)
    return _base_group_float(group)


# ---------------------------------------------------------------------------
# exact path: both factors circle-type
# ---------------------------------------------------------------------------

ROT, FLIP, AROT, REFL = 0, 1, 2, 3


def _angle_grid(group: PairGroup):
    """Common denominator (a multiple of 4) and per-element integer rows
    (left jflag, right jflag, left angle, right angle) for a pair group
    whose factors are all circle-type."""
    grid = 4
    for pair in group.elements:
        grid = math.lcm(grid, pair.left.angle.denominator)
        grid = math.lcm(grid, pair.right.angle.denominator)
    rows = []
    for pair in group.elements:
        an, ad, jl = pair.left._key
        bn, bd, jr = pair.right._key
        rows.append((jl, jr, an * (grid // ad), bn * (grid // bd)))
    return grid, rows


def _pole_stab_vectors(rows, grid: int, swap: bool):
    """Translations of the stabilizer of a polar core; every plain
    rotation pair fixes both poles.  The core at zero is carried to the
    core at infinity by conjugation with (1, j), which inverts the right
    angle, i.e. swaps the two translation coordinates."""
    vectors = set()
    for jl, jr, a, b in rows:
        if jl or jr:
            continue
        u, v = (a - b) % grid, (a + b) % grid
        vectors.add((v, u) if swap else (u, v))
    return vectors


def _equator_stab_vectors(rows, grid: int, point: int):
    """Translations of the stabilizer of the fiber over the unit-circle
    point of angle point/grid, conjugated to the core at infinity.

    The conjugator is (1, w) with w = (e^(2 pi i point/grid) + j)/sqrt2.
    Plain rotation pairs survive only with right factor +-1 and are
    untouched; half-turn pairs whose axis passes through the point
    conjugate to right factor +-i, with the sign fixed by point + beta.
    """
    vectors = set()
    half = grid // 2
    quarter = grid // 4
    for jl, jr, a, b in rows:
        if jl:
            continue
        if not jr:
            if (2 * b) % grid == 0:
                vectors.add(((a - b) % grid, (a + b) % grid))
            continue
        if (2 * (point + b)) % grid == half:
            beta_c = (point + b) % grid
            assert beta_c in (quarter, 3 * quarter)
            vectors.add(((a - beta_c) % grid, (a + beta_c) % grid))
    return vectors


def _base_group_circle(group: PairGroup) -> BaseActionGroup:
    grid, rows = _angle_grid(group)
    half = grid // 2
    classes = {}
    shapes = {ROT: set(), FLIP: set(), AROT: set(), REFL: set()}
    for i, (jl, jr, _, b) in enumerate(rows):
        # induced map: rot lam -> e^(2 pi i c) lam, flip lam -> -e^(2 pi i c)/lam,
        # arot lam -> -e^(2 pi i c)/conj(lam), refl lam -> e^(2 pi i c) conj(lam)
        # with c = -2 beta
        shape = 2 * jl + jr
        c = (-2 * b) % grid
        key = (shape, c)
        if key not in classes:
            classes[key] = group.elements[i]
            shapes[shape].add(c)
    order = len(classes)
    assert phi_order(group) % order == 0

    rots, flips, arots, refls = (shapes[ROT], shapes[FLIP],
                                 shapes[AROT], shapes[REFL])
    assert 0 in rots
    r0 = len(rots)

    has_reversing = bool(arots) or bool(refls)
    # an antipode-rotation is a pure reflection (in the equator plane)
    # exactly when its angle parameter is a half turn
    has_reflection = bool(refls) or half in arots
    if not has_reversing:
        kind = SPHERE
    elif has_reflection:
        kind = DISC
    else:
        kind = PROJECTIVE

    orbits = []

    if r0 >= 2:
        poles_merge = bool(flips) or bool(arots)
        pole_on_mirror = bool(refls)   # every meridian mirror passes the poles
        pole_orbits = [False] if poles_merge else [False, True]
        for swap in pole_orbits:
            rep3 = (0.0, 0.0, -1.0 if swap else 1.0)
            lam = SpherePoint(0j) if swap else SPHERE_INFINITY
            orbits.append(SingularOrbit(rep3, lam, r0, pole_on_mirror,
                                        ("pole", swap)))

    if flips:
        # equatorial half-turn axes; flip(c) fixes the two unit-circle
        # points with 2a = c + half
        quarter = grid // 4
        points = set()
        for c in flips:
            a = (c // 2 + quarter) % grid
            points.add(a)
            points.add((a + half) % grid)
        # translations induced on the equator circle by the whole group
        translations = set(rots) | {(c + half) % grid for c in arots}
        step = grid // len(translations)
        assert all(t % step == 0 for t in translations)
        anti = {(c + half) % grid for c in flips} | set(refls)
        kappa = min(anti)

        def orbit_key(a):
            return min(a % step, (kappa - a) % step)

        grouped = {}
        for a in sorted(points):
            grouped.setdefault(orbit_key(a), []).append(a)
        for key in sorted(grouped):
            a = grouped[key][0]
            mirrored = ((2 * a) % grid in refls) or (half in arots)
            angle = 2 * math.pi * a / grid
            rep3 = (math.cos(angle), math.sin(angle), 0.0)
            orbits.append(SingularOrbit(rep3, SpherePoint(
                complex(math.cos(angle), math.sin(angle))), 2, mirrored,
                ("equator", a)))

    disc = kind == DISC
    cones = tuple(sorted(o.rotation_order for o in orbits
                         if not (disc and o.corner)))
    corners = tuple(sorted(o.rotation_order for o in orbits
                           if disc and o.corner))
    signature = BaseSignature(kind, cones, corners)
    _check_chi(kind, cones, corners, order, signature)

    return BaseActionGroup(order, signature, orbits, "circle",
                           list(classes.values()), grid, rows)


# ---------------------------------------------------------------------------
# float path: binary polyhedral right factors
# ---------------------------------------------------------------------------

def _canonical_sign_key(el):
    """Exact key identifying a right factor up to global sign."""
    if isinstance(el, CircleJElement):
        return min((el.angle, el.jflag),
                   ((el.angle + HALF) % 1, el.jflag))
    return min(el._key, tuple(tuple(-x if i % 2 == 0 else x
                                    for i, x in enumerate(row))
                              for row in el._key))


def _mat_vec(m, v):
    return (m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
            m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
            m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2])


def _close(p, q, tol=GEOM_TOL):
    return (abs(p[0] - q[0]) <= tol and abs(p[1] - q[1]) <= tol
            and abs(p[2] - q[2]) <= tol)


def _rotation_axis(rot):
    """Both fixed points on the sphere of a nontrivial rotation."""
    v = (rot[2][1] - rot[1][2], rot[0][2] - rot[2][0], rot[1][0] - rot[0][1])
    norm = math.sqrt(v[0] ** 2 + v[1] ** 2 + v[2] ** 2)
    if norm > 1e-4:
        axis = (v[0] / norm, v[1] / norm, v[2] / norm)
    else:
        # half turn: R + I has rank one with columns along the axis
        best, best_norm = None, -1.0
        for j in range(3):
            col = tuple(rot[i][j] + (1.0 if i == j else 0.0) for i in range(3))
            cn = math.sqrt(sum(c * c for c in col))
            if cn > best_norm:
                best, best_norm = col, cn
        assert best_norm > 1e-4
        axis = tuple(c / best_norm for c in best)
    return axis, tuple(-c for c in axis)


def _stereo(point3d) -> SpherePoint:
    x, y, z = point3d
    if 1.0 - z < 1e-9:
        return SPHERE_INFINITY
    return SpherePoint(complex(x / (1.0 - z), y / (1.0 - z)))


def _base_group_float(group: PairGroup) -> BaseActionGroup:
    class_of = {}
    pair_class = []
    class_pairs = []
    for pair in group.elements:
        key = (pair.left.jflag, _canonical_sign_key(pair.right))
        idx = class_of.get(key)
        if idx is None:
            idx = len(class_pairs)
            class_of[key] = idx
            class_pairs.append(pair)
        pair_class.append(idx)

    isometries = [induced_base_isometry(p) for p in class_pairs]
    rotations = [iso.rotation_matrix() for iso in isometries]
    reversing = [iso.orientation_reversing for iso in isometries]
    order = len(class_pairs)
    assert phi_order(group) % order == 0

    identity_class = None
    eye = ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))
    for idx, rot in enumerate(rotations):
        if not reversing[idx] and all(_close(rot[i], eye[i]) for i in range(3)):
            assert identity_class is None
            identity_class = idx
    assert identity_class is not None

    points = []

    def point_index(p):
        for i, q in enumerate(points):
            if _close(p, q):
                return i
        return None

    for idx, rot in enumerate(rotations):
        if reversing[idx] or idx == identity_class:
            continue
        for p in _rotation_axis(rot):
            if point_index(p) is None:
                points.append(p)

    rot_order = []
    on_mirror = []
    for p in points:
        stab = sum(1 for idx in range(order)
                   if not reversing[idx] and _close(_mat_vec(rotations[idx], p), p))
        mirrored = any(reversing[idx]
                       and _close(_mat_vec(rotations[idx], p), p)
                       for idx in range(order))
        rot_order.append(stab)
        on_mirror.append(mirrored)

    parent = list(range(len(points)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for idx in range(order):
        for i, p in enumerate(points):
            j = point_index(_mat_vec(rotations[idx], p))
            assert j is not None, "singular set is not invariant"
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj

    orbit_members = {}
    for i in range(len(points)):
        orbit_members.setdefault(find(i), []).append(i)

    orbits = []
    for members in orbit_members.values():
        qs = {rot_order[i] for i in members}
        assert len(qs) == 1, "stabilizer order must be constant on an orbit"
        mirrored = {on_mirror[i] for i in members}
        assert len(mirrored) == 1
        rep = min((tuple(round(c, 6) for c in points[i]), i) for i in members)[1]
        orbits.append(SingularOrbit(points[rep], _stereo(points[rep]),
                                    rot_order[rep], on_mirror[rep]))
    orbits.sort(key=lambda o: tuple(round(c, 6) for c in o.representative))

    has_reversing = any(reversing)
    has_reflection = any(
        reversing[idx]
        and rotations[idx][0][0] + rotations[idx][1][1] + rotations[idx][2][2]
        > 1 - GEOM_TOL
        for idx in range(order))
    if not has_reversing:
        kind = SPHERE
    elif has_reflection:
        kind = DISC
    else:
        kind = PROJECTIVE

    cones = tuple(sorted(o.rotation_order for o in orbits
                         if not (kind == DISC and o.corner)))
    corners = tuple(sorted(o.rotation_order for o in orbits
                           if kind == DISC and o.corner))
    signature = BaseSignature(kind, cones, corners)
    _check_chi(kind, cones, corners, order, signature)

    return BaseActionGroup(order, signature, orbits, "float", class_pairs,
                           rotations=rotations, reversing=reversing,
                           pair_class=pair_class)


def euler_oracle(group: PairGroup, base: Optional[BaseActionGroup] = None) -> Fraction:
    """-(rotation order)/(base degree)^2: covering naturality applied to
    the Hopf fibration, whose own Euler number is -1."""
    if base is None:
        base = base_group(group)
    n = phi_order(group)
    return Fraction(-n, base.order * base.order)


# ---------------------------------------------------------------------------
# local invariants of the exceptional fibers
# ---------------------------------------------------------------------------

def _conjugator_to_infinity(lam: SpherePoint):
    """Unit quaternion w = w1 + w2 j whose induced map sends lam to the
    infinity point (the image of the core at z2 = 0)."""
    if lam.infinite:
        return (1.0, 0.0, 0.0, 0.0)
    w2 = 1.0 / math.sqrt(1.0 + abs(lam.value) ** 2)
    w1 = lam.value * w2
    return (w1.real, w1.imag, w2, 0.0)


def _float_stabilizer_vectors(group: PairGroup, base: BaseActionGroup,
                              orbit: SingularOrbit):
    """Exact torus translations of the fiber stabilizer, conjugated so the
    fiber in question becomes the core at infinity.

    Only orientation-preserving pairs enter: at a corner reflector the
    local invariant is by definition that of the index-two cyclic part.
    Left factors stay exact; conjugated right factors are diagonal up to
    float error and are snapped to rational angles.
    """
    w = _conjugator_to_infinity(orbit.rep_lambda)
    w_inv = float_quat_conjugate(w)
    denominator_bound = 2 * phi_order(group)
    vectors = set()
    p3 = orbit.representative
    for pair, cls in zip(group.elements, base.pair_class):
        if base.reversing[cls]:
            continue
        if not _close(_mat_vec(base.rotations[cls], p3), p3):
            continue
        rq = to_float_quaternion(pair.right)
        conj = float_quat_multiply(float_quat_multiply(w, rq), w_inv)
        assert math.hypot(conj[2], conj[3]) < 1e-7, \
            "conjugated stabilizer element is not diagonal"
        beta = snap_phase(complex(conj[0], conj[1]), denominator_bound)
        alpha = pair.left.angle
        vectors.add(((alpha - beta) % 1, (alpha + beta) % 1))
    return vectors


def _orbit_invariant(group, base, orbit, location):
    if base.mode == "circle":
        kind = orbit.exact[0]
        if kind == "pole":
            vectors = _pole_stab_vectors(base.rows, base.grid, orbit.exact[1])
        else:
            vectors = _equator_stab_vectors(base.rows, base.grid,
                                            orbit.exact[1])
        return _invariant_from_int_vectors(vectors, base.grid, location)
    return _invariant_from_vectors(
        _float_stabilizer_vectors(group, base, orbit), location)


def exceptional_fibers_oracle(group: PairGroup,
                              base: Optional[BaseActionGroup] = None):
    """One local invariant per singular-point orbit of the base."""
    if base is None:
        base = base_group(group)
    disc = base.signature.kind == DISC
    invariants = []
    for orbit in base.orbits:
        location = CORNER if (disc and orbit.corner) else CONE
        inv = _orbit_invariant(group, base, orbit, location)
        assert inv.den == orbit.rotation_order, \
            "invariant denominator must match the base cone index"
        invariants.append(inv)
    return invariants


# ---------------------------------------------------------------------------
# lens space of the abelian quotients
# ---------------------------------------------------------------------------

def _torus_translation_vectors(group: PairGroup):
    """Exact (z1, z2) rotation angles of every rotation-group element, as
    integer numerators over a common denominator."""
    for pair in group.elements:
        if not isinstance(pair.left, CircleJElement) or pair.left.jflag \
                or not isinstance(pair.right, CircleJElement) or pair.right.jflag:
            raise ValueError("lens assembly needs a diagonal torus group")
    grid, rows = _angle_grid(group)
    vectors = {((a - b) % grid, (a + b) % grid) for _, _, a, b in rows}
    assert len(vectors) == phi_order(group)
    return grid, vectors


def _core_fix_counts(vectors):
    k1 = sum(1 for u, v in vectors if v == 0)   # fix the z1 = 0 core pointwise
    k2 = sum(1 for u, v in vectors if u == 0)   # fix the z2 = 0 core pointwise
    return k1, k2


def lens_oracle(group: PairGroup) -> TopologyReport:
    """Underlying lens space of an abelian quotient from the two solid
    torus quotient matrices and the meridian/longitude exchange.

    After removing the subgroups with fixed points (which only change
    the cores' singularity indices) the residual action is free and
    cyclic; the quotient torus boundary map of the first solid torus
    plus the Hopf gluing (the meridian of one torus is the longitude of
    the other) express the second quotient meridian in the basis of the
    first, which is exactly the lens gluing class.
    """
    if group.spec.family not in ("1", "1p"):
        raise ValueError("the lens assembly applies to the abelian families")
    grid, vectors = _torus_translation_vectors(group)
    k1, k2 = _core_fix_counts(vectors)
    components = tuple(sorted(k for k in (k1, k2) if k > 1))
    residual = {((k1 * u) % grid, (k2 * v) % grid) for u, v in vectors}
    e = len(vectors) // (k1 * k2)
    assert len(residual) == e, "fixed-point subgroups do not exhaust the overlap"
    if e == 1:
        return TopologyReport(THREE_SPHERE, singular_components=components)
    step = grid // e
    gen = next(((u, v) for u, v in residual
                if math.gcd(math.gcd(u, v), grid) == step), None)
    assert gen is not None, "residual action is not cyclic"
    u0, v0 = gen
    assert u0 % step == 0 and v0 % step == 0
    g = u0 // step
    d = v0 // step
    assert math.gcd(g, e) == 1 and math.gcd(d, e) == 1, \
        "residual action is not free"
    d_bar = modinv_pos(d, e)
    # meridian of the second quotient torus = -(g*dbar) mu' + e lambda'
    return lens_report(e, (-g * d_bar) % e, components)


def lens_oracle_lattice(group: PairGroup) -> TopologyReport:
    """Same underlying space by pure lattice arithmetic (cross-check).

    The quotient of the boundary torus is R^2 / Lambda for the lattice
    Lambda generated by Z^2 and the translation vectors; the meridians
    of the two quotient solid tori are the primitive lattice vectors
    along the axes, and expressing one in a basis extending the other
    reads off the lens parameters.
    """
    denom, vectors = _torus_translation_vectors(group)
    k1, k2 = _core_fix_counts(vectors)
    components = tuple(sorted(k for k in (k1, k2) if k > 1))
    scaled = list(vectors) + [(denom, 0), (0, denom)]
    b1, b2 = _lattice_basis_2d(scaled)
    m1 = (denom // k1, 0)
    m2 = (0, denom // k2)
    x1, y1 = _solve_2d(b1, b2, m1)
    assert math.gcd(x1, y1) == 1, "torus meridian is not primitive in the lattice"
    _, uu, vv = _ext_gcd_2(x1, y1)
    # (m1, w) is a lattice basis: the change matrix ((x1, -vv), (y1, uu))
    # from (b1, b2) has determinant x1*uu + y1*vv = 1
    w = (-vv * b1[0] + uu * b2[0], -vv * b1[1] + uu * b2[1])
    q, p = _solve_2d(m1, w, m2)
    if abs(p) == 1:
        return TopologyReport(THREE_SPHERE, singular_components=components)
    return lens_report(abs(p), q % abs(p), components)


def _ext_gcd_2(a, b):
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_u, u = u, old_u - quo * u
        old_v, v = v, old_v - quo * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def _lattice_basis_2d(vectors):
    """Basis of the sublattice of Z^2 generated by the vectors."""
    basis = []
    for vec in vectors:
        basis.append(vec)
        basis = _reduce_basis(basis)
    assert len(basis) == 2
    return basis[0], basis[1]


def _reduce_basis(vecs):
    """Hermite-style reduction of up to three 2d integer vectors."""
    vecs = [v for v in vecs if v != (0, 0)]
    if len(vecs) <= 1:
        return vecs
    while True:
        vecs.sort(key=lambda v: (v[0] == 0, abs(v[0])))
        if len(vecs) >= 2 and vecs[0][0] != 0 and vecs[1][0] != 0:
            a, b = vecs[0], vecs[1]
            quo = b[0] // a[0]
            new = (b[0] - quo * a[0], b[1] - quo * a[1])
            vecs[1] = new
            vecs = [v for v in vecs if v != (0, 0)]
            continue
        break
    lead = [v for v in vecs if v[0] != 0]
    rest = [v for v in vecs if v[0] == 0]
    assert len(lead) <= 1
    if rest:
        g = 0
        for v in rest:
            g = math.gcd(g, abs(v[1]))
        rest = [(0, g)]
    return lead + rest


def _solve_2d(b1, b2, target):
    """Integer (x, y) with x*b1 + y*b2 = target."""
    det = b1[0] * b2[1] - b1[1] * b2[0]
    assert det != 0
    x_num = target[0] * b2[1] - target[1] * b2[0]
    y_num = b1[0] * target[1] - b1[1] * target[0]
    assert x_num % det == 0 and y_num % det == 0, "target is not in the lattice"
    return x_num // det, y_num // det


# ---------------------------------------------------------------------------
# the full report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OracleReport:
    seifert: SeifertData
    topology: Optional[TopologyReport]
    base_order: int


def oracle_report(group: PairGroup) -> OracleReport:
    """Base orbifold, Euler number, local invariants and (for abelian
    families) the underlying space, all recomputed from the elements."""
    base = base_group(group)
    euler = euler_oracle(group, base)
    invariants = tuple(exceptional_fibers_oracle(group, base))
    xi = None
    if base.signature.kind == DISC:
        xi = derive_xi(base.signature, invariants, euler)
    seifert = SeifertData(base.signature, invariants, euler, xi)
    topology = None
    if group.spec.family in ("1", "1p"):
        topology = lens_oracle(group)
    return OracleReport(seifert, topology, base.order)
