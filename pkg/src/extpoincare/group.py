"""Exact 4x4 algebra for the superluminally extended Lorentz and Poincare groups.

The extension adjoins to the proper orthochronous component the involutions
lambda_inf(theta, phi), infinite-velocity limits of superluminal boosts along
the spatial direction n(theta, phi), together with -I and their product.
Everything here is plain float64 matrix algebra on momenta and group elements;
representation spaces live elsewhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

Z_TAGS = ("I", "-I", "lambda-inf", "-lambda-inf")

LIGHTLIKE_BAND = 1e-9  # relative width of the |eta(p,p)| ~ 0 band


def minkowski(u, v) -> float:
    """Minkowski pairing u0*v0 - u.v, signature (+,-,-,-)."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return float(u @ METRIC @ v)


def direction_unit(theta: float, phi: float) -> np.ndarray:
    """Spatial unit vector n(theta, phi)."""
    st = np.sin(theta)
    return np.array([st * np.cos(phi), st * np.sin(phi), np.cos(theta)])


def lightlike_representative(omega: float, theta: float = 0.0, phi: float = 0.0) -> np.ndarray:
    """Forward lightlike momentum omega * (1, n(theta, phi))."""
    p = np.empty(4)
    p[0] = omega
    p[1:] = omega * direction_unit(theta, phi)
    return p


@dataclass(frozen=True, eq=False)
class LorentzMatrix:
    """A 4x4 linear part with a label saying which component it came from."""

    matrix: np.ndarray
    tag: str = "proper-orthochronous"

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.shape != (4, 4):
            raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
        object.__setattr__(self, "matrix", m)


def coordinate_swap(theta: float, phi: float) -> np.ndarray:
    """Involution exchanging t with n.x and fixing the orthogonal spatial plane."""
    n = direction_unit(theta, phi)
    s = np.zeros((4, 4))
    s[0, 1:] = n
    s[1:, 0] = n
    s[1:, 1:] = np.eye(3) - np.outer(n, n)
    return s


def make_lambda_inf(theta: float = 0.0, phi: float = 0.0,
                    convention: str = "momentum") -> LorentzMatrix:
    """Superluminal involution along n(theta, phi).

    ``coordinate`` returns the swap S itself (t <-> n.x), which fixes the
    aligned forward lightlike representative.  ``momentum`` returns -S, which
    sends omega*(1, n) to its negative and therefore exchanges the forward and
    backward cones when applied directly to momenta.  Both square to the
    identity.
    """
    if convention not in ("momentum", "coordinate"):
        raise ValueError(f"unknown convention {convention!r}")
    s = coordinate_swap(theta, phi)
    return LorentzMatrix(-s if convention == "momentum" else s, "lambda-inf")


def z_set(theta: float = 0.0, phi: float = 0.0,
          convention: str = "momentum") -> list[LorentzMatrix]:
    """The four discrete extension elements {I, -I, lambda_inf, -lambda_inf}."""
    li = make_lambda_inf(theta, phi, convention).matrix
    return [
        LorentzMatrix(np.eye(4), "I"),
        LorentzMatrix(-np.eye(4), "-I"),
        LorentzMatrix(li, "lambda-inf"),
        LorentzMatrix(-li, "-lambda-inf"),
    ]


def boost_matrix(axis, rapidity: float) -> np.ndarray:
    """Proper orthochronous boost of the given rapidity along a spatial axis."""
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    ch, sh = np.cosh(rapidity), np.sinh(rapidity)
    m = np.empty((4, 4))
    m[0, 0] = ch
    m[0, 1:] = sh * n
    m[1:, 0] = sh * n
    m[1:, 1:] = np.eye(3) + (ch - 1.0) * np.outer(n, n)
    return m


def rotation_matrix(axis, angle: float) -> np.ndarray:
    """Spatial rotation by `angle` about a spatial axis (Rodrigues form)."""
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    k = np.array([[0.0, -n[2], n[1]],
                  [n[2], 0.0, -n[0]],
                  [-n[1], n[0], 0.0]])
    r3 = np.eye(3) + np.sin(angle) * k + (1.0 - np.cos(angle)) * (k @ k)
    m = np.eye(4)
    m[1:, 1:] = r3
    return m


def random_proper_orthochronous(rng: np.random.Generator,
                                max_rapidity: float = 3.0,
                                factors: int = 4) -> np.ndarray:
    """Random element of the identity component, built constructively.

    A finite product of axis boosts and rotations, so eta-orthogonality,
    det = 1 and M[0,0] >= 1 hold by construction up to rounding.
    """
    m = np.eye(4)
    for i in range(factors):
        axis = rng.standard_normal(3)
        while np.linalg.norm(axis) < 1e-3:
            axis = rng.standard_normal(3)
        if i % 2 == 0:
            m = m @ boost_matrix(axis, rng.uniform(-max_rapidity, max_rapidity))
        else:
            m = m @ rotation_matrix(axis, rng.uniform(-np.pi, np.pi))
    return m


def eta_deviation(m) -> float:
    """Max-entry deviation of M^T eta M from eta (0 for genuine Lorentz matrices)."""
    m = np.asarray(m, dtype=float)
    return float(np.max(np.abs(m.T @ METRIC @ m - METRIC)))


@dataclass(frozen=True, eq=False)
class ExtPoincareElement:
    """Pair (linear part, translation) with the semidirect product law."""

    linear: LorentzMatrix
    translation: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.translation, dtype=float)
        if a.shape != (4,):
            raise ValueError(f"translation must be a 4-vector, got shape {a.shape}")
        object.__setattr__(self, "translation", a)


def poincare_identity() -> ExtPoincareElement:
    return ExtPoincareElement(LorentzMatrix(np.eye(4), "I"), np.zeros(4))


def _product_tag(left: str, right: str) -> str:
    if left == "I":
        return right
    if right == "I":
        return left
    return "product"


def poincare_mul(g: ExtPoincareElement, g2: ExtPoincareElement) -> ExtPoincareElement:
    """(h, a)(h', a') = (h h', a + h a')."""
    linear = LorentzMatrix(g.linear.matrix @ g2.linear.matrix,
                           _product_tag(g.linear.tag, g2.linear.tag))
    return ExtPoincareElement(linear, g.translation + g.linear.matrix @ g2.translation)


def poincare_inverse(g: ExtPoincareElement) -> ExtPoincareElement:
    minv = np.linalg.inv(g.linear.matrix)
    tag = g.linear.tag if g.linear.tag in Z_TAGS else "product"
    return ExtPoincareElement(LorentzMatrix(minv, tag), -(minv @ g.translation))


def alpha_z(z: LorentzMatrix, n: ExtPoincareElement) -> ExtPoincareElement:
    """Automorphism (h, a) -> (z h z^-1, z a) for z in the discrete extension set.

    Every z in the set is its own inverse, so the conjugate is z h z.  Whether
    the conjugate of a proper orthochronous h lands back in that component is
    not asserted here; see the eta-deviation report in the CLI.
    """
    if z.tag not in Z_TAGS:
        raise ValueError(f"alpha_z needs z tagged as one of {Z_TAGS}, got {z.tag!r}")
    zm = z.matrix
    conj_tag = "I" if n.linear.tag == "I" else "product"
    return ExtPoincareElement(LorentzMatrix(zm @ n.linear.matrix @ zm, conj_tag),
                              zm @ n.translation)


class OrbitClass(enum.Enum):
    MASSIVE_FORWARD = "massive-forward"
    MASSIVE_BACKWARD = "massive-backward"
    TACHYONIC = "tachyonic"
    LIGHTLIKE_FORWARD = "lightlike-forward"
    LIGHTLIKE_BACKWARD = "lightlike-backward"
    ZERO = "zero"


def classify_orbit(p) -> OrbitClass:
    """Orbit label from (sign of eta(p,p), sign of p0).

    |eta(p,p)| below 1e-9 times the squared Euclidean norm counts as
    lightlike; the zero vector gets its own flag rather than an exception.
    """
    p = np.asarray(p, dtype=float)
    scale = float(p @ p)
    if scale == 0.0:
        return OrbitClass.ZERO
    inv = minkowski(p, p)
    if abs(inv) < LIGHTLIKE_BAND * scale:
        return OrbitClass.LIGHTLIKE_FORWARD if p[0] > 0 else OrbitClass.LIGHTLIKE_BACKWARD
    if inv > 0:
        return OrbitClass.MASSIVE_FORWARD if p[0] > 0 else OrbitClass.MASSIVE_BACKWARD
    return OrbitClass.TACHYONIC


def z_orbit(p, theta: float = 0.0, phi: float = 0.0,
            convention: str = "momentum") -> list[tuple[str, np.ndarray, OrbitClass]]:
    """Images of p under the four discrete elements, with orbit labels.

    For a timelike p the image classes always cover both massive classes and
    the tachyonic one: the extended group merges those orbits.
    """
    p = np.asarray(p, dtype=float)
    out = []
    for z in z_set(theta, phi, convention):
        image = z.matrix @ p
        out.append((z.tag, image, classify_orbit(image)))
    return out
