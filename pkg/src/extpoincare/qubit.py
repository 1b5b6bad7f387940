"""Unitary dictionary between doublet states and two-qubit states.

The sector isometry V sends psi_fwd (+) psi_bwd to psi_fwd x |fwd> +
psi_bwd x |bwd>, defined on the swap eigenstates and extended linearly.  The
observable embedding iota realizes A x B as the 2x2 block matrix with blocks
b_ij * A acting on the stacked doublet; it is a unital *-homomorphism, and
under V the sector swap becomes I x sigma_x.

Two-qubit states follow the ordered basis (+H, +V, -H, -V): direction qubit
first, polarization second, with the internal dictionary fwd -> H, bwd -> V.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .doublet import DoubletState

BASIS = ("+H", "+V", "-H", "-V")

ID2 = np.eye(2, dtype=complex)
PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


@dataclass(frozen=True, eq=False)
class TwoQubitState:
    """Pure state on direction x polarization, basis (+H, +V, -H, -V)."""

    amplitudes: np.ndarray

    def __post_init__(self):
        a = np.array(self.amplitudes, dtype=complex)
        if a.shape != (4,):
            raise ValueError(f"amplitudes must have shape (4,), got {a.shape}")
        object.__setattr__(self, "amplitudes", a)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def density(self) -> np.ndarray:
        return np.outer(self.amplitudes, np.conj(self.amplitudes))


@dataclass(frozen=True, eq=False)
class QubitObservable:
    """Product observable A x B; each factor must be Hermitian."""

    direction_part: np.ndarray
    polarization_part: np.ndarray

    def __post_init__(self):
        for name, m in (("direction_part", self.direction_part),
                        ("polarization_part", self.polarization_part)):
            m = np.asarray(m, dtype=complex)
            if m.shape != (2, 2):
                raise ValueError(f"{name} must be 2x2")
            if np.max(np.abs(m - m.conj().T)) > 1e-12:
                raise ValueError(f"{name} is not Hermitian")
            object.__setattr__(self, name, m)

    def matrix(self) -> np.ndarray:
        """Dense 4x4 matrix in the (+H, +V, -H, -V) basis."""
        return np.kron(self.direction_part, self.polarization_part)


O_XX = QubitObservable(PAULI_X, PAULI_X)


@dataclass(frozen=True, eq=False)
class BlockOperator:
    """Operator on stacked doublets (psi_fwd; psi_bwd), stored dense."""

    matrix: np.ndarray

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2:
            raise ValueError(f"expected a square even-dimension matrix, got {m.shape}")
        object.__setattr__(self, "matrix", m)

    @property
    def sector_dim(self) -> int:
        return self.matrix.shape[0] // 2

    def block(self, i: int, j: int) -> np.ndarray:
        n = self.sector_dim
        return self.matrix[i * n:(i + 1) * n, j * n:(j + 1) * n]


def stack(s: DoubletState) -> np.ndarray:
    """Doublet as one vector of length 2N, forward block first."""
    return np.concatenate([s.psi_fwd, s.psi_bwd])


def sector_isometry(s: DoubletState) -> np.ndarray:
    """V applied to a doublet: an (N, 2) array, column 0 = fwd, column 1 = bwd."""
    return np.column_stack([s.psi_fwd, s.psi_bwd])


def isometry_matrix(n: int) -> np.ndarray:
    """V as a 2N x 2N permutation: stacked (fwd; bwd) -> row-major (point, sector)."""
    v = np.zeros((2 * n, 2 * n))
    idx = np.arange(n)
    v[2 * idx, idx] = 1.0
    v[2 * idx + 1, n + idx] = 1.0
    return v


def iota(a, b) -> BlockOperator:
    """Embed A x B as the block matrix with blocks b_ij * A on the stacked doublet."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"A must be square, got shape {a.shape}")
    if b.shape != (2, 2):
        raise ValueError(f"B must be 2x2, got shape {b.shape}")
    return BlockOperator(np.kron(b, a))


def apply_block(op: BlockOperator, s: DoubletState) -> DoubletState:
    n = s.grid.count
    if op.sector_dim != n:
        raise ValueError(f"operator sector dimension {op.sector_dim} != grid size {n}")
    out = op.matrix @ stack(s)
    return DoubletState(s.grid, out[:n], out[n:])


def u_lambda_block(n: int) -> BlockOperator:
    """The sector swap in block form: off-diagonal identity blocks."""
    return iota(np.eye(n), PAULI_X)


def expectation_equality(s: DoubletState, a, b) -> tuple[complex, complex, float]:
    """Both sides of <Psi, iota(AxB) Psi> = <V Psi, (AxB) V Psi> and their gap."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    vec = stack(s)
    lhs = complex(np.vdot(vec, iota(a, b).matrix @ vec))
    w = sector_isometry(s)
    rhs = complex(np.vdot(w, a @ w @ b.T))
    return lhs, rhs, abs(lhs - rhs)


def u_lambda_conjugation_check(n: int) -> float:
    """Max entrywise deviation of V U_swap V^-1 from I x sigma_x at sector dimension n."""
    v = isometry_matrix(n)
    conjugated = v @ u_lambda_block(n).matrix @ v.T
    target = np.kron(np.eye(n), PAULI_X)
    return float(np.max(np.abs(conjugated - target)))


def entanglement_entropy(t: TwoQubitState) -> float:
    """Von Neumann entropy (nats) of the reduced direction qubit.

    0 for product states, ln 2 for maximally entangled ones.
    """
    if abs(t.norm() - 1.0) > 1e-9:
        raise ValueError(f"state norm deviates from 1 by {abs(t.norm() - 1.0):.3e}")
    m = t.amplitudes.reshape(2, 2)
    sv = np.linalg.svd(m, compute_uv=False)
    probs = sv ** 2
    probs = probs[probs > 1e-15]
    return float(-np.sum(probs * np.log(probs)))


def doublet_to_path_polarization(s: DoubletState) -> TwoQubitState:
    """Single-mode doublet as a path/polarization state: (f, b) -> f|+H> + b|-V>."""
    if s.grid.count != 1:
        raise ValueError("only single-point grids map onto one path/polarization qubit pair")
    f, b = s.psi_fwd[0], s.psi_bwd[0]
    return TwoQubitState(np.array([f, 0.0, 0.0, b]))


def two_qubit_to_json(t: TwoQubitState) -> str:
    doc = {
        "basis": list(BASIS),
        "amplitudes": [[float(z.real), float(z.imag)] for z in t.amplitudes],
    }
    return json.dumps(doc)


def two_qubit_from_json(text: str) -> TwoQubitState:
    doc = json.loads(text)
    if tuple(doc.get("basis", ())) != BASIS:
        raise ValueError(f"unexpected basis labels {doc.get('basis')!r}")
    return TwoQubitState(np.array([complex(re, im) for re, im in doc["amplitudes"]]))
