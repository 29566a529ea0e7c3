"""Ground-truth dense-matrix oracle for small registers.

Everything here is built directly from 2x2 matrix definitions and Kronecker
products, independent of the tableau machinery, so it can arbitrate sign
and phase conventions.  Qubit 0 is the leftmost Kronecker factor (most
significant bit of the basis index).
"""

from __future__ import annotations

import math
import os

import numpy as np

from .circuit import Circuit, Gate
from .pauli import PauliProduct
from .rotations import RotationForm
from .tableau import synthesize

DEFAULT_QUBIT_CAP = 10

_I2 = np.eye(2, dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_H = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
_S = np.diag([1, 1j]).astype(complex)
_T = np.diag([1, np.exp(1j * math.pi / 4)]).astype(complex)

_ONE_QUBIT = {
    "H": _H,
    "X": _X,
    "Y": _Y,
    "Z": _Z,
    "S": _S,
    "Sdg": _S.conj().T,
    "T": _T,
    "Tdg": _T.conj().T,
}

_PROJ0 = np.diag([1, 0]).astype(complex)
_PROJ1 = np.diag([0, 1]).astype(complex)


def _embed1(op: np.ndarray, qubit: int, n: int) -> np.ndarray:
    left = np.eye(1 << qubit, dtype=complex)
    right = np.eye(1 << (n - qubit - 1), dtype=complex)
    return np.kron(np.kron(left, op), right)


def gate_matrix(gate: Gate, n: int) -> np.ndarray:
    """Full 2^n matrix of one gate on an n-qubit register."""
    if gate.kind in _ONE_QUBIT:
        return _embed1(_ONE_QUBIT[gate.kind], gate.qubits[0], n)
    if gate.kind == "CNOT":
        c, t = gate.qubits
        return _embed1(_PROJ0, c, n) + _embed1(_PROJ1, c, n) @ _embed1(_X, t, n)
    if gate.kind == "CZ":
        c, t = gate.qubits
        return _embed1(_PROJ0, c, n) + _embed1(_PROJ1, c, n) @ _embed1(_Z, t, n)
    if gate.kind == "SWAP":
        a, b = gate.qubits
        cnot_ab = gate_matrix(Gate("CNOT", (a, b)), n)
        cnot_ba = gate_matrix(Gate("CNOT", (b, a)), n)
        return cnot_ab @ cnot_ba @ cnot_ab
    if gate.kind == "CCZ":
        a, b, t = gate.qubits
        both = _embed1(_PROJ1, a, n) @ _embed1(_PROJ1, b, n)
        return np.eye(1 << n, dtype=complex) + both @ (_embed1(_Z, t, n) - np.eye(1 << n))
    if gate.kind == "TOFFOLI":
        a, b, t = gate.qubits
        both = _embed1(_PROJ1, a, n) @ _embed1(_PROJ1, b, n)
        return np.eye(1 << n, dtype=complex) + both @ (_embed1(_X, t, n) - np.eye(1 << n))
    raise ValueError(f"no dense matrix for gate kind {gate.kind!r}")


def pauli_matrix(p: PauliProduct) -> np.ndarray:
    """Dense matrix of a signed Pauli product."""
    letters = {"I": _I2, "X": _X, "Y": _Y, "Z": _Z}
    m = np.eye(1, dtype=complex)
    for q in range(p.n):
        m = np.kron(m, letters[p.letter(q)])
    return p.sign * m


def rotation_matrix(p: PauliProduct) -> np.ndarray:
    """The pi/4 rotation about ``p``: (1+e^{i pi/4})/2 I + (1-e^{i pi/4})/2 P."""
    w = np.exp(1j * math.pi / 4)
    dim = 1 << p.n
    return (1 + w) / 2 * np.eye(dim, dtype=complex) + (1 - w) / 2 * pauli_matrix(p)


def _check_unitary(u: np.ndarray) -> np.ndarray:
    dim = u.shape[0]
    err = np.linalg.norm(u.conj().T @ u - np.eye(dim), "fro")
    if err > 1e-9:
        raise ValueError(f"matrix is not unitary (Frobenius defect {err:.2e})")
    return u


def verification_cap() -> int:
    """Qubit cap for dense verification; T_ROT_OPT_VERIFY_CAP overrides."""
    raw = os.environ.get("T_ROT_OPT_VERIFY_CAP")
    if raw is None:
        return DEFAULT_QUBIT_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"T_ROT_OPT_VERIFY_CAP must be an integer, got {raw!r}")


def unitary_of(obj: Circuit | RotationForm, max_qubits: int | None = None) -> np.ndarray:
    """Exact gate-by-gate (or rotation-by-rotation) dense unitary."""
    if not isinstance(obj, (Circuit, RotationForm)):
        raise TypeError(f"cannot build a unitary from {type(obj).__name__}")
    cap = DEFAULT_QUBIT_CAP if max_qubits is None else max_qubits
    if obj.n > cap:
        raise ValueError(f"{obj.n} qubits exceeds the verification cap of {cap}")
    dim = 1 << obj.n
    u = np.eye(dim, dtype=complex)
    if isinstance(obj, Circuit):
        for gate in obj.gates:
            u = gate_matrix(gate, obj.n) @ u
    else:
        for rotation in obj.rotations:
            u = rotation_matrix(rotation.pauli) @ u
        u = unitary_of(synthesize(obj.tail_clifford), max_qubits=cap) @ u
    return _check_unitary(u)


def equivalent_up_to_phase(a: np.ndarray, b: np.ndarray, tol: float = 1e-8) -> bool:
    """True iff a == lambda * b for some unit scalar lambda.

    The phase is read off at b's largest-magnitude entry, which keeps the
    comparison stable against near-zero entries.
    """
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    flat = np.argmax(np.abs(b))
    idx = np.unravel_index(flat, b.shape)
    if abs(b[idx]) < tol:
        return bool(np.max(np.abs(a)) < tol)
    lam = a[idx] / b[idx]
    if abs(abs(lam) - 1) > tol:
        return False
    return bool(np.max(np.abs(a - lam * b)) <= tol)


def brute_force_min_layers(paulis: list[PauliProduct], max_m: int = 12) -> int:
    """Exhaustive longest anticommuting chain; oracle for the DP bound."""
    m = len(paulis)
    if m > max_m:
        raise ValueError(f"{m} rotations exceeds the brute-force cap of {max_m}")
    if m == 0:
        return 0
    anti = [
        [not paulis[i].commutes(paulis[j]) for j in range(m)] for i in range(m)
    ]

    def extend(last: int, length: int) -> int:
        best = length
        for nxt in range(last + 1, m):
            if anti[last][nxt]:
                best = max(best, extend(nxt, length + 1))
        return best

    return max(extend(v, 1) for v in range(m))
