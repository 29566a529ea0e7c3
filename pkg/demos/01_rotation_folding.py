"""How T gates become Pauli rotations, and how pairs of them fold away.

Run:  python demos/01_rotation_folding.py
"""

import numpy as np

from trotopt import (
    Circuit,
    Gate,
    apply_edit_plan,
    equivalent_up_to_phase,
    optimize,
    to_rotation_form,
    unitary_of,
)

# ----------------------------------------------------------------------
# Every T gate is a quarter rotation about Z.  Conjugating it by Clifford
# gates just moves the axis to another signed Pauli, so a whole Clifford+T
# circuit flattens into "list of rotations, then one Clifford".

circuit = Circuit.on_qubits(
    2,
    [
        Gate("T", (0,)),
        Gate("H", (0,)),
        Gate("T", (0,)),
        Gate("CNOT", (0, 1)),
        Gate("Tdg", (1,)),
    ],
)
form = to_rotation_form(circuit)
print("circuit gates:", [g.kind for g in circuit.gates])
print("extracted rotations (axis @ source gate index):")
print(form.dump())
print()

# ----------------------------------------------------------------------
# Two rotations about the SAME axis meet whenever everything between them
# commutes with that axis.  Opposite signs cancel outright; equal signs
# merge into an S gate (a T squared), left at the earlier slot.

tt = Circuit.on_qubits(1, [Gate("T", (0,)), Gate("T", (0,))])
result = optimize(to_rotation_form(tt))
print("T;T  ->", [g.kind for g in apply_edit_plan(tt, result.plan).gates],
      f"({result.stats.merges} merge)")

t_tdg = Circuit.on_qubits(1, [Gate("T", (0,)), Gate("Tdg", (0,))])
result = optimize(to_rotation_form(t_tdg))
print("T;T* ->", [g.kind for g in apply_edit_plan(t_tdg, result.plan).gates],
      f"({result.stats.cancellations} cancellation)")
print()

# ----------------------------------------------------------------------
# The pair does not need to be adjacent.  A T...T pair on the same qubit
# separated by a CZ still folds, even when the CZ is written in disguise
# as H; CNOT; H -- the rotation picture only sees the axes.

disguised = Circuit.on_qubits(
    2,
    [
        Gate("T", (0,)),
        Gate("H", (1,)),
        Gate("CNOT", (0, 1)),
        Gate("H", (1,)),
        Gate("T", (0,)),
    ],
)
form, plan, stats = optimize(to_rotation_form(disguised))
optimized = apply_edit_plan(disguised, plan)
print("disguised-CZ circuit:", [g.kind for g in disguised.gates])
print("after folding:       ", [g.kind for g in optimized.gates])
print("T-count", disguised.counts().t_count, "->", optimized.counts().t_count)
print("still the same unitary:",
      equivalent_up_to_phase(unitary_of(optimized), unitary_of(disguised)))
print()

# ----------------------------------------------------------------------
# An anticommuting rotation in between is a wall: the scan stops there and
# nothing folds.  T; H T H; T has axes Z, X, Z -- the X blocks the Z pair.

blocked = Circuit.on_qubits(
    1,
    [Gate("T", (0,)), Gate("H", (0,)), Gate("T", (0,)), Gate("H", (0,)), Gate("T", (0,))],
)
form, plan, stats = optimize(to_rotation_form(blocked))
print("Z X Z chain: t-count stays", len(form.rotations),
      f"(merges={stats.merges}, cancellations={stats.cancellations})")

# ----------------------------------------------------------------------
# Deleting a cancelled pair can leave a global phase behind, which is why
# all equivalence checks are "up to phase": T X T X equals e^{i pi/4} I.

txtx = Circuit.on_qubits(
    1, [Gate("T", (0,)), Gate("X", (0,)), Gate("T", (0,)), Gate("X", (0,))]
)
u = unitary_of(txtx)
print("\nT X T X  =", np.round(u[0, 0], 6), "* identity",
      "(phase = e^{i pi/4}:", bool(np.isclose(u[0, 0], np.exp(1j * np.pi / 4))), ")")
