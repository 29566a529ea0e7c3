"""The stabilizer tableau and the dense oracle that keeps it honest.

Run:  python demos/04_tableau_and_oracle.py
"""

import random

import numpy as np

from trotopt import (
    Circuit,
    CliffordTableau,
    Gate,
    PauliProduct,
    pauli_matrix,
    synthesize,
    unitary_of,
)

P = PauliProduct.from_label

# ----------------------------------------------------------------------
# A Clifford is pinned down by where it sends the X and Z generators.
# Signs matter: they are what later separates a +P rotation from a -P one.

bell_prep = Circuit.on_qubits(2, [Gate("H", (0,)), Gate("CNOT", (0, 1))])
tableau = CliffordTableau.from_circuit(bell_prep)
print(tableau)

p = P("-YX")
image = tableau.conjugate(p)
print("\nconjugating", p, "->", image)

u = unitary_of(bell_prep)
dense_image = u @ pauli_matrix(p) @ u.conj().T
print("dense agrees:", np.allclose(dense_image, pauli_matrix(image)))

# ----------------------------------------------------------------------
# Composition, inversion, and synthesis round-trip through gates.

inverse = tableau.invert()
print("\ninverse undoes it:",
      inverse.compose(tableau) == CliffordTableau.identity(2))

resynth = synthesize(tableau)
print("synthesized over {H,S,CNOT,X,Z}:", [g.kind for g in resynth.gates])
print("round trip:", CliffordTableau.from_circuit(resynth) == tableau)

# ----------------------------------------------------------------------
# Randomized agreement between the two independent implementations:
# symplectic bit pushing on one side, complex matrices on the other.

rng = random.Random(11)
kinds1, kinds2 = ["H", "S", "Sdg", "X", "Y", "Z"], ["CNOT", "CZ", "SWAP"]
checked = 0
for _ in range(200):
    n = rng.randint(1, 4)
    gates = []
    for _ in range(rng.randint(0, 12)):
        if n >= 2 and rng.random() < 0.4:
            gates.append(Gate(rng.choice(kinds2), tuple(rng.sample(range(n), 2))))
        else:
            gates.append(Gate(rng.choice(kinds1), (rng.randrange(n),)))
    circuit = Circuit.on_qubits(n, gates)
    t = CliffordTableau.from_circuit(circuit)
    u = unitary_of(circuit)
    q = PauliProduct(n, rng.randrange(1 << n), rng.randrange(1 << n),
                     rng.choice([1, -1]))
    assert np.allclose(u @ pauli_matrix(q) @ u.conj().T,
                       pauli_matrix(t.conjugate(q)))
    checked += 1
print(f"\n{checked} random tableau-vs-dense conjugations agree")

# ----------------------------------------------------------------------
# The quarter-rotation matrix itself, straight from the definition.

from trotopt import rotation_matrix

print("\nR(+Z) is the T gate:",
      np.allclose(rotation_matrix(P("Z")), np.diag([1, np.exp(1j * np.pi / 4)])))
print("R(-I) is a pure phase:",
      np.allclose(rotation_matrix(PauliProduct(1, 0, 0, -1)),
                  np.exp(1j * np.pi / 4) * np.eye(2)))
