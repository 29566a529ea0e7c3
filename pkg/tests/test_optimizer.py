import random

import pytest

from trotopt import (
    Circuit,
    CliffordTableau,
    Gate,
    PauliProduct,
    Rotation,
    RotationForm,
    apply_edit_plan,
    equivalent_up_to_phase,
    optimize,
    parse_qc,
    t_count_reduction,
    to_rotation_form,
    unitary_of,
)

from _helpers import non_phase_gates, random_clifford_t_circuit

P = PauliProduct.from_label


def synthetic_form(labels, n=None):
    paulis = [P(label) for label in labels]
    width = n or paulis[0].n
    return RotationForm(
        width,
        tuple(Rotation(p, origin=i) for i, p in enumerate(paulis)),
        CliffordTableau.identity(width),
    )


class TestBasicFolding:
    def test_adjacent_equal_pair_merges_to_s(self):
        c = Circuit.on_qubits(1, [Gate("T", (0,)), Gate("T", (0,))])
        form, plan, stats = optimize(to_rotation_form(c))
        assert plan.replacements == {0} and plan.deletions == {1}
        assert len(form.rotations) == 0
        assert stats.merges == 1 and stats.cancellations == 0
        out = apply_edit_plan(c, plan)
        assert [g.kind for g in out.gates] == ["S"]
        assert equivalent_up_to_phase(unitary_of(out), unitary_of(c))

    def test_opposite_pair_cancels(self):
        c = Circuit.on_qubits(1, [Gate("T", (0,)), Gate("Tdg", (0,))])
        form, plan, stats = optimize(to_rotation_form(c))
        assert plan.deletions == {0, 1} and not plan.replacements
        assert stats.cancellations == 1
        assert apply_edit_plan(c, plan).gates == ()

    def test_anticommuting_blocker_stops_the_scan(self):
        form, plan, stats = optimize(synthetic_form(["Z", "X", "-Z"]))
        assert len(form.rotations) == 3
        assert stats.cancellations == stats.merges == 0

    def test_commuting_bystander_allows_cancel(self):
        form, _, stats = optimize(synthetic_form(["ZI", "IZ", "-ZI"]))
        assert stats.cancellations == 1
        assert [r.pauli for r in form.rotations] == [P("IZ")]

    def test_mixed_t_tdg_same_frame_sign_merges(self):
        # X conjugation flips the second axis: T then X then Tdg folds to a merge
        c = Circuit.on_qubits(
            1, [Gate("T", (0,)), Gate("X", (0,)), Gate("Tdg", (0,))]
        )
        form, plan, stats = optimize(to_rotation_form(c))
        assert stats.merges == 1
        assert plan.replacements == {0} and plan.deletions == {2}
        out = apply_edit_plan(c, plan)
        assert equivalent_up_to_phase(unitary_of(out), unitary_of(c))

    def test_cz_in_disguise_merge(self):
        # CZ written as H-CNOT-H between two T gates on the same qubit: the
        # axes still meet, so the T-count drops to zero.
        c = Circuit.on_qubits(
            2,
            [
                Gate("T", (0,)),
                Gate("H", (1,)),
                Gate("CNOT", (0, 1)),
                Gate("H", (1,)),
                Gate("T", (0,)),
            ],
        )
        form, plan, stats = optimize(to_rotation_form(c))
        assert stats.merges == 1
        assert len(form.rotations) == 0
        out = apply_edit_plan(c, plan)
        assert out.counts().t_count == 0
        assert equivalent_up_to_phase(unitary_of(out), unitary_of(c))

    def test_mod5_4(self, mod5_4_text):
        expanded = parse_qc(mod5_4_text).expand()
        form, plan, stats = optimize(to_rotation_form(expanded))
        assert stats.t_after == 8
        out = apply_edit_plan(expanded, plan)
        counts = out.counts()
        assert counts.t_count == 8
        assert counts.cnot_count == 28


class TestFrame:
    def test_merge_rewrites_later_axes(self):
        # After merging two Z rotations the leftover Clifford conjugates any
        # later anticommuting axis; X arrives in the frame as -Y.
        c = Circuit.on_qubits(
            1,
            [
                Gate("T", (0,)),
                Gate("T", (0,)),
                Gate("H", (0,)),
                Gate("T", (0,)),
            ],
        )
        form, plan, stats = optimize(to_rotation_form(c))
        assert stats.merges == 1
        assert [r.pauli for r in form.rotations] == [P("-Y")]
        assert equivalent_up_to_phase(unitary_of(form), unitary_of(c))
        out = apply_edit_plan(c, plan)
        assert equivalent_up_to_phase(unitary_of(out), unitary_of(c))

    def test_frame_folds_into_tail(self):
        c = Circuit.on_qubits(1, [Gate("T", (0,)), Gate("T", (0,))])
        form, _, _ = optimize(to_rotation_form(c))
        assert form.tail_clifford == CliffordTableau.s_rotation(P("Z"))


class TestSoundness:
    N_CASES = 120

    def test_random_circuits(self):
        rng = random.Random(0xD06)
        for case in range(self.N_CASES):
            n = rng.randint(1, 6)
            c = random_clifford_t_circuit(n, rng.randint(0, 60), rng)
            form, plan, stats = optimize(to_rotation_form(c))
            out = apply_edit_plan(c, plan)
            before, after = c.counts(), out.counts()
            assert after.t_count <= before.t_count
            assert (before.t_count - after.t_count) % 2 == 0
            assert after.t_count == stats.t_after
            assert non_phase_gates(out) == non_phase_gates(c)
            assert equivalent_up_to_phase(unitary_of(out), unitary_of(c)), (
                f"case {case} not equivalent"
            )
            assert equivalent_up_to_phase(unitary_of(form), unitary_of(c))

    def test_idempotent(self):
        rng = random.Random(0x1DE)
        for _ in range(60):
            c = random_clifford_t_circuit(rng.randint(1, 5), rng.randint(0, 50), rng)
            first = optimize(to_rotation_form(c))
            second = optimize(first.form)
            assert second.stats.cancellations == 0
            assert second.stats.merges == 0

    def test_quiescence(self):
        # No two surviving rotations share an axis (up to sign) with only
        # commuting rotations in between.
        rng = random.Random(0x957)
        for _ in range(60):
            c = random_clifford_t_circuit(rng.randint(1, 5), rng.randint(0, 50), rng)
            form, _, _ = optimize(to_rotation_form(c))
            axes = [r.pauli for r in form.rotations]
            for j in range(len(axes)):
                for i in range(j):
                    if not axes[i].equal_up_to_sign(axes[j]):
                        continue
                    between = axes[i + 1 : j]
                    assert any(not q.commutes(axes[j]) for q in between)


class TestComplexity:
    def test_comparison_bound_on_all_commuting_lists(self):
        # k distinct pairwise-commuting diagonal axes: every insertion scans
        # the whole processed list, the documented worst case.
        for k in (64, 128):
            labels = []
            n = 8
            for value in range(1, k + 1):
                letters = "".join("Z" if (value >> b) & 1 else "I" for b in range(n))
                labels.append("+" + letters)
            form, _, stats = optimize(synthetic_form(labels, n=n))
            assert len(form.rotations) == k
            assert stats.comparisons == k * (k - 1) // 2

    def test_quadratic_growth(self):
        counts = {}
        for k in (64, 128, 256):
            n = 9
            labels = [
                "+" + "".join("Z" if (v >> b) & 1 else "I" for b in range(n))
                for v in range(1, k + 1)
            ]
            _, _, stats = optimize(synthetic_form(labels, n=n))
            counts[k] = stats.comparisons
        assert counts[128] / counts[64] == pytest.approx(4, rel=0.1)
        assert counts[256] / counts[128] == pytest.approx(4, rel=0.1)


class TestReductionReport:
    def test_mod5_4(self, mod5_4_text):
        expanded = parse_qc(mod5_4_text).expand()
        form, plan, _ = optimize(to_rotation_form(expanded))
        out = apply_edit_plan(expanded, plan)
        report = t_count_reduction(expanded, out)
        assert report.t_before == 28 and report.t_after == 8
        assert round(report.percent, 2) == 71.43

    def test_no_t_gates(self):
        c = Circuit.on_qubits(1, [Gate("H", (0,))])
        assert t_count_reduction(c, c).percent == 0.0

    def test_full_reduction(self):
        c = Circuit.on_qubits(1, [Gate("T", (0,)), Gate("T", (0,))])
        out = apply_edit_plan(c, optimize(to_rotation_form(c)).plan)
        assert t_count_reduction(c, out).percent == 100.0

    def test_stats_record_is_flat(self):
        c = Circuit.on_qubits(1, [Gate("T", (0,))])
        record = optimize(to_rotation_form(c)).stats.as_dict()
        assert set(record) == {
            "t_before",
            "t_after",
            "cancellations",
            "merges",
            "comparisons",
            "wall_time_s",
        }
        assert all(isinstance(v, (int, float)) for v in record.values())
