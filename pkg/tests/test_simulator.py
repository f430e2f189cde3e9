"""Simulation, truth tables, bijectivity, and batch behavior."""

import random

import pytest

from revbcd.designs import build_dec_csk, build_scl, scl_function
from revbcd.errors import AssignmentError, CapacityError
from revbcd.gates import GateKind, gate_truth_table
from revbcd.netlist import append_gate, input_role, new_netlist
from revbcd.simulator import (
    check_permutation,
    compile_netlist,
    reference_apply,
    run,
    run_batch,
    sample_injectivity,
    truth_table,
    verify_restored,
)
from revbcd.verify import adder_sum


def pdfa_inputs(a, b, c):
    bits = {f"a{i}": (a >> i) & 1 for i in range(4)}
    bits |= {f"b{i}": (b >> i) & 1 for i in range(4)}
    bits["cin"] = c
    return bits


class TestRun:
    def test_quirk_vector(self, pdfa):
        res = run(pdfa, pdfa_inputs(9, 9, 0))
        assert res.named == {"S0": 0, "S1": 0, "S2": 0, "S3": 1, "dC": 1}
        assert res.restored_ok

    def test_zero_case(self, pdfa):
        res = run(pdfa, pdfa_inputs(0, 0, 0))
        assert all(res.named[f"S{i}"] == 0 for i in range(4))
        assert res.named["dC"] == 0

    def test_exhaustive_decimal_oracle(self, pdfa):
        for a in range(10):
            for b in range(10):
                for c in range(2):
                    res = run(pdfa, pdfa_inputs(a, b, c))
                    digit = sum(res.named[f"S{i}"] << i for i in range(4))
                    assert digit == (a + b + c) % 10
                    assert res.named["dC"] == int(a + b + c >= 10)
                    assert res.restored_ok

    def test_missing_label(self, pdfa):
        with pytest.raises(AssignmentError, match="unassigned"):
            run(pdfa, {"a0": 1})

    def test_unknown_label(self, pdfa):
        with pytest.raises(AssignmentError, match="unknown"):
            run(pdfa, pdfa_inputs(1, 1, 0) | {"zz": 1})

    def test_deterministic(self, pdfa):
        assignment = pdfa_inputs(7, 5, 1)
        assert run(pdfa, assignment) == run(pdfa, assignment)


class TestTruthTable:
    def test_single_fg_matches_gate_table(self):
        nl = new_netlist(2, [input_role("a"), input_role("b")])
        nl = append_gate(nl, GateKind.FG, (0, 1))
        rows = truth_table(nl)
        assert [(i, o) for i, o in rows] == gate_truth_table(GateKind.FG)

    def test_scl_rows_match_detection_function(self):
        rows = truth_table(build_scl())
        # inputs: S1, S2, S3, C4 on lines 0..3; named dC on line 5
        for initial, terminal in rows:
            s1, s2, s3, c4 = initial[:4]
            assert terminal[5] == scl_function(s1, s2, s3, c4)
        assert len(rows) == 16

    def test_constants_fixed(self, pdfa):
        rows = truth_table(pdfa)
        assert len(rows) == 2**9
        for initial, _ in rows:
            assert all(initial[line] == 0 for line in pdfa.const_lines())

    def test_capacity_bound(self, dec_csk8):
        with pytest.raises(CapacityError):
            truth_table(dec_csk8)


class TestPermutation:
    @pytest.mark.parametrize("kind", list(GateKind))
    def test_single_gate_is_permutation(self, kind):
        from revbcd.gates import arity

        n = arity(kind)
        nl = new_netlist(n, [input_role(f"x{i}") for i in range(n)])
        assert check_permutation(append_gate(nl, kind, tuple(range(n))))

    def test_pdfa_is_permutation(self, pdfa):
        assert check_permutation(pdfa)

    def test_random_compositions_are_permutations(self):
        rng = random.Random(11)
        for _ in range(20):
            width = rng.randrange(4, 9)
            nl = new_netlist(width, [input_role(f"x{i}") for i in range(width)])
            for _ in range(rng.randrange(1, 12)):
                kind = rng.choice(list(GateKind))
                from revbcd.gates import arity

                if arity(kind) > width:
                    continue
                pins = tuple(rng.sample(range(width), arity(kind)))
                nl = append_gate(nl, kind, pins)
            assert check_permutation(nl)

    def test_capacity_bound(self, dec_csk8):
        with pytest.raises(CapacityError):
            check_permutation(dec_csk8)

    def test_sampled_injectivity_past_bound(self):
        assert sample_injectivity(build_dec_csk(1), samples=512, seed=5)


class TestBatch:
    def test_empty(self, pdfa):
        assert run_batch(pdfa, []) == []

    def test_waveform_vectors(self, dec_csk8):
        def labels(a, b):
            bits = {"cin": 0}
            for j in range(8):
                da = (a // 10**j) % 10
                db = (b // 10**j) % 10
                for i in range(4):
                    bits[f"a{i}.{j}"] = (da >> i) & 1
                    bits[f"b{i}.{j}"] = (db >> i) & 1
            return bits

        results = run_batch(
            dec_csk8,
            [labels(88888889, 88888889), labels(88888889, 11111111)],
        )
        sums = [
            sum(
                sum(r.named[f"S{i}.{j}"] << i for i in range(4)) * 10**j
                for j in range(8)
            )
            + r.named["dC"] * 10**8
            for r in results
        ]
        assert sums == [177777778, 100000000]
        assert all(r.restored_ok for r in results)

    def test_order_preserved(self, pdfa):
        batch = [pdfa_inputs(a, a, 0) for a in range(10)]
        results = run_batch(pdfa, batch)
        digits = [
            sum(r.named[f"S{i}"] << i for i in range(4)) for r in results
        ]
        assert digits == [(2 * a) % 10 for a in range(10)]

    def test_error_carries_index(self, pdfa):
        with pytest.raises(AssignmentError, match="batch item 1"):
            run_batch(pdfa, [pdfa_inputs(1, 2, 0), {"a0": 1}])

    def test_random_batch_matches_native(self, dec_rca8):
        rng = random.Random(3)
        compiled = compile_netlist(dec_rca8)
        for _ in range(500):
            a = rng.randrange(10**8)
            b = rng.randrange(10**8)
            total, carry, ok = adder_sum(compiled, 8, a, b)
            assert total == (a + b) % 10**8
            assert carry == int(a + b >= 10**8)
            assert ok


class TestRestoredAndReference:
    def test_restored_verified_exhaustively(self, pdfa):
        assert verify_restored(pdfa)
        assert verify_restored(build_dec_csk(1))

    def test_compiled_matches_reference(self, pdfa):
        rng = random.Random(9)
        compiled = compile_netlist(pdfa)
        for _ in range(200):
            state = [rng.randrange(2) for _ in range(pdfa.width)]
            fast = state.copy()
            compiled.run_state(fast)
            assert fast == reference_apply(pdfa, state)
