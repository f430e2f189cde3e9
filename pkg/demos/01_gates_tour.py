#!/usr/bin/env python3
# Tour of the reversible gate library: semantics, costs, reversibility.

from revbcd import GateKind, gate_cost, gate_semantics, gate_truth_table

print("Seven reversible gates, their metrics, and a sample row each\n")
print(f"{'gate':5} {'arity':5} {'qc':>3} {'delay':>5}   sample mapping")
for kind in GateKind:
    qc, delay = gate_cost(kind)
    inp, out = gate_truth_table(kind)[-1]  # all-ones row
    print(f"{kind.value:5} {len(inp):5} {qc:>3} {delay:>5}   {inp} -> {out}")

print("\nEvery gate is a bijection; applying the Feynman gate twice is a no-op:")
state = (1, 1)
once = gate_semantics(GateKind.FG, state)
twice = gate_semantics(GateKind.FG, once)
print(f"  {state} -> {once} -> {twice}")

print("\nThe full-adder gate: with its last input low, the third output is")
print("the sum and the fourth the carry of the first three:")
for a, b, c in ((0, 1, 1), (1, 1, 0), (1, 1, 1)):
    _, _, s, cy = gate_semantics(GateKind.HNG, (a, b, c, 0))
    print(f"  {a}+{b}+{c} = carry {cy}, sum {s}")
