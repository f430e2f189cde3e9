#!/usr/bin/env python3
# The single-digit decimal full adder: simulate it, inspect its anatomy.

from revbcd import (
    build_pdfa,
    metric_decomposition,
    run,
    serialize,
    structural_metrics,
)

pdfa = build_pdfa()
print(f"one-digit BCD adder: {pdfa.width} lines, {len(pdfa.gates)} gates\n")

# The classic worst case: 9 + 9.  The raw binary sum 18 is invalid BCD,
# so the detection stage raises the decimal carry and the correction
# stage adds six, leaving digit 8 carry 1.
res = run(pdfa, {"a0": 1, "a1": 0, "a2": 0, "a3": 1,
                 "b0": 1, "b1": 0, "b2": 0, "b3": 1, "cin": 0})
digit = sum(res.named[f"S{i}"] << i for i in range(4))
print(f"9 + 9 + 0 -> digit {digit}, carry {res.named['dC']}")
print(f"carry-first bit pattern: "
      + "".join(str(res.named[k]) for k in ("dC", "S3", "S2", "S1", "S0")))
print(f"operand lines restored: {res.restored_ok}\n")

print("structural metrics:", structural_metrics(pdfa))
print("\nper-stage split (gate count, constants, garbage, cost, delay):")
for stage, rep in metric_decomposition(pdfa).items():
    print(f"  {stage:10} {rep}")

print("\nfirst lines of the serialized netlist:")
print("\n".join(serialize(pdfa).splitlines()[:8]))
