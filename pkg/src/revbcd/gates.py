"""Reversible primitive gates: semantics, arity, and quantum metrics.

Seven gates are supported.  Each maps an input bit tuple to an output bit
tuple of the same length, and every map is a bijection on {0,1}^arity:

    NOT  (1 line)   P = !A
    FG   (2 lines)  P = A,  Q = A^B                       (Feynman / CNOT)
    PG   (3 lines)  P = A,  Q = A^B,  R = AB^C            (Peres)
    MF   (3 lines)  P = A,  Q = !A.B ^ A.!C,  R = AB ^ !A.C
                    (modified Fredkin; R is a 2:1 mux with select A)
    HNG  (4 lines)  P = A,  Q = B,  R = A^B^C,
                    S = (A^B)C ^ AB ^ D                   (full adder core)
    BJN  (3 lines)  P = A,  Q = B,  R = (A|B) ^ C
    DFG  (3 lines)  P = A,  Q = A^B,  R = A^C             (double Feynman)

Cost constants are per-gate elementary-operation counts (qc) and delay in
delta units.  1x1 gates carry no quantum cost.
"""

from __future__ import annotations

from enum import Enum

from .errors import ArityError


class GateKind(str, Enum):
    """The reversible gate vocabulary used by every circuit in the toolkit."""

    NOT = "NOT"
    FG = "FG"
    PG = "PG"
    MF = "MF"
    HNG = "HNG"
    BJN = "BJN"
    DFG = "DFG"

    def __str__(self) -> str:  # serialize by bare name
        return self.value


def _not(bits):
    (a,) = bits
    return (a ^ 1,)


def _fg(bits):
    a, b = bits
    return (a, a ^ b)


def _pg(bits):
    a, b, c = bits
    return (a, a ^ b, (a & b) ^ c)


def _mf(bits):
    a, b, c = bits
    na = a ^ 1
    return (a, (na & b) ^ (a & (c ^ 1)), (a & b) ^ (na & c))


def _hng(bits):
    a, b, c, d = bits
    ab = a ^ b
    return (a, b, ab ^ c, (ab & c) ^ (a & b) ^ d)


def _bjn(bits):
    a, b, c = bits
    return (a, b, (a | b) ^ c)


def _dfg(bits):
    a, b, c = bits
    return (a, a ^ b, a ^ c)


# kind -> (arity, qc, delay, function)
_GATES = {
    GateKind.NOT: (1, 0, 1, _not),
    GateKind.FG: (2, 1, 1, _fg),
    GateKind.PG: (3, 4, 4, _pg),
    GateKind.MF: (3, 4, 3, _mf),
    GateKind.HNG: (4, 6, 5, _hng),
    GateKind.BJN: (3, 5, 4, _bjn),
    GateKind.DFG: (3, 2, 2, _dfg),
}

ALL_KINDS = tuple(_GATES)


def arity(kind: GateKind) -> int:
    """Number of lines the gate acts on."""
    return _GATES[kind][0]


def gate_cost(kind: GateKind) -> tuple[int, int]:
    """Return (qc, delay) for one gate instance."""
    _, qc, delay, _ = _GATES[kind]
    return qc, delay


def gate_semantics(kind: GateKind, bits: tuple[int, ...]) -> tuple[int, ...]:
    """Apply one gate to an input tuple and return the output tuple.

    Raises ArityError when the tuple length does not match the gate's
    arity or a value is not a bit.
    """
    want = arity(kind)
    if len(bits) != want:
        raise ArityError(f"{kind} expects {want} bits, got {len(bits)}")
    if any(b not in (0, 1) for b in bits):
        raise ArityError(f"{kind} input must be 0/1 bits: {bits!r}")
    return _GATES[kind][3](tuple(bits))


def gate_truth_table(kind: GateKind) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Exhaustive (input, output) rows, inputs enumerated little-endian."""
    n = arity(kind)
    rows = []
    for value in range(1 << n):
        inp = tuple((value >> i) & 1 for i in range(n))
        rows.append((inp, gate_semantics(kind, inp)))
    return rows


def is_bijective(kind: GateKind) -> bool:
    """True when the gate's truth-table outputs are pairwise distinct."""
    outputs = {out for _, out in gate_truth_table(kind)}
    return len(outputs) == 1 << arity(kind)
