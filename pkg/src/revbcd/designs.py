"""Builders for the BCD adder circuits and their boolean evaluators.

Two adder families are produced:

* the ripple design (``build_dec_rca``): one decimal full-adder block per
  digit (``build_pdfa`` is the single-digit block), carry threaded from
  digit to digit through a Feynman copy, and

* the carry-skip design (``build_dec_csk``): per digit, a carry-free
  4-bit addition of the two operand digits, a propagate signal (high
  exactly when the operand digits sum to 9), a carry-independent decimal
  generate signal, a multiplexer selecting incoming carry versus
  generated carry, a double-Feynman fan of the selected carry, a small
  increment chain folding the incoming carry into the raw sum, and the
  shared six-correction block.

The carry-skip digit computes everything that feeds the carry select from
the operand digits alone, so the selected carry hops digit to digit
through just the multiplexer and the copy gate.  The outputs are equal to
the ripple design's on every input: when the digits sum to 9 the mux
forwards the incoming carry, and in every other case the digit's carry
out does not depend on the incoming carry at all, so the locally
generated signal is already correct.

Each builder tags gates with one of the STAGE_* labels so the metric
engine can report the three-stage split.
"""

from __future__ import annotations

from .errors import InvalidArgumentError, InvalidBCDError
from .gates import GateKind
from .netlist import GateInstance, LineRole, Netlist, const_role, input_role

STAGE_ADDITION = "addition"
STAGE_DETECTION = "detection"
STAGE_CORRECTION = "correction"

RCA_CONSTS_PER_DIGIT = 8
CSK_CONSTS_PER_DIGIT = 19


# -- direct boolean evaluators ----------------------------------------------


def scl_function(s1: int, s2: int, s3: int, c4: int) -> int:
    """Decimal carry out of one digit: c4 XOR s3.(s2 OR s1)."""
    return c4 ^ (s3 & (s2 | s1))


def decimal_generate(c4: int, s3: int, s2: int, s1: int) -> int:
    """Generate signal over the 4-bit raw sum; same function as the
    detection block, exposed with the conventional argument order."""
    return scl_function(s1, s2, s3, c4)


def decimal_propagate(da: int, db: int) -> int:
    """1 exactly when the two BCD digits sum to 9 (carry bypass condition).

    Computed from the per-bit propagate p_i = a_i^b_i and generate
    g_i = a_i.b_i signals.  With t1 = g1^p1 (bit 1 occupied in either
    operand) and t2 = g2^p2 (bit 2 occupied):

        p0 . (p3.!t1.!t2 ^ g1.p2 ^ g2.!t1)

    The three terms are disjoint, covering the 9-decompositions 8+1,
    {2,3}+{7,6}, and {4,5}+{5,4}.  A widely reproduced variant of this
    function drops the !t1.!t2 guard on the p3 term; that variant also
    fires on digit pairs summing to 11, 13, or 15 and would mis-select
    the incoming carry there, so the guarded form is used throughout
    (see the published-value deltas in the comparison report).
    """
    for d in (da, db):
        if not 0 <= d <= 9:
            raise InvalidBCDError(f"digit {d!r} outside 0..9")
    p = da ^ db
    g = da & db
    p0 = p & 1
    p1 = (p >> 1) & 1
    p2 = (p >> 2) & 1
    p3 = (p >> 3) & 1
    g1 = (g >> 1) & 1
    g2 = (g >> 2) & 1
    t1 = g1 ^ p1
    t2 = g2 ^ p2
    return p0 & ((p3 & (t1 ^ 1) & (t2 ^ 1)) ^ (g1 & p2) ^ (g2 & (t1 ^ 1)))


def skip_carry(p: int, dc_in: int, g: int) -> int:
    """Selected digit carry out: incoming carry when p, generate otherwise."""
    return dc_in if p else g


# -- small construction helper ----------------------------------------------


class _Builder:
    """Single-phase netlist assembly (kept internal; the public surface is
    the functional netlist operations plus the build_* entry points)."""

    def __init__(self):
        self.roles: list[LineRole] = []
        self.gates: list[GateInstance] = []
        self.outputs: list[tuple[str, int]] = []
        self.restored: set[int] = set()

    def input(self, label: str) -> int:
        self.roles.append(input_role(label))
        return len(self.roles) - 1

    def const(self, bit: int = 0, label: str | None = None) -> int:
        self.roles.append(const_role(bit, label))
        return len(self.roles) - 1

    def gate(self, kind: GateKind, *pins: int, stage: str | None = None) -> None:
        self.gates.append(GateInstance(kind, tuple(pins), stage))

    def name(self, name: str, line: int) -> None:
        self.outputs.append((name, line))

    def restore(self, *lines: int) -> None:
        self.restored.update(lines)

    def build(self) -> Netlist:
        return Netlist(
            width=len(self.roles),
            roles=tuple(self.roles),
            gates=tuple(self.gates),
            outputs=tuple(self.outputs),
            restored=frozenset(self.restored),
        )


def _operand_lines(b: _Builder, n: int, mk_label) -> tuple[list, list, int]:
    """Allocate the shared input layout: per digit a0..a3 then b0..b3,
    then the single carry-in line last."""
    a_lines, b_lines = [], []
    for j in range(n):
        a_lines.append([b.input(mk_label("a", i, j)) for i in range(4)])
        b_lines.append([b.input(mk_label("b", i, j)) for i in range(4)])
    cin = b.input("cin")
    return a_lines, b_lines, cin


def adder_input_lines(n: int) -> tuple[list[list[int]], list[list[int]], int]:
    """Line indices of the operand bits and the carry-in, as laid out by
    both adder builders: a-bit i of digit j at 8j+i, b-bit i at 8j+4+i,
    carry-in at 8n."""
    a = [[8 * j + i for i in range(4)] for j in range(n)]
    b = [[8 * j + 4 + i for i in range(4)] for j in range(n)]
    return a, b, 8 * n


def rca_carry_copy_line(n: int, j: int) -> int:
    """Line carrying digit j's decimal carry copy in the ripple design."""
    return 8 * n + 1 + RCA_CONSTS_PER_DIGIT * j + 5


def adder_output_names(n: int) -> tuple[list[list[str]], str]:
    """Output naming shared by the multi-digit designs."""
    return [[f"S{i}.{j}" for i in range(4)] for j in range(n)], "dC"


# -- fragments ---------------------------------------------------------------


def build_scl() -> Netlist:
    """Standalone detection block: raw-sum bits in, decimal carry out.

    The OR of s1/s2 lands on the first ancilla, the Peres gate folds it
    with s3 into the binary carry line, and a Feynman copy peels the
    result off so one copy can keep threading (dC_chain) while the named
    dC feeds the next consumer.
    """
    b = _Builder()
    s1 = b.input("S1")
    s2 = b.input("S2")
    s3 = b.input("S3")
    c4 = b.input("C4")
    m0 = b.const(0, "or")
    m1 = b.const(0, "carry_copy")
    b.gate(GateKind.BJN, s1, s2, m0, stage=STAGE_DETECTION)
    b.gate(GateKind.PG, s3, m0, c4, stage=STAGE_DETECTION)
    b.gate(GateKind.FG, c4, m1, stage=STAGE_DETECTION)
    b.name("dC", m1)
    b.name("dC_chain", c4)
    b.restore(s1, s2, s3)
    return b.build()


def build_correction() -> Netlist:
    """Standalone six-correction block for the upper three sum bits.

    Functional contract: with raw sum S (bit 0 untouched by adding six)
    the outputs are the matching bits of (S + 6*dC) mod 16.
    """
    b = _Builder()
    dc = b.input("dC")
    s1 = b.input("S1")
    s2 = b.input("S2")
    s3 = b.input("S3")
    n0 = b.const(0, "c2")
    n1 = b.const(0, "c3")
    b.gate(GateKind.PG, dc, s1, n0, stage=STAGE_CORRECTION)
    b.gate(GateKind.HNG, s2, dc, n0, n1, stage=STAGE_CORRECTION)
    b.gate(GateKind.FG, n1, s3, stage=STAGE_CORRECTION)
    b.name("S1c", s1)
    b.name("S2c", n0)
    b.name("S3c", s3)
    b.restore(dc, s2)
    return b.build()


def _ripple_digit(
    b: _Builder, a: list[int], bb: list[int], carry_in: int, j: int
) -> tuple[dict[str, int], int]:
    """Append one decimal full-adder digit; returns its sum lines and the
    carry-copy line that threads to the next digit."""
    tag = f".{j}"
    k = [b.const(0, f"k{i}{tag}") for i in range(4)]
    chain = [carry_in] + k
    for i in range(4):
        b.gate(GateKind.HNG, a[i], bb[i], chain[i], k[i], stage=STAGE_ADDITION)
    # raw sum: S0 on the carry-in line, S1..S3 on k0..k2, C4 on k3
    m0 = b.const(0, f"or{tag}")
    m1 = b.const(0, f"dCcopy{tag}")
    b.gate(GateKind.BJN, k[0], k[1], m0, stage=STAGE_DETECTION)
    b.gate(GateKind.PG, k[2], m0, k[3], stage=STAGE_DETECTION)
    b.gate(GateKind.FG, k[3], m1, stage=STAGE_DETECTION)
    n0 = b.const(0, f"c2{tag}")
    n1 = b.const(0, f"c3{tag}")
    b.gate(GateKind.PG, k[3], k[0], n0, stage=STAGE_CORRECTION)
    b.gate(GateKind.HNG, k[1], k[3], n0, n1, stage=STAGE_CORRECTION)
    b.gate(GateKind.FG, n1, k[2], stage=STAGE_CORRECTION)
    sums = {"S0": carry_in, "S1": k[0], "S2": n0, "S3": k[2]}
    return sums, m1


def _build_ripple(n: int, pdfa_names: bool) -> Netlist:
    if n < 1:
        raise InvalidArgumentError("digit count must be at least 1")
    b = _Builder()
    if pdfa_names:
        mk = lambda op, i, j: f"{op}{i}"
    else:
        mk = lambda op, i, j: f"{op}{i}.{j}"
    a_lines, b_lines, cin = _operand_lines(b, n, mk)
    carry = cin
    for j in range(n):
        sums, carry = _ripple_digit(b, a_lines[j], b_lines[j], carry, j)
        suffix = "" if pdfa_names else f".{j}"
        for i in range(4):
            b.name(f"S{i}{suffix}", sums[f"S{i}"])
    b.name("dC", carry)
    for j in range(n):
        b.restore(*a_lines[j], *b_lines[j])
    return b.build()


def build_pdfa() -> Netlist:
    """Single-digit decimal full adder (17 lines, 10 gates)."""
    return _build_ripple(1, pdfa_names=True)


def build_dec_rca(n: int) -> Netlist:
    """n-digit ripple BCD adder built from decimal full-adder digits."""
    return _build_ripple(n, pdfa_names=False)


# -- carry-skip pieces -------------------------------------------------------


def _propagate_block(
    b: _Builder, a: list[int], bb: list[int], consts: dict[str, int]
) -> None:
    """Emit the propagate-signal gates.

    Reads the operand digit off the a/b pass-through lines, accumulates
    the sum-to-9 detector of decimal_propagate onto the P line, and
    restores every b line before returning (a lines are only ever read
    through pass-through pins).  The p3.!t1.!t2 term is built as a
    mux cascade, mux(p3: !t2, g2) then masked by !t1, which equals
    p3.!t1.!t2 ^ g2.!t1 on valid BCD inputs because p3 and g2 cannot
    both be set when both digits are at most 9.
    """
    u1, u2, x, y, v0, pline = (
        consts["u1"],
        consts["u2"],
        consts["x"],
        consts["y"],
        consts["v0"],
        consts["P"],
    )
    g = lambda kind, *pins: b.gate(kind, *pins, stage=STAGE_DETECTION)
    g(GateKind.FG, a[0], bb[0])          # b0 <- p0
    g(GateKind.PG, a[1], bb[1], u1)      # b1 <- p1, u1 <- g1
    g(GateKind.PG, a[2], bb[2], u2)      # b2 <- p2, u2 <- g2
    g(GateKind.FG, a[3], bb[3])          # b3 <- p3
    g(GateKind.PG, u1, bb[2], x)         # x <- g1.p2 (b2 smeared, fixed next)
    g(GateKind.FG, u1, bb[2])            # b2 <- p2 again
    g(GateKind.FG, bb[1], u1)            # u1 <- t1 = g1^p1
    g(GateKind.FG, u2, y)                # y <- g2
    g(GateKind.FG, bb[2], u2)            # u2 <- t2 = g2^p2
    g(GateKind.MF, bb[3], y, u2)         # y <- p3 ? !t2 : g2
    g(GateKind.MF, u1, v0, y)            # y <- !t1 . y  (R output, B = 0)
    g(GateKind.FG, y, x)                 # x <- g1p2 ^ p3.!t1.!t2 ^ g2.!t1
    g(GateKind.PG, bb[0], x, pline)      # P <- p0.x
    for i in range(4):
        g(GateKind.FG, a[i], bb[i])      # b_i <- a_i ^ p_i = b_i


def build_skip_generator() -> Netlist:
    """Standalone propagate-signal netlist over one digit pair.

    Simulated output equals decimal_propagate on every valid digit pair;
    all operand lines are restored.
    """
    b = _Builder()
    a = [b.input(f"a{i}") for i in range(4)]
    bb = [b.input(f"b{i}") for i in range(4)]
    consts = {
        "u1": b.const(0, "g1"),
        "u2": b.const(0, "g2"),
        "x": b.const(0, "x"),
        "y": b.const(0, "y"),
        "v0": b.const(0, "scratch"),
        "P": b.const(0, "P"),
    }
    _propagate_block(b, a, bb, consts)
    b.name("P", consts["P"])
    b.restore(*a, *bb)
    return b.build()


def build_skip_block() -> Netlist:
    """Standalone carry-select stage: mux then double-Feynman carry fan.

    The multiplexer leaves the selected carry on the generate line and
    the copy gate peels off the two copies that travel to the next digit
    and the next skip stage, while the original drives the correction.
    """
    b = _Builder()
    p = b.input("P")
    dc_in = b.input("dC_in")
    g_line = b.input("G")
    z0 = b.const(0, "copy0")
    z1 = b.const(0, "copy1")
    b.gate(GateKind.MF, p, dc_in, g_line, stage=STAGE_DETECTION)
    b.gate(GateKind.DFG, g_line, z0, z1, stage=STAGE_DETECTION)
    b.name("dC", g_line)
    b.name("copy0", z0)
    b.name("copy1", z1)
    b.restore(p)
    return b.build()


def build_dec_csk(n: int) -> Netlist:
    """n-digit carry-skip BCD adder; outputs equal build_dec_rca(n)'s."""
    if n < 1:
        raise InvalidArgumentError("digit count must be at least 1")
    b = _Builder()
    mk = lambda op, i, j: f"{op}{i}.{j}"
    a_lines, b_lines, cin = _operand_lines(b, n, mk)
    rca_in = cin   # feeds the increment chain (digit 0: pass-through reuse)
    mux_in = cin   # feeds the carry mux
    dc_out = cin
    for j in range(n):
        a, bb = a_lines[j], b_lines[j]
        tag = f".{j}"
        zc = b.const(0, f"zc{tag}")
        k = [b.const(0, f"k{i}{tag}") for i in range(4)]
        chain = [zc] + k
        for i in range(4):
            b.gate(GateKind.HNG, a[i], bb[i], chain[i], k[i], stage=STAGE_ADDITION)
        # carry-free raw sum: S0' zc, S1' k0, S2' k1, S3' k2, C4' k3
        consts = {
            "u1": b.const(0, f"g1{tag}"),
            "u2": b.const(0, f"g2{tag}"),
            "x": b.const(0, f"x{tag}"),
            "y": b.const(0, f"y{tag}"),
            "v0": b.const(0, f"scratch{tag}"),
            "P": b.const(0, f"P{tag}"),
        }
        _propagate_block(b, a, bb, consts)
        m0 = b.const(0, f"or{tag}")
        b.gate(GateKind.BJN, k[0], k[1], m0, stage=STAGE_DETECTION)
        b.gate(GateKind.PG, k[2], m0, k[3], stage=STAGE_DETECTION)
        # k3 now holds the carry-independent generate signal
        w = [b.const(0, f"w{i}{tag}") for i in (1, 2, 3)]
        b.gate(GateKind.PG, rca_in, zc, w[0], stage=STAGE_DETECTION)
        b.gate(GateKind.PG, w[0], k[0], w[1], stage=STAGE_DETECTION)
        b.gate(GateKind.PG, w[1], k[1], w[2], stage=STAGE_DETECTION)
        b.gate(GateKind.FG, w[2], k[2], stage=STAGE_DETECTION)
        # zc/k0/k1/k2 now hold the true sum bits (raw sum + incoming carry)
        b.gate(GateKind.MF, consts["P"], mux_in, k[3], stage=STAGE_DETECTION)
        z0 = b.const(0, f"dCnext{tag}")
        z1 = b.const(0, f"dCskip{tag}")
        b.gate(GateKind.DFG, k[3], z0, z1, stage=STAGE_DETECTION)
        n0 = b.const(0, f"c2{tag}")
        n1 = b.const(0, f"c3{tag}")
        b.gate(GateKind.PG, k[3], k[0], n0, stage=STAGE_CORRECTION)
        b.gate(GateKind.HNG, k[1], k[3], n0, n1, stage=STAGE_CORRECTION)
        b.gate(GateKind.FG, n1, k[2], stage=STAGE_CORRECTION)
        b.name(f"S0{tag}", zc)
        b.name(f"S1{tag}", k[0])
        b.name(f"S2{tag}", n0)
        b.name(f"S3{tag}", k[2])
        rca_in, mux_in, dc_out = z0, z1, z0
    b.name("dC", dc_out)
    for j in range(n):
        b.restore(*a_lines[j], *b_lines[j])
    return b.build()


# -- design registry ---------------------------------------------------------

DESIGN_BUILDERS = {
    "scl": lambda n=1: build_scl(),
    "pdfa": lambda n=1: build_pdfa(),
    "dec-rca": build_dec_rca,
    "dec-csk": build_dec_csk,
}

ADDER_DESIGNS = ("dec-rca", "dec-csk")


def build_design(name: str, digits: int = 1) -> Netlist:
    """Build any registered design by its registry name."""
    try:
        builder = DESIGN_BUILDERS[name]
    except KeyError:
        raise InvalidArgumentError(
            f"unknown design {name!r}; known: {', '.join(sorted(DESIGN_BUILDERS))}"
        )
    if name in ("scl", "pdfa") and digits != 1:
        raise InvalidArgumentError(f"design {name!r} is single-digit only")
    return builder(digits)
