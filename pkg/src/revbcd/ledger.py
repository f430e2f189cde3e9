"""BCD codec and the transaction-ledger demonstration.

Monetary amounts are carried as integer minor units (cents), never as
binary floating point, so per-group totals are exact.  Group sums are
folded through a simulated BCD adder netlist and cross-checked against
native integer arithmetic; the verification summary records group count,
adder invocations, and any mismatches.
"""

from __future__ import annotations

import csv
import random
import re
from dataclasses import dataclass, field
from pathlib import Path

from .designs import ADDER_DESIGNS, adder_input_lines, build_design
from .errors import CapacityError, InvalidArgumentError, InvalidBCDError, LedgerFormatError
from .simulator import CompiledNetlist, compile_netlist

DEFAULT_WIDTH = 16  # digits; headroom for folded sums of thousands of rows


@dataclass(frozen=True)
class DigitVector:
    """Little-endian BCD digits with a fixed digit capacity."""

    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        for d in self.digits:
            if not 0 <= d <= 9:
                raise InvalidBCDError(f"digit {d!r} outside 0..9")

    @property
    def width(self) -> int:
        return len(self.digits)


def encode(amount: int, width: int) -> DigitVector:
    """Decimal digits of `amount`, least significant first, zero padded."""
    if width < 1:
        raise InvalidArgumentError("width must be at least 1")
    if amount < 0 or amount >= 10**width:
        raise CapacityError(f"{amount} does not fit in {width} BCD digits")
    return DigitVector(tuple((amount // 10**j) % 10 for j in range(width)))


def decode(vector: DigitVector) -> int:
    return sum(d * 10**j for j, d in enumerate(vector.digits))


_ADDER_CACHE: dict[tuple[str, int], CompiledNetlist] = {}


def _adder(design: str, width: int) -> CompiledNetlist:
    if design not in ADDER_DESIGNS:
        raise InvalidArgumentError(
            f"unknown adder design {design!r}; known: {', '.join(ADDER_DESIGNS)}"
        )
    key = (design, width)
    if key not in _ADDER_CACHE:
        _ADDER_CACHE[key] = compile_netlist(build_design(design, width))
    return _ADDER_CACHE[key]


def bcd_add(
    a: DigitVector, b: DigitVector, design: str = "dec-rca", cin: int = 0
) -> tuple[DigitVector, int]:
    """Add two digit vectors by simulating the chosen adder netlist.

    Returns (sum mod 10^width, carry bit).  The arithmetic is done by the
    gate-level circuit; nothing here computes the sum natively.
    """
    if a.width != b.width:
        raise InvalidArgumentError(f"width mismatch: {a.width} vs {b.width}")
    compiled = _adder(design, a.width)
    a_lines, b_lines, cin_line = adder_input_lines(a.width)
    state = compiled.fresh_state()
    for j in range(a.width):
        da, db = a.digits[j], b.digits[j]
        for i in range(4):
            state[a_lines[j][i]] = (da >> i) & 1
            state[b_lines[j][i]] = (db >> i) & 1
    state[cin_line] = cin
    compiled.run_state(state)
    named = {name: state[line] for name, line in compiled.named}
    digits = tuple(
        sum(named[f"S{i}.{j}"] << i for i in range(4)) for j in range(a.width)
    )
    return DigitVector(digits), named["dC"]


# -- CSV ingestion ------------------------------------------------------------


@dataclass(frozen=True)
class LedgerRecord:
    group: str
    amount_cents: int


@dataclass(frozen=True)
class CsvConfig:
    """Schema for the configurable transaction CSV.

    negative_mode selects what happens to rows with negative amounts:
    "magnitude" keeps the absolute value (the withdrawals use case),
    "skip" drops the row, "error" rejects it.
    """

    group_column: str
    amount_column: str
    delimiter: str = ","
    strict: bool = True
    negative_mode: str = "magnitude"


@dataclass
class IngestDiagnostics:
    rows_read: int = 0
    rows_kept: int = 0
    skipped: list[tuple[int, str]] = field(default_factory=list)


_AMOUNT_RE = re.compile(r"^(-)?\$?(-)?(\d{1,3}(?:,\d{3})*|\d+)(?:\.(\d{1,2}))?$")


def parse_amount(text: str) -> int:
    """Parse "$12.34", "12.34", "-5.00", "1,234.5" to signed cents."""
    m = _AMOUNT_RE.match(text.strip())
    if not m:
        raise LedgerFormatError(f"malformed amount {text!r}")
    neg1, neg2, whole, frac = m.groups()
    if neg1 and neg2:
        raise LedgerFormatError(f"malformed amount {text!r}")
    cents = int(whole.replace(",", "")) * 100
    if frac:
        cents += int(frac.ljust(2, "0"))
    return -cents if (neg1 or neg2) else cents


def ingest_csv(
    path: str | Path, config: CsvConfig
) -> tuple[list[LedgerRecord], IngestDiagnostics]:
    """Parse ledger rows from a CSV file with a required header.

    Strict mode aborts at the first bad row; lenient mode skips bad rows
    and counts them in the diagnostics, with 1-based data row numbers.
    """
    path = Path(path)
    diags = IngestDiagnostics()
    records: list[LedgerRecord] = []
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle, delimiter=config.delimiter)
        header = reader.fieldnames
        if header is None:
            raise LedgerFormatError("file has no header row")
        for col in (config.group_column, config.amount_column):
            if col not in header:
                raise LedgerFormatError(
                    f"column {col!r} not in header {header}"
                )
        for row_no, row in enumerate(reader, start=1):
            diags.rows_read += 1
            try:
                group = (row[config.group_column] or "").strip()
                if not group:
                    raise LedgerFormatError("empty group key", row_no)
                raw = row[config.amount_column]
                if raw is None:
                    raise LedgerFormatError("missing amount field", row_no)
                cents = parse_amount(raw)
                if cents < 0:
                    if config.negative_mode == "magnitude":
                        cents = -cents
                    elif config.negative_mode == "skip":
                        diags.skipped.append((row_no, "negative amount"))
                        continue
                    else:
                        raise LedgerFormatError("negative amount", row_no)
                records.append(LedgerRecord(group, cents))
                diags.rows_kept += 1
            except LedgerFormatError as exc:
                if config.strict:
                    if exc.row is None:
                        raise LedgerFormatError(str(exc), row_no) from exc
                    raise
                diags.skipped.append((row_no, str(exc)))
    return records, diags


# -- group summation -----------------------------------------------------------


@dataclass
class LedgerReport:
    """Per-group BCD totals plus the native-arithmetic verification."""

    totals: dict[str, int]
    native: dict[str, int]
    additions: int
    mismatches: list[str]
    design: str
    width: int

    @property
    def groups(self) -> int:
        return len(self.totals)

    @property
    def verified(self) -> bool:
        return not self.mismatches

    def summary(self) -> dict[str, int]:
        return {
            "groups": self.groups,
            "additions": self.additions,
            "mismatches": len(self.mismatches),
        }


def sum_ledger(
    records: list[LedgerRecord],
    design: str = "dec-rca",
    width: int = DEFAULT_WIDTH,
) -> LedgerReport:
    """Left-fold each group's amounts through the simulated adder.

    Raises CapacityError naming the group if a fold overflows the digit
    width; group order in the report is sorted by key.
    """
    grouped: dict[str, list[int]] = {}
    for rec in records:
        if rec.amount_cents >= 10**width:
            raise CapacityError(
                f"group {rec.group!r}: amount {rec.amount_cents} "
                f"exceeds {width} digits"
            )
        grouped.setdefault(rec.group, []).append(rec.amount_cents)

    totals: dict[str, int] = {}
    native: dict[str, int] = {}
    mismatches: list[str] = []
    additions = 0
    for group in sorted(grouped):
        amounts = grouped[group]
        acc = encode(amounts[0], width)
        for value in amounts[1:]:
            acc, carry = bcd_add(acc, encode(value, width), design)
            additions += 1
            if carry:
                raise CapacityError(
                    f"group {group!r}: running total overflowed "
                    f"{width} digits"
                )
        totals[group] = decode(acc)
        native[group] = sum(amounts)
        if totals[group] != native[group]:
            mismatches.append(group)
    return LedgerReport(totals, native, additions, mismatches, design, width)


# -- synthetic data -------------------------------------------------------------


def generate_synthetic_csv(
    path: str | Path,
    rows: int = 2000,
    groups: int = 800,
    seed: int = 0,
) -> Path:
    """Write a reproducible transactions file for tests and demos.

    Columns: client_id, card_id, date, amount.  Amounts mix bare, dollar
    prefixed, and negative (debit) renderings.
    """
    rng = random.Random(seed)
    path = Path(path)
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["client_id", "card_id", "date", "amount"])
        for k in range(rows):
            client = f"u{rng.randrange(groups):04d}"
            card = f"c{rng.randrange(3)}"
            date = f"201{rng.randrange(10)}-{rng.randrange(1, 13):02d}-{rng.randrange(1, 29):02d}"
            cents = rng.randrange(1, 10_000_00)
            text = f"{cents // 100}.{cents % 100:02d}"
            style = rng.randrange(3)
            if style == 1:
                text = "$" + text
            elif style == 2:
                text = "-" + text
            writer.writerow([client, card, date, text])
    return path
