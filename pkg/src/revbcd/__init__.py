"""Reversible-logic BCD adder toolkit.

Gate library, line-based netlists with bit-exact simulation, structural
cost/delay analysis, two BCD adder constructions (ripple and carry-skip),
reproduction of the published cost comparison dataset with Pareto
analysis, and an exact-arithmetic transaction-ledger demonstration.
"""

from .costs import (
    Affine,
    BaselineModel,
    CostPoint,
    CostTable,
    ImprovementReport,
    MODELS,
    cost_table,
    evaluate_model,
    improvement,
    pareto_front,
    pareto_points,
    structural_discrepancy_report,
)
from .designs import (
    build_correction,
    build_dec_csk,
    build_dec_rca,
    build_design,
    build_pdfa,
    build_scl,
    build_skip_block,
    build_skip_generator,
    decimal_generate,
    decimal_propagate,
    scl_function,
    skip_carry,
)
from .errors import RevbcdError
from .gates import GateKind, gate_cost, gate_semantics, gate_truth_table
from .ledger import (
    CsvConfig,
    DigitVector,
    LedgerRecord,
    LedgerReport,
    bcd_add,
    decode,
    encode,
    generate_synthetic_csv,
    ingest_csv,
    sum_ledger,
)
from .metrics import (
    MetricReport,
    arrival_of,
    arrival_profile,
    critical_path,
    metric_decomposition,
    structural_metrics,
)
from .netlist import (
    GateInstance,
    LineRole,
    Netlist,
    append_gate,
    const_role,
    deserialize,
    designate_outputs,
    input_role,
    new_netlist,
    serialize,
)
from .simulator import (
    SimulationResult,
    check_permutation,
    run,
    run_batch,
    sample_injectivity,
    truth_table,
    verify_restored,
)

__version__ = "1.0.0"
