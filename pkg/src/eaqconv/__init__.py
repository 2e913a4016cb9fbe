"""Entanglement-assisted quantum convolutional code construction.

Exact polynomial symplectic algebra for convolutional stabilizer
generators: commutation analysis, frame expansion, the symplectic
orthogonalization that reduces any generator set to ebit/ancilla standard
form, and synthesis plus symbolic verification of online encoding and
decoding circuits.
"""

from .circuit import (
    Circuit,
    ControlledZ,
    FiniteCNOT,
    Gate,
    Hadamard,
    InfiniteCNOT,
    Phase,
    StabilizerState,
    VerifyOutcome,
    apply_circuit,
    apply_gate,
    apply_gates_to_check,
    initial_state,
    rate_report,
    receiver_augmented,
    verify_decoder,
    verify_encoder,
)
from .errors import (
    EaqconvError,
    InconsistentFrameSizeError,
    NoConvergenceError,
    PolyParseError,
    RationalEntryError,
    ReductionFailureError,
    ZeroDivisionPolyError,
    ZeroScaleError,
)
from .gram_schmidt import (
    GSResult,
    ebit_lower_bound,
    gram_schmidt,
    standard_form_check,
    to_finite_weight,
)
from .matrix import PolyMatrix
from .pauli import (
    CheckMatrix,
    GF4Matrix,
    GF4Poly,
    PauliFrameSeq,
    binary_to_pauli,
    gf4_import,
    pauli_to_binary,
)
from .poly import (
    LaurentPoly,
    RationalPoly,
    floor_fractional,
    parse_laurent,
    parse_rational,
    poly,
    rat,
)
from .symplectic import (
    AddMultiple,
    RowOp,
    RowOpRecord,
    ScaleRow,
    SwapRows,
    apply_row_ops,
    expand,
    expanded_omega,
    expansion_factor_hint,
    omega_matrix,
    shifted_symplectic_product,
)
from .synthesis import (
    EncoderPlan,
    ancilla_block_reduce,
    ebit_block_reduce,
    synthesize_decoder,
    synthesize_encoder,
)

__version__ = "0.1.0"
