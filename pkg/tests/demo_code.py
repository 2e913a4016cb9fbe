"""Golden data for the bundled demo code.

A rate-3/4 classical convolutional code over GF(4) imported into a
four-qubit quantum generator set, expanded by two, orthogonalized into
two ebit pairs and encoded over eight-qubit frames. Every matrix here is
pinned by the package's regression history; the circuit lists at the
bottom are the hand-published versions of the encoder and decoder for
this code (see test_acceptance for what holds and what fails for them).
"""

from eaqconv import (
    AddMultiple,
    CheckMatrix,
    Circuit,
    ControlledZ,
    FiniteCNOT,
    GF4Matrix,
    Hadamard,
    InfiniteCNOT,
    Phase,
    PolyMatrix,
    ScaleRow,
    SwapRows,
    poly,
    rat,
)
from eaqconv.formats import parse_gf4_poly

# the classical generator: frames |1 W 1 0|1 1 0 1|
GF4_ROW = GF4Matrix(
    [[parse_gf4_poly(s) for s in ("1+D", "W+D", "1", "D")]]
)

# imported quantum generators |ZXZI|ZZIZ| and |XYXI|XXIX|
IMPORTED = CheckMatrix.from_entries(
    [["1+D", "D", "1", "D"], ["0", "1", "0", "0"]],
    [["0", "1", "0", "0"], ["1+D", "1+D", "1", "D"]],
)

OMEGA = PolyMatrix.from_entries(
    [["D+D^-1", "D^-1"], ["D", "D+D^-1"]]
)

EXPANDED_Z = [
    ["1", "0", "1", "0", "1", "1", "0", "1"],
    ["0", "1", "0", "0", "0", "0", "0", "0"],
    ["D", "D", "0", "D", "1", "0", "1", "0"],
    ["0", "0", "0", "0", "0", "1", "0", "0"],
]
EXPANDED_X = [
    ["0", "1", "0", "0", "0", "0", "0", "0"],
    ["1", "1", "1", "0", "1", "1", "0", "1"],
    ["0", "0", "0", "0", "0", "1", "0", "0"],
    ["D", "D", "0", "D", "1", "1", "1", "0"],
]
EXPANDED = CheckMatrix.from_entries(EXPANDED_Z, EXPANDED_X)

OMEGA_EXPANDED = PolyMatrix.from_entries(
    [
        ["0", "0", "1+D^-1", "D^-1"],
        ["0", "0", "1", "1+D^-1"],
        ["1+D", "1", "0", "0"],
        ["D", "1+D", "0", "0"],
    ]
)

# the orthogonalized generators, published transposed; rows below are the
# columns of that presentation
_STD_ZT = [
    ["0", "D", "1", "(D^2+D)/(D^2+D+1)"],
    ["1", "D", "D^-1+1", "(D^2+D)/(D^2+D+1)"],
    ["0", "0", "1", "0"],
    ["0", "D", "0", "(D^2+D)/(D^2+D+1)"],
    ["0", "1", "1", "(D+1)/(D^2+D+1)"],
    ["0", "0", "1", "(1)/(D^2+D+1)"],
    ["0", "1", "0", "(D+1)/(D^2+D+1)"],
    ["0", "0", "1", "0"],
]
_STD_XT = [
    ["1", "0", "1+D^-1", "(D)/(D^2+D+1)"],
    ["1", "0", "D^-1", "(D)/(D^2+D+1)"],
    ["1", "0", "1+D^-1", "0"],
    ["0", "0", "0", "(D)/(D^2+D+1)"],
    ["1", "0", "1+D^-1", "(1)/(D^2+D+1)"],
    ["1", "1", "1+D^-1", "(D)/(D^2+D+1)"],
    ["0", "0", "0", "(1)/(D^2+D+1)"],
    ["1", "0", "1+D^-1", "0"],
]
STANDARD = CheckMatrix(
    8,
    PolyMatrix.from_entries(_STD_ZT).transpose(),
    PolyMatrix.from_entries(_STD_XT).transpose(),
)

# the published row-operation order, positionally: rotate generators two
# and three to the front, decouple, then normalise the second pair
PUBLISHED_OPS = (
    SwapRows(0, 1),
    SwapRows(1, 2),
    AddMultiple(3, 1, rat("1+D")),
    AddMultiple(2, 0, rat("D^-1+1")),
    ScaleRow(3, rat("(1)/(1+D+D^2)")),
)

# unencoded stream for c=2, a=0, k=4, n=8: two receiver columns first
INITIAL_Z = [
    [1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
]
INITIAL_X = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
]
INITIAL = CheckMatrix.from_entries(INITIAL_Z, INITIAL_X)

RATE = ("3/4", "1/4")


def _C(a, b, f):
    return FiniteCNOT(a, b, poly(f))


def _H(*qs):
    return [Hadamard(q) for q in qs]


def _Hrange(a, b):
    return [Hadamard(q) for q in range(a, b + 1)]


def published_encoder(s_gate="cz") -> Circuit:
    """The hand-published encoder; the two-qubit gate written S(2,3) is
    read as a controlled-Z by default, with 'swap' as the alternate."""
    if s_gate == "cz":
        s23 = [ControlledZ(2, 3)]
    elif s_gate == "swap":
        s23 = [_C(2, 3, "1"), _C(3, 2, "1"), _C(2, 3, "1")]
    else:
        raise ValueError(s_gate)
    gates = (
        [_C(1, 4, "D+D^2"), _C(1, 5, "1+D^2"), _C(1, 6, "1"), _C(1, 7, "1+D"),
         _C(2, 4, "D"), _C(2, 5, "1+D"), _C(2, 6, "1")]
        + _Hrange(3, 8)
        + [_C(1, 4, "D+D^2+D^4"), _C(1, 5, "D^2"), _C(1, 6, "1+D"), _C(1, 7, "D^2"),
           _C(2, 4, "D+D^2"), _C(2, 5, "1+D"), _C(2, 6, "1"), _C(2, 7, "1+D")]
        + _H(1, 2)
        + [InfiniteCNOT(1, rat("(1)/(1+D^-1+D^-2)")),
           InfiniteCNOT(2, rat("(1)/(1+D^-1+D^-2)"))]
        + _H(1, 2)
        + published_encoder_suffix(s23)
    )
    return Circuit(n=8, c=2, gates=tuple(gates))


def published_encoder_suffix(s23) -> list:
    return (
        _H(1, 2)
        + [_C(2, 3, "1"), _C(2, 5, "1"), _C(2, 6, "1"), _C(2, 8, "1"), Phase(2)]
        + _Hrange(3, 8)
        + list(s23)
        + [_C(1, 2, "1"), _C(1, 3, "1"), _C(1, 5, "1"), _C(1, 6, "1"), _C(1, 8, "1"),
           Phase(2)]
    )


def published_decoder(s_gate="cz") -> Circuit:
    if s_gate == "cz":
        s23 = [ControlledZ(2, 3)]
    else:
        s23 = [_C(2, 3, "1"), _C(3, 2, "1"), _C(2, 3, "1")]
    gates = (
        list(reversed(published_encoder_suffix(s23)))
        + [_C(-1, 4, "D+D^2+D^4"), _C(-1, 5, "D^2"), _C(-1, 6, "1+D"), _C(-1, 7, "D^2"),
           _C(-2, 4, "D+D^2"), _C(-2, 5, "1+D"), _C(-2, 6, "1"), _C(-2, 7, "1+D")]
        + _Hrange(3, 8)
        + [_C(-1, 4, "D+D^2"), _C(-1, 5, "1+D^2"), _C(-1, 6, "1"), _C(-1, 7, "1+D"),
           _C(-2, 4, "D"), _C(-2, 5, "1+D"), _C(-2, 6, "1")]
    )
    return Circuit(n=8, c=2, gates=tuple(gates))


# the simplest expansion exercise: one generator, X then Z
SIMPLE = CheckMatrix.from_entries([["D"]], [["1"]])
SIMPLE_TWO_EXPANDED = CheckMatrix.from_entries(
    [["0", "1"], ["D", "0"]], [["1", "0"], ["0", "1"]]
)
SIMPLE_THREE_EXPANDED = CheckMatrix.from_entries(
    [["0", "1", "0"], ["0", "0", "1"], ["D", "0", "0"]],
    [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
)
SIMPLE_STD = CheckMatrix.from_entries(
    [["0", "1"], ["(D)/(1+D)", "0"]], [["1", "0"], ["0", "(1)/(1+D)"]]
)

# the three-qubit single-generator commuting code |XXX|XZY|
VALID_CODE = CheckMatrix.from_entries([["0", "D", "D"]], [["1+D", "1", "1+D"]])
