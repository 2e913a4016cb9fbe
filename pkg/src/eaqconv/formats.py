"""Text and JSON artifact formats.

Every artifact is plain text with an optional provenance comment header
(lines starting with '#'), parses back through this module, and contains
nothing run-dependent, so identical inputs give byte-identical files.

  check matrix   frames=<n> generators=<r>
                 z: p1, ..., pn | x: q1, ..., qn        (one line per row)
  GF(4) code     gf4 cols=<n> rows=<r>
                 comma-separated GF(4) polynomials, coefficients 0,1,w,W
  Pauli set      pauli frames=<n>
                 |XXX|XZY|                               (one line per row)
  GS result      a check matrix, then '# ops:' with one operation per line
                 (swap i j | scale i (c) | add i j (c), 1-based), then a
                 trailer line  l=<l> c=<c> a=<a>
  circuit        frames=<n> receiver=<c>, then one gate per line:
                 CNOT <src> <dst> <poly> | H <q> | H <q1>..<q2> | P <q>
                 [<poly>] | CZ <q1> <q2> [<poly>] | ICNOT <q> (<p>)/(<q>)
                 Receiver qubits are written B1..Bc.
"""

from __future__ import annotations

import json
import re
from typing import Sequence

from .circuit import (
    Circuit,
    ControlledZ,
    FiniteCNOT,
    Gate,
    Hadamard,
    InfiniteCNOT,
    Phase,
    qubit_label,
)
from .errors import PolyParseError
from .gram_schmidt import GSResult
from .matrix import PolyMatrix
from .pauli import CheckMatrix, GF4Matrix, GF4Poly, PauliFrameSeq
from .poly import (
    LaurentPoly,
    RationalPoly,
    format_laurent,
    format_rational,
    parse_laurent,
    parse_rational,
)
from .symplectic import AddMultiple, RowOp, ScaleRow, SwapRows


def _body_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((lineno, line))
    return out


def sniff_kind(text: str) -> str:
    """One of 'gf4', 'pauli', 'checkmatrix' based on the header line."""
    lines = _body_lines(text)
    if not lines:
        raise PolyParseError("empty file", line=1)
    head = lines[0][1]
    if head.startswith("gf4"):
        return "gf4"
    if head.startswith("pauli"):
        return "pauli"
    if head.startswith("frames="):
        return "checkmatrix"
    raise PolyParseError(f"unrecognised header {head!r}", line=lines[0][0])


# ---------------------------------------------------------------------------
# check matrix


def format_check_matrix(h: CheckMatrix, stage: str | None = None) -> str:
    lines = []
    if stage:
        lines.append(f"# stage: {stage}")
    lines.append(f"frames={h.n} generators={h.r}")
    for i in range(h.r):
        zr, xr = h.row(i)
        lines.append(
            "z: "
            + ", ".join(format_rational(e) for e in zr)
            + " | x: "
            + ", ".join(format_rational(e) for e in xr)
        )
    return "\n".join(lines) + "\n"


_HEADER_RE = re.compile(r"frames=(\d+) generators=(\d+)$")
_ROW_RE = re.compile(r"z:(.*)\|\s*x:(.*)$")


def _parse_check_rows(
    lines: list[tuple[int, str]], n: int, r: int
) -> tuple[PolyMatrix, PolyMatrix]:
    if len(lines) < r:
        raise PolyParseError(f"expected {r} generator lines, found {len(lines)}")
    z_rows, x_rows = [], []
    for lineno, line in lines[:r]:
        m = _ROW_RE.match(line)
        if not m:
            raise PolyParseError("generator line must look like 'z: ... | x: ...'", line=lineno)
        try:
            zr = [parse_rational(p) for p in m.group(1).split(",")]
            xr = [parse_rational(p) for p in m.group(2).split(",")]
        except PolyParseError as exc:
            raise PolyParseError(f"bad polynomial: {exc}", line=lineno) from exc
        if len(zr) != n or len(xr) != n:
            raise PolyParseError(
                f"expected {n} entries per side, found {len(zr)}|{len(xr)}", line=lineno
            )
        z_rows.append(zr)
        x_rows.append(xr)
    return PolyMatrix(z_rows), PolyMatrix(x_rows)


def parse_check_matrix(text: str) -> CheckMatrix:
    lines = _body_lines(text)
    if not lines:
        raise PolyParseError("empty check matrix file", line=1)
    m = _HEADER_RE.match(lines[0][1])
    if not m:
        raise PolyParseError("expected header 'frames=<n> generators=<r>'", line=lines[0][0])
    n, r = int(m.group(1)), int(m.group(2))
    if r == 0:
        raise PolyParseError("empty generator list", line=lines[0][0])
    z, x = _parse_check_rows(lines[1:], n, r)
    return CheckMatrix(n, z, x)


# ---------------------------------------------------------------------------
# GF(4)

_GF4_HEADER_RE = re.compile(r"gf4 cols=(\d+) rows=(\d+)$")
_GF4_TERM_RE = re.compile(r"([01wW]?)(?:D(?:\^(-?\d+))?)?")


def format_gf4_matrix(hc: GF4Matrix, stage: str | None = None) -> str:
    lines = []
    if stage:
        lines.append(f"# stage: {stage}")
    lines.append(f"gf4 cols={hc.ncols} rows={hc.nrows}")
    for row in hc.rows:
        lines.append(", ".join(str(e) for e in row))
    return "\n".join(lines) + "\n"


def parse_gf4_poly(text: str, lineno: int | None = None) -> GF4Poly:
    stripped = "".join(text.split())
    if not stripped:
        raise PolyParseError("empty GF(4) polynomial", line=lineno)
    if stripped == "0":
        return GF4Poly.zero()
    symbols: list[tuple[str, int]] = []
    for pos, term in enumerate(stripped.split("+")):
        m = _GF4_TERM_RE.fullmatch(term)
        if not m or not term:
            raise PolyParseError(f"bad GF(4) term {term!r}", pos=pos, line=lineno)
        coeff, exp = m.group(1), m.group(2)
        has_d = "D" in term
        if not coeff:
            coeff = "1"
            if not has_d:
                raise PolyParseError(f"bad GF(4) term {term!r}", pos=pos, line=lineno)
        if coeff == "0":
            continue
        e = 0 if not has_d else (1 if exp is None else int(exp))
        symbols.append((coeff, e))
    return GF4Poly.from_symbols(symbols)


def parse_gf4_matrix(text: str) -> GF4Matrix:
    lines = _body_lines(text)
    if not lines:
        raise PolyParseError("empty GF(4) file", line=1)
    m = _GF4_HEADER_RE.match(lines[0][1])
    if not m:
        raise PolyParseError("expected header 'gf4 cols=<n> rows=<r>'", line=lines[0][0])
    n, r = int(m.group(1)), int(m.group(2))
    if r == 0:
        raise PolyParseError("empty generator list", line=lines[0][0])
    if len(lines) - 1 < r:
        raise PolyParseError(f"expected {r} rows, found {len(lines) - 1}")
    rows = []
    for lineno, line in lines[1 : r + 1]:
        entries = line.split(",")
        if len(entries) != n:
            raise PolyParseError(f"expected {n} entries, found {len(entries)}", line=lineno)
        rows.append([parse_gf4_poly(e, lineno) for e in entries])
    return GF4Matrix(rows)


# ---------------------------------------------------------------------------
# Pauli sequences

_PAULI_HEADER_RE = re.compile(r"pauli frames=(\d+)$")


def format_pauli_seqs(seqs: Sequence[PauliFrameSeq], stage: str | None = None) -> str:
    lines = []
    if stage:
        lines.append(f"# stage: {stage}")
    n = seqs[0].frame_size
    lines.append(f"pauli frames={n}")
    for s in seqs:
        body = "|" + "|".join(s.frames) + "|" if s.frames else "|" + "I" * n + "|"
        if s.start_offset:
            body += f" offset={s.start_offset}"
        lines.append(body)
    return "\n".join(lines) + "\n"


def parse_pauli_seqs(text: str) -> list[PauliFrameSeq]:
    lines = _body_lines(text)
    if not lines:
        raise PolyParseError("empty Pauli file", line=1)
    m = _PAULI_HEADER_RE.match(lines[0][1])
    if not m:
        raise PolyParseError("expected header 'pauli frames=<n>'", line=lines[0][0])
    n = int(m.group(1))
    if len(lines) == 1:
        raise PolyParseError("empty generator list", line=lines[0][0])
    seqs = []
    for lineno, line in lines[1:]:
        offset = 0
        if " offset=" in line:
            line, _, tail = line.partition(" offset=")
            offset = int(tail)
        body = line.strip().strip("|")
        frames = body.split("|") if body else []
        try:
            seqs.append(PauliFrameSeq(n, frames, offset))
        except ValueError as exc:
            raise PolyParseError(str(exc), line=lineno) from exc
    return seqs


# ---------------------------------------------------------------------------
# row operations and GS results

_OPS_MARK = "# ops:"
_TRAILER_RE = re.compile(r"l=(\d+) c=(\d+) a=(\d+)$")


def format_row_op(op: RowOp) -> str:
    if isinstance(op, SwapRows):
        return f"swap {op.i + 1} {op.j + 1}"
    if isinstance(op, ScaleRow):
        return f"scale {op.i + 1} ({format_rational(op.c)})"
    if isinstance(op, AddMultiple):
        return f"add {op.i + 1} {op.j + 1} ({format_rational(op.c)})"
    raise TypeError(f"unknown row operation {op!r}")


def _unwrap_parens(tok: str) -> str:
    if tok.startswith("(") and tok.endswith(")"):
        return tok[1:-1]
    return tok


def parse_row_op(line: str, lineno: int | None = None) -> RowOp:
    parts = line.split(None, 3)
    try:
        if parts[0] == "swap" and len(parts) == 3:
            return SwapRows(int(parts[1]) - 1, int(parts[2]) - 1)
        if parts[0] == "scale" and len(parts) == 3:
            return ScaleRow(int(parts[1]) - 1, parse_rational(_unwrap_parens(parts[2])))
        if parts[0] == "add" and len(parts) == 4:
            return AddMultiple(
                int(parts[1]) - 1,
                int(parts[2]) - 1,
                parse_rational(_unwrap_parens(parts[3])),
            )
    except (ValueError, IndexError, PolyParseError) as exc:
        raise PolyParseError(f"bad row operation {line!r}: {exc}", line=lineno) from exc
    raise PolyParseError(f"bad row operation {line!r}", line=lineno)


def format_gs_result(gs: GSResult, stage: str = "gs") -> str:
    out = format_check_matrix(gs.h_std, stage=stage)
    out += _OPS_MARK + "\n"
    for op in gs.ops:
        out += format_row_op(op) + "\n"
    out += f"l={gs.l} c={gs.c} a={gs.a}\n"
    return out


def parse_gs_result(text: str) -> GSResult:
    head, _, tail = text.partition(_OPS_MARK)
    if not tail:
        raise PolyParseError("missing '# ops:' section")
    h = parse_check_matrix(head)
    ops: list[RowOp] = []
    l = c = a = None
    for lineno, line in _body_lines(tail):
        m = _TRAILER_RE.match(line)
        if m:
            l, c, a = (int(g) for g in m.groups())
            break
        ops.append(parse_row_op(line, lineno))
    if l is None:
        raise PolyParseError("missing 'l=<l> c=<c> a=<a>' trailer")
    return GSResult(h_std=h, ops=tuple(ops), l=l, c=c, a=a, k=h.n - h.r)


# ---------------------------------------------------------------------------
# circuits

_CIRCUIT_HEADER_RE = re.compile(r"frames=(\d+) receiver=(\d+)$")
_H_RANGE_RE = re.compile(r"(\d+)\.\.(\d+)$")


def _parse_qubit(tok: str, lineno: int | None) -> int:
    if tok.startswith("B"):
        try:
            return -int(tok[1:])
        except ValueError:
            raise PolyParseError(f"bad receiver qubit {tok!r}", line=lineno) from None
    try:
        return int(tok)
    except ValueError:
        raise PolyParseError(f"bad qubit {tok!r}", line=lineno) from None


def format_gate(g: Gate) -> str:
    if isinstance(g, FiniteCNOT):
        return f"CNOT {qubit_label(g.src)} {qubit_label(g.dst)} {format_laurent(g.f)}"
    if isinstance(g, Hadamard):
        return f"H {qubit_label(g.q)}"
    if isinstance(g, Phase):
        if g.f.is_one():
            return f"P {qubit_label(g.q)}"
        return f"P {qubit_label(g.q)} {format_laurent(g.f)}"
    if isinstance(g, ControlledZ):
        base = f"CZ {qubit_label(g.q1)} {qubit_label(g.q2)}"
        return base if g.f.is_one() else f"{base} {format_laurent(g.f)}"
    if isinstance(g, InfiniteCNOT):
        return (
            f"ICNOT {qubit_label(g.q)} "
            f"({format_laurent(g.g.num)})/({format_laurent(g.g.den)})"
        )
    raise TypeError(f"unknown gate {g!r}")


def format_circuit(circ: Circuit, stage: str | None = None) -> str:
    lines = []
    if stage:
        lines.append(f"# stage: {stage}")
    lines.append(f"frames={circ.n} receiver={circ.c}")
    lines.extend(format_gate(g) for g in circ.gates)
    return "\n".join(lines) + "\n"


def parse_gate_line(line: str, lineno: int | None = None) -> list[Gate]:
    parts = line.split()
    kind = parts[0].upper()
    try:
        if kind == "CNOT" and len(parts) == 4:
            return [
                FiniteCNOT(
                    _parse_qubit(parts[1], lineno),
                    _parse_qubit(parts[2], lineno),
                    parse_laurent(parts[3]),
                )
            ]
        if kind == "H" and len(parts) == 2:
            m = _H_RANGE_RE.match(parts[1])
            if m:
                lo, hi = int(m.group(1)), int(m.group(2))
                return [Hadamard(q) for q in range(lo, hi + 1)]
            return [Hadamard(_parse_qubit(parts[1], lineno))]
        if kind == "P" and len(parts) in (2, 3):
            f = parse_laurent(parts[2]) if len(parts) == 3 else LaurentPoly.one()
            return [Phase(_parse_qubit(parts[1], lineno), f)]
        if kind == "CZ" and len(parts) in (3, 4):
            f = parse_laurent(parts[3]) if len(parts) == 4 else LaurentPoly.one()
            return [
                ControlledZ(
                    _parse_qubit(parts[1], lineno), _parse_qubit(parts[2], lineno), f
                )
            ]
        if kind == "ICNOT" and len(parts) == 3:
            return [InfiniteCNOT(_parse_qubit(parts[1], lineno), parse_rational(parts[2]))]
    except (PolyParseError, ValueError) as exc:
        raise PolyParseError(f"bad gate line {line!r}: {exc}", line=lineno) from exc
    raise PolyParseError(f"bad gate line {line!r}", line=lineno)


def parse_circuit(text: str) -> Circuit:
    lines = _body_lines(text)
    if not lines:
        raise PolyParseError("empty circuit file", line=1)
    m = _CIRCUIT_HEADER_RE.match(lines[0][1])
    if not m:
        raise PolyParseError("expected header 'frames=<n> receiver=<c>'", line=lines[0][0])
    n, c = int(m.group(1)), int(m.group(2))
    gates: list[Gate] = []
    for lineno, line in lines[1:]:
        gates.extend(parse_gate_line(line, lineno))
    return Circuit(n=n, c=c, gates=tuple(gates))


# ---------------------------------------------------------------------------
# JSON mirrors


def check_matrix_to_json(h: CheckMatrix) -> dict:
    return {
        "kind": "check_matrix",
        "frames": h.n,
        "generators": h.r,
        "rows": [
            {
                "z": [format_rational(e) for e in h.z.rows[i]],
                "x": [format_rational(e) for e in h.x.rows[i]],
            }
            for i in range(h.r)
        ],
    }


def check_matrix_from_json(data: dict) -> CheckMatrix:
    z = PolyMatrix.from_entries([[parse_rational(e) for e in row["z"]] for row in data["rows"]])
    x = PolyMatrix.from_entries([[parse_rational(e) for e in row["x"]] for row in data["rows"]])
    return CheckMatrix(data["frames"], z, x)


def row_op_to_json(op: RowOp) -> dict:
    if isinstance(op, SwapRows):
        return {"op": "swap", "i": op.i + 1, "j": op.j + 1}
    if isinstance(op, ScaleRow):
        return {"op": "scale", "i": op.i + 1, "c": format_rational(op.c)}
    return {"op": "add", "i": op.i + 1, "j": op.j + 1, "c": format_rational(op.c)}


def gs_result_to_json(gs: GSResult) -> dict:
    data = check_matrix_to_json(gs.h_std)
    data["kind"] = "gs_result"
    data["ops"] = [row_op_to_json(op) for op in gs.ops]
    data.update(l=gs.l, c=gs.c, a=gs.a, k=gs.k)
    return data


def circuit_to_json(circ: Circuit) -> dict:
    return {
        "kind": "circuit",
        "frames": circ.n,
        "receiver": circ.c,
        "gates": [format_gate(g) for g in circ.gates],
    }


def circuit_from_json(data: dict) -> Circuit:
    gates: list[Gate] = []
    for line in data["gates"]:
        gates.extend(parse_gate_line(line))
    return Circuit(n=data["frames"], c=data["receiver"], gates=tuple(gates))


def dump_json(data: dict) -> str:
    return json.dumps(data, indent=1) + "\n"
