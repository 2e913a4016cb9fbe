"""Command-line front end for the code-construction pipeline.

Exit codes: 0 all good, 1 verification failure, 2 convergence failure,
3 parse or configuration error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import formats
from .circuit import rate_report, verify_decoder, verify_encoder
from .errors import EaqconvError, NoConvergenceError, PolyParseError
from .gram_schmidt import GSResult, ebit_lower_bound, gram_schmidt, standard_form_check, to_finite_weight
from .pauli import CheckMatrix, binary_to_pauli, gf4_import, pauli_to_binary
from .symplectic import expand, expansion_factor_hint, omega_matrix
from .poly import format_rational
from .synthesis import synthesize_decoder, synthesize_encoder

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_CONVERGENCE = 2
EXIT_PARSE = 3


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise PolyParseError(f"cannot read {path}: {exc.strerror}") from exc


def _load_check(path: str) -> tuple[CheckMatrix, str]:
    """Returns the check matrix plus the detected input kind."""
    text = _read(path)
    kind = formats.sniff_kind(text)
    if kind == "gf4":
        return gf4_import(formats.parse_gf4_matrix(text)), kind
    if kind == "pauli":
        return pauli_to_binary(formats.parse_pauli_seqs(text)), kind
    return formats.parse_check_matrix(text), kind


def _write(path: Path, text: str, as_json: str | None = None) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)
    if as_json is not None:
        path.with_suffix(".json").write_text(as_json)


def _omega_text(h: CheckMatrix) -> str:
    om = omega_matrix(h)
    lines = [f"# stage: omega r={h.r}"]
    for row in om.rows:
        lines.append(", ".join(format_rational(e) for e in row))
    return "\n".join(lines) + "\n"


def _report_text(gs: GSResult, input_kind: str | None, source: CheckMatrix | None) -> str:
    info, ebits = rate_report(gs.k, gs.c, gs.n)
    lines = [
        "# stage: report",
        f"l={gs.l} n={gs.n} k={gs.k} c={gs.c} a={gs.a}",
        f"rate info={info} ebit={ebits}",
        f"achieved ebits per frame: {gs.c}",
        f"conjectured minimum ebits (rank/2, diagnostic only): {ebit_lower_bound(gs.h_std)}",
    ]
    if source is not None:
        lines.append(
            "conjectured minimum ebits of the unexpanded code "
            f"(diagnostic only): {ebit_lower_bound(source)}"
        )
        hint = expansion_factor_hint(source)
        if hint is not None:
            lines.append(
                f"expansion factor hint (single-generator conjecture, diagnostic only): {hint}"
            )
    if input_kind == "gf4":
        # classical [n, k]: the import doubled the generator count and the
        # search multiplied frame size and generator count by l
        n_c = gs.n // gs.l
        r_c = gs.r // (2 * gs.l)
        k_c = n_c - r_c
        lines.append(
            f"entanglement-assisted rate lower bound (2k-n)/n from the "
            f"classical [{n_c},{k_c}] code: {Fraction(2 * k_c - n_c, n_c)}"
        )
    return "\n".join(lines) + "\n"


def cmd_import(args) -> int:
    h, kind = _load_check(args.input)
    text = formats.format_check_matrix(h, stage=f"import kind={kind}")
    if args.out:
        _write(
            Path(args.out),
            text,
            formats.dump_json(formats.check_matrix_to_json(h)) if args.json else None,
        )
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_omega(args) -> int:
    h, _ = _load_check(args.input)
    text = _omega_text(h)
    sys.stdout.write(text)
    if args.out:
        _write(Path(args.out), text)
    return EXIT_OK


def cmd_expand(args) -> int:
    h, _ = _load_check(args.input)
    out = expand(h, args.l)
    text = formats.format_check_matrix(out, stage=f"expand l={args.l}")
    if args.out:
        _write(
            Path(args.out),
            text,
            formats.dump_json(formats.check_matrix_to_json(out)) if args.json else None,
        )
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_gs(args) -> int:
    h, _ = _load_check(args.input)
    gs = gram_schmidt(h, args.lmax)
    text = formats.format_gs_result(gs)
    if args.out:
        _write(
            Path(args.out),
            text,
            formats.dump_json(formats.gs_result_to_json(gs)) if args.json else None,
        )
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _load_gs(path: str) -> GSResult:
    text = _read(path)
    if formats._OPS_MARK in text:
        return formats.parse_gs_result(text)
    # a bare check matrix: recover the split from its product matrix
    h = formats.parse_check_matrix(text)
    split = standard_form_check(omega_matrix(h))
    if split is None:
        raise PolyParseError(f"{path} is not in standard form and carries no ops trailer")
    c, a = split
    return GSResult(h_std=h, ops=(), l=1, c=c, a=a, k=h.n - h.r)


def cmd_encode(args) -> int:
    gs = _load_gs(args.input)
    encoder, plan = synthesize_encoder(gs)
    decoder = synthesize_decoder(gs, plan)
    out_dir = Path(args.out) if args.out else Path(".")
    _write(
        out_dir / "encoder.txt",
        formats.format_circuit(encoder, stage="encoder"),
        formats.dump_json(formats.circuit_to_json(encoder)) if args.json else None,
    )
    _write(
        out_dir / "decoder.txt",
        formats.format_circuit(decoder, stage="decoder"),
        formats.dump_json(formats.circuit_to_json(decoder)) if args.json else None,
    )
    report = _report_text(gs, None, None)
    _write(out_dir / "report.txt", report)
    sys.stdout.write(report)
    ok_e = verify_encoder(encoder, gs.h_std, gs.c, gs.a, gs.k)
    ok_d = verify_decoder(encoder, decoder, gs.c, gs.a, gs.k, gs.n)
    if not (ok_e and ok_d):
        detail = ok_e.detail if not ok_e else ok_d.detail
        sys.stdout.write(f"verification FAIL: {detail}\n")
        return EXIT_VERIFY
    sys.stdout.write("verification PASS\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    if not args.encoder or not args.target:
        raise PolyParseError("verify needs --encoder and --target")
    encoder = formats.parse_circuit(_read(args.encoder))
    gs = _load_gs(args.target)
    outcome = verify_encoder(encoder, gs.h_std, gs.c, gs.a, gs.k)
    sys.stdout.write(f"encoder: {'PASS' if outcome else 'FAIL (' + outcome.detail + ')'}\n")
    ok = bool(outcome)
    if args.roundtrip:
        if not args.decoder:
            raise PolyParseError("--roundtrip needs --decoder")
        decoder = formats.parse_circuit(_read(args.decoder))
        outcome_d = verify_decoder(encoder, decoder, gs.c, gs.a, gs.k, gs.n)
        sys.stdout.write(
            f"roundtrip: {'PASS' if outcome_d else 'FAIL (' + outcome_d.detail + ')'}\n"
        )
        ok = ok and bool(outcome_d)
    return EXIT_OK if ok else EXIT_VERIFY


def _pipeline_one(input_path: Path, out_dir: Path, lmax: int, as_json: bool) -> int:
    h, kind = _load_check(str(input_path))

    def emit(name: str, text: str, jdata=None) -> None:
        _write(out_dir / name, text, formats.dump_json(jdata) if (as_json and jdata) else None)

    emit("01_check.txt", formats.format_check_matrix(h, stage=f"import kind={kind}"),
         formats.check_matrix_to_json(h))
    emit("02_omega.txt", _omega_text(h))
    try:
        gs = gram_schmidt(h, lmax)
    except NoConvergenceError as exc:
        sys.stdout.write(f"{input_path}: NO CONVERGENCE: {exc}\n")
        return EXIT_CONVERGENCE
    expanded = expand(h, gs.l)
    emit("03_expanded.txt", formats.format_check_matrix(expanded, stage=f"expand l={gs.l}"),
         formats.check_matrix_to_json(expanded))
    emit("03b_omega_expanded.txt", _omega_text(expanded))
    emit("04_gsresult.txt", formats.format_gs_result(gs), formats.gs_result_to_json(gs))
    finite, _ = to_finite_weight(gs.h_std)
    emit("05_measured.txt", formats.format_check_matrix(finite, stage="finite-weight generators"),
         formats.check_matrix_to_json(finite))
    encoder, plan = synthesize_encoder(gs)
    decoder = synthesize_decoder(gs, plan)
    emit("06_encoder.txt", formats.format_circuit(encoder, stage="encoder"),
         formats.circuit_to_json(encoder))
    emit("07_decoder.txt", formats.format_circuit(decoder, stage="decoder"),
         formats.circuit_to_json(decoder))
    ok_e = verify_encoder(encoder, gs.h_std, gs.c, gs.a, gs.k)
    ok_d = verify_decoder(encoder, decoder, gs.c, gs.a, gs.k, gs.n)
    verdict = "PASS" if (ok_e and ok_d) else "FAIL"
    report = _report_text(gs, kind, h)
    report += f"encoder verification: {'PASS' if ok_e else 'FAIL: ' + ok_e.detail}\n"
    report += f"decoder verification: {'PASS' if ok_d else 'FAIL: ' + ok_d.detail}\n"
    report += f"verdict: {verdict}\n"
    emit("08_report.txt", report)
    info, ebits = rate_report(gs.k, gs.c, gs.n)
    sys.stdout.write(
        f"{input_path}: l={gs.l} c={gs.c} a={gs.a} rate=({info},{ebits}) {verdict}\n"
    )
    return EXIT_OK if verdict == "PASS" else EXIT_VERIFY


def cmd_pipeline(args) -> int:
    if args.batch:
        base = Path(args.batch)
        inputs = sorted(p for p in base.iterdir() if p.is_file() and not p.name.startswith("."))
        if not inputs:
            raise PolyParseError(f"no input files in {base}")
        worst = EXIT_OK
        for p in inputs:
            out_dir = Path(args.out or "pipeline-out") / p.stem
            try:
                code = _pipeline_one(p, out_dir, args.lmax, args.json)
            except EaqconvError as exc:
                sys.stdout.write(f"{p}: ERROR: {exc}\n")
                code = EXIT_PARSE
            worst = max(worst, code)
        return worst
    if not args.input:
        raise PolyParseError("pipeline needs an input file or --batch")
    out_dir = Path(args.out or "pipeline-out")
    return _pipeline_one(Path(args.input), out_dir, args.lmax, args.json)


def cmd_report(args) -> int:
    gs = _load_gs(args.input)
    sys.stdout.write(_report_text(gs, None, None))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eaqconv",
        description=(
            "Analyse quantum convolutional generators, reduce them to "
            "ebit/ancilla standard form and synthesise verified online "
            "encoding and decoding circuits."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(fn=fn)
        return p

    p = add("import", cmd_import, "read gf4/pauli/check-matrix input, write a check matrix")
    p.add_argument("input")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")

    p = add("omega", cmd_omega, "print the shifted symplectic product matrix")
    p.add_argument("input")
    p.add_argument("--out")

    p = add("expand", cmd_expand, "expand a check matrix by a factor")
    p.add_argument("input")
    p.add_argument("-l", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")

    p = add("gs", cmd_gs, "run the symplectic orthogonalization")
    p.add_argument("input")
    p.add_argument("--lmax", type=int, default=8)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")

    p = add("encode", cmd_encode, "synthesise encoder and decoder circuits")
    p.add_argument("input", help="gs-result file (or standard-form check matrix)")
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")

    p = add("verify", cmd_verify, "verify circuits against a target code")
    p.add_argument("--encoder")
    p.add_argument("--decoder")
    p.add_argument("--target")
    p.add_argument("--roundtrip", action="store_true")

    p = add("pipeline", cmd_pipeline, "full chain: import, orthogonalize, synthesise, verify")
    p.add_argument("input", nargs="?")
    p.add_argument("--kind", choices=["gf4", "pauli", "checkmatrix"], help="informational; the header decides")
    p.add_argument("--lmax", type=int, default=8)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.add_argument("--batch", help="directory of input files, processed independently")

    p = add("report", cmd_report, "rates and diagnostics for a gs result")
    p.add_argument("input")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except NoConvergenceError as exc:
        sys.stdout.write(f"NO CONVERGENCE: {exc}\n")
        return EXIT_CONVERGENCE
    except EaqconvError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
