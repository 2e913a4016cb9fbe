"""Acceptance criteria for the whole artifact.

Every check is exact symbolic equality (tolerance zero). Each criterion
prints one PASS/FAIL line; run with -s to see them all.

Criterion 6b is expected to fail: the hand-published encoder gate list
for the demo code does not realise the published generators under any
reading of its notation (see notes in the repository history and the
verifier diagnostics below); the synthesized circuits of criterion 7
pass every check for the same code, and the published decoder does
restore the information qubits. The failing assertion is kept faithful
rather than weakened.
"""

import random
from fractions import Fraction

import pytest

import demo_code
from eaqconv import (
    CheckMatrix,
    LaurentPoly,
    PolyMatrix,
    RationalPoly,
    apply_row_ops,
    ebit_lower_bound,
    expand,
    expanded_omega,
    floor_fractional,
    gf4_import,
    gram_schmidt,
    initial_state,
    omega_matrix,
    rate_report,
    standard_form_check,
    synthesize_decoder,
    synthesize_encoder,
    verify_decoder,
    verify_encoder,
)
from eaqconv.circuit import InfiniteCNOT
from eaqconv.errors import NoConvergenceError
from eaqconv.pauli import GF4Matrix, GF4Poly


def _report(num: str, desc: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} - {desc}"
    if detail:
        line += f" [{detail}]"
    print(line)
    assert ok, line


# -- criterion 1: expansion goldens -----------------------------------------


def test_criterion_1_expansion_goldens():
    ok = (
        expand(demo_code.SIMPLE, 2) == demo_code.SIMPLE_TWO_EXPANDED
        and expand(demo_code.SIMPLE, 3) == demo_code.SIMPLE_THREE_EXPANDED
        and expand(demo_code.IMPORTED, 2) == demo_code.EXPANDED
    )
    _report("1", "expansion reproduces the published matrices entrywise", ok)


# -- criterion 2: product-matrix goldens ------------------------------------


def test_criterion_2_omega_goldens():
    checks = [
        omega_matrix(demo_code.VALID_CODE).is_zero(),
        omega_matrix(demo_code.SIMPLE) == PolyMatrix.from_entries([["D^-1+D"]]),
        omega_matrix(demo_code.SIMPLE_TWO_EXPANDED)
        == PolyMatrix.from_entries([["0", "1+D^-1"], ["1+D", "0"]]),
        omega_matrix(demo_code.IMPORTED) == demo_code.OMEGA,
        omega_matrix(demo_code.EXPANDED) == demo_code.OMEGA_EXPANDED,
    ]
    _report("2", "product matrices match the published values entrywise", all(checks))


# -- criterion 3: expansion consistency and the floor identity ---------------


def test_criterion_3_expansion_property_suite():
    rng = random.Random(1003)
    failures = 0
    for _ in range(200):
        n = rng.randrange(1, 5)
        r = rng.randrange(1, 4)

        def entry():
            supp = {e for e in range(4) if rng.random() < 0.4}
            return RationalPoly(LaurentPoly.from_support(supp))

        h = CheckMatrix(
            n,
            PolyMatrix([[entry() for _ in range(n)] for _ in range(r)]),
            PolyMatrix([[entry() for _ in range(n)] for _ in range(r)]),
        )
        l = rng.choice([2, 3, 4])
        if expanded_omega(omega_matrix(h), l) != omega_matrix(expand(h, l)):
            failures += 1
    for _ in range(1000):
        f = LaurentPoly.from_support({e for e in range(-4, 5) if rng.random() < 0.4})
        g = LaurentPoly.from_support({e for e in range(-4, 5) if rng.random() < 0.4})
        l = rng.randrange(1, 5)
        lhs = floor_fractional(f * g, l)
        rhs = LaurentPoly.zero()
        for i in range(l):
            rhs = rhs + floor_fractional(f.shifted(-i), l) * floor_fractional(
                g.shifted(i), l
            )
        if lhs != rhs:
            failures += 1
    _report(
        "3",
        "expansion consistency on 200 random codes, floor identity on 1000 triples",
        failures == 0,
        f"{failures} failures",
    )


# -- criterion 4: orthogonalization goldens ----------------------------------


def test_criterion_4_gram_schmidt_goldens():
    simple = gram_schmidt(demo_code.SIMPLE, 8)
    demo = gram_schmidt(demo_code.IMPORTED, 8)
    replayed = apply_row_ops(expand(demo_code.IMPORTED, 2), demo_code.PUBLISHED_OPS)
    checks = [
        (simple.l, simple.c, simple.a) == (2, 1, 0),
        len(simple.ops) == 1
        and str(getattr(simple.ops[0], "c", "")) == "(1)/(1+D)",
        omega_matrix(simple.h_std)
        == PolyMatrix.from_entries([["0", "1"], ["1", "0"]]),
        (demo.l, demo.c, demo.a) == (2, 2, 0),
        standard_form_check(omega_matrix(demo.h_std)) == (2, 0),
        demo.h_std.row_space_equal(demo_code.STANDARD),
        replayed == demo_code.STANDARD,  # entrywise, via the published op order
    ]
    _report("4", "orthogonalization reaches the published generators", all(checks))


# -- criterion 5: rate pair ---------------------------------------------------


def test_criterion_5_rate_report():
    gs = gram_schmidt(gf4_import(demo_code.GF4_ROW), 8)
    rates = rate_report(gs.k, gs.c, gs.n)
    _report(
        "5",
        "demo pipeline rate pair is exactly (3/4, 1/4)",
        rates == (Fraction(3, 4), Fraction(1, 4)),
        f"got {rates}",
    )


# -- criterion 6: the published circuits --------------------------------------


def test_criterion_6a_initial_state_golden():
    st = initial_state(c=2, a=0, k=4, n=8)
    _report("6a", "unencoded stabilizer equals the published starting matrix",
            st.stab == demo_code.INITIAL)


@pytest.mark.known_failure
def test_criterion_6b_published_encoder_realizes_target():
    outcomes = {}
    for reading in ("cz", "swap"):
        enc = demo_code.published_encoder(s_gate=reading)
        outcomes[reading] = verify_encoder(
            enc, demo_code.STANDARD, c=2, a=0, k=4
        )
    ok = any(bool(o) for o in outcomes.values())
    detail = "; ".join(
        f"S(2,3) as {r}: {'PASS' if o else 'FAIL, ' + o.detail}"
        for r, o in outcomes.items()
    )
    _report("6b", "published encoder realizes the published generators", ok, detail)


def test_criterion_6c_published_decoder_restores_information():
    enc = demo_code.published_encoder()
    dec = demo_code.published_decoder()
    checks = [
        not dec.has_infinite_depth(),
        bool(verify_decoder(enc, dec, c=2, a=0, k=4, n=8)),
    ]
    _report("6c", "published decoder restores the information qubits", all(checks))


# -- criterion 7: synthesized round trip and mutation sensitivity -------------


def test_criterion_7_synthesized_round_trip():
    gs = gram_schmidt(demo_code.IMPORTED, 8)
    enc, plan = synthesize_encoder(gs)
    dec = synthesize_decoder(gs, plan)
    enc_ok = bool(verify_encoder(enc, gs.h_std, gs.c, gs.a, gs.k))
    dec_ok = bool(verify_decoder(enc, dec, gs.c, gs.a, gs.k, gs.n))
    no_inf = not dec.has_infinite_depth()
    survivors = [
        i
        for i in range(len(enc.gates))
        if verify_encoder(enc.without_gate(i), gs.h_std, gs.c, gs.a, gs.k)
    ]
    _report(
        "7",
        "synthesized encoder+decoder verify; every single-gate deletion is caught",
        enc_ok and dec_ok and no_inf and not survivors,
        f"encoder {len(enc.gates)} gates, mutation survivors: {survivors}",
    )


# -- criterion 8: random pipeline property suite -------------------------------


def test_criterion_8_random_pipeline_suite():
    rng = random.Random(1008)
    symbols = "01wW"
    attempted = converged = failed = 0
    bound_violations = []
    crashes = []
    while attempted < 50:
        nc = rng.randrange(2, 5)
        rows = []
        for _ in range(rng.randrange(1, 3)):
            rows.append(
                [
                    GF4Poly.from_symbols(
                        [(rng.choice(symbols), e) for e in range(3)]
                    )
                    for _ in range(nc)
                ]
            )
        if all(e.is_zero() for row in rows for e in row):
            continue
        hq = gf4_import(GF4Matrix(rows))
        if hq.combined().rank() < hq.r:
            continue  # degenerate generator set, not a code
        attempted += 1
        try:
            try:
                gs = gram_schmidt(hq, 8)
            except NoConvergenceError:
                failed += 1  # reported, never a crash
                continue
            enc, plan = synthesize_encoder(gs)
            dec = synthesize_decoder(gs, plan)
            assert verify_encoder(enc, gs.h_std, gs.c, gs.a, gs.k)
            assert verify_decoder(enc, dec, gs.c, gs.a, gs.k, gs.n)
            assert not dec.has_infinite_depth()
            bound = ebit_lower_bound(gs.h_std)
            if bound > gs.c:
                bound_violations.append((bound, gs.c))
            converged += 1
        except Exception as exc:  # noqa: BLE001 - the criterion is "never crashes"
            crashes.append(repr(exc))
    ok = not crashes and converged + failed == attempted and converged >= 20
    _report(
        "8",
        "50-code random import suite: converged codes PASS, the rest report cleanly",
        ok,
        f"{converged} pass, {failed} no-convergence, diagnostics rank/2<=c "
        f"violated {len(bound_violations)} times, crashes: {crashes}",
    )
    # the expanded-code bound is only a conjecture; log, never assert
    print(f"criterion 8 note: conjectured-bound exceedances: {bound_violations}")
