"""Acceptance criteria, one test each. Every test prints a single PASS/FAIL line.

Run ``pytest tests/test_acceptance.py -v -s`` to see the lines next to the
results (they are printed even without ``-s``).
"""

from __future__ import annotations

import pytest

from argcontrast.aspic import AttackKind, Literal, Presentation, derive_af
from argcontrast.contrastive import Direction, cont_acc, cont_nonacc, contrast, derive_foil
from argcontrast.errors import ParseError
from argcontrast.explanations import acc_explanation_set, def_by, def_by_in, nonacc_explanation, not_def
from argcontrast.formats import format_af, format_theory, parse_af, parse_theory
from argcontrast.formulas import formula_acc_explanation, formula_contrastive, formula_nonacc_explanation
from argcontrast.semantics import Semantics, Strategy, extensions

import props
from oracles import ALL_SEMANTICS, FIXTURES, af_corpus, brute_extensions, theory_corpus
from test_cli import EXIT_MATRIX, call
from test_formats import AF_ERRORS, THEORY_ERRORS

PRF, GRD, SST, STB = Semantics.PREFERRED, Semantics.GROUNDED, Semantics.SEMI_STABLE, Semantics.STABLE
SK, CR = Strategy.SKEPTICAL, Strategy.CREDULOUS
ACC, NONACC = Direction.ACC, Direction.NONACC
ID, PREM = Presentation.IDENTITY, Presentation.PREMISES
L = Literal.parse

# One corpus for criteria 4 and 5: random digraphs, self-attacks allowed.
CORPUS = af_corpus(count=500, seed=7)
THEORIES = theory_corpus(count=200, seed=11)


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, failures: list[str]) -> None:
        status = "PASS" if not failures else "FAIL"
        detail = "" if not failures else f" ({len(failures)} failing: {failures[0]})"
        with capsys.disabled():
            print(f"\n[{status}] criterion {number}: {title}{detail}")
        assert not failures, failures[:10]
    return emit


def _expect(failures: list[str], label: str, got, want) -> None:
    if got != want:
        failures.append(f"{label}: got {got!r}, want {want!r}")


def _sets(*groups: str) -> set[frozenset[str]]:
    return {frozenset(g) for g in groups}


def test_criterion_1_running_example_goldens(af1, report):
    f: list[str] = []
    four = _sets("ACE", "BDF", "BE", "CDF")
    _expect(f, "Prf", set(extensions(af1, PRF)), four)
    _expect(f, "Sstb", set(extensions(af1, SST)), four)
    _expect(f, "Grd", extensions(af1, GRD), (frozenset(),))
    _expect(f, "DefBy(A)", def_by(af1, "A"), set("CE"))
    _expect(f, "DefBy(D)", def_by(af1, "D"), {"F"})
    _expect(f, "NotDef(A,e2)", not_def(af1, "A", set("BDF")), set("BDF"))
    _expect(f, "NotDef(A,e3)", not_def(af1, "A", set("BE")), {"B"})
    _expect(f, "Acc(A)", acc_explanation_set(af1, PRF, CR, "A"), set("CE"))
    _expect(f, "Acc(D)", acc_explanation_set(af1, PRF, CR, "D"), {"F"})
    _expect(f, "NotAcc(A)", nonacc_explanation(af1, PRF, SK, "A"), set("BDF"))
    _expect(f, "NotAcc(D)", nonacc_explanation(af1, PRF, SK, "D"), {"E"})
    _expect(f, "Cont(A,{D})", cont_acc(af1, PRF, CR, "A", {"D"}).common, {"E"})
    _expect(f, "Cont(A,{B})", cont_acc(af1, PRF, CR, "A", {"B"}).common, {"C"})
    _expect(f, "Cont(A,{B,D})", cont_acc(af1, PRF, CR, "A", {"B", "D"}).common, set("CE"))
    _expect(f, "ContN(A,{B})", cont_nonacc(af1, PRF, SK, "A", {"B"}).common, {"B"})
    _expect(f, "ContN(A,{D})", cont_nonacc(af1, PRF, SK, "A", {"D"}).common, {"F"})
    _expect(f, "Foil(A)", derive_foil(af1, "A"), {"B", "D"})
    _expect(f, "Foil(B)", derive_foil(af1, "B"), {"C"})
    _expect(f, "Foil(D)", derive_foil(af1, "D"), {"E"})
    _expect(f, "Cont(A,Foil(A))", contrast(af1, PRF, CR, "A", None, ACC).common, set("CE"))
    _expect(f, "ContN(D,Foil(D))", contrast(af1, PRF, SK, "D", None, NONACC).common, {"E"})
    report(1, "running-example goldens", f)


def test_criterion_2_counterexample_framework(af2, report):
    f: list[str] = []
    _expect(f, "Prf", set(extensions(af2, PRF)), _sets("A", "B"))
    _expect(f, "NotDef(C,{B})", not_def(af2, "C", {"B"}), set("BDEF"))
    _expect(f, "DefBy(B,{B})", def_by_in(af2, "B", {"B"}), {"B"})
    report(2, "second framework goldens", f)


def test_criterion_3_structured_goldens(webshop, report):
    f: list[str] = []
    af = webshop.af
    _expect(f, "argument count", len(webshop.arguments), 12)
    u, r, m = AttackKind.UNDERCUT, AttackKind.REBUT, AttackKind.UNDERMINE
    _expect(f, "attacks", {(t.attacker, t.target, t.kind) for t in webshop.attacks}, {
        ("B2", "B1", u), ("B3", "A2", m), ("A2", "B3", r), ("B5", "B4", u), ("B6", "A4", m),
        ("A4", "B6", r), ("B2", "B4", u), ("B3", "B2", m), ("B6", "B5", m)})
    _expect(f, "Grd", extensions(af, GRD), (frozenset({"A1", "A3", "A5", "A6"}),))
    listed = {frozenset(s.split()) for s in (
        "A1 A2 A3 A4 A5 A6 B2 B5", "A1 A2 A3 A5 A6 B2 B6", "A1 A3 A4 A5 A6 B1 B3 B5", "A1 A3 A5 A6 B1 B3 B4 B6")}
    for sem in (PRF, STB, SST):
        _expect(f, sem.value, set(extensions(af, sem)), listed)
    for phi, ids, prem in (("m", {"B3", "B6"}, {"kp", "rr"}), ("~n(d1)", {"A2"}, {"rc"})):
        _expect(f, f"Acc({phi}) id", formula_acc_explanation(webshop, PRF, CR, L(phi), ID).explanation, ids)
        _expect(f, f"Acc({phi}) prem", formula_acc_explanation(webshop, PRF, CR, L(phi), PREM).explanation,
                {L(x) for x in prem})
    _expect(f, "NotAcc(m) id", formula_nonacc_explanation(webshop, PRF, SK, L("m"), ID), {"A2", "A4", "B2", "B5"})
    _expect(f, "NotAcc(m) prem", formula_nonacc_explanation(webshop, PRF, SK, L("m"), PREM), {L("rc"), L("ka")})
    for foil, want in (("~n(d1)", "kp"), ("~n(d3)", "rr")):
        got = formula_contrastive(webshop, PRF, CR, L("m"), {L(foil)}, ACC, PREM).common
        _expect(f, f"Cont(m,{foil})", got, {L(want)})
    got = formula_contrastive(webshop, PRF, SK, L("m"), {L("~n(d1)")}, NONACC, PREM).common
    _expect(f, "ContN(m,~n(d1))", got, {L("rc")})
    report(3, "structured goldens", f)


def test_criterion_4_oracle_equivalence(report):
    f: list[str] = []
    for i, af in enumerate(CORPUS):
        for sem in ALL_SEMANTICS:
            if set(extensions(af, sem)) != brute_extensions(af, sem):
                f.append(f"instance {i} {sem.value}: {sorted(af.attacks)}")
    report(4, f"extensions equal subset enumeration on {len(CORPUS)} random frameworks", f)


def test_criterion_5_property_suites(report):
    f: list[str] = []
    argument_level = [
        ("defenders compose", props.defenders_compose),
        ("empty acceptance iff unattacked", props.empty_acceptance_iff_unattacked),
        ("non-acceptance never empty", props.nonacceptance_never_empty),
        ("empty intersection needs a reason", props.empty_intersection_needs_reason),
        ("derived foil applicable", props.derived_foil_applicable),
        ("derived foil shape", props.derived_foil_shape),
    ]
    for i, af in enumerate(CORPUS):
        for name, check in argument_level:
            f += [f"{name} instance {i}: {x}" for x in check(af)]
        for part, items in props.acceptance_within_nonacceptance(af).items():
            f += [f"acceptance within non-acceptance ({part}) instance {i}: {x}" for x in items]
    formula_level = [
        ("formula emptiness", props.formula_emptiness),
        ("formula intersection", props.formula_intersection),
        ("contrary foil applicable", props.contrary_foil_applicable),
        ("contrary foil shape", props.contrary_foil_shape),
    ]
    for i, th in enumerate(THEORIES):
        fw = derive_af(th)
        for name, check in formula_level:
            f += [f"{name} theory {i}: {x}" for x in check(fw)]
    report(5, f"properties on {len(CORPUS)} frameworks and {len(THEORIES)} theories", f)


def test_criterion_6_contrast_is_smaller(webshop, report):
    basic = formula_acc_explanation(webshop, PRF, CR, L("m"), PREM).explanation
    focused = formula_contrastive(webshop, PRF, CR, L("m"), {L("~n(d1)")}, ACC, PREM).common
    f: list[str] = []
    _expect(f, "sizes", (len(focused), len(basic)), (1, 2))
    report(6, f"contrastive explanation smaller than basic ({len(focused)} < {len(basic)})", f)


def test_criterion_7_formats_and_exit_codes(tmp_path, report):
    f: list[str] = []
    for af in CORPUS:
        text = format_af(af)
        if parse_af(text) != af or format_af(parse_af(text)) != text:
            f.append(f"af round trip: {text!r}")
    for th in THEORIES + theory_corpus(count=200, seed=11, strict=True):
        text = format_theory(th)
        if parse_theory(text) != th or format_theory(parse_theory(text)) != text:
            f.append(f"theory round trip: {text!r}")
    for parser, cases in ((parse_af, AF_ERRORS), (parse_theory, THEORY_ERRORS)):
        for text, line, column, message in cases:
            try:
                parser(text)
                f.append(f"no error for {text!r}")
            except ParseError as exc:
                if (exc.line, exc.column) != (line, column) or message not in exc.message:
                    f.append(f"{text!r}: {exc}")
    for make_argv, code, message in EXIT_MATRIX:
        argv = make_argv(tmp_path)
        got, _, err = call(*argv)
        if got != code or message not in err:
            f.append(f"{argv}: exit {got}, stderr {err.strip()!r}")
    json_argv = ("contrast", "--input", str(FIXTURES / "af1.apx"), "--fact", "A", "--auto-foil", "--format", "json")
    if call(*json_argv) != call(*json_argv):
        f.append("json output differs between identical runs")
    report(7, "parser round trips, error matrix, exit codes, stable output", f)
