"""Acceptance criteria, each checked at its stated tolerance.

Every test records one PASS/FAIL line, printed in the terminal summary.
"""
import itertools
import json
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from lpodlab.cli import main
from lpodlab.fuzz import GeneratorConfig, random_rule, run_campaign
from lpodlab.logic import F, FSTAR, T, TSTAR, Program, Rule, TruthValue, eval_and, eval_or, eval_ordered
from lpodlab.parser import parse_program
from lpodlab.reductions import brute_force_sat, random_3cnf
from lpodlab.semantics import answer_sets, as_two_valued, gl_stable_models, most_preferred


@pytest.fixture
def criterion(request):
    return {"name": request.node.name.removeprefix("test_")}


def record(info, ok, detail):
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {info['name']}: {detail}")


def check(info, ok, detail):
    record(info, ok, detail)
    assert ok, detail


def run_cli(capsys, *argv):
    code = main([str(a) for a in argv])
    out, _ = capsys.readouterr()
    return code, out


@pytest.fixture(scope="module")
def campaign():
    start = time.perf_counter()
    report = run_campaign(GeneratorConfig(iterations=1000, num_atoms=4, num_rules=4, seed=42))
    return report, time.perf_counter() - start


def test_1_example_answer_sets(capsys, programs_dir, criterion):
    first = [["bmw", "F"], ["diesel_mercedes", "T"], ["false", "F*"], ["gas_mercedes", "F*"], ["mercedes", "T"]]
    second = [["bmw", "T"], ["diesel_mercedes", "F*"], ["false", "F*"], ["gas_mercedes", "F*"], ["mercedes", "F*"]]
    start = time.perf_counter()
    code1, out1 = run_cli(capsys, "answersets", programs_dir / "mercedes.lpod", "--json")
    code2, out2 = run_cli(capsys, "preferred", programs_dir / "mercedes.lpod", "--json")
    elapsed = time.perf_counter() - start
    sets = json.loads(out1)["interpretations"]
    pref = json.loads(out2)["interpretations"]
    ok = code1 == code2 == 0 and sorted(sets) == sorted([first, second]) and pref == [first] and elapsed < 1
    check(criterion, ok, f"{len(sets)} answer sets, {len(pref)} preferred, {elapsed:.2f}s (< 1s)")


def test_2_equivalent_pairs(capsys, programs_dir, criterion):
    times, codes = [], []
    for a, b in (("fact_pair_a.lpod", "fact_pair_b.lpod"), ("triple_a.lpod", "triple_b.lpod")):
        start = time.perf_counter()
        code, out = run_cli(capsys, "eq", programs_dir / a, programs_dir / b, "--json")
        times.append(time.perf_counter() - start)
        codes.append(code == 0 and json.loads(out)["equivalent"])
    ok = all(codes) and max(times) < 1
    check(criterion, ok, f"equivalent={codes}, slowest {max(times):.2f}s (< 1s each)")


def test_3_swapped_preference_separation(capsys, programs_dir, criterion):
    p1 = parse_program((programs_dir / "swapped_a.lpod").read_text())
    p2 = parse_program((programs_dir / "swapped_b.lpod").read_text())
    start = time.perf_counter()
    code, out = run_cli(capsys, "eq", programs_dir / "swapped_a.lpod", programs_dir / "swapped_b.lpod", "--json")
    record_ = json.loads(out)
    context = parse_program(record_["context"])
    atoms = sorted(set((p1 | p2 | context).atoms))
    mp1 = set(most_preferred(p1 | context, atoms))
    mp2 = set(most_preferred(p2 | context, atoms))
    elapsed = time.perf_counter() - start
    ok = (
        code == 1
        and record_["separated"] == "first_only"
        and record_["witness"] == [["a", "T"], ["b", "F"], ["c", "F*"], ["d", "F*"]]
        and mp1 != mp2
        and elapsed < 5
    )
    check(criterion, ok, f"witness first-only, preferred sets differ ({len(mp1)} vs {len(mp2)}), {elapsed:.2f}s (< 5s)")


def test_4_reduction_soundness(capsys, tmp_path, criterion):
    rng = np.random.default_rng(2024)
    formulas = []
    for i in range(50):
        if i % 2:
            formulas.append(random_3cnf(rng, int(rng.integers(3, 5)), int(rng.integers(10, 13))))
        else:
            formulas.append(random_3cnf(rng, int(rng.integers(5, 9)), int(rng.integers(1, 13))))
    start = time.perf_counter()
    passed = sat = 0
    for i, phi in enumerate(formulas):
        path = tmp_path / f"phi{i}.cnf"
        path.write_text(phi.to_dimacs())
        code, _ = run_cli(capsys, "verify-reduction", path)
        passed += code == 0
        sat += brute_force_sat(phi) is not None
    elapsed = time.perf_counter() - start
    ok = passed == 50 and 0 < sat < 50 and elapsed < 60
    check(criterion, ok, f"{passed}/50 verified ({sat} sat, {50 - sat} unsat), {elapsed:.1f}s (< 60s)")


def normal_shape_programs(atoms=("a", "b", "c"), max_rules=3):
    bodies = [((), ())]
    bodies += [((p,), ()) for p in atoms] + [((), (q,)) for q in atoms]
    bodies += [((p,), (q,)) for p in atoms for q in atoms]
    rules = [Rule(h, p, n) for h in atoms for p, n in bodies]
    for k in range(max_rules + 1):
        for combo in itertools.combinations(rules, k):
            yield Program(combo)


def test_5_normal_answer_sets_are_stable_models(criterion):
    start = time.perf_counter()
    mismatches = total = 0
    atoms = ("a", "b", "c")
    for prog in normal_shape_programs(atoms):
        stable = {as_two_valued(s, atoms) for s in gl_stable_models(prog, atoms)}
        mismatches += set(answer_sets(prog, atoms)) != stable
        total += 1
    exhaustive = total
    rng = np.random.default_rng(5)
    for _ in range(500):
        n = int(rng.integers(1, 6))
        alphabet = ["a", "b", "c", "d", "e"][:n]
        rules = [random_rule(rng, alphabet, 1, 3, 0.4) for _ in range(int(rng.integers(0, 7)))]
        prog = Program(rules)
        stable = {as_two_valued(s, alphabet) for s in gl_stable_models(prog, alphabet)}
        mismatches += set(answer_sets(prog, alphabet)) != stable
        total += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 120
    check(criterion, ok, f"{exhaustive} exhaustive + 500 random programs, {mismatches} mismatches, {elapsed:.1f}s (< 120s)")


def test_6_mode_coincidence(campaign, criterion):
    report, elapsed = campaign
    ok = report.iterations == 1000 and report.mode_agreements == 1000 and report.ok
    check(
        criterion,
        ok,
        f"{report.mode_agreements}/{report.iterations} pairs agree across modes "
        f"({report.nonequivalent_pairs} non-equivalent), {len(report.violations)} violations, {elapsed:.1f}s",
    )


def test_7_context_validity(campaign, criterion):
    report, _ = campaign
    built = sum(report.case_counts.values())
    failures = report.count("context_validity") + report.count("normal_context_validity")
    ok = built == report.nonequivalent_pairs == report.contexts_verified and failures == 0
    check(
        criterion,
        ok,
        f"{report.contexts_verified}/{report.nonequivalent_pairs} contexts verified "
        f"(case1 {report.case_counts['case1']}, case2 {report.case_counts['case2']}), {failures} failures",
    )


def test_8_truth_table_invariants(criterion):
    start = time.perf_counter()
    values = list(TruthValue)
    failures = 0
    for v1, v2 in itertools.product(values, repeat=2):
        failures += eval_and(v1, v2) != min(v1, v2) or eval_or(v1, v2) != max(v1, v2)
        failures += (v1 < v2) + (v2 < v1) + (v1 == v2) != 1
        failures += v1.preceq(v2) and v2.preceq(v1) and v1 != v2
    for v1, v2, v3 in itertools.product(values, repeat=3):
        for op in (eval_and, eval_or, eval_ordered):
            failures += op(op(v1, v2), v3) != op(v1, op(v2, v3))
        failures += v1.preceq(v2) and v2.preceq(v3) and not v1.preceq(v3)
    order = {(a, b) for a, b in itertools.product(values, repeat=2) if a.precedes(b)}
    failures += order != {(F, FSTAR), (F, TSTAR), (F, T), (TSTAR, T)}
    elapsed = time.perf_counter() - start
    check(criterion, failures == 0, f"16 pairs and 64 triples, {failures} failures, {elapsed * 1000:.1f}ms")
