"""Randomized differential campaign over small generated programs.

Each iteration draws a pair of programs and checks, by direct enumeration,
that logical equivalence behaves like strong equivalence under both
answer-set modes, that constructed contexts separate non-equivalent pairs,
and that on normal programs the answer sets match Gelfond-Lifschitz stable
models. Violations are shrunk greedily and returned with reproducers.
"""
from __future__ import annotations

import logging
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from . import semantics
from .equivalence import (
    ContextVerificationError,
    build_normal_context,
    build_witness_context,
    logically_equivalent,
    normal_strong_eq,
    verify_context,
    verify_normal_context,
)
from .logic import Program, Rule
from .parser import serialize_program
from .semantics import as_two_valued, domain_of, gl_stable_models, preferred_among

log = logging.getLogger(__name__)

WITNESS_ATOMS_PER_ATOM = 3


@dataclass
class GeneratorConfig:
    num_atoms: int = 4
    num_rules: int = 4
    max_head: int = 2
    max_body: int = 2
    neg_prob: float = 0.3
    seed: int = 42
    iterations: int = 1000
    contexts_per_pair: int = 3
    normal_prob: float = 0.25
    fresh_context_atoms: int = 2

    def __post_init__(self):
        if not 0.0 <= self.neg_prob <= 1.0 or not 0.0 <= self.normal_prob <= 1.0:
            raise ValueError("probabilities must lie in [0, 1]")
        if self.num_atoms < 1 or self.max_head < 1:
            raise ValueError("num_atoms and max_head must be positive")
        # a witness may need fresh t_A and f_A atoms for every program atom
        if WITNESS_ATOMS_PER_ATOM * self.num_atoms > semantics.DEFAULT_CAP:
            raise ValueError(f"num_atoms={self.num_atoms} leaves no room for witness atoms")

    def atoms(self) -> list[str]:
        return [_atom_name(i) for i in range(self.num_atoms)]


def _atom_name(i: int) -> str:
    letters = "abcdeghijklmnopqrsuvwyz"  # no 'x', 'f', 't' to keep contexts readable
    return letters[i] if i < len(letters) else f"a{i}"


def random_rule(rng: np.random.Generator, atoms, max_head: int, max_body: int, neg_prob: float) -> Rule:
    atoms = list(atoms)
    n_head = int(rng.integers(1, min(max_head, len(atoms)) + 1))
    head = tuple(atoms[i] for i in rng.choice(len(atoms), n_head, replace=False))
    n_body = int(rng.integers(0, min(max_body, len(atoms)) + 1))
    body = [atoms[i] for i in rng.choice(len(atoms), n_body, replace=False)]
    negated = rng.random(n_body) < neg_prob
    pos = tuple(a for a, n in zip(body, negated) if not n)
    neg = tuple(a for a, n in zip(body, negated) if n)
    return Rule(head, pos, neg)


def random_program(cfg: GeneratorConfig, rng: np.random.Generator, atoms=None, max_head=None) -> Program:
    atoms = cfg.atoms() if atoms is None else atoms
    max_head = cfg.max_head if max_head is None else max_head
    return Program(
        random_rule(rng, atoms, max_head, cfg.max_body, cfg.neg_prob) for _ in range(cfg.num_rules)
    )


def iteration_rng(seed: int, iteration: int) -> np.random.Generator:
    return np.random.default_rng([seed, iteration])


def draw_pair(cfg: GeneratorConfig, rng: np.random.Generator):
    """A program pair; related pairs are drawn often so both verdicts occur."""
    normal = bool(rng.random() < cfg.normal_prob)
    max_head = 1 if normal else cfg.max_head
    p1 = random_program(cfg, rng, max_head=max_head)
    kind = int(rng.integers(4))
    if kind == 0:
        order = rng.permutation(len(p1))
        p2 = Program(p1.rules[i] for i in order)
    elif kind == 1:
        p2 = p1 | Program([random_rule(rng, cfg.atoms(), max_head, cfg.max_body, cfg.neg_prob)])
    elif kind == 2 and len(p1):
        p2 = p1.without(p1.rules[int(rng.integers(len(p1)))])
    else:
        p2 = random_program(cfg, rng, max_head=max_head)
    return p1, p2, normal


def random_context(cfg: GeneratorConfig, rng: np.random.Generator, shared) -> Program:
    shared = sorted(shared) or cfg.atoms()
    half = max(1, len(shared) // 2)
    picked = [shared[i] for i in rng.choice(len(shared), min(half, len(shared)), replace=False)]
    alphabet = picked + [f"z{i}" for i in range(cfg.fresh_context_atoms)]
    n_rules = int(rng.integers(1, cfg.num_rules + 1))
    return Program(
        random_rule(rng, alphabet, cfg.max_head, cfg.max_body, cfg.neg_prob) for _ in range(n_rules)
    )


@dataclass
class Violation:
    kind: str
    iteration: int
    seed: int
    programs: tuple
    detail: str
    shrunk: tuple = ()

    def to_record(self) -> dict:
        return {
            "kind": self.kind,
            "iteration": self.iteration,
            "seed": self.seed,
            "detail": self.detail,
            "programs": [serialize_program(p) for p in self.programs],
            "shrunk": [serialize_program(p) for p in self.shrunk],
        }


@dataclass
class CampaignReport:
    config: GeneratorConfig
    iterations: int = 0
    equivalent_pairs: int = 0
    nonequivalent_pairs: int = 0
    case_counts: dict = field(default_factory=lambda: {"case1": 0, "case2": 0})
    contexts_verified: int = 0
    sampled_contexts: int = 0
    mode_agreements: int = 0
    normal_pairs: int = 0
    normal_case_counts: dict = field(default_factory=lambda: {"case1": 0, "case2": 0})
    gl_checks: int = 0
    violations: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def count(self, kind: str) -> int:
        return sum(v.kind == kind for v in self.violations)

    def to_record(self) -> dict:
        record = {k: v for k, v in asdict(self).items() if k not in ("violations", "config")}
        record["config"] = asdict(self.config)
        record["violations"] = [v.to_record() for v in self.violations]
        record["ok"] = self.ok
        return record


AnswerSetsFn = Callable[..., list]


class Campaign:
    """Holds the semantics under test; ``answer_sets`` may be swapped for a mutant."""

    def __init__(self, cfg: GeneratorConfig, answer_sets: Optional[AnswerSetsFn] = None):
        self.cfg = cfg
        self.answer_sets = answer_sets or semantics.answer_sets

    def separates(self, p1, p2, context):
        u1, u2 = p1 | context, p2 | context
        domain = domain_of(u1 | u2)
        as1, as2 = self.answer_sets(u1, domain), self.answer_sets(u2, domain)
        mp1, mp2 = preferred_among(as1), preferred_among(as2)
        return {
            "all_answer_sets": set(as1) != set(as2),
            "most_preferred": set(mp1) != set(mp2),
        }

    def gl_mismatch(self, program) -> bool:
        domain = domain_of(program)
        stable = {as_two_valued(s, domain) for s in gl_stable_models(program)}
        return stable != set(self.answer_sets(program))

    # checks return (violation kind, detail) pairs; empty when all hold

    def check_pair(self, p1, p2, rng, report=None) -> list[tuple[str, str]]:
        found = []
        verdict = logically_equivalent(p1, p2)
        contexts = [random_context(self.cfg, rng, (p1 | p2).atoms) for _ in range(self.cfg.contexts_per_pair)]
        constructed = None
        if not verdict.equivalent:
            wc = build_witness_context(p1, p2, verdict.witness)
            checks = verify_context(wc)
            if not all(checks.values()):
                failed = [k for k, ok in checks.items() if not ok]
                found.append(("context_validity", f"{wc.case}: failed {failed}"))
            constructed = wc.context
            if report is not None:
                report.case_counts[wc.case] += 1
                report.contexts_verified += all(checks.values())
        separated = {"all_answer_sets": False, "most_preferred": False}
        for ctx in contexts + ([constructed] if constructed is not None else []):
            for mode, hit in self.separates(p1, p2, ctx).items():
                separated[mode] |= hit
        if report is not None:
            report.sampled_contexts += len(contexts)
        if verdict.equivalent and any(separated.values()):
            found.append(("equivalent_but_separated", f"separated under {separated}"))
        if separated["most_preferred"] != separated["all_answer_sets"]:
            found.append(("mode_disagreement", f"separation by mode: {separated}"))
        if not verdict.equivalent and not all(separated.values()):
            found.append(("nonequivalent_not_separated", f"separation by mode: {separated}"))
        return found

    def check_normal(self, p1, p2, report=None) -> list[tuple[str, str]]:
        found = []
        for p in (p1, p2):
            if self.gl_mismatch(p):
                found.append(("gl_mismatch", f"answer sets differ from stable models of:\n{p}"))
            if report is not None:
                report.gl_checks += 1
        verdict = normal_strong_eq(p1, p2, with_context=False)
        if not verdict.equivalent:
            wc = build_normal_context(p1, p2, verdict.witness)
            checks = verify_normal_context(wc)
            if not all(checks.values()):
                found.append(("normal_context_validity", f"{wc.case}: {checks}"))
            elif report is not None:
                report.normal_case_counts[wc.case] += 1
        return found

    def violations_of(self, kind: str, programs, rng_state) -> bool:
        """Re-test a single property on (possibly shrunk) programs."""
        p1, p2 = programs
        try:
            if kind.startswith("gl") or kind.startswith("normal"):
                found = self.check_normal(p1, p2)
            else:
                found = self.check_pair(p1, p2, np.random.default_rng(rng_state))
        except (ContextVerificationError, ValueError):
            return False
        return any(k == kind for k, _ in found)


def shrink(programs: tuple, still_fails: Callable[[tuple], bool]) -> tuple:
    """Greedily drop rules, then body literals, while the failure persists."""
    current = tuple(programs)
    changed = True
    while changed:
        changed = False
        for candidate in _smaller(current):
            if still_fails(candidate):
                current = candidate
                changed = True
                break
    return current


def _smaller(programs: tuple):
    for k, prog in enumerate(programs):
        for rule in prog:
            yield programs[:k] + (prog.without(rule),) + programs[k + 1:]
    for k, prog in enumerate(programs):
        for j, rule in enumerate(prog.rules):
            for lit in range(len(rule.pos) + len(rule.neg)):
                pos, neg = list(rule.pos), list(rule.neg)
                if lit < len(pos):
                    del pos[lit]
                else:
                    del neg[lit - len(pos)]
                rules = list(prog.rules)
                rules[j] = Rule(rule.head, tuple(pos), tuple(neg))
                yield programs[:k] + (Program(rules),) + programs[k + 1:]


def run_campaign(cfg: GeneratorConfig, answer_sets: Optional[AnswerSetsFn] = None, shrink_failures: bool = True) -> CampaignReport:
    campaign = Campaign(cfg, answer_sets)
    report = CampaignReport(cfg)
    start = time.perf_counter()
    for i in range(cfg.iterations):
        rng = iteration_rng(cfg.seed, i)
        p1, p2, normal = draw_pair(cfg, rng)
        ctx_state = int(rng.integers(2**63))
        found = campaign.check_pair(p1, p2, np.random.default_rng(ctx_state), report)
        if normal:
            report.normal_pairs += 1
            found += campaign.check_normal(p1, p2, report)
        equivalent = logically_equivalent(p1, p2).equivalent
        report.equivalent_pairs += equivalent
        report.nonequivalent_pairs += not equivalent
        report.mode_agreements += not any(k == "mode_disagreement" for k, _ in found)
        for kind, detail in found:
            shrunk = ()
            if shrink_failures:
                shrunk = shrink((p1, p2), lambda ps, k=kind: campaign.violations_of(k, ps, ctx_state))
            log.info("iteration %d: %s", i, kind)
            report.violations.append(Violation(kind, i, cfg.seed, (p1, p2), detail, shrunk))
        report.iterations += 1
    report.elapsed = time.perf_counter() - start
    return report


def write_reproducers(report: CampaignReport, prefix: str) -> list[Path]:
    """One ``.lpod`` file per program of every violation (shrunk when available)."""
    written = []
    for n, v in enumerate(report.violations):
        programs = v.shrunk or v.programs
        for k, prog in enumerate(programs, 1):
            path = Path(f"{prefix}_{n}_{v.kind}_p{k}.lpod")
            header = f"% {v.kind} at iteration {v.iteration}, seed {v.seed}\n"
            path.write_text(header + serialize_program(prog))
            written.append(path)
    return written
