import numpy as np
import pytest

from lpodlab.fuzz import (
    Campaign, GeneratorConfig, draw_pair, iteration_rng, random_program, run_campaign, shrink,
    write_reproducers,
)
from lpodlab.logic import Program
from lpodlab.parser import parse_program
from lpodlab.semantics import AnswerSet, _interp_at, domain_of, minimal_mask, model_mask


def answer_sets_without_solidity(program, atoms=None, cap=None):
    """Mutant: keeps minimal models that assign T*."""
    domain = domain_of(program, atoms)
    mask = minimal_mask(model_mask(program, domain), len(domain))
    return [_interp_at(int(i), domain, cls=AnswerSet) for i in np.flatnonzero(mask)]


def test_config_validation():
    with pytest.raises(ValueError):
        GeneratorConfig(neg_prob=1.5)
    with pytest.raises(ValueError):
        GeneratorConfig(num_atoms=5)
    assert "x" not in GeneratorConfig(num_atoms=4).atoms()


def test_random_program_examples():
    cfg = GeneratorConfig(max_head=1)
    assert random_program(cfg, np.random.default_rng(1)).is_normal
    assert len(random_program(GeneratorConfig(num_rules=0), np.random.default_rng(1))) == 0
    a = random_program(GeneratorConfig(), np.random.default_rng(5))
    b = random_program(GeneratorConfig(), np.random.default_rng(5))
    assert a.rules == b.rules
    for rule in a:
        assert len(set(rule.head)) == len(rule.head)
        assert len(set(rule.pos + rule.neg)) == len(rule.pos) + len(rule.neg)


def test_pairs_are_reproducible_per_iteration():
    cfg = GeneratorConfig()
    assert draw_pair(cfg, iteration_rng(9, 3)) == draw_pair(cfg, iteration_rng(9, 3))


def test_campaign_is_clean_and_deterministic():
    cfg = GeneratorConfig(iterations=60, seed=3)
    r1, r2 = run_campaign(cfg), run_campaign(cfg)
    assert r1.ok, [v.detail for v in r1.violations]
    assert r1.equivalent_pairs > 0 and r1.nonequivalent_pairs > 0
    strip = lambda r: {k: v for k, v in r.to_record().items() if k != "elapsed"}
    assert strip(r1) == strip(r2)
    assert r1.mode_agreements == r1.iterations
    assert r1.contexts_verified == r1.nonequivalent_pairs


def test_identical_pairs_are_equivalent():
    cfg = GeneratorConfig()
    p = random_program(cfg, np.random.default_rng(2))
    assert Campaign(cfg).check_pair(p, p, np.random.default_rng(0)) == []


def test_mutant_is_detected_and_shrunk(tmp_path):
    cfg = GeneratorConfig(iterations=40, seed=42)
    report = run_campaign(cfg, answer_sets=answer_sets_without_solidity)
    assert not report.ok
    campaign = Campaign(cfg, answer_sets_without_solidity)
    for v in report.violations[:5]:
        assert v.shrunk
        assert sum(len(p) for p in v.shrunk) <= sum(len(p) for p in v.programs)
    gl = [v for v in report.violations if v.kind == "gl_mismatch"]
    assert gl
    # a shrunk counterexample still shows the same violation
    assert campaign.violations_of("gl_mismatch", gl[0].shrunk, 0)
    paths = write_reproducers(report, str(tmp_path / "repro"))
    assert paths and all(p.exists() for p in paths)
    text = paths[0].read_text()
    assert text.startswith("% ")
    parse_program(text)


def test_shrink_removes_irrelevant_rules():
    programs = (parse_program("a. b <- c, not d. e x g."), parse_program("h."))
    needs_b = lambda ps: any("b" in r.head for r in ps[0])
    shrunk = shrink(programs, needs_b)
    assert shrunk == (parse_program("b."), Program())
