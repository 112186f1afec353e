"""Strong equivalence of LPODs, decided as four-valued logical equivalence.

When two programs differ, a witness interpretation ``M`` (a model of exactly
one of them) is turned into a context program ``P`` such that ``P1 ∪ P`` and
``P2 ∪ P`` have different (most-preferred) answer sets. Every emitted context
is re-checked by direct enumeration before it is returned.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Optional

import numpy as np

from . import semantics
from .logic import F, FSTAR, T, TSTAR, Interpretation, Program, Rule, is_model
from .semantics import (
    FOUR_VALUED,
    THREE_VALUED,
    NotNormalError,
    _check_cap,
    _interp_at,
    answer_set_mask,
    domain_of,
    gl_stable_models,
    index_of,
    model_mask,
)

MODES = ("most_preferred", "all_answer_sets")
FIRST_ONLY, SECOND_ONLY = "first_only", "second_only"
CASE1, CASE2 = "case1", "case2"


class PreconditionError(ValueError):
    pass


class ContextVerificationError(AssertionError):
    """A constructed context failed to separate the programs (an internal bug)."""


@dataclass(frozen=True)
class WitnessScaffold:
    t_atoms: dict  # original atom -> fresh t_A
    f_atoms: dict  # original atom -> fresh f_A
    d_atom: Optional[str]
    m_prime: Interpretation
    m_doubleprime: Optional[Interpretation] = None


@dataclass(frozen=True)
class WitnessContext:
    """Output of the context construction, in normalized orientation.

    ``first``/``second`` are the programs as the construction saw them:
    ``witness`` models ``first`` and not ``second``. ``swapped`` records
    whether that is the reverse of the caller's argument order.
    """

    first: Program
    second: Program
    witness: Interpretation
    context: Program
    case: str
    scaffold: WitnessScaffold
    swapped: bool = False

    @property
    def m_prime(self) -> Interpretation:
        return self.scaffold.m_prime


@dataclass(frozen=True)
class EquivalenceVerdict:
    equivalent: bool
    first: Program
    second: Program
    mode: Optional[str] = None
    witness: Optional[Interpretation] = None
    separated: Optional[str] = None
    context: Optional[Program] = None
    context_case: Optional[str] = None
    discriminating_interpretation: Optional[Interpretation] = None
    checks: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.equivalent


def _first_disagreement(p1: Program, p2: Program, domain, alphabet):
    m1 = model_mask(p1, domain, alphabet)
    m2 = model_mask(p2, domain, alphabet)
    # models of the first program are searched first, then the converse
    for mask, tag in ((m1 & ~m2, FIRST_ONLY), (m2 & ~m1, SECOND_ONLY)):
        hits = np.flatnonzero(mask)
        if hits.size:
            return _interp_at(int(hits[0]), domain, alphabet), tag
    return None, None


def logically_equivalent(p1: Program, p2: Program, cap: int | None = None) -> EquivalenceVerdict:
    """Compare the four-valued model sets of two programs.

    Atoms outside both programs cannot change either program's rules, so the
    scan over the union of their atoms is exhaustive.
    """
    domain = domain_of(p1 | p2)
    _check_cap(len(domain), cap)
    witness, tag = _first_disagreement(p1, p2, domain, FOUR_VALUED)
    return EquivalenceVerdict(witness is None, p1, p2, witness=witness, separated=tag)


class _FreshNames:
    def __init__(self, taken):
        self.taken = set(taken)

    def __call__(self, stem: str, limit: int = 10_000) -> str:
        candidates = [stem] + [f"{stem}_{i}" for i in range(1, limit)]
        for name in candidates:
            if name not in self.taken:
                self.taken.add(name)
                return name
        raise RuntimeError(f"could not find a fresh atom name for {stem!r}")

    def numbered(self, stem: str, limit: int = 10_000) -> str:
        for i in range(limit):
            if f"{stem}{i}" not in self.taken:
                self.taken.add(f"{stem}{i}")
                return f"{stem}{i}"
        raise RuntimeError(f"could not find a fresh atom name for {stem!r}")


def _normalize(p1: Program, p2: Program, m: Interpretation):
    in1, in2 = is_model(p1, m), is_model(p2, m)
    if any(v != F for a, v in m.items() if a not in (p1 | p2).atoms):
        raise PreconditionError("interpretation must be F on atoms outside both programs")
    if in1 == in2:
        which = "both" if in1 else "neither"
        raise PreconditionError(f"interpretation is a model of {which} program(s)")
    return (p1, p2, False) if in1 else (p2, p1, True)


def build_witness_context(p1: Program, p2: Program, m: Interpretation) -> WitnessContext:
    """Build the separating context program for a model of exactly one program.

    Case 1 (``M'`` is not a model of the other program): ``M'`` becomes a
    most-preferred answer set of ``first ∪ P`` only. Case 2: ``M'`` is a
    most-preferred answer set of ``second ∪ P`` but not of ``first ∪ P``.
    """
    first, second, swapped = _normalize(p1, p2, m)
    atoms = sorted(set((p1 | p2).atoms))
    m = m.restrict(atoms)
    fresh = _FreshNames(atoms)
    fstar = [a for a in atoms if m.value(a) == FSTAR]
    tstar = [a for a in atoms if m.value(a) == TSTAR]
    t_atoms = {a: fresh(f"t__{a}") for a in fstar}
    f_atoms = {a: fresh(f"f__{a}") for a in fstar}

    extra = {t: T for t in t_atoms.values()}
    extra.update({f: FSTAR for f in f_atoms.values()})
    m_prime = Interpretation((a, T if m.value(a) == TSTAR else m.value(a)) for a in atoms).extend(extra)

    prefer = [Rule((a, t_atoms[a])) for a in fstar]
    guard = [Rule(f_atoms[a], (a,), (f_atoms[a],)) for a in fstar]

    if not is_model(second, m_prime):
        facts = [Rule(a) for a in m_prime if m_prime[a] == T]
        context = Program(facts + prefer + guard)
        scaffold = WitnessScaffold(t_atoms, f_atoms, None, m_prime)
        return WitnessContext(first, second, m, context, CASE1, scaffold, swapped)

    d_atom = fresh.numbered("d__")
    facts = [Rule(a) for a in atoms if m.value(a) == T]
    links = [Rule(b, (a,)) for a in tstar for b in tstar if a != b]
    escapes = [Rule(d_atom, (), (a,)) for a in tstar]
    context = Program(facts + prefer + guard + links + escapes)
    m_doubleprime = m.extend(extra)
    scaffold = WitnessScaffold(t_atoms, f_atoms, d_atom, m_prime, m_doubleprime)
    return WitnessContext(first, second, m, context, CASE2, scaffold, swapped)


def _status(program: Program, interp: Interpretation, domain) -> dict:
    """Whether ``interp`` is a model / answer set / most-preferred answer set."""
    idx = index_of(interp, domain)
    as_mask = answer_set_mask(program, domain)
    is_as = bool(as_mask[idx])
    preferred = False
    if is_as:
        own = interp.fstar_set
        others = (_interp_at(int(i), domain).fstar_set for i in np.flatnonzero(as_mask))
        preferred = not any(o < own for o in others)
    return {"model": is_model(program, interp), "answer_set": is_as, "most_preferred": preferred}


def fstar_guard_property(wc: WitnessContext) -> bool:
    """Every model N of the preference/guard rules has N(A) != F wherever M'(A) = F*.

    The two rule groups split into independent components ``{A x t_A.,
    f_A <- A, not f_A.}`` over disjoint atoms, so checking each component's
    models separately covers every model of the union.
    """
    for a, t in wc.scaffold.t_atoms.items():
        f = wc.scaffold.f_atoms[a]
        component = Program([Rule((a, t)), Rule(f, (a,), (f,))])
        for n in semantics.enumerate_models(component):
            if n.value(a) == F or n.value(f) == F:
                return False
    return True


def verify_context(wc: WitnessContext, cap: int | None = None) -> dict:
    """Recompute the separation the construction promises; returns named checks."""
    union1, union2 = wc.first | wc.context, wc.second | wc.context
    domain = domain_of(union1 | union2)
    _check_cap(len(domain), cap)
    mp = wc.m_prime
    s1 = _status(union1, mp, domain)
    s2 = _status(union2, mp, domain)
    checks = {
        "m_prime_models_first": is_model(wc.first, mp),
        "fstar_guard_property": fstar_guard_property(wc),
    }
    if wc.case == CASE1:
        checks.update(
            m_prime_preferred_in_first=s1["most_preferred"],
            m_prime_answer_set_in_first=s1["answer_set"],
            m_prime_not_model_of_second=not s2["model"],
        )
    else:
        mpp = wc.scaffold.m_doubleprime
        checks.update(
            m_prime_preferred_in_second=s2["most_preferred"],
            m_prime_answer_set_in_second=s2["answer_set"],
            m_prime_not_preferred_in_first=not s1["most_preferred"],
            m_prime_not_answer_set_in_first=not s1["answer_set"],
            m_doubleprime_below_m_prime=mpp.precedes(mp, domain) and is_model(union1, mpp),
        )
    return checks


def _orient(tag: str, swapped: bool) -> str:
    if not swapped:
        return tag
    return SECOND_ONLY if tag == FIRST_ONLY else FIRST_ONLY


def strong_eq(
    p1: Program,
    p2: Program,
    mode: str = "most_preferred",
    cap: int | None = None,
    with_context: bool = True,
) -> EquivalenceVerdict:
    """Decide strong equivalence under most-preferred or all answer sets.

    Both modes reduce to logical equivalence, so ``mode`` only tags the
    verdict. With ``with_context`` a separating context is built and checked.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    verdict = replace(logically_equivalent(p1, p2, cap), mode=mode)
    if verdict.equivalent or not with_context:
        return verdict
    wc = build_witness_context(p1, p2, verdict.witness)
    checks = verify_context(wc, cap)
    if not all(checks.values()):
        failed = [k for k, ok in checks.items() if not ok]
        raise ContextVerificationError(f"constructed context does not separate: {failed}")
    return replace(
        verdict,
        context=wc.context,
        context_case=wc.case,
        discriminating_interpretation=wc.m_prime,
        checks=checks,
    )


# normal programs: three-valued models and standard answer sets


@dataclass(frozen=True)
class NormalWitnessContext:
    first: Program
    second: Program
    witness: Interpretation
    context: Program
    case: str
    m_prime: Interpretation
    d_atom: Optional[str] = None
    swapped: bool = False


def three_valued_equivalent(p1: Program, p2: Program, cap: int | None = None) -> EquivalenceVerdict:
    domain = domain_of(p1 | p2)
    _check_cap(len(domain), cap)
    witness, tag = _first_disagreement(p1, p2, domain, THREE_VALUED)
    return EquivalenceVerdict(witness is None, p1, p2, mode="normal", witness=witness, separated=tag)


def build_normal_context(p1: Program, p2: Program, m: Interpretation) -> NormalWitnessContext:
    """Context for normal programs from a three-valued model of exactly one of them."""
    first, second, swapped = _normalize(p1, p2, m)
    atoms = sorted(set((p1 | p2).atoms))
    m = m.restrict(atoms)
    m_prime = Interpretation((a, T if m.value(a) >= TSTAR else F) for a in atoms)
    if not is_model(second, m_prime):
        context = Program(Rule(a) for a in atoms if m_prime.value(a) == T)
        return NormalWitnessContext(first, second, m, context, CASE1, m_prime, None, swapped)
    tstar = [a for a in atoms if m.value(a) == TSTAR]
    fresh = _FreshNames(atoms)
    d_atom = fresh.numbered("d__")
    rules = [Rule(a) for a in atoms if m.value(a) == T]
    rules += [Rule(b, (a,)) for a in tstar for b in tstar if a != b]
    rules += [Rule(d_atom, (), (a,)) for a in tstar]
    return NormalWitnessContext(first, second, m, Program(rules), CASE2, m_prime, d_atom, swapped)


def verify_normal_context(wc: NormalWitnessContext, cap: int | None = None) -> dict:
    union1, union2 = wc.first | wc.context, wc.second | wc.context
    domain = domain_of(union1 | union2)
    truth = frozenset(a for a in wc.m_prime if wc.m_prime[a] == T)
    in1 = truth in gl_stable_models(union1, domain, cap)
    in2 = truth in gl_stable_models(union2, domain, cap)
    if wc.case == CASE1:
        return {"m_prime_stable_in_first": in1, "m_prime_not_stable_in_second": not in2}
    return {"m_prime_stable_in_second": in2, "m_prime_not_stable_in_first": not in1}


def normal_strong_eq(
    p1: Program, p2: Program, cap: int | None = None, with_context: bool = True
) -> EquivalenceVerdict:
    """Strong equivalence of normal programs under standard answer sets.

    Decided by comparing three-valued models, independently of the
    four-valued decider.
    """
    if not (p1.is_normal and p2.is_normal):
        raise NotNormalError()
    verdict = three_valued_equivalent(p1, p2, cap)
    if verdict.equivalent or not with_context:
        return verdict
    wc = build_normal_context(p1, p2, verdict.witness)
    checks = verify_normal_context(wc, cap)
    if not all(checks.values()):
        failed = [k for k, ok in checks.items() if not ok]
        raise ContextVerificationError(f"constructed context does not separate: {failed}")
    return replace(
        verdict,
        context=wc.context,
        context_case=wc.case,
        discriminating_interpretation=wc.m_prime,
        checks=checks,
    )
