"""Exhaustive model enumeration, answer sets and most-preferred answer sets.

Interpretations over a domain of ``n`` atoms are indexed by their packed
code: atoms are sorted by name, the first atom is the most significant
base-4 digit, and digit values are the truth-value codes ``F=0 .. T=3``.
Index order is therefore lexicographic order on value tuples, and every
listing returned here follows it.

Models are found by evaluating every rule over blocks of the index range
with numpy. Minimal models are then found without pairwise comparison: a
down-closure along each atom axis of the ``(4,)*n`` model table yields,
for every interpretation, whether some model lies below it.
"""
from __future__ import annotations

import os
from collections.abc import Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .logic import FSTAR, Interpretation, Program, TruthValue

DEFAULT_CAP = 12
BLOCK_DIGITS = 9

FOUR_VALUED = (0, 1, 2, 3)
THREE_VALUED = (0, 2, 3)


class EnumerationCapError(RuntimeError):
    def __init__(self, n_atoms: int, cap: int):
        super().__init__(
            f"instance too large for exhaustive enumeration: {n_atoms} atoms exceeds cap {cap}"
        )
        self.n_atoms = n_atoms
        self.cap = cap


class NotNormalError(ValueError):
    def __init__(self):
        super().__init__("not a normal program: some rule head has more than one atom")


class AnswerSet(Interpretation):
    """A solid minimal model; ``fstar_set`` is the set of atoms mapped to F*."""

    __slots__ = ()


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("LPOD_LAB_THREADS", "1")))
    except ValueError:
        return 1


def domain_of(program: Program, atoms: Iterable[str] | None = None) -> tuple[str, ...]:
    extra = () if atoms is None else tuple(atoms)
    return tuple(sorted(set(program.atoms) | set(extra)))


def _check_cap(n: int, cap: int | None) -> None:
    cap = DEFAULT_CAP if cap is None else cap
    if n > cap:
        raise EnumerationCapError(n, cap)


def _compile(program: Program, domain: Sequence[str]):
    index = {a: i for i, a in enumerate(domain)}
    return [
        ([index[c] for c in r.head], [index[a] for a in r.pos], [index[b] for b in r.neg])
        for r in program
    ]


def _low_columns(k: int, alphabet: Sequence[int]) -> list[np.ndarray]:
    """Value columns of the ``k`` least significant atoms over one block."""
    base = len(alphabet)
    idx = np.arange(base**k, dtype=np.int64)
    codes = np.asarray(alphabet, dtype=np.uint8)
    return [codes[(idx // base ** (k - 1 - j)) % base] for j in range(k)]


def _eval_block(compiled, block: int, high: int, low_cols, alphabet) -> np.ndarray:
    # the high atoms are constant across a block, so they enter as scalars
    base = len(alphabet)
    digits = []
    for _ in range(high):
        block, d = divmod(block, base)
        digits.append(alphabet[d])
    cols = digits[::-1] + low_cols
    size = len(low_cols[0]) if low_cols else 1
    ok = np.ones(size, dtype=bool)
    negs: dict = {}
    for head, pos, neg in compiled:
        body = 3
        for a in pos:
            body = np.minimum(body, cols[a])
        for b in neg:
            if b not in negs:
                v = cols[b]
                negs[b] = (3 if v <= 1 else 0) if isinstance(v, int) else np.where(v <= 1, 3, 0).astype(np.uint8)
            body = np.minimum(body, negs[b])
        value = cols[head[0]]
        for c in head[1:]:
            if isinstance(value, int):
                if value == 1:
                    value = cols[c]
            else:
                value = np.where(value == 1, cols[c], value)
        ok &= value >= body
    return ok


def model_mask(
    program: Program, domain: Sequence[str], alphabet: Sequence[int] = FOUR_VALUED
) -> np.ndarray:
    """Boolean table over all interpretations of ``domain`` marking the models."""
    n = len(domain)
    base = len(alphabet)
    k = min(n, BLOCK_DIGITS)
    low_cols = _low_columns(k, alphabet)
    compiled = _compile(program, domain)
    blocks = range(base ** (n - k))
    work = lambda b: _eval_block(compiled, b, n - k, low_cols, alphabet)  # noqa: E731
    threads = worker_count()
    if threads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(threads) as pool:
            parts = list(pool.map(work, blocks))
    else:
        parts = [work(b) for b in blocks]
    return np.concatenate(parts)


def _interp_at(index: int, domain: Sequence[str], alphabet: Sequence[int] = FOUR_VALUED, cls=Interpretation):
    base = len(alphabet)
    values = []
    for j in range(len(domain) - 1, -1, -1):
        index, digit = divmod(index, base)
        values.append((domain[j], TruthValue(alphabet[digit])))
    return cls(reversed(values))


def index_of(interp: Interpretation, domain: Sequence[str]) -> int:
    index = 0
    for a in domain:
        index = index * 4 + int(interp.value(a))
    return index


def minimal_mask(mask: np.ndarray, n: int) -> np.ndarray:
    """Mark the models that have no model strictly below them in the ≺ order."""
    if n == 0:
        return mask.copy()
    below = mask.reshape((4,) * n).copy()
    for ax in range(n):
        b = np.moveaxis(below, ax, 0)
        b[1] |= b[0]
        b[2] |= b[0]
        b[3] |= b[2]
    # every y < x lies below a lower cover of x: lower one coordinate by one step
    strict = np.zeros_like(below)
    for ax in range(n):
        s = np.moveaxis(strict, ax, 0)
        b = np.moveaxis(below, ax, 0)
        s[1] |= b[0]
        s[2] |= b[0]
        s[3] |= b[2]
    return mask & ~strict.reshape(-1)


def solid_mask(n: int) -> np.ndarray:
    solid = np.ones((4,) * n, dtype=bool)
    for ax in range(n):
        np.moveaxis(solid, ax, 0)[2] = False
    return solid.reshape(-1)


def enumerate_models(
    program: Program, atoms: Iterable[str] | None = None, cap: int | None = None
) -> list[Interpretation]:
    """All four-valued models of ``program`` over its atoms (plus ``atoms``)."""
    domain = domain_of(program, atoms)
    _check_cap(len(domain), cap)
    mask = model_mask(program, domain)
    return [_interp_at(int(i), domain) for i in np.flatnonzero(mask)]


def three_valued_models(
    program: Program, atoms: Iterable[str] | None = None, cap: int | None = None
) -> list[Interpretation]:
    domain = domain_of(program, atoms)
    _check_cap(len(domain), cap)
    mask = model_mask(program, domain, THREE_VALUED)
    return [_interp_at(int(i), domain, THREE_VALUED) for i in np.flatnonzero(mask)]


def answer_set_mask(program: Program, domain: Sequence[str]) -> np.ndarray:
    mask = model_mask(program, domain)
    return minimal_mask(mask, len(domain)) & solid_mask(len(domain))


def answer_sets(
    program: Program, atoms: Iterable[str] | None = None, cap: int | None = None
) -> list[AnswerSet]:
    """Solid ≼-minimal models; minimality is judged against all models."""
    domain = domain_of(program, atoms)
    _check_cap(len(domain), cap)
    found = np.flatnonzero(answer_set_mask(program, domain))
    return [_interp_at(int(i), domain, cls=AnswerSet) for i in found]


def preferred_among(candidates: Sequence[Interpretation]) -> list:
    """Keep the candidates whose F*-set has no strict subset among the others."""
    fstars = [c.fstar_set for c in candidates]
    return [
        c for c, own in zip(candidates, fstars)
        if not any(other < own for other in fstars)
    ]


def most_preferred(
    program: Program, atoms: Iterable[str] | None = None, cap: int | None = None
) -> list[AnswerSet]:
    return preferred_among(answer_sets(program, atoms, cap))


def gl_stable_models(
    program: Program, atoms: Iterable[str] | None = None, cap: int | None = None
) -> list[frozenset[str]]:
    """Gelfond-Lifschitz stable models of a normal program, by brute force.

    Independent of the four-valued engine: each candidate set ``S`` is
    checked against the least model of the reduct ``P^S``.
    """
    if not program.is_normal:
        raise NotNormalError()
    domain = domain_of(program, atoms)
    n = len(domain)
    _check_cap(n, cap)
    stable = []
    for bits in range(1 << n):
        candidate = frozenset(domain[j] for j in range(n) if bits >> (n - 1 - j) & 1)
        reduct = [(r.head[0], r.pos) for r in program if not candidate.intersection(r.neg)]
        if least_model(reduct) == candidate:
            stable.append(candidate)
    return stable


def least_model(definite_rules: Iterable[tuple[str, Sequence[str]]]) -> frozenset[str]:
    rules = list(definite_rules)
    derived: set[str] = set()
    changed = True
    while changed:
        changed = False
        for head, body in rules:
            if head not in derived and derived.issuperset(body):
                derived.add(head)
                changed = True
    return frozenset(derived)


def as_two_valued(atom_set: Iterable[str], domain: Iterable[str]) -> Interpretation:
    """Embed a set of true atoms as an interpretation with values T/F."""
    atom_set = set(atom_set)
    return Interpretation(
        (a, TruthValue.T if a in atom_set else TruthValue.F) for a in sorted(domain)
    )


def fstar_atoms(interp: Interpretation) -> frozenset[str]:
    return interp.atoms_with(FSTAR)
