"""Four-valued truth values, LPOD rules and programs, and rule evaluation.

Truth values are ``F < F* < T* < T``. Negation, conjunction (min),
disjunction (max), ordered disjunction and implication follow the
four-valued logic used to give LPODs a purely model-theoretic semantics.
"""
from __future__ import annotations

import enum
import re
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import reduce

ATOM_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


class TruthValue(enum.IntEnum):
    """A value of the four-valued logic.

    The integer codes make the total order the natural integer order, so
    ``min``/``max`` and ``<=`` work directly.
    """

    F = 0
    FSTAR = 1
    TSTAR = 2
    T = 3

    def __str__(self) -> str:
        return _NAMES[self]

    def __repr__(self) -> str:
        return f"TruthValue({_NAMES[self]!r})"

    @classmethod
    def parse(cls, text: str) -> "TruthValue":
        try:
            return _BY_NAME[text.strip()]
        except KeyError:
            raise ValueError(f"unknown truth value {text!r}") from None

    def precedes(self, other: "TruthValue") -> bool:
        """Strict information order: F below everything, T* below T."""
        return (int(self), int(other)) in _PRECEDES

    def preceq(self, other: "TruthValue") -> bool:
        return self == other or self.precedes(other)


F, FSTAR, TSTAR, T = TruthValue.F, TruthValue.FSTAR, TruthValue.TSTAR, TruthValue.T

_NAMES = {F: "F", FSTAR: "F*", TSTAR: "T*", T: "T"}
_BY_NAME = {name: value for value, name in _NAMES.items()}
_PRECEDES = frozenset({(0, 1), (0, 2), (0, 3), (2, 3)})


def eval_not(v: TruthValue) -> TruthValue:
    return T if v <= FSTAR else F


def eval_and(v1: TruthValue, v2: TruthValue) -> TruthValue:
    return min(v1, v2)


def eval_or(v1: TruthValue, v2: TruthValue) -> TruthValue:
    return max(v1, v2)


def eval_ordered(v1: TruthValue, v2: TruthValue) -> TruthValue:
    """Ordered disjunction: fall through to the second operand only on F*."""
    return v2 if v1 == FSTAR else v1


def eval_implies(head: TruthValue, body: TruthValue) -> TruthValue:
    return T if head >= body else F


def check_atom(name: str) -> str:
    if not isinstance(name, str) or not ATOM_RE.match(name) or name == "not":
        raise ValueError(f"invalid atom name {name!r}")
    return name


@dataclass(frozen=True)
class Rule:
    """``head[0] x ... x head[n-1] <- pos..., not neg...``"""

    head: tuple[str, ...]
    pos: tuple[str, ...] = ()
    neg: tuple[str, ...] = ()

    def __post_init__(self):
        for field_name in ("head", "pos", "neg"):
            value = getattr(self, field_name)
            if isinstance(value, str):
                value = (value,)
            object.__setattr__(self, field_name, tuple(check_atom(a) for a in value))
        if not self.head:
            raise ValueError("rule head must contain at least one atom")

    @property
    def atoms(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(self.head + self.pos + self.neg))

    @property
    def is_normal(self) -> bool:
        return len(self.head) == 1

    @property
    def is_fact(self) -> bool:
        return not self.pos and not self.neg

    def body_value(self, interp: "Interpretation | Mapping[str, TruthValue]") -> TruthValue:
        values = [_lookup(interp, a) for a in self.pos]
        values += [eval_not(_lookup(interp, b)) for b in self.neg]
        return min(values, default=T)

    def head_value(self, interp: "Interpretation | Mapping[str, TruthValue]") -> TruthValue:
        return reduce(eval_ordered, (_lookup(interp, c) for c in self.head))

    def __str__(self) -> str:
        head = " x ".join(self.head)
        body = list(self.pos) + [f"not {b}" for b in self.neg]
        if body:
            return f"{head} <- {', '.join(body)}."
        return f"{head}."


def eval_rule(rule: Rule, interp: "Interpretation | Mapping[str, TruthValue]") -> TruthValue:
    """Value of the rule as an implication; always T or F."""
    return eval_implies(rule.head_value(interp), rule.body_value(interp))


def _lookup(interp, atom: str) -> TruthValue:
    return TruthValue(interp.get(atom, F))


class Program:
    """A finite set of rules; insertion order is kept for printing.

    ``atoms`` lists atoms in first-occurrence order. Programs compare equal
    when they contain the same rules regardless of order.
    """

    __slots__ = ("rules", "atoms", "_rule_set")

    def __init__(self, rules: Iterable[Rule] = ()):
        self.rules: tuple[Rule, ...] = tuple(dict.fromkeys(rules))
        self._rule_set = frozenset(self.rules)
        self.atoms: tuple[str, ...] = tuple(
            dict.fromkeys(a for r in self.rules for a in r.atoms)
        )

    def __iter__(self) -> Iterator[Rule]:
        return iter(self.rules)

    def __len__(self) -> int:
        return len(self.rules)

    def __contains__(self, rule: object) -> bool:
        return rule in self._rule_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Program):
            return NotImplemented
        return self._rule_set == other._rule_set

    def __hash__(self) -> int:
        return hash(self._rule_set)

    def __or__(self, other: "Program") -> "Program":
        return Program(self.rules + tuple(other.rules))

    def __repr__(self) -> str:
        return f"Program({list(self.rules)!r})"

    def __str__(self) -> str:
        return "\n".join(str(r) for r in self.rules)

    @property
    def is_normal(self) -> bool:
        return all(r.is_normal for r in self.rules)

    def without(self, rule: Rule) -> "Program":
        return Program(r for r in self.rules if r != rule)

    def issubset(self, other: "Program") -> bool:
        return self._rule_set <= other._rule_set


def is_model(program: Program, interp: "Interpretation | Mapping[str, TruthValue]") -> bool:
    return all(eval_rule(r, interp) == T for r in program)


class Interpretation(Mapping):
    """Immutable map from atoms to truth values; unlisted atoms are F.

    Explicit ``F`` entries are kept for display but ignored by equality and
    hashing, so two interpretations are equal iff they agree on every atom.
    """

    __slots__ = ("_values", "_key")

    def __init__(self, values: Mapping[str, TruthValue] | Iterable[tuple[str, TruthValue]] = ()):
        items = values.items() if isinstance(values, Mapping) else values
        self._values = {check_atom(a): TruthValue(v) for a, v in items}
        self._key = frozenset((a, v) for a, v in self._values.items() if v != F)

    def __getitem__(self, atom: str) -> TruthValue:
        return self._values[atom]

    def get(self, atom: str, default: TruthValue = F) -> TruthValue:
        return self._values.get(atom, default)

    def value(self, atom: str) -> TruthValue:
        return self._values.get(atom, F)

    def __iter__(self) -> Iterator[str]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Interpretation):
            return self._key == other._key
        if isinstance(other, Mapping):
            return self == Interpretation(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        inner = ", ".join(f"{a}: {v}" for a, v in self._values.items())
        return "{" + inner + "}"

    def restrict(self, atoms: Iterable[str]) -> "Interpretation":
        return Interpretation((a, self.value(a)) for a in atoms)

    def extend(self, values: Mapping[str, TruthValue]) -> "Interpretation":
        merged = dict(self._values)
        merged.update(values)
        return Interpretation(merged)

    def atoms_with(self, value: TruthValue) -> frozenset[str]:
        return frozenset(a for a, v in self._values.items() if v == value)

    @property
    def fstar_set(self) -> frozenset[str]:
        return self.atoms_with(FSTAR)

    def is_solid(self, atoms: Iterable[str] | None = None) -> bool:
        atoms = self._values if atoms is None else atoms
        return all(self.value(a) != TSTAR for a in atoms)

    def is_three_valued(self, atoms: Iterable[str] | None = None) -> bool:
        atoms = self._values if atoms is None else atoms
        return all(self.value(a) != FSTAR for a in atoms)

    def preceq(self, other: "Interpretation", atoms: Iterable[str] | None = None) -> bool:
        """Pointwise information order over ``atoms`` (default: both domains)."""
        if atoms is None:
            atoms = set(self._values) | set(other._values)
        return all(self.value(a).preceq(other.value(a)) for a in atoms)

    def precedes(self, other: "Interpretation", atoms: Iterable[str] | None = None) -> bool:
        if atoms is None:
            atoms = set(self._values) | set(other._values)
        atoms = list(atoms)
        return self.preceq(other, atoms) and any(self.value(a) != other.value(a) for a in atoms)

    def format(self, atoms: Iterable[str] | None = None) -> str:
        """Render as ``{(a,T), (b,F*)}`` in the given atom order."""
        atoms = self._values if atoms is None else atoms
        return "{" + ", ".join(f"({a},{self.value(a)})" for a in atoms) + "}"
