"""Text formats: the LPOD rule language and DIMACS CNF.

LPOD grammar (``%`` starts a comment running to end of line)::

    program  ::= { rule }
    rule     ::= head [ arrow [ body ] ] "."
    head     ::= atom { "x" atom }
    arrow    ::= "<-" | ":-"
    body     ::= literal { "," literal }
    literal  ::= atom | "not" atom
    atom     ::= [a-z][A-Za-z0-9_]*        (except the keyword "not")

Inside a head, tokens alternate between atoms and the ``x`` separator, so an
atom may itself be called ``x``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .logic import Program, Rule

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\f\v]+)|(?P<nl>\n)|(?P<comment>%[^\n]*)"
    r"|(?P<atom>[a-z][A-Za-z0-9_]*)|(?P<arrow><-|:-)|(?P<comma>,)|(?P<dot>\.)"
)


class LpodSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise LpodSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(_Token(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(_Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self, offset: int = 0) -> _Token:
        return self.tokens[min(self.i + offset, len(self.tokens) - 1)]

    def advance(self) -> _Token:
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, expected: str):
        tok = self.peek()
        found = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise LpodSyntaxError(f"expected {expected}, found {found}", tok.line, tok.column)

    def atom(self, what: str) -> str:
        tok = self.peek()
        if tok.kind != "atom" or tok.text == "not":
            self.fail(what)
        return self.advance().text

    def rule(self) -> Rule:
        head = [self.atom("head atom")]
        while self.peek().kind == "atom" and self.peek().text == "x":
            self.advance()
            head.append(self.atom("atom after 'x'"))
        pos, neg = [], []
        if self.peek().kind == "arrow":
            self.advance()
            if self.peek().kind != "dot":
                while True:
                    if self.peek().kind == "atom" and self.peek().text == "not":
                        self.advance()
                        neg.append(self.atom("atom after 'not'"))
                    else:
                        pos.append(self.atom("body literal"))
                    if self.peek().kind != "comma":
                        break
                    self.advance()
        if self.peek().kind != "dot":
            self.fail("'.'" if len(head) > 1 or pos or neg else "'x', '<-' or '.'")
        self.advance()
        return Rule(tuple(head), tuple(pos), tuple(neg))

    def program(self) -> Program:
        rules = []
        while self.peek().kind != "eof":
            rules.append(self.rule())
        return Program(rules)


def parse_program(text: str) -> Program:
    return _Parser(text).program()


def parse_rule(text: str) -> Rule:
    program = parse_program(text)
    if len(program) != 1:
        raise ValueError(f"expected exactly one rule, got {len(program)}")
    return program.rules[0]


def serialize_program(program: Program) -> str:
    if not len(program):
        return ""
    return "\n".join(str(r) for r in program) + "\n"


@dataclass(frozen=True)
class CnfFormula:
    """A 3-CNF formula with DIMACS literal conventions."""

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.num_vars < 1:
            raise ValueError("num_vars must be positive")
        for clause in self.clauses:
            if len(clause) != 3:
                raise ValueError(f"clause {clause} does not have exactly 3 literals")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"literal {lit} out of range 1..{self.num_vars}")

    def evaluate(self, assignment: dict[int, bool]) -> bool:
        return all(any(assignment[abs(l)] == (l > 0) for l in c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.num_vars} {len(self.clauses)}"]
        lines += [" ".join(map(str, c)) + " 0" for c in self.clauses]
        return "\n".join(lines) + "\n"


class DimacsError(ValueError):
    pass


def parse_dimacs(text: str, pad: bool = False) -> CnfFormula:
    """Parse DIMACS CNF; with ``pad`` short clauses repeat their last literal."""
    header = None
    literals: list[int] = []
    clauses: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None or len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: malformed header {line!r}")
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed header {line!r}") from None
            continue
        if header is None:
            raise DimacsError(f"line {lineno}: clause before 'p cnf' header")
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise DimacsError(f"line {lineno}: bad literal {tok!r}") from None
            if lit == 0:
                clauses.append(_fix_clause(literals, pad, lineno))
                literals = []
            else:
                if abs(lit) > header[0]:
                    raise DimacsError(f"line {lineno}: variable {abs(lit)} exceeds num_vars {header[0]}")
                literals.append(lit)
    if header is None:
        raise DimacsError("missing 'p cnf' header")
    if literals:
        clauses.append(_fix_clause(literals, pad, "eof"))
    if len(clauses) != header[1]:
        raise DimacsError(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def _fix_clause(literals: list[int], pad: bool, where) -> tuple[int, ...]:
    if len(literals) == 3:
        return tuple(literals)
    if pad and 1 <= len(literals) < 3:
        return tuple(literals + [literals[-1]] * (3 - len(literals)))
    raise DimacsError(f"line {where}: clause has {len(literals)} literals, expected 3")
