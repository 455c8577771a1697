"""Finite congruence obstructions, checked by exhaustive residue enumeration.

A spec says: for every residue assignment of its variables compatible with
their constraints, the polynomial is nonzero modulo N.  `check_obstruction`
returns the assignments where it vanishes, so an empty list certifies the
obstruction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd, prod

import numpy as np
import sympy

from .errors import BudgetExceeded

MAX_MODULUS = 2**16
MAX_SPACE = 10**8
_CHUNK = 1 << 20

_CONSTRAINT = re.compile(
    r"^(?:(?P<any>any)|(?P<odd>odd)|(?P<even>even)"
    r"|(?P<neg>not\s+)?(?P<r>-?\d+)\s+mod\s+(?P<k>\d+)"
    r"|coprime\s+(?P<c>\d+))$"
)


def _parse_clause(text):
    m = _CONSTRAINT.match(text.strip())
    if m is None:
        raise ValueError(f"unrecognised constraint {text!r}")
    if m["any"]:
        return ("any",)
    if m["odd"]:
        return ("cong", 1, 2)
    if m["even"]:
        return ("cong", 0, 2)
    if m["c"]:
        return ("coprime", int(m["c"]))
    kind = "ncong" if m["neg"] else "cong"
    k = int(m["k"])
    return (kind, int(m["r"]) % k, k)


def _admissible(clause, v, n):
    """Whether the class v mod n contains an integer satisfying the clause."""
    kind = clause[0]
    if kind == "any":
        return True
    if kind == "cong":
        _, r, k = clause
        return (v - r) % gcd(n, k) == 0
    if kind == "ncong":
        _, r, k = clause
        return not (n % k == 0 and (v - r) % k == 0)
    return gcd(v, gcd(n, clause[1])) == 1


@dataclass(frozen=True)
class Variable:
    name: str
    constraint: str = "any"  # clauses joined by ';', e.g. "odd; coprime 3"

    def residues(self, n):
        clauses = [_parse_clause(c) for c in self.constraint.split(";")]
        return [v for v in range(n) if all(_admissible(c, v, n) for c in clauses)]


@dataclass(frozen=True)
class ObstructionSpec:
    name: str
    modulus: int
    polynomial: str
    variables: tuple
    expect_empty: bool = True
    note: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))

    @cached_property
    def terms(self):
        """[(coefficient mod N, exponent tuple)] of the expanded polynomial."""
        names = [v.name for v in self.variables]
        syms = sympy.symbols(names)
        local = dict(zip(names, syms))
        expr = sympy.sympify(self.polynomial, locals=local)
        poly = sympy.Poly(sympy.expand(expr), *syms) if syms else None
        if poly is None:
            return [(int(expr) % self.modulus, ())]
        out = []
        for exps, c in poly.terms():
            if c.q != 1:
                raise ValueError(f"{self.name}: non-integer coefficient {c}")
            out.append((int(c) % self.modulus, exps))
        return out

    def domains(self):
        return [v.residues(self.modulus) for v in self.variables]

    def space(self):
        return prod(len(d) for d in self.domains())

    def to_dict(self):
        return {
            "name": self.name,
            "modulus": self.modulus,
            "polynomial": self.polynomial,
            "variables": [[v.name, v.constraint] for v in self.variables],
            "expect_empty": self.expect_empty,
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(
            name=d["name"],
            modulus=int(d["modulus"]),
            polynomial=d["polynomial"],
            variables=tuple(Variable(n, c) for n, c in d["variables"]),
            expect_empty=bool(d.get("expect_empty", True)),
            note=d.get("note", ""),
        )


def check_obstruction(spec: ObstructionSpec):
    """Every admissible residue assignment where the polynomial is 0 mod N.

    Assignments are dicts, in lexicographic order of the residue tuples.
    """
    n = spec.modulus
    if not 1 <= n <= MAX_MODULUS:
        raise BudgetExceeded(f"{spec.name}: modulus {n} outside [1, {MAX_MODULUS}]")
    domains = [np.array(d, dtype=np.int64) for d in spec.domains()]
    total = prod(len(d) for d in domains)
    if total > MAX_SPACE:
        raise BudgetExceeded(f"{spec.name}: {total} assignments exceed {MAX_SPACE}")
    if total == 0:
        return []
    terms = spec.terms
    max_exp = [max((e[i] for _, e in terms), default=0) for i in range(len(domains))]
    # power tables: powers[i][e][r] = r**e mod n
    powers = []
    for i in range(len(domains)):
        table = np.ones((max_exp[i] + 1, n), dtype=np.int64) % n
        base = np.arange(n, dtype=np.int64)
        for e in range(1, max_exp[i] + 1):
            table[e] = table[e - 1] * base % n
        powers.append(table)

    names = [v.name for v in spec.variables]
    sizes = [len(d) for d in domains]
    hits = []
    for start in range(0, total, _CHUNK):
        flat = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        idx = np.unravel_index(flat, sizes) if sizes else ()
        values = [domains[i][idx[i]] for i in range(len(domains))]
        acc = np.zeros(len(flat), dtype=np.int64)
        for c, exps in terms:
            term = np.full(len(flat), c, dtype=np.int64)
            for i, e in enumerate(exps):
                if e:
                    term = term * powers[i][e][values[i]] % n
            acc = (acc + term) % n
        for j in np.nonzero(acc == 0)[0]:
            hits.append({names[i]: int(values[i][j]) for i in range(len(values))})
    return hits


def verdict(spec: ObstructionSpec, solutions) -> bool:
    """True when the enumeration agrees with expect_empty."""
    return (not solutions) == spec.expect_empty


def format_spec(spec: ObstructionSpec, solutions=None) -> str:
    cons = ", ".join(f"{v.name}: {v.constraint}" for v in spec.variables) or "-"
    head = f"[{spec.name}] mod {spec.modulus}  vars({cons})  expect {'empty' if spec.expect_empty else 'solutions'}"
    lines = [head, f"    {spec.polynomial} == 0"]
    if spec.note:
        lines.append(f"    note: {spec.note}")
    if solutions is not None:
        ok = verdict(spec, solutions)
        found = f"{len(solutions)} solution(s)"
        if solutions:
            found += f", first {solutions[0]}"
        lines.append(f"    result: {found} -> {'OK' if ok else 'MISMATCH'}")
    return "\n".join(lines)
