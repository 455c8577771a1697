"""JSON encoding of certificates and batch reports (schema 1)."""

from __future__ import annotations

import csv
import io
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import __version__
from .arith import two_prime_split
from .errors import InputError
from .family import FamilyParams
from .two_descent import rank2_certificate
from .weierstrass import IDENTITY, Point

SCHEMA = 1
STATUSES = ("certified_lb2", "hypotheses_unmet", "failed")


def point_to_json(P):
    if P is IDENTITY:
        return "O"
    return [str(P.x), str(P.y)]


def point_from_json(v):
    if v == "O":
        return IDENTITY
    return Point(Fraction(v[0]), Fraction(v[1]))


def certificate_to_dict(cert) -> dict:
    fam = cert.family
    return {
        "m": fam.m,
        "p": fam.p,
        "q": fam.q,
        "curve": {"a": fam.curve.a, "b": fam.curve.b},
        "hypotheses_met": cert.hypotheses_met,
        "torsion": {
            "primes": list(cert.torsion_primes),
            "counts": {str(p): n for p, n in sorted(cert.torsion_counts.items())},
            "bound": cert.torsion_bound,
            "trivial": cert.torsion_trivial,
        },
        "not_double": [
            {
                "label": ev.label,
                "point": point_to_json(ev.point),
                "quartic": [str(c) for c in ev.quartic],
                "rational_roots": [str(r) for r in ev.quartic_roots],
                "halves": [point_to_json(h) for h in ev.halves],
            }
            for ev in cert.not_double
        ],
        "facts": cert.facts,
        "rank_lower_bound": cert.rank_lower_bound,
        "note": cert.note,
        "explanation": cert.explanation(),
    }


def verify_certificate(d: dict) -> bool:
    """Recompute a serialized certificate from its inputs and compare verdicts."""
    fam = FamilyParams(d["m"], d["p"], d["q"])
    redo = certificate_to_dict(rank2_certificate(fam, d["torsion"]["primes"]))
    return redo == d


@dataclass
class TableRow:
    line: int
    m: int
    pq: int
    claimed_rank: int
    p: int = 0
    q: int = 0
    count: int = 1


@dataclass
class Report:
    command: str
    input: dict
    rows: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    schema: int = SCHEMA
    version: str = __version__

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d):
        if d.get("schema") != SCHEMA:
            raise ValueError(f"unsupported report schema {d.get('schema')!r}")
        return cls(**d)

    @property
    def exit_code(self):
        if self.errors:
            return 3
        if all(r["status"] == "certified_lb2" for r in self.rows):
            return 0
        return 1

    def summary(self):
        counts = {s: sum(r["status"] == s for r in self.rows) for s in STATUSES}
        parts = [f"{len(self.rows)} rows"] + [f"{k}={v}" for k, v in counts.items()]
        if self.errors:
            parts.append(f"rejected={len(self.errors)}")
        return " ".join(parts)


def parse_table(text: str):
    """Parse `m,pq,claimed_rank` CSV; returns (deduplicated rows, per-line errors)."""
    reader = csv.reader(io.StringIO(text))
    errors = []
    rows = {}
    header = next(reader, None)
    if header is None or [h.strip() for h in header] != ["m", "pq", "claimed_rank"]:
        return [], [{"line": 1, "error": f"expected header m,pq,claimed_rank, got {header}"}]
    for lineno, rec in enumerate(reader, start=2):
        if not rec or all(not f.strip() for f in rec):
            continue
        try:
            if len(rec) != 3:
                raise InputError(f"expected 3 fields, got {len(rec)}")
            m, pq, rank = (int(f) for f in rec)
            split = two_prime_split(pq)
            if split is None:
                raise InputError(f"pq={pq} is not a product of two distinct odd primes")
            p, q = split
            FamilyParams(m, p, q)
        except ValueError as e:
            errors.append({"line": lineno, "error": str(e)})
            continue
        key = (m, pq)
        if key in rows:
            rows[key].count += 1
        else:
            rows[key] = TableRow(lineno, m, pq, rank, p, q)
    return list(rows.values()), errors
