"""Pipeline reports: named matrices, extracted relations and pass/fail checks."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .linalg import Matrix
from .operad import SPACES, Relation, render_relation
from .arith import ring_from_name


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    informational: bool = False

    def to_dict(self) -> dict:
        d = {"name": self.name, "pass": bool(self.passed), "detail": self.detail}
        if self.informational:
            d["informational"] = True
        return d


@dataclass
class PipelineReport:
    pipeline: str
    matrices: dict = field(default_factory=dict)
    relations: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def add_matrix(self, name: str, M: Matrix) -> Matrix:
        self.matrices[name] = M
        return M

    def check(self, name: str, passed: bool, detail: str = "", informational: bool = False) -> bool:
        self.checks.append(Check(name, bool(passed), detail, informational))
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed and not c.informational]

    def to_dict(self, timing: bool = True) -> dict:
        d = {
            "pipeline": self.pipeline,
            "matrices": {k: m.to_dict() for k, m in self.matrices.items()},
            "relations": [dict(r.to_dict(), text=render_relation(r)) for r in self.relations],
            "checks": [c.to_dict() for c in self.checks],
            "summary": self.summary,
        }
        if timing:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d

    def to_json(self, timing: bool = True, indent: int | None = 1) -> str:
        return json.dumps(self.to_dict(timing), indent=indent)

    @classmethod
    def from_dict(cls, d: dict) -> "PipelineReport":
        rels = []
        for r in d.get("relations", []):
            rels.append(relation_from_dict(r))
        return cls(
            pipeline=d["pipeline"],
            matrices={k: Matrix.from_dict(m) for k, m in d.get("matrices", {}).items()},
            relations=rels,
            checks=[Check(c["name"], c["pass"], c.get("detail", ""), c.get("informational", False))
                    for c in d.get("checks", [])],
            summary=d.get("summary", {}),
            elapsed_ms=d.get("elapsed_ms", 0.0),
        )

    def to_text(self, unicode: bool = False, timing: bool = True) -> str:
        lines = [f"== {self.pipeline}"]
        for k, v in self.summary.items():
            lines.append(f"  {k}: {v}")
        if self.relations:
            lines.append("  relations:")
            for i, r in enumerate(self.relations, 1):
                lines.append(f"    {i}. {render_relation(r, unicode=unicode)} = 0")
        lines.append("  checks:")
        for c in self.checks:
            tag = "PASS" if c.passed else ("info" if c.informational else "FAIL")
            extra = f"  ({c.detail})" if c.detail else ""
            lines.append(f"    [{tag}] {c.name}{extra}")
        if timing:
            lines.append(f"  elapsed: {self.elapsed_ms:.1f} ms")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "pipeline", "name", "pass", "detail"])
        for c in self.checks:
            w.writerow(["check", self.pipeline, c.name,
                        "info" if c.informational and not c.passed else str(c.passed).lower(),
                        c.detail])
        for i, r in enumerate(self.relations, 1):
            w.writerow(["relation", self.pipeline, str(i), "", render_relation(r)])
        return buf.getvalue()


def relation_from_dict(d: dict) -> Relation:
    space = SPACES[d["space"]]
    ring = ring_from_name(d.get("ring", "Q[q]"))
    coeffs = tuple(ring.parse(s) for s in d["coeffs"])
    return Relation(space, ring, coeffs)
