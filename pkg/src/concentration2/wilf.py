"""Checking Wilf's inequality g(S) <= (e(S) - 1) n(S) over enumerated families."""

from __future__ import annotations

import json
from collections.abc import Iterable, Iterator
from dataclasses import asdict, dataclass, field

from .classes import class_members, enumerate_c2_frobenius
from .semigroup import NumericalSemigroup, from_generators
from .trees import EnumerationRequest, Mode, walk_tree

__all__ = [
    "WilfRecord",
    "WilfReport",
    "wilf_check",
    "injection_bound_holds",
    "family",
    "verify_family",
    "verify_semigroups",
]


@dataclass(frozen=True)
class WilfRecord:
    msg: tuple[int, ...]
    frobenius: int
    multiplicity: int
    genus: int
    embedding: int
    n_count: int
    slack: int
    elementary: bool
    lemma19_ok: bool | None = None

    @property
    def holds(self) -> bool:
        return self.slack >= 0

    def to_dict(self) -> dict:
        row = asdict(self)
        row["msg"] = list(self.msg)
        return row


def wilf_check(S: NumericalSemigroup) -> WilfRecord:
    """Wilf slack (e - 1) n - g of S, plus the n >= m/2 + 2 test when F > 2m."""
    m, f = S.multiplicity, S.frobenius
    n = S.n_count
    half_bound = 2 * n >= m + 4 if f > 2 * m else None
    return WilfRecord(
        msg=S.minimal_generators,
        frobenius=f,
        multiplicity=m,
        genus=S.genus,
        embedding=S.embedding_dimension,
        n_count=n,
        slack=(S.embedding_dimension - 1) * n - S.genus,
        elementary=f < 2 * m,
        lemma19_ok=half_bound,
    )


def injection_bound_holds(S: NumericalSemigroup) -> bool:
    """For concentration two: h -> h + 1 on gaps h >= m (h != F), and F -> m,
    is an injection into the nonzero elements below F. Hence g <= m + n - 2.
    """
    m, f = S.multiplicity, S.frobenius
    image = [m if h == f else h + 1 for h in S.gaps if h >= m]
    if len(set(image)) != len(image):
        return False
    if not all(0 < y < f and y in S for y in image):
        return False
    return S.genus <= m + S.n_count - 2


@dataclass
class WilfReport:
    checked: int = 0
    min_slack: int | None = None
    violations: list[WilfRecord] = field(default_factory=list)
    lemma19_checked: int = 0
    lemma19_failures: list[WilfRecord] = field(default_factory=list)
    injection_failures: list[tuple[int, ...]] = field(default_factory=list)
    records: list[WilfRecord] = field(default_factory=list, repr=False)

    def add(self, S: NumericalSemigroup, keep_records: bool = True) -> WilfRecord:
        rec = wilf_check(S)
        self.checked += 1
        self.min_slack = rec.slack if self.min_slack is None else min(self.min_slack, rec.slack)
        if not rec.holds:
            self.violations.append(rec)
        if rec.lemma19_ok is not None:
            self.lemma19_checked += 1
            if not rec.lemma19_ok:
                self.lemma19_failures.append(rec)
        if not injection_bound_holds(S):
            self.injection_failures.append(S.minimal_generators)
        if keep_records:
            self.records.append(rec)
        return rec

    def merge(self, other: WilfReport) -> WilfReport:
        out = WilfReport(
            checked=self.checked + other.checked,
            min_slack=min(
                (s for s in (self.min_slack, other.min_slack) if s is not None), default=None
            ),
            violations=self.violations + other.violations,
            lemma19_checked=self.lemma19_checked + other.lemma19_checked,
            lemma19_failures=self.lemma19_failures + other.lemma19_failures,
            injection_failures=self.injection_failures + other.injection_failures,
            records=self.records + other.records,
        )
        return out

    @property
    def ok(self) -> bool:
        return not (self.violations or self.lemma19_failures or self.injection_failures)

    def summary(self) -> dict:
        return {
            "checked": self.checked,
            "violations": len(self.violations),
            "min_slack": self.min_slack,
            "lemma19_checked": self.lemma19_checked,
            "lemma19_failures": len(self.lemma19_failures),
            "injection_failures": len(self.injection_failures),
            # full gap sets so any counterexample can be rebuilt
            "violating_gaps": [
                list(from_generators(r.msg).gaps) for r in self.violations + self.lemma19_failures
            ],
        }

    def summary_line(self) -> str:
        line = f"{self.checked} checked, {len(self.violations)} violations"
        if self.min_slack is not None:
            line += f", min slack {self.min_slack}"
        line += f", n >= m/2 + 2: {self.lemma19_checked} applicable, {len(self.lemma19_failures)} failed"
        return line

    def jsonl(self) -> Iterator[str]:
        for rec in self.records:
            yield json.dumps(rec.to_dict())


def family(request: EnumerationRequest, workers: int = 1) -> Iterator[NumericalSemigroup]:
    """The concentration-two semigroups a request resolves to."""
    if request.mode is Mode.FROBENIUS:
        if request.root is not None:
            classes = [class_members(request.root)]
        else:
            classes = enumerate_c2_frobenius(request.frobenius, workers)
        for cls in classes:
            yield from cls.members
        return
    for node in walk_tree(request, workers):
        if node.depth > 0:
            yield node.semigroup


def verify_semigroups(semigroups: Iterable[NumericalSemigroup], keep_records: bool = True) -> WilfReport:
    report = WilfReport()
    for S in semigroups:
        report.add(S, keep_records)
    return report


def verify_family(request: EnumerationRequest, workers: int = 1, keep_records: bool = True) -> WilfReport:
    """Run :func:`wilf_check` on every concentration-two member of the family.

    The half-line root of a multiplicity tree is not part of the family.
    """
    return verify_semigroups(family(request, workers), keep_records)
