from __future__ import annotations

from dataclasses import dataclass, field

from ..graph import Graph

REDUCED = "reduced"
NOT_IN_CLASS = "not-in-class"
RESOLVED_YES = "resolved-yes"
RESOLVED_NO = "resolved-no"


@dataclass(frozen=True)
class RuleRecord:
    """One applied reduction step.

    `deleted` vertices leave the graph, `marked` vertices join the
    modulator set X, and `ell_delta` is added to the threshold.
    """

    rule: str
    deleted: tuple = ()
    marked: tuple = ()
    ell_delta: int = 0
    note: str = ""

    def as_dict(self, label=lambda v: v) -> dict:
        out = {"rule": self.rule}
        if self.deleted:
            out["deleted"] = [label(v) for v in self.deleted]
        if self.marked:
            out["marked"] = [label(v) for v in self.marked]
        if self.ell_delta:
            out["ell_delta"] = self.ell_delta
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class KernelInstance:
    """Output of a kernel or compression.

    For verdict `reduced` the instance (graph, weights, threshold) is the
    answer-equivalent reduced instance; otherwise `graph` is None and the
    verdict is the answer.
    """

    verdict: str
    graph: Graph | None = None
    weights: dict | None = None
    threshold: int | None = None
    trace: tuple = ()
    extra: dict = field(default_factory=dict)

    @property
    def answer(self) -> bool | None:
        if self.verdict == RESOLVED_YES:
            return True
        if self.verdict == RESOLVED_NO:
            return False
        return None
