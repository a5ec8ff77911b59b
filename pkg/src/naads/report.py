"""Structured checker verdicts and their deterministic text rendering.

Certified/Refuted are reserved for exact or finitely checkable claims;
asymptotic claims only ever get Evidence* verdicts.  Reports render as stable
key: value blocks so identical runs produce byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction


class Verdict(Enum):
    CERTIFIED = "Certified"
    REFUTED = "Refuted"
    EVIDENCE_FOR = "EvidenceFor"
    EVIDENCE_AGAINST = "EvidenceAgainst"
    INCONCLUSIVE_BUDGET = "InconclusiveBudget"


# How a witness's distances are recomputed from its points and times:
#   pair_orbit:   distances[i] = d(omega_{t_i}(p0), omega_{t_i}(p1))
#   point_return: distances[i] = d(omega_{t_i}(p0), p0)
#   point_target: distances[i] = d(omega_{t_i}(p0), p1)
#   hull_miss:    distances[0] = min distance from the hull sample of p0 to p1
WITNESS_KINDS = ("pair_orbit", "point_return", "point_target", "hull_miss")


@dataclass(frozen=True)
class Witness:
    kind: str
    points: tuple
    times: tuple
    distances: tuple
    note: str = ""

    def __post_init__(self):
        if self.kind not in WITNESS_KINDS:
            raise ValueError(f"unknown witness kind {self.kind!r}")


def format_value(v) -> str:
    """Deterministic scalar/collection formatting shared by all reports."""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Verdict):
        return v.value
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(format_value(e) for e in v) + "]"
    if v is None:
        return "none"
    return str(v)


@dataclass
class PropertyReport:
    property: str
    verdict: Verdict
    parameters: dict
    witnesses: list[Witness] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def render(self, timestamp: str | None = None) -> str:
        lines = ["schema: naads-report/1"]
        if timestamp is not None:
            lines.append(f"timestamp: {timestamp}")
        lines.append(f"property: {self.property}")
        lines.append(f"verdict: {self.verdict.value}")
        for key in sorted(self.parameters):
            lines.append(f"param.{key}: {format_value(self.parameters[key])}")
        for key in sorted(self.details):
            lines.append(f"detail.{key}: {format_value(self.details[key])}")
        for i, w in enumerate(self.witnesses, start=1):
            lines.append(f"witness.{i}.kind: {w.kind}")
            lines.append(f"witness.{i}.points: {format_value(w.points)}")
            lines.append(f"witness.{i}.times: {format_value(w.times)}")
            lines.append(f"witness.{i}.distances: {format_value(w.distances)}")
            if w.note:
                lines.append(f"witness.{i}.note: {w.note}")
        return "\n".join(lines) + "\n"


@dataclass
class ReturnTimeSet:
    """Times |n| <= window_n at which the flow returns eps-close to base.

    censored_left_gap / censored_right_gap measure from the window edges to
    the nearest return: a finite window cannot witness unbounded gaps, so
    edge gaps are reported separately from internal ones.
    """

    base: float
    eps: float
    window_n: int
    times: list[int]
    max_internal_gap: int
    censored_left_gap: int
    censored_right_gap: int

    def render(self, timestamp: str | None = None) -> str:
        lines = ["schema: naads-return-times/1"]
        if timestamp is not None:
            lines.append(f"timestamp: {timestamp}")
        lines.append(f"base: {format_value(self.base)}")
        lines.append(f"eps: {format_value(self.eps)}")
        lines.append(f"window_n: {self.window_n}")
        lines.append(f"times: {format_value(self.times)}")
        lines.append(f"max_internal_gap: {self.max_internal_gap}")
        lines.append(f"censored_left_gap: {self.censored_left_gap}")
        lines.append(f"censored_right_gap: {self.censored_right_gap}")
        return "\n".join(lines) + "\n"
