"""Crowd taxonomy and the emotion-level to crowd-group rules.

Eleven crowd types partition into five groups by motivating emotion:

    group 1  ambulatory, limited movement, spectator      (none; benign)
    group 2  expressive/cohesive, participatory           (happiness)
    group 3  aggressive, demonstrator, violent            (anger)
    group 4  escaping, dense/suffocating                  (fear)
    group 5  rushing/looting                              (anger + sadness)

Groups 3-5 are flagged dangerous for alerting. Five independent rules map a
window's emotion levels to active groups; since every rule is evaluated on
its own, several groups can coexist in one window.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .emotions import Emotion
from .temporal import Level


class UndefinedLevelsError(ValueError):
    """Crowd inference was invoked on undefined (no-data) levels."""


class CrowdType(Enum):
    """Crowd types used in emergency management, indices fixed 1..11."""

    AMBULATORY = 1
    LIMITED_MOVEMENT = 2
    SPECTATOR = 3
    EXPRESSIVE_COHESIVE = 4
    PARTICIPATORY = 5
    AGGRESSIVE = 6
    DEMONSTRATOR = 7
    ESCAPING = 8
    DENSE_SUFFOCATING = 9
    RUSHING_LOOTING = 10
    VIOLENT = 11

    @property
    def label(self) -> str:
        return self.name.lower()

    @property
    def display_name(self) -> str:
        return _DISPLAY[self]


_DISPLAY = {
    CrowdType.AMBULATORY: "ambulatory crowd",
    CrowdType.LIMITED_MOVEMENT: "limited movement crowd",
    CrowdType.SPECTATOR: "spectator crowd",
    CrowdType.EXPRESSIVE_COHESIVE: "expressive/cohesive crowd",
    CrowdType.PARTICIPATORY: "participatory crowd",
    CrowdType.AGGRESSIVE: "aggressive crowd",
    CrowdType.DEMONSTRATOR: "demonstrator crowd",
    CrowdType.ESCAPING: "escaping crowd",
    CrowdType.DENSE_SUFFOCATING: "dense/suffocating crowd",
    CrowdType.RUSHING_LOOTING: "rushing/looting crowd",
    CrowdType.VIOLENT: "violent crowd",
}


class CrowdGroup(Enum):
    """Clusters of crowd types sharing a motivating emotion."""

    GROUP1 = 1
    GROUP2 = 2
    GROUP3 = 3
    GROUP4 = 4
    GROUP5 = 5

    @property
    def label(self) -> str:
        return f"group{self.value}"

    @property
    def members(self) -> frozenset[CrowdType]:
        return _MEMBERS[self]

    @property
    def emotions(self) -> frozenset[Emotion]:
        """Motivating emotions of this group (empty for group 1)."""
        return _MOTIVATING[self]

    @property
    def dangerous(self) -> bool:
        return self.value >= 3


_MEMBERS = {
    CrowdGroup.GROUP1: frozenset(
        {CrowdType.AMBULATORY, CrowdType.LIMITED_MOVEMENT, CrowdType.SPECTATOR}
    ),
    CrowdGroup.GROUP2: frozenset(
        {CrowdType.EXPRESSIVE_COHESIVE, CrowdType.PARTICIPATORY}
    ),
    CrowdGroup.GROUP3: frozenset(
        {CrowdType.AGGRESSIVE, CrowdType.DEMONSTRATOR, CrowdType.VIOLENT}
    ),
    CrowdGroup.GROUP4: frozenset({CrowdType.ESCAPING, CrowdType.DENSE_SUFFOCATING}),
    CrowdGroup.GROUP5: frozenset({CrowdType.RUSHING_LOOTING}),
}

_MOTIVATING = {
    CrowdGroup.GROUP1: frozenset(),
    CrowdGroup.GROUP2: frozenset({Emotion.HAPPINESS}),
    CrowdGroup.GROUP3: frozenset({Emotion.ANGER}),
    CrowdGroup.GROUP4: frozenset({Emotion.FEAR}),
    CrowdGroup.GROUP5: frozenset({Emotion.ANGER, Emotion.SADNESS}),
}

_CONSEQUENT = {
    "R1": CrowdGroup.GROUP1,
    "R2": CrowdGroup.GROUP2,
    "R3": CrowdGroup.GROUP3,
    "R4": CrowdGroup.GROUP4,
    "R5": CrowdGroup.GROUP5,
}


def group_members(group: CrowdGroup) -> frozenset[CrowdType]:
    """Crowd types belonging to ``group``."""
    return group.members


@dataclass(frozen=True)
class Inference:
    """Crowd groups/types active in one window, plus the rules that fired.

    ``indeterminate`` marks the one level combination no rule covers:
    sadness high on its own. Such windows are surfaced explicitly instead of
    silently reporting an empty group set.
    """

    window_index: int
    groups: frozenset[CrowdGroup]
    crowd_types: frozenset[CrowdType]
    fired_rules: frozenset[str]
    danger: bool
    indeterminate: bool


def infer_crowd(levels: Sequence[Level], window_index: int = 0) -> Inference:
    """Run the five independent level rules and union their consequents.

    ``levels`` is (anger, fear, happiness, sadness). The rules:

        R1  nothing high            -> group 1
        R2  happiness high          -> group 2
        R3  anger high              -> group 3
        R4  fear high               -> group 4
        R5  anger and sadness high  -> group 5

    Raises UndefinedLevelsError when any level is undefined; no-data windows
    must not reach inference.
    """
    levels = tuple(levels)
    if len(levels) != 4 or any(not isinstance(level, Level) for level in levels):
        raise UndefinedLevelsError(f"need four defined levels, got {levels!r}")
    anger, fear, happiness, sadness = levels
    fired = set()
    if all(level is not Level.HIGH for level in levels):
        fired.add("R1")
    if happiness is Level.HIGH:
        fired.add("R2")
    if anger is Level.HIGH:
        fired.add("R3")
    if fear is Level.HIGH:
        fired.add("R4")
    if anger is Level.HIGH and sadness is Level.HIGH:
        fired.add("R5")
    groups = frozenset(_CONSEQUENT[rule] for rule in fired)
    crowd_types = frozenset(t for g in groups for t in g.members)
    return Inference(
        window_index=window_index,
        groups=groups,
        crowd_types=crowd_types,
        fired_rules=frozenset(fired),
        danger=any(g.dangerous for g in groups),
        indeterminate=not groups,
    )
