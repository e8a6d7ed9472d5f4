"""This module contains the enumerations of redex kinds and reduction strategies."""

from enum import Enum


class RedexKind(str, Enum):
    """Kinds of one-step reductions.

    BETA, PROJ and CASE_INJ are logical cuts, PERM the permutative cut and
    CLAS the classical cut. ANNIHILATE fires a mark against its box and only
    exists on marked terms.
    """

    BETA = "Beta"
    PROJ = "Proj"
    CASE_INJ = "CaseInj"
    PERM = "Perm"
    CLAS = "Clas"
    ANNIHILATE = "Annihilate"

    @property
    def is_logical(self) -> bool:
        """Whether the kind is a logical cut."""
        return self in (RedexKind.BETA, RedexKind.PROJ, RedexKind.CASE_INJ)


class StrategyKind(str, Enum):
    """Redex selection strategies for normalization."""

    HEAD = "head"
    LEFTMOST = "leftmost"
    RANDOM = "random"
