"""This module contains the response DTOs of the workbench use cases."""

from dataclasses import dataclass, field

from src.contexts.calculus.domain.services.printer_service import render_term
from src.contexts.calculus.domain.value_objects.certificate_vo import AppCertificateVO
from src.contexts.calculus.domain.value_objects.head_row_vo import HeadRowVO
from src.contexts.calculus.domain.value_objects.redex_vo import NormalizationResultVO


@dataclass
class CheckTermResponse:
    """Response DTO for typechecking.

    Attributes:
        formula (str): The rendered type.
    """

    formula: str


@dataclass
class StepTermResponse:
    """Response DTO for one reduction step.

    Attributes:
        redex (str): ``<path> <kind>`` of the contracted redex.
        term (str): The rendered reduct.
    """

    redex: str
    term: str


@dataclass
class NormalizeTermResponse:
    """Response DTO for normalization.

    Attributes:
        term (str): The rendered final term.
        steps (list[str]): ``<path> <kind>`` of every step.
        terms (list[str]): The rendered term after every step.
        exhausted (bool): Whether the step budget ran out.
    """

    term: str
    steps: list[str] = field(default_factory=list)
    terms: list[str] = field(default_factory=list)
    exhausted: bool = False

    @classmethod
    def from_vo(cls, vo: NormalizationResultVO) -> "NormalizeTermResponse":
        """Create a NormalizeTermResponse from a NormalizationResultVO.

        Args:
            vo (NormalizationResultVO): The normalization result.

        Returns:
            NormalizeTermResponse: The resulting DTO.
        """
        return cls(
            term=render_term(vo.term),
            steps=[str(step.redex) for step in vo.trace],
            terms=[render_term(step.term) for step in vo.trace],
            exhausted=vo.exhausted,
        )


@dataclass
class ExploreTermResponse:
    """Response DTO for exploration.

    Attributes:
        summary (str): ``nodes=<n> edges=<m> eta=<k> nf=<count>``.
        dot (str | None): DOT rendering when asked for.
        violations (list[str]): Subject-reduction violations found on the edges.
    """

    summary: str
    dot: str | None = None
    violations: list[str] = field(default_factory=list)


@dataclass
class ClassifyTermResponse:
    """Response DTO for head classification.

    Attributes:
        row (int): Row of the head table.
        head (str): Head variable or rendered head redex.
        args (list[str]): Rendered arguments.
        head_reduct (str | None): Rendered head reduct.
    """

    row: int
    head: str
    args: list[str]
    head_reduct: str | None

    @classmethod
    def from_vo(cls, vo: HeadRowVO) -> "ClassifyTermResponse":
        """Create a ClassifyTermResponse from a HeadRowVO."""
        return cls(
            row=vo.case,
            head=vo.head if isinstance(vo.head, str) else render_term(vo.head),
            args=[render_term(arg) for arg in vo.args],
            head_reduct=None if vo.head_reduct is None else render_term(vo.head_reduct),
        )

    def lines(self) -> list[str]:
        """Textual report, one field per line."""
        return [
            f"row {self.row}",
            f"head {self.head}",
            "args {" + ", ".join(self.args) + "}",
            f"hred {self.head_reduct if self.head_reduct is not None else '-'}",
        ]


@dataclass
class GenerateTermsResponse:
    """Response DTO for generation.

    Attributes:
        units (list[str]): One rendered unit or scenario per sample.
    """

    units: list[str]


@dataclass
class AppHarnessResponse:
    """Response DTO for the permutative-pivot harness.

    Attributes:
        verified (bool): Whether S1 was found strongly normalizing.
        summary (str): One-line digest of the certificate.
        steps (list[str]): One line per certified step.
    """

    verified: bool
    summary: str
    steps: list[str]

    @classmethod
    def from_vo(cls, verified: bool, vo: AppCertificateVO) -> "AppHarnessResponse":
        """Create an AppHarnessResponse from a certificate."""
        return cls(
            verified=verified,
            summary=vo.summary(),
            steps=[str(step) for step in vo.steps],
        )
