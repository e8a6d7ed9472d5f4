"""Unit tests for redex, summary and certificate value objects."""

import pytest

from src.contexts.calculus.domain.exceptions.exception import InvalidTermException
from src.contexts.calculus.domain.value_objects.certificate_vo import (
    AppCertificateVO,
    CertificateStepVO,
)
from src.contexts.calculus.domain.value_objects.graph_summary_vo import GraphSummaryVO
from src.contexts.calculus.domain.value_objects.path_vo import PathVO
from src.contexts.calculus.domain.value_objects.redex_kind_vo import RedexKind
from src.contexts.calculus.domain.value_objects.redex_vo import (
    NormalizationResultVO,
    RedexVO,
    ReductionStepVO,
)
from src.contexts.calculus.domain.value_objects.term_vo import IVar


class TestRedexVO:
    """Unit tests for RedexVO and its companions."""

    def test_should_render_path_and_kind(self):
        """Should render as path then kind."""
        assert str(RedexVO(PathVO(("fun",)), RedexKind.PERM)) == "/fun Perm"
        assert str(RedexVO(PathVO.root(), RedexKind.CASE_INJ)) == "/ CaseInj"

    def test_should_raise_for_missing_kind(self):
        """Should require a kind."""
        with pytest.raises(InvalidTermException):
            RedexVO(PathVO.root(), "Beta")

    def test_should_count_normalization_steps(self):
        """Should count the trace."""
        step = ReductionStepVO(RedexVO(PathVO.root(), RedexKind.BETA), IVar("y"))
        result = NormalizationResultVO(IVar("y"), (step, step), False)
        assert result.steps == 2

    def test_should_split_logical_kinds(self):
        """Should flag only Beta, Proj and CaseInj as logical."""
        assert {kind for kind in RedexKind if kind.is_logical} == {
            RedexKind.BETA,
            RedexKind.PROJ,
            RedexKind.CASE_INJ,
        }


class TestGraphSummaryVO:
    """Unit tests for GraphSummaryVO."""

    def test_should_render_complete_summary(self):
        """Should render every count."""
        summary = GraphSummaryVO(nodes=2, edges=1, eta=1, normal_forms=1, complete=True)
        assert str(summary) == "nodes=2 edges=1 eta=1 nf=1"

    def test_should_render_incomplete_summary(self):
        """Should print unknown counts as question marks."""
        summary = GraphSummaryVO(nodes=5, edges=4, eta=None, normal_forms=None, complete=False)
        assert str(summary) == "nodes=5 edges=4 eta=? nf=? complete=false"

    def test_should_raise_for_empty_graph(self):
        """Should require the root node."""
        with pytest.raises(InvalidTermException):
            GraphSummaryVO(nodes=0, edges=0, eta=0, normal_forms=0, complete=True)


class TestCertificateVO:
    """Unit tests for CertificateStepVO and AppCertificateVO."""

    def make_step(self, stalled: bool) -> CertificateStepVO:
        """A one-step lift of the pivot."""
        return CertificateStepVO(
            index=1,
            redex=RedexVO(PathVO(("fun",)), RedexKind.PERM),
            marked_kinds=(RedexKind.PERM,),
            lg_before=8,
            lg_after=6,
            t2_steps=0,
            stalled=stalled,
        )

    def test_should_render_step(self):
        """Should render the step with its lg values."""
        assert str(self.make_step(True)) == "1 /fun Perm marked=Perm lg=8->6 t2=0 stalled"
        assert str(self.make_step(False)) == "1 /fun Perm marked=Perm lg=8->6 t2=0"

    def test_should_raise_for_step_without_marked_steps(self):
        """Should require at least one marked step."""
        with pytest.raises(InvalidTermException):
            CertificateStepVO(
                index=1,
                redex=RedexVO(PathVO.root(), RedexKind.BETA),
                marked_kinds=(),
                lg_before=0,
                lg_after=0,
                t2_steps=1,
                stalled=False,
            )

    def test_should_summarize_certificate(self):
        """Should count steps, stalls and T2 steps."""
        term = IVar("s")
        certificate = AppCertificateVO(
            s2=term,
            marked_trace=(term, term),
            t2_trace=(term, term),
            lg_values=(8, 6),
            steps=(self.make_step(True),),
        )
        assert certificate.stalled_steps == 1
        assert certificate.summary() == "steps=1 stalled=1 t2_steps=0 lg=8->6"

    def test_should_raise_for_misaligned_traces(self):
        """Should require one trace entry per step plus one."""
        term = IVar("s")
        with pytest.raises(InvalidTermException):
            AppCertificateVO(
                s2=term, marked_trace=(term,), t2_trace=(term,), lg_values=(1,),
                steps=(self.make_step(False),),
            )
