"""This module contains the RunAppHarnessUseCase class."""

from src.contexts.calculus.application.dto.command import RunAppHarnessCommand
from src.contexts.calculus.application.dto.response import AppHarnessResponse
from src.contexts.calculus.domain.ports.services.syntax_service_port import (
    SyntaxServicePort,
)
from src.contexts.calculus.domain.services.app_certifier_service import (
    AppCertifierService,
)
from src.contexts.calculus.domain.services.normalization_service import normalize
from src.contexts.calculus.domain.services.sn_oracle_service import SNOracleService
from src.contexts.calculus.domain.value_objects.redex_kind_vo import StrategyKind
from src.contexts.calculus.domain.value_objects.term_vo import Term
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)
from src.shared.infrastructure.logging.logger import Logger


class RunAppHarnessUseCase:
    """Use case for checking one instance of the permutative-pivot theorem.

    The oracle decides SN of S1 from SN of S2, then the certifier lifts a
    trace of S1 to marked terms and checks each step against S2.
    """

    def __init__(
        self,
        syntax_service_port: SyntaxServicePort,
        oracle: SNOracleService,
        certifier: AppCertifierService,
        logger: Logger,
        max_steps: int,
    ) -> None:
        """Initializes the RunAppHarnessUseCase.

        Args:
            syntax_service_port (SyntaxServicePort): Parser of scenarios and traces.
            oracle (SNOracleService): Strong-normalization oracle.
            certifier (AppCertifierService): Lifts and checks traces.
            logger (Logger): Logger instance for logging.
            max_steps (int): Step budget of the default trace.
        """
        self.syntax_service_port = syntax_service_port
        self.oracle = oracle
        self.certifier = certifier
        self.logger = logger
        self.max_steps = max_steps

    def execute(self, command: RunAppHarnessCommand) -> AppHarnessResponse:
        """Executes the harness use case.

        Args:
            command (RunAppHarnessCommand): Scenario text and optional trace text.

        Returns:
            AppHarnessResponse: Verdict of the oracle and the certificate.

        Raises:
            NonNiceSequenceException: If ``eps V`` is not nice.
            PreconditionException: If S2 is untyped or not SN, or a payload mentions its binder.
            CertificateViolationException: If a step breaks one of the checked lemmas.
            InconclusiveVerificationException: If a search hits its node limit.
        """
        scenario = self.syntax_service_port.parse_scenario(command.scenario)
        verified = self.oracle.verify_app(scenario)
        self.logger.info(
            message="S1 strong normalization checked",
            verified=verified,
            mode=scenario.mode.value if scenario.mode else None,
        )
        trace = self._trace(command, scenario.s1, scenario.context)
        certificate = self.certifier.certify(scenario, trace)
        for step in certificate.steps:
            self.logger.debug(message="Step certified", step=str(step))
        self.logger.info(message="Certificate built", summary=certificate.summary())
        return AppHarnessResponse.from_vo(verified, certificate)

    def _trace(
        self, command: RunAppHarnessCommand, s1: Term, context: TypingContextVO
    ) -> list[Term]:
        if command.trace is not None:
            return self.syntax_service_port.parse_trace(command.trace, context)
        result = normalize(s1, StrategyKind.HEAD, self.max_steps, context=context)
        if result.exhausted:
            self.logger.warning(
                message="Default trace truncated", max_steps=self.max_steps
            )
        return [s1, *(step.term for step in result.trace)]
