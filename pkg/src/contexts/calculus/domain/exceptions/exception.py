"""This module contains the exceptions raised by the calculus context."""

from src.shared.domain.exceptions.exception import BaseDomainException


class InvalidFormulaException(BaseDomainException):
    """Exception raised when a formula is malformed."""

    def __init__(self, message: str) -> None:
        """Initialize the InvalidFormulaException.

        Args:
            message (str): What is wrong with the formula.
        """
        self.message = message
        super().__init__(message)


class InvalidTermException(BaseDomainException):
    """Exception raised when a term or eliminator is malformed."""

    def __init__(self, message: str) -> None:
        """Initialize the InvalidTermException.

        Args:
            message (str): What is wrong with the term.
        """
        self.message = message
        super().__init__(message)


class InvalidPathException(BaseDomainException):
    """Exception raised when a path does not resolve inside a term."""

    def __init__(self, path: str, reason: str) -> None:
        """Initialize the InvalidPathException.

        Args:
            path (str): The rendered path.
            reason (str): Why the path does not resolve.
        """
        self.path = path
        self.reason = reason
        super().__init__(f"path {path}: {reason}")


class SyntaxErrorException(BaseDomainException):
    """Exception raised when source text is outside the grammar."""

    def __init__(self, line: int, column: int, message: str) -> None:
        """Initialize the SyntaxErrorException.

        Args:
            line (int): 1-based line of the offending token.
            column (int): 1-based column of the offending token.
            message (str): Description of the error.
        """
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"{line}:{column}: {message}")


class UnboundVariableException(BaseDomainException):
    """Exception raised when a variable is neither bound nor declared."""

    def __init__(self, name: str, line: int | None = None, column: int | None = None):
        """Initialize the UnboundVariableException.

        Args:
            name (str): The variable name.
            line (int | None): Source line, when known.
            column (int | None): Source column, when known.
        """
        self.name = name
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line is not None else ""
        super().__init__(f"{where}unbound variable '{name}'")


class VariableSortException(BaseDomainException):
    """Exception raised when a classical variable is used intuitionistically or vice versa."""

    def __init__(
        self,
        name: str,
        expected: str,
        line: int | None = None,
        column: int | None = None,
    ) -> None:
        """Initialize the VariableSortException.

        Args:
            name (str): The variable name.
            expected (str): The sort required at this position.
            line (int | None): Source line, when known.
            column (int | None): Source column, when known.
        """
        self.name = name
        self.expected = expected
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line is not None else ""
        super().__init__(f"{where}'{name}' used where a {expected} variable is required")


class ShapeException(BaseDomainException):
    """Exception raised when a classical head has a spine other than one term."""

    def __init__(self, name: str, line: int | None = None, column: int | None = None):
        """Initialize the ShapeException.

        Args:
            name (str): The classical variable at the head.
            line (int | None): Source line, when known.
            column (int | None): Source column, when known.
        """
        self.name = name
        self.line = line
        self.column = column
        where = f"{line}:{column}: " if line is not None else ""
        super().__init__(
            f"{where}classical variable '{name}' must be applied to exactly one term"
        )


class TypingException(BaseDomainException):
    """Exception raised when a term has no type in the given context."""

    def __init__(self, path: str, message: str) -> None:
        """Initialize the TypingException.

        Args:
            path (str): Rendered path of the offending node.
            message (str): Which rule failed.
        """
        self.path = path
        self.message = message
        super().__init__(f"at {path}: {message}")


class NotARedexException(BaseDomainException):
    """Exception raised when a reduction is requested where no rule applies."""

    def __init__(self, path: str) -> None:
        """Initialize the NotARedexException.

        Args:
            path (str): Rendered path that was asked for.
        """
        self.path = path
        super().__init__(f"no redex at {path}")


class NotSimpleException(BaseDomainException):
    """Exception raised when head analysis receives a term that is not simple."""

    def __init__(self, constructor: str) -> None:
        """Initialize the NotSimpleException.

        Args:
            constructor (str): The constructor found at the root.
        """
        self.constructor = constructor
        super().__init__(f"term is not simple (root is {constructor})")


class UnclassifiableTermException(BaseDomainException):
    """Exception raised when a simple term matches no head-table row."""

    def __init__(self, message: str) -> None:
        """Initialize the UnclassifiableTermException.

        Args:
            message (str): Description of the spine.
        """
        self.message = message
        super().__init__(message)


class ArityMismatchException(BaseDomainException):
    """Exception raised when a context is filled with the wrong number of terms."""

    def __init__(self, holes: int, given: int) -> None:
        """Initialize the ArityMismatchException.

        Args:
            holes (int): Number of holes of the context.
            given (int): Number of terms supplied.
        """
        self.holes = holes
        self.given = given
        super().__init__(f"context has {holes} holes, {given} terms given")


class IncompleteGraphException(BaseDomainException):
    """Exception raised when a measure needs a fully explored graph."""

    def __init__(self, nodes: int) -> None:
        """Initialize the IncompleteGraphException.

        Args:
            nodes (int): Nodes explored before the limit stopped exploration.
        """
        self.nodes = nodes
        super().__init__(f"reduction graph incomplete after {nodes} nodes")


class CycleDetectedException(BaseDomainException):
    """Exception raised when a reduction graph contains a cycle."""

    def __init__(self, term: str) -> None:
        """Initialize the CycleDetectedException.

        Args:
            term (str): Rendering of a term on the cycle.
        """
        self.term = term
        super().__init__(f"reduction cycle through {term}")


class InconclusiveVerificationException(BaseDomainException):
    """Exception raised when a verifier cannot decide within its node limit."""

    def __init__(self, check: str, limit: int) -> None:
        """Initialize the InconclusiveVerificationException.

        Args:
            check (str): Name of the verification.
            limit (int): The node limit that was hit.
        """
        self.check = check
        self.limit = limit
        super().__init__(f"{check}: inconclusive, node limit {limit} reached")


class PreconditionException(BaseDomainException):
    """Exception raised when an operation's precondition does not hold."""

    def __init__(self, operation: str, reason: str) -> None:
        """Initialize the PreconditionException.

        Args:
            operation (str): The operation that was called.
            reason (str): The failed precondition.
        """
        self.operation = operation
        self.reason = reason
        super().__init__(f"{operation}: {reason}")


class NonNiceSequenceException(BaseDomainException):
    """Exception raised when an eliminator sequence has a case before its end."""

    def __init__(self, rendered: str) -> None:
        """Initialize the NonNiceSequenceException.

        Args:
            rendered (str): Rendering of the sequence.
        """
        self.rendered = rendered
        super().__init__(f"eliminator sequence is not nice: {rendered}")


class NotAcceptableException(BaseDomainException):
    """Exception raised when st is asked of a term that is not acceptable."""

    def __init__(self, term: str) -> None:
        """Initialize the NotAcceptableException.

        Args:
            term (str): Rendering of the term.
        """
        self.term = term
        super().__init__(f"not acceptable: {term}")


class NotCorrectException(BaseDomainException):
    """Exception raised when a marked term fails the correctness conditions."""

    def __init__(self, reason: str) -> None:
        """Initialize the NotCorrectException.

        Args:
            reason (str): The failed condition.
        """
        self.reason = reason
        super().__init__(f"marked term is not correct: {reason}")


class UniquenessViolationException(BaseDomainException):
    """Exception raised when a mark is owned by zero or several boxes."""

    def __init__(self, path: str, owners: int) -> None:
        """Initialize the UniquenessViolationException.

        Args:
            path (str): Path of the mark.
            owners (int): Number of boxes whose st contains it.
        """
        self.path = path
        self.owners = owners
        super().__init__(f"mark at {path} belongs to {owners} boxes")


class NoLiftException(BaseDomainException):
    """Exception raised when a plain step has no marked counterpart."""

    def __init__(self, source: str, target: str) -> None:
        """Initialize the NoLiftException.

        Args:
            source (str): Rendering of the marked term.
            target (str): Rendering of the requested plain reduct.
        """
        self.source = source
        self.target = target
        super().__init__(f"cannot lift step of {source} to {target}")


class CertificateViolationException(BaseDomainException):
    """Exception raised when a certified trace breaks one of its lemmas."""

    def __init__(self, lemma: str, step: int, detail: str) -> None:
        """Initialize the CertificateViolationException.

        Args:
            lemma (str): The property that failed.
            step (int): Index of the trace step.
            detail (str): Description of the failure.
        """
        self.lemma = lemma
        self.step = step
        self.detail = detail
        super().__init__(f"{lemma} violated at step {step}: {detail}")


class BudgetInfeasibleException(BaseDomainException):
    """Exception raised when the generator finds no term within its budget."""

    def __init__(self, goal: str, budget: int, attempts: int) -> None:
        """Initialize the BudgetInfeasibleException.

        Args:
            goal (str): The goal formula.
            budget (int): The size budget.
            attempts (int): Attempts made.
        """
        self.goal = goal
        self.budget = budget
        self.attempts = attempts
        super().__init__(
            f"no inhabitant of {goal} within size {budget} after {attempts} attempts"
        )


class NestingLimitException(BaseDomainException):
    """Exception raised when a term is nested too deeply to walk."""

    def __init__(self, operation: str) -> None:
        """Initialize the NestingLimitException.

        Args:
            operation (str): The walk that ran out of stack.
        """
        self.operation = operation
        super().__init__(f"{operation}: term nested too deeply")
