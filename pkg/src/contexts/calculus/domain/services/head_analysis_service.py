"""This module contains context decomposition and head classification.

Every term is uniquely ``C[M1, ..., Mn]`` with each ``Mi`` simple, that is a
variable, an application or a naming. A simple term falls in exactly one row
of the head table; rows 1 to 5 single out a head redex.
"""

from collections.abc import Sequence

from src.contexts.calculus.domain.exceptions.exception import (
    ArityMismatchException,
    InvalidTermException,
    NotSimpleException,
    UnclassifiableTermException,
)
from src.contexts.calculus.domain.services.printer_service import render_term
from src.contexts.calculus.domain.services.reduction_service import reduce_at
from src.contexts.calculus.domain.services.term_service import spine, subterm_at
from src.contexts.calculus.domain.value_objects.context_vo import (
    CInj,
    CLam,
    CMu,
    ContextC,
    CPair,
    Hole,
)
from src.contexts.calculus.domain.value_objects.head_row_vo import HeadRowVO
from src.contexts.calculus.domain.value_objects.path_vo import PathVO
from src.contexts.calculus.domain.value_objects.term_vo import (
    App,
    Box,
    Case,
    Elim,
    Inj,
    IVar,
    Lam,
    Mu,
    Name,
    Pair,
    Pi,
    Term,
)
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)


def is_simple(term: Term) -> bool:
    """Whether a term is a variable, an application or a naming."""
    return isinstance(term, IVar | App | Name)


def decompose(term: Term) -> tuple[ContextC, list[Term]]:
    """Split a term into its context and simple subterms.

    Raises:
        InvalidTermException: On marked terms.
    """
    context, located = decompose_with_paths(term)
    return context, [simple for _, simple in located]


def decompose_with_paths(term: Term) -> tuple[ContextC, list[tuple[PathVO, Term]]]:
    """Like ``decompose``, also returning the path of every hole."""
    located: list[tuple[PathVO, Term]] = []

    def walk(current: Term, path: PathVO) -> ContextC:
        match current:
            case Lam(var=var, annot=annot, body=body):
                return CLam(var, annot, walk(body, path.child("body")))
            case Inj(side=side, annot=annot, body=body):
                return CInj(side, annot, walk(body, path.child("body")))
            case Pair(left=left, right=right):
                left_context = walk(left, path.child("left"))
                return CPair(left_context, walk(right, path.child("right")))
            case Mu(var=var, annot=annot, body=body):
                return CMu(var, annot, walk(body, path.child("body")))
            case IVar() | App() | Name():
                located.append((path, current))
                return Hole(len(located))
        raise InvalidTermException(f"cannot decompose {type(current).__name__}")

    return walk(term, PathVO.root()), located


def fill(context: ContextC, terms: Sequence[Term]) -> Term:
    """Replace each hole ``*i`` by ``terms[i-1]``; binders of the context capture.

    Raises:
        ArityMismatchException: If the number of terms differs from the number of holes.
    """
    if context.arity != len(terms):
        raise ArityMismatchException(context.arity, len(terms))

    def walk(current: ContextC) -> Term:
        match current:
            case Hole(index=index):
                return terms[index - 1]
            case CLam(var=var, annot=annot, body=body):
                return Lam(var, annot, walk(body))
            case CInj(side=side, annot=annot, body=body):
                return Inj(side, annot, walk(body))
            case CPair(left=left, right=right):
                return Pair(walk(left), walk(right))
            case CMu(var=var, annot=annot, body=body):
                return Mu(var, annot, walk(body))
        raise InvalidTermException(f"not a context: {current!r}")

    return walk(context)


def _unboxed(elim: Elim) -> Elim:
    return elim.payload if isinstance(elim, Box) else elim


def is_nice(elims: Sequence[Elim]) -> bool:
    """Whether every eliminator but the last is a term or a projection."""
    return all(not isinstance(_unboxed(elim), Case) for elim in list(elims)[:-1])


def classify(term: Term, context: TypingContextVO | None = None) -> HeadRowVO:
    """Place a simple term in the head table.

    ``context`` only serves to retype the annotation of a classical head reduct.

    Raises:
        NotSimpleException: If the term is not simple.
        UnclassifiableTermException: If the spine fits no row (untypable shapes).
    """
    if not is_simple(term):
        raise NotSimpleException(type(term).__name__)
    head, elims = spine(term)
    count = len(elims)

    pivots = [index for index, elim in enumerate(elims[:-1]) if isinstance(elim, Case)]
    if pivots:
        return _redex_row(5, term, count - pivots[-1] - 2, (), context)

    match head, elims:
        case IVar(name=name), _:
            return HeadRowVO(0, name, tuple(elims))
        case Name(var=var, body=body), []:
            return HeadRowVO(0, var, (body,))
        case Lam(), [Term() as argument, *_]:
            return _redex_row(1, term, count - 1, (argument,), context)
        case Pair(left=left, right=right), [Pi(), *_]:
            return _redex_row(2, term, count - 1, (left, right), context)
        case Inj(body=body), [Case(branch1=branch1, branch2=branch2)]:
            return _redex_row(3, term, 0, (body, branch1, branch2), context)
        case Mu(), [elim, *_]:
            return _redex_row(4, term, count - 1, (elim,), context)
    raise UnclassifiableTermException(f"no head row for {render_term(term)}")


def _redex_row(
    row: int,
    term: Term,
    depth: int,
    args: tuple,
    context: TypingContextVO | None,
) -> HeadRowVO:
    path = PathVO(("fun",) * depth)
    redex = subterm_at(term, path)
    return HeadRowVO(row, redex, args, reduce_at(term, path, context), path)  # type: ignore[arg-type]


def hd(term: Term, context: TypingContextVO | None = None) -> str | Term:
    """Head of a simple term."""
    return classify(term, context).head


def arg(term: Term, context: TypingContextVO | None = None) -> tuple:
    """Arguments of a simple term."""
    return classify(term, context).args


def hred(term: Term, context: TypingContextVO | None = None) -> Term | None:
    """Head reduct of a simple term, None for a head variable."""
    return classify(term, context).head_reduct


def head_redex_path(term: Term) -> PathVO | None:
    """Path of the head redex of the leftmost simple subterm that has one."""
    _, located = decompose_with_paths(term)
    for hole_path, simple in located:
        try:
            row = classify(simple)
        except UnclassifiableTermException:
            continue
        if row.head_path is not None:
            return hole_path.concat(row.head_path)
    return None
