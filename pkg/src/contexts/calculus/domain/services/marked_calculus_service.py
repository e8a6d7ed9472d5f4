"""This module contains the marked calculus.

Marked terms extend terms with marks ``{N}`` and boxes ``[[e]]``. A box
follows an acceptable term ``U`` and owns the marks of ``st(U)``; ``T1``
erases the tracking constructors while ``T2`` fires every owned mark against
its box. Reductions of ``T1(M)`` lift to marked reductions of ``M``.
"""

from collections.abc import Collection

from src.contexts.calculus.domain.exceptions.exception import (
    NoLiftException,
    NotAcceptableException,
    NotCorrectException,
    PreconditionException,
    UniquenessViolationException,
)
from src.contexts.calculus.domain.services.printer_service import render_term
from src.contexts.calculus.domain.services.reduction_service import (
    eliminated_type,
    redex_kind,
    redexes,
    reduce_at,
    step_all,
)
from src.contexts.calculus.domain.services.term_service import (
    all_names,
    alpha_eq,
    fresh_name,
    free_cvars,
    free_ivars,
    iter_nodes,
    map_children,
    rename_binder_away,
    rename_cvar,
    subterm_at,
)
from src.contexts.calculus.domain.value_objects.app_scenario_vo import (
    ScenarioModeKind,
)
from src.contexts.calculus.domain.value_objects.path_vo import PathVO
from src.contexts.calculus.domain.value_objects.redex_kind_vo import RedexKind
from src.contexts.calculus.domain.value_objects.redex_vo import (
    RedexVO,
    ReductionStepVO,
)
from src.contexts.calculus.domain.value_objects.term_vo import (
    App,
    Box,
    Case,
    Elim,
    Mark,
    Mu,
    Name,
    Node,
    Term,
)
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)

BOX_COMMUTING_KINDS = frozenset({RedexKind.PERM, RedexKind.CLAS})


def marked_step_all(
    term: Term, context: TypingContextVO | None = None
) -> list[ReductionStepVO]:
    """One-step reducts of a marked term, annihilation included."""
    return step_all(term, context, marked=True)


def is_box_commuting(node: Node) -> bool:
    """Whether ``node`` is a permutative or classical redex whose eliminator is a box."""
    return (
        isinstance(node, App)
        and isinstance(node.elim, Box)
        and redex_kind(node) in BOX_COMMUTING_KINDS
    )


def btr_step(term: Term, context: TypingContextVO | None = None) -> list[ReductionStepVO]:
    """Reducts by the box-commuting rules only: a case or a mu absorbing a box."""
    steps = []
    seen: set[tuple] = set()
    for redex in redexes(term):
        if not is_box_commuting(subterm_at(term, redex.path)):
            continue
        reduct = reduce_at(term, redex.path, context)
        if reduct.alpha_key in seen:
            continue
        seen.add(reduct.alpha_key)
        steps.append(ReductionStepVO(redex, reduct))
    return steps


def named_occurrences(
    body: Node, var: str, path: PathVO | None = None
) -> list[tuple[PathVO, Name]]:
    """Namings ``(var S)`` of a free classical variable, with their paths, in pre-order.

    Payloads are not entered: their variables are constants.
    """
    found: list[tuple[PathVO, Name]] = []

    def walk(current: Node, current_path: PathVO) -> None:
        match current:
            case Mu(var=bound) if bound == var:
                return
            case Mark() | Box():
                return
            case Name(var=name) if name == var:
                found.append((current_path, current))
        for selector, child in current.children():
            walk(child, current_path.child(selector))

    walk(body, path if path is not None else PathVO.root())
    return found


def _st(node: Node, path: PathVO) -> list[PathVO] | None:
    match node:
        case Mark():
            return [path]
        case Mu(var=var, body=body):
            found: list[PathVO] = []
            for occurrence_path, occurrence in named_occurrences(body, var, path.child("body")):
                inner = _st(occurrence.body, occurrence_path.child("body"))
                if inner is None:
                    return None
                found.extend(inner)
            return found
        case App(elim=Case(branch1=branch1, branch2=branch2)):
            case_path = path.child("elim")
            first = _st(branch1, case_path.child("branch1"))
            second = _st(branch2, case_path.child("branch2"))
            if first is None or second is None:
                return None
            return first + second
    return None


def acceptable(term: Term) -> bool:
    """Whether ``term`` is a mark, a mu whose named subterms are acceptable, or a case with acceptable branches."""
    return _st(term, PathVO.root()) is not None


def st_set(term: Term, path: PathVO | None = None) -> frozenset[PathVO]:
    """Paths of the marks collected by ``st``.

    Args:
        term (Term): An acceptable term.
        path (PathVO | None): Path of ``term`` in its host, prefixed to the result.

    Raises:
        NotAcceptableException: If ``term`` is not acceptable.
    """
    found = _st(term, path if path is not None else PathVO.root())
    if found is None:
        raise NotAcceptableException(render_term(term))
    return frozenset(found)


def good_wrt(
    term: Node,
    occurrences: Collection[PathVO],
    path: PathVO | None = None,
    box_free: bool = False,
) -> bool:
    """Whether ``term`` is good with respect to a set of occurrences.

    Args:
        term (Node): The term, located at ``path`` in its host.
        occurrences (Collection[PathVO]): Paths of the set, in the host.
        path (PathVO | None): Path of ``term``; the root by default.
        box_free (bool): Whether subterms without boxes are good as well.

    Returns:
        bool: True if ``term`` is in the set, is a mu whose named subterms are
        good, or is a case whose branches are good.
    """
    here = path if path is not None else PathVO.root()
    if here in occurrences:
        return True
    if box_free and not any(isinstance(node, Box) for _, node in iter_nodes(term)):
        return True
    match term:
        case Mu(var=var, body=body):
            return all(
                good_wrt(occurrence.body, occurrences, occurrence_path.child("body"), box_free)
                for occurrence_path, occurrence in named_occurrences(body, var, here.child("body"))
            )
        case App(elim=Case(branch1=branch1, branch2=branch2)):
            case_path = here.child("elim")
            return good_wrt(
                branch1, occurrences, case_path.child("branch1"), box_free
            ) and good_wrt(branch2, occurrences, case_path.child("branch2"), box_free)
    return False


def box_owners(term: Term) -> dict[PathVO, list[PathVO]]:
    """Map every ``(U [[e]])`` with acceptable ``U`` to the marks of ``st(U)``."""
    owners: dict[PathVO, list[PathVO]] = {}
    for path, node in iter_nodes(term):
        if isinstance(node, App) and isinstance(node.elim, Box):
            marks = _st(node.fun, path.child("fun"))
            if marks is not None:
                owners[path] = marks
    return owners


def correctness_failure(term: Term, mode: ScenarioModeKind | None = None) -> str | None:
    """Why ``term`` is not correct, or None when it is.

    Condition 1: every box follows an acceptable term. Condition 2: every mark
    is in ``st(U)`` for exactly one ``(U [[e]])``. In case mode every box
    payload is a case and condition 3 holds: the term is good with respect to
    its ``(U [[e]])`` subterms, subterms without boxes counting as good. With a
    mode, every box payload must have its shape.
    """
    owners = box_owners(term)
    for path, node in iter_nodes(term):
        if not isinstance(node, App) or not isinstance(node.elim, Box):
            continue
        if path not in owners:
            return f"box at {path.child('elim')} follows a term that is not acceptable"
        if mode is not None and ScenarioModeKind.of(node.elim.payload) is not mode:
            return f"box at {path.child('elim')} does not hold a {mode.value} eliminator"
    counts: dict[PathVO, int] = {}
    for marks in owners.values():
        for mark in marks:
            counts[mark] = counts.get(mark, 0) + 1
    for path, node in iter_nodes(term):
        if isinstance(node, Mark) and counts.get(path, 0) != 1:
            return f"mark at {path} belongs to {counts.get(path, 0)} boxes"
    if mode is ScenarioModeKind.CASE and not good_wrt(term, set(owners), box_free=True):
        return "a box is applied to a further eliminator"
    return None


def correct(term: Term, mode: ScenarioModeKind | None = None) -> bool:
    """Whether ``term`` is correct; condition 3 is checked in case mode only."""
    return correctness_failure(term, mode) is None


def require_correct(term: Term, mode: ScenarioModeKind | None = None) -> None:
    """Raise unless ``term`` is correct.

    Raises:
        NotCorrectException: With the first failing condition.
    """
    reason = correctness_failure(term, mode)
    if reason is not None:
        raise NotCorrectException(reason)


def eps_of(term: Term, occurrence: PathVO) -> Elim:
    """The eliminator of the box owning the mark at ``occurrence``.

    Raises:
        UniquenessViolationException: If zero or several boxes own the mark.
    """
    found = [
        path for path, marks in box_owners(term).items() if occurrence in marks
    ]
    if len(found) != 1:
        raise UniquenessViolationException(str(occurrence), len(found))
    pair = subterm_at(term, found[0])
    return pair.elim.payload  # type: ignore[attr-defined]


def t1(node: Node) -> Node:
    """Erase marks and boxes."""
    match node:
        case Mark(payload=payload) | Box(payload=payload):
            return payload
    return map_children(node, t1)


def t2(term: Term, context: TypingContextVO | None = None) -> Term:
    """Replace each ``(U [[e]])`` by ``U`` with its owned marks ``{N}`` turned into ``(N e)``.

    Marks owned by a box outside ``term`` stay. Mu annotations on the way from
    a box to its marks are retyped to the eliminated type. On a correct term
    the result has no marks or boxes.
    """
    return _Discharger(term, context).walk(term, PathVO.root(), {})  # type: ignore[return-value]


class _Discharger:
    """Rebuilds a marked term for ``t2``, tracking the classical variables being discharged."""

    def __init__(self, root: Term, context: TypingContextVO | None) -> None:
        self.root = root
        self.context = context

    def walk(self, node: Node, path: PathVO, pending: dict[str, Elim]) -> Node:
        match node:
            case App(fun=fun, elim=Box(payload=eps)) if _st(fun, path.child("fun")) is not None:
                return self.discharge(fun, path.child("fun"), eps, pending)
            case Mu(var=var, annot=annot, body=body) if var in pending:
                inner = {name: elim for name, elim in pending.items() if name != var}
                return Mu(var, annot, self.walk(body, path.child("body"), inner))  # type: ignore[arg-type]
            case Name(var=var, body=body) if var in pending:
                discharged = self.discharge(body, path.child("body"), pending[var], pending)
                return Name(var, discharged)
            case Mark() | Box():
                return node
        changes = {
            selector: self.walk(child, path.child(selector), pending)
            for selector, child in node.children()
        }
        if all(changes[selector] is child for selector, child in node.children()):
            return node
        return node.with_changes(**changes)

    def discharge(
        self, node: Term, path: PathVO, eps: Elim, pending: dict[str, Elim]
    ) -> Term:
        match node:
            case Mark(payload=payload):
                return App(payload, eps)
            case Mu(var=var, annot=annot, body=body):
                eps_cvars = free_cvars(eps)
                if var in eps_cvars:
                    new_var = fresh_name(var, eps_cvars | all_names(body))
                    body = rename_cvar(body, var, new_var)
                    var = new_var
                retyped = eliminated_type(annot, eps, self.context, self.root, path)
                inner = {name: elim for name, elim in pending.items() if name != var}
                inner[var] = eps
                return Mu(var, retyped, self.walk(body, path.child("body"), inner))  # type: ignore[arg-type]
            case App(fun=fun, elim=Case(var1=var1, branch1=branch1, var2=var2, branch2=branch2)):
                avoid = free_ivars(eps)
                var1, branch1 = rename_binder_away(var1, branch1, avoid)
                var2, branch2 = rename_binder_away(var2, branch2, avoid)
                case_path = path.child("elim")
                return App(
                    self.walk(fun, path.child("fun"), pending),  # type: ignore[arg-type]
                    Case(
                        var1,
                        self.discharge(branch1, case_path.child("branch1"), eps, pending),
                        var2,
                        self.discharge(branch2, case_path.child("branch2"), eps, pending),
                    ),
                )
        return self.walk(node, path, pending)  # type: ignore[return-value]


def _spine_id(term: Term, path: PathVO) -> PathVO:
    if isinstance(subterm_at(term, path), App):
        steps = path.steps
        while steps and steps[-1] == "fun":
            steps = steps[:-1]
        return PathVO(steps)
    return path


def mark_distance(term: Term, mark: PathVO, pair: PathVO) -> int:
    """Nodes on the way from a mark up to its ``(U [[e]])`` and down to the box, both ends included.

    An application spine ``(h e1 ... en)`` counts as one node.
    """
    route = [PathVO(mark.steps[:depth]) for depth in range(len(mark.steps), len(pair.steps) - 1, -1)]
    route.append(pair.child("elim"))
    return len({_spine_id(term, step) for step in route})


def lg(term: Term) -> int:
    """Sum over marks of the length of the way to their box.

    Raises:
        NotCorrectException: If ``term`` is not correct.
    """
    require_correct(term)
    return sum(
        mark_distance(term, mark, pair)
        for pair, marks in box_owners(term).items()
        for mark in marks
    )


def nb(term: Node) -> int:
    """Number of boxes."""
    return sum(1 for _, node in iter_nodes(term) if isinstance(node, Box))


def btr_normal_form(term: Term, context: TypingContextVO | None = None) -> Term:
    """Normal form for the box-commuting rules, always firing the first such redex."""
    current = term
    while True:
        steps = btr_step(current, context)
        if not steps:
            return current
        current = steps[0].term


def t2_equals_btr_normal_form(term: Term, context: TypingContextVO | None = None) -> bool:
    """Experimental check that ``T2(M)`` is ``T1`` of the box-commuting normal form of ``M``."""
    return alpha_eq(t2(term, context), t1(btr_normal_form(term, context)))


def lift_path(term: Term, path: PathVO) -> PathVO:
    """Path in a marked term of the node shown at ``path`` in its ``T1`` image.

    Marks and boxes met on the way are crossed through their payload, also
    after the last selector.
    """
    current: Node = term
    steps: list[str] = []
    for selector in path.steps:
        while isinstance(current, Mark | Box):
            steps.append("payload")
            current = current.payload
        steps.append(selector)
        current = getattr(current, selector)
    while isinstance(current, Mark | Box):
        steps.append("payload")
        current = current.payload
    return PathVO(tuple(steps))


def lift_with_steps(
    term: Term, target: Term, context: TypingContextVO | None = None
) -> tuple[RedexVO, list[ReductionStepVO]]:
    """The redex of ``T1(term)`` reduced to ``target`` and the marked steps lifting it.

    One step when the reduced redex of ``T1(term)`` has a marked counterpart,
    inside or outside payloads; otherwise an annihilation of ``({N} [[e]])``
    followed by the step.

    Raises:
        PreconditionException: If ``target`` is not a one-step reduct of ``T1(term)``.
        NoLiftException: If no lift exists.
    """
    erased = t1(term)
    goal = target.alpha_key
    matching = [
        redex
        for redex in redexes(erased)
        if reduce_at(erased, redex.path, context).alpha_key == goal  # type: ignore[arg-type]
    ]
    if not matching:
        raise PreconditionException("lift_step", "target is not a one-step reduct of T1")
    for redex in matching:
        lifted = _lift_redex(term, redex, goal, context)
        if lifted is not None:
            return redex, lifted
    raise NoLiftException(render_term(term), render_term(target))


def _lift_redex(
    term: Term, redex: RedexVO, goal: tuple, context: TypingContextVO | None
) -> list[ReductionStepVO] | None:
    path = lift_path(term, redex.path)
    node = subterm_at(term, path)
    kind = redex_kind(node, marked=True)
    if kind is not None and kind is not RedexKind.ANNIHILATE:
        reduct = reduce_at(term, path, context, marked=True)
        if t1(reduct).alpha_key == goal:
            return [ReductionStepVO(RedexVO(path, kind), reduct)]
    if kind is RedexKind.ANNIHILATE:
        annihilated = reduce_at(term, path, context, marked=True)
        follow = redex_kind(subterm_at(annihilated, path), marked=True)
        if follow is not None:
            reduct = reduce_at(annihilated, path, context, marked=True)
            if t1(reduct).alpha_key == goal:
                return [
                    ReductionStepVO(RedexVO(path, RedexKind.ANNIHILATE), annihilated),
                    ReductionStepVO(RedexVO(path, follow), reduct),
                ]
    return None


def lift_step(term: Term, target: Term, context: TypingContextVO | None = None) -> Term:
    """A marked term ``M'`` with ``term >+ M'`` and ``T1(M')`` alpha-equal to ``target``.

    Raises:
        PreconditionException: If ``target`` is not a one-step reduct of ``T1(term)``.
        NoLiftException: If no lift exists.
    """
    _, steps = lift_with_steps(term, target, context)
    return steps[-1].term


def inside_box_payload(term: Term, path: PathVO) -> PathVO | None:
    """Path of the ``(U [[e]])`` whose box payload contains ``path``, if any."""
    current: Node = term
    for depth, selector in enumerate(path.steps):
        if isinstance(current, Box):
            return PathVO(path.steps[: depth - 1])
        current = getattr(current, selector)
    return None
