"""This module contains the one-step reduction relation.

Redexes are matched anywhere in a term, including case branches and mark or
box payloads, and listed in pre-order (outermost first, then left to right).
Critical pairs are not resolved here: both redexes are reported.
"""

from src.contexts.calculus.domain.exceptions.exception import (
    NotARedexException,
    TypingException,
)
from src.contexts.calculus.domain.services.term_service import (
    all_names,
    fresh_name,
    free_cvars,
    free_ivars,
    iter_nodes,
    rename_binder_away,
    rename_cvar,
    replace_at,
    subst_class,
    subst_intu,
    subterm_at,
)
from src.contexts.calculus.domain.services.typing_service import (
    check_elim,
    environment_at,
)
from src.contexts.calculus.domain.value_objects.formula_vo import And, Formula, Imp
from src.contexts.calculus.domain.value_objects.path_vo import PathVO
from src.contexts.calculus.domain.value_objects.redex_kind_vo import RedexKind
from src.contexts.calculus.domain.value_objects.redex_vo import (
    RedexVO,
    ReductionStepVO,
)
from src.contexts.calculus.domain.value_objects.substitution_vo import SubstClassVO
from src.contexts.calculus.domain.value_objects.term_vo import (
    App,
    Box,
    Case,
    Inj,
    Lam,
    Mark,
    Mu,
    Node,
    Pair,
    Pi,
    Term,
)
from src.contexts.calculus.domain.value_objects.typing_context_vo import (
    TypingContextVO,
)


def redex_kind(node: Node, marked: bool = False) -> RedexKind | None:
    """Return the kind of redex rooted at ``node``, if any.

    Args:
        node (Node): Candidate redex.
        marked (bool): Whether the annihilation rule of marked terms applies.

    Returns:
        RedexKind | None: The kind, or None when no rule matches.
    """
    if not isinstance(node, App):
        return None
    fun, elim = node.fun, node.elim
    if isinstance(fun, Lam) and isinstance(elim, Term):
        return RedexKind.BETA
    if isinstance(fun, Pair) and isinstance(elim, Pi):
        return RedexKind.PROJ
    if isinstance(fun, Inj) and isinstance(elim, Case):
        return RedexKind.CASE_INJ
    if isinstance(fun, App) and isinstance(fun.elim, Case):
        return RedexKind.PERM
    if isinstance(fun, Mu):
        return RedexKind.CLAS
    if marked and isinstance(fun, Mark) and isinstance(elim, Box):
        return RedexKind.ANNIHILATE
    return None


def redexes(term: Node, marked: bool = False) -> list[RedexVO]:
    """List every redex of a term in pre-order."""
    found = []
    for path, node in iter_nodes(term):
        kind = redex_kind(node, marked)
        if kind is not None:
            found.append(RedexVO(path, kind))
    return found


def contract(
    redex: App,
    kind: RedexKind,
    context: TypingContextVO | None = None,
    root: Node | None = None,
    path: PathVO | None = None,
) -> Term:
    """Return the contractum of a redex.

    Args:
        redex (App): The redex.
        kind (RedexKind): Its kind, as returned by ``redex_kind``.
        context (TypingContextVO | None): Context of the root, used to retype classical cuts.
        root (Node | None): The term containing the redex.
        path (PathVO | None): Position of the redex in ``root``.

    Returns:
        Term: The contractum.
    """
    fun, elim = redex.fun, redex.elim
    match kind, fun, elim:
        case RedexKind.BETA, Lam(var=var, body=body), Term():
            return subst_intu(body, {var: elim})
        case RedexKind.PROJ, Pair(left=left, right=right), Pi(side=side):
            return left if side == 1 else right
        case RedexKind.CASE_INJ, Inj(side=1, body=body), Case(var1=var, branch1=branch):
            return subst_intu(branch, {var: body})
        case RedexKind.CASE_INJ, Inj(body=body), Case(var2=var, branch2=branch):
            return subst_intu(branch, {var: body})
        case RedexKind.PERM, App(fun=scrutinee, elim=Case() as case), _:
            avoid = free_ivars(elim)
            var1, branch1 = rename_binder_away(case.var1, case.branch1, avoid)
            var2, branch2 = rename_binder_away(case.var2, case.branch2, avoid)
            return App(scrutinee, Case(var1, App(branch1, elim), var2, App(branch2, elim)))
        case RedexKind.CLAS, Mu(var=var, annot=annot, body=body), _:
            elim_cvars = free_cvars(elim)
            if var in elim_cvars:
                new_var = fresh_name(var, elim_cvars | all_names(body))
                body = rename_cvar(body, var, new_var)
                var = new_var
            new_annot = eliminated_type(annot, elim, context, root, path)
            return Mu(var, new_annot, subst_class(body, SubstClassVO(var, elim)))
        case RedexKind.ANNIHILATE, Mark(payload=payload), Box(payload=boxed):
            return App(payload, boxed)
    raise NotARedexException(str(path) if path is not None else "/")


def eliminated_type(
    annot: Formula,
    elim: Node,
    context: TypingContextVO | None,
    root: Node | None,
    path: PathVO | None,
) -> Formula:
    """Result type of a classical cut: the type of ``annot`` eliminated by ``elim``.

    A case eliminator is typed in the environment of the redex; the annotation
    is kept whenever that fails.
    """
    inner = elim.payload if isinstance(elim, Box) else elim
    if isinstance(inner, Term):
        return annot.right if isinstance(annot, Imp) else annot
    if isinstance(inner, Pi):
        if isinstance(annot, And):
            return annot.left if inner.side == 1 else annot.right
        return annot
    if isinstance(inner, Case) and root is not None and path is not None:
        try:
            env = environment_at(context or TypingContextVO.empty(), root, path)  # type: ignore[arg-type]
            return check_elim(env, annot, inner)
        except TypingException:
            return annot
    return annot


def reduce_at(
    term: Term,
    path: PathVO,
    context: TypingContextVO | None = None,
    marked: bool = False,
) -> Term:
    """Contract the redex at ``path``.

    Raises:
        NotARedexException: If no rule matches at ``path``.
        InvalidPathException: If the path does not resolve.
    """
    node = subterm_at(term, path)
    kind = redex_kind(node, marked)
    if kind is None:
        raise NotARedexException(str(path))
    contractum = contract(node, kind, context, term, path)  # type: ignore[arg-type]
    return replace_at(term, path, contractum)  # type: ignore[return-value]


def step_all(
    term: Term,
    context: TypingContextVO | None = None,
    marked: bool = False,
) -> list[ReductionStepVO]:
    """All one-step reducts, deduplicated modulo alpha, in redex order."""
    steps = []
    seen: set[tuple] = set()
    for redex in redexes(term, marked):
        reduct = reduce_at(term, redex.path, context, marked)
        key = reduct.alpha_key
        if key in seen:
            continue
        seen.add(key)
        steps.append(ReductionStepVO(redex, reduct))
    return steps


def successors(term: Term, context: TypingContextVO | None = None) -> list[Term]:
    """The distinct one-step reducts of a term."""
    return [step.term for step in step_all(term, context)]


def is_normal(term: Node) -> bool:
    """Whether a term has no redex."""
    return not any(redex_kind(node) is not None for _, node in iter_nodes(term))
