"""This module contains the core operations on terms.

Paths, free variables, alpha-equivalence, both substitutions and the size
measure. Every function is pure and accepts marked terms; mark and box
payloads are opaque to substitution.
"""

from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import replace
from typing import TypeVar

from src.contexts.calculus.domain.exceptions.exception import InvalidPathException
from src.contexts.calculus.domain.value_objects.path_vo import PathVO
from src.contexts.calculus.domain.value_objects.substitution_vo import (
    SubstClassVO,
    SubstIntuVO,
)
from src.contexts.calculus.domain.value_objects.term_vo import (
    App,
    Box,
    Case,
    Elim,
    IVar,
    Lam,
    Mark,
    Mu,
    Name,
    Node,
    Term,
)

N = TypeVar("N", bound=Node)


def alpha_eq(left: Node, right: Node) -> bool:
    """Tell whether two nodes are equal up to renaming of bound variables."""
    return left.alpha_key == right.alpha_key


def subterm_at(node: Node, path: PathVO) -> Node:
    """Return the subterm or sub-eliminator at ``path``.

    Args:
        node (Node): The root.
        path (PathVO): Selectors from the root.

    Returns:
        Node: The addressed node.

    Raises:
        InvalidPathException: If a selector is not a child of the node reached.
    """
    current = node
    for depth, selector in enumerate(path.steps):
        if selector not in current.CHILDREN:
            raise InvalidPathException(
                str(path),
                f"{type(current).__name__} at {PathVO(path.steps[:depth])} has no {selector}",
            )
        current = getattr(current, selector)
    return current


def replace_at(node: Node, path: PathVO, new: Node) -> Node:
    """Return ``node`` with the subtree at ``path`` replaced by ``new``.

    Raises:
        InvalidPathException: If the path does not resolve.
    """
    if not path.steps:
        return new
    selector, rest = path.steps[0], PathVO(path.steps[1:])
    if selector not in node.CHILDREN:
        raise InvalidPathException(
            str(path), f"{type(node).__name__} has no {selector}"
        )
    child = getattr(node, selector)
    return replace(node, **{selector: replace_at(child, rest, new)})


def iter_nodes(node: Node, path: PathVO | None = None) -> Iterator[tuple[PathVO, Node]]:
    """Yield every node with its path, in pre-order (parent, then children left to right)."""
    start = path if path is not None else PathVO.root()
    stack: list[tuple[PathVO, Node]] = [(start, node)]
    while stack:
        current_path, current = stack.pop()
        yield current_path, current
        for selector, child in reversed(current.children()):
            stack.append((current_path.child(selector), child))


def free_ivars(node: Node) -> frozenset[str]:
    """Free intuitionistic variables, payload constants included."""
    return _free(node)[0]


def free_cvars(node: Node) -> frozenset[str]:
    """Free classical variables, payload constants included."""
    return _free(node)[1]


def _free(node: Node) -> tuple[frozenset[str], frozenset[str]]:
    match node:
        case IVar(name=name):
            return frozenset({name}), frozenset()
        case Lam(var=var, body=body):
            ivars, cvars = _free(body)
            return ivars - {var}, cvars
        case Mu(var=var, body=body):
            ivars, cvars = _free(body)
            return ivars, cvars - {var}
        case Name(var=var, body=body):
            ivars, cvars = _free(body)
            return ivars, cvars | {var}
        case Case(var1=var1, branch1=branch1, var2=var2, branch2=branch2):
            ivars1, cvars1 = _free(branch1)
            ivars2, cvars2 = _free(branch2)
            return (ivars1 - {var1}) | (ivars2 - {var2}), cvars1 | cvars2
        case _:
            ivars: frozenset[str] = frozenset()
            cvars: frozenset[str] = frozenset()
            for _, child in node.children():
                child_ivars, child_cvars = _free(child)
                ivars |= child_ivars
                cvars |= child_cvars
            return ivars, cvars


def all_names(node: Node) -> frozenset[str]:
    """Every variable name occurring in a node, bound or free, of either sort."""
    names: set[str] = set()
    for _, current in iter_nodes(node):
        for attribute in ("name", "var", "var1", "var2"):
            value = getattr(current, attribute, None)
            if isinstance(value, str):
                names.add(value)
    return frozenset(names)


def occurrences(node: Node, name: str) -> int:
    """Count the free occurrences of an intuitionistic variable."""
    match node:
        case IVar(name=found):
            return 1 if found == name else 0
        case Lam(var=var, body=body):
            return 0 if var == name else occurrences(body, name)
        case Case(var1=var1, branch1=branch1, var2=var2, branch2=branch2):
            first = 0 if var1 == name else occurrences(branch1, name)
            second = 0 if var2 == name else occurrences(branch2, name)
            return first + second
        case Mark() | Box():
            return 0
        case _:
            return sum(occurrences(child, name) for _, child in node.children())


def occurrence_paths(node: Node, name: str) -> list[PathVO]:
    """Paths of the free occurrences of an intuitionistic variable, in pre-order."""
    found: list[PathVO] = []

    def walk(current: Node, path: PathVO) -> None:
        match current:
            case IVar(name=found_name) if found_name == name:
                found.append(path)
            case Lam(var=var) if var == name:
                return
            case Case(var1=var1, branch1=branch1, var2=var2, branch2=branch2):
                if var1 != name:
                    walk(branch1, path.child("branch1"))
                if var2 != name:
                    walk(branch2, path.child("branch2"))
            case Mark() | Box():
                return
            case _:
                for selector, child in current.children():
                    walk(child, path.child(selector))

    walk(node, PathVO.root())
    return found


def fresh_name(base: str, avoid: frozenset[str] | set[str]) -> str:
    """Return ``base`` followed by enough primes to avoid every name in ``avoid``."""
    candidate = base + "'"
    while candidate in avoid:
        candidate += "'"
    return candidate


def cxty(node: Node) -> int:
    """Number of constructor nodes; annotations count zero."""
    return sum(1 for _ in iter_nodes(node))


def spine(term: Term) -> tuple[Term, list[Elim]]:
    """Split ``(h e1 ... en)`` into its head and eliminators."""
    elims: list[Elim] = []
    current = term
    while isinstance(current, App):
        elims.append(current.elim)
        current = current.fun
    elims.reverse()
    return current, elims


def build_spine(head: Term, elims: Sequence[Elim]) -> Term:
    """Apply ``head`` to ``elims`` left to right."""
    result = head
    for elim in elims:
        result = App(result, elim)
    return result


def subst_intu(node: N, substitution: SubstIntuVO | Mapping[str, Term]) -> N:
    """Simultaneous capture-avoiding substitution of intuitionistic variables.

    Args:
        node (Node): Term or eliminator to substitute into.
        substitution (SubstIntuVO | Mapping[str, Term]): The images.

    Returns:
        Node: The substituted node.
    """
    mapping = (
        dict(substitution.mapping)
        if isinstance(substitution, SubstIntuVO)
        else dict(substitution)
    )
    return _subst_intu(node, mapping)  # type: ignore[return-value]


def _subst_intu(node: Node, mapping: dict[str, Term]) -> Node:
    if not mapping:
        return node
    match node:
        case IVar(name=name):
            return mapping.get(name, node)
        case Lam(var=var, annot=annot, body=body):
            new_var, new_body = _bind_intu(var, body, mapping)
            return Lam(new_var, annot, new_body)
        case Mu(var=var, annot=annot, body=body):
            image_cvars = _union(free_cvars(image) for image in mapping.values())
            if var in image_cvars:
                new_var = fresh_name(var, image_cvars | all_names(body))
                body = rename_cvar(body, var, new_var)
                var = new_var
            return Mu(var, annot, _subst_intu(body, mapping))
        case Case(var1=var1, branch1=branch1, var2=var2, branch2=branch2):
            new_var1, new_branch1 = _bind_intu(var1, branch1, mapping)
            new_var2, new_branch2 = _bind_intu(var2, branch2, mapping)
            return Case(new_var1, new_branch1, new_var2, new_branch2)
        case Mark() | Box():
            return node
        case _:
            return map_children(node, lambda child: _subst_intu(child, mapping))


def _bind_intu(var: str, body: Term, mapping: dict[str, Term]) -> tuple[str, Term]:
    body_free = free_ivars(body)
    inner = {name: image for name, image in mapping.items() if name != var and name in body_free}
    if not inner:
        return var, body
    image_ivars = _union(free_ivars(image) for image in inner.values())
    if var in image_ivars:
        new_var = fresh_name(var, image_ivars | all_names(body) | set(inner))
        body = _subst_intu(body, {var: IVar(new_var)})
        var = new_var
    return var, _subst_intu(body, inner)


def rename_cvar(node: N, old: str, new: str) -> N:
    """Rename the free classical variable ``old`` to ``new``, which must not occur in ``node``."""
    match node:
        case Name(var=var, body=body):
            return Name(new if var == old else var, rename_cvar(body, old, new))
        case Mu(var=var) if var == old:
            return node
        case Mark() | Box():
            return node
        case _:
            return map_children(node, lambda child: rename_cvar(child, old, new))


def subst_class(node: N, substitution: SubstClassVO) -> N:
    """Structural substitution: every ``(a N)`` with this free ``a`` becomes ``(a (N' e))``.

    Binders of ``node`` that would capture free variables of the eliminator are
    renamed first.
    """
    elim = substitution.elim
    return _subst_class(  # type: ignore[return-value]
        node, substitution.var, elim, free_ivars(elim), free_cvars(elim)
    )


def _subst_class(
    node: Node,
    var: str,
    elim: Elim,
    elim_ivars: frozenset[str],
    elim_cvars: frozenset[str],
) -> Node:
    def recurse(child: Node) -> Node:
        return _subst_class(child, var, elim, elim_ivars, elim_cvars)

    match node:
        case Name(var=name, body=body):
            new_body = recurse(body)
            if name == var:
                return Name(name, App(new_body, elim))
            return Name(name, new_body)
        case Mu(var=bound, annot=annot, body=body):
            if bound == var:
                return node
            if bound in elim_cvars:
                new_bound = fresh_name(bound, elim_cvars | all_names(body))
                body = rename_cvar(body, bound, new_bound)
                bound = new_bound
            return Mu(bound, annot, recurse(body))
        case Lam(var=bound, annot=annot, body=body):
            bound, body = _avoid_ivars(bound, body, elim_ivars)
            return Lam(bound, annot, recurse(body))
        case Case(var1=var1, branch1=branch1, var2=var2, branch2=branch2):
            var1, branch1 = _avoid_ivars(var1, branch1, elim_ivars)
            var2, branch2 = _avoid_ivars(var2, branch2, elim_ivars)
            return Case(var1, recurse(branch1), var2, recurse(branch2))
        case Mark() | Box():
            return node
        case _:
            return map_children(node, recurse)


def _avoid_ivars(var: str, body: Term, avoid: frozenset[str]) -> tuple[str, Term]:
    if var not in avoid:
        return var, body
    new_var = fresh_name(var, avoid | all_names(body))
    return new_var, _subst_intu(body, {var: IVar(new_var)})


def rename_binder_away(binder_var: str, body: Term, avoid: frozenset[str]) -> tuple[str, Term]:
    """Rename an intuitionistic binder so it is not in ``avoid``."""
    return _avoid_ivars(binder_var, body, avoid)


def map_children(node: Node, function: Callable[[Node], Node]) -> Node:
    """Apply ``function`` to every child; ``node`` itself is returned when nothing changes."""
    changes = {}
    for selector, child in node.children():
        new_child = function(child)
        if new_child is not child:
            changes[selector] = new_child
    if not changes:
        return node
    return replace(node, **changes)


def _union(sets) -> frozenset[str]:
    result: frozenset[str] = frozenset()
    for item in sets:
        result |= item
    return result
