"""Rooted enumeration trees of concentration-two semigroups.

For a multiplicity m, the semigroups of multiplicity m and concentration at
most two form a tree rooted at the half-line {0, m, ->}: the parent of a
node is obtained by adjoining its Frobenius number, and the sons of S are
S minus x for every minimal generator x >= F(S) + 2. Restricting x to at
most 2m - 1 gives the elementary subtree.

The tree is finite exactly when m is odd, so walks over even multiplicity
demand a genus bound.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import (
    ConcentrationTooHigh,
    ElementOutOfRange,
    EvenMultiplicityInfinite,
    InvalidGenusRange,
    NotElementary,
    UnboundedEnumeration,
)
from .semigroup import NumericalSemigroup, is_elementary, ordinary

__all__ = [
    "Mode",
    "TreeNode",
    "EnumerationRequest",
    "children_multiplicity_tree",
    "children_elementary_tree",
    "enumerate_by_genus",
    "walk_tree",
    "count_c2",
    "tree_height",
    "level_sizes",
]


class Mode(str, enum.Enum):
    MULTIPLICITY_TREE = "multiplicity-tree"
    ELEMENTARY_TREE = "elementary-tree"
    GENUS_LEVEL = "genus-level"
    COUNT = "count"
    HEIGHT = "height"
    FROBENIUS = "frobenius"


@dataclass(frozen=True)
class TreeNode:
    """A vertex of an enumeration tree.

    ``removed`` is the edge label: the element deleted from ``parent`` to
    obtain ``semigroup``. It is ``None`` at the root.
    """

    semigroup: NumericalSemigroup
    removed: int | None = None
    depth: int = 0
    parent: NumericalSemigroup | None = None

    def to_dict(self) -> dict:
        row = self.semigroup.to_dict()
        row["depth"] = self.depth
        row["removed"] = self.removed
        return row


@dataclass(frozen=True)
class EnumerationRequest:
    mode: Mode
    multiplicity: int | None = None
    genus: int | None = None
    max_genus: int | None = None
    frobenius: int | None = None
    root: NumericalSemigroup | None = None
    order: str = "ascending-removed"

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.order != "ascending-removed":
            raise ValueError(f"unsupported child order {self.order!r}")
        if self.mode is Mode.FROBENIUS:
            if self.frobenius is None and self.root is None:
                raise ValueError("frobenius mode needs a Frobenius number or a class root")
            return
        if self.multiplicity is None or self.multiplicity < 2:
            raise ElementOutOfRange("multiplicity must be at least 2")
        if self.mode is Mode.GENUS_LEVEL:
            if self.genus is None or not 1 <= self.multiplicity - 1 <= self.genus:
                raise InvalidGenusRange("genus-level mode needs 1 <= m - 1 <= genus")


def _sons(S: NumericalSemigroup, upper: int | None) -> list[NumericalSemigroup]:
    lo = S.frobenius + 2
    out = []
    for x in S.minimal_generators:
        if x < lo:
            continue
        if upper is not None and x > upper:
            break
        out.append(NumericalSemigroup((), _mask=S.gapmask | (1 << x)))
    return out


def _check_c2(S: NumericalSemigroup) -> None:
    if S.concentration > 2:
        raise ConcentrationTooHigh(f"{S} has concentration {S.concentration}")


def _nodes(S: NumericalSemigroup, sons: list[NumericalSemigroup]) -> list[TreeNode]:
    m = S.multiplicity
    return [TreeNode(T, T.frobenius, T.genus - m + 1, S) for T in sons]


def children_multiplicity_tree(S: NumericalSemigroup) -> list[TreeNode]:
    """Sons of S in the multiplicity tree, ascending by removed element."""
    _check_c2(S)
    return _nodes(S, _sons(S, None))


def children_elementary_tree(S: NumericalSemigroup) -> list[TreeNode]:
    """Sons of S in the elementary tree (removed element at most 2m - 1)."""
    if not is_elementary(S):
        raise NotElementary(f"{S} is not elementary")
    _check_c2(S)
    return _nodes(S, _sons(S, 2 * S.multiplicity - 1))


def enumerate_by_genus(m: int, g: int) -> list[NumericalSemigroup]:
    """All semigroups of multiplicity m, concentration <= 2 and genus g.

    Walks the multiplicity tree level by level from the half-line; the
    level at depth k holds exactly the semigroups of genus m - 1 + k.
    """
    if m < 2 or not 1 <= m - 1 <= g:
        raise InvalidGenusRange(f"need 1 <= m - 1 <= g, got m={m}, g={g}")
    level = [ordinary(m)]
    i = m - 1
    while i != g:
        level = [T for S in level for T in _sons(S, None)]
        if not level:
            return []
        i += 1
    return level


def _resolve(request: EnumerationRequest) -> tuple[int, int | None, int | None]:
    """(multiplicity, upper bound on removed elements, genus bound)."""
    m = request.multiplicity
    if request.mode is Mode.ELEMENTARY_TREE:
        return m, 2 * m - 1, request.max_genus
    if request.mode is Mode.GENUS_LEVEL:
        return m, None, request.genus
    if request.mode in (Mode.MULTIPLICITY_TREE, Mode.COUNT, Mode.HEIGHT):
        if m % 2 == 0 and request.max_genus is None:
            raise UnboundedEnumeration(
                f"the tree for even multiplicity {m} is infinite; set max_genus"
            )
        return m, None, request.max_genus
    raise ValueError(f"mode {request.mode.value} is not a tree walk")


def walk_tree(request: EnumerationRequest, workers: int = 1) -> Iterator[TreeNode]:
    """Breadth-first walk of a multiplicity or elementary tree.

    Emits each node with genus <= ``max_genus`` once, parents before sons,
    sons ascending by removed element. With ``workers > 1`` the subtrees
    under the depth-one nodes are built in separate processes and merged
    back into the same order.
    """
    m, upper, bound = _resolve(request)
    root = ordinary(m)
    if workers > 1:
        yield from _walk_parallel(root, upper, bound, workers)
        return
    level = [TreeNode(root)]
    while level:
        yield from level
        nxt = []
        for node in level:
            if bound is not None and node.semigroup.genus >= bound:
                continue
            nxt.extend(_nodes(node.semigroup, _sons(node.semigroup, upper)))
        level = nxt


def _subtree_preorder(args):
    start, path, upper, bound = args
    # (depth, path of removed labels, node); sorting by (depth, path) is BFS order
    out = []
    stack = [(start, path)]
    while stack:
        node, p = stack.pop()
        out.append((node.depth, p, node))
        if bound is not None and node.semigroup.genus >= bound:
            continue
        for child in reversed(_nodes(node.semigroup, _sons(node.semigroup, upper))):
            stack.append((child, p + (child.removed,)))
    return out


def _walk_parallel(root, upper, bound, workers):
    first = TreeNode(root)
    yield first
    if bound is not None and root.genus >= bound:
        return
    tops = _nodes(root, _sons(root, upper))
    jobs = [(t, (t.removed,), upper, bound) for t in tops]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_subtree_preorder, jobs))
    merged = [item for part in parts for item in part]
    merged.sort(key=lambda item: (item[0], item[1]))
    for _, _, node in merged:
        yield node


def _subtree_stats(args):
    S, upper, bound = args
    count = 0
    deepest = S.genus
    stack = [S]
    while stack:
        T = stack.pop()
        count += 1
        deepest = max(deepest, T.genus)
        if bound is not None and T.genus >= bound:
            continue
        stack.extend(_sons(T, upper))
    return count, deepest


def _tree_stats(m: int, upper: int | None, bound: int | None, workers: int) -> tuple[int, int]:
    """Depth-first (node count, height) of a tree rooted at the half-line."""
    root = ordinary(m)
    tops = _sons(root, upper)
    if bound is not None and root.genus >= bound:
        tops = []
    jobs = [(T, upper, bound) for T in tops]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_subtree_stats, jobs))
    else:
        parts = [_subtree_stats(job) for job in jobs]
    count = 1 + sum(c for c, _ in parts)
    deepest = max((d for _, d in parts), default=root.genus)
    return count, deepest - (m - 1)


def _variant_upper(m: int, variant: str) -> int | None:
    if variant == "full":
        if m % 2 == 0:
            raise EvenMultiplicityInfinite(
                f"C2[{m}] is infinite because {m} is even; use a genus bound"
            )
        return None
    if variant == "elementary":
        return 2 * m - 1
    raise ValueError(f"unknown tree variant {variant!r}")


def count_c2(m: int, variant: str = "full", workers: int = 1) -> int:
    """Number of concentration-two semigroups of multiplicity m.

    This is the node count of the tree minus the half-line root. The full
    variant requires odd m; the elementary variant is finite for every m.
    """
    if m < 2:
        raise ElementOutOfRange("multiplicity must be at least 2")
    count, _ = _tree_stats(m, _variant_upper(m, variant), None, workers)
    return count - 1


def tree_height(m: int, variant: str = "full", workers: int = 1) -> int:
    """Largest depth of a node in the full or elementary tree of multiplicity m."""
    if m < 2:
        raise ElementOutOfRange("multiplicity must be at least 2")
    _, height = _tree_stats(m, _variant_upper(m, variant), None, workers)
    return height


def level_sizes(m: int, variant: str = "full", max_genus: int | None = None) -> dict[int, int]:
    """Map genus -> number of tree nodes with that genus (root included)."""
    upper = 2 * m - 1 if variant == "elementary" else None
    if variant == "full" and m % 2 == 0 and max_genus is None:
        raise UnboundedEnumeration(f"the tree for even multiplicity {m} is infinite")
    sizes: dict[int, int] = {}
    level = [ordinary(m)]
    g = m - 1
    while level and (max_genus is None or g <= max_genus):
        sizes[g] = len(level)
        level = [T for S in level for T in _sons(S, upper)]
        g += 1
    return sizes
