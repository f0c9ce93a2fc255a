"""Concentration-two semigroups with a fixed Frobenius number.

Adjoining ``alpha(S)``, the largest gap x != F/2 whose mirror F - x is also
a gap, keeps the Frobenius number and concentration two. Iterating it ends at
an irreducible semigroup V(S). Grouping by V(S) partitions C2(F) into classes,
and each class is a tree rooted at its irreducible member.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import (
    ClassTreeInconsistency,
    ConcentrationNotTwo,
    Irreducible,
    NoFrobenius,
    NotIrreducible,
)
from .semigroup import NumericalSemigroup, is_concentration_two
from .trees import TreeNode

__all__ = [
    "FrobeniusClass",
    "is_irreducible",
    "alpha",
    "ascend",
    "ascent_chain",
    "irreducibles_with_frobenius",
    "irreducible_c2",
    "class_children",
    "class_members",
    "enumerate_c2_frobenius",
]


@dataclass(frozen=True)
class FrobeniusClass:
    """The class of an irreducible root: every S in C2(F) with V(S) == root.

    ``nodes`` holds the class tree in breadth-first order, ``members`` the
    same semigroups without tree bookkeeping.
    """

    root: NumericalSemigroup
    nodes: tuple[TreeNode, ...] = field(repr=False)

    @property
    def members(self) -> list[NumericalSemigroup]:
        return [node.semigroup for node in self.nodes]

    def __len__(self) -> int:
        return len(self.nodes)

    def to_dict(self) -> dict:
        return {"root": self.root.to_dict(), "members": [S.to_dict() for S in self.members]}


def _alpha_or_none(S: NumericalSemigroup) -> int | None:
    f = S.frobenius
    for x in reversed(S.gaps):
        if 2 * x != f and (f - x) not in S:
            return x
    return None


def is_irreducible(S: NumericalSemigroup) -> bool:
    """True iff no gap x != F/2 has F - x also a gap."""
    if S.frobenius < 0:
        raise NoFrobenius("the full monoid has no Frobenius number")
    return _alpha_or_none(S) is None


def alpha(S: NumericalSemigroup) -> int:
    if S.frobenius < 0:
        raise NoFrobenius("the full monoid has no Frobenius number")
    x = _alpha_or_none(S)
    if x is None:
        raise Irreducible(f"{S} is irreducible; alpha is undefined")
    return x


def ascent_chain(S: NumericalSemigroup) -> list[int]:
    """Elements adjoined, in order, on the way from S to V(S)."""
    added = []
    mask = S.gapmask
    T = S
    while (x := _alpha_or_none(T)) is not None:
        added.append(x)
        mask &= ~(1 << x)
        T = NumericalSemigroup((), _mask=mask)
    return added


def ascend(S: NumericalSemigroup) -> NumericalSemigroup:
    """The irreducible semigroup V(S) reached by repeatedly adjoining alpha."""
    if S.concentration != 2:
        raise ConcentrationNotTwo(f"{S} has concentration {S.concentration}")
    mask = S.gapmask
    for x in ascent_chain(S):
        mask &= ~(1 << x)
    return NumericalSemigroup((), _mask=mask)


def irreducibles_with_frobenius(F: int) -> list[NumericalSemigroup]:
    """Every irreducible numerical semigroup with Frobenius number F.

    For irreducible S and x != F/2, exactly one of x and F - x lies in S, and
    F/2 is a gap. So S is determined by its members in (F/2, F). The search
    fixes those members from the top down and prunes any branch whose
    committed members already sum onto a committed gap.
    """
    if F < 1:
        raise ValueError(f"Frobenius number must be positive, got {F}")
    upper = list(range(F - 1, F // 2, -1))
    base_gaps = 1 << F
    if F % 2 == 0:
        base_gaps |= 1 << (F // 2)
    found = []

    def consistent(members: int, gaps: int) -> bool:
        m = members
        while m:
            low = m & -m
            a = low.bit_length() - 1
            if (members << a) & gaps:
                return False
            m ^= low
        return True

    def search(i: int, members: int, gaps: int) -> None:
        if not consistent(members, gaps):
            return
        if i == len(upper):
            found.append(NumericalSemigroup((), _mask=gaps))
            return
        x = upper[i]
        search(i + 1, members | (1 << x), gaps | (1 << (F - x)))
        search(i + 1, members | (1 << (F - x)), gaps | (1 << x))

    search(0, 0, base_gaps)
    return sorted(found)


def irreducible_c2(F: int) -> list[NumericalSemigroup]:
    """Irreducible semigroups of Frobenius number F and concentration two."""
    return [S for S in irreducibles_with_frobenius(F) if is_concentration_two(S)]


def class_children(T: NumericalSemigroup, is_root: bool) -> list[NumericalSemigroup]:
    """Sons of T in its class tree, ascending by removed element.

    x is removable when x in msg(T), F/2 < x < F, alpha(T) < x, and either
    {x - 1, x + 1} is contained in T or x == m(T). At the root the alpha
    bound is dropped. A removal that leaves a half-line is skipped because
    the result has concentration one. Any other son that fails re-validation
    raises :class:`ClassTreeInconsistency`.
    """
    f = T.frobenius
    floor = -1 if is_root else alpha(T)
    m = T.multiplicity
    sons = []
    for x in T.minimal_generators:
        if not (f < 2 * x and x < f and x > floor):
            continue
        if not ((x - 1 in T and x + 1 in T) or x == m):
            continue
        S = NumericalSemigroup((), _mask=T.gapmask | (1 << x))
        if S.genus == S.multiplicity - 1:
            continue
        if S.frobenius != f or S.concentration != 2 or _alpha_or_none(S) != x:
            raise ClassTreeInconsistency(
                f"removing {x} from {T} gave {S} "
                f"(F={S.frobenius}, C={S.concentration}, alpha={_alpha_or_none(S)})"
            )
        sons.append(S)
    return sons


def class_members(root: NumericalSemigroup) -> FrobeniusClass:
    """Breadth-first traversal of the class tree below an irreducible root."""
    if root.concentration != 2:
        raise ConcentrationNotTwo(f"{root} has concentration {root.concentration}")
    if not is_irreducible(root):
        raise NotIrreducible(f"{root} is not irreducible")
    nodes = [TreeNode(root)]
    level = nodes
    while level:
        nxt = []
        for node in level:
            for S in class_children(node.semigroup, is_root=node.depth == 0):
                x = S.gapmask ^ node.semigroup.gapmask
                nxt.append(TreeNode(S, x.bit_length() - 1, node.depth + 1, node.semigroup))
        nodes.extend(nxt)
        level = nxt
    return FrobeniusClass(root, tuple(nodes))


def enumerate_c2_frobenius(F: int, workers: int = 1) -> list[FrobeniusClass]:
    """All of C2(F), grouped into classes sorted by root."""
    roots = irreducible_c2(F)
    if workers > 1 and len(roots) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(class_members, roots))
    return [class_members(r) for r in roots]
