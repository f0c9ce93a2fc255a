"""Brute-force reference enumeration for cross-checking the fast enumerators.

Nothing here touches the bitmask machinery of :mod:`concentration2.semigroup`.
Semigroups are plain frozensets of gaps, and every invariant is computed
straight from its definition. Only the final conversion to
:class:`NumericalSemigroup` crosses over, so tests compare two independent
computations.

The universe is the classical genus tree over *all* numerical semigroups:
the sons of S are S minus x for each minimal generator x > F(S).
"""

from __future__ import annotations

import functools
import itertools
from collections.abc import Callable
from dataclasses import dataclass

from .errors import BoundTooLarge
from .semigroup import NumericalSemigroup

__all__ = [
    "OracleEntry",
    "OracleUniverse",
    "DEFAULT_CEILING",
    "all_semigroups_by_genus",
    "oracle_filter",
    "maximal_by_frobenius",
    "c2_by_oversemigroups",
]

DEFAULT_CEILING = 16


def _members_upto(gaps: frozenset, bound: int) -> list[int]:
    return [x for x in range(bound + 1) if x not in gaps]


def _minimal_generators(gaps: frozenset) -> list[int]:
    frob = max(gaps, default=-1)
    mult = next(x for x in itertools.count(1) if x not in gaps)
    positive = [x for x in _members_upto(gaps, max(frob + mult, mult)) if x > 0]
    pos_set = set(positive)
    return [x for x in positive if not any((x - a) in pos_set for a in positive if a < x)]


@dataclass(frozen=True)
class OracleEntry:
    gaps: frozenset
    frobenius: int
    multiplicity: int
    genus: int
    concentration: int
    msg: tuple

    @classmethod
    def from_gaps(cls, gaps: frozenset) -> OracleEntry:
        frob = max(gaps, default=-1)
        mult = next(x for x in itertools.count(1) if x not in gaps)
        members = [s for s in _members_upto(gaps, frob + 1) if s > 0]
        conc = 1
        for s in members:
            if s >= frob:
                break
            nxt = next(x for x in itertools.count(s + 1) if x not in gaps)
            conc = max(conc, nxt - s)
        return cls(gaps, frob, mult, len(gaps), conc, tuple(_minimal_generators(gaps)))

    @property
    def semigroup(self) -> NumericalSemigroup:
        return NumericalSemigroup(self.gaps)


@dataclass(frozen=True)
class OracleUniverse:
    genus_bound: int
    entries: tuple

    @property
    def semigroups(self) -> list[NumericalSemigroup]:
        return [e.semigroup for e in self.entries]

    def level_sizes(self) -> list[int]:
        sizes = [0] * (self.genus_bound + 1)
        for e in self.entries:
            sizes[e.genus] += 1
        return sizes


@functools.lru_cache(maxsize=4)
def all_semigroups_by_genus(gmax: int, ceiling: int = DEFAULT_CEILING) -> OracleUniverse:
    """Every numerical semigroup of genus at most ``gmax``, each exactly once."""
    if gmax > ceiling:
        raise BoundTooLarge(f"genus bound {gmax} exceeds the oracle ceiling {ceiling}")
    level = [OracleEntry.from_gaps(frozenset())]
    entries = list(level)
    for _ in range(gmax):
        nxt = []
        for e in level:
            for x in e.msg:
                if x > e.frobenius:
                    nxt.append(OracleEntry.from_gaps(e.gaps | {x}))
        entries.extend(nxt)
        level = nxt
    return OracleUniverse(gmax, tuple(entries))


def oracle_filter(
    universe: OracleUniverse, predicate: Callable[[OracleEntry], bool]
) -> list[NumericalSemigroup]:
    return [e.semigroup for e in universe.entries if predicate(e)]


def maximal_by_frobenius(universe: OracleUniverse, frobenius: int) -> list[NumericalSemigroup]:
    """Semigroups with the given Frobenius number not strictly contained in another one."""
    same = [e for e in universe.entries if e.frobenius == frobenius]
    return [
        e.semigroup
        for e in same
        if not any(o.gaps < e.gaps for o in same)
    ]


def c2_by_oversemigroups(m: int) -> list[frozenset]:
    """Gap sets of all concentration-two semigroups of odd multiplicity m.

    Such an S contains m and one of m+1, m+2, hence contains <m, m+1> or
    <m, m+2>. Every subset of the gaps of those two semigroups is tried.
    Exponential in m: practical only up to m = 5.
    """
    found = set()
    for second in (m + 1, m + 2):
        gen_members = {0}
        frob_bound = (m - 1) * (second - 1)
        for x in range(1, frob_bound + 1):
            if any((x - g) in gen_members for g in (m, second) if x >= g):
                gen_members.add(x)
        base_gaps = [x for x in range(1, frob_bound) if x not in gen_members]
        for r in range(len(base_gaps) + 1):
            for keep in itertools.combinations(base_gaps, r):
                gaps = frozenset(keep)
                if not gaps:
                    continue
                e_members = [s for s in range(1, max(gaps) + 1) if s not in gaps]
                if any((a + b) in gaps for a in e_members for b in e_members):
                    continue
                e = OracleEntry.from_gaps(gaps)
                if e.multiplicity == m and e.concentration == 2:
                    found.add(gaps)
    return sorted(found, key=sorted)
