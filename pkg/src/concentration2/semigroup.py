"""Exact numerical semigroups stored by their gap set.

A numerical semigroup S is kept as the sorted tuple of its gaps together
with an integer bitmask of those gaps (bit ``i`` set iff ``i`` is a gap).
Every invariant is bounded by the Frobenius number, so the bitmask is all
that is ever needed for membership, closure and generator tests.
"""

from __future__ import annotations

import functools
import math
from collections.abc import Iterable, Iterator

from .errors import (
    ElementOutOfRange,
    EmptyInput,
    GcdNotOne,
    NoFrobenius,
    NotASemigroup,
    NotMinimalGenerator,
)

__all__ = [
    "NumericalSemigroup",
    "from_generators",
    "from_gaps",
    "ordinary",
    "contains",
    "next_element",
    "concentration_of",
    "is_concentration_two",
    "remove_element",
    "add_frobenius",
    "is_elementary",
    "elementary_from_upper_set",
    "format_generators",
    "parse_generators",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _is_closed(gapmask: int, frobenius: int) -> bool:
    if frobenius < 1:
        return True
    window = (1 << (frobenius + 1)) - 1
    members = window & ~gapmask & ~1
    for a in iter_bits(members):
        if 2 * a > frobenius:
            break
        if (members << a) & gapmask:
            return False
    return True


@functools.total_ordering
class NumericalSemigroup:
    """An immutable numerical semigroup.

    Equality and hashing use the gap set. Ordering is lexicographic on the
    sorted gap tuple, which gives the canonical order for all listings.

    Use :func:`from_generators`, :func:`from_gaps` or :func:`ordinary` to build
    one; the constructor itself trusts its input.
    """

    def __init__(self, gaps: Iterable[int], _mask: int | None = None):
        if _mask is None:
            _mask = 0
            for h in gaps:
                _mask |= 1 << h
        object.__setattr__(self, "_gapmask", _mask)
        object.__setattr__(self, "_frobenius", _mask.bit_length() - 1 if _mask else -1)
        assert _is_closed(_mask, self._frobenius), f"gap set {self.gaps} is not closed"

    def __setattr__(self, name, value):
        raise AttributeError("NumericalSemigroup is immutable")

    def __reduce__(self):
        return (_rebuild, (self._gapmask,))

    # -- basic invariants -------------------------------------------------

    @property
    def gapmask(self) -> int:
        return self._gapmask

    @functools.cached_property
    def gaps(self) -> tuple[int, ...]:
        return tuple(iter_bits(self._gapmask))

    @property
    def frobenius(self) -> int:
        return self._frobenius

    @functools.cached_property
    def genus(self) -> int:
        return bin(self._gapmask).count("1")

    @functools.cached_property
    def multiplicity(self) -> int:
        occupied = self._gapmask | 1
        return ((occupied + 1) & ~occupied).bit_length() - 1

    @functools.cached_property
    def n_count(self) -> int:
        """Number of elements of S strictly below the Frobenius number."""
        if self._frobenius < 0:
            return 0
        return self._frobenius + 1 - self.genus

    @functools.cached_property
    def minimal_generators(self) -> tuple[int, ...]:
        # Every minimal generator lies in [m, F + m].
        m = self.multiplicity
        bound = max(self._frobenius + m, m)
        window = (1 << (bound + 1)) - 1
        positive = window & ~self._gapmask & ~1
        sums = 0
        for a in iter_bits(positive):
            if 2 * a > bound:
                break
            sums |= positive << a
        return tuple(iter_bits(positive & ~sums))

    @property
    def embedding_dimension(self) -> int:
        return len(self.minimal_generators)

    @functools.cached_property
    def concentration(self) -> int:
        f = self._frobenius
        if f < 0:
            return 1
        window = (1 << (f + 2)) - 1
        members = [s for s in iter_bits(window & ~self._gapmask) if s > 0]
        # members ends with F + 1; every jump past that has size 1
        jumps = (b - a for a, b in zip(members, members[1:]))
        return max(jumps, default=1)

    # -- membership -------------------------------------------------------

    def __contains__(self, x: int) -> bool:
        return x >= 0 and not (self._gapmask >> x) & 1

    def elements_up_to(self, bound: int) -> list[int]:
        return [x for x in range(bound + 1) if x in self]

    def is_half_line(self) -> bool:
        return self.concentration == 1

    # -- comparisons and display -----------------------------------------

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self._gapmask == other._gapmask

    def __lt__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.gaps < other.gaps

    def __hash__(self):
        return hash(self._gapmask)

    def __str__(self):
        return format_generators(self.minimal_generators)

    def __repr__(self):
        return f"NumericalSemigroup{str(self)}"

    def to_dict(self) -> dict:
        """Canonical JSON-ready form."""
        return {
            "msg": list(self.minimal_generators),
            "gaps": list(self.gaps),
            "multiplicity": self.multiplicity,
            "frobenius": self.frobenius,
            "genus": self.genus,
            "embedding_dimension": self.embedding_dimension,
            "concentration": self.concentration,
        }

    # method aliases for the module-level operations
    def remove_element(self, x: int) -> NumericalSemigroup:
        return remove_element(self, x)

    def add_frobenius(self) -> NumericalSemigroup:
        return add_frobenius(self)

    def next_element(self, s: int) -> int:
        return next_element(self, s)


def _rebuild(mask: int) -> NumericalSemigroup:
    return NumericalSemigroup((), _mask=mask)


def format_generators(gens: Iterable[int]) -> str:
    return "⟨" + ",".join(str(g) for g in gens) + "⟩"


def parse_generators(text: str) -> list[int]:
    """Parse ``"5,7,9"`` or ``"⟨5,7,9⟩"`` (also ``<5,7,9>``) into integers."""
    body = text.strip().strip("⟨⟩<>()[]{} ")
    if not body:
        raise EmptyInput("empty generator list")
    try:
        return [int(tok) for tok in body.replace(" ", ",").split(",") if tok]
    except ValueError:
        raise EmptyInput(f"cannot parse generator list {text!r}") from None


def from_gaps(gaps: Iterable[int]) -> NumericalSemigroup:
    """Build a semigroup from its gap set, checking additive closure."""
    mask = 0
    for h in gaps:
        if h <= 0:
            raise NotASemigroup(f"gap {h} is not a positive integer")
        mask |= 1 << h
    if not _is_closed(mask, mask.bit_length() - 1):
        raise NotASemigroup("complement of the gap set is not closed under addition")
    return NumericalSemigroup((), _mask=mask)


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """The semigroup generated by ``gens``; their gcd must be 1."""
    gens = sorted(set(gens))
    if not gens:
        raise EmptyInput("generator list is empty")
    if gens[0] < 1:
        raise ElementOutOfRange(f"generators must be positive, got {gens[0]}")
    if math.gcd(*gens) != 1:
        raise GcdNotOne(f"gcd{format_generators(gens)} = {math.gcd(*gens)}")
    smallest = gens[0]
    reached = 1
    gapmask = 0
    run = 0
    n = 0
    # once `smallest` consecutive members are found, everything above is a member
    while run < smallest:
        n += 1
        if any(g <= n and (reached >> (n - g)) & 1 for g in gens):
            reached |= 1 << n
            run += 1
        else:
            gapmask |= 1 << n
            run = 0
    return NumericalSemigroup((), _mask=gapmask)


def ordinary(m: int) -> NumericalSemigroup:
    """The half-line {0, m, m+1, ...}."""
    if m < 1:
        raise ElementOutOfRange(f"multiplicity must be positive, got {m}")
    return NumericalSemigroup((), _mask=(1 << m) - 2)


def contains(S: NumericalSemigroup, x: int) -> bool:
    return x in S


def next_element(S: NumericalSemigroup, s: int) -> int:
    """Least element of S strictly greater than ``s``."""
    x = max(s + 1, 0)
    while x not in S:
        x += 1
    return x


def concentration_of(S: NumericalSemigroup) -> int:
    return S.concentration


def is_concentration_two(S: NumericalSemigroup) -> bool:
    """Generator test: S is not a half-line and x+1 or x+2 is in S for each x in msg(S)."""
    if S.genus == S.multiplicity - 1:
        return False
    return all(x + 1 in S or x + 2 in S for x in S.minimal_generators)


def remove_element(S: NumericalSemigroup, x: int) -> NumericalSemigroup:
    """S minus a minimal generator ``x``."""
    if x not in S.minimal_generators:
        raise NotMinimalGenerator(f"{x} is not a minimal generator of {S}")
    return NumericalSemigroup((), _mask=S.gapmask | (1 << x))


def add_frobenius(S: NumericalSemigroup) -> NumericalSemigroup:
    """S with its Frobenius number adjoined."""
    if S.frobenius < 0:
        raise NoFrobenius("the full monoid has no Frobenius number")
    return NumericalSemigroup((), _mask=S.gapmask & ~(1 << S.frobenius))


def is_elementary(S: NumericalSemigroup) -> bool:
    return S.frobenius < 2 * S.multiplicity


def elementary_from_upper_set(m: int, upper: Iterable[int]) -> NumericalSemigroup:
    """The elementary semigroup {0, m} ∪ upper ∪ {2m, ...}."""
    if m < 2:
        raise ElementOutOfRange(f"multiplicity must be at least 2, got {m}")
    mask = (1 << (2 * m)) - 2
    mask &= ~(1 << m)
    for a in upper:
        if not m < a < 2 * m:
            raise ElementOutOfRange(f"{a} is outside [{m + 1}, {2 * m - 1}]")
        mask &= ~(1 << a)
    return NumericalSemigroup((), _mask=mask)
