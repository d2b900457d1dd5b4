"""Integer partitions and the four counting classes A, B, C, D.

Class A: all parts distinct.  Class B: all parts odd.  Class C: largest part
even, say 2N, and every part not exceeding N occurs at most once.  Class D:
only the smallest part may repeat, and at most twice (equivalently, in a
rendering that allows two leading zeros, the smallest entry occurs exactly
twice and everything else is distinct).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator

DEFAULT_ENUMERATION_CUTOFF = 60

METHOD_ENUMERATION = "enumeration"
METHOD_DYNAMIC_PROGRAM = "dynamic-program"
METHOD_SERIES_COEFFICIENT = "series-coefficient"
COUNT_METHODS = (METHOD_ENUMERATION, METHOD_DYNAMIC_PROGRAM, METHOD_SERIES_COEFFICIENT)


class CapacityError(ValueError):
    """Requested enumeration exceeds the configured cutoff."""


class ClassMembershipError(ValueError):
    """A partition does not belong to the class an operation requires."""


class PartitionParseError(ValueError):
    """A partition string does not match the 'a+b+c' grammar."""


@dataclass(frozen=True)
class Partition:
    """A partition in canonical form: positive parts, non-increasing."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for part in self.parts:
            if part < 1:
                raise ValueError(f"non-positive part {part}; use normalize() first")
            if prev is not None and part > prev:
                raise ValueError("parts must be non-increasing; use normalize() first")
            prev = part

    @cached_property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def multiplicities(self) -> Counter[int]:
        return Counter(self.parts)

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts) if self.parts else "(empty)"


class PartitionClass(Enum):
    """Labels for the four partition families related by the verified identity."""

    A = "A"
    B = "B"
    C = "C"
    D = "D"


def normalize(raw_parts: Iterable[int]) -> Partition:
    """Drop zero parts and sort the rest non-increasing.

    Zeros are legal input here because the class-D rendering carries them;
    negative entries are rejected.
    """
    parts = []
    for p in raw_parts:
        if p < 0:
            raise ValueError(f"negative part: {p}")
        if p > 0:
            parts.append(p)
    parts.sort(reverse=True)
    return Partition(tuple(parts))


def parse_partition(text: str, allow_zeros: bool = False) -> Partition:
    """Parse 'a+b+c' with optional whitespace, parts in any order.

    Zero parts are accepted only with allow_zeros=True (the class-D form).
    """
    tokens = [t.strip() for t in text.strip().split("+")]
    if tokens == [""]:
        raise PartitionParseError("empty partition string")
    values = []
    for tok in tokens:
        if not tok.isdigit():
            raise PartitionParseError(f"bad part {tok!r} in {text!r}")
        v = int(tok)
        if v == 0 and not allow_zeros:
            raise PartitionParseError("zero parts are only allowed in the class-D form")
        values.append(v)
    return normalize(values)


def is_in_class(p: Partition, cls: PartitionClass) -> bool:
    """Membership predicate for one of the four classes.

    The empty partition is in A, B, and D (class D admits the bare '0+0'
    rendering); it is not in C, where the count C(0)=1 is a convention of
    the counting layer, not of this predicate.
    """
    if cls is PartitionClass.A:
        return len(set(p.parts)) == len(p.parts)
    if cls is PartitionClass.B:
        return all(part % 2 == 1 for part in p.parts)
    if cls is PartitionClass.C:
        if not p.parts:
            return False
        largest = p.parts[0]
        if largest % 2 == 1:
            return False
        half = largest // 2
        small = [part for part in p.parts if part <= half]
        return len(set(small)) == len(small)
    if cls is PartitionClass.D:
        if len(p.parts) <= 1:
            return True
        counts = p.multiplicities()
        smallest = p.parts[-1]
        if counts[smallest] > 2:
            return False
        return all(counts[part] == 1 for part in counts if part != smallest)
    raise TypeError(f"not a partition class: {cls!r}")


def _gen_distinct(n: int, floor: int = 1) -> Iterator[tuple[int, ...]]:
    """Partitions of n into distinct parts, each >= floor, lex decreasing."""
    buf: list[int] = []

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(buf)
            return
        below_floor = (floor - 1) * floor // 2
        for first in range(min(cap, remaining), floor - 1, -1):
            if first * (first + 1) // 2 - below_floor < remaining:
                break
            buf.append(first)
            yield from rec(remaining - first, first - 1)
            buf.pop()

    return rec(n, n)


def _gen_odd(n: int) -> Iterator[tuple[int, ...]]:
    """Partitions of n into odd parts, lex decreasing."""
    buf: list[int] = []

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(buf)
            return
        first = min(cap, remaining)
        if first % 2 == 0:
            first -= 1
        for part in range(first, 0, -2):
            buf.append(part)
            yield from rec(remaining - part, part)
            buf.pop()

    return rec(n, n)


def _gen_class_c(n: int) -> Iterator[tuple[int, ...]]:
    """Class-C partitions of n: largest part 2N even, parts <= N distinct."""
    buf: list[int] = []

    def rec(remaining: int, cap: int, half: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(buf)
            return
        for first in range(min(cap, remaining), 0, -1):
            if first > half:
                buf.append(first)
                yield from rec(remaining - first, first, half)
                buf.pop()
            else:
                if first * (first + 1) // 2 < remaining:
                    break
                buf.append(first)
                yield from rec(remaining - first, first - 1, half)
                buf.pop()

    def outer() -> Iterator[tuple[int, ...]]:
        for largest in range(2 * (n // 2), 1, -2):
            buf.append(largest)
            yield from rec(n - largest, largest, largest // 2)
            buf.pop()

    return outer()


def _gen_class_d(n: int) -> Iterator[tuple[int, ...]]:
    """Class-D partitions of n: distinct parts, or the smallest part doubled."""
    if n == 0:
        yield ()
        return
    yield from _gen_distinct(n)
    for s in range(1, n // 2 + 1):
        for rest in _gen_distinct(n - 2 * s, floor=s + 1):
            yield rest + (s, s)


_GENERATORS = {
    PartitionClass.A: _gen_distinct,
    PartitionClass.B: _gen_odd,
    PartitionClass.C: _gen_class_c,
    PartitionClass.D: _gen_class_d,
}


def enumerate_class(
    n: int, cls: PartitionClass, cutoff: int = DEFAULT_ENUMERATION_CUTOFF
) -> list[Partition]:
    """All canonical partitions of weight n in the class, lex decreasing.

    Refuses weights above the cutoff (default 60); raise the cutoff
    explicitly for larger runs.
    """
    if n < 0:
        raise ValueError("weight must be non-negative")
    if n > cutoff:
        raise CapacityError(f"weight {n} exceeds enumeration cutoff {cutoff}")
    tuples = sorted(_GENERATORS[cls](n), reverse=True)
    return [Partition(t) for t in tuples]


def _dp_counts(cls: PartitionClass, n_max: int) -> list[int]:
    """Counting table values[0..n_max] for one class, by dynamic program."""
    if cls is PartitionClass.A:
        dp = [0] * (n_max + 1)
        dp[0] = 1
        for k in range(1, n_max + 1):
            for j in range(n_max, k - 1, -1):
                dp[j] += dp[j - k]
        return dp
    if cls is PartitionClass.B:
        dp = [0] * (n_max + 1)
        dp[0] = 1
        for k in range(1, n_max + 1, 2):
            for j in range(k, n_max + 1):
                dp[j] += dp[j - k]
        return dp
    if cls is PartitionClass.C:
        # Condition on the largest part 2N: one copy of 2N is placed, parts in
        # (N, 2N] repeat freely, parts <= N are used at most once.  C(0)=1 is
        # the counting convention for the empty partition.
        out = [0] * (n_max + 1)
        out[0] = 1
        for half in range(1, n_max // 2 + 1):
            m_max = n_max - 2 * half
            dp = [0] * (m_max + 1)
            dp[0] = 1
            for k in range(half + 1, 2 * half + 1):
                for j in range(k, m_max + 1):
                    dp[j] += dp[j - k]
            for k in range(1, half + 1):
                for j in range(m_max, k - 1, -1):
                    dp[j] += dp[j - k]
            for m in range(m_max + 1):
                out[m + 2 * half] += dp[m]
        return out
    if cls is PartitionClass.D:
        # Two-to-one reduction onto distinct partitions of n-1; the n=0 and
        # n=1 values are the conventions that keep every method in agreement.
        distinct = _dp_counts(PartitionClass.A, max(n_max - 1, 0))
        out = [0] * (n_max + 1)
        out[0] = 1
        if n_max >= 1:
            out[1] = 1
        for n in range(2, n_max + 1):
            out[n] = 2 * distinct[n - 1]
        return out
    raise TypeError(f"not a partition class: {cls!r}")


def count_class(
    n: int,
    cls: PartitionClass,
    method: str = METHOD_DYNAMIC_PROGRAM,
    cutoff: int = DEFAULT_ENUMERATION_CUTOFF,
) -> int:
    """Number of weight-n partitions in the class, by the chosen method.

    All three methods agree everywhere, including the convention values
    C(0)=1, C(1)=0, D(0)=1, D(1)=1.
    """
    if n < 0:
        raise ValueError("weight must be non-negative")
    if method == METHOD_ENUMERATION:
        if cls is PartitionClass.C and n == 0:
            return 1  # counting-layer convention; the predicate excludes the empty partition
        return len(enumerate_class(n, cls, cutoff))
    if method == METHOD_DYNAMIC_PROGRAM:
        return _dp_counts(cls, n)[n]
    if method == METHOD_SERIES_COEFFICIENT:
        from .series import gf_class  # deferred; series builds on this module

        return gf_class(cls, n).coeff(n)
    raise ValueError(f"unknown counting method: {method!r}")


@dataclass(frozen=True)
class CountTable:
    """Counts values[n] for n = 0..len-1 of one class, tagged with the method."""

    partition_class: PartitionClass
    method: str
    values: tuple[int, ...]


def count_table(
    cls: PartitionClass,
    n_max: int,
    method: str = METHOD_DYNAMIC_PROGRAM,
    cutoff: int = DEFAULT_ENUMERATION_CUTOFF,
) -> CountTable:
    """Counting table for n = 0..n_max in one pass."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    if method == METHOD_DYNAMIC_PROGRAM:
        values = _dp_counts(cls, n_max)
    elif method == METHOD_ENUMERATION:
        values = [count_class(n, cls, METHOD_ENUMERATION, cutoff) for n in range(n_max + 1)]
    elif method == METHOD_SERIES_COEFFICIENT:
        from .series import gf_class

        values = list(gf_class(cls, n_max).coeffs)
    else:
        raise ValueError(f"unknown counting method: {method!r}")
    return CountTable(cls, method, tuple(values))


def render_class_d(p: Partition) -> str:
    """Render a class-D partition in its two-leading-zeros style.

    Distinct parts (or a single part) get the '0+0+' prefix followed by the
    parts in decreasing order; a doubled smallest part is rendered ascending,
    so the repeated pair comes first.
    """
    if not is_in_class(p, PartitionClass.D):
        raise ClassMembershipError(f"{p} is not in class D")
    if not p.parts:
        return "0+0"
    if len(p.parts) == 1 or p.multiplicities()[p.parts[-1]] == 1:
        return "0+0+" + "+".join(str(x) for x in p.parts)
    return "+".join(str(x) for x in reversed(p.parts))
