"""Invertible maps between the partition classes.

Glaisher's split/merge pair connects distinct parts (A) with odd parts (B);
a decrement of the largest part followed by the split carries C down to B,
with an explicit inverse; decrementing one copy of the smallest part carries
D down to A with fibers of size exactly two.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .partitions import (
    ClassMembershipError,
    Partition,
    PartitionClass,
    is_in_class,
    normalize,
)


def _split_power_of_two(value: int) -> tuple[int, int]:
    """value = base * 2**power with base odd; returns (base, power)."""
    power = (value & -value).bit_length() - 1
    return value >> power, power


@dataclass(frozen=True)
class EvenPartFactorization:
    """A part value base * 2**power occurring `multiplicity` times.

    digits holds the binary expansion of the multiplicity, least significant
    first; it drives the merge direction of Glaisher's map.
    """

    base: int
    power: int
    multiplicity: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.base < 1 or self.base % 2 == 0:
            raise ValueError("base must be a positive odd integer")
        if self.power < 0:
            raise ValueError("power must be non-negative")
        if self.multiplicity < 1:
            raise ValueError("multiplicity must be positive")
        if sum(d << j for j, d in enumerate(self.digits)) != self.multiplicity:
            raise ValueError("digits are not the binary expansion of the multiplicity")

    @classmethod
    def of(cls, part: int, multiplicity: int) -> "EvenPartFactorization":
        base, power = _split_power_of_two(part)
        digits = tuple((multiplicity >> j) & 1 for j in range(multiplicity.bit_length()))
        return cls(base, power, multiplicity, digits)

    def odd_copies(self) -> int:
        """How many copies of `base` the full split produces."""
        return self.multiplicity << self.power

    def merged_distinct_parts(self) -> list[int]:
        """The distinct parts base * 2**(power+j), one per set digit."""
        return [self.base << (self.power + j) for j, d in enumerate(self.digits) if d]


def glaisher_to_odd(p: Partition) -> Partition:
    """Split every even part 2**k * a into 2**k copies of the odd part a.

    Accepts any partition; odd parts pass through untouched, so repeated odd
    parts in the input are fine.
    """
    out: list[int] = []
    for part, mult in p.multiplicities().items():
        fac = EvenPartFactorization.of(part, mult)
        out.extend([fac.base] * fac.odd_copies())
    return normalize(out)


def glaisher_to_distinct(p: Partition) -> Partition:
    """Merge repeated odd parts into distinct parts.

    An odd part a of multiplicity f becomes one part a * 2**j per set bit of
    f; the result has all parts distinct and the same weight.
    """
    out: list[int] = []
    for part, mult in p.multiplicities().items():
        if part % 2 == 0:
            raise ClassMembershipError(f"part {part} is even; expected odd parts only")
        out.extend(EvenPartFactorization.of(part, mult).merged_distinct_parts())
    return normalize(out)


class ReductionCase(Enum):
    """Which shape the class-D partition had before its smallest part lost 1."""

    SINGLE_PART = "single_part"
    SMALLEST_ABOVE_ONE = "smallest_above_one"
    SMALLEST_EQUALS_ONE = "smallest_equals_one"


_CASE_NUMBER = {
    ReductionCase.SINGLE_PART: 1,
    ReductionCase.SMALLEST_ABOVE_ONE: 2,
    ReductionCase.SMALLEST_EQUALS_ONE: 3,
}


@dataclass(frozen=True)
class ReductionTag:
    """Branch record of the two-to-one reduction from class D."""

    case: ReductionCase

    @property
    def bit(self) -> int:
        """Lift-branch selector: 1 exactly when the smallest part was 1."""
        return 1 if self.case is ReductionCase.SMALLEST_EQUALS_ONE else 0

    @property
    def case_number(self) -> int:
        return _CASE_NUMBER[self.case]


def d_reduce(p: Partition) -> tuple[Partition, ReductionTag]:
    """Subtract 1 from one copy of the smallest part of a class-D partition.

    The result has distinct parts and weight one less; the tag records which
    of the three shapes applied, and its bit selects the inverse branch.
    """
    if not is_in_class(p, PartitionClass.D):
        raise ClassMembershipError(f"{p} is not in class D")
    if p.weight < 2:
        raise ValueError("reduction needs weight at least 2")
    smallest = p.parts[-1]
    if len(p.parts) == 1:
        case = ReductionCase.SINGLE_PART
    elif smallest > 1:
        case = ReductionCase.SMALLEST_ABOVE_ONE
    else:
        case = ReductionCase.SMALLEST_EQUALS_ONE
    reduced = p.parts[:-1] + ((smallest - 1,) if smallest > 1 else ())
    return normalize(reduced), ReductionTag(case)


def d_lift(mu: Partition, bit: int) -> Partition:
    """Invert d_reduce: bit 0 bumps the smallest part, bit 1 appends a 1.

    Both branches land in class D with weight one more, and the branches are
    disjoint (bit 0 gives smallest part >= 2, bit 1 gives smallest part 1).
    """
    if bit not in (0, 1):
        raise ValueError("bit must be 0 or 1")
    if not mu.parts:
        raise ClassMembershipError("cannot lift the empty partition")
    if not is_in_class(mu, PartitionClass.A):
        raise ClassMembershipError(f"{mu} does not have distinct parts")
    if bit == 1:
        return normalize(mu.parts + (1,))
    return normalize(mu.parts[:-1] + (mu.parts[-1] + 1,))


def c_to_b(p: Partition) -> Partition:
    """Send a class-C partition to odd parts, dropping its weight by 1.

    One copy of the even largest part 2N becomes 2N-1, then every remaining
    even part is split down to odd parts; the image's largest part is 2N-1.
    """
    if not is_in_class(p, PartitionClass.C):
        raise ClassMembershipError(f"{p} is not in class C")
    largest = p.parts[0]
    decremented = list(p.parts)
    decremented.remove(largest)
    decremented.append(largest - 1)
    return glaisher_to_odd(normalize(decremented))


def b_to_c(p: Partition) -> Partition:
    """Invert c_to_b on odd-part partitions, raising the weight by 1.

    With 2N-1 the largest part, one copy of it is restored to 2N.  Every
    remaining odd value a regroups by the unique power 2**k with
    N < a * 2**k <= 2N: multiplicity t = u * 2**k + r puts u copies at
    a * 2**k (free to repeat above N) and scatters r over distinct parts
    a * 2**j with j < k (all at most N).
    """
    if not p.parts:
        raise ClassMembershipError("the empty partition has no largest part to restore")
    if not is_in_class(p, PartitionClass.B):
        raise ClassMembershipError(f"{p} is not in class B")
    target_max = p.parts[0] + 1
    counts = p.multiplicities()
    counts[p.parts[0]] -= 1
    out = [target_max]
    for base, mult in counts.items():
        if mult <= 0:
            continue
        k = 0
        while base << (k + 1) <= target_max:
            k += 1
        copies, rest = divmod(mult, 1 << k)
        out.extend([base << k] * copies)
        j = 0
        while rest:
            if rest & 1:
                out.append(base << j)
            rest >>= 1
            j += 1
    return normalize(out)
