"""Independent brute-force oracle used by the tests.

Deliberately shares no code with the package: partitions are generated by a
different recursion and the class predicates are re-derived from the
definitions, so agreement with eulerlab is a two-route check.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator


def all_partitions(n: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every partition of n as a non-increasing tuple (ascending recursion)."""
    if cap is None:
        cap = n
    if n == 0:
        yield ()
        return
    for largest in range(min(cap, n), 0, -1):
        for rest in all_partitions(n - largest, largest):
            yield (largest,) + rest


def in_class_a(parts: tuple[int, ...]) -> bool:
    return len(set(parts)) == len(parts)


def in_class_b(parts: tuple[int, ...]) -> bool:
    return all(p % 2 == 1 for p in parts)


def in_class_c(parts: tuple[int, ...]) -> bool:
    if not parts:
        return False
    if max(parts) % 2 == 1:
        return False
    half = max(parts) // 2
    low = [p for p in parts if p <= half]
    return len(low) == len(set(low))


def in_class_d(parts: tuple[int, ...]) -> bool:
    # Two leading zeros allowed: the smallest entry occurs exactly twice and
    # nothing else repeats.  On the positive parts that means: at most one
    # part repeats, it must be the minimum, and at most twice.
    if len(parts) <= 1:
        return True
    counts = Counter(parts)
    smallest = min(parts)
    if counts[smallest] > 2:
        return False
    return all(c == 1 for v, c in counts.items() if v != smallest)


PREDICATES = {"A": in_class_a, "B": in_class_b, "C": in_class_c, "D": in_class_d}


def brute_members(n: int, label: str) -> list[tuple[int, ...]]:
    pred = PREDICATES[label]
    return [p for p in all_partitions(n) if pred(p)]


def brute_count(n: int, label: str) -> int:
    return len(brute_members(n, label))
