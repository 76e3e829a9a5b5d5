"""Partitions, conjugation, hooks, and the diagonal-hook form of self-conjugate partitions.

A partition is a plain tuple of weakly decreasing positive integers; the empty
tuple is the partition of 0.  Row/column indices in the public functions are
1-based, matching the usual matrix labelling of Young-diagram cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import factorial
from typing import Iterator

from .config import DEFAULT_LIMITS, Limits
from .errors import InvalidHooks, NotSelfConjugate, OutOfDiagram, ResourceLimit

Partition = tuple[int, ...]


def check_partition(parts: Partition) -> Partition:
    """Validate weakly decreasing positive parts; returns the tuple unchanged."""
    for k in range(len(parts)):
        if parts[k] < 1:
            raise ValueError(f"parts must be positive, got {parts!r}")
        if k + 1 < len(parts) and parts[k] < parts[k + 1]:
            raise ValueError(f"parts must be weakly decreasing, got {parts!r}")
    return parts


def size(p: Partition) -> int:
    return sum(p)


def conjugate(p: Partition) -> Partition:
    """Transpose the Young diagram: part k of the result counts boxes in column k."""
    if not p:
        return ()
    out = []
    for j in range(1, p[0] + 1):
        out.append(sum(1 for part in p if part >= j))
    return tuple(out)


def is_self_conjugate(p: Partition) -> bool:
    return p == conjugate(p)


@dataclass(frozen=True)
class DiagonalHooks:
    """Strictly decreasing distinct odd integers: the diagonal hook lengths
    h_11 > h_22 > ... of a self-conjugate partition.  Invalid sequences are
    rejected at construction so corrupt data cannot flow further."""

    hooks: tuple[int, ...]

    def __post_init__(self) -> None:
        for k, h in enumerate(self.hooks):
            if h < 1 or h % 2 == 0:
                raise InvalidHooks(f"hooks must be positive odd integers, got {self.hooks!r}")
            if k + 1 < len(self.hooks) and self.hooks[k + 1] >= h:
                raise InvalidHooks(f"hooks must be strictly decreasing, got {self.hooks!r}")

    @property
    def d(self) -> int:
        return len(self.hooks)

    @property
    def total(self) -> int:
        return sum(self.hooks)


def diagonal_length(p: Partition) -> int:
    """Number of diagonal cells (i, i) of the Young diagram."""
    return sum(1 for i, part in enumerate(p, start=1) if part >= i)


def diagonal_hooks(p: Partition) -> DiagonalHooks:
    """Diagonal hook lengths of a self-conjugate partition (its canonical form)."""
    if not is_self_conjugate(p):
        raise NotSelfConjugate(f"{p!r} is not self-conjugate")
    d = diagonal_length(p)
    # self-conjugate: arm and leg of a diagonal cell agree, h_ii = 2(p_i - i) + 1
    return DiagonalHooks(tuple(2 * (p[i - 1] - i) + 1 for i in range(1, d + 1)))


def from_diagonal_hooks(dh: DiagonalHooks | tuple[int, ...]) -> Partition:
    """The unique self-conjugate partition with the given diagonal hooks."""
    if not isinstance(dh, DiagonalHooks):
        dh = DiagonalHooks(tuple(dh))
    hooks = dh.hooks
    d = len(hooks)
    if d == 0:
        return ()
    parts = [i + (hooks[i - 1] - 1) // 2 for i in range(1, d + 1)]
    # rows below the diagonal mirror the columns above it
    for j in range(d + 1, parts[0] + 1):
        parts.append(sum(1 for i in range(d) if parts[i] >= j))
    return tuple(parts)


def hook_length(p: Partition, i: int, j: int) -> int:
    """Hook length of cell (i, j): arm + leg + 1."""
    if i < 1 or i > len(p) or j < 1 or j > p[i - 1]:
        raise OutOfDiagram(f"({i}, {j}) is not a cell of {p!r}")
    arm = p[i - 1] - j
    leg = sum(1 for part in p[i:] if part >= j)
    return arm + leg + 1


def hook_grid(p: Partition) -> tuple[tuple[int, ...], ...]:
    """All hook lengths, row by row."""
    conj = conjugate(p)
    return tuple(
        tuple((p[i] - 1 - j) + (conj[j] - 1 - i) + 1 for j in range(p[i]))
        for i in range(len(p))
    )


def is_t_core(p: Partition, t: int) -> bool:
    """True iff no cell of p has hook length exactly t."""
    if t < 1:
        raise ValueError("t must be positive")
    conj = conjugate(p)
    for i in range(len(p)):
        # hook lengths decrease strictly along a row; test the cells directly
        for j in range(p[i]):
            if (p[i] - 1 - j) + (conj[j] - 1 - i) + 1 == t:
                return False
    return True


def hook_multiset(p: Partition) -> list[int]:
    return [h for row in hook_grid(p) for h in row]


def character_degree(p: Partition) -> int:
    """n! divided by the product of all hook lengths (always an exact division)."""
    prod = 1
    for h in hook_multiset(p):
        prod *= h
    deg, rem = divmod(factorial(size(p)), prod)
    if rem:
        raise ArithmeticError(f"hook product does not divide n! for {p!r}")
    return deg


def descending_odd_sequences(n: int, max_first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing sequences of distinct odd positive integers summing to n."""
    if max_first is None:
        max_first = n
    if n == 0:
        yield ()
        return
    first = min(max_first, n)
    if first % 2 == 0:
        first -= 1
    while first >= 1:
        if first == n:
            yield (first,)
        else:
            for rest in descending_odd_sequences(n - first, first - 2):
                yield (first,) + rest
        first -= 2


def enumerate_self_conjugate(n: int, limits: Limits = DEFAULT_LIMITS) -> list[Partition]:
    """All self-conjugate partitions of n, via the distinct-odd-parts bijection."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > limits.oracle_cap:
        raise ResourceLimit(f"n={n} exceeds oracle cap {limits.oracle_cap}")
    found = [from_diagonal_hooks(DiagonalHooks(seq)) for seq in descending_odd_sequences(n)]
    return sorted(found)


def enumerate_self_conjugate_t_core(n: int, t: int, limits: Limits = DEFAULT_LIMITS) -> list[Partition]:
    """Self-conjugate t-core partitions of n."""
    return [p for p in enumerate_self_conjugate(n, limits) if is_t_core(p, t)]


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n (plain enumeration; used as a brute-force oracle)."""
    if n < 0:
        return ()
    if n == 0:
        return ((),)

    def gen(remaining: int, largest: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(largest, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(n, n))
