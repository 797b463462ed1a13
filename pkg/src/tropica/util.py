"""Small shared helpers: exact rational formatting, integer partitions,
compositions, and a linear extension counter for small posets.
"""

from fractions import Fraction

from .errors import ArgumentError


def frac_str(value) -> str:
    """Render an exact rational as 'p' or 'p/q' in lowest terms."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_frac(text: str) -> Fraction:
    """Parse the 'p' / 'p/q' format produced by frac_str."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ArgumentError(f"not a rational number: {text!r}") from exc


def partitions_of(n: int, max_part: int | None = None):
    """Yield the partitions of n as weakly decreasing tuples.

    partitions_of(0) yields the empty partition once.
    """
    if n < 0:
        raise ArgumentError("cannot partition a negative integer")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def compositions_of(n: int, length: int):
    """Yield all tuples of `length` nonnegative integers summing to n."""
    if length < 0 or n < 0:
        raise ArgumentError("compositions need nonnegative n and length")
    if length == 0:
        if n == 0:
            yield ()
        return
    if length == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions_of(n - first, length - 1):
            yield (first,) + rest


def linear_extension_count(n: int, relations) -> int:
    """Count linear extensions of a partial order on elements 0..n-1.

    relations is an iterable of pairs (a, b) meaning a must come before b.
    Uses a bitmask dynamic program, so n should stay small (n <= 20).
    """
    if n < 0:
        raise ArgumentError("element count must be nonnegative")
    if n == 0:
        return 1
    preds = [0] * n
    for a, b in relations:
        if not (0 <= a < n and 0 <= b < n):
            raise ArgumentError("relation endpoint out of range")
        preds[b] |= 1 << a
    counts = [0] * (1 << n)
    counts[0] = 1
    for mask in range(1 << n):
        c = counts[mask]
        if c == 0:
            continue
        for v in range(n):
            bit = 1 << v
            if mask & bit:
                continue
            # v may be appended once all its predecessors are placed
            if preds[v] & ~mask:
                continue
            counts[mask | bit] += c
    return counts[(1 << n) - 1]
