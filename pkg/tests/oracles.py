"""Independent reference implementations used only by the test suite.

Everything here is deliberately written by a different route than the
library code it checks: recursive placement instead of growth strings,
recurrences instead of closed forms, permutation filters instead of
formulas.  Slow is fine; these run at small sizes.
"""

import itertools
import math
from fractions import Fraction


def partitions_by_placement(elements):
    """All partitions of the given elements, as frozensets of frozensets.

    Recursive placement: the first element joins each existing block in
    turn or starts a new one.  Independent of any word encoding.
    """
    elems = list(elements)
    if not elems:
        return [frozenset()]
    first, rest = elems[0], elems[1:]
    out = []
    for sub in partitions_by_placement(rest):
        blocks = sorted(sub, key=min)
        for i in range(len(blocks)):
            grown = list(blocks)
            grown[i] = blocks[i] | {first}
            out.append(frozenset(grown))
        out.append(frozenset(list(blocks) + [frozenset([first])]))
    return out


def bell_by_placement(n):
    return len(partitions_by_placement(range(1, n + 1)))


def catalan_by_recurrence(n):
    """Catalan numbers via the convolution c_{m+1} = sum c_i c_{m-i}."""
    c = [1]
    for m in range(n):
        c.append(sum(c[i] * c[m - i] for i in range(m + 1)))
    return c[n]


def stirling2_by_recurrence(n, r):
    """Partitions of [n] into exactly r blocks, via the standard recurrence."""
    if n == 0:
        return 1 if r == 0 else 0
    if r <= 0 or r > n:
        return 0
    return r * stirling2_by_recurrence(n - 1, r) + stirling2_by_recurrence(
        n - 1, r - 1
    )


def derangements_by_bruteforce(n):
    """Count fixed-point-free permutations directly.  Usable up to n = 8."""
    count = 0
    for perm in itertools.permutations(range(n)):
        if all(perm[i] != i for i in range(n)):
            count += 1
    return count


def a000262_by_weighted_count(n):
    """Sum over partitions of [n] of the product of (block size)! per block."""
    total = 0
    for p in partitions_by_placement(range(1, n + 1)):
        prod = 1
        for block in p:
            prod *= math.factorial(len(block))
        total += prod
    return total


def blocks_cross(a, b):
    """True when the two blocks interleave: some x1 < y1 < x2 < y2 with
    x1, x2 in one block and y1, y2 in the other."""
    sides = [s for _, s in sorted(
        [(e, 0) for e in a] + [(e, 1) for e in b]
    )]
    m = len(sides)
    for i in range(m):
        for j in range(i + 1, m):
            if sides[j] == sides[i]:
                continue
            for k in range(j + 1, m):
                if sides[k] != sides[i]:
                    continue
                for l in range(k + 1, m):
                    if sides[l] == sides[j]:
                        return True
    return False


def noncrossing_by_blocks(blocks):
    """Non-crossing test straight from block structure, no word encoding."""
    return all(
        not blocks_cross(a, b)
        for a, b in itertools.combinations(list(blocks), 2)
    )


def exact_binomial(n, k):
    """Binomial via falling-factorial fractions, zero outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return 0
    val = Fraction(1)
    for i in range(k):
        val *= Fraction(n - i, i + 1)
    assert val.denominator == 1
    return val.numerator
