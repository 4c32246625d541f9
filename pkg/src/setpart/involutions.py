"""Executable pairings behind the counting identities.

The central object is the signed carrier: pairs (S, p) where S is a subset
of {1..j} and p partitions the remaining elements of {1..n+1}, signed by
(-1)^|S|.  A sign-reversing involution toggles the largest marked-or-
singleton element of {1..j} between the two roles; its fixed points are the
partitions with no singleton inside {1..j}, and a separate explicit
bijection recounts those.  The same toggle, weighted by block sizes,
proves the polynomial identity; singleton-gathering maps prove the
specialized ones.
"""

from __future__ import annotations

from bisect import insort
from typing import Iterator, NamedTuple, Optional, Tuple, Union

from .bellpoly import BellPolynomial, Monomial, complete_bell_by_sum
from .errors import (
    IndexOutOfRange,
    MalformedInput,
    PreconditionViolated,
    SizeTooLarge,
)
from .numbers import binomial
from .partitions import GroundSet, SetPartition, enumerate_partitions

CARRIER_CEILING = 10
SYMBOLIC_CEILING = 7


class FixedPoint:
    """Sentinel returned by the involution on its fixed set."""

    _only = None

    def __new__(cls):
        if cls._only is None:
            cls._only = super().__new__(cls)
        return cls._only

    def __repr__(self):
        return "FIXED"


FIXED = FixedPoint()


class SignedPair:
    """A subset S of {1..j} plus a partition of {1..n+1} minus S.

    The sign is (-1)^|S|, derived rather than stored.
    """

    __slots__ = ("n", "j", "S", "pi")

    def __init__(self, n: int, j: int, S, pi: SetPartition):
        if not 0 <= j <= n:
            raise IndexOutOfRange("need 0 <= j <= n")
        s = frozenset(S)
        if any(not 1 <= e <= j for e in s):
            raise MalformedInput("marked elements must lie in {1..%d}" % j)
        expected = tuple(e for e in range(1, n + 2) if e not in s)
        if pi.ground.elements != expected:
            raise MalformedInput(
                "partition ground must be {1..%d} minus the marked set" % (n + 1)
            )
        self.n = n
        self.j = j
        self.S = s
        self.pi = pi

    @classmethod
    def _trusted(cls, n, j, S, pi) -> "SignedPair":
        lam = object.__new__(cls)
        lam.n = n
        lam.j = j
        lam.S = S
        lam.pi = pi
        return lam

    @property
    def sign(self) -> int:
        return -1 if len(self.S) % 2 else 1

    def __eq__(self, other):
        if isinstance(other, SignedPair):
            return (
                self.n == other.n
                and self.j == other.j
                and self.S == other.S
                and self.pi == other.pi
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.j, self.S, self.pi.blocks))

    def __repr__(self):
        return "SignedPair(n=%d, j=%d, S=%s, pi=%s)" % (
            self.n,
            self.j,
            sorted(self.S),
            self.pi.to_text() or "()",
        )


def partner(lam: SignedPair) -> Union[SignedPair, FixedPoint]:
    """Toggle the largest element of {1..j} that is marked or a singleton.

    If the element is marked, it moves into the partition as a new
    singleton block; if it is a singleton block, it becomes marked.  Either
    way the sign flips.  When no element qualifies, the pair is fixed and
    the FIXED sentinel is returned.
    """
    j = lam.j
    pivot = max(lam.S, default=0)
    for b in lam.pi.blocks:
        if len(b) == 1 and pivot < b[0] <= j:
            pivot = b[0]
    if pivot == 0:
        return FIXED
    ground = lam.pi.ground.elements
    if pivot in lam.S:
        new_s = lam.S - {pivot}
        new_ground = list(ground)
        insort(new_ground, pivot)
        blocks = list(lam.pi.blocks)
        lo = 0
        while lo < len(blocks) and blocks[lo][0] < pivot:
            lo += 1
        blocks.insert(lo, (pivot,))
    else:
        new_s = lam.S | {pivot}
        new_ground = [e for e in ground if e != pivot]
        blocks = [b for b in lam.pi.blocks if b != (pivot,)]
    g = GroundSet._trusted(tuple(new_ground))
    pi = SetPartition._trusted(g, tuple(blocks))
    return SignedPair._trusted(lam.n, lam.j, new_s, pi)


def pivot_of(lam: SignedPair) -> Optional[int]:
    """The element the involution would toggle, or None on the fixed set."""
    j = lam.j
    best = max(lam.S, default=0)
    for b in lam.pi.blocks:
        if len(b) == 1 and best < b[0] <= j:
            best = b[0]
    return best or None


def enumerate_carrier(n: int, j: int) -> Iterator[SignedPair]:
    """All signed pairs for the given n and j, in a fixed order.

    Marked subsets come in binary-counter order (element e is marked when
    bit e-1 of the counter is set); partitions of the complement follow
    the standard enumeration order.
    """
    if not 0 <= j <= n:
        raise IndexOutOfRange("need 0 <= j <= n")
    if n > CARRIER_CEILING:
        raise SizeTooLarge("carrier sweeps are capped at n = %d" % CARRIER_CEILING)
    full = range(1, n + 2)
    for mask in range(1 << j):
        s = frozenset(e for e in range(1, j + 1) if mask >> (e - 1) & 1)
        ground = GroundSet(e for e in full if e not in s)
        for pi in enumerate_partitions(ground):
            yield SignedPair._trusted(n, j, s, pi)


def build_singleton_free(n: int, j: int, T, rho: SetPartition) -> SetPartition:
    """Assemble a partition of {1..n+1} with no singleton inside {1..j}.

    T picks elements of {j+1..n} to sit with n+1; the singletons of rho
    lying in {1..j} migrate into that block too, which is what removes
    them.
    """
    t = frozenset(T)
    if any(not j + 1 <= e <= n for e in t):
        raise MalformedInput("T must lie in {%d..%d}" % (j + 1, n))
    expected = tuple(e for e in range(1, n + 1) if e not in t)
    if rho.ground.elements != expected:
        raise MalformedInput("rho must partition {1..%d} minus T" % n)
    migrating = frozenset(
        b[0] for b in rho.blocks if len(b) == 1 and b[0] <= j
    )
    last_block = tuple(sorted(t | migrating | {n + 1}))
    blocks = [b for b in rho.blocks if not (len(b) == 1 and b[0] <= j)]
    lo = 0
    while lo < len(blocks) and blocks[lo][0] < last_block[0]:
        lo += 1
    blocks.insert(lo, last_block)
    return SetPartition(GroundSet.range_n(n + 1), blocks)


def split_singleton_free(
    n: int, j: int, p: SetPartition
) -> Tuple[frozenset, SetPartition]:
    """Invert build_singleton_free.

    Every element of the block of n+1 that is at most j returns to being
    a singleton; the block's elements in {j+1..n} become T; n+1 itself is
    dropped.
    """
    if p.ground.elements != tuple(range(1, n + 2)):
        raise MalformedInput("p must partition {1..%d}" % (n + 1))
    for b in p.blocks:
        if len(b) == 1 and b[0] <= j:
            raise PreconditionViolated(
                "p has the singleton {%d} inside {1..%d}" % (b[0], j)
            )
    anchor = None
    for b in p.blocks:
        if n + 1 in b:
            anchor = b
            break
    t = frozenset(e for e in anchor if j + 1 <= e <= n)
    low = [e for e in anchor if e <= j]
    blocks = [b for b in p.blocks if b is not anchor]
    for e in low:
        lo = 0
        while lo < len(blocks) and blocks[lo][0] < e:
            lo += 1
        blocks.insert(lo, (e,))
    ground = GroundSet(e for e in range(1, n + 1) if e not in t)
    return t, SetPartition._trusted(ground, tuple(blocks))


def gather_singletons(src: SetPartition) -> SetPartition:
    """Send a partition of {1..j} to one of {1..j+1} with no singleton
    in {1..j}: all singletons join a new block with j+1."""
    if not src.ground.is_contiguous():
        raise MalformedInput("source must partition {1..j}")
    j = len(src.ground)
    moving = frozenset(b[0] for b in src.blocks if len(b) == 1)
    blocks = [b for b in src.blocks if len(b) > 1]
    blocks.append(tuple(sorted(moving | {j + 1})))
    return SetPartition(GroundSet.range_n(j + 1), blocks)


def gather_singletons_two(src: SetPartition, j: int) -> SetPartition:
    """Send a partition of {1..j} or of {1..j+1} to one of {1..j+2} with
    no singleton in {1..j}.

    From {1..j}: all singletons join a new block with both j+1 and j+2.
    From {1..j+1}: singletons lying in {1..j} join a new block with j+2
    only.  The two cases are told apart in the image by whether j+1 and
    j+2 share a block.
    """
    if j < 0 or not src.ground.is_contiguous():
        raise MalformedInput("source must partition {1..j} or {1..j+1}")
    size = len(src.ground)
    if size == j:
        moving = frozenset(b[0] for b in src.blocks if len(b) == 1)
        blocks = [b for b in src.blocks if len(b) > 1]
        blocks.append(tuple(sorted(moving | {j + 1, j + 2})))
    elif size == j + 1:
        moving = frozenset(
            b[0] for b in src.blocks if len(b) == 1 and b[0] <= j
        )
        blocks = [
            b for b in src.blocks if not (len(b) == 1 and b[0] <= j)
        ]
        blocks.append(tuple(sorted(moving | {j + 2})))
    else:
        raise MalformedInput(
            "source has %d elements; expected %d or %d" % (size, j, j + 1)
        )
    return SetPartition(GroundSet.range_n(j + 2), blocks)


class ClassLabel(NamedTuple):
    """Membership tag for the telescoping argument's partition classes.

    kind "C" with index m: partitions of {1..j} whose singletons are
    exactly the top run {j-k+1..j} of length k = j-1-m.  kind "D" with
    index m: the same shape with run length j-m.  A partition whose
    singleton set is a nonempty proper top run therefore carries one
    label of each kind, which is the overlap the telescoping sum uses.
    """

    kind: str
    index: int


def classify_cd(p: SetPartition, j: int) -> Tuple[ClassLabel, ...]:
    """The class labels holding p, C label first; empty when p is in
    neither kind of class."""
    if j < 2:
        raise IndexOutOfRange("classes are defined for j >= 2")
    if p.ground.elements != tuple(range(1, j + 1)):
        raise MalformedInput("p must partition {1..%d}" % j)
    singles = set(p.singleton_elements())
    run = 0
    while run < j and (j - run) in singles:
        run += 1
    if len(singles) != run:
        # a singleton below the top run disqualifies both kinds
        return ()
    labels = []
    if run <= j - 2:
        labels.append(ClassLabel("C", j - 1 - run))
    if 1 <= run <= j - 1:
        labels.append(ClassLabel("D", j - run))
    return tuple(labels)


def weight_monomial(lam: SignedPair) -> Monomial:
    """Unsigned block-size weight of a pair: t_1 per marked element and
    per singleton block, t_i per block of size i."""
    counts = {1: len(lam.S)}
    for b in lam.pi.blocks:
        size = len(b)
        counts[size] = counts.get(size, 0) + 1
    return Monomial(counts)


class WeightedSignedPair:
    """A signed pair together with its block-size weight monomial."""

    __slots__ = ("pair", "mono")

    def __init__(self, pair: SignedPair, mono: Optional[Monomial] = None):
        self.pair = pair
        self.mono = mono if mono is not None else weight_monomial(pair)

    @property
    def sign(self) -> int:
        return self.pair.sign

    def __repr__(self):
        return "WeightedSignedPair(%r, %s%s)" % (
            self.pair,
            "-" if self.sign < 0 else "+",
            self.mono.to_text(),
        )


def enumerate_weighted_carrier(n: int, j: int) -> Iterator[WeightedSignedPair]:
    for lam in enumerate_carrier(n, j):
        yield WeightedSignedPair(lam)


def weighted_carrier_sum(n: int, j: int) -> BellPolynomial:
    """Sum of signed weight monomials over the whole carrier."""
    if not 0 <= j <= n:
        raise IndexOutOfRange("need 0 <= j <= n")
    if n > SYMBOLIC_CEILING:
        raise SizeTooLarge(
            "symbolic carrier sweeps are capped at n = %d" % SYMBOLIC_CEILING
        )
    acc = {}
    for wp in enumerate_weighted_carrier(n, j):
        mono = wp.mono
        acc[mono] = acc.get(mono, 0) + wp.sign
    return BellPolynomial(acc)


def weighted_alternating_sum(n: int, j: int) -> BellPolynomial:
    """Sum over i of (-1)^i t_1^i binomial(j, i) B_{n+1-i}, where B_m is
    the complete block-size polynomial."""
    if not 0 <= j <= n:
        raise IndexOutOfRange("need 0 <= j <= n")
    out = BellPolynomial.zero()
    for i in range(j + 1):
        coeff = (-1) ** i * binomial(j, i)
        term = complete_bell_by_sum(n + 1 - i).scaled(
            coeff, Monomial.single(1, i) if i else None
        )
        out = out + term
    return out


def weighted_binomial_sum(n: int, j: int) -> BellPolynomial:
    """Triple sum counting singleton-free-in-{1..j} partitions by weight.

    k elements above j and l at most j join the block of n+1 (one block
    of size k+l+1); the rest avoids singletons in the remaining j-l low
    elements by inclusion-exclusion over r marked ones.
    """
    if not 0 <= j <= n:
        raise IndexOutOfRange("need 0 <= j <= n")
    out = BellPolynomial.zero()
    for k in range(n - j + 1):
        for l in range(j + 1):
            for r in range(j - l + 1):
                coeff = (
                    (-1) ** r
                    * binomial(n - j, k)
                    * binomial(j, l)
                    * binomial(j - l, r)
                )
                if coeff == 0:
                    continue
                mono = Monomial(((1, r), (k + l + 1, 1)))
                term = complete_bell_by_sum(n - k - l - r).scaled(coeff, mono)
                out = out + term
    return out
