"""Partitions, sign vectors, Bernoulli orthogonal complements, and r_lambda.

A partition lambda with k parts is used as a weight vector for signed
sums lambda . x with x in {-1,+1}^k.  The set of sign vectors with zero
weighted sum is the Bernoulli orthogonal complement of lambda; half of
it (the vectors starting with +1) forms the columns of the sign matrix
A, and its relative size is the dyadic probability r_lambda.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from ntl.errors import InfeasibleSizeError, NotFairlyDivisibleError

MAX_PARTS = 32
MAX_PART = 1 << 16

# largest normalized complement we are willing to hold in memory
COMPLEMENT_LIMIT = 1 << 22


@dataclass(frozen=True, order=True)
class Partition:
    """Nonincreasing tuple of positive integer parts."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("partition needs at least one part")
        if len(parts) > MAX_PARTS:
            raise ValueError("at most %d parts supported" % MAX_PARTS)
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError("parts must be nonincreasing")
        if parts[-1] < 1:
            raise ValueError("parts must be positive")
        if parts[0] > MAX_PART:
            raise ValueError("parts larger than %d not supported" % MAX_PART)

    @classmethod
    def from_string(cls, text):
        """Parse '2,2,1,1' or the compact single-digit form '2211'."""
        text = text.strip()
        if "," in text:
            parts = tuple(int(tok) for tok in text.split(","))
        else:
            if not text.isdigit():
                raise ValueError("cannot parse partition %r" % text)
            parts = tuple(int(ch) for ch in text)
        return cls(parts)

    @property
    def k(self):
        return len(self.parts)

    @property
    def gcd(self):
        return math.gcd(*self.parts)

    @property
    def total(self):
        return sum(self.parts)

    def multiplicities(self):
        """Map from part size to its multiplicity c(i)."""
        out = {}
        for x in self.parts:
            out[x] = out.get(x, 0) + 1
        return out

    def __str__(self):
        return ",".join(str(x) for x in self.parts)


@dataclass(frozen=True)
class SignVector:
    """Element of {-1,+1}^k; bit i of mask set means coordinate i is -1."""

    k: int
    mask: int

    @classmethod
    def from_signs(cls, signs):
        mask = 0
        for i, s in enumerate(signs):
            if s == -1:
                mask |= 1 << i
            elif s != 1:
                raise ValueError("signs must be +-1")
        return cls(len(tuple(signs)), mask)

    @property
    def signs(self):
        return tuple(-1 if self.mask >> i & 1 else 1 for i in range(self.k))

    @property
    def normalized(self):
        return not self.mask & 1

    def __neg__(self):
        return SignVector(self.k, self.mask ^ ((1 << self.k) - 1))

    def __str__(self):
        return "".join("-" if self.mask >> i & 1 else "+" for i in range(self.k))


@dataclass(frozen=True)
class DyadicProbability:
    """Exact probability numerator / 2^exponent."""

    numerator: int
    exponent: int

    def __post_init__(self):
        if self.numerator < 0 or self.numerator > (1 << self.exponent):
            raise ValueError("numerator out of range")

    @property
    def fraction(self):
        return Fraction(self.numerator, 1 << self.exponent)

    def decimal(self):
        """Exact finite decimal rendering (dyadic rationals terminate)."""
        f = self.fraction
        if f.denominator == 1:
            return str(f.numerator)
        e = f.denominator.bit_length() - 1
        digits = str(f.numerator * 5 ** e).rjust(e + 1, "0")
        return (digits[:-e] + "." + digits[-e:]).rstrip("0").rstrip(".")

    def __str__(self):
        f = self.fraction
        return "%d/%d" % (f.numerator, f.denominator)

    def __eq__(self, other):
        if isinstance(other, DyadicProbability):
            return self.fraction == other.fraction
        return self.fraction == other

    def __lt__(self, other):
        other = other.fraction if isinstance(other, DyadicProbability) else other
        return self.fraction < other

    def __le__(self, other):
        other = other.fraction if isinstance(other, DyadicProbability) else other
        return self.fraction <= other

    def __hash__(self):
        return hash(self.fraction)


@dataclass(frozen=True)
class Complement:
    """Normalized half of the Bernoulli orthogonal complement of a partition.

    vectors holds the solutions of lambda . x = 0 with first coordinate
    +1 in lexicographic order (+ before -); the full complement has size
    2p by closure under negation.
    """

    partition: Partition
    vectors: tuple

    @property
    def k(self):
        return self.partition.k

    @property
    def p(self):
        return len(self.vectors)

    @property
    def size(self):
        return 2 * len(self.vectors)

    def full(self):
        """Yield all 2p elements of the complement as sign tuples."""
        for v in self.vectors:
            yield v.signs
        for v in self.vectors:
            yield (-v).signs


def iter_complement_signs(parts):
    """Yield normalized complement elements of `parts` as sign tuples.

    Depth-first search in lexicographic order with + before -, first
    coordinate fixed to +1.  A branch is pruned when the partial sum
    cannot be cancelled by the remaining parts.
    """
    k = len(parts)
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] + parts[i]
    signs = [1] * k

    def rec(i, acc):
        if i == k:
            if acc == 0:
                yield tuple(signs)
            return
        rest = suffix[i + 1]
        for s in (1, -1) if i else (1,):
            nxt = acc + s * parts[i]
            if abs(nxt) <= rest:
                signs[i] = s
                yield from rec(i + 1, nxt)

    yield from rec(0, 0)


def _signed_sum_counts(parts):
    """Subset-sum DP: map from achievable signed sum to its count."""
    counts = {0: 1}
    for x in parts:
        nxt = {}
        for s, c in counts.items():
            for t in (s + x, s - x):
                nxt[t] = nxt.get(t, 0) + c
        counts = nxt
    return counts


def r_lambda(p):
    """Exact r = P(lambda . X = 0) as a dyadic probability.

    Computed by dynamic programming over achievable signed sums, never
    by complement enumeration, so it is cheap even for k = 28.
    """
    counts = _signed_sum_counts(p.parts)
    return DyadicProbability(counts.get(0, 0), p.k)


def complement_size(p):
    """|lambda^perpB| without materializing the complement."""
    return r_lambda(p).numerator


def complement(p):
    """Materialize the normalized complement of partition p."""
    size = complement_size(p)
    if size // 2 > COMPLEMENT_LIMIT:
        raise InfeasibleSizeError(
            "complement of %s has %d elements; limit is %d"
            % (p, size, 2 * COMPLEMENT_LIMIT))
    vectors = tuple(SignVector.from_signs(s) for s in iter_complement_signs(p.parts))
    return Complement(p, vectors)


def a_matrix(p):
    """Sign matrix with k rows whose columns are the normalized complement."""
    comp = p if isinstance(p, Complement) else complement(p)
    if comp.p == 0:
        raise NotFairlyDivisibleError("%s is not fairly divisible" % comp.partition)
    cols = [v.signs for v in comp.vectors]
    return tuple(zip(*cols))


def count_template_vectors(p, n):
    """|V_lambda^(n)| = 2^(k-1) (n)_k / prod c(i)!, exactly."""
    k = p.k
    if n < k:
        raise ValueError("dimension n=%d smaller than partition length %d" % (n, k))
    orderings = math.factorial(k)
    for c in p.multiplicities().values():
        orderings //= math.factorial(c)
    return (1 << (k - 1)) * math.comb(n, k) * orderings


def _distinct_permutations(items):
    """All distinct orderings of a multiset, in lexicographic order."""
    seq = sorted(items)
    n = len(seq)
    while True:
        yield tuple(seq)
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])


def template_vectors(p, n):
    """Yield every vector in Z^n with template p (first nonzero positive)."""
    k = p.k
    if n < k:
        raise ValueError("dimension n=%d smaller than partition length %d" % (n, k))
    for positions in itertools.combinations(range(n), k):
        for values in _distinct_permutations(p.parts):
            # first placed entry stays positive; remaining signs free
            for mask in range(1 << (k - 1)):
                vec = [0] * n
                vec[positions[0]] = values[0]
                for i in range(1, k):
                    s = -1 if mask >> (i - 1) & 1 else 1
                    vec[positions[i]] = s * values[i]
                yield tuple(vec)
