"""Inclusion-exclusion expansion terms, moments, and conditional ratios.

Everything is exact rational arithmetic.  The printed moment formulas
are implemented verbatim; their empirical validity range against the
exhaustive oracle is established in the test suite and documented in
the README rather than assumed.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from ntl.core import Partition, complement_size, r_lambda, template_vectors
from ntl.errors import InfeasibleSizeError

RATES = (
    Fraction(1, 2),
    Fraction(3, 8),
    Fraction(5, 16),
    Fraction(35, 128),
    Fraction(1, 4),
    Fraction(63, 256),
    Fraction(15, 64),
    Fraction(231, 1024),
)

# templates whose union makes up the eight-term event
E8_TEMPLATES = (
    (1, 1),
    (1, 1, 1, 1),
    (1, 1, 1, 1, 1, 1),
    (1, 1, 1, 1, 1, 1, 1, 1),
    (2, 1, 1, 1, 1),
    (1,) * 10,
    (2, 1, 1, 1, 1, 1, 1),
    (1,) * 12,
)


@dataclass(frozen=True)
class ExpansionTerm:
    rate: Fraction
    coefficient: int


@dataclass(frozen=True)
class MomentTriple:
    ew: Fraction
    ew2: Fraction
    ew3: Fraction


def q_values(n):
    """The eight polynomial coefficients Q_1(n) .. Q_8(n), exactly."""
    c = lambda m: math.comb(n, m)
    q5 = 32 * 5 * c(5) - 4 * (2 * c(2) ** 2 + 8 * c(4) + 5 * c(3))
    return [
        4 * c(2),
        16 * c(4),
        64 * c(6),
        256 * c(8),
        q5,
        1024 * c(10),
        128 * 7 * c(7),
        4096 * c(12),
    ]


def expansion_terms(n):
    return [ExpansionTerm(rate, q) for rate, q in zip(RATES, q_values(n))]


def e8_estimate(n):
    """Main-term estimate of the eight-template union probability."""
    return sum((Fraction(q) * rate ** n for rate, q in zip(RATES, q_values(n))),
               Fraction(0))


def d11_lower_bound(n):
    """Two-term Bonferroni lower bound on the template-11 event."""
    c2 = math.comb(n, 2)
    return 4 * c2 * Fraction(1, 2) ** n - (12 * c2 ** 2 - 4 * c2) * Fraction(1, 4) ** n


def ie_moments(n):
    """The three printed moment formulas for the template-11 event count W."""
    c2, c3 = math.comb(n, 2), math.comb(n, 3)
    quarter = Fraction(1, 4) ** n
    ew = 4 * c2 * Fraction(1, 2) ** n
    ew2 = (12 * c2 ** 2 - 4 * c2) * quarter
    ew3 = (4 * c3 * quarter
           + Fraction(8, 8 ** n) * (Fraction(13, 3) * c2 ** 3
                                    - 4 * c2 ** 2
                                    - Fraction(2, 3) * c2
                                    - Fraction(1, 3) * c3 * 27
                                    - c2 * math.comb(n - 2, 2)))
    return MomentTriple(ew, ew2, ew3)


def bonferroni_bounds(probs, pairwise, cross=None):
    """(lower, upper) Bonferroni bounds for a union of events.

    probs: the P(A_a); pairwise: the P(A_a and A_b) over unordered pairs
    within the family; cross: optional intersection probabilities with a
    second family, turning the lower bound into the set-difference form.
    """
    upper = sum(probs, Fraction(0))
    lower = upper - sum(pairwise, Fraction(0))
    if cross is not None:
        lower -= sum(cross, Fraction(0))
    return lower, upper


def r11_setminus_l11_lower(n):
    """Printed lower bound on one-sided-only template-11 occurrence."""
    t = Fraction(2 * math.comb(n, 2), 2 ** n)
    g1 = t * t - t * Fraction(2, 2 ** n)
    g2 = 2 * t * t
    lower, _ = bonferroni_bounds([t], [g1], [g2])
    return lower


def _pair_zero_probability(profile, m):
    """P(v.X = 0 and w.X = 0) for coordinate weight pairs `profile`."""
    counts = {(0, 0): 1}
    for a, b in profile:
        nxt = {}
        for (s1, s2), c in counts.items():
            for sg in (1, -1):
                key = (s1 + sg * a, s2 + sg * b)
                nxt[key] = nxt.get(key, 0) + c
        counts = nxt
    return Fraction(counts.get((0, 0), 0), 2 ** m)


def _alignment_profiles(la, mu):
    """Distinct coordinate weight profiles of (v, w) alignments.

    The intersection probability depends only on the multiset of
    coordinate weight pairs (v_i, w_i): coordinates permute freely, and
    flipping X_i absorbs the sign of w_i wherever v_i = 0.  Each profile
    is a sorted tuple of (a, b) pairs with a over la's parts (0 off la's
    support) and b the signed mu part placed there (0 if none).
    """
    la_groups = sorted(la.multiplicities().items())
    mu_groups = sorted(mu.multiplicities().items())
    slots = [(g, s) for g in range(len(la_groups)) for s in (1, -1)]

    def splits(count, caps):
        if not caps:
            yield ()
            return
        for take in range(min(count, caps[0]) + 1):
            for rest in splits(count - take, caps[1:]):
                yield (take,) + rest

    profiles = set()

    def walk(gi, used, acc):
        if gi == len(mu_groups):
            prof = list(acc)
            for g, (value, cnt) in enumerate(la_groups):
                prof.extend([(value, 0)] * (cnt - used[g]))
            profiles.add(tuple(sorted(prof)))
            return
        value, count = mu_groups[gi]
        # same-group +/- slots share the la group's capacity
        caps = []
        for g, _ in slots:
            caps.append(la_groups[g][1] - used[g])
        for dist in splits(count, caps):
            nxt = list(used)
            ok = True
            add = []
            for (g, s), take in zip(slots, dist):
                if take:
                    nxt[g] += take
                    if nxt[g] > la_groups[g][1]:
                        ok = False
                        break
                    add.extend([(la_groups[g][0], s * value)] * take)
            if not ok:
                continue
            off = count - sum(dist)
            walk(gi + 1, tuple(nxt), acc + add + [(0, value)] * off)

    walk(0, (0,) * len(la_groups), [])
    return profiles


def pair_intersection_check(la, mu):
    """Verify P(v.X = w.X = 0) <= max(r_la, r_mu)/2 over all alignments.

    v is fixed as la's parts on the first coordinates (any other support
    or signs for v is equivalent by permuting and flipping coordinates);
    w ranges over all placements, orderings and signs of mu on a common
    support of size at most len(la)+len(mu).  Alignments sharing a
    coordinate weight profile have equal probability and are computed
    once, exactly.
    """
    if la.parts == mu.parts:
        raise ValueError("templates must be distinct")
    j, k = la.k, mu.k
    if j + k > 16:
        raise InfeasibleSizeError("combined support %d too large" % (j + k))
    bound = max(r_lambda(la).fraction, r_lambda(mu).fraction) / 2
    best = Fraction(0)
    profiles = _alignment_profiles(la, mu)
    for profile in profiles:
        p = _pair_zero_probability(profile, len(profile))
        if p > best:
            best = p
    return {
        "max_probability": best,
        "bound": bound,
        "ok": best <= bound,
        "max_ratio": best / bound if bound else Fraction(0),
        "pairs_checked": len(profiles),
    }


def _falling(p, n):
    out = 1
    for i in range(n):
        out *= p - i
        if out == 0:
            return 0
    return out


def conditional_ratio_r11(la, n):
    """(p)_n / p^n for a novel partition with k = n parts."""
    if la.k != n:
        raise ValueError("this ratio requires len(la) = n")
    p = complement_size(la) // 2
    if p < 1:
        raise ValueError("partition is not fairly divisible")
    return Fraction(_falling(p, n), p ** n)


def conditional_ratio_r11_r1111(la, n):
    """(p)_n/p^n + (1/2p) C(n,2) (p)_{n-1}/p^{n-1} for k = n-1 parts."""
    if la.k != n - 1:
        raise ValueError("this ratio requires len(la) = n - 1")
    p = complement_size(la) // 2
    if p < 1:
        raise ValueError("partition is not fairly divisible")
    return (Fraction(_falling(p, n), p ** n)
            + Fraction(math.comb(n, 2), 2 * p) * Fraction(_falling(p, n - 1), p ** (n - 1)))


def lemma_trivial(n):
    """Check (C(n,2)^2 - C(n,2))/2 = 3 C(n,4) + 3 C(n,3)."""
    c2 = math.comb(n, 2)
    return Fraction(c2 * c2 - c2, 2) == 3 * math.comb(n, 4) + 3 * math.comb(n, 3)
