"""Anticoncentration bounds and ranked tables of novel partitions.

elo_bound is the central-binomial cap on complement sizes;
erdos_interval_bound generalizes it to wider target intervals; the
ranked table reproduces the catalog of novel partitions sorted by
r_lambda; runner_up_scan gathers bounded evidence for the runners-up
conjecture.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from ntl import catalog
from ntl.core import DyadicProbability, Partition, r_lambda
from ntl.novelty import is_novel

CATALOG_MAX_LEN = 28


def elo_bound(k):
    """Central binomial coefficient C(k, floor(k/2))."""
    if k < 1:
        raise ValueError("k must be positive")
    return math.comb(k, k // 2)


def erdos_interval_bound(k, r):
    """Sum of the r largest binomial coefficients of k.

    The not-all-equal complement bound is this with (k-2, 4).
    """
    if k < 0 or r < 1:
        raise ValueError("need k >= 0 and r >= 1")
    coeffs = sorted((math.comb(k, i) for i in range(k + 1)), reverse=True)
    return sum(coeffs[:r])


@dataclass(frozen=True)
class RankedRow:
    index: int
    partition: Partition
    length: int
    r: DyadicProbability
    scaled: str          # exact decimal rendering of 256 * r
    provenance: str      # "proved" for lengths <= 7, else "conjectured"


def _small_part_partitions(max_part, max_len):
    """All partitions with parts <= max_part and length <= max_len."""
    def rec(prefix, largest, remaining):
        for x in range(largest, 0, -1):
            cur = prefix + (x,)
            yield cur
            if remaining > 1:
                yield from rec(cur, x, remaining - 1)

    yield from rec((), max_part, max_len)


def catalog_novel(max_len=CATALOG_MAX_LEN, r_min=None, extra_lengths_le7=None):
    """Known novel partitions up to max_len as a sorted list of parts tuples.

    Combines the proved lists for lengths <= 7, the conjectured length-8
    list, and the small-part family (parts <= 3) filtered by is_novel for
    lengths 9..max_len.  r_min, when given, prunes the streaming novelty
    checks to candidates that can still reach the threshold.
    """
    found = set()
    source = dict(catalog.NOVEL_BY_LENGTH)
    if extra_lengths_le7:
        source.update(extra_lengths_le7)
    for k, rows in source.items():
        if k <= max_len:
            found.update(rows)
    if max_len >= 8:
        found.update(parts for parts, _ in catalog.LENGTH8)
    for parts in _small_part_partitions(3, max_len):
        if len(parts) < 9 or parts in found:
            continue
        p = Partition(parts)
        if p.gcd != 1:
            continue
        r = r_lambda(p)
        if r_min is not None and r.fraction < r_min:
            continue
        if is_novel(p).novel:
            found.add(parts)
    return sorted(found)


def _exact_decimal_256(fr):
    """Exact decimal string of 256 * fr for a dyadic fraction fr."""
    v = 256 * fr
    if v.denominator == 1:
        return str(v.numerator)
    e = v.denominator.bit_length() - 1
    digits = str(v.numerator * 5 ** e).rjust(e + 1, "0")
    return (digits[:-e] + "." + digits[-e:]).rstrip("0").rstrip(".")


def ranked_table(r_min, max_len=CATALOG_MAX_LEN, candidates=None):
    """Novel partitions with r >= r_min ranked by decreasing r.

    Ties are broken by length ascending, then by sum of parts ascending,
    then lexicographically ascending (the sum tie-break is needed to
    reproduce the reference ordering of equal-r, equal-length rows).
    """
    r_min = Fraction(r_min)
    if candidates is None:
        candidates = catalog_novel(max_len=max_len, r_min=r_min)
    rows = []
    for parts in set(candidates):
        p = parts if isinstance(parts, Partition) else Partition(parts)
        if p.k > max_len:
            continue
        r = r_lambda(p)
        if r.fraction >= r_min:
            rows.append((p, r))
    rows.sort(key=lambda t: (-t[1].fraction, t[0].k, t[0].total, t[0].parts))
    out = []
    for i, (p, r) in enumerate(rows, 1):
        prov = "proved" if p.k <= 7 else "conjectured"
        out.append(RankedRow(i, p, p.k, r, _exact_decimal_256(r.fraction), prov))
    return out


def runner_up_scan(k, part_bound):
    """Top two r values among gcd-1 partitions with exactly k parts.

    Returns a report dict; the conjecture flags are bounded evidence
    only (the search space is restricted to parts <= part_bound).
    """
    if k > 10 or part_bound > 6:
        raise ValueError("scan restricted to k <= 10 and parts <= 6")
    best = {}
    for parts in itertools.combinations_with_replacement(range(part_bound, 0, -1), k):
        p = Partition(parts)
        if p.gcd != 1:
            continue
        f = r_lambda(p).fraction
        if f > 0:
            best.setdefault(f, []).append(parts)
    ranked = sorted(best.items(), key=lambda t: -t[0])
    top = [{"r": v, "partitions": sorted(ps)} for v, ps in ranked[:2]]
    report = {
        "k": k,
        "part_bound": part_bound,
        "top": top,
        "note": "bounded evidence only: parts <= %d" % part_bound,
    }
    if k >= 4 and k % 2 == 0:
        expect_w = tuple([1] * k)
        expect_r = tuple([2, 2] + [1] * (k - 2))
        report["winner_ok"] = bool(top) and top[0]["partitions"] == [expect_w]
        report["runner_up_ok"] = len(top) > 1 and top[1]["partitions"] == [expect_r]
    elif k >= 7 and k % 2 == 1:
        expect_w = tuple([2] + [1] * (k - 1))
        expect_r = tuple([2, 2, 2] + [1] * (k - 3))
        report["winner_ok"] = bool(top) and top[0]["partitions"] == [expect_w]
        report["runner_up_ok"] = len(top) > 1 and top[1]["partitions"] == [expect_r]
    return report
