"""Ground-truth engines over random and exhaustively enumerated sign matrices.

Exhaustive enumeration is symmetry-reduced: flipping row and column
signs acts freely on sign matrices modulo the global flip, so each
matrix with all-plus first row and first column represents an orbit of
2^(2n-1) matrices, and singularity, the template-11 event count W, and
kernel templates are orbit invariants.  All singularity decisions use
fraction-free integer elimination (vectorized Bareiss); probabilities
are exact fractions.
"""

import itertools
import math
import multiprocessing
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ntl import linalg
from ntl.errors import InfeasibleSizeError
from ntl.expansion import E8_TEMPLATES
from ntl.novelty import _cofactor_kernels

EXACT_MAX_N = 6
SHARD = 1 << 16
GENERATOR_SPEC = {
    "bit_generator": "numpy Philox (4x64 counter-based)",
    "seeding": "SeedSequence(entropy=[seed, shard_index])",
    "shard_size": SHARD,
    "sample": "entries 1 - 2*b, b ~ integers(0, 2) row-major per matrix",
}


@dataclass
class SurveyReport:
    n: int
    samples: int
    seed: int
    singular: int
    histogram: dict
    generator: dict = field(default_factory=lambda: dict(GENERATOR_SPEC))

    @property
    def corank2_plus(self):
        return self.histogram.get("corank>=2", 0)


def _batched_singular_mask(mats):
    """Boolean singularity mask for an int64 batch of square matrices.

    Vectorized Bareiss (fraction-free) elimination with row swaps; the
    division step is exact for every batch member that has not already
    been flagged singular.
    """
    a = mats.astype(np.int64).copy()
    b, n, _ = a.shape
    sing = np.zeros(b, dtype=bool)
    prev = np.ones(b, dtype=np.int64)
    for k in range(n - 1):
        col = a[:, k:, k]
        nz = col != 0
        has = nz.any(axis=1)
        sing |= ~has
        piv = np.argmax(nz, axis=1) + k
        swap = (piv != k) & has
        idx = np.nonzero(swap)[0]
        if idx.size:
            tmp = a[idx, k].copy()
            a[idx, k] = a[idx, piv[idx]]
            a[idx, piv[idx]] = tmp
        pivot = a[:, k, k].copy()
        safe = np.where(pivot == 0, 1, pivot)
        sub = a[:, k + 1:, k + 1:]
        a[:, k + 1:, k + 1:] = (
            sub * safe[:, None, None]
            - a[:, k + 1:, k:k + 1] * a[:, k:k + 1, k + 1:]
        ) // prev[:, None, None]
        prev = safe
    sing |= a[:, n - 1, n - 1] == 0
    return sing


def _corank1_kernels(mats, side):
    """Cofactor kernel vectors for a batch of singular matrices.

    Returns (batch, n) int64: a nonzero left (or right) kernel vector
    when the corank is exactly 1, the zero vector when corank >= 2.
    """
    a = mats if side == "left" else mats.transpose(0, 2, 1)
    a = a.astype(np.int64)
    batch, n, _ = a.shape
    out = np.zeros((batch, n), dtype=np.int64)
    unresolved = np.arange(batch)
    for i in range(n):
        cols = np.delete(a[unresolved], i, axis=2)
        kern = _cofactor_kernels(cols)
        ok = np.any(kern != 0, axis=1)
        out[unresolved[ok]] = kern[ok]
        unresolved = unresolved[~ok]
        if not unresolved.size:
            break
    return out


def _kernel_templates(kernels):
    """Canonical partition (tuple) per nonzero kernel row."""
    mags = np.abs(kernels)
    g = np.gcd.reduce(mags, axis=1)
    g[g == 0] = 1
    mags //= g[:, None]
    mags = np.sort(mags, axis=1)[:, ::-1]
    out = []
    for row in mags:
        out.append(tuple(int(x) for x in row[row > 0]))
    return out


def integer_corank_and_kernel(rows):
    """Exact corank and, when corank is 1, the primitive left kernel."""
    rows = [tuple(r) for r in rows]
    n = len(rows)
    kernel = linalg.nullspace(list(zip(*rows)), n)
    corank = len(kernel)
    if corank == 1:
        return 1, linalg.primitive(kernel[0])
    return corank, None


def _normalized_batch(n, start, stop):
    """Matrices with all-plus first row/column, free bits enumerated."""
    m = (n - 1) * (n - 1)
    idx = np.arange(start, stop, dtype=np.uint64)
    bits = (idx[:, None] >> np.arange(m, dtype=np.uint64)[None, :]) & 1
    mats = np.ones((stop - start, n, n), dtype=np.int64)
    mats[:, 1:, 1:] = (1 - 2 * bits.astype(np.int64)).reshape(-1, n - 1, n - 1)
    return mats


def _full_batch(n, start, stop):
    m = n * n
    idx = np.arange(start, stop, dtype=np.uint64)
    bits = (idx[:, None] >> np.arange(m, dtype=np.uint64)[None, :]) & 1
    return (1 - 2 * bits.astype(np.int64)).reshape(-1, n, n)


def _count_singular_range(args):
    n, start, stop, full = args
    total = 0
    maker = _full_batch if full else _normalized_batch
    for lo in range(start, stop, SHARD):
        hi = min(lo + SHARD, stop)
        total += int(_batched_singular_mask(maker(n, lo, hi)).sum())
    return total


def exact_pn(n, jobs=1):
    """Exact singularity probability by normalized enumeration, n <= 6."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return Fraction(0)
    if n > EXACT_MAX_N:
        raise InfeasibleSizeError("exact enumeration supports n <= %d" % EXACT_MAX_N)
    space = 1 << ((n - 1) * (n - 1))
    count = _parallel_count(n, space, False, jobs)
    return Fraction(count, space)


def exact_pn_bruteforce(n):
    """Exact singularity probability over all 2^(n*n) matrices, n <= 4."""
    if n > 4:
        raise InfeasibleSizeError("brute force limited to n <= 4")
    if n == 1:
        return Fraction(0)
    space = 1 << (n * n)
    count = _count_singular_range((n, 0, space, True))
    return Fraction(count, space)


def _parallel_count(n, space, full, jobs):
    jobs = max(1, int(jobs))
    if jobs == 1 or space <= SHARD:
        return _count_singular_range((n, 0, space, full))
    step = -(-space // jobs)
    step = -(-step // SHARD) * SHARD
    tasks = [(n, lo, min(lo + step, space), full) for lo in range(0, space, step)]
    with multiprocessing.Pool(len(tasks)) as pool:
        return sum(pool.map(_count_singular_range, tasks))


def _w_counts(mats):
    """Template-11 event count per matrix: row/column pairs equal up to sign."""
    b, n, _ = mats.shape
    w = np.zeros(b, dtype=np.int64)
    for i, j in itertools.combinations(range(n), 2):
        for s in (1, -1):
            w += np.all(mats[:, i, :] == s * mats[:, j, :], axis=1)
            w += np.all(mats[:, :, i] == s * mats[:, :, j], axis=1)
    return w


def _e8_template_matrix(n):
    """All template vectors of the eight union templates, up to length n."""
    from ntl.core import Partition, template_vectors
    rows = []
    for parts in E8_TEMPLATES:
        if len(parts) <= n:
            rows.extend(template_vectors(Partition(parts), n))
    return np.array(rows, dtype=np.int64)


def _stats_range(args):
    n, start, stop = args
    e8set = {t for t in E8_TEMPLATES if len(t) <= n}
    tmat = _e8_template_matrix(n)
    wmax = 4 * math.comb(n, 2)
    whist = np.zeros(wmax + 1, dtype=np.int64)
    singular = 0
    d11 = 0
    e8 = 0
    corank2 = 0
    for lo in range(start, stop, SHARD):
        hi = min(lo + SHARD, stop)
        mats = _normalized_batch(n, lo, hi)
        w = _w_counts(mats)
        whist += np.bincount(w, minlength=wmax + 1)
        d11 += int((w > 0).sum())
        sing_mask = _batched_singular_mask(mats)
        singular += int(sing_mask.sum())
        bad = mats[sing_mask]
        if not bad.size:
            continue
        left = _corank1_kernels(bad, "left")
        right = _corank1_kernels(bad, "right")
        c1 = np.any(left != 0, axis=1)
        hit = np.zeros(len(bad), dtype=bool)
        lt = _kernel_templates(left[c1])
        rt = _kernel_templates(right[c1])
        hit[c1] = [a in e8set or b in e8set for a, b in zip(lt, rt)]
        deep = ~c1
        corank2 += int(deep.sum())
        if deep.any() and tmat.size:
            db = bad[deep]
            lz = np.all(np.einsum("vn,bnm->bvm", tmat, db) == 0, axis=2).any(axis=1)
            rz = np.all(np.einsum("bnm,vm->bvn", db, tmat) == 0, axis=2).any(axis=1)
            hit[np.nonzero(deep)[0][lz | rz]] = True
        e8 += int(hit.sum())
    return singular, d11, e8, corank2, whist


def exact_event_stats(n, jobs=1):
    """Exhaustive exact statistics of the null-vector events for n <= 6.

    Returns a dict with the singularity probability, the template-11
    union probability, the distribution and factorial moments of the
    event count W, the eight-template union probability, and the number
    of corank >= 2 orbits encountered.
    """
    if not 2 <= n <= EXACT_MAX_N:
        raise InfeasibleSizeError("exact statistics support 2 <= n <= %d" % EXACT_MAX_N)
    space = 1 << ((n - 1) * (n - 1))
    jobs = max(1, int(jobs))
    if jobs == 1 or space <= SHARD:
        parts = [_stats_range((n, 0, space))]
    else:
        step = -(-space // jobs)
        step = -(-step // SHARD) * SHARD
        tasks = [(n, lo, min(lo + step, space)) for lo in range(0, space, step)]
        with multiprocessing.Pool(len(tasks)) as pool:
            parts = pool.map(_stats_range, tasks)
    singular = sum(p[0] for p in parts)
    d11 = sum(p[1] for p in parts)
    e8 = sum(p[2] for p in parts)
    corank2 = sum(p[3] for p in parts)
    whist = sum((p[4] for p in parts[1:]), parts[0][4].copy())
    dist = {j: Fraction(int(c), space) for j, c in enumerate(whist) if c}
    ew = sum((Fraction(j) * q for j, q in dist.items()), Fraction(0))
    ew2 = sum((math.comb(j, 2) * q for j, q in dist.items()), Fraction(0))
    ew3 = sum((math.comb(j, 3) * q for j, q in dist.items()), Fraction(0))
    return {
        "n": n,
        "p_singular": Fraction(singular, space),
        "p_d11": Fraction(d11, space),
        "w_dist": dist,
        "ew": ew,
        "ew2": ew2,
        "ew3": ew3,
        "p_e8": Fraction(e8, space),
        "corank2_orbits": corank2,
    }


def _survey_shard(args):
    n, seed, shard, count = args
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, shard])))
    bits = rng.integers(0, 2, size=(count, n, n), dtype=np.uint8)
    mats = (1 - 2 * bits.astype(np.int64))
    sing_mask = _batched_singular_mask(mats)
    bad = mats[sing_mask]
    hist = {}
    if bad.size:
        left = _corank1_kernels(bad, "left")
        c1 = np.any(left != 0, axis=1)
        for t in _kernel_templates(left[c1]):
            hist[t] = hist.get(t, 0) + 1
        deep = int((~c1).sum())
        if deep:
            hist["corank>=2"] = deep
    return int(sing_mask.sum()), hist


def survey(n, samples, seed, jobs=1):
    """Seeded Monte Carlo survey of kernel templates of singular samples.

    The sampling is sharded deterministically (fixed shard size, one
    Philox stream per shard keyed by (seed, shard index)), so the report
    is bit-identical for any worker count.
    """
    if n > 32:
        raise InfeasibleSizeError("n <= 32 required")
    if samples < 1:
        raise ValueError("need at least one sample")
    tasks = []
    remaining = samples
    shard = 0
    while remaining > 0:
        take = min(SHARD, remaining)
        tasks.append((n, seed, shard, take))
        remaining -= take
        shard += 1
    jobs = max(1, int(jobs))
    if jobs == 1 or len(tasks) == 1:
        results = [_survey_shard(t) for t in tasks]
    else:
        with multiprocessing.Pool(min(jobs, len(tasks))) as pool:
            results = pool.map(_survey_shard, tasks)
    singular = 0
    hist = {}
    for s, h in results:
        singular += s
        for key, c in h.items():
            hist[key] = hist.get(key, 0) + c
    return SurveyReport(n, samples, seed, singular, hist)
