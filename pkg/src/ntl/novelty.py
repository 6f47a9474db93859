"""Novelty certificates, reduction/equivalence relations, enumeration,
and minimality witness matrices.

A partition lambda with k parts is novel exactly when its complement
matrix A has rank k-1 and gcd(lambda) = 1; that intrinsic test is what
is_novel computes.  The definitional relations (reduction via projected
complement containment, equivalence via complement equality up to
rearrangement and sign flips) are implemented directly for bounded
sizes so the two views can be cross-validated.
"""

import itertools
import math
import multiprocessing
from dataclasses import dataclass

import numpy as np

from ntl import linalg
from ntl.core import (
    Partition,
    a_matrix,
    complement,
    complement_size,
    count_template_vectors,
    iter_complement_signs,
    r_lambda,
    template_vectors,
)
from ntl.errors import InfeasibleSizeError, NotFairlyDivisibleError, VerificationError

ENUM_MAX_LEN = 7
RELATION_MAX_LEN = 8


@dataclass(frozen=True)
class NoveltyCertificate:
    novel: bool
    rank: int
    gcd: int
    p: int


@dataclass(frozen=True)
class WitnessMatrix:
    side: int
    rows: tuple


def rank_of(matrix_rows, stop_at=None):
    """Exact rank over Q of a sign matrix given as rows."""
    k = len(matrix_rows)
    return linalg.rank_of_columns(zip(*matrix_rows), k, stop_at=stop_at)


def _joint_zero_count(parts, u):
    """Count x in {-1,+1}^k with parts . x = 0 and u . x = 0 (exact DP)."""
    counts = {(0, 0): 1}
    for a, b in zip(parts, u):
        nxt = {}
        for (s1, s2), c in counts.items():
            for sg in (1, -1):
                key = (s1 + sg * a, s2 + sg * b)
                nxt[key] = nxt.get(key, 0) + c
        counts = nxt
    return counts.get((0, 0), 0)


def _span_is_stable(p, ir, total):
    """Whether the complement cannot add rank beyond ir's current span.

    Every kernel vector u of the current span is tested against the
    whole complement by joint subset-sum counting; if all complement
    vectors annihilate all kernel vectors, the complement lies inside
    the span already and streaming may stop early.
    """
    basis_rows = [row for _, row in ir.basis]
    for u in linalg.nullspace(basis_rows, p.k):
        if _joint_zero_count(p.parts, u) != total:
            return False
    return True


def _rank_by_sampling(p, total):
    """Rank of the complement span for large complements.

    Rejection-samples complement elements (fixed seed, deterministic),
    which span the space far faster than lex-ordered streaming; the
    final rank is still certified exactly by the joint subset-sum check
    over the whole complement.
    """
    k = p.k
    parts = np.array(p.parts, dtype=np.int64)
    rng = np.random.default_rng(0)
    ir = linalg.IncrementalRank(k)
    while True:
        batch = rng.integers(0, 2, size=(4096, k), dtype=np.int64) * 2 - 1
        batch[:, 0] = 1
        hits = batch[batch @ parts == 0]
        grew = False
        for row in hits:
            if ir.add(tuple(int(x) for x in row)):
                grew = True
                if ir.rank == k - 1:
                    return ir.rank
        if not grew and ir.rank and _span_is_stable(p, ir, total):
            return ir.rank


def is_novel(p):
    """Novelty certificate via streaming rank over the lazy complement."""
    g = p.gcd
    total = complement_size(p)
    half = total // 2
    if half == 0:
        return NoveltyCertificate(False, 0, g, 0)
    k = p.k
    if half > 4096:
        rank = _rank_by_sampling(p, total)
        return NoveltyCertificate(rank == k - 1 and g == 1, rank, g, half)
    ir = linalg.IncrementalRank(k)
    stall = 0
    seen = 0
    for signs in iter_complement_signs(p.parts):
        seen += 1
        if ir.add(signs):
            stall = 0
            if ir.rank == k - 1:
                break
        else:
            stall += 1
            # rank has been flat for a while: prove it final or keep going
            if stall >= 256 and seen < half:
                if _span_is_stable(p, ir, total):
                    break
                stall = 0
    return NoveltyCertificate(ir.rank == k - 1 and g == 1, ir.rank, g, half)


def implies_11(p):
    """True iff some pair of rows of A is equal or opposite.

    Tested without materializing A: rows i and j agree up to sign s on
    the whole complement iff every complement vector is annihilated by
    e_i - s e_j.
    """
    total = complement_size(p)
    if total == 0:
        raise NotFairlyDivisibleError("%s is not fairly divisible" % p)
    k = p.k
    for i, j in itertools.combinations(range(k), 2):
        for s in (1, -1):
            u = [0] * k
            u[i], u[j] = 1, -s
            if _joint_zero_count(p.parts, u) == total:
                return True
    return False


def _full_complement_tuples(p):
    comp = complement(p)
    return [v for v in comp.full()]


def _template_multiple(base, target_parts):
    """Whether target_parts = c * sorted(|base|) for a positive integer c."""
    if any(x == 0 for x in base):
        return False
    sab = sorted((abs(x) for x in base), reverse=True)
    if target_parts[0] % sab[0]:
        return False
    c = target_parts[0] // sab[0]
    return c >= 1 and list(target_parts) == [c * x for x in sab]


# search guard for the fallback enumeration of arrangements
_ARRANGEMENT_LIMIT = 2_000_000


def _annihilator_arrangement(vectors, la):
    """Find v with template la and v . x = 0 for all given vectors.

    Returns a witness vector or None.  Uses the integer kernel of the
    vector set; only when the kernel has dimension >= 2 does it fall
    back to enumerating arrangements of la.
    """
    k = la.k
    if not vectors:
        return tuple(la.parts)
    kernel = linalg.nullspace(vectors, k)
    if not kernel:
        return None
    if len(kernel) == 1:
        b = kernel[0]
        if not _template_multiple(b, la.parts):
            return None
        # scale the primitive kernel vector up to la
        c = la.parts[0] // max(abs(x) for x in b)
        return tuple(c * x for x in b)
    if count_template_vectors(la, k) > _ARRANGEMENT_LIMIT:
        raise InfeasibleSizeError(
            "arrangement search for %s too large with kernel dimension %d"
            % (la, len(kernel)))
    probe = vectors[0]
    for v in template_vectors(la, k):
        if sum(a * b for a, b in zip(v, probe)):
            continue
        if all(not sum(a * b for a, b in zip(v, x)) for x in vectors[1:]):
            return v
    return None


def reduces(mu, la):
    """Whether mu reduces to la (complement containment up to projection).

    True iff for some coordinate subset I of size len(la) and some
    arrangement v of la, the projection of mu's complement onto I is
    contained in the complement of v.  The same-length clause of the
    definition is the I = all-coordinates case.
    """
    m, k = mu.k, la.k
    if m < k:
        raise ValueError("reduces needs len(mu) >= len(la)")
    if m > RELATION_MAX_LEN:
        raise InfeasibleSizeError("reduction search limited to length %d" % RELATION_MAX_LEN)
    full = _full_complement_tuples(mu)
    for idx in itertools.combinations(range(m), k):
        proj = {tuple(x[i] for i in idx) for x in full}
        if _annihilator_arrangement(sorted(proj), la) is not None:
            return True
    return False


def equivalence_witness(la, mu):
    """Arrangement w of mu with la^perpB = w^perpB, or None."""
    if la.k != mu.k:
        return None
    if la.k > RELATION_MAX_LEN:
        raise InfeasibleSizeError("equivalence search limited to length %d" % RELATION_MAX_LEN)
    if complement_size(la) != complement_size(mu):
        return None
    full = _full_complement_tuples(la)
    if not full:
        return tuple(mu.parts)
    # containment one way plus equal sizes gives set equality
    return _annihilator_arrangement(sorted(set(full)), mu)


def equivalent(la, mu):
    """Whether the two same-length partitions are equivalent templates."""
    return equivalence_witness(la, mu) is not None


def kernel_primitive(matrix_rows):
    """Primitive left-kernel vector of a rank-(k-1) sign matrix, else None."""
    rows = [tuple(r) for r in matrix_rows]
    k = len(rows)
    kernel = linalg.nullspace(list(zip(*rows)), k)
    if len(kernel) != 1:
        return None
    return linalg.primitive(kernel[0])


def _cofactor_kernels(cols):
    """Signed-minor kernel vectors for a batch of k x (k-1) matrices.

    cols has shape (B, k, k-1) in int64.  Returns (B, k) where row b is
    a left-kernel vector of the b-th matrix (the alternating-sign vector
    of its maximal minors), the zero vector when the rank is below k-1.
    Subset dynamic programming over row sets evaluates all Laplace
    expansions in O(k 2^k) multiply-adds per matrix.
    """
    batch, k, km1 = cols.shape
    assert km1 == k - 1
    minors = {0: np.ones(batch, dtype=np.int64)}
    for c in range(k - 1):
        nxt = {}
        for subset in itertools.combinations(range(k), c + 1):
            mask = 0
            for i in subset:
                mask |= 1 << i
            acc = np.zeros(batch, dtype=np.int64)
            for pos, i in enumerate(subset):
                sign = 1 if (pos + c) % 2 == 0 else -1
                sub = mask ^ (1 << i)
                acc += sign * cols[:, i, c] * minors[sub]
            nxt[mask] = acc
        minors = nxt
    out = np.empty((batch, k), dtype=np.int64)
    all_mask = (1 << k) - 1
    for j in range(k):
        sign = 1 if j % 2 == 0 else -1
        out[:, j] = sign * minors[all_mask ^ (1 << j)]
    return out


def _candidate_batch(vecs, combos):
    """Candidate partitions from a batch of (k-1)-subsets of sign vectors."""
    k = vecs.shape[1]
    cols = vecs[combos].transpose(0, 2, 1).astype(np.int64)
    kernels = _cofactor_kernels(cols)
    mask = np.all(kernels != 0, axis=1)
    if not mask.any():
        return set()
    cand = np.abs(kernels[mask])
    g = np.gcd.reduce(cand, axis=1)
    cand //= g[:, None]
    cand = np.sort(cand, axis=1)[:, ::-1]
    return {tuple(int(x) for x in row) for row in np.unique(cand, axis=0)}


_BATCH = 65536


def _enumerate_first_range(args):
    k, first_lo, first_hi = args
    vecs = _normalized_sign_vectors(k)
    m = len(vecs)
    found = set()
    buf = []
    for a in range(first_lo, first_hi):
        for rest in itertools.combinations(range(a + 1, m), k - 2):
            buf.append((a,) + rest)
            if len(buf) == _BATCH:
                found |= _candidate_batch(vecs, np.array(buf, dtype=np.intp))
                buf.clear()
    if buf:
        found |= _candidate_batch(vecs, np.array(buf, dtype=np.intp))
    return found


def _normalized_sign_vectors(k):
    """The 2^(k-1)-1 sign vectors with first coordinate +1, not all +1."""
    out = []
    for signs in itertools.product((1, -1), repeat=k - 1):
        if any(s == -1 for s in signs):
            out.append((1,) + signs)
    return np.array(out, dtype=np.int8)


def enumerate_novel(k, jobs=1):
    """All novel partitions with exactly k parts, lexicographically sorted.

    Every novel partition of length k is the primitive kernel of some
    (k-1)-subset of its complement columns, so scanning all (k-1)-subsets
    of the normalized nonconstant sign vectors and keeping the all-nonzero
    kernels finds every candidate; each candidate is confirmed by
    is_novel.  Work is split by the smallest subset element so the result
    is independent of the worker count.
    """
    if not 2 <= k <= ENUM_MAX_LEN:
        raise InfeasibleSizeError(
            "exact enumeration supports 2 <= k <= %d; use survey mode beyond"
            % ENUM_MAX_LEN)
    m = (1 << (k - 1)) - 1
    jobs = max(1, int(jobs))
    # balance contiguous first-element ranges by subset count
    weights = [math.comb(m - 1 - a, k - 2) for a in range(m)]
    total = sum(weights)
    bounds = [0]
    acc = 0
    target = 1
    for a, w in enumerate(weights):
        acc += w
        while len(bounds) <= jobs - 1 and acc * jobs >= target * total:
            bounds.append(a + 1)
            target += 1
    while len(bounds) < jobs:
        bounds.append(m)
    bounds.append(m)
    tasks = [(k, bounds[i], bounds[i + 1]) for i in range(jobs)
             if bounds[i] < bounds[i + 1]]
    if len(tasks) <= 1:
        results = [_enumerate_first_range(t) for t in tasks]
    else:
        with multiprocessing.Pool(len(tasks)) as pool:
            results = pool.map(_enumerate_first_range, tasks)
    candidates = set()
    for r in results:
        candidates |= r
    out = []
    for parts in sorted(candidates):
        q = Partition(parts)
        if is_novel(q).novel:
            out.append(q)
    return out


def minimal_witness(p):
    """Square sign matrix of corank 1 whose primitive kernels all match p.

    Follows the two construction cases (p <= k: pad A with duplicates of
    the last column; p > k: extend the first k-1 rows of A to a basis
    with columns of the all-plus matrix with -1 diagonal, then put row k
    back in place of the first extension vector).  The result is
    post-verified; VerificationError here indicates a bug.
    """
    cert = is_novel(p)
    if not cert.novel:
        raise ValueError("%s is not novel" % p)
    k = p.k
    a_rows = a_matrix(p)
    np_cols = cert.p
    if np_cols <= k:
        cols = list(zip(*a_rows))
        cols += [cols[-1]] * (k - np_cols)
        rows = tuple(zip(*cols))
        side = k
    else:
        side = np_cols
        ir = linalg.IncrementalRank(side)
        rows_list = [tuple(r) for r in a_rows]
        for r in rows_list[:k - 1]:
            if not ir.add(r):
                raise VerificationError("first k-1 rows of A not independent")
        extensions = []
        for i in range(side):
            s = tuple(-1 if j == i else 1 for j in range(side))
            if ir.add(s):
                extensions.append(s)
                if ir.rank == side:
                    break
        if len(extensions) != side - (k - 1):
            raise VerificationError("basis extension failed")
        rows = tuple(rows_list[:k] + extensions[1:])
        side = np_cols
    witness = WitnessMatrix(side, rows)
    _verify_witness(witness, p)
    return witness


def _verify_witness(w, p):
    rows = [list(r) for r in w.rows]
    if len(rows) != w.side or any(len(r) != w.side for r in rows):
        raise VerificationError("witness is not square")
    kernel = linalg.nullspace(list(zip(*rows)), w.side)
    if len(kernel) != 1:
        raise VerificationError("witness corank is not 1")
    template = tuple(sorted((abs(x) for x in kernel[0] if x), reverse=True))
    if template != p.parts:
        raise VerificationError(
            "witness kernel template %s differs from %s" % (template, p))
