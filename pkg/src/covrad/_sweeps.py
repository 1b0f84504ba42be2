"""Internal vectorized engines for the exhaustive distance machinery.

Three exact algorithms live here:

* a coset-profile sweep for RS/PRS-structured codes: cosets are tail
  polynomials; for each tail the best agreement A with lower-degree
  polynomials (and, for PRS, the set of degree-(k-1) coefficients realizing
  it) determines every error distance in the coset.  Candidate polynomials
  come from interpolation on k-point subsets, batched as float64 matmuls on
  base-p digit vectors (exact: all values stay far below 2^53).

* a syndrome coset-leader BFS for arbitrary linear codes: words are
  enumerated by increasing weight and their syndromes marked; the radius is
  the weight at which the table fills.

* a tiny full-space brute force used as an oracle.

The sweep optionally enumerates only degree-normalized slices (monic tails,
subleading coefficient removed where the characteristic allows): every coset
orbit under the substitutions x -> ax+b and scalar multiples meets the
slice, and both the agreement profile and the coefficient-set fullness are
orbit invariants, so the maximum over slices is the exact radius.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _linops
from .gf import FieldCtx, field_create
from .poly import lagrange_basis

CHUNK = 1 << 16
DEEP_CANDIDATE_CAP = 5_000_000


# ----------------------------------------------------------------------
# subset interpolation operators
# ----------------------------------------------------------------------

_SUBSET_OPS_CACHE: dict = {}


def _horner(ctx, coeffs, x):
    y = 0
    for c in reversed(coeffs):
        y = ctx.add(ctx.mul(y, x), c)
    return y


def subset_ops(ctx: FieldCtx, D: tuple, k: int):
    """For every k-subset S of points: the digit operators mapping values on
    S to (candidate values at all points, coefficient of x^(k-1)).

    Returns (col_gather, W, CW): col_gather (C, k*a) digit-column indices,
    W (C, k*a, n*a) and CW (C, k*a, a) as float64.
    """
    key = (ctx, D, k)
    ops = _SUBSET_OPS_CACHE.get(key)
    if ops is not None:
        return ops
    n, a = len(D), ctx.a
    subs = list(itertools.combinations(range(n), k))
    col_gather = np.empty((len(subs), k * a), dtype=np.int64)
    W = np.empty((len(subs), k * a, n * a), dtype=np.float32)
    CW = np.empty((len(subs), k * a, a), dtype=np.float32)
    for si, S in enumerate(subs):
        pts = tuple(D[i] for i in S)
        basis = lagrange_basis(ctx, pts)
        vmat = [[_horner(ctx, basis[j], D[t]) for t in range(n)] for j in range(k)]
        cvec = [[basis[j][k - 1] if k - 1 < len(basis[j]) else 0] for j in range(k)]
        W[si] = _linops.digit_expand(ctx, vmat)
        CW[si] = _linops.digit_expand(ctx, cvec)
        for j in range(k):
            col_gather[si, j * a:(j + 1) * a] = np.arange(S[j] * a, (S[j] + 1) * a)
    ops = (col_gather, W, CW)
    _SUBSET_OPS_CACHE[key] = ops
    return ops


# ----------------------------------------------------------------------
# tail enumeration plans
# ----------------------------------------------------------------------

class TailPlan:
    """One enumeration block: a fixed part plus free coefficient degrees."""

    def __init__(self, fixed, free_degrees, q, start=None, end=None):
        self.fixed = dict(fixed)
        self.free_degrees = tuple(free_degrees)
        self.count = q ** len(self.free_degrees)
        self.start = 0 if start is None else start
        self.end = self.count if end is None else end


def full_plans(ctx: FieldCtx, n: int, k: int) -> list[TailPlan]:
    """All tails with support in degrees k..n-1 (q^(n-k) cosets)."""
    return [TailPlan({}, range(k, n), ctx.q)]


def sliced_plans(ctx: FieldCtx, k: int) -> list[TailPlan]:
    """Degree-normalized slices plus the zero tail; full-field sets only.

    Degree-d tails are normalized monic; the x^(d-1) coefficient is removed
    by a substitution x -> x + b unless p divides d, in which case it stays
    free.  Every coset orbit meets the resulting slice set.
    """
    q, p = ctx.q, ctx.p
    plans = [TailPlan({}, (), q)]
    for d in range(k, q):
        free = list(range(k, d - 1))
        if d % p == 0 and d - 1 >= k:
            free.append(d - 1)
        plans.append(TailPlan({d: 1}, free, q))
    return plans


# ----------------------------------------------------------------------
# the profile engine
# ----------------------------------------------------------------------

@dataclass
class SweepOutcome:
    max_contrib: int
    cosets: int                 # tails scanned
    candidates: list            # (tail tuple, A, vmask) rows at max_contrib
    truncated: bool = False


def _tail_values_digits(ctx, D, plan, idx):
    """Digit value matrix (len(idx), n*a) for the plan's tails at indices idx."""
    n, a, q = len(D), ctx.a, ctx.q
    dt = ctx.digit_table()
    fixed = np.zeros(n * a, dtype=np.float32)
    for deg, c in plan.fixed.items():
        vals = [ctx.mul(c, ctx.pow(x, deg)) for x in D]
        fixed += dt[vals].reshape(-1).astype(np.float32)
    fixed %= ctx.p
    if not plan.free_degrees:
        return np.repeat(fixed[None, :], len(idx), axis=0), None
    mat = [[ctx.pow(x, deg) for x in D] for deg in plan.free_degrees]
    vd = _linops.digit_expand(ctx, mat).astype(np.float32)
    coeffs = _linops.mixed_radix(idx, q, len(plan.free_degrees))
    cd = dt[coeffs].reshape(len(idx), -1).astype(np.float32)
    u = cd @ vd
    u += fixed
    u %= ctx.p
    return u, coeffs


def _tail_tuple(plan, coeff_row):
    degs = dict(plan.fixed)
    if coeff_row is not None:
        for d, c in zip(plan.free_degrees, coeff_row):
            if c:
                degs[d] = int(c)
    if not degs:
        return ()
    top = max(degs)
    return tuple(degs.get(i, 0) for i in range(top + 1))


COMPACT_EVERY = 16


def profile_sweep(ctx: FieldCtx, D: tuple, k: int, *, prs: bool,
                  plans, collect: bool, chunk: int = CHUNK,
                  floor: int = -1) -> SweepOutcome:
    """Scan tail cosets; a tail's contribution is its worst error distance
    (max over the extra coordinate for PRS).

    `floor` is a measured lower bound for the final maximum (e.g. the
    contribution of one known coset); rows whose best possible remaining
    contribution falls below the running maximum are dropped early.
    """
    n, a, q, p = len(D), ctx.a, ctx.q, ctx.p
    col_gather, W, CW = subset_ops(ctx, D, k)
    fullmask = (1 << q) - 1
    extra = 1 if prs else 0  # contribution is at most n + extra - bestA

    gmax = floor
    cands: list = []
    cosets = 0
    truncated = False

    for plan in plans:
        if isinstance(plan, tuple):  # ("explicit", [tails])
            tails = plan[1]
            dt = ctx.digit_table()
            u = np.zeros((len(tails), n * a), dtype=np.float32)
            for r, tail in enumerate(tails):
                vals = [_horner(ctx, list(tail), x) for x in D]
                u[r] = dt[vals].reshape(-1)
            batches = [(u, None, tails)]
        else:
            batches = _plan_batches(ctx, D, plan, chunk)

        for u, coeffs, tails in batches:
            rows = len(u)
            cosets += rows
            u8 = u.astype(np.int16)
            bestA = np.zeros(rows, dtype=np.int16)
            vmask = np.zeros(rows, dtype=np.int64)
            alive = None  # original row positions after compaction
            for si in range(len(W)):
                us = u[:, col_gather[si]]
                cand = us @ W[si]
                ci = cand.astype(np.int16)
                np.mod(ci, p, out=ci)
                eq = ci == u8
                if a > 1:
                    agree = eq.reshape(len(u), n, a).all(axis=2).sum(
                        axis=1, dtype=np.int16)
                else:
                    agree = eq.sum(axis=1, dtype=np.int16)
                if prs:
                    cd = us @ CW[si]
                    cdi = cd.astype(np.int64)
                    np.mod(cdi, p, out=cdi)
                    if a > 1:
                        cenc = cdi @ (ctx.p ** np.arange(a, dtype=np.int64))
                    else:
                        cenc = cdi[:, 0]
                    bits = np.left_shift(1, cenc)
                    upd = agree > bestA
                    np.maximum(bestA, agree, out=bestA)
                    hit = agree == bestA
                    vmask = np.where(upd, 0, vmask)
                    vmask |= np.where(hit, bits, 0)
                else:
                    np.maximum(bestA, agree, out=bestA)
                if (gmax >= 0 and len(u) > 2048 and si % COMPACT_EVERY
                        == COMPACT_EVERY - 1 and si + 1 < len(W)):
                    # a row can still reach gmax only if n+extra-bestA >= gmax
                    keep = bestA <= n + extra - gmax
                    if not keep.all():
                        u, u8 = u[keep], u8[keep]
                        bestA, vmask = bestA[keep], vmask[keep]
                        kept = np.nonzero(keep)[0]
                        alive = kept if alive is None else alive[kept]
                        if len(u) == 0:
                            break
            if len(u) == 0:
                continue
            if prs:
                contrib = (q + 1) - bestA.astype(np.int64) - (vmask == fullmask)
            else:
                contrib = n - bestA.astype(np.int64)
            cmax = int(contrib.max())
            if cmax > gmax:
                gmax = cmax
                cands = []
            if collect and cmax == gmax:
                take = np.nonzero(contrib == gmax)[0]
                if len(cands) + len(take) > DEEP_CANDIDATE_CAP:
                    truncated = True
                    take = take[:max(0, DEEP_CANDIDATE_CAP - len(cands))]
                for r in take:
                    orig = int(r) if alive is None else int(alive[r])
                    if tails is not None:
                        tail = tuple(tails[orig])
                    else:
                        tail = _tail_tuple(plan,
                                           None if coeffs is None else coeffs[orig])
                    cands.append((tail, int(bestA[r]), int(vmask[r])))
    return SweepOutcome(gmax, cosets, cands, truncated)


def _plan_batches(ctx, D, plan, chunk):
    for s in range(plan.start, plan.end, chunk):
        idx = np.arange(s, min(s + chunk, plan.end))
        u, coeffs = _tail_values_digits(ctx, D, plan, idx)
        yield u, coeffs, None


# ----------------------------------------------------------------------
# parallel driver
# ----------------------------------------------------------------------

def _worker(args):
    (p, a, modulus, D, k, prs, plan_spec, start, end, collect, floor) = args
    ctx = field_create(p, a, modulus)
    if plan_spec[0] == "explicit":
        plans = [plan_spec]
    else:
        plans = [TailPlan(plan_spec[1], plan_spec[2], ctx.q, start, end)]
    return profile_sweep(ctx, tuple(D), k, prs=prs, plans=plans,
                         collect=collect, floor=floor)


def measured_floor(ctx: FieldCtx, D: tuple, k: int, prs: bool) -> int:
    """Contribution of one cheap coset (the x^k tail, or the zero tail when
    k is the maximal degree): a measured lower bound for the sweep maximum
    that lets it drop hopeless rows early."""
    tail = (0,) * k + (1,) if k < len(D) else ()
    out = profile_sweep(ctx, D, k, prs=prs, plans=[("explicit", [tail])],
                        collect=False)
    return out.max_contrib


def run_sweep(ctx: FieldCtx, D: tuple, k: int, *, prs: bool, plans,
              collect: bool, threads: int = 1) -> SweepOutcome:
    """Run the profile sweep, optionally partitioned across processes.

    The merge is a max reduction plus list concatenation, so the result is
    independent of worker scheduling.
    """
    floor = measured_floor(ctx, D, k, prs)
    if threads <= 1:
        return profile_sweep(ctx, D, k, prs=prs, plans=plans, collect=collect,
                             floor=floor)
    tasks = []
    for plan in plans:
        if isinstance(plan, tuple):
            tasks.append((ctx.p, ctx.a, ctx.modulus, D, k, prs, plan,
                          0, 0, collect, floor))
            continue
        step = max(CHUNK, -(-plan.count // threads))
        for s in range(0, plan.count, step):
            tasks.append((ctx.p, ctx.a, ctx.modulus, D, k, prs,
                          ("range", plan.fixed, plan.free_degrees),
                          s, min(s + step, plan.count), collect, floor))
    with ProcessPoolExecutor(max_workers=threads) as ex:
        outs = list(ex.map(_worker, tasks))
    gmax = max(o.max_contrib for o in outs)
    cands = []
    for o in outs:
        if o.max_contrib == gmax:
            cands.extend(o.candidates)
    return SweepOutcome(gmax, sum(o.cosets for o in outs), cands,
                        any(o.truncated for o in outs))


# ----------------------------------------------------------------------
# syndrome coset-leader BFS
# ----------------------------------------------------------------------

@dataclass
class BfsOutcome:
    rho: int
    level_counts: list            # syndromes first covered at each weight
    words_examined: int
    deep_syndromes: np.ndarray | None
    witnesses: np.ndarray | None  # encoded words, aligned with deep_syndromes


def syndrome_bfs(code, mem_budget: int, want_witness: bool = False,
                 stop_early: bool = True) -> BfsOutcome:
    """Mark syndromes of all words by increasing weight until covered.

    Exact for any linear code; marking is idempotent (first mark wins), so
    batch order within a weight class cannot change the table.
    """
    ctx = code.ctx
    n, q, a, p = code.n, ctx.q, ctx.a, ctx.p
    m = n - code.k
    size = q**m
    if size > mem_budget:
        raise ValueError(
            f"syndrome table q^(n-k) = {size} exceeds memory budget "
            f"{mem_budget}; use the representative sweep")
    table = np.full(size, 255, dtype=np.uint8)
    witness = np.zeros(size, dtype=np.int64) if want_witness else None
    enc_w = _linops.encoding_weights(ctx, m).astype(np.float64)
    dt = ctx.digit_table()
    qpow = q ** np.arange(n, dtype=np.int64)
    Hcols = list(zip(*code.H))

    table[0] = 0
    remaining = size - 1
    level_counts = [1]
    words = 1
    w = 0
    while remaining > 0:
        w += 1
        if w > n:
            raise RuntimeError("syndrome space not covered by weight n")
        marked = 0
        nvals = (q - 1) ** w
        vals_enc = _linops.mixed_radix(np.arange(nvals), q - 1, w) + 1
        vd = dt[vals_enc].reshape(nvals, w * a).astype(np.float64)
        for S in itertools.combinations(range(n), w):
            hd = _linops.digit_expand(ctx, [Hcols[j] for j in S]).astype(np.float64)
            syn = vd @ hd
            np.mod(syn, p, out=syn)
            enc = (syn @ enc_w).astype(np.int64)
            words += nvals
            unseen = table[enc] == 255
            if unseen.any():
                ue = enc[unseen]
                uniq, first = np.unique(ue, return_index=True)
                table[uniq] = w
                if want_witness:
                    witness[uniq] = (vals_enc[unseen][first]
                                     @ qpow[list(S)])
                marked += len(uniq)
                if stop_early and marked >= remaining:
                    break
        level_counts.append(marked)
        remaining -= marked
    rho = w
    deep = np.nonzero(table == rho)[0] if rho > 0 else np.array([0])
    wit = witness[deep] if want_witness else None
    return BfsOutcome(rho, level_counts, words, deep, wit)


def decode_word(ctx: FieldCtx, encoded: int, n: int) -> tuple:
    out = []
    t = int(encoded)
    for _ in range(n):
        out.append(t % ctx.q)
        t //= ctx.q
    return tuple(out)


# ----------------------------------------------------------------------
# brute force over the whole ambient space (oracle scale only)
# ----------------------------------------------------------------------

def brute_radius(code, enum_budget: int):
    """(rho, deep words) by scanning every word against every codeword."""
    ctx = code.ctx
    q, n = ctx.q, code.n
    total = q**n
    cw = code.codeword_matrix(enum_budget)
    if total * len(cw) > enum_budget:
        raise ValueError(
            f"q^n * q^k = {total * len(cw)} distance pairs exceed budget "
            f"{enum_budget}")
    rho = 0
    deep: list[tuple] = []
    chunk = max(1, (1 << 22) // max(1, len(cw)))
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total))
        words = _linops.mixed_radix(idx, q, n)
        dist = (words[:, None, :] != cw[None, :, :]).sum(axis=2).min(axis=1)
        cmax = int(dist.max())
        if cmax > rho:
            rho = cmax
            deep = []
        if cmax == rho:
            for r in np.nonzero(dist == rho)[0]:
                deep.append(tuple(int(v) for v in words[r]))
    return rho, deep
