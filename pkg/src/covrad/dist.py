"""Exact error distance, covering radius, and deep-hole enumeration.

Coset representatives: for RS-structured codes a tail polynomial supported
in degrees k..n-1 (the degree-<k part is the code); for PRS additionally a
last-coordinate value, obtained by subtracting the codeword that matches the
word's degree-<k truncation; for generic codes the set of minimum-weight
words of the coset, canonicalized by (weight, lexicographic) order.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import _linops, _sweeps
from .code import LinearCode, is_mds, min_distance, rs_code
from .gf import FieldCtx
from .poly import Poly, evaluate_word, hamming, interpolate

DEFAULT_MEM_BUDGET = 10**8
DEFAULT_ENUM_BUDGET = 10**8


# ----------------------------------------------------------------------
# reports and coset representatives
# ----------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class CosetRep:
    """Canonical representative of a coset modulo the code."""
    tail: tuple = ()          # tail polynomial coefficients, constant first
    v: int | None = None      # extra-coordinate value (PRS only)
    word: tuple | None = None # minimum-weight word (generic codes only)

    def sort_key(self):
        return (self.tail, -1 if self.v is None else self.v, self.word or ())

    def to_json(self):
        out = {}
        if self.word is not None:
            out["word"] = ",".join(str(x) for x in self.word)
            return out
        out["tail"] = ",".join(str(c) for c in self.tail) if self.tail else "0"
        if self.v is not None:
            out["v"] = self.v
        return out

    def representative_word(self, code: LinearCode) -> tuple:
        if self.word is not None:
            return self.word
        ctx = code.ctx
        kind = code.structure["kind"]
        D = code.structure["eval"]
        f = Poly(ctx, self.tail)
        u = evaluate_word(f, D)
        if kind == "prs":
            return u + (self.v,)
        return u


@dataclass
class RadiusReport:
    code: str
    n: int
    k: int
    rho: int
    algorithm: str              # syndrome-bfs | rep-sweep | brute
    cosets_examined: int
    elapsed_ms: float
    d: int | None = None
    variant: str = ""           # e.g. full / degree-sliced
    notes: list = dc_field(default_factory=list)

    def to_json(self):
        return {
            "code": self.code, "n": self.n, "k": self.k, "d": self.d,
            "rho": self.rho, "algorithm": self.algorithm,
            "variant": self.variant, "cosets_examined": self.cosets_examined,
            "notes": self.notes, "elapsed_ms": round(self.elapsed_ms, 3),
        }


@dataclass
class DeepHoleReport:
    code: str
    rho: int
    count: int
    reps: list                     # sorted CosetReps
    algorithm: str
    elapsed_ms: float
    family_size: int | None = None
    matches_degree_k_family: bool | None = None
    extras: list = dc_field(default_factory=list)
    missing_family: list = dc_field(default_factory=list)
    notes: list = dc_field(default_factory=list)

    def to_json(self):
        return {
            "code": self.code, "rho": self.rho,
            "deep_hole_count": self.count,
            "deep_holes": [r.to_json() for r in self.reps],
            "matches_degree_k_family": self.matches_degree_k_family,
            "family_size": self.family_size,
            "extra_count": len(self.extras),
            "extras": [r.to_json() for r in self.extras[:200]],
            "algorithm": self.algorithm, "notes": self.notes,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


# ----------------------------------------------------------------------
# error distances
# ----------------------------------------------------------------------

def error_distance_brute(code: LinearCode, word,
                         enum_budget: int = DEFAULT_ENUM_BUDGET):
    """Exact distance and first nearest codeword, by full enumeration."""
    word = tuple(word)
    if len(word) != code.n:
        raise ValueError(f"word length {len(word)} != n={code.n}")
    cw = code.codeword_matrix(enum_budget)
    dist = (cw != np.asarray(word)).sum(axis=1)
    i = int(np.argmin(dist))
    return int(dist[i]), tuple(int(v) for v in cw[i])


def _mds_stack(code: LinearCode):
    """Per-code stack of digit operators u_S -> candidate codeword values."""
    if code._subset_stack is not None:
        return code._subset_stack
    ctx = code.ctx
    n, k, a = code.n, code.k, ctx.a
    cols = list(zip(*code.G))
    subs = list(itertools.combinations(range(n), k))
    gather = np.empty((len(subs), k * a), dtype=np.int64)
    ops = np.empty((len(subs), k * a, n * a), dtype=np.float64)
    for si, S in enumerate(subs):
        gs = [[cols[j][i] for j in S] for i in range(k)]
        inv = _linops.mat_inv(ctx, gs)
        if inv is None:
            raise ValueError(
                f"{code.label}: columns {S} are dependent; code is not MDS")
        proj = _linops.mat_mul(ctx, inv, list(code.G))
        ops[si] = _linops.digit_expand(ctx, proj)
        for j in range(k):
            gather[si, j * a:(j + 1) * a] = np.arange(S[j] * a, (S[j] + 1) * a)
    code._subset_stack = (gather, ops)
    return code._subset_stack


def error_distance_mds(code: LinearCode, word):
    """Exact distance to an MDS code via all C(n,k) agreeing-subset decodes.

    Any k coordinates determine a unique codeword; a nearest codeword agrees
    with the word on at least k coordinates, so it is found by some subset.
    """
    word = tuple(word)
    if len(word) != code.n:
        raise ValueError(f"word length {len(word)} != n={code.n}")
    ctx = code.ctx
    try:
        gather, ops = _mds_stack(code)
    except ValueError:
        raise ValueError(
            f"{code.label} is not MDS; use error_distance_brute") from None
    dt = ctx.digit_table()
    ud = dt[list(word)].reshape(-1).astype(np.float64)
    us = ud[gather]                                  # (C, k*a)
    cand = np.einsum("ck,ckn->cn", us, ops)
    np.mod(cand, ctx.p, out=cand)
    enc = _linops.digit_decode_cols(ctx, cand.astype(np.int64), code.n)
    dist = (enc != np.asarray(word)).sum(axis=1)
    i = int(np.argmin(dist))
    return int(dist[i]), tuple(int(v) for v in enc[i])


# ----------------------------------------------------------------------
# coset reduction
# ----------------------------------------------------------------------

def reduce_to_coset_rep(code: LinearCode, word) -> CosetRep:
    """Canonical CosetRep of word + code."""
    word = tuple(word)
    ctx = code.ctx
    kind = code.structure["kind"]
    if kind in ("rs", "prs"):
        k = code.structure["k"]
        D = code.structure["eval"]
        uf = word[:len(D)]
        f = interpolate(ctx, D, uf)
        tail = tuple(0 if i < k else c for i, c in enumerate(f.coeffs))
        tail = _strip(tail)
        if kind == "rs":
            return CosetRep(tail=tail)
        v = ctx.sub(word[len(D)], f.coefficient(k - 1))
        return CosetRep(tail=tail, v=v)
    # generic: minimum-weight coset word, ties broken lexicographically
    cw = code.codeword_matrix(DEFAULT_ENUM_BUDGET)
    best = None
    for c in cw:
        delta = tuple(ctx.sub(a, int(b)) for a, b in zip(word, c))
        key = (sum(1 for x in delta if x), delta)
        if best is None or key < best:
            best = key
    return CosetRep(word=best[1])


def _strip(t):
    t = list(t)
    while t and t[-1] == 0:
        t.pop()
    return tuple(t)


# ----------------------------------------------------------------------
# covering radius
# ----------------------------------------------------------------------

def covering_radius_syndrome(code: LinearCode,
                             mem_budget: int = DEFAULT_MEM_BUDGET) -> RadiusReport:
    """Coset-leader BFS over the q^(n-k) syndrome table."""
    t0 = time.perf_counter()
    out = _sweeps.syndrome_bfs(code, mem_budget)
    return RadiusReport(
        code=code.label, n=code.n, k=code.k, rho=out.rho,
        algorithm="syndrome-bfs",
        cosets_examined=code.ctx.q ** (code.n - code.k),
        elapsed_ms=(time.perf_counter() - t0) * 1e3,
        notes=[f"words_examined={out.words_examined}"])


def covering_radius_sweep(code: LinearCode, variant: str = "auto",
                          enum_budget: int = DEFAULT_ENUM_BUDGET,
                          threads: int = 1) -> RadiusReport:
    """Representative sweep for RS/PRS-structured codes (exact).

    variant 'full' enumerates every tail coset; 'degree-sliced' enumerates
    one normalized slice per tail degree (exact radius by orbit invariance,
    full-field evaluation sets only); 'auto' picks by size.
    """
    t0 = time.perf_counter()
    kind = code.structure.get("kind")
    if kind not in ("rs", "prs"):
        raise ValueError(f"{code.label}: representative sweep needs an "
                         "RS- or PRS-structured code")
    ctx = code.ctx
    k = code.structure["k"]
    D = code.structure["eval"]
    ntails = ctx.q ** (len(D) - k)
    full_field = kind == "prs" or code.structure.get("full_field", False)
    if variant == "auto":
        if full_field and ntails > 2**16:
            variant = "degree-sliced"
        elif ntails <= max(1, enum_budget) and ntails <= 2**21:
            variant = "full"
        else:
            variant = "degree-sliced"
    if variant == "degree-sliced" and not full_field:
        raise ValueError("degree-sliced sweep requires the full-field "
                         "evaluation set")
    if variant == "full":
        if ntails > enum_budget:
            raise ValueError(f"{ntails} tail cosets exceed budget {enum_budget}; "
                             "use variant='degree-sliced'")
        plans = _sweeps.full_plans(ctx, len(D), k)
    else:
        plans = _sweeps.sliced_plans(ctx, k)
    out = _sweeps.run_sweep(ctx, tuple(D), k, prs=(kind == "prs"),
                            plans=plans, collect=False, threads=threads)
    cosets = out.cosets * (ctx.q if kind == "prs" else 1)
    notes = []
    if variant == "degree-sliced":
        notes.append("orbit-normalized slices; radius exact by invariance")
    return RadiusReport(
        code=code.label, n=code.n, k=code.k, rho=out.max_contrib,
        algorithm="rep-sweep", variant=variant, cosets_examined=cosets,
        elapsed_ms=(time.perf_counter() - t0) * 1e3, notes=notes)


def covering_radius_brute(code: LinearCode,
                          enum_budget: int = DEFAULT_ENUM_BUDGET) -> RadiusReport:
    """Max of error_distance_brute over the whole ambient space (tiny codes)."""
    t0 = time.perf_counter()
    rho, _ = _sweeps.brute_radius(code, enum_budget)
    return RadiusReport(
        code=code.label, n=code.n, k=code.k, rho=rho, algorithm="brute",
        cosets_examined=code.ctx.q ** code.n,
        elapsed_ms=(time.perf_counter() - t0) * 1e3)


def covering_radius(code: LinearCode, algo: str = "auto",
                    mem_budget: int = DEFAULT_MEM_BUDGET,
                    enum_budget: int = DEFAULT_ENUM_BUDGET,
                    threads: int = 1) -> RadiusReport:
    """Dispatch: syndrome BFS when the table fits the memory budget, else
    the representative sweep."""
    if algo == "syndrome":
        return covering_radius_syndrome(code, mem_budget)
    if algo == "sweep":
        return covering_radius_sweep(code, enum_budget=enum_budget,
                                     threads=threads)
    if algo == "brute":
        return covering_radius_brute(code, enum_budget)
    if algo != "auto":
        raise ValueError(f"unknown algorithm {algo!r}")
    if code.ctx.q ** (code.n - code.k) <= mem_budget:
        return covering_radius_syndrome(code, mem_budget)
    return covering_radius_sweep(code, enum_budget=enum_budget, threads=threads)


# ----------------------------------------------------------------------
# deep holes
# ----------------------------------------------------------------------

def deep_hole_family_prs(ctx: FieldCtx, k: int):
    """The (q-1)*q representatives (c*x^k, v), c != 0."""
    if not 2 <= k <= ctx.q - 2:
        raise ValueError(f"need 2 <= k <= q-2, got k={k}, q={ctx.q}")
    for c in range(1, ctx.q):
        for v in range(ctx.q):
            yield CosetRep(tail=(0,) * k + (c,), v=v)


def _family_reps(code: LinearCode):
    ctx, kind, k = code.ctx, code.structure["kind"], code.structure["k"]
    if kind == "rs":
        return [CosetRep(tail=(0,) * k + (c,)) for c in range(1, ctx.q)]
    return [CosetRep(tail=(0,) * k + (c,), v=v)
            for c in range(1, ctx.q) for v in range(ctx.q)]


def deep_holes(code: LinearCode, rho: int | None = None, algo: str = "auto",
               mem_budget: int = DEFAULT_MEM_BUDGET,
               enum_budget: int = DEFAULT_ENUM_BUDGET,
               threads: int = 1) -> DeepHoleReport:
    """All coset representatives at error distance exactly rho(C).

    For RS/PRS codes the reps are (tail, extra-coordinate) pairs and the
    report compares the set against the degree-k family; for generic codes
    the reps are minimum-weight witness words.
    """
    t0 = time.perf_counter()
    kind = code.structure.get("kind")
    ctx = code.ctx
    if algo == "auto":
        algo = "sweep" if kind in ("rs", "prs") else "syndrome"
    if algo == "sweep":
        if kind not in ("rs", "prs"):
            raise ValueError("sweep deep-hole listing needs RS/PRS structure")
        k = code.structure["k"]
        D = code.structure["eval"]
        ntails = ctx.q ** (len(D) - k)
        if ntails > enum_budget:
            raise ValueError(
                f"{ntails} tail cosets exceed budget {enum_budget}; deep-hole "
                "listing requires the full enumeration")
        plans = _sweeps.full_plans(ctx, len(D), k)
        out = _sweeps.run_sweep(ctx, tuple(D), k, prs=(kind == "prs"),
                                plans=plans, collect=True, threads=threads)
        if rho is not None and rho != out.max_contrib:
            raise ValueError(
                f"supplied rho={rho} but sweep found max distance {out.max_contrib}")
        rho = out.max_contrib
        reps = []
        q = ctx.q
        for tail, A, vmask in out.candidates:
            if kind == "rs":
                reps.append(CosetRep(tail=tail))
                continue
            if q - A == rho:
                vs = [v for v in range(q) if vmask >> v & 1]
            else:
                vs = [v for v in range(q) if not vmask >> v & 1]
            reps.extend(CosetRep(tail=tail, v=v) for v in vs)
        algorithm = "rep-sweep"
        notes = []
        if out.truncated:
            notes.append("deep-hole list truncated at candidate cap")
    elif algo == "syndrome":
        out = _sweeps.syndrome_bfs(code, mem_budget, want_witness=True)
        if rho is not None and rho != out.rho:
            raise ValueError(f"supplied rho={rho} but BFS found {out.rho}")
        rho = out.rho
        reps = [CosetRep(word=_sweeps.decode_word(ctx, w, code.n))
                for w in (out.witnesses if out.witnesses is not None else [])]
        algorithm = "syndrome-bfs"
        notes = []
    else:
        raise ValueError(f"unknown deep-hole algorithm {algo!r}")

    reps.sort(key=CosetRep.sort_key)
    report = DeepHoleReport(
        code=code.label, rho=rho, count=len(reps), reps=reps,
        algorithm=algorithm, elapsed_ms=(time.perf_counter() - t0) * 1e3,
        notes=notes)
    if kind in ("rs", "prs"):
        fam = _family_reps(code)
        fs, rs = set(fam), set(reps)
        report.family_size = len(fam)
        report.matches_degree_k_family = fs == rs
        report.extras = sorted(rs - fs, key=CosetRep.sort_key)
        report.missing_family = sorted(fs - rs, key=CosetRep.sort_key)
    return report


# ----------------------------------------------------------------------
# nested codes and the RS reduction bound
# ----------------------------------------------------------------------

def nested_max_distance(c1: LinearCode, c2: LinearCode,
                        enum_budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """M(C1, C2) = max over codewords c of C2 of d(c, C1); requires C1 in C2."""
    if c1.ctx != c2.ctx or c1.n != c2.n:
        raise ValueError("codes must share field and length")
    if not all(c2.contains(r) for r in c1.G):
        raise ValueError(f"{c1.label} is not contained in {c2.label}")
    mds1 = is_mds(c1)
    best = 0
    for c in c2.codeword_matrix(enum_budget):
        w = tuple(int(v) for v in c)
        d = (error_distance_mds(c1, w) if mds1
             else error_distance_brute(c1, w, enum_budget))[0]
        best = max(best, d)
    return best


def prs_bound_via_rs(f: Poly, v: int, k: int) -> int:
    """d(u_{f - v*x^(k-1)}, RS(q, k-1)): an upper bound for the distance of
    (u_f, v) to PRS(q+1, k)."""
    ctx = f.ctx
    if k < 2:
        raise ValueError("need k >= 2 so that RS(q, k-1) exists")
    if f.degree != float("-inf") and f.degree > ctx.q - 1:
        raise ValueError("deg f must be <= q-1")
    shift = Poly(ctx, [0] * (k - 1) + [v])
    g = f - shift
    rs = rs_code(ctx, k - 1)
    word = evaluate_word(g, ctx.elements())
    return error_distance_mds(rs, word)[0]
