"""Linear code construction: RS, PRS, the Glynn [10,5] code over F_9, custom
generator matrices, parity checks, minimum distance, MDS verification, and
the one-row extension construction."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import _linops
from .gf import FieldCtx, parse_descriptor
from .poly import weight

DEFAULT_ENUM_BUDGET = 10**8


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    d: int
    mds: bool


class LinearCode:
    """A linear [n, k] code given by a full-rank generator matrix over F_q.

    Immutable after construction.  `structure` records how the code was
    built ('rs', 'prs', 'glynn' or 'generic'); the distance machinery uses
    it to pick coset parameterizations.
    """

    def __init__(self, ctx: FieldCtx, rows, label: str = "", structure=None):
        rows = [tuple(int(v) % ctx.q for v in r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("empty generator matrix")
        n = len(rows[0])
        if any(len(r) != n for r in rows):
            raise ValueError("ragged generator matrix")
        k = len(rows)
        if not 0 < k <= n:
            raise ValueError(f"need 0 < k <= n, got k={k}, n={n}")
        if _linops.mat_rank(ctx, rows) != k:
            raise ValueError("generator matrix is rank-deficient")
        self.ctx = ctx
        self.n = n
        self.k = k
        self.G = tuple(rows)
        self.H = tuple(tuple(r) for r in _parity_check(ctx, rows))
        self.label = label or f"[{n},{k}]/F_{ctx.q}"
        self.structure = structure or {"kind": "generic"}
        self._d = None
        self._mds = None
        self._subset_stack = None

    # ------------------------------------------------------------------
    def encode(self, message) -> tuple:
        """Codeword for a length-k message vector."""
        ctx = self.ctx
        out = [0] * self.n
        for i, m in enumerate(message):
            if m:
                row = self.G[i]
                for j in range(self.n):
                    if row[j]:
                        out[j] = ctx.add(out[j], ctx.mul(m, row[j]))
        return tuple(out)

    def syndrome(self, word) -> tuple:
        ctx = self.ctx
        out = []
        for row in self.H:
            s = 0
            for a, b in zip(word, row):
                if a and b:
                    s = ctx.add(s, ctx.mul(a, b))
            out.append(s)
        return tuple(out)

    def contains(self, word) -> bool:
        if len(word) != self.n:
            raise ValueError(f"word length {len(word)} != n={self.n}")
        return all(s == 0 for s in self.syndrome(word))

    def codewords(self):
        """Iterate all q^k codewords in message-vector order."""
        ctx = self.ctx
        for msg in itertools.product(range(ctx.q), repeat=self.k):
            yield self.encode(msg)

    def codeword_matrix(self, enum_budget: int = DEFAULT_ENUM_BUDGET) -> np.ndarray:
        """All codewords as a (q^k, n) int array, message-vector order."""
        ctx = self.ctx
        total = ctx.q**self.k
        if total > enum_budget:
            raise ValueError(
                f"q^k = {total} codewords exceeds enumeration budget {enum_budget}")
        gd = _linops.digit_expand(ctx, self.G).astype(np.float64)
        # message-vector order: last component varies fastest
        msgs = _linops.mixed_radix(np.arange(total), ctx.q, self.k)[:, ::-1]
        md = ctx.digit_table()[msgs].reshape(total, self.k * ctx.a).astype(np.float64)
        vals = (md @ gd) % ctx.p
        return _linops.digit_decode_cols(ctx, vals.astype(np.int64), self.n)

    def params(self, enum_budget: int = DEFAULT_ENUM_BUDGET) -> CodeParams:
        d = min_distance(self, enum_budget)
        return CodeParams(self.n, self.k, d, d == self.n - self.k + 1)

    def __repr__(self):
        return f"LinearCode({self.label})"


def _parity_check(ctx: FieldCtx, rows):
    """(n-k) x n parity-check matrix via row reduction and back-permutation."""
    n, k = len(rows[0]), len(rows)
    red, piv = _linops.mat_rref(ctx, rows)
    free = [j for j in range(n) if j not in piv]
    h = []
    for fj in free:
        row = [0] * n
        row[fj] = 1
        for r, pj in enumerate(piv):
            row[pj] = ctx.neg(red[r][fj])
        h.append(row)
    return h


# ----------------------------------------------------------------------
# constructors
# ----------------------------------------------------------------------

def rs_code(ctx: FieldCtx, k: int, evalset=None) -> LinearCode:
    """RS code: evaluations of all polynomials of degree < k at the points
    of the (ordered, distinct) evaluation set; defaults to all of F_q in
    canonical order."""
    D = tuple(evalset) if evalset is not None else ctx.elements()
    if len(set(D)) != len(D):
        raise ValueError("evaluation set has duplicate points")
    n = len(D)
    if n > ctx.q or any(not 0 <= x < ctx.q for x in D):
        raise ValueError("evaluation set must consist of distinct field elements")
    if not 0 < k < n:
        raise ValueError(f"need 0 < k < |D|, got k={k}, |D|={n}")
    rows = [[ctx.pow(x, i) for x in D] for i in range(k)]
    full = D == ctx.elements()
    label = f"RS({n},{k})/F_{ctx.q}" if full else f"RS(D[{n}],{k})/F_{ctx.q}"
    return LinearCode(ctx, rows, label,
                      {"kind": "rs", "k": k, "eval": D, "full_field": full})


def prs_code(ctx: FieldCtx, k: int) -> LinearCode:
    """Projective RS code [q+1, k]: RS(q,k) evaluations plus one coordinate
    carrying the degree-(k-1) coefficient; columns follow the canonical
    element order (0 last), final column (0,...,0,1)^T."""
    q = ctx.q
    if not 1 <= k <= q:
        raise ValueError(f"need 1 <= k <= q, got k={k}")
    D = ctx.elements()
    rows = [[ctx.pow(x, i) for x in D] + [0] for i in range(k)]
    rows[k - 1][q] = 1
    return LinearCode(ctx, rows, f"PRS({q + 1},{k})/F_{q}",
                      {"kind": "prs", "k": k, "eval": D})


def glynn_code(ctx: FieldCtx, w: int | None = None) -> LinearCode:
    """The [10, 5] MDS code over F_9 with third row alpha^2 + w*alpha^6.

    Requires w^4 = -1 (w is one of the four order-8 elements); every such w
    yields a [10, 5, 6] MDS code, and exhaustive checking shows no other w
    does.  Defaults to the smallest valid encoding.  Column order is the
    canonical element order (radius and distance are order-invariant).
    """
    if (ctx.p, ctx.a) != (3, 2):
        raise ValueError(f"Glynn construction needs F_9, got F_{ctx.q}")
    if w is None:
        w = next(e for e in ctx.elements() if ctx.add(ctx.pow(e, 4), 1) == 0)
    if ctx.add(ctx.pow(w, 4), 1) != 0:
        raise ValueError(
            f"invalid parameter w={w}: need w^4 = -1 (w of multiplicative "
            "order 8), otherwise the construction is not MDS")
    D = ctx.elements()
    rows = [
        [1] * 9 + [0],
        list(D) + [0],
        [ctx.add(ctx.pow(x, 2), ctx.mul(w, ctx.pow(x, 6))) for x in D] + [0],
        [ctx.pow(x, 3) for x in D] + [0],
        [ctx.pow(x, 4) for x in D] + [1],
    ]
    return LinearCode(ctx, rows, f"Glynn(10,5;w={w})/F_9",
                      {"kind": "glynn", "w": w, "eval": D})


def from_matrix(ctx: FieldCtx, rows, label: str = "") -> LinearCode:
    """Code with the given (linearly independent) generator rows."""
    return LinearCode(ctx, rows, label)


def extend_code(code: LinearCode, word, tail: int = 1) -> LinearCode:
    """[n+1, k+1] code: rows of G each appended with 0, plus row (word | tail).

    Requires word not in the code; used to test whether a word at maximal
    distance could extend the code to a longer MDS code.
    """
    if code.contains(word):
        raise ValueError("word is in the code; extension would be rank-deficient")
    rows = [list(r) + [0] for r in code.G]
    rows.append(list(word) + [tail])
    return LinearCode(code.ctx, rows, f"{code.label}+w")


# ----------------------------------------------------------------------
# parameters
# ----------------------------------------------------------------------

def min_distance(code: LinearCode, enum_budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Exact minimum weight over all nonzero codewords (exhaustive)."""
    if code._d is not None:
        return code._d
    ctx = code.ctx
    total = ctx.q**code.k
    if total > enum_budget:
        raise ValueError(
            f"q^k = {total} exceeds enumeration budget {enum_budget}; "
            "use is_mds for the Singleton check or raise the budget")
    if total <= 4096:
        d = min(weight(c) for c in code.codewords() if any(c))
    else:
        gd = _linops.digit_expand(ctx, code.G).astype(np.float64)
        dt = ctx.digit_table()
        best = code.n
        chunk = 1 << 16
        for start in range(1, total, chunk):
            idx = np.arange(start, min(start + chunk, total))
            msgs = _linops.mixed_radix(idx, ctx.q, code.k)
            md = dt[msgs].reshape(len(idx), code.k * ctx.a).astype(np.float64)
            vals = (md @ gd) % ctx.p
            nz = vals.reshape(len(idx), code.n, ctx.a).any(axis=2)
            best = min(best, int(nz.sum(axis=1).min()))
        d = best
    code._d = d
    return d


def is_mds(code: LinearCode) -> bool:
    """True iff every k-column subset of G is invertible (d = n-k+1)."""
    if code._mds is not None:
        return code._mds
    ctx = code.ctx
    cols = list(zip(*code.G))
    ok = True
    for sub in itertools.combinations(range(code.n), code.k):
        square = [[cols[j][i] for j in sub] for i in range(code.k)]
        if _linops.mat_rank(ctx, square) != code.k:
            ok = False
            break
    code._mds = ok
    return ok


def codes_equal(c1: LinearCode, c2: LinearCode) -> bool:
    """Equality as codeword sets (same row space over the same field)."""
    if c1.ctx != c2.ctx or c1.n != c2.n or c1.k != c2.k:
        return False
    return all(c2.contains(r) for r in c1.G) and all(c1.contains(r) for r in c2.G)


# ----------------------------------------------------------------------
# code-spec files
# ----------------------------------------------------------------------

def export_code_spec(code: LinearCode) -> str:
    """Text format: field descriptor line, then one generator row per line."""
    ctx = code.ctx
    lines = [ctx.descriptor() if ctx.a == 1
             else f"{ctx.descriptor()} {','.join(str(c) for c in ctx.modulus)}"]
    for row in code.G:
        lines.append(",".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def parse_code_spec(text: str, label: str = "from-file") -> LinearCode:
    """Parse a code-spec file; raises ValueError with line-numbered messages."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [(i + 1, ln) for i, ln in enumerate(lines) if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("line 1: empty code-spec file")
    lineno, desc = lines[0]
    try:
        ctx = parse_descriptor(desc)
    except ValueError as e:
        raise ValueError(f"line {lineno}: {e}") from None
    rows = []
    for lineno, ln in lines[1:]:
        try:
            row = [int(t) for t in ln.split(",")]
        except ValueError:
            raise ValueError(f"line {lineno}: malformed row {ln!r}") from None
        bad = [v for v in row if not 0 <= v < ctx.q]
        if bad:
            raise ValueError(
                f"line {lineno}: element encoding {bad[0]} out of range [0, {ctx.q})")
        rows.append(row)
    if not rows:
        raise ValueError(f"line {lineno}: no generator rows")
    try:
        return LinearCode(ctx, rows, label)
    except ValueError as e:
        raise ValueError(f"line {lines[1][0]}: {e}") from None
