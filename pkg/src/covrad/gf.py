"""Arithmetic and canonical enumeration for finite fields F_q, q = p^a with p an odd prime.

Field elements are plain Python ints in [0, q).  The int encodes the residue
polynomial in base p: digit i is the coefficient of x^i.  For prime fields
(a = 1) the encoding is just the residue mod p.  0 encodes the zero element
and 1 the multiplicative identity.

The canonical element order is 1, 2, ..., q-1, 0: nonzero elements ascending
by integer encoding, with 0 last.  Every construction in this package
(generator matrices, coset reduction, reports) uses this order.
"""

from __future__ import annotations

import numpy as np

# Full multiplication/inverse lookup tables are precomputed up to this field
# size; the sweep inner loops are table lookups.
TABLE_LIMIT = 1 << 12


def is_prime(n: int) -> bool:
    """Trial-division primality test (fields here are small)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _polymod_mul(u, v, modulus, p):
    """Multiply residue polynomials u, v (digit lists) mod (modulus, p)."""
    prod = [0] * (len(u) + len(v) - 1)
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                prod[i + j] = (prod[i + j] + ui * vj) % p
    # reduce by the monic modulus of degree a
    a = len(modulus) - 1
    for i in range(len(prod) - 1, a - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            for j in range(a):
                prod[i - a + j] = (prod[i - a + j] - c * modulus[j]) % p
    return prod[:a] + [0] * (a - len(prod))


def _poly_divides(divisor, dividend, p):
    """True if monic divisor divides dividend over F_p."""
    rem = list(dividend)
    dd = len(divisor) - 1
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            for j in range(dd + 1):
                rem[i - dd + j] = (rem[i - dd + j] - c * divisor[j]) % p
    return not any(rem)


def _is_irreducible(modulus, p):
    """Trial division against all monic polynomials of degree <= a/2."""
    a = len(modulus) - 1
    if a == 1:
        return True
    if modulus[0] == 0:  # divisible by x
        return False
    for deg in range(1, a // 2 + 1):
        for idx in range(p**deg):
            cand = []
            t = idx
            for _ in range(deg):
                cand.append(t % p)
                t //= p
            cand.append(1)
            if _poly_divides(cand, modulus, p):
                return False
    return True


def smallest_irreducible(p: int, a: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree a over F_p.

    Candidates x^a + c are scanned by ascending integer encoding of the
    non-leading part c (deterministic, reproducible).
    """
    if a == 1:
        return (0, 1)  # the trivial modulus x
    for idx in range(p**a):
        cand = []
        t = idx
        for _ in range(a):
            cand.append(t % p)
            t //= p
        cand.append(1)
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise RuntimeError(f"no irreducible of degree {a} over F_{p}")  # unreachable


class FieldCtx:
    """A finite field F_q, q = p^a with p an odd prime.

    Immutable after construction and safe to share across parallel workers.
    """

    def __init__(self, p: int, a: int = 1, modulus=None):
        if not is_prime(p) or p == 2:
            raise ValueError(f"p not an odd prime: {p}")
        if a < 1:
            raise ValueError(f"extension degree must be >= 1, got {a}")
        self.p = p
        self.a = a
        self.q = p**a
        if modulus is None:
            modulus = smallest_irreducible(p, a)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != a + 1 or modulus[a] != 1:
                raise ValueError(
                    f"modulus must be monic of degree {a}, got {list(modulus)}"
                )
            if a > 1 and not _is_irreducible(list(modulus), p):
                raise ValueError(f"modulus {list(modulus)} is reducible over F_{p}")
        self.modulus = tuple(modulus)

        q, a_, p_ = self.q, self.a, self.p
        digs = np.zeros((q, a_), dtype=np.int64)
        for e in range(q):
            t = e
            for i in range(a_):
                digs[e, i] = t % p_
                t //= p_
        self._digits = digs
        self._enc = p_ ** np.arange(a_, dtype=np.int64)

        if q <= TABLE_LIMIT:
            self._build_tables()
        else:
            self._add_t = self._mul_t = self._neg_t = self._inv_t = None

    def _build_tables(self):
        q, p, a = self.q, self.p, self.a
        d = self._digits
        add = ((d[:, None, :] + d[None, :, :]) % p) @ self._enc
        self._add_t = add.astype(np.int64)
        self._neg_t = (((-d) % p) @ self._enc).astype(np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        mod = list(self.modulus)
        for x in range(q):
            ux = list(d[x])
            for y in range(x, q):
                v = _polymod_mul(ux, list(d[y]), mod, p) if a > 1 else [x * y % p]
                e = int(np.dot(v, self._enc))
                mul[x, y] = e
                mul[y, x] = e
        self._mul_t = mul
        inv = np.zeros(q, dtype=np.int64)
        for x in range(1, q):
            row = mul[x]
            inv[x] = int(np.nonzero(row == 1)[0][0])
        self._inv_t = inv

    # ------------------------------------------------------------------
    # scalar arithmetic
    # ------------------------------------------------------------------
    def add(self, x: int, y: int) -> int:
        if self.a == 1:
            return (x + y) % self.p
        return int(self._add_t[x, y])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def neg(self, x: int) -> int:
        if self.a == 1:
            return (-x) % self.p
        return int(self._neg_t[x])

    def mul(self, x: int, y: int) -> int:
        if self.a == 1:
            return (x * y) % self.p
        if self._mul_t is not None:
            return int(self._mul_t[x, y])
        v = _polymod_mul(list(self.digits(x)), list(self.digits(y)),
                         list(self.modulus), self.p)
        return int(np.dot(v, self._enc))

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of 0 in a finite field")
        if self.a == 1:
            return pow(x, self.p - 2, self.p)
        if self._inv_t is not None:
            return int(self._inv_t[x])
        return self.pow(x, self.q - 2)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def pow(self, x: int, e: int) -> int:
        """x**e with e a nonnegative integer; x**0 == 1."""
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        r = 1
        b = x
        while e:
            if e & 1:
                r = self.mul(r, b)
            b = self.mul(b, b)
            e >>= 1
        return r

    # ------------------------------------------------------------------
    # enumeration and encoding
    # ------------------------------------------------------------------
    def elements(self) -> tuple[int, ...]:
        """All q elements in canonical order: 1, ..., q-1, 0."""
        return tuple(range(1, self.q)) + (0,)

    def nonzero(self) -> tuple[int, ...]:
        return tuple(range(1, self.q))

    def digits(self, e: int) -> tuple[int, ...]:
        """Base-p digit vector of the residue polynomial of e."""
        return tuple(int(v) for v in self._digits[e])

    def undigits(self, digs) -> int:
        return int(np.dot(np.asarray(digs) % self.p, self._enc))

    def digit_table(self) -> np.ndarray:
        """(q, a) int array mapping encoding -> digit vector."""
        return self._digits

    def mul_digit_matrix(self, e: int) -> np.ndarray:
        """(a, a) matrix M over F_p with digits(e*x) = digits(x) @ M."""
        a = self.a
        m = np.zeros((a, a), dtype=np.int64)
        for s in range(a):
            m[s] = self._digits[self.mul(e, self.p**s)]
        return m

    def descriptor(self) -> str:
        """Field descriptor string, e.g. '5^1' or '3^2'."""
        return f"{self.p}^{self.a}"

    # FieldCtx is hashable so per-field caches can key on it.
    def __hash__(self):
        return hash((self.p, self.a, self.modulus))

    def __eq__(self, other):
        return (isinstance(other, FieldCtx)
                and (self.p, self.a, self.modulus) == (other.p, other.a, other.modulus))

    def __repr__(self):
        return f"FieldCtx(F_{self.q} = GF({self.p}^{self.a}))"


_CTX_CACHE: dict[tuple, FieldCtx] = {}


def field_create(p: int, a: int = 1, modulus=None) -> FieldCtx:
    """Create (or fetch a cached) field context for GF(p^a)."""
    key = (p, a, tuple(modulus) if modulus is not None else None)
    ctx = _CTX_CACHE.get(key)
    if ctx is None:
        ctx = FieldCtx(p, a, modulus)
        _CTX_CACHE[key] = ctx
    return ctx


def field_for_size(q: int) -> FieldCtx:
    """Field context for the (unique) field of size q = p^a, default modulus."""
    for p in range(3, q + 1, 2):
        if not is_prime(p):
            continue
        a, t = 0, q
        while t % p == 0:
            t //= p
            a += 1
        if t == 1 and a >= 1:
            return field_create(p, a)
    raise ValueError(f"{q} is not an odd prime power")


def parse_descriptor(text: str) -> FieldCtx:
    """Parse 'p^a' or 'p^a m0,m1,...,1' (modulus coefficients, constant first)."""
    parts = text.strip().split()
    base = parts[0]
    if "^" in base:
        ps, as_ = base.split("^", 1)
        p, a = int(ps), int(as_)
    else:
        p, a = int(base), 1
    modulus = None
    if len(parts) > 1:
        modulus = [int(c) for c in parts[1].split(",")]
    return field_create(p, a, modulus)
