"""Exact arithmetic for GF(p^m) with q = p^m <= 2^16.

Field elements are plain integers in [0, q).  The integer encodes the
coefficient vector of the polynomial-basis representative, base-p
little-endian: index = c_0 + c_1*p + ... + c_{m-1}*p^{m-1}.  Under this
encoding 0 is the zero element, 1 the multiplicative identity, and the
prime subfield occupies indices 0..p-1.

Multiplication runs over exp/log tables keyed to a fixed primitive
element (the smallest generator index).  Addition is digitwise mod p,
which collapses to XOR in characteristic 2.

The default modulus for GF(p^m) is the monic degree-m polynomial with
nonzero constant term and smallest index encoding (same little-endian
base-p encoding as elements) that survives trial division by every
monic polynomial of degree <= m/2.  This reproduces the common choices
x+1 for GF(2), x^2+x+1 for GF(4), x^3+x+1 for GF(8), x^4+x+1 for GF(16).
"""

from __future__ import annotations

import numpy as np

MAX_Q = 1 << 16
# Full q x q kernel tables are only built for fields small enough that
# exhaustive scans are feasible anyway.
MAX_TABLE_Q = 2048


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _digits(idx: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        out.append(idx % p)
        idx //= p
    return out


def _from_digits(digits, p: int) -> int:
    idx = 0
    for c in reversed(digits):
        idx = idx * p + c
    return idx


def _polymod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num modulo den; coefficient lists, constant first."""
    num = list(num)
    dd = len(den) - 1
    dlead = den[-1]
    # den is monic in every call site, but stay general
    dlead_inv = pow(dlead, p - 2, p)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c == 0:
            continue
        f = (c * dlead_inv) % p
        for j in range(dd + 1):
            num[i - dd + j] = (num[i - dd + j] - f * den[j]) % p
    return [c % p for c in num[:dd]]


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(coeffs) - 1
    for d in range(1, m // 2 + 1):
        for idx in range(p**d):
            den = _digits(idx, p, d) + [1]
            if not any(_polymod(coeffs, den, p)):
                return False
    return True


def _default_modulus(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (1, 1)  # x + 1; any monic linear gives plain mod-p arithmetic
    for idx in range(1, p**m):
        if idx % p == 0:  # zero constant term => divisible by x
            continue
        coeffs = _digits(idx, p, m) + [1]
        if _is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


def _factor(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class KernelTables:
    """Dense q x q add/mul tables plus neg/inv vectors for the hot kernels."""

    __slots__ = ("q", "add", "mul", "neg", "inv", "neg_one")

    def __init__(self, ctx: "FieldCtx"):
        q = ctx.q
        if q > MAX_TABLE_Q:
            raise ValueError(f"kernel tables capped at q <= {MAX_TABLE_Q}, got q = {q}")
        self.q = q
        ii = np.arange(q, dtype=np.int32)
        self.add = ctx.add_arr(ii[:, None], ii[None, :]).astype(np.int32)
        self.mul = ctx.mul_arr(ii[:, None], ii[None, :]).astype(np.int32)
        self.neg = ctx.neg_arr(ii).astype(np.int32)
        inv = np.zeros(q, dtype=np.int32)
        inv[1:] = ctx.exp[(q - 1) - ctx.log[ii[1:]]]
        self.inv = inv
        self.neg_one = int(self.neg[1])


class FieldCtx:
    """Immutable context for one concrete GF(p^m)."""

    def __init__(self, p: int, m: int, modulus=None):
        if not is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        q = p**m
        if q > MAX_Q:
            raise ValueError(f"q = {p}^{m} exceeds the supported cap 2^16")
        if modulus is None:
            modulus = _default_modulus(p, m)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {m}")
            if m >= 2 and not _is_irreducible(list(modulus), p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.m = m
        self.q = q
        self.modulus = modulus

        self._build_tables()
        self._tables = None

    # -- construction helpers ------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        """Polynomial-basis product before exp/log tables exist."""
        p, m = self.p, self.m
        if p == 2:
            # carry-less multiply with on-the-fly reduction
            mod_mask = _from_digits(self.modulus[:m], 2)
            res = 0
            top = 1 << m
            while b:
                if b & 1:
                    res ^= a
                b >>= 1
                a <<= 1
                if a & top:
                    a = (a ^ top) ^ mod_mask
            return res
        da = _digits(a, p, m)
        db = _digits(b, p, m)
        conv = [0] * (2 * m - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    conv[i + j] = (conv[i + j] + ca * cb) % p
        return _from_digits(_polymod(conv, list(self.modulus), p), p)

    def _raw_pow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, a)
            a = self._raw_mul(a, a)
            e >>= 1
        return r

    def _find_primitive(self) -> int:
        q = self.q
        if q == 2:
            return 1
        primes = _factor(q - 1)
        for g in range(2, q):
            if all(self._raw_pow(g, (q - 1) // ell) != 1 for ell in primes):
                return g
        raise AssertionError("no primitive element found")

    def _build_tables(self):
        q, p, m = self.q, self.p, self.m
        pi = self._find_primitive()
        exp = np.zeros(max(2 * (q - 1), 1), dtype=np.int32)
        log = np.full(q, -1, dtype=np.int32)
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._raw_mul(x, pi)
        if x != 1:
            raise AssertionError("primitive element has wrong order")
        exp[q - 1 :] = exp[: q - 1]
        self.primitive = pi
        self.exp = exp
        self.log = log

        ii = np.arange(q, dtype=np.int64)
        tr = np.zeros(q, dtype=np.int64)
        y = ii.copy()
        for _ in range(m):
            tr = self.add_arr(tr, y)
            y = self.pow_arr(y, p)
        self.trace_table = tr.astype(np.int32)

    # -- scalar element operations -------------------------------------------

    def _check(self, *elems):
        for a in elems:
            if not 0 <= a < self.q:
                raise ValueError(f"element index {a} out of range for {self.descriptor()}")

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        if self.p == 2:
            return a ^ b
        return int(self.add_arr(np.int64(a), np.int64(b)))

    def neg(self, a: int) -> int:
        self._check(a)
        if self.p == 2:
            return a
        p = self.p
        return _from_digits([(-c) % p for c in _digits(a, p, self.m)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        if a == 0 or b == 0:
            return 0
        return int(self.exp[self.log[a] + self.log[b]])

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return int(self.exp[(self.q - 1) - self.log[a]])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a^e for integer e >= 0, with the convention 0^0 = 1."""
        self._check(a)
        if e < 0:
            raise ValueError("negative exponent; invert explicitly")
        if a == 0:
            return 1 if e == 0 else 0
        if self.q == 2:
            return a
        return int(self.exp[(int(self.log[a]) * e) % (self.q - 1)])

    def trace(self, a: int) -> int:
        """Absolute trace into the prime subfield (result index < p)."""
        self._check(a)
        return int(self.trace_table[a])

    def quadratic_character(self, a: int) -> int:
        """eta(a) in {-1, 0, +1}; only defined in odd characteristic."""
        if self.p == 2:
            raise ValueError("quadratic character undefined in characteristic 2")
        self._check(a)
        if a == 0:
            return 0
        return 1 if int(self.log[a]) % 2 == 0 else -1

    def elements(self):
        """All q elements in ascending index order (0 first, 1 second)."""
        return range(self.q)

    # -- vectorized operations on numpy index arrays ---------------------------

    def add_arr(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.m):
            d = ((a // scale) % p + (b // scale) % p) % p
            out += d * scale
            scale *= p
        return out

    def sub_arr(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self.add_arr(a, self.neg_arr(b))

    def neg_arr(self, a):
        if self.p == 2:
            return np.asarray(a)
        p = self.p
        out = np.zeros(np.asarray(a).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.m):
            d = (p - (a // scale) % p) % p
            out += d * scale
            scale *= p
        return out

    def mul_arr(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        la = self.log[a]
        lb = self.log[b]
        out = self.exp[(la + lb) % (self.q - 1) if self.q > 2 else la * 0].astype(np.int64)
        return np.where((a == 0) | (b == 0), 0, out)

    def pow_arr(self, a, e: int):
        a = np.asarray(a, dtype=np.int64)
        if e == 0:
            return np.ones_like(a)
        if self.q == 2:
            return a.copy()
        out = self.exp[(self.log[a].astype(np.int64) * e) % (self.q - 1)].astype(np.int64)
        return np.where(a == 0, 0, out)

    # -- misc ------------------------------------------------------------------

    def tables(self) -> KernelTables:
        if self._tables is None:
            self._tables = KernelTables(self)
        return self._tables

    def descriptor(self) -> str:
        coeffs = "".join(str(c) for c in self.modulus) if self.p <= 10 else ",".join(
            str(c) for c in self.modulus
        )
        return f"{self.p}^{self.m}/{coeffs}"

    def __repr__(self):
        return f"FieldCtx(GF({self.q}) = {self.descriptor()})"

    def __eq__(self, other):
        return (
            isinstance(other, FieldCtx)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))


def make_field(p: int, m: int, modulus=None) -> FieldCtx:
    """Construct GF(p^m) with a verified-irreducible modulus."""
    return FieldCtx(p, m, modulus)


def parse_field_spec(spec: str) -> FieldCtx:
    """Parse 'p^m' or 'p^m/coeffs' (constant term first, e.g. 2^3/1101)."""
    body, _, mod = spec.partition("/")
    if "^" in body:
        ps, _, ms = body.partition("^")
        p, m = int(ps), int(ms)
    else:
        p, m = int(body), 1
    modulus = None
    if mod:
        if "," in mod:
            modulus = tuple(int(c) for c in mod.split(","))
        else:
            modulus = tuple(int(c) for c in mod)
    return make_field(p, m, modulus)


def enumerate_field(ctx: FieldCtx):
    """Ascending, deterministic ordering of all q elements."""
    return list(ctx.elements())
