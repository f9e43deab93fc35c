"""Twisted Reed-Solomon codes: matrices, syndromes, and exhaustive oracles.

A twisted RS code evaluates the span of 1, x, ..., x^{k-2}, x^{k-1} + theta x^k
on a set A of distinct points; theta = None degrades to the plain RS code
(the oracle construction).  For the full-length code (A = all of GF(q) in
ascending index order) the parity-check matrix has rows
1, x, ..., x^{r-2}, x^{r-1} - theta x^r with r = q - k; for other A the
parity check is derived by nullspace elimination and flagged as such.

The distance-side operations are deliberately naive and exact: error
distance enumerates every codeword, the covering radius enumerates every
syndrome coset and scans the code once per coset (reduced by the scaling
invariance of coset weights).  They are the independent ground truth the
deep-hole criteria are checked against, so they must not share logic
with the determinant route.
"""

from __future__ import annotations

import numpy as np

from trslab import budget, kernels
from trslab.errors import BudgetExceeded
from trslab.field import FieldCtx, parse_field_spec
from trslab.polyops import nullspace

MAX_MATRIX_ENTRIES = 1 << 22


class TwistedRSCode:
    """Immutable code instance; use make_trs / make_rs to construct."""

    def __init__(self, ctx: FieldCtx, A, k: int, theta):
        A = [int(a) for a in A]
        n = len(A)
        ctx._check(*A)
        if len(set(A)) != n:
            raise ValueError("evaluation points must be pairwise distinct")
        if not 1 < k < n:
            raise ValueError(f"dimension must satisfy 1 < k < n, got k={k}, n={n}")
        if theta is not None:
            ctx._check(theta)
            if theta == 0:
                raise ValueError(
                    "theta = 0 gives the plain Reed-Solomon code; use make_rs"
                )
        if n * max(k, n - k) > MAX_MATRIX_ENTRIES:
            raise BudgetExceeded(n * max(k, n - k), MAX_MATRIX_ENTRIES, "code construction")
        self.ctx = ctx
        self.A = tuple(A)
        self.k = k
        self.theta = theta
        self.n = n
        self.r = n - k
        self.full_length = self.A == tuple(range(ctx.q))
        self.G = self._generator()
        self.H, self.h_derived = self._parity_check()
        self._assert_orthogonal()
        self._codewords = None

    @property
    def twisted(self) -> bool:
        return self.theta is not None

    def _generator(self) -> np.ndarray:
        ctx = self.ctx
        alphas = np.array(self.A, dtype=np.int64)
        rows = [ctx.pow_arr(alphas, e) for e in range(self.k)]
        if self.twisted:
            twist = ctx.mul_arr(np.int64(self.theta), ctx.pow_arr(alphas, self.k))
            rows[self.k - 1] = ctx.add_arr(rows[self.k - 1], twist)
        return np.stack(rows)

    def _parity_check(self):
        ctx = self.ctx
        if self.full_length:
            alphas = np.array(self.A, dtype=np.int64)
            rows = [ctx.pow_arr(alphas, e) for e in range(self.r)]
            if self.twisted:
                twist = ctx.mul_arr(np.int64(self.theta), ctx.pow_arr(alphas, self.r))
                rows[self.r - 1] = ctx.add_arr(rows[self.r - 1], ctx.neg_arr(twist))
            return np.stack(rows), False
        return nullspace(ctx, self.G), True

    def _assert_orthogonal(self):
        ctx = self.ctx
        for i in range(self.r):
            prod = ctx.mul_arr(self.G, self.H[i][None, :])
            if np.any(_sum_field(ctx, prod, axis=1)):
                raise AssertionError("parity-check construction failed: G H^T != 0")

    def codewords(self) -> np.ndarray:
        """The full q^k x n codeword matrix (cached); subject to the fixed cap."""
        if self.ctx.q**self.k > budget.ERROR_DISTANCE_CAP:
            raise BudgetExceeded(
                self.ctx.q**self.k, budget.ERROR_DISTANCE_CAP, "codeword enumeration"
            )
        if self._codewords is None:
            self._codewords = kernels.enumerate_codewords(self.ctx.tables(), self.G)
        return self._codewords

    def descriptor(self) -> str:
        kind = "trs" if self.twisted else "rs"
        a = "full" if self.full_length else ",".join(str(x) for x in self.A)
        theta = f":theta={self.theta}" if self.twisted else ""
        return f"{kind}:q={self.ctx.p}^{self.ctx.m}:k={self.k}{theta}:A={a}"

    def __repr__(self):
        return f"TwistedRSCode({self.descriptor()})"


def _sum_field(ctx: FieldCtx, arr, axis):
    if ctx.p == 2:
        return np.bitwise_xor.reduce(arr, axis=axis)
    out = 0
    scale = 1
    for _ in range(ctx.m):
        d = (arr // scale) % ctx.p
        out = out + (d.sum(axis=axis) % ctx.p) * scale
        scale *= ctx.p
    return out


def make_trs(ctx: FieldCtx, A, k: int, theta: int) -> TwistedRSCode:
    """Twisted RS code; rejects theta = 0 (that would be the plain RS code)."""
    if theta == 0:
        raise ValueError("theta = 0 gives the plain Reed-Solomon code; use make_rs")
    return TwistedRSCode(ctx, A, k, theta)


def make_rs(ctx: FieldCtx, A, k: int) -> TwistedRSCode:
    """Plain RS code, used as the untwisted oracle."""
    return TwistedRSCode(ctx, A, k, None)


def full_field_code(ctx: FieldCtx, k: int, theta: int) -> TwistedRSCode:
    return make_trs(ctx, range(ctx.q), k, theta)


def encode(code: TwistedRSCode, message) -> np.ndarray:
    message = np.asarray(list(message), dtype=np.int64)
    if message.size != code.k:
        raise ValueError(f"message must have length k = {code.k}")
    prod = code.ctx.mul_arr(message[:, None], code.G)
    return _sum_field(code.ctx, prod, axis=0)


def syndrome(code: TwistedRSCode, u) -> np.ndarray:
    """H u^T for the full-length parity check; constant on cosets."""
    if not code.full_length:
        raise ValueError("syndrome requires the full-length code (paper parity check)")
    u = np.asarray(list(u), dtype=np.int64)
    if u.size != code.n:
        raise ValueError(f"word must have length n = {code.n}")
    prod = code.ctx.mul_arr(code.H, u[None, :])
    return _sum_field(code.ctx, prod, axis=1)


def word_from_syndrome(code: TwistedRSCode, w) -> np.ndarray:
    """The coset representative generated by -sum_i w_i x^(q-1-i)."""
    if not code.full_length:
        raise ValueError("word_from_syndrome requires the full-length code")
    ctx = code.ctx
    w = [int(x) for x in w]
    if len(w) != code.r:
        raise ValueError(f"syndrome must have length r = {code.r}")
    alphas = np.arange(ctx.q, dtype=np.int64)
    out = np.zeros(ctx.q, dtype=np.int64)
    for i, wi in enumerate(w):
        if wi == 0:
            continue
        term = ctx.mul_arr(np.int64(ctx.neg(wi)), ctx.pow_arr(alphas, ctx.q - 1 - i))
        out = ctx.add_arr(out, term)
    return out


def _codeword_blocks(code: TwistedRSCode, block: int = 1 << 16):
    """Stream codewords in message-index order without materializing all."""
    ctx = code.ctx
    q, k = ctx.q, code.k
    total = q**k
    for start in range(0, total, block):
        idx = np.arange(start, min(start + block, total), dtype=np.int64)
        acc = np.zeros((idx.size, code.n), dtype=np.int64)
        for i in range(k):
            d = (idx // q**i) % q
            acc = ctx.add_arr(acc, ctx.mul_arr(d[:, None], code.G[i][None, :]))
        yield start, acc


def error_distances(code: TwistedRSCode, words) -> np.ndarray:
    """Exact distance to the code for each word, by full codeword enumeration."""
    q, k = code.ctx.q, code.k
    if q**k > budget.ERROR_DISTANCE_CAP:
        raise BudgetExceeded(q**k, budget.ERROR_DISTANCE_CAP, "error distance")
    words = np.asarray(words, dtype=np.int64)
    if words.ndim != 2 or words.shape[1] != code.n:
        raise ValueError("words must be a 2-D array of length-n rows")
    if q**k * code.n <= (1 << 24):
        return kernels.min_hamming(words, code.codewords())
    out = np.full(words.shape[0], code.n + 1, dtype=np.int64)
    for _, block in _codeword_blocks(code):
        np.minimum(out, kernels.min_hamming(words, block), out=out)
    return out


def error_distance(code: TwistedRSCode, u) -> int:
    return int(error_distances(code, np.asarray(list(u), dtype=np.int64)[None, :])[0])


def min_distance(code: TwistedRSCode) -> int:
    """Minimum weight over nonzero codewords, by enumeration."""
    q, k = code.ctx.q, code.k
    if q**k > budget.ERROR_DISTANCE_CAP:
        raise BudgetExceeded(q**k, budget.ERROR_DISTANCE_CAP, "minimum distance")
    best = code.n + 1
    for start, block in _codeword_blocks(code):
        weights = (block != 0).sum(axis=1)
        if start == 0:
            weights = weights[1:]  # skip the zero codeword
        if weights.size:
            best = min(best, int(weights.min()))
    return best


def syndrome_class_reps(ctx: FieldCtx, r: int) -> np.ndarray:
    """Canonical representative of every nonzero syndrome class: the first
    nonzero coordinate is scaled to 1.  (q^r - 1)/(q - 1) rows, ascending."""
    q = ctx.q
    reps = []
    for lead in range(r):
        tail = r - lead - 1
        count = q**tail
        block = np.zeros((count, r), dtype=np.int64)
        block[:, lead] = 1
        idx = np.arange(count)
        for j in range(tail):
            block[:, lead + 1 + j] = (idx // q ** (tail - 1 - j)) % q
        reps.append(block)
    return np.concatenate(reps, axis=0)


def _solve_syndrome_transform(code: TwistedRSCode):
    """Pivot columns P and matrix U with H[:, P] @ U = I, for coset reps."""
    ctx = code.ctx
    a = code.H.astype(np.int64).copy()
    r, n = a.shape
    aug = np.concatenate([a, np.eye(r, dtype=np.int64)], axis=1)
    pivots = []
    row = 0
    for c in range(n):
        piv = -1
        for rr in range(row, r):
            if aug[rr, c] != 0:
                piv = rr
                break
        if piv < 0:
            continue
        aug[[row, piv]] = aug[[piv, row]]
        pinv = ctx.inv(int(aug[row, c]))
        for cc in range(n + r):
            aug[row, cc] = ctx.mul(int(aug[row, cc]), pinv)
        for rr in range(r):
            if rr != row and aug[rr, c] != 0:
                f = int(aug[rr, c])
                for cc in range(n + r):
                    aug[rr, cc] = ctx.sub(int(aug[rr, cc]), ctx.mul(f, int(aug[row, cc])))
        pivots.append(c)
        row += 1
        if row == r:
            break
    if row < r:
        raise AssertionError("parity-check matrix is not full rank")
    U = aug[:, n:]
    return pivots, U


def coset_representatives(code: TwistedRSCode, syndromes: np.ndarray) -> np.ndarray:
    """One word per syndrome row, satisfying H u^T = w."""
    ctx = code.ctx
    syndromes = np.asarray(syndromes, dtype=np.int64)
    if code.full_length:
        out = np.zeros((syndromes.shape[0], code.n), dtype=np.int64)
        alphas = np.arange(ctx.q, dtype=np.int64)
        powers = np.stack([ctx.pow_arr(alphas, ctx.q - 1 - i) for i in range(code.r)])
        for i in range(code.r):
            coef = ctx.neg_arr(syndromes[:, i])
            out = ctx.add_arr(out, ctx.mul_arr(coef[:, None], powers[i][None, :]))
        return out
    pivots, U = _solve_syndrome_transform(code)
    # u restricted to the pivot columns is U w, since H[:, pivots] = U^{-1}
    prods = ctx.mul_arr(syndromes[:, None, :], U[None, :, :])
    vals = _sum_field(ctx, prods, axis=2)
    out = np.zeros((syndromes.shape[0], code.n), dtype=np.int64)
    for j, c in enumerate(pivots):
        out[:, c] = vals[:, j]
    return out


def covering_radius(code: TwistedRSCode, max_ops: int | None = None) -> int:
    """Max over cosets of the minimum coset weight, scanning the whole code
    once per coset class (scaling a coset permutes weights, so one class
    representative per projective syndrome suffices)."""
    q = code.ctx.q
    estimate = q**code.n  # spec cost model: q^(n-k) cosets x q^k codewords
    cap = budget.resolve(max_ops, budget.DEFAULT_COVERING_BUDGET)
    if estimate > cap:
        raise BudgetExceeded(estimate, cap, "covering radius")
    reps_w = syndrome_class_reps(code.ctx, code.r)
    words = coset_representatives(code, reps_w)
    dists = error_distances(code, words)
    return int(dists.max())


def is_mds(ctx: FieldCtx, M) -> bool:
    """True iff every maximal square minor of the s x n matrix is nonsingular."""
    from itertools import combinations

    M = np.asarray(M, dtype=np.int64)
    s, n = M.shape
    if s > n:
        raise ValueError("need rows <= cols")
    tables = ctx.tables()
    combos = list(combinations(range(n), s))
    block = 4096
    for start in range(0, len(combos), block):
        chunk = combos[start : start + block]
        stack = np.stack([M[:, list(c)] for c in chunk])
        dets = kernels.det_batch(tables, stack)
        if (dets == 0).any():
            return False
    return True


def parse_code_descriptor(desc: str) -> TwistedRSCode:
    """Parse 'trs:q=<p^m>:k=<k>:theta=<idx>:A=<full|csv>' (or 'rs:' without theta)."""
    parts = desc.split(":")
    if not parts or parts[0] not in ("trs", "rs"):
        raise ValueError(f"unknown code descriptor {desc!r}")
    kv = {}
    for part in parts[1:]:
        key, _, val = part.partition("=")
        kv[key] = val
    ctx = parse_field_spec(kv["q"])
    k = int(kv["k"])
    a_field = kv.get("A", "full")
    A = range(ctx.q) if a_field == "full" else [int(x) for x in a_field.split(",")]
    if parts[0] == "rs":
        return make_rs(ctx, A, k)
    return make_trs(ctx, A, k, int(kv["theta"]))
