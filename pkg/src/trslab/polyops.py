"""Polynomials and exact linear algebra over GF(q).

Polynomials are lists of element indices, constant term first, with no
trailing zeros in normalized form (the zero polynomial is the empty
list, degree -1 standing in for -infinity).  Matrices are 2-D numpy
arrays of element indices alongside the owning FieldCtx.

Besides the generic determinant this module carries the closed-form
determinant identities used throughout the deep-hole machinery: the
power-row Vandermonde variants, the twisted-column determinant
V * (1 - theta * sum), and the characteristic-2 quadratic/vanishing
forms built from elementary symmetric functions of the column points.
"""

from __future__ import annotations

import numpy as np

from trslab.field import FieldCtx


# ---------------------------------------------------------------------------
# polynomial arithmetic
# ---------------------------------------------------------------------------


def poly_normalize(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_degree(f) -> int:
    """Degree; -1 encodes the zero polynomial."""
    return len(poly_normalize(f)) - 1


def poly_add(ctx: FieldCtx, f, g):
    n = max(len(f), len(g))
    out = []
    for i in range(n):
        a = f[i] if i < len(f) else 0
        b = g[i] if i < len(g) else 0
        out.append(ctx.add(a, b))
    return poly_normalize(out)


def poly_scale(ctx: FieldCtx, c: int, f):
    return poly_normalize([ctx.mul(c, a) for a in f])


def poly_mul(ctx: FieldCtx, f, g):
    f, g = poly_normalize(f), poly_normalize(g)
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = ctx.add(out[i + j], ctx.mul(a, b))
    return poly_normalize(out)


def poly_eval(ctx: FieldCtx, f, x: int) -> int:
    acc = 0
    for c in reversed(list(f)):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


def poly_eval_many(ctx: FieldCtx, f, xs) -> np.ndarray:
    """Horner evaluation at a numpy vector of points."""
    xs = np.asarray(xs, dtype=np.int64)
    acc = np.zeros_like(xs)
    for c in reversed(list(f)):
        acc = ctx.add_arr(ctx.mul_arr(acc, xs), np.int64(c))
    return acc


def poly_interpolate(ctx: FieldCtx, points, values):
    """Unique interpolant of degree < n through n distinct points (Newton form)."""
    points = list(points)
    values = list(values)
    n = len(points)
    if len(values) != n:
        raise ValueError("points and values must have equal length")
    if len(set(points)) != n:
        raise ValueError("interpolation points must be pairwise distinct")
    dd = list(values)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = ctx.sub(dd[i], dd[i - 1])
            den = ctx.sub(points[i], points[i - j])
            dd[i] = ctx.div(num, den)
    # Horner on the Newton basis
    poly = [dd[n - 1]]
    for i in range(n - 2, -1, -1):
        poly = poly_mul(ctx, poly, [ctx.neg(points[i]), 1])
        poly = poly_add(ctx, poly, [dd[i]])
    return poly_normalize(poly)


def elementary_symmetric(ctx: FieldCtx, xs):
    """Coefficients S_0..S_n of prod(X - x_i), so S_n = 1.

    These are the signed elementary symmetric functions; S_i vanishes
    for indices outside 0..n (callers use sym_at for guarded access).
    """
    coeffs = [1]
    for x in xs:
        nx = ctx.neg(x)
        new = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] = ctx.add(new[i + 1], c)
            new[i] = ctx.add(new[i], ctx.mul(nx, c))
        coeffs = new
    return coeffs


def sym_at(S, i: int) -> int:
    return S[i] if 0 <= i < len(S) else 0


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------


def det(ctx: FieldCtx, M) -> int:
    """Exact determinant by Gaussian elimination, first-nonzero pivot."""
    M = np.asarray(M, dtype=np.int64)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("determinant requires a square matrix")
    a = M.copy()
    n = a.shape[0]
    d = 1
    for col in range(n):
        piv = -1
        for row in range(col, n):
            if a[row, col] != 0:
                piv = row
                break
        if piv < 0:
            return 0
        if piv != col:
            a[[col, piv]] = a[[piv, col]]
            d = ctx.mul(d, ctx.neg(1))
        pv = int(a[col, col])
        d = ctx.mul(d, pv)
        pinv = ctx.inv(pv)
        for row in range(col + 1, n):
            f = ctx.mul(int(a[row, col]), pinv)
            if f:
                for cc in range(col, n):
                    a[row, cc] = ctx.sub(int(a[row, cc]), ctx.mul(f, int(a[col, cc])))
    return d


def det_cofactor(ctx: FieldCtx, M) -> int:
    """Laplace expansion along the first row; independent oracle for det."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[0]
    if n == 0:
        return 1
    if n == 1:
        return int(M[0, 0])
    total = 0
    sign = 1
    for j in range(n):
        c = int(M[0, j])
        if c != 0:
            minor = np.delete(M[1:], j, axis=1)
            term = ctx.mul(c, det_cofactor(ctx, minor))
            total = ctx.add(total, term if sign > 0 else ctx.neg(term))
        sign = -sign
    return total


def nullspace(ctx: FieldCtx, M) -> np.ndarray:
    """Basis (rows) of the right nullspace of M over GF(q)."""
    a = np.asarray(M, dtype=np.int64).copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        piv = -1
        for row in range(r, rows):
            if a[row, c] != 0:
                piv = row
                break
        if piv < 0:
            continue
        a[[r, piv]] = a[[piv, r]]
        pinv = ctx.inv(int(a[r, c]))
        for cc in range(cols):
            a[r, cc] = ctx.mul(int(a[r, cc]), pinv)
        for row in range(rows):
            if row != r and a[row, c] != 0:
                f = int(a[row, c])
                for cc in range(cols):
                    a[row, cc] = ctx.sub(int(a[row, cc]), ctx.mul(f, int(a[r, cc])))
        pivots.append(c)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = ctx.neg(int(a[ri, fc]))
    return basis


# ---------------------------------------------------------------------------
# Vandermonde-style closed forms
# ---------------------------------------------------------------------------


def vandermonde_det(ctx: FieldCtx, xs) -> int:
    """V(x_1..x_n) = prod_{i<j} (x_j - x_i); empty/singleton products are 1."""
    xs = list(xs)
    v = 1
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            v = ctx.mul(v, ctx.sub(xs[j], xs[i]))
    return v


def vandermonde_variant_matrix(ctx: FieldCtx, xs, last_exp: int) -> np.ndarray:
    """Rows x^0..x^{n-2} plus a final row x^last_exp, evaluated at xs."""
    xs = np.asarray(list(xs), dtype=np.int64)
    n = xs.size
    exps = list(range(n - 1)) + [last_exp]
    return np.stack([ctx.pow_arr(xs, e) for e in exps])


def vandermonde_variant_det(ctx: FieldCtx, xs, last_exp: int) -> int:
    """Closed form of the det of vandermonde_variant_matrix.

    last_exp = n-1 gives V; n gives V * sum(x_i); n+1 gives
    V * sum_{i<=j} x_i x_j.
    """
    xs = list(xs)
    n = len(xs)
    v = vandermonde_det(ctx, xs)
    if last_exp == n - 1:
        return v
    if last_exp == n:
        s = 0
        for x in xs:
            s = ctx.add(s, x)
        return ctx.mul(v, s)
    if last_exp == n + 1:
        s = 0
        for i in range(n):
            for j in range(i, n):
                s = ctx.add(s, ctx.mul(xs[i], xs[j]))
        return ctx.mul(v, s)
    raise ValueError("closed form known only for last_exp in {n-1, n, n+1}")


def twisted_column(ctx: FieldCtx, n: int, theta: int, alpha: int) -> np.ndarray:
    """c_{n,theta}(alpha) = (1, a, ..., a^{n-2}, a^{n-1} - theta*a^n)."""
    col = np.array([ctx.pow(alpha, e) for e in range(n)], dtype=np.int64)
    col[n - 1] = ctx.sub(ctx.pow(alpha, n - 1), ctx.mul(theta, ctx.pow(alpha, n)))
    return col


def twisted_matrix(ctx: FieldCtx, xs, theta: int, height: int | None = None) -> np.ndarray:
    """Columns c_{height,theta}(x_i) stacked into a height x len(xs) matrix.

    height defaults to len(xs) (the square case of the closed form); the
    bordered deep-hole determinants use height = len(xs) + 1.
    """
    xs = list(xs)
    n = len(xs) if height is None else height
    return np.stack([twisted_column(ctx, n, theta, x) for x in xs], axis=1)


def bordered_twisted_matrix(ctx: FieldCtx, xs, w, theta: int) -> np.ndarray:
    """(c_{r,theta}(x_1)|...|c_{r,theta}(x_{r-1})|w^T) with r = len(w)."""
    r = len(w)
    wcol = np.asarray(list(w), dtype=np.int64)[:, None]
    if len(xs) == 0:
        return wcol
    cols = twisted_matrix(ctx, xs, theta, height=r)
    return np.concatenate([cols, wcol], axis=1)


def twisted_det(ctx: FieldCtx, xs, theta: int) -> int:
    """det(c_{n,theta}(x_1)|...|c_{n,theta}(x_n)) = V * (1 - theta * sum)."""
    if theta == 0:
        raise ValueError("theta must be nonzero")
    xs = list(xs)
    s = 0
    for x in xs:
        s = ctx.add(s, x)
    return ctx.mul(vandermonde_det(ctx, xs), ctx.sub(1, ctx.mul(theta, s)))


# ---------------------------------------------------------------------------
# characteristic-2 syndrome determinant forms
# ---------------------------------------------------------------------------


def _fgh(ctx: FieldCtx, S, w, theta: int):
    r = len(w)
    f = 0
    g = 0
    h = 0
    for i in range(r - 1):
        if w[i] == 0:
            continue
        f = ctx.add(f, ctx.mul(w[i], sym_at(S, i)))
        if i >= 1:
            g = ctx.add(g, ctx.mul(w[i], sym_at(S, i - 1)))
        if i >= 2:
            h = ctx.add(h, ctx.mul(w[i], sym_at(S, i - 2)))
    h = ctx.add(h, ctx.mul(ctx.inv(theta), w[r - 1]))
    return f, g, h


def syndrome_quadratic(ctx: FieldCtx, xs, w, theta: int):
    """Coefficients (A, B, C) with, for x distinct from xs,

        det(c_{r,theta}(x_1)|...|c_{r,theta}(x_{r-2})|c_{r,theta}(x)|w^T)
            = theta * V(xs, x) * (A x^2 + B x + C).

    Characteristic 2 only; xs holds r-2 distinct elements and w has
    length r.  A, B, C are linear in w.
    """
    if ctx.p != 2:
        raise ValueError("quadratic syndrome form proved for characteristic 2 only")
    if theta == 0:
        raise ValueError("theta must be nonzero")
    xs = list(xs)
    if len(w) != len(xs) + 2:
        raise ValueError("need len(w) = len(xs) + 2")
    S = elementary_symmetric(ctx, xs)
    f, g, h = _fgh(ctx, S, w, theta)
    tsum = ctx.inv(theta)
    for x in xs:
        tsum = ctx.add(tsum, x)
    A = f
    B = ctx.mul(tsum, f)
    C = ctx.add(ctx.mul(tsum, g), h)
    return A, B, C


def vanishing_product_eval(ctx: FieldCtx, point, w, theta: int) -> int:
    """Evaluate the deep-hole obstruction polynomial P(x_1..x_{r-3}).

    P multiplies the Vandermonde of the point, the guard factors
    (sum + theta^{-1} + x_t), and (f x_i^2 + h)-style factors built from
    the symmetric functions after substituting x_{r-2} = sum + theta^{-1}.
    A deep-hole syndrome forces P to vanish on the whole cube.
    """
    if ctx.p != 2:
        raise ValueError("vanishing form proved for characteristic 2 only")
    point = list(point)
    r = len(w)
    if r < 4 or len(point) != r - 3:
        raise ValueError("need r >= 4 and a point with r-3 coordinates")
    tinv = ctx.inv(theta)
    y = tinv
    for x in point:
        y = ctx.add(y, x)
    args = point + [y]
    S = elementary_symmetric(ctx, args)
    f, _, h = _fgh(ctx, S, w, theta)
    P = vandermonde_det(ctx, point)
    for x in point:
        P = ctx.mul(P, ctx.add(y, x))
    for x in point:
        P = ctx.mul(P, ctx.add(ctx.mul(f, ctx.mul(x, x)), h))
    P = ctx.mul(P, f)
    P = ctx.mul(P, ctx.add(ctx.mul(f, ctx.mul(y, y)), h))
    return P
