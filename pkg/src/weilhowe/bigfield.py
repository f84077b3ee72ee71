"""Exact arithmetic in F_{p^k} for k beyond the table-based SmallField range,
vectorized over numpy coefficient arrays, plus dense F_p linear algebra.

Elements are arrays of shape (..., k) holding F_p coefficients with respect
to the power basis of a deterministic irreducible polynomial (the same
smallest-lex polynomial family used by SmallField, so F_{p^k} here and
SmallField(p, k) agree whenever both exist).
"""

import numpy as np

from .ffield import _pmod, _pmul, _ppowmod, find_irreducible


class BigField:
    def __init__(self, p, k):
        self.p = p
        self.k = k
        self.poly = find_irreducible(p, k)
        # redmat[j] = coefficients of x^{k+j} mod poly, j = 0..k-2
        rows = []
        cur = [(-c) % p for c in self.poly[:k]]          # x^k
        rows.append(list(cur))
        for _ in range(k - 2):
            top = cur[k - 1]
            cur = [0] + cur[:-1]
            if top:
                cur = [(c + top * r) % p
                       for c, r in zip(cur, rows[0])]
            rows.append(list(cur))
        self.redmat = np.array(rows, dtype=np.int64).reshape(max(k - 1, 0), k)
        self.redmat32 = self.redmat.astype(np.int32)
        self._frob_mats = {}
        self._embed_cache = {}

    # -- element constructors ---------------------------------------------

    def zeros(self, shape):
        return np.zeros(tuple(shape) + (self.k,), dtype=np.int64)

    def one(self):
        v = np.zeros(self.k, dtype=np.int64)
        v[0] = 1
        return v

    # -- arithmetic ---------------------------------------------------------

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        # int32 is ample: entries < p <= 3, partial sums < k p^2 < 2^11
        k, p = self.k, self.p
        a, b = np.broadcast_arrays(a, b)
        conv = np.zeros(a.shape[:-1] + (2 * k - 1,), dtype=np.int32)
        b32 = b.astype(np.int32, copy=False)
        for i in range(k):
            conv[..., i:i + k] += a[..., i:i + 1] * b32
        conv %= p
        if k == 1:
            return conv
        return (conv[..., :k] + conv[..., k:] @ self.redmat32) % p

    def frob_matrix(self, e):
        """k x k matrix of the F_p-linear map x -> x^{p^e} (row i = image
        of the basis vector x^i)."""
        e = e % self.k if self.k > 1 else 0
        if e not in self._frob_mats:
            t = _ppowmod([0, 1], self.p ** e, self.poly, self.p)
            rows = []
            cur = [1]
            for _ in range(self.k):
                rows.append(cur + [0] * (self.k - len(cur)))
                cur = _pmod(_pmul(cur, t, self.p), self.poly, self.p)
            self._frob_mats[e] = np.array(rows, dtype=np.int64)
        return self._frob_mats[e]

    def frob(self, a, e):
        """a^(p^e), vectorized."""
        return (a @ self.frob_matrix(e)) % self.p

    def mul_matrix(self, c):
        """k x k matrix of multiplication by the element c (1-dim array)."""
        rows = []
        cpoly = [int(x) for x in c]
        cur = cpoly
        for _ in range(self.k):
            rows.append(cur + [0] * (self.k - len(cur)))
            cur = _pmod(_pmul(cur, [0, 1], self.p), self.poly, self.p)
        return np.array(rows, dtype=np.int64)

    def is_zero(self, a):
        """Boolean mask over the batch: a == 0 in F_{p^k}."""
        return ~np.any(a % self.p, axis=-1)

    # -- subfield embedding -------------------------------------------------

    def embed_table(self, sf):
        """Array (sf.order, k): field embedding SmallField(p, d) -> F_{p^k},
        where d | k.  The image of the SmallField generator-root is the
        lex-smallest root in F_{p^k} of the SmallField's defining polynomial
        (roots are located inside the d-dimensional Frobenius-fixed
        subspace, so the search is over p^d candidates only)."""
        key = (sf.p, sf.k)
        if key in self._embed_cache:
            return self._embed_cache[key]
        assert sf.p == self.p and self.k % sf.k == 0
        d = sf.k
        # subfield = kernel of Frob^d - Id
        M = (self.frob_matrix(d % self.k if self.k > 1 else 0)
             - np.eye(self.k, dtype=np.int64)) % self.p
        # elements act as row vectors (x -> x @ F), so the fixed subspace is
        # the left kernel
        basis = gf_nullspace(self.p, M.T)
        assert len(basis) == d
        root = None
        for combo in _all_combos(self.p, len(basis)):
            cand = (combo @ np.array(basis)) % self.p
            acc = self.zeros(())
            power = self.one()
            for c in sf.poly:
                if c:
                    acc = self.add(acc, (c * power) % self.p)
                power = self.mul(power, cand)
            if not acc.any():
                if root is None or tuple(cand) < tuple(root):
                    root = cand
        assert root is not None, "no root of the subfield polynomial"
        table = np.zeros((sf.order, self.k), dtype=np.int64)
        for idx in range(sf.order):
            acc = self.zeros(())
            power = self.one()
            for c in sf.coeffs(idx):
                if c:
                    acc = self.add(acc, (c * power) % self.p)
                power = self.mul(power, root)
            table[idx] = acc
        self._embed_cache[key] = table
        return table


_big_cache = {}


def big_field(p, k):
    if (p, k) not in _big_cache:
        _big_cache[(p, k)] = BigField(p, k)
    return _big_cache[(p, k)]


# ---------------------------------------------------------------------------
# dense linear algebra over F_p on numpy matrices


def _inv_table(p):
    return {a: pow(a, p - 2, p) for a in range(1, p)}


def gf_rref(p, A):
    """Row-reduce A (copied) over F_p; returns (R, pivot_columns)."""
    R = A % p
    R = R.astype(np.int64).copy()
    rows, cols = R.shape
    inv = _inv_table(p)
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if R[i, c]:
                piv = i
                break
        if piv is None:
            continue
        R[[r, piv]] = R[[piv, r]]
        R[r] = (R[r] * inv[int(R[r, c])]) % p
        mask = R[:, c].copy()
        mask[r] = 0
        R = (R - np.outer(mask, R[r])) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def gf_nullspace(p, A):
    """Basis (list of 1-dim arrays) of the right kernel of A over F_p."""
    R, pivots = gf_rref(p, A)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for r, c in enumerate(pivots):
            v[c] = (-R[r, f]) % p
        basis.append(v)
    return basis


def gf_solve_affine(p, A, b):
    """All solutions of A x = b over F_p: (particular, kernel_basis).
    Raises ValueError if inconsistent."""
    rows, cols = A.shape
    aug = np.concatenate([A % p, (b % p).reshape(rows, 1)], axis=1)
    R, pivots = gf_rref(p, aug)
    if cols in pivots:
        raise ValueError("inconsistent linear system over F_%d" % p)
    x = np.zeros(cols, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = R[r, cols]
    return x, gf_nullspace(p, A)


def _all_combos(p, d):
    """All p^d coefficient vectors, deterministic order."""
    out = np.zeros((p ** d, d), dtype=np.int64)
    for j in range(d):
        out[:, j] = (np.arange(p ** d) // p ** j) % p
    return out
