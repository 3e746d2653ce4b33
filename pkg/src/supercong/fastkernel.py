"""Modular sweep kernels: the fast LHS evaluators behind every statement.

Scalar entry points mirror the exact-rational oracle kernel (see oracle.py);
batch entry points vectorize over the a-grid with int64 numpy.  When p^e is
large enough that int64 products could overflow (modulus >= 2^31), the same
operations run as pure-int scans instead.  All results are least nonnegative
lifts (plain ints, or int64 arrays for the screen helpers).
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import KTooLarge
from .tables import ModTables

_NP_SAFE_MODULUS = 1 << 31


def _dot_rows(T, w, m: int):
    """Row-wise dot of a term table with weights, mod m."""
    if isinstance(T, np.ndarray) and T.dtype == np.int64:
        wv = np.asarray([v % m for v in w], dtype=np.int64)
        return [int(v) for v in (T * wv[None, :] % m).sum(axis=1) % m]
    return [sum(t * (v % m) % m for t, v in zip(row, w)) % m for row in T]


class ModKernel:
    """Truncated-sum evaluators in Z/p^e driven by per-prime tables."""

    name = "modular"

    def __init__(self, p: int):
        self.p = p
        self._tables: dict[int, ModTables] = {}

    def tables(self, e: int) -> ModTables:
        if e not in self._tables:
            self._tables[e] = ModTables(self.p, e)
        return self._tables[e]

    # -- term tables ---------------------------------------------------------

    def term_table(self, A, C, e: int):
        """T[i][k] = C(A[i], k) * C(C[i], k) mod p^e for k < p."""
        tb = self.tables(e)
        m = tb.m
        if m >= _NP_SAFE_MODULUS:
            return [self._term_row_int(a, c, tb) for a, c in zip(A, C)]
        av = tb.reduce_vec(A)
        cv = tb.reduce_vec(C)
        L = len(av)
        out = np.zeros((L, self.p), dtype=np.int64)
        out[:, 0] = 1
        term = np.ones(L, dtype=np.int64)
        inv_sq = tb.inv_sq_np
        for k in range(self.p - 1):
            term = term * ((av - k) % m) % m
            term = term * ((cv - k) % m) % m
            term = term * inv_sq[k + 1] % m
            out[:, k + 1] = term
        return out

    @staticmethod
    def _term_row_int(a, c, tb: ModTables) -> list[int]:
        m = tb.m
        av, cv = tb.reduce(a), tb.reduce(c)
        inv = tb.inv
        row = [0] * tb.p
        row[0] = t = 1
        for k in range(tb.p - 1):
            t = t * ((av - k) % m) % m * ((cv - k) % m) % m * inv[k + 1] % m * inv[k + 1] % m
            row[k + 1] = t
        return row

    # -- scalar/batch ops (oracle-comparable surface) -------------------------

    def gbinom(self, a, k: int, e: int) -> int:
        """C(a, k) mod p^e for k < p."""
        if k >= self.p:
            raise KTooLarge(f"k={k} >= p={self.p}")
        return self.tables(e).binom_falling(a, k)

    def trunc_sum(self, a, c, z, n: int, e: int) -> int:
        return self.trunc_sum_batch([a], [c], z, n, e)[0]

    def trunc_sum_batch(self, A, C, z, n: int, e: int) -> list[int]:
        """sum_{k=0}^{n} C(a,k) C(c,k) z^k mod p^e, elementwise over (A, C)."""
        tb = self.tables(e)
        m = tb.m
        zv = tb.reduce(z)
        if m >= _NP_SAFE_MODULUS:
            return [self._trunc_int(tb.reduce(a), tb.reduce(c), zv, n, tb) for a, c in zip(A, C)]
        av = tb.reduce_vec(A)
        cv = tb.reduce_vec(C)
        tot = np.ones(len(av), dtype=np.int64)
        term = np.ones(len(av), dtype=np.int64)
        inv_sq = tb.inv_sq_np
        for k in range(n):
            term = term * ((av - k) % m) % m
            term = term * ((cv - k) % m) % m
            term = term * (zv * inv_sq[k + 1] % m) % m
            tot = (tot + term) % m
        return [int(v) for v in tot]

    @staticmethod
    def _trunc_int(av: int, cv: int, zv: int, n: int, tb: ModTables) -> int:
        m = tb.m
        inv = tb.inv
        tot = term = 1
        for k in range(n):
            term = term * ((av - k) % m) % m * ((cv - k) % m) % m * zv % m * inv[k + 1] % m * inv[k + 1] % m
            tot = (tot + term) % m
        return tot

    def recip_sum(self, a, c, x, sigma: int, e: int, n: int | None = None) -> int:
        """sum_{k=0}^{n} C(a,k)C(c,k) (x^{k+1} + sigma (1-x)^{k+1})/(k+1);
        n defaults to p-2."""
        return self.recip_sum_batch([a], [c], x, [sigma], e, n)[0]

    def recip_sum_batch(self, A, C, x, sigmas, e: int, n: int | None = None) -> list[int]:
        tb = self.tables(e)
        m = tb.m
        if n is None:
            n = self.p - 2
        xv = tb.reduce(x)
        yv = (1 - xv) % m
        w_x, w_y = [], []
        xa, ya = xv, yv
        for k in range(n + 1):
            w_x.append(xa * tb.inv[k + 1] % m)
            w_y.append(ya * tb.inv[k + 1] % m)
            xa = xa * xv % m
            ya = ya * yv % m
        T = self.term_table(A, C, e)
        base = T[:, : n + 1] if isinstance(T, np.ndarray) else [r[: n + 1] for r in T]
        part_x = _dot_rows(base, w_x, m)
        part_y = _dot_rows(base, w_y, m)
        return [(px + sg * py) % m for px, py, sg in zip(part_x, part_y, sigmas)]

    def choose_pow(self, a, c, mm: int, x, e: int) -> int:
        return self.choose_pow_batch([a], [c], mm, x, e)[0]

    def choose_pow_batch(self, A, C, mm: int, x, e: int) -> list[int]:
        """sum_{k=mm}^{p-1} C(a,k)C(c,k) C(k,mm) x^(k-mm) mod p^e."""
        tb = self.tables(e)
        m = tb.m
        xv = tb.reduce(x)
        w = [0] * self.p
        cb = 1
        for k in range(mm, self.p):
            w[k] = cb
            if k + 1 < self.p:
                cb = cb * (k + 1) % m * tb.inv[k + 1 - mm] % m * xv % m
        return _dot_rows(self.term_table(A, C, e), w, m)

    def central_sum(self, a, c, e: int) -> int:
        return self.central_sum_batch([a], [c], e)[0]

    def central_sum_batch(self, A, C, e: int) -> list[int]:
        """sum_{k<p} C(a,k)C(c,k) C(2k,k)/4^k mod p^e."""
        tb = self.tables(e)
        return _dot_rows(self.term_table(A, C, e), tb.central_over_4k, tb.m)

    def choose_sum(self, a, c, mm: int, e: int) -> int:
        return self.choose_sum_batch([a], [c], mm, e)[0]

    def choose_sum_batch(self, A, C, mm: int, e: int) -> list[int]:
        """sum_{k=mm}^{p-1} C(a,k)C(c,k) C(k,mm) mod p^e."""
        tb = self.tables(e)
        m = tb.m
        w = [0] * self.p
        cb = 1
        for k in range(mm, self.p):
            w[k] = cb
            if k + 1 < self.p:
                cb = cb * (k + 1) % m * tb.inv[k + 1 - mm] % m
        return _dot_rows(self.term_table(A, C, e), w, m)

    def dot_ints(self, a, c, w, e: int) -> int:
        return self.dot_ints_batch([a], [c], w, e)[0]

    def dot_ints_batch(self, A, C, w, e: int) -> list[int]:
        """sum_k C(a,k)C(c,k) w_k for integer residue weights w (len p)."""
        tb = self.tables(e)
        return _dot_rows(self.term_table(A, C, e), w, tb.m)

    def pn_coeffs(self, a, e: int) -> list[int]:
        rows = self.pn_coeffs_batch([a], e)
        return [int(v) for v in rows[0]]

    def pn_coeffs_batch(self, A, e: int):
        """Rows of x-coefficients of P_{p-1}(a, x) = sum_k C(a,k)C(-1-a,k)((1-x)/2)^k."""
        tb = self.tables(e)
        m = tb.m
        Uz = self.u_half_table(A, e)
        if isinstance(Uz, np.ndarray):
            V = (Uz @ tb.binom_matrix) % m
            signs = np.where(np.arange(self.p) % 2 == 0, 1, m - 1).astype(np.int64)
            return V * signs[None, :] % m
        # pure-int fallback: coeff_j = (-1)^j sum_k u_k C(k, j)
        rows = []
        for u in Uz:
            row = [0] * self.p
            for k in range(self.p):
                if u[k] == 0:
                    continue
                cb = 1
                for j in range(k + 1):
                    row[j] = (row[j] + u[k] * cb) % m
                    cb = cb * (k - j) % m * tb.inv[j + 1] % m
            rows.append([(v if j % 2 == 0 else (-v) % m) for j, v in enumerate(row)])
        return rows

    def u_half_table(self, A, e: int):
        """u[i][k] = C(a,k)C(-1-a,k)/2^k mod p^e."""
        tb = self.tables(e)
        m = tb.m
        C = [Fraction(-1) - Fraction(a) for a in A]
        T = self.term_table(A, C, e)
        pw = [1] * self.p
        for k in range(1, self.p):
            pw[k] = pw[k - 1] * tb.inv[2] % m
        if isinstance(T, np.ndarray):
            return T * np.asarray(pw, dtype=np.int64)[None, :] % m
        return [[t * w % m for t, w in zip(row, pw)] for row in T]

    # -- mod-only screen helpers (large p; never oracle-compared) -------------

    def pn_values_all_x(self, A, e: int) -> tuple[np.ndarray, np.ndarray]:
        """(P_{p-1}(a, x), P_{p-1}(a, -x)) for every x in 0..p-1."""
        tb = self.tables(e)
        m = tb.m
        Uz = self.u_half_table(A, e)
        X = np.arange(self.p, dtype=np.int64)
        W_pos = self._power_vandermonde((1 - X) % m, m)
        W_neg = self._power_vandermonde((1 + X) % m, m)
        return (Uz @ W_pos) % m, (Uz @ W_neg) % m

    def _power_vandermonde(self, base: np.ndarray, m: int) -> np.ndarray:
        W = np.ones((self.p, len(base)), dtype=np.int64)
        row = np.ones(len(base), dtype=np.int64)
        for k in range(1, self.p):
            row = row * base % m
            W[k] = row
        return W

    def poly_eval_all_x(self, rows: np.ndarray, e: int) -> np.ndarray:
        """Evaluate coefficient rows (length <= p) at every x in 0..p-1."""
        tb = self.tables(e)
        X = np.arange(self.p, dtype=np.int64)
        W = self._power_vandermonde(X, tb.m)
        return (rows @ W[: rows.shape[1]]) % tb.m

    # -- binomials of shifted arguments ---------------------------------------

    def binom(self, beta, r: int, e: int) -> int:
        """Generalized binomial C(beta, r) mod p^e, r < p."""
        if r >= self.p:
            raise KTooLarge(f"r={r} >= p={self.p}")
        return self.tables(e).binom_falling(beta, r)

    def binom_shift_row(self, t, e: int) -> list[int]:
        """C(m + p t - 1, p - 1) mod p^e for m = 1..p-1 (index 0 unused).

        The falling-factorial window for consecutive m shares all factors but
        one; the single p-divisible factor is p*t itself and stays inside the
        window for every m, so the scan multiplies and divides units only.
        """
        tb = self.tables(e)
        m = tb.m
        p = self.p
        out = [0] * p
        if Fraction(t) == 0:
            return out  # C(m-1, p-1) = 0 for 1 <= m <= p-1
        tv = tb.reduce(t)
        pt = p * tv % m
        u = 1
        for j in range(1, p - 1):
            u = u * ((pt - j) % m) % m
        inv_fact = tb.inv_fact[p - 1]
        out[1] = pt * u % m * inv_fact % m
        for mm in range(1, p - 1):
            u = u * ((mm + pt) % m) % m
            u = u * tb.inverse((mm + pt - p + 1) % m) % m
            out[mm + 1] = pt * u % m * inv_fact % m
        return out

    def harmonic_value(self, n: int, e: int) -> int:
        """H_n mod p^e, n < p."""
        return self.tables(e).harmonic[n]

    def central_ratio(self, n: int, e: int) -> int:
        """C(2n, n)/(-4)^n mod p^e, n < p."""
        tb = self.tables(e)
        v = tb.central_over_4k[n]
        return v if n % 2 == 0 else (tb.m - v) % tb.m

    # -- classical Legendre polynomial ----------------------------------------

    def legendre_value(self, n: int, x, e: int = 1) -> int:
        """P_n(x) mod p: squared-binomial form when x-1 is a unit, else the
        three-term recurrence."""
        tb = self.tables(e)
        m = tb.m
        xv = tb.reduce(x)
        if (xv - 1) % self.p == 0:
            return self._legendre_recurrence(n, xv, tb)
        half = (xv - 1) * tb.inv[2] % m
        ratio = (xv + 1) * tb.inverse((xv - 1) % m) % m
        tot = 0
        term = 1
        rp = 1
        for k in range(n + 1):
            tot = (tot + term * rp) % m
            if k < n:
                f = (n - k) % m * tb.inv[k + 1] % m
                term = term * f % m * f % m
                rp = rp * ratio % m
        return pow(half, n, m) * tot % m

    def _legendre_recurrence(self, n: int, xv: int, tb: ModTables) -> int:
        if n == 0:
            return 1
        m = tb.m
        prev, cur = 1, xv
        for k in range(1, n):
            prev, cur = cur, ((2 * k + 1) * xv % m * cur - k * prev) % m * tb.inv[k + 1] % m
        return cur
