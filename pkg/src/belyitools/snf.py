"""Smith normal form over Z and over Z/eZ.

``smith_normal_form`` works on exact Python integers and returns unimodular
transforms.  ``ModSNF`` does the same elimination over the principal ideal
ring Z/eZ on numpy arrays; it backs the cochain computations, where matrices
have hundreds of rows but entries stay below e.
"""

from dataclasses import dataclass
from math import gcd

import numpy as np


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows*cols")

    @classmethod
    def from_rows(cls, rows):
        rows = [list(map(int, r)) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(len(rows), ncols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n):
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    def to_rows(self):
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def __matmul__(self, other):
        a, b = self.to_rows(), other.to_rows()
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        return IntMatrix.from_rows(
            [[sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
             for i in range(self.rows)]) if self.rows and other.cols else \
            IntMatrix(self.rows, other.cols, ())

    def diagonal(self):
        return [self[i, i] for i in range(min(self.rows, self.cols))]


def determinant(m):
    """Exact integer determinant by fraction-free Bareiss elimination."""
    a = m.to_rows()
    n = len(a)
    if n != m.cols:
        raise ValueError("square matrix required")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m):
    """Return (D, U, V) with D = U*M*V diagonal, d1 | d2 | ..., entries >= 0."""
    A = m.to_rows()
    r, c = m.rows, m.cols
    U = [[int(i == j) for j in range(r)] for i in range(r)]
    V = [[int(i == j) for j in range(c)] for i in range(c)]

    def row_combo(M, i, j, a, b, cc, d):
        # rows (i, j) <- (a*row_i + b*row_j, cc*row_i + d*row_j)
        ri, rj = M[i], M[j]
        M[i] = [a * x + b * y for x, y in zip(ri, rj)]
        M[j] = [cc * x + d * y for x, y in zip(ri, rj)]

    def col_combo(M, i, j, a, b, cc, d):
        for row in M:
            x, y = row[i], row[j]
            row[i] = a * x + b * y
            row[j] = cc * x + d * y

    def xgcd(a, b):
        x0, x1, y0, y1 = 1, 0, 0, 1
        while b:
            q = a // b
            a, b = b, a - q * b
            x0, x1 = x1, x0 - q * x1
            y0, y1 = y1, y0 - q * y1
        return a, x0, y0

    t = 0
    while t < min(r, c):
        nonzero = [(abs(A[i][j]), i, j) for i in range(t, r) for j in range(t, c) if A[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        A[t], A[pi] = A[pi], A[t]
        U[t], U[pi] = U[pi], U[t]
        for M in (A, V):
            for row in M:
                row[t], row[pj] = row[pj], row[t]
        while True:
            changed = False
            for i in range(t + 1, r):
                if A[i][t]:
                    a, b = A[t][t], A[i][t]
                    if b % a == 0:
                        q = b // a
                        row_combo(A, t, i, 1, 0, -q, 1)
                        row_combo(U, t, i, 1, 0, -q, 1)
                    else:
                        g, s, u = xgcd(a, b)
                        row_combo(A, t, i, s, u, -b // g, a // g)
                        row_combo(U, t, i, s, u, -b // g, a // g)
                        changed = True
            for j in range(t + 1, c):
                if A[t][j]:
                    a, b = A[t][t], A[t][j]
                    if b % a == 0:
                        q = b // a
                        col_combo(A, t, j, 1, 0, -q, 1)
                        col_combo(V, t, j, 1, 0, -q, 1)
                    else:
                        g, s, u = xgcd(a, b)
                        col_combo(A, t, j, s, u, -b // g, a // g)
                        col_combo(V, t, j, s, u, -b // g, a // g)
                        changed = True
            if not changed and all(A[i][t] == 0 for i in range(t + 1, r)) \
                    and all(A[t][j] == 0 for j in range(t + 1, c)):
                break
        # divisibility: fold a non-multiple into the pivot row and redo
        bad = next(((i, j) for i in range(t + 1, r) for j in range(t + 1, c)
                    if A[i][j] % A[t][t]), None)
        if bad is not None:
            i = bad[0]
            row_combo(A, t, i, 1, 1, 0, 1)
            row_combo(U, t, i, 1, 1, 0, 1)
            continue
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return IntMatrix.from_rows(A) if r else IntMatrix(0, c, ()), \
        IntMatrix.from_rows(U) if r else IntMatrix(0, 0, ()), \
        IntMatrix.from_rows(V) if c else IntMatrix(0, 0, ())


# ---------------------------------------------------------------- mod e


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _unit_normalizer(a, e):
    """Unit u mod e with u*a = gcd(a, e) mod e."""
    g = gcd(a, e)
    if g == e:
        return 1
    for u in range(1, e):
        if gcd(u, e) == 1 and (u * a - g) % e == 0:
            return u
    raise AssertionError("no normalizing unit")


class ModSNF:
    """Smith form over Z/eZ: U @ M @ V = diag(s) mod e with s_i | e and s_1 | s_2 ...

    ``s`` lists the diagonal for every row index (entries past the rank are
    0 mod e, recorded as e).  ``want_u`` may be switched off for tall matrices
    when only column data is needed.
    """

    def __init__(self, M, e, want_u=True):
        M = np.array(M, dtype=np.int64) % e if e > 1 else np.zeros_like(np.array(M, dtype=np.int64))
        if M.ndim != 2:
            M = M.reshape(0, 0) if M.size == 0 else M.reshape(len(M), -1)
        self.e = e
        r, c = M.shape
        self.shape = (r, c)
        self.want_u = want_u
        A = M.copy()
        U = np.eye(r, dtype=np.int64) if want_u else None
        Uinv = np.eye(r, dtype=np.int64) if want_u else None
        V = np.eye(c, dtype=np.int64)
        Vinv = np.eye(c, dtype=np.int64)
        diag = []
        t = 0
        while t < min(r, c) and e > 1:
            sub = A[t:, t:]
            nz = np.nonzero(sub)
            if len(nz[0]) == 0:
                break
            gvals = np.gcd(sub[nz], e)
            k = int(np.argmin(gvals))
            pi, pj = int(nz[0][k]) + t, int(nz[1][k]) + t
            self._swap_rows(A, U, Uinv, t, pi)
            self._swap_cols(A, V, Vinv, t, pj)
            while True:
                self._clear_column(A, U, Uinv, t)
                if self._clear_row(A, V, Vinv, t):
                    continue
                if not A[t + 1:, t].any():
                    break
            # divisibility chain: every later entry must lie in the pivot ideal
            g = gcd(int(A[t, t]), e)
            rest = A[t + 1:, t + 1:]
            if rest.size and (rest % g).any():
                i = int(np.nonzero((rest % g).any(axis=1))[0][0]) + t + 1
                self._row_op(A, U, Uinv, t, i, 1, 1, 0, 1)
                continue
            u = _unit_normalizer(int(A[t, t]), e)
            if u != 1:
                A[t] = A[t] * u % e
                if want_u:
                    U[t] = U[t] * u % e
                    Uinv[:, t] = Uinv[:, t] * pow(u, -1, e) % e
            diag.append(int(A[t, t]) if A[t, t] else e)
            t += 1
        self.rank = t
        self.s = diag + [e] * (r - t)
        self.D = A
        self.U, self.Uinv, self.V, self.Vinv = U, Uinv, V, Vinv

    # elementary operations keep (U, Uinv) and (V, Vinv) mutually inverse
    def _swap_rows(self, A, U, Uinv, i, j):
        if i == j:
            return
        A[[i, j]] = A[[j, i]]
        if self.want_u:
            U[[i, j]] = U[[j, i]]
            Uinv[:, [i, j]] = Uinv[:, [j, i]]

    def _swap_cols(self, A, V, Vinv, i, j):
        if i == j:
            return
        A[:, [i, j]] = A[:, [j, i]]
        V[:, [i, j]] = V[:, [j, i]]
        Vinv[[i, j]] = Vinv[[j, i]]

    def _row_op(self, A, U, Uinv, i, j, a, b, c, d):
        # [row_i; row_j] <- [[a, b], [c, d]] @ [row_i; row_j], det = 1
        e = self.e
        ri, rj = A[i].copy(), A[j].copy()
        A[i] = (a * ri + b * rj) % e
        A[j] = (c * ri + d * rj) % e
        if self.want_u:
            ui, uj = U[i].copy(), U[j].copy()
            U[i] = (a * ui + b * uj) % e
            U[j] = (c * ui + d * uj) % e
            ci, cj = Uinv[:, i].copy(), Uinv[:, j].copy()
            Uinv[:, i] = (d * ci - c * cj) % e
            Uinv[:, j] = (-b * ci + a * cj) % e

    def _col_op(self, A, V, Vinv, i, j, a, b, c, d):
        # [col_i, col_j] <- [col_i, col_j] @ [[a, c], [b, d]], det = 1
        e = self.e
        ci, cj = A[:, i].copy(), A[:, j].copy()
        A[:, i] = (a * ci + b * cj) % e
        A[:, j] = (c * ci + d * cj) % e
        vi, vj = V[:, i].copy(), V[:, j].copy()
        V[:, i] = (a * vi + b * vj) % e
        V[:, j] = (c * vi + d * vj) % e
        wi, wj = Vinv[i].copy(), Vinv[j].copy()
        Vinv[i] = (d * wi - c * wj) % e
        Vinv[j] = (-b * wi + a * wj) % e

    def _reduce_pair(self, a, b):
        """2x2 det-1 transform sending (a, b) to (g, 0) mod e, g = gcd(a, b, e)-ish."""
        e = self.e
        ga = gcd(a, e)
        if ga and b % ga == 0:
            # b = q*a mod e solvable
            u = _unit_normalizer(a, e)
            q = (b // ga) * u % e
            return 1, 0, -q % e, 1
        g, s, t = _xgcd(a, b)
        return s % e, t % e, (-b // g) % e, (a // g) % e

    def _clear_column(self, A, U, Uinv, t):
        rows = np.nonzero(A[t + 1:, t])[0] + t + 1
        for i in rows:
            i = int(i)
            if A[i, t] == 0:
                continue
            a, b, c, d = self._reduce_pair(int(A[t, t]), int(A[i, t]))
            self._row_op(A, U, Uinv, t, i, a, b, c, d)

    def _clear_row(self, A, V, Vinv, t):
        """Clear row t right of the pivot; True if the pivot changed."""
        changed = False
        cols = np.nonzero(A[t, t + 1:])[0] + t + 1
        for j in cols:
            j = int(j)
            if A[t, j] == 0:
                continue
            before = int(A[t, t])
            a, b, c, d = self._reduce_pair(before, int(A[t, j]))
            self._col_op(A, V, Vinv, t, j, a, b, c, d)
            if int(A[t, t]) != before:
                changed = True
        return changed and bool(A[t + 1:, t].any())

    # ------------------------------------------------------------ queries

    def kernel_basis(self):
        """Columns generating {x : M x = 0 mod e}, paired with their orders."""
        e = self.e
        r, c = self.shape
        gens, orders = [], []
        for i in range(c):
            s = self.s[i] if i < r else e
            g = gcd(s, e)
            # y_i * s = 0 mod e  <=>  y_i in (e/g)
            step = e // g
            if step == e:
                continue
            gens.append(self.V[:, i] * step % e)
            orders.append(g)
        return gens, orders

    def solve(self, b):
        """Some x with M x = b mod e, or None if b is not in the column span."""
        if not self.want_u:
            raise ValueError("solve needs the row transform")
        e = self.e
        r, c = self.shape
        w = self.U @ (np.asarray(b, dtype=np.int64) % e) % e
        y = np.zeros(c, dtype=np.int64)
        for i in range(r):
            wi = int(w[i])
            if i >= self.rank:
                if wi:
                    return None
                continue
            s = self.s[i]
            if wi % s:
                return None
            y[i] = wi // s
        return self.V @ y % e
