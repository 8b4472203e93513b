"""Small exact linear algebra over the residue fields F_p and F_{p^2}.

Field elements are int64 coordinate vectors of length f (the trailing axis),
with F_{p^2} = F_p[Y]/(Y^2 - c) for a fixed non-residue c. Matrices are
arrays of shape (rows, cols, f). Everything here is Gaussian elimination on
matrices that stay small (at most a few hundred rows), so the row loop is
plain Python with vectorized row operations.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np


class ResidueField:
    def __init__(self, p: int, f: int = 1, c: int | None = None):
        if f not in (1, 2):
            raise ValueError("residue degree must be 1 or 2")
        if f == 2 and c is None:
            raise ValueError("F_{p^2} needs the defining non-residue c")
        self.p, self.f, self.c = p, f, (c or 0)

    def zeros(self, *shape: int) -> np.ndarray:
        return np.zeros(shape + (self.f,), dtype=np.int64)

    def one(self) -> np.ndarray:
        v = np.zeros(self.f, dtype=np.int64)
        v[0] = 1
        return v

    def is_zero(self, x: np.ndarray) -> bool:
        return not (x % self.p).any()

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.f == 1:
            return (x * y) % self.p
        r0 = (x[..., 0] * y[..., 0] + self.c * (x[..., 1] * y[..., 1])) % self.p
        r1 = (x[..., 0] * y[..., 1] + x[..., 1] * y[..., 0]) % self.p
        return np.stack([r0, r1], axis=-1)

    def inv(self, x: np.ndarray) -> np.ndarray:
        if self.f == 1:
            return np.array([pow(int(x[0]), -1, self.p)], dtype=np.int64)
        a, b = int(x[0]), int(x[1])
        nrm = (a * a - self.c * b * b) % self.p
        ninv = pow(nrm, -1, self.p)
        return np.array([a * ninv % self.p, (-b) * ninv % self.p], dtype=np.int64)

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """(r, m, f) @ (m, s, f) -> (r, s, f). Entries < p <= 13 keep the
        int64 accumulators far from overflow."""
        if self.f == 1:
            return (A[..., 0] @ B[..., 0])[..., None] % self.p
        a0, a1 = A[..., 0], A[..., 1]
        b0, b1 = B[..., 0], B[..., 1]
        r0 = (a0 @ b0 + self.c * (a1 @ b1)) % self.p
        r1 = (a0 @ b1 + a1 @ b0) % self.p
        return np.stack([r0, r1], axis=-1)

    # -- elimination ---------------------------------------------------------

    def rref(self, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
        """Reduced row echelon form; returns (R, pivot column indices)."""
        R = A.copy() % self.p
        rows, cols = R.shape[0], R.shape[1]
        pivots: list[int] = []
        rr = 0
        for col in range(cols):
            pr = next((i for i in range(rr, rows)
                       if not self.is_zero(R[i, col])), None)
            if pr is None:
                continue
            if pr != rr:
                R[[rr, pr]] = R[[pr, rr]]
            R[rr] = self.mul(R[rr], self.inv(R[rr, col]))
            for i in range(rows):
                if i != rr and not self.is_zero(R[i, col]):
                    R[i] = (R[i] - self.mul(R[i, col].copy(), R[rr])) % self.p
            pivots.append(col)
            rr += 1
            if rr == rows:
                break
        return R, pivots

    def solve(self, A: np.ndarray, b: np.ndarray) -> np.ndarray | None:
        """One solution of A x = b with free variables set to 0, or None."""
        aug = np.concatenate([A, b[:, None]], axis=1)
        R, pivots = self.rref(aug)
        ncols = A.shape[1]
        if ncols in pivots:
            return None
        x = self.zeros(ncols)
        for r, col in enumerate(pivots):
            x[col] = R[r, ncols]
        return x

    def rank(self, A: np.ndarray) -> int:
        return len(self.rref(A)[1])

    def det(self, A: np.ndarray) -> np.ndarray:
        """Determinant of a square matrix, as a field element."""
        M = A.copy() % self.p
        m = M.shape[0]
        if M.shape[1] != m:
            raise ValueError("determinant of a non-square matrix")
        acc = self.one()
        sign = 1
        for col in range(m):
            pr = next((i for i in range(col, m)
                       if not self.is_zero(M[i, col])), None)
            if pr is None:
                return np.zeros(self.f, dtype=np.int64)
            if pr != col:
                M[[col, pr]] = M[[pr, col]]
                sign = -sign
            acc = self.mul(acc, M[col, col])
            inv = self.inv(M[col, col])
            for i in range(col + 1, m):
                if not self.is_zero(M[i, col]):
                    factor = self.mul(M[i, col].copy(), inv)
                    M[i] = (M[i] - self.mul(factor, M[col])) % self.p
        return (sign * acc) % self.p

    def in_span(self, basis_rows: np.ndarray, v: np.ndarray) -> bool:
        """Is v an F_{p^f}-combination of the given rows (shape (m, dim, f))?"""
        if basis_rows.shape[0] == 0:
            return self.is_zero(v)
        return self.solve(basis_rows.transpose(1, 0, 2), v) is not None
