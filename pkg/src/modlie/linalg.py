"""Exact linear algebra over F_p and Q: ranks, kernels, incremental echelon forms."""

from __future__ import annotations

from fractions import Fraction

import numpy as np


def inv_mod(a: int, p: int) -> int:
    return pow(int(a) % p, -1, p)


def rank_mod_p(A: np.ndarray, p: int) -> int:
    """Exact rank over F_p by vectorized Gaussian elimination (destroys a copy)."""
    M = np.array(A, dtype=np.int64, copy=True) % p
    nrows, ncols = M.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = M[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv], :] = M[[piv, r], :]
        M[r, c:] = (M[r, c:] * inv_mod(M[r, c], p)) % p
        below = M[r + 1 :, c]
        rows = np.nonzero(below)[0]
        if rows.size:
            idx = rows + r + 1
            M[idx, c:] = (M[idx, c:] - np.outer(M[idx, c], M[r, c:])) % p
        r += 1
    return r


def kernel_mod_p(A: np.ndarray, p: int) -> list[np.ndarray]:
    """Basis of the right kernel of A over F_p (list of int64 column vectors)."""
    M = np.array(A, dtype=np.int64, copy=True) % p
    nrows, ncols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv], :] = M[[piv, r], :]
        M[r, c:] = (M[r, c:] * inv_mod(M[r, c], p)) % p
        others = np.nonzero(M[:, c])[0]
        others = others[others != r]
        if others.size:
            M[others, c:] = (M[others, c:] - np.outer(M[others, c], M[r, c:])) % p
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = np.zeros(ncols, dtype=np.int64)
        v[fc] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-M[row, fc]) % p
        basis.append(v)
    return basis


class DenseEchelon:
    """Incremental row echelon over F_p for dense integer vectors."""

    def __init__(self, p: int):
        self.p = p
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: np.ndarray) -> np.ndarray:
        v = np.array(vec, dtype=np.int64, copy=True) % self.p
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv]
            if c:
                v = (v - c * row) % self.p
        return v

    def insert(self, vec: np.ndarray) -> bool:
        """Insert a vector; True if it enlarged the span."""
        v = self.reduce(vec)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        piv = int(nz[0])
        v = (v * inv_mod(v[piv], self.p)) % self.p
        self.rows.append(v)
        self.pivots.append(piv)
        return True

    def contains(self, vec: np.ndarray) -> bool:
        return not np.any(self.reduce(vec))


class SparseEchelon:
    """Incremental echelon over F_p for sparse dict-vectors with arbitrary
    orderable keys; optionally tracks the combination of inserted tags that
    produced each row, so dependencies come with explicit witnesses."""

    def __init__(self, p: int, track: bool = False):
        self.p = p
        self.track = track
        self.rows: dict = {}  # leading key -> dict vector
        self.combos: dict = {}  # leading key -> dict tag -> coeff

    @property
    def rank(self) -> int:
        return len(self.rows)

    @staticmethod
    def _clean(v: dict, p: int) -> dict:
        return {k: c % p for k, c in v.items() if c % p}

    def insert(self, vec: dict, tag=None):
        """Insert; returns (added, witness). On a dependency the witness is the
        tag combination summing to zero (only when tracking)."""
        p = self.p
        v = self._clean(vec, p)
        combo = {tag: 1} if self.track else None
        while v:
            lead = min(v)
            row = self.rows.get(lead)
            if row is None:
                inv = inv_mod(v[lead], p)
                v = {k: (c * inv) % p for k, c in v.items()}
                if self.track:
                    combo = {t: (c * inv) % p for t, c in combo.items()}
                    self.combos[lead] = combo
                self.rows[lead] = v
                return True, None
            f = v[lead]
            for k, c in row.items():
                v[k] = (v.get(k, 0) - f * c) % p
            v = {k: c for k, c in v.items() if c}
            if self.track:
                for t, c in self.combos[lead].items():
                    combo[t] = (combo.get(t, 0) - f * c) % p
                combo = {t: c for t, c in combo.items() if c}
        return False, combo


def rank_fractions(rows: list[list[Fraction]]) -> int:
    """Exact rank over Q."""
    M = [list(map(Fraction, r)) for r in rows]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        pv = M[r][c]
        M[r] = [x / pv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        r += 1
    return r


class FractionEchelon:
    """Incremental echelon over Q for dense lists (characteristic-zero checks)."""

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list[Fraction]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec) -> list[Fraction]:
        v = [Fraction(x) for x in vec]
        for row, piv in zip(self.rows, self.pivots):
            c = v[piv]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        return v

    def insert(self, vec) -> bool:
        v = self.reduce(vec)
        piv = next((i for i, x in enumerate(v) if x != 0), None)
        if piv is None:
            return False
        pv = v[piv]
        v = [x / pv for x in v]
        self.rows.append(v)
        self.pivots.append(piv)
        return True

    def contains(self, vec) -> bool:
        return all(x == 0 for x in self.reduce(vec))
