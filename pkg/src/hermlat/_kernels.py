"""Integer hot loops, compiled with numba when available.

Set ``HERMLAT_NO_NUMBA=1`` to force the pure-numpy implementations (useful
for debugging and for checking that both paths agree).  All kernels work on
machine integers only; callers keep inputs small enough that int64 cannot
overflow.
"""

from __future__ import annotations

import math
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and os.environ.get("HERMLAT_NO_NUMBA", "") not in ("1", "true", "yes")


def totatives(r: int) -> np.ndarray:
    k = np.arange(1, r, dtype=np.int64) if r > 1 else np.array([0], dtype=np.int64)
    if r == 1:
        return k
    return k[np.gcd(k, r) == 1]


# ---------------------------------------------------------------------------
# seisu scan: for each r and each totative k2, S(r, k2) = sum_k ((k2 + k) mod r)
# over totatives k.  The term k = r - k2 vanishes, so S/r is the fractional
# sum with that index excluded.

def _seisu_numpy(r_min: int, r_max: int) -> tuple[np.ndarray, np.ndarray]:
    n = r_max - r_min + 1
    best = np.full(n, -1, dtype=np.int64)
    arg = np.full(n, -1, dtype=np.int64)
    for idx, r in enumerate(range(r_min, r_max + 1)):
        k = totatives(r)
        if len(k) <= 2:
            continue
        # sum_k (k2 + k) mod r = phi*k2 + sum(k) - r * #{k >= r - k2}
        ks = np.sort(k)
        wraps = len(ks) - np.searchsorted(ks, r - k, side="left")
        s = len(ks) * k + ks.sum() - r * wraps
        j = int(np.argmin(s))
        best[idx] = s[j]
        arg[idx] = k[j]
    return best, arg


def _seisu_loop(r_min, r_max, best, arg):
    for r in range(r_min, r_max + 1):
        idx = r - r_min
        # strike multiples of each prime factor of r
        coprime = np.ones(r, dtype=np.bool_)
        coprime[0] = False
        m = r
        p = 2
        while p * p <= m:
            if m % p == 0:
                for j in range(p, r, p):
                    coprime[j] = False
                while m % p == 0:
                    m //= p
            p += 1
        if m > 1:
            for j in range(m, r, m):
                coprime[j] = False
        phi = 0
        for k in range(1, r):
            if coprime[k]:
                phi += 1
        if phi <= 2:
            continue
        ks = np.empty(phi, dtype=np.int64)
        c = 0
        for k in range(1, r):
            if coprime[k]:
                ks[c] = k
                c += 1
        total = 0
        for j in range(phi):
            total += ks[j]
        lo = -1
        lo_k = -1
        for i in range(phi):
            k2 = ks[i]
            # first index with ks[j] >= r - k2; those terms wrap past r
            a, b = 0, phi
            while a < b:
                m = (a + b) // 2
                if ks[m] < r - k2:
                    a = m + 1
                else:
                    b = m
            s = phi * k2 + total - r * (phi - a)
            if lo < 0 or s < lo:
                lo = s
                lo_k = k2
        best[idx] = lo
        arg[idx] = lo_k


if numba is not None:
    _seisu_jit = numba.njit(cache=True)(_seisu_loop)


def seisu_min_sums(r_min: int, r_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Per r in [r_min, r_max]: min over k2 of S(r, k2), and the minimising k2.

    Entries are -1 where phi(r) <= 2.
    """
    if not USE_NUMBA:
        return _seisu_numpy(r_min, r_max)
    n = r_max - r_min + 1
    best = np.full(n, -1, dtype=np.int64)
    arg = np.full(n, -1, dtype=np.int64)
    _seisu_jit(r_min, r_max, best, arg)
    return best, arg


# ---------------------------------------------------------------------------
# box enumeration: count integer x in [-b, b]^n with x^T G x == target

def _box_numpy(gram: np.ndarray, bounds: np.ndarray, target: int) -> int:
    axes = [np.arange(-b, b + 1, dtype=np.int64) for b in bounds]
    pts = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, len(bounds))
    vals = np.einsum("ij,jk,ik->i", pts, gram, pts)
    return int(np.count_nonzero(vals == target))


def _box_loop(gram, bounds, target):
    n = bounds.shape[0]
    x = np.empty(n, dtype=np.int64)
    for i in range(n):
        x[i] = -bounds[i]
    count = 0
    while True:
        v = 0
        for i in range(n):
            s = 0
            for j in range(n):
                s += gram[i, j] * x[j]
            v += x[i] * s
        if v == target:
            count += 1
        # odometer increment
        i = 0
        while i < n:
            if x[i] < bounds[i]:
                x[i] += 1
                break
            x[i] = -bounds[i]
            i += 1
        if i == n:
            break
    return count


if numba is not None:
    _box_jit = numba.njit(cache=True)(_box_loop)


def box_count(gram, bounds, target: int) -> int:
    """Brute-force count of box points with the given norm (includes both signs)."""
    g = np.asarray(gram, dtype=np.int64)
    b = np.asarray(bounds, dtype=np.int64)
    if len(b) == 0:
        return 0
    if not USE_NUMBA:
        return _box_numpy(g, b, int(target))
    return int(_box_jit(g, b, int(target)))


def box_bounds(gram_inverse_diag, target) -> list[int]:
    """Coordinate bounds ``|x_i| <= sqrt(target * (G^-1)_ii)`` for a positive definite G."""
    out = []
    for gi in gram_inverse_diag:
        v = target * gi
        out.append(math.isqrt(v.numerator // v.denominator) + 1)
    return out
