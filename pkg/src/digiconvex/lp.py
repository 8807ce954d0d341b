"""Exact randomized incremental (Seidel) LP in small dimension.

Problem form: maximize ``c . z`` subject to ``A z <= b`` and the box
``-1 <= z_j <= 1``.  Rows are integer ``(a, b)`` pairs.  A variable is
eliminated along a tight row by cross-multiplication followed by gcd
reduction, so every sub-problem keeps primitive integer rows.  Points are
carried in homogeneous form ``(num, den)`` with ``den > 0``.

Two implementations share the algorithm, the pivot rule and the xorshift
constraint order, and so return identical points:

* ``solve_lp`` / ``_Solver`` -- Python ints, exact for any magnitude;
* ``membership_kernel`` -- numba int64.  It reports status ``-1`` as soon as
  any row entry or coordinate reaches ``2**29`` (products of two such values
  plus a handful of them stay below 2**63), and callers then rerun the
  Python path.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ._backend import njit
from .rng import GOLDEN, MASK, MULT, XorShift64Star

Row = Tuple[Tuple[int, ...], int]

DEFAULT_SEED = 0x5EED1DEA
INT_GUARD = 1 << 29


def _reduce(a: List[int], b: int) -> Row:
    g = math.gcd(b, *a)
    if g > 1:
        return tuple(x // g for x in a), b // g
    return tuple(a), b


def _eliminate(row: Row, piv: Row, j: int) -> Row:
    """Substitute z_j from ``piv`` (taken as an equality) into ``row``."""
    h, hb = row
    p, pb = piv
    if p[j] < 0:
        p = tuple(-x for x in p)
        pb = -pb
    pj = p[j]
    hj = h[j]
    a = [h[l] * pj - hj * p[l] for l in range(len(h)) if l != j]
    return _reduce(a, hb * pj - hj * pb)


def _unit(k: int, j: int, sign: int) -> Row:
    return tuple(sign if l == j else 0 for l in range(k)), 1


def _pivot(a) -> int:
    best, j = -1, 0
    for l, v in enumerate(a):
        if abs(v) > best:
            best, j = abs(v), l
    return j


class _Solver:
    def __init__(self, seed: int):
        self.rng = XorShift64Star(seed)

    def solve(self, rows: Sequence[Row], c: Sequence[int]):
        k = len(c)
        m = len(rows)
        if k == 0:
            for q in range(m):
                if rows[q][1] < 0:
                    return None
            return [], 1
        num = [1 if cj > 0 else -1 for cj in c]
        den = 1
        order = list(range(m))
        self.rng.shuffle(order)
        for pos in range(m):
            a, b = rows[order[pos]]
            if sum(x * y for x, y in zip(a, num)) <= b * den:
                continue
            if not any(a):
                return None
            j = _pivot(a)
            piv = (a, b)
            sub = [_eliminate(rows[order[q]], piv, j) for q in range(pos)]
            sub.append(_eliminate(_unit(k, j, 1), piv, j))
            sub.append(_eliminate(_unit(k, j, -1), piv, j))
            sub_c, _ = _eliminate((tuple(c), 0), piv, j)
            res = self.solve(sub, sub_c)
            if res is None:
                return None
            w, wd = res
            aj = a[j]
            acc = b * wd
            new = []
            it = iter(w)
            for l in range(k):
                if l == j:
                    new.append(0)
                else:
                    v = next(it)
                    acc -= a[l] * v
                    new.append(v * aj)
            new[j] = acc
            den = aj * wd
            if den < 0:
                den = -den
                new = [-v for v in new]
            g = math.gcd(den, *new)
            num = [v // g for v in new]
            den //= g
        return num, den


def solve_lp(rows: Sequence[Row], c: Sequence[int], seed: int = DEFAULT_SEED
             ) -> Optional[List[Fraction]]:
    """Optimal point of ``max c.z`` over ``A z <= b`` within ``[-1, 1]^k``.

    Returns Fractions, or None when infeasible.
    """
    res = _Solver(seed).solve(rows, tuple(c))
    if res is None:
        return None
    num, den = res
    return [Fraction(v, den) for v in num]


def solve_homogeneous(rows: Sequence[Row], c: Sequence[int], seed: int = DEFAULT_SEED):
    """Like ``solve_lp`` but returns ``(num, den)`` integers."""
    return _Solver(seed).solve(rows, tuple(c))


# ---------------------------------------------------------------------------
# numba int64 path

_U12 = np.uint64(12)
_U25 = np.uint64(25)
_U27 = np.uint64(27)
_MULT = np.uint64(MULT)
_GOLDEN = np.uint64(GOLDEN)


@njit
def _next(state):
    s = state[0]
    s ^= s >> _U12
    s ^= s << _U25
    s ^= s >> _U27
    state[0] = s
    return s * _MULT


@njit
def _shuffle(order, state):
    for i in range(order.shape[0] - 1, 0, -1):
        j = np.int64(_next(state) % np.uint64(i + 1))
        t = order[i]
        order[i] = order[j]
        order[j] = t


@njit
def _gcd(a, b):
    a = abs(a)
    b = abs(b)
    while b:
        a, b = b, a % b
    return a


@njit
def _eliminate_into(h, p, j, k, out):
    # h, p: coefficients then rhs (length k + 1); writes k entries to out
    sgn = 1 if p[j] > 0 else -1
    pj = p[j] * sgn
    hj = h[j]
    w = 0
    for l in range(k + 1):
        if l == j:
            continue
        out[w] = h[l] * pj - hj * (p[l] * sgn)
        w += 1
    g = 0
    for l in range(k):
        g = _gcd(g, out[l])
    if g > 1:
        for l in range(k):
            out[l] //= g
    for l in range(k):
        if abs(out[l]) >= INT_GUARD:
            return False
    return True


@njit
def _lift(piv, j, k, w, wd, num):
    # num (length k) <- homogeneous point on the pivot row extending w / wd
    aj = piv[j]
    acc = piv[k] * wd
    t = 0
    for l in range(k):
        if l == j:
            num[l] = 0
        else:
            acc -= piv[l] * w[t]
            num[l] = w[t] * aj
            t += 1
    num[j] = acc
    den = aj * wd
    if den < 0:
        den = -den
        for l in range(k):
            num[l] = -num[l]
    g = den
    for l in range(k):
        g = _gcd(g, num[l])
    den //= g
    for l in range(k):
        num[l] //= g
    if den >= INT_GUARD:
        return -1
    for l in range(k):
        if abs(num[l]) >= INT_GUARD:
            return -1
    return den


@njit
def _decode(pts, x, den, mode, i, out):
    # mode 0: row (den*s - x, den), rhs 0 for point i
    # mode 1: row (2s + v - 2x, 1), rhs 0 for point i >> d and sign bits i & (2^d - 1)
    d = pts.shape[1]
    if mode == 0:
        for j in range(d):
            out[j] = den * pts[i, j] - x[j]
        out[d] = den
    else:
        s = i >> d
        for j in range(d):
            v = 1 if (i >> j) & 1 else -1
            out[j] = 2 * pts[s, j] + v - 2 * x[j]
        out[d] = 1
    out[d + 1] = 0


@njit
def membership_kernel(pts, x, den, mode, seed):
    """Maximise t over (a, t) subject to the implicit rows (see ``_decode``).

    The Seidel recursion is unrolled onto explicit per-level buffers: level
    ``L`` has ``K - L`` unknowns, level 0 reads its rows through ``_decode``
    and deeper levels hold the eliminated rows.  Returns (status, num, den)
    with status 1 optimal, 0 infeasible, -1 overflow guard hit.
    """
    d = pts.shape[1]
    K = d + 1
    m0 = pts.shape[0] if mode == 0 else pts.shape[0] << d
    M = m0 + 2 * K + 2
    rows = np.empty((K + 1, M, K + 1), dtype=np.int64)
    order = np.empty((K + 1, M), dtype=np.int64)
    cs = np.zeros((K + 1, K), dtype=np.int64)
    nums = np.zeros((K + 1, K), dtype=np.int64)
    dens = np.ones(K + 1, dtype=np.int64)
    piv = np.zeros((K + 1, K + 1), dtype=np.int64)
    pj = np.zeros(K + 1, dtype=np.int64)
    ms = np.zeros(K + 1, dtype=np.int64)
    pos = np.zeros(K + 1, dtype=np.int64)
    r = np.empty(K + 1, dtype=np.int64)
    tmp = np.empty(K + 1, dtype=np.int64)
    unit = np.zeros(K + 1, dtype=np.int64)
    state = np.empty(1, dtype=np.uint64)
    s0 = np.uint64(seed) ^ _GOLDEN
    state[0] = s0 if s0 != 0 else _GOLDEN

    cs[0, d] = 1
    ms[0] = m0
    for l in range(K):
        nums[0, l] = 1 if cs[0, l] > 0 else -1
    for q in range(m0):
        order[0, q] = q
    _shuffle(order[0, :m0], state)

    L = 0
    while True:
        k = K - L
        if k == 0:
            feasible = True
            for q in range(ms[L]):
                if rows[L, q, 0] < 0:
                    feasible = False
            if not feasible:
                return 0, nums[0], dens[0]
            L -= 1
            dd = _lift(piv[L], pj[L], K - L, nums[L + 1], dens[L + 1], nums[L])
            if dd < 0:
                return -1, nums[0], dens[0]
            dens[L] = dd
            pos[L] += 1
            continue
        if pos[L] == ms[L]:
            if L == 0:
                return 1, nums[0], dens[0]
            L -= 1
            dd = _lift(piv[L], pj[L], K - L, nums[L + 1], dens[L + 1], nums[L])
            if dd < 0:
                return -1, nums[0], dens[0]
            dens[L] = dd
            pos[L] += 1
            continue
        idx = order[L, pos[L]]
        if L == 0:
            _decode(pts, x, den, mode, idx, r)
            for l in range(k):
                if abs(r[l]) >= INT_GUARD:
                    return -1, nums[0], dens[0]
        else:
            for l in range(k + 1):
                r[l] = rows[L, idx, l]
        s = np.int64(0)
        for l in range(k):
            s += r[l] * nums[L, l]
        if s <= r[k] * dens[L]:
            pos[L] += 1
            continue
        # violated: descend onto the hyperplane of r
        j = 0
        best = np.int64(0)
        for l in range(k):
            if abs(r[l]) > best:
                best = abs(r[l])
                j = l
        if best == 0:
            return 0, nums[0], dens[0]
        for l in range(k + 1):
            piv[L, l] = r[l]
        pj[L] = j
        c = L + 1
        for q in range(pos[L]):
            src = order[L, q]
            if L == 0:
                _decode(pts, x, den, mode, src, tmp)
            else:
                for l in range(k + 1):
                    tmp[l] = rows[L, src, l]
            if not _eliminate_into(tmp, r, j, k, rows[c, q]):
                return -1, nums[0], dens[0]
        for l in range(k + 1):
            unit[l] = 0
        unit[j] = 1
        unit[k] = 1
        _eliminate_into(unit, r, j, k, rows[c, pos[L]])
        unit[j] = -1
        _eliminate_into(unit, r, j, k, rows[c, pos[L] + 1])
        for l in range(k):
            tmp[l] = cs[L, l]
        tmp[k] = 0
        if not _eliminate_into(tmp, r, j, k, cs[c]):
            return -1, nums[0], dens[0]
        cs[c, k - 1] = 0
        ms[c] = pos[L] + 2
        pos[c] = 0
        dens[c] = 1
        for l in range(k - 1):
            nums[c, l] = 1 if cs[c, l] > 0 else -1
        for q in range(ms[c]):
            order[c, q] = q
        # the base level (no unknowns) only checks signs and draws no order
        if k > 1:
            _shuffle(order[c, :ms[c]], state)
        L = c


def membership_python(pts: List[Tuple[int, ...]], x: Sequence[int], den: int, mode: int,
                      seed: int = DEFAULT_SEED):
    """Pure-Python twin of ``membership_kernel``; returns ``(num, den)``."""
    d = len(x)

    class _Rows:
        def __len__(self):
            return len(pts) if mode == 0 else len(pts) << d

        def __getitem__(self, i):
            if mode == 0:
                s = pts[i]
                return tuple([den * s[j] - x[j] for j in range(d)] + [den]), 0
            s = pts[i >> d]
            return tuple([2 * s[j] + (1 if (i >> j) & 1 else -1) - 2 * x[j]
                          for j in range(d)] + [1]), 0

    return _Solver(seed).solve(_Rows(), (0,) * d + (1,))
