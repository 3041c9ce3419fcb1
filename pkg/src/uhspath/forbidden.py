"""Hitting sets built from a forbidden zero run, plus their survival FSM.

For d = floor(log_sigma(w / ln w)) - 1 >= 1, take every w-mer that starts
with 0^d together with every w-mer containing no 0^d run at all.  Removing
this set from the order-w de Bruijn graph kills all cycles (any long walk
either avoids 0^d forever or eventually starts a window with one) and the
longest remaining path has exactly w - d vertices.

The relative size of the run-avoiding part is the survival probability of a
small Markov chain: state i = current zero-run length, absorbing death at
run d.  Its transition matrix A_d has a closed-form characteristic
polynomial and a dominant eigenvalue bracketed in (1 - mu^d, 1 - mu^(d+1)),
mu = 1/sigma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import DEFAULT_NODE_BUDGET, check_budget
from .kmerset import KmerSet


def forbidden_d(sigma: int, w: int) -> int:
    """floor(log_sigma(w / ln w)) - 1, computed away from float rounding."""
    if w < 2:
        raise ValueError("need w >= 2")
    x = w / math.log(w)
    t = int(math.floor(math.log(x) / math.log(sigma)))
    while sigma**t > x:
        t -= 1
    while sigma ** (t + 1) <= x:
        t += 1
    return t - 1


def min_w_for_construction(sigma: int) -> int:
    """Smallest w with forbidden_d >= 1."""
    w = 2
    while forbidden_d(sigma, w) < 1:
        w += 1
    return w


def _max_zero_run(codes: np.ndarray, sigma: int, w: int) -> np.ndarray:
    run = np.zeros(codes.size, dtype=np.int8)
    best = np.zeros(codes.size, dtype=np.int8)
    for i in range(w):
        digit = (codes // sigma ** (w - 1 - i)) % sigma
        run = np.where(digit == 0, run + 1, 0).astype(np.int8)
        np.maximum(best, run, out=best)
    return best


def build_forbidden_set(sigma: int, w: int, budget: int = DEFAULT_NODE_BUDGET) -> KmerSet:
    """w-mers starting with 0^d, plus w-mers with no 0^d run (disjoint union)."""
    d = forbidden_d(sigma, w)
    if d < 1:
        raise ValueError(
            f"construction needs d >= 1; sigma={sigma} requires w >= {min_w_for_construction(sigma)}"
        )
    n = sigma**w
    check_budget(n, budget, "forbidden-run set")
    mask = np.zeros(n, dtype=bool)
    mask[: sigma ** (w - d)] = True  # first d symbols all zero
    codes = np.arange(n, dtype=np.int64)
    mask |= _max_zero_run(codes, sigma, w) < d
    return KmerSet(sigma, w, mask)


def forbidden_cardinality(sigma: int, w: int) -> int:
    """|F| without materializing it: sigma^(w-d) + (run-avoiding count)."""
    d = forbidden_d(sigma, w)
    if d < 1:
        raise ValueError("construction needs d >= 1")
    avoiders = survival_probability(sigma, d, w) * sigma**w
    assert avoiders.denominator == 1
    return sigma ** (w - d) + int(avoiders)


def remaining_path_bound(sigma: int, w: int) -> int:
    """Exact longest remaining path, in vertices: w - d."""
    d = forbidden_d(sigma, w)
    if d < 1:
        raise ValueError("construction needs d >= 1")
    return w - d


def remaining_path_witness(sigma: int, w: int) -> list[int]:
    """A path of w - d vertices outside the set, read off 1^(w-d) 0^d 1^(w-d-1).

    Every window of that string contains a 0^d run but never as a prefix,
    so all w - d windows survive.
    """
    d = forbidden_d(sigma, w)
    if d < 1:
        raise ValueError("construction needs d >= 1")
    s = [1] * (w - d) + [0] * d + [1] * (w - d - 1)
    n = sigma**w
    code = 0
    for v in s[:w]:
        code = code * sigma + v
    out = [code]
    for v in s[w:]:
        code = (code * sigma + v) % n
        out.append(code)
    return out


# -- survival FSM ------------------------------------------------------------


@dataclass(frozen=True)
class FsmMatrix:
    """Transition matrix of the zero-run chain, exact rational entries."""

    sigma: int
    d: int
    rows: tuple[tuple[Fraction, ...], ...]

    def as_float(self) -> np.ndarray:
        return np.array([[float(v) for v in row] for row in self.rows])


def fsm_matrix(sigma: int, d: int) -> FsmMatrix:
    """d x d matrix: first row all 1 - mu (run resets), subdiagonal mu (run grows)."""
    if d < 1:
        raise ValueError("need d >= 1")
    mu = Fraction(1, sigma)
    rows = []
    for i in range(d):
        row = [Fraction(0)] * d
        if i == 0:
            row = [1 - mu] * d
        else:
            row[i - 1] = mu
        rows.append(tuple(row))
    return FsmMatrix(sigma, d, tuple(rows))


def _mat_vec(rows, v):
    return tuple(sum(r * x for r, x in zip(row, v)) for row in rows)


def survival_probability(sigma: int, d: int, w: int) -> Fraction:
    """Exact probability that a uniform w-string contains no 0^d run."""
    if w < 0:
        raise ValueError("need w >= 0")
    A = fsm_matrix(sigma, d)
    p = tuple(Fraction(1) if i == 0 else Fraction(0) for i in range(d))
    for _ in range(w):
        p = _mat_vec(A.rows, p)
    return sum(p, Fraction(0))


def char_poly_eval(sigma: int, d: int, lam: Fraction) -> Fraction:
    """det(A_d - lam I), in closed form."""
    mu = Fraction(1, sigma)
    lam = Fraction(lam)
    if lam == mu:
        return (-mu) ** (d - 1) * ((1 - mu) * d - mu)
    num = lam ** (d + 1) - lam**d - mu ** (d + 1) + mu**d
    return (-1) ** d * num / (lam - mu)


def _g(mu: Fraction, d: int, lam: Fraction) -> Fraction:
    # same roots as the characteristic polynomial away from lam = mu
    return lam ** (d + 1) - lam**d - mu ** (d + 1) + mu**d


def bracket_holds(sigma: int, d: int) -> bool:
    """Sign change of the characteristic polynomial on (1 - mu^d, 1 - mu^(d+1))."""
    mu = Fraction(1, sigma)
    lo, hi = 1 - mu**d, 1 - mu ** (d + 1)
    return _g(mu, d, lo) * _g(mu, d, hi) < 0


def dominant_root(sigma: int, d: int, tol: Fraction = Fraction(1, 10**12)) -> Fraction:
    """Dominant eigenvalue of A_d by exact bisection on its bracket.

    Raises when the bracket carries no sign change (it fails for sigma=2,
    d=1, where the polynomial has a double root at 1/2).
    """
    mu = Fraction(1, sigma)
    lo, hi = 1 - mu**d, 1 - mu ** (d + 1)
    glo, ghi = _g(mu, d, lo), _g(mu, d, hi)
    if glo == 0:
        return lo
    if ghi == 0:
        return hi
    if (glo < 0) == (ghi < 0):
        raise ValueError(f"no sign change on the bracket for sigma={sigma}, d={d}")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        gm = _g(mu, d, mid)
        if gm == 0:
            return mid
        if (gm < 0) == (glo < 0):
            lo, glo = mid, gm
        else:
            hi = mid
    return (lo + hi) / 2


def dominant_eigenvector(sigma: int, d: int, root: Fraction | None = None) -> tuple[Fraction, ...]:
    """Right eigenvector (1, s, ..., s^(d-1)) with s = mu / root."""
    mu = Fraction(1, sigma)
    lam = dominant_root(sigma, d) if root is None else Fraction(root)
    s = mu / lam
    return tuple(s**i for i in range(d))


def eigenpair_residual(sigma: int, d: int, root: Fraction | None = None) -> float:
    """max_i |(A v)_i - lam v_i| for the closed-form eigenpair."""
    lam = dominant_root(sigma, d) if root is None else Fraction(root)
    v = dominant_eigenvector(sigma, d, lam)
    Av = _mat_vec(fsm_matrix(sigma, d).rows, v)
    return max(abs(float(a - lam * x)) for a, x in zip(Av, v))
