"""Exact counting through powers of the smoothness transfer matrix.

M is the k x k 0/1 matrix with M[i][j] = 1 iff |i - j| <= 1: walks in it
are smooth words and closed walks are smooth cyclic words.  Everything is
computed over Python's arbitrary-precision integers, so results are exact
at any length.

Two query pipelines, per their cost profiles:

* row-sum queries (all smooth words, or refined by first letter) iterate
  the tridiagonal matrix-vector step, O(n k) big-integer additions;
* trace and single-entry queries (cyclic words, endpoint-refined counts)
  use binary exponentiation of the full matrix, exploiting that powers of
  the symmetric M are symmetric.

Necklace counts average the cyclic counts over rotations with Euler's
totient; the division is checked exact, since anything else is a bug.
"""
from __future__ import annotations

from operator import mul

from .chebyshev import theta_poly
from .genfunc import RationalSeries

Matrix = tuple[tuple[int, ...], ...]


def transfer_matrix(k: int) -> Matrix:
    """The k x k adjacency matrix of the smoothness step relation."""
    if k < 1:
        raise ValueError(f"alphabet size must be positive, got {k}")
    return tuple(tuple(1 if abs(i - j) <= 1 else 0 for j in range(k))
                 for i in range(k))


def matrix_power_apply(k: int, n: int, v: list[int]) -> list[int]:
    """M^n applied to ``v``, exactly; n = 0 returns a copy of ``v``.

    Uses the tridiagonal structure, so each step is O(k) additions.
    """
    if k < 1:
        raise ValueError(f"alphabet size must be positive, got {k}")
    if n < 0:
        raise ValueError(f"matrix power must be nonnegative, got {n}")
    if len(v) != k:
        raise ValueError(f"vector length {len(v)} does not match k={k}")
    w = list(v)
    for _ in range(n):
        w = [(w[i - 1] if i else 0) + w[i] + (w[i + 1] if i + 1 < k else 0)
             for i in range(k)]
    return w


def _mul_sym(a: Matrix, b: Matrix, k: int) -> Matrix:
    # a, b are powers of M, hence symmetric and commuting, so the product
    # is also symmetric and column j of b equals row j of b.
    rows: list[list[int]] = [[0] * k for _ in range(k)]
    for i in range(k):
        ai = a[i]
        for j in range(i, k):
            s = sum(map(mul, ai, b[j]))
            rows[i][j] = s
            rows[j][i] = s
    return tuple(tuple(r) for r in rows)


def matrix_power(k: int, n: int) -> Matrix:
    """M^n by binary exponentiation, exactly."""
    if n < 0:
        raise ValueError(f"matrix power must be nonnegative, got {n}")
    result = None
    base = transfer_matrix(k)
    while n:
        if n & 1:
            result = base if result is None else _mul_sym(result, base, k)
        n >>= 1
        if n:
            base = _mul_sym(base, base, k)
    if result is None:
        return tuple(tuple(int(i == j) for j in range(k)) for i in range(k))
    return result


def sw_exact(n: int, k: int) -> int:
    """Number of smooth words in [k]^n (1^T M^(n-1) 1 for n >= 1)."""
    if n < 0:
        raise ValueError(f"word length must be nonnegative, got {n}")
    if n == 0:
        return 1
    return sum(matrix_power_apply(k, n - 1, [1] * k))


def sw_prefix_exact(i: int, n: int, k: int) -> int:
    """Number of smooth words in [k]^n whose first letter is ``i``."""
    if not 1 <= i <= k:
        raise ValueError(f"first letter {i} outside alphabet 1..{k}")
    if n < 1:
        raise ValueError(f"prefix counts need length >= 1, got {n}")
    return matrix_power_apply(k, n - 1, [1] * k)[i - 1]


def scw_exact(n: int, k: int) -> int:
    """Number of smooth cyclic words in [k]^n (trace of M^n for n >= 1)."""
    if n < 0:
        raise ValueError(f"word length must be nonnegative, got {n}")
    if k < 1:
        raise ValueError(f"alphabet size must be positive, got {k}")
    if n == 0:
        return 1
    p = matrix_power(k, n)
    return sum(p[i][i] for i in range(k))


def scw_pair_exact(i: int, j: int, n: int, k: int) -> int:
    """Number of smooth cyclic words in [k]^n with first letter ``i`` and
    last letter ``j``; zero unless |i - j| <= 1."""
    if not 1 <= i <= k:
        raise ValueError(f"first letter {i} outside alphabet 1..{k}")
    if not 1 <= j <= k:
        raise ValueError(f"last letter {j} outside alphabet 1..{k}")
    if n < 2:
        raise ValueError(f"endpoint-refined counts need length >= 2, got {n}")
    if abs(i - j) > 1:
        return 0
    return matrix_power(k, n - 1)[i - 1][j - 1]


def divisors(m: int) -> list[int]:
    """Sorted positive divisors of ``m``."""
    if m < 1:
        raise ValueError(f"divisors need a positive integer, got {m}")
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def totient(m: int) -> int:
    """Euler's totient of ``m``, by trial-division factorization."""
    if m < 1:
        raise ValueError(f"totient needs a positive integer, got {m}")
    result = m
    rest = m
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def necklace_exact(n: int, k: int) -> int:
    """Number of smooth necklaces in [k]^n: the rotation average
    (1/n) sum_{d|n} phi(d) scw(n/d, k); n = 0 counts the empty necklace."""
    if n < 0:
        raise ValueError(f"word length must be nonnegative, got {n}")
    if n == 0:
        return 1
    total = sum(totient(d) * scw_exact(n // d, k) for d in divisors(n))
    if total % n:
        raise AssertionError(
            f"rotation-average sum {total} not divisible by {n}; counting bug")
    return total // n


def usmani_inverse_entry(i: int, j: int, k: int) -> RationalSeries:
    """Entry (i, j) of the inverse of A = I - xM, as a ratio of integer
    polynomials: x^|j-i| theta_{min-1} theta_{k-max} / theta_k."""
    if not 1 <= i <= k:
        raise ValueError(f"row index {i} outside 1..{k}")
    if not 1 <= j <= k:
        raise ValueError(f"column index {j} outside 1..{k}")
    lo, hi = min(i, j), max(i, j)
    num = (theta_poly(lo - 1) * theta_poly(k - hi)).shift(hi - lo)
    return RationalSeries(num, theta_poly(k))
