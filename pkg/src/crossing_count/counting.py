"""Exact counts of k-noncrossing matchings and partial matchings.

A perfect matching on [n] with no k mutually crossing arcs corresponds to
a closed walk of length n on Young diagrams with at most k-1 rows, where
every step adds or removes exactly one square (an oscillating tableau
that starts and ends at the empty shape).  One forward sweep of that walk
DP therefore yields the whole sequence f_k(0,0), ..., f_k(N,0) at once;
partial-matching counts follow by choosing which vertices stay isolated.

Everything here is exact: counts are plain Python integers and are never
rounded.  Results are cached per (k, n); the caches are filled under a
lock and behave as write-once-per-key, so concurrent callers always see
the same values.
"""

from __future__ import annotations

import math
import threading

_lock = threading.Lock()
_fk_tables: dict[int, list[int]] = {}
_tk_cache: dict[tuple[int, int], int] = {}


def catalan(m: int) -> int:
    """m-th Catalan number, binom(2m, m) / (m + 1)."""
    if m < 0:
        raise ValueError(f"Catalan index must be nonnegative, got {m}")
    return math.comb(2 * m, m) // (m + 1)


def _closed_walk_counts(k: int, n_max: int) -> list[int]:
    """Closed oscillating-tableaux walks with at most k-1 rows.

    Returns [f_k(0,0), ..., f_k(n_max,0)].  States are weakly decreasing
    row tuples; a shape larger than the number of remaining steps can no
    longer shrink back to the empty shape and is dropped, which keeps the
    frontier small without losing any closed walk of length <= n_max.
    """
    max_rows = k - 1
    counts = [0] * (n_max + 1)
    counts[0] = 1
    frontier: dict[tuple[int, ...], int] = {(): 1}
    for step in range(1, n_max + 1):
        budget = n_max - step
        nxt: dict[tuple[int, ...], int] = {}
        get = nxt.get
        for shape, ways in frontier.items():
            rows = len(shape)
            if sum(shape) < budget:
                # add one square to any row that stays weakly decreasing
                for i in range(rows):
                    if i == 0 or shape[i - 1] > shape[i]:
                        cand = shape[:i] + (shape[i] + 1,) + shape[i + 1 :]
                        nxt[cand] = get(cand, 0) + ways
                if rows < max_rows:
                    cand = shape + (1,)
                    nxt[cand] = get(cand, 0) + ways
            # remove one square; a row emptied this way is always the last
            for i in range(rows):
                if i == rows - 1 or shape[i] > shape[i + 1]:
                    v = shape[i] - 1
                    cand = shape[:i] + (v,) + shape[i + 1 :] if v else shape[:i]
                    nxt[cand] = get(cand, 0) + ways
        counts[step] = nxt.get((), 0)
        frontier = nxt
    return counts


def _fk_table(k: int, n: int) -> list[int]:
    table = _fk_tables.get(k)
    if table is not None and len(table) > n:
        return table
    with _lock:
        table = _fk_tables.get(k)
        if table is None or len(table) <= n:
            grown = 2 * (len(table) - 1) if table else 0
            table = _closed_walk_counts(k, max(n, grown, 32))
            _fk_tables[k] = table
    return table


def fk_perfect(k: int, n: int) -> int:
    """Number of perfect matchings on [n] with no k mutually crossing arcs.

    Zero for odd n (no perfect matching exists) and one for n = 0 (the
    empty matching).
    """
    if k < 2:
        raise ValueError(f"crossing bound k must be >= 2, got {k}")
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    return _fk_table(k, n)[n]


def fk_closed_form_k3(n: int) -> int:
    """Catalan closed form for the k = 3 perfect-matching count.

    Independent of the walk DP: C_{n/2+2} * C_{n/2} - C_{n/2+1}^2.
    """
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    if n % 2:
        raise ValueError(f"closed form needs an even vertex count, got {n}")
    m = n // 2
    return catalan(m + 2) * catalan(m) - catalan(m + 1) ** 2


def fk_partial(k: int, n: int, ell: int) -> int:
    """Matchings on [n] with exactly ell isolated vertices, crossing < k.

    Choosing the isolated vertices reduces to the perfect case:
    binom(n, ell) * fk_perfect(k, n - ell).
    """
    if not 0 <= ell <= n:
        raise ValueError(f"need 0 <= ell <= n, got ell={ell}, n={n}")
    return math.comb(n, ell) * fk_perfect(k, n - ell)


def tk_total(k: int, n: int) -> int:
    """Total number of partial matchings on [n] with crossing number < k."""
    if n < 0:
        raise ValueError(f"vertex count must be nonnegative, got {n}")
    key = (k, n)
    value = _tk_cache.get(key)
    if value is None:
        value = sum(
            math.comb(n, 2 * m) * fk_perfect(k, 2 * m) for m in range(n // 2 + 1)
        )
        _tk_cache.setdefault(key, value)
    return value
