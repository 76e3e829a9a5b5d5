"""Truncated integer power series and the counting generating functions.

Everything is exact integer arithmetic on dense coefficient lists c[0..N].
The named families are products of E(q^a)^e where E(q) = prod (1 - q^m), so
each factor is applied as one sparse pass using the pentagonal-number
expansion of E: multiplication is a handful of shifted slice additions,
division a short linear recurrence.  That keeps a single family at N = 10000
well under a second without giving up arbitrary precision.

Families:
    p(n)       = [q^n] 1/E(q)                        unrestricted partitions
    phat_t(n)  = [q^n] 1/E(q)^t                      t-tuples of partitions
    sc(n)      = [q^n] prod (1 + q^(2m-1))           self-conjugate partitions
    c_t(n)     = [q^n] E(q^t)^t / E(q)               t-cores
    sc_t(n)    = [q^n] of the self-conjugate t-core product, by parity of t

with prod (1 + q^(2m-1)) = E(q^2)^2 / (E(q) E(q^4)).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import UnsupportedT


@dataclass(frozen=True)
class TruncatedSeries:
    """Integer coefficients c[0..order]; arithmetic never sees beyond order."""

    coeffs: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)


def pentagonal_terms(a: int, n: int) -> list[tuple[int, int]]:
    """(exponent, sign) pairs of E(q^a) - 1 up to q^n, sorted by exponent."""
    terms = []
    k = 1
    while a * (k * (3 * k - 1) // 2) <= n:
        s = -1 if k % 2 else 1
        g1 = a * (k * (3 * k - 1) // 2)
        g2 = a * (k * (3 * k + 1) // 2)
        terms.append((g1, s))
        if g2 <= n:
            terms.append((g2, s))
        k += 1
    terms.sort()
    return terms


def _multiply_eta(c: list[int], a: int, n: int) -> list[int]:
    """Return c * E(q^a) truncated at n."""
    out = list(c)
    for g, s in pentagonal_terms(a, n):
        src = c[: n + 1 - g]
        if s > 0:
            out[g:] = [x + y for x, y in zip(out[g:], src)]
        else:
            out[g:] = [x - y for x, y in zip(out[g:], src)]
    return out


def _divide_eta(c: list[int], a: int, n: int) -> list[int]:
    """Return c / E(q^a) truncated at n (linear recurrence, exact)."""
    terms = pentagonal_terms(a, n)
    r = list(c)
    for m in range(a, n + 1):
        acc = c[m]
        for g, s in terms:
            if g > m:
                break
            if s > 0:
                acc -= r[m - g]
            else:
                acc += r[m - g]
        r[m] = acc
    return r


def eta_product(n: int, factors: list[tuple[int, int]]) -> list[int]:
    """Coefficients of prod E(q^a)^e truncated at n.

    Positive exponents are applied before negative ones so intermediate
    coefficients stay as small as the final answer allows.
    """
    c = [0] * (n + 1)
    c[0] = 1
    for a, e in factors:
        for _ in range(e):
            c = _multiply_eta(c, a, n)
    for a, e in factors:
        for _ in range(-e):
            c = _divide_eta(c, a, n)
    return c


def multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Exact convolution truncated at the common order."""
    if a.order != b.order:
        raise ValueError("orders differ")
    n = a.order
    out = [0] * (n + 1)
    ac, bc = a.coeffs, b.coeffs
    for i, ai in enumerate(ac):
        if ai:
            for j in range(n + 1 - i):
                out[i + j] += ai * bc[j]
    return TruncatedSeries(tuple(out))


def binomial_factor(sign: int, step: int, offset: int, exponent: int, n: int) -> TruncatedSeries:
    """prod_{m >= 1} (1 + sign * q^(step*m + offset))^exponent truncated at n.

    The direct factor-by-factor route; slower than eta_product but fully
    general, and the reference the eta formulas are tested against.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if step < 1 or step + offset < 1:
        raise ValueError("factor exponents must be positive")
    c = [0] * (n + 1)
    c[0] = 1
    k = step + offset
    while k <= n:
        if exponent >= 0:
            for _ in range(exponent):
                for m in range(n, k - 1, -1):
                    c[m] += sign * c[m - k]
        else:
            for _ in range(-exponent):
                for m in range(k, n + 1):
                    c[m] -= sign * c[m - k]
        k += step
    return TruncatedSeries(tuple(c))


@lru_cache(maxsize=None)
def _odd_parts_factor(n: int) -> tuple[int, ...]:
    """prod (1 + q^(2m-1)) = E(q^2)^2 / (E(q) E(q^4)); cached, shared by sc_t."""
    c = [0] * (n + 1)
    c[0] = 1
    c = _multiply_eta(c, 2, n)
    c = _multiply_eta(c, 2, n)
    c = _divide_eta(c, 1, n)
    c = _divide_eta(c, 4, n)
    return tuple(c)


@lru_cache(maxsize=None)
def p_coeffs(n: int) -> TruncatedSeries:
    """Unrestricted partition numbers p(0..n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return TruncatedSeries(tuple(eta_product(n, [(1, -1)])))


@lru_cache(maxsize=None)
def phat_coeffs(t: int, n: int) -> TruncatedSeries:
    """Number of t-tuples of partitions with total size 0..n."""
    if t < 1:
        raise ValueError("t must be positive")
    return TruncatedSeries(tuple(eta_product(n, [(1, -t)])))


@lru_cache(maxsize=None)
def sc_coeffs(n: int) -> TruncatedSeries:
    """Self-conjugate partition counts sc(0..n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return TruncatedSeries(_odd_parts_factor(n))


@lru_cache(maxsize=None)
def c_t_coeffs(t: int, n: int) -> TruncatedSeries:
    """t-core partition counts c_t(0..n)."""
    if t < 1:
        raise ValueError("t must be positive")
    c = [0] * (n + 1)
    c[0] = 1
    for _ in range(t):
        c = _multiply_eta(c, t, n)
    c = _divide_eta(c, 1, n)
    return TruncatedSeries(tuple(c))


@lru_cache(maxsize=None)
def sc_t_coeffs(t: int, n: int) -> TruncatedSeries:
    """Self-conjugate t-core counts sc_t(0..n), t >= 2.

    Even t:  E(q^2t)^(t/2) * prod(1 + q^(2m-1))
    Odd t:   E(q^2t)^((t-1)/2) * prod(1 + q^(2m-1)) / prod(1 + q^(t(2m-1)))
    where the odd divisor expands to E(q^2t)^2 / (E(q^t) E(q^4t)).
    """
    if t < 2:
        raise UnsupportedT(f"sc_t series defined for t >= 2, got {t}")
    c = list(_odd_parts_factor(n))
    if t % 2 == 0:
        for _ in range(t // 2):
            c = _multiply_eta(c, 2 * t, n)
    else:
        e = (t - 1) // 2 - 2
        for _ in range(max(e, 0)):
            c = _multiply_eta(c, 2 * t, n)
        c = _multiply_eta(c, t, n)
        c = _multiply_eta(c, 4 * t, n)
        for _ in range(-min(e, 0)):
            c = _divide_eta(c, 2 * t, n)
    return TruncatedSeries(tuple(c))


def nsc_t_coeffs(t: int, n: int) -> TruncatedSeries:
    """Non-self-conjugate t-core counts: c_t(n) - sc_t(n)."""
    ct = c_t_coeffs(t, n)
    st = sc_t_coeffs(t, n)
    return TruncatedSeries(tuple(a - b for a, b in zip(ct.coeffs, st.coeffs)))


def clear_series_caches() -> None:
    """Drop every memoized series (used by cold-start timing checks)."""
    for fn in (p_coeffs, phat_coeffs, sc_coeffs, c_t_coeffs, sc_t_coeffs, _odd_parts_factor):
        fn.cache_clear()
