"""Counts of representations r = x + y and r = x - y with x, y quadratic units.

Closed forms cover odd moduli only; :func:`sd_oracle` enumerates and works for
any modulus. Pairs are ordered throughout.
"""
from dataclasses import dataclass
from functools import lru_cache
from math import prod

from . import kernels
from .modring import crt_split, factorize, is_prime, is_quadratic_unit, quadratic_units


@dataclass(frozen=True)
class PairCounts:
    s: int  # ordered (x, y) in Q_n x Q_n with x + y = r
    d: int  # ordered (x, y) in Q_n x Q_n with x - y = r


@dataclass(frozen=True)
class AladovTable:
    """Consecutive-pair counts modulo p^m; ``pm`` counts (residue, non-residue)."""

    cpp: int
    cpm: int
    cmp: int
    cmm: int

    @property
    def total(self):
        return self.cpp + self.cpm + self.cmp + self.cmm


def _check_odd_prime(p, m):
    if p == 2:
        raise ValueError("closed forms require an odd prime (p = 2 rejected)")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"exponent must be >= 1, got {m}")


def aladov_counts(p, m=1) -> AladovTable:
    _check_odd_prime(p, m)
    scale = p ** (m - 1)
    if p % 4 == 1:
        other = (p - 1) * scale // 4
        return AladovTable((p - 5) * scale // 4, other, other, other)
    other = (p - 3) * scale // 4
    return AladovTable(other, (p + 1) * scale // 4, other, other)


def aladov_enumerate(p, m=1) -> AladovTable:
    """Count consecutive unit pairs (r, r + 1) modulo p^m by direct enumeration."""
    n = p**m
    qs = quadratic_units(n)
    counts = {"++": 0, "+-": 0, "-+": 0, "--": 0}
    for r in range(n):
        a, b = r, (r + 1) % n
        if a % p == 0 or b % p == 0:
            continue
        key = ("+" if a in qs else "-") + ("+" if b in qs else "-")
        counts[key] += 1
    return AladovTable(counts["++"], counts["+-"], counts["-+"], counts["--"])


def sd_prime_power(p, m, r) -> PairCounts:
    """S and D at r modulo p^m from the closed forms."""
    _check_odd_prime(p, m)
    scale = p ** (m - 1)
    r %= p**m
    zero_div = r % p == 0
    square = not zero_div and is_quadratic_unit(r, p)
    if p % 4 == 1:
        if zero_div:
            v = (p - 1) * scale // 2
        elif square:
            v = (p - 5) * scale // 4
        else:
            v = (p - 1) * scale // 4
        return PairCounts(v, v)
    if zero_div:
        return PairCounts(0, (p - 1) * scale // 2)
    s = (p - 3) * scale // 4 if square else (p + 1) * scale // 4
    return PairCounts(s, (p - 3) * scale // 4)


def sd_counts(n, r) -> PairCounts:
    """Product of prime-power closed forms over the CRT components of r."""
    mod = factorize(n)
    if mod.n % 2 == 0:
        raise ValueError(f"closed forms cover odd n only; use sd_oracle for n={mod.n}")
    if mod.n == 1:
        return PairCounts(1, 1)
    parts = [
        sd_prime_power(p, m, rj) for (p, m), rj in zip(mod.factors, crt_split(r, mod))
    ]
    return PairCounts(prod(c.s for c in parts), prod(c.d for c in parts))


def sd_oracle(n, r) -> PairCounts:
    """Brute-force count over Q_n: for each x, test whether the partner lies in Q_n."""
    n = factorize(n).n
    qs = quadratic_units(n)
    r %= n
    s = sum(1 for x in qs if (r - x) % n in qs)
    d = sum(1 for x in qs if (x - r) % n in qs)
    return PairCounts(s, d)


@lru_cache(maxsize=32)
def sd_oracle_table(n):
    """(s, d) lists indexed by r, via the pair-count kernel over Q_n x Q_n."""
    n = factorize(n).n
    s, d = kernels.pair_counts(n, sorted(quadratic_units(n)))
    return tuple(s), tuple(d)


def sd_zero_predicate(n, r) -> tuple:
    """(S_n(r) == 0, D_n(r) == 0) from the divisibility conditions alone."""
    mod = factorize(n)
    if mod.n % 2 == 0:
        raise ValueError(f"zero conditions cover odd n only, got n={mod.n}")
    r %= mod.n
    by3 = 3 in mod.primes
    by5 = 5 in mod.primes
    five_unit_square = by5 and r % 5 in (1, 4)
    s_zero = (
        (by3 and r % 3 != 2)
        or five_unit_square
        or any(p % 4 == 3 and r % p == 0 for p in mod.primes)
    )
    d_zero = (by3 and r % 3 != 0) or five_unit_square
    return s_zero, d_zero
