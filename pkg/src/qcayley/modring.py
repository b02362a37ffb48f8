"""Exact arithmetic in Z_n: factorization, CRT maps, units and quadratic units.

Residues are plain ints kept in the canonical range [0, n). Every function
that takes a modulus accepts either an int or a :class:`Modulus`.
"""
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, prod
from operator import index

BRUTE_FORCE_SQRT_LIMIT = 10_000


@dataclass(frozen=True)
class Modulus:
    """A positive modulus together with its prime-power factorization."""

    n: int
    factors: tuple  # ((p, m), ...) with p strictly increasing

    def __post_init__(self):
        if prod(p**m for p, m in self.factors) != self.n:
            raise ValueError(f"factors {self.factors} do not multiply to {self.n}")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)) or any(m < 1 for _, m in self.factors):
            raise ValueError(f"malformed factor list {self.factors}")

    def __index__(self):
        return self.n

    __int__ = __index__

    @property
    def primes(self):
        return tuple(p for p, _ in self.factors)

    @property
    def prime_powers(self):
        return tuple(p**m for p, m in self.factors)

    @property
    def omega(self):
        """Number of distinct prime factors."""
        return len(self.factors)

    @property
    def is_prime(self):
        return len(self.factors) == 1 and self.factors[0][1] == 1

    @property
    def is_prime_power(self):
        return len(self.factors) == 1


@lru_cache(maxsize=None)
def factorize(n) -> Modulus:
    """Factor ``n`` by trial division."""
    n = index(n)
    if n < 1:
        raise ValueError(f"modulus must be a positive integer, got {n}")
    factors = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            m = 0
            while rest % p == 0:
                rest //= p
                m += 1
            factors.append((p, m))
        p += 1 if p == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Modulus(n, tuple(factors))


def is_prime(p) -> bool:
    p = index(p)
    return p >= 2 and factorize(p).is_prime


def crt_split(r, n) -> tuple:
    """Image of ``r`` under Z_n -> Z_{p1^m1} + ... + Z_{pt^mt}."""
    mod = factorize(n)
    return tuple(r % q for q in mod.prime_powers)


def crt_combine(components, n) -> int:
    """Inverse of :func:`crt_split`."""
    mod = factorize(n)
    qs = mod.prime_powers
    components = tuple(components)
    if len(components) != len(qs):
        raise ValueError(
            f"expected {len(qs)} CRT components for n={mod.n}, got {len(components)}"
        )
    return crt_pair_combine(components, qs)


def crt_pair_combine(residues, moduli) -> int:
    """Solve x = residues[i] (mod moduli[i]) for pairwise coprime moduli."""
    total = prod(moduli)
    x = 0
    for r, q in zip(residues, moduli):
        rest = total // q
        x += r * rest * pow(rest, -1, q) if q > 1 else 0
    return x % total if total > 1 else 0


@lru_cache(maxsize=None)
def units(n) -> tuple:
    n = index(n)
    if n == 1:
        return (0,)
    return tuple(u for u in range(1, n) if gcd(u, n) == 1)


@lru_cache(maxsize=None)
def quadratic_units(n) -> frozenset:
    """Q_n: squares of the units, by direct enumeration."""
    n = index(n)
    return frozenset(u * u % n for u in units(n))


@lru_cache(maxsize=None)
def connection_set(n) -> frozenset:
    """T_n = Q_n together with its negatives."""
    n = index(n)
    q = quadratic_units(n)
    return q | frozenset(-x % n for x in q)


def _is_qu_prime_power(r, p, m):
    if p == 2:
        if m == 1:
            return r % 2 == 1
        if m == 2:
            return r % 4 == 1
        return r % 8 == 1
    r %= p
    return r != 0 and pow(r, (p - 1) // 2, p) == 1


def is_quadratic_unit(r, n) -> bool:
    """Membership in Q_n decided prime power by prime power."""
    mod = factorize(n)
    if mod.n == 1:
        return True
    return all(_is_qu_prime_power(r % p**m, p, m) for p, m in mod.factors)


def minus_one_is_square(n) -> bool:
    """Whether -1 lies in Q_n, from the factor criterion."""
    mod = factorize(n)
    if mod.n == 1:
        return True
    for p, m in mod.factors:
        if p == 2:
            if m >= 2:
                return False
        elif p % 4 == 3:
            return False
    return True


def is_unit(r, n) -> bool:
    n = index(n)
    return gcd(r % n, n) == 1


def mod_inverse(r, n) -> int:
    n = index(n)
    if n == 1:
        return 0
    try:
        return pow(r % n, -1, n)
    except ValueError:
        raise ValueError(f"{r % n} is not a unit modulo {n}") from None


@lru_cache(maxsize=64)
def _sqrt_table(n):
    table = {}
    for u in units(n):
        table.setdefault(u * u % n, u)
    return table


def sqrt_in_units(q, n, method="auto") -> int:
    """A unit u with u*u = q (mod n).

    ``method`` is ``"brute"`` (smallest root, by enumeration), ``"fast"``
    (Tonelli-Shanks and Hensel lifting per prime power, then CRT), or
    ``"auto"`` (brute force up to ``BRUTE_FORCE_SQRT_LIMIT``).
    """
    n = index(n)
    q %= n
    if not is_quadratic_unit(q, n):
        raise ValueError(f"{q} is not a quadratic unit modulo {n}")
    if method == "auto":
        method = "brute" if n <= BRUTE_FORCE_SQRT_LIMIT else "fast"
    if method == "brute":
        return _sqrt_table(n)[q]
    if method != "fast":
        raise ValueError(f"unknown method {method!r}")
    mod = factorize(n)
    roots = [_sqrt_prime_power(q % p**m, p, m) for p, m in mod.factors]
    return crt_pair_combine(roots, mod.prime_powers)


def _tonelli_shanks(a, p):
    a %= p
    if p == 2 or a in (0, 1):
        return a
    s, odd = 0, p - 1
    while odd % 2 == 0:
        odd //= 2
        s += 1
    if s == 1:
        return pow(a, (p + 1) // 4, p)
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    c = pow(z, odd, p)
    x = pow(a, (odd + 1) // 2, p)
    t = pow(a, odd, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (s - i - 1), p)
        x = x * b % p
        c = b * b % p
        t = t * c % p
        s = i
    return x


def _sqrt_prime_power(a, p, m):
    q = p**m
    if p == 2:
        if m <= 2:
            return 1
        x = 1
        for k in range(3, m):
            # x^2 = a mod 2^k; fix bit k-1 so it holds mod 2^(k+1)
            if (x * x - a) % (1 << (k + 1)):
                x += 1 << (k - 1)
        return x % q
    x = _tonelli_shanks(a, p)
    pk = p
    for _ in range(1, m):
        pk *= p
        x = (x - (x * x - a) * pow(2 * x, -1, pk)) % pk
    return x % q
