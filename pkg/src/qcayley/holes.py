"""Perfectness of G_n and odd-hole certificates.

An imperfect G_n always ships with an explicit induced odd cycle. The cycle is
built on a small factor nu of n (a Paley prime, or a product of two primes
= 3 mod 4), lifted to the prime-power part mu, then extended to n along a
closed walk in G_N for the cofactor N = n / mu.
"""
from dataclasses import dataclass

from . import kernels
from .cayley import quadratic_unitary_graph
from .errors import VerificationError
from .modring import (
    connection_set,
    crt_pair_combine,
    factorize,
    is_quadratic_unit,
    quadratic_units,
)
from .walks import QUADRATIC, pad_closed_walk, walk_with_signs

PALEY = "paley-factor"
CASE_A = "two-primes-case-a"
CASE_B = "two-primes-case-b"
CASE_C = "two-primes-case-c"
SEARCH = "search"

DEFAULT_SEARCH_CAP = 120


@dataclass(frozen=True)
class OddHoleCertificate:
    n: int
    vertices: tuple
    case: str
    nu: int = 0
    mu: int = 0
    cofactor: int = 1
    # +1 where v_{j+1} - v_j is a quadratic unit (an arc of Gamma_n), else -1
    orientations: tuple = ()

    def format(self):
        return (
            f"n={self.n} case={self.case} nu={self.nu} mu={self.mu} N={self.cofactor}\n"
            f"hole: {' '.join(map(str, self.vertices))}"
        )


@dataclass(frozen=True)
class PerfectnessVerdict:
    n: int
    perfect: bool
    reason: str  # even | prime-power-3-mod-4 | hole-exists | trivial
    certificate: object = None


def is_induced_odd_cycle(n, vertices) -> bool:
    """Distinct, cyclically adjacent, chordless, odd length >= 5 in G_n."""
    n = factorize(n).n
    vs = [v % n for v in vertices]
    k = len(vs)
    if k < 5 or k % 2 == 0 or len(set(vs)) != k:
        return False
    t = connection_set(n)
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if ((vs[j] - vs[i]) % n in t) != consecutive:
                return False
    return True


def _orientations(n, vertices):
    q = quadratic_units(n)
    k = len(vertices)
    return tuple(
        1 if (vertices[(j + 1) % k] - vertices[j]) % n in q else -1 for j in range(k)
    )


def brute_force_hole_search(n, max_len=7, cap=DEFAULT_SEARCH_CAP, complement=False):
    """Exhaustive search for an odd hole through 0 of length <= max_len.

    Returns a certificate (case ``"search"``) or None. With ``complement=True``
    the complement of G_n is searched instead; that certificate is for the
    complement graph and is not checked by :func:`is_induced_odd_cycle`.
    """
    n = factorize(n).n
    if n > cap:
        raise ValueError(f"brute-force search capped at n <= {cap}, got {n}")
    if max_len < 5 or max_len % 2 == 0:
        raise ValueError(f"max_len must be odd and >= 5, got {max_len}")
    g = quadratic_unitary_graph(n)
    if complement:
        g = g.complement()
    found = kernels.find_induced_odd_cycle(n, g.adjacency_mask(), max_len)
    if found is None:
        return None
    return OddHoleCertificate(n, tuple(found), SEARCH, nu=n, mu=n)


def paley_hole(p, max_len=None):
    """Shortest odd hole of G_p starting with the edge 0 - 1."""
    g = quadratic_unitary_graph(p)
    found = kernels.find_induced_odd_cycle(p, g.adjacency_mask(), 7, second=1)
    if found is None:
        limit = max_len or (p if p % 2 else p - 1)
        found = kernels.find_induced_odd_cycle(p, g.adjacency_mask(), limit, second=1)
    if found is None:
        raise VerificationError(f"no odd hole through edge 0-1 found in G_{p}")
    return tuple(found)


def _min_consecutive_triple(p):
    q = quadratic_units(p)
    for x in range(1, p - 2):
        if x in q and x + 1 in q and x + 2 in q:
            return x
    raise VerificationError(f"no consecutive triple of quadratic residues mod {p}")


def _max_consecutive_pair(p):
    q = quadratic_units(p)
    for x in range(p - 1, 1, -1):
        if x in q and x - 1 in q:
            return x
    raise VerificationError(f"no consecutive pair of quadratic residues mod {p}")


def two_prime_hole(p1, p2):
    """Five-hole in G_{p1 p2} for distinct primes p1, p2 = 3 (mod 4).

    Returns ``(case, p1, p2, coords, vertices)``; the primes come back in the
    roles the construction needs and ``coords`` are (mod p1, mod p2) pairs.
    """
    two1, two2 = is_quadratic_unit(2, p1), is_quadratic_unit(2, p2)
    if not two1 and not two2:
        p1, p2 = min(p1, p2), max(p1, p2)
        q = _min_consecutive_triple(p2)
        case = CASE_A
        coords = [(0, 0), (1, 1), (2, q + 1), (0, 2), (2, -q)]
    elif two1 != two2:
        if two1:
            p1, p2 = p2, p1
        case = CASE_B
        coords = [(0, 0), (1, 1), (2, 2), (0, 3), (1, 4)]
    else:
        q1, q2 = _max_consecutive_pair(p1), _max_consecutive_pair(p2)
        case = CASE_C
        coords = [(0, 0), (1, 1), (q1, -q2), (0, 1), (1, q2)]
    coords = [(x % p1, y % p2) for x, y in coords]
    vertices = tuple(crt_pair_combine(c, (p1, p2)) for c in coords)
    return case, p1, p2, coords, vertices


def construct_odd_hole(n) -> OddHoleCertificate:
    """Explicit odd hole of G_n for odd n that is not a power of a prime = 3 (mod 4)."""
    mod = factorize(n)
    n = mod.n
    if n % 2 == 0 or n == 1 or (mod.is_prime_power and mod.primes[0] % 4 == 3):
        raise ValueError(f"G_{n} is perfect; no odd hole to construct")
    exps = dict(mod.factors)
    ones = [p for p in mod.primes if p % 4 == 1]
    if ones:
        p = 5 if 5 in ones else ones[0]
        nu, case = p, PALEY
        xs = paley_hole(p)
        mu = p ** exps[p]
    else:
        primes = list(mod.primes)
        first = 3 if 3 in primes else primes[0]
        second = min(q for q in primes if q != first)
        case, p1, p2, _, xs = two_prime_hole(first, second)
        nu = p1 * p2
        mu = p1 ** exps[p1] * p2 ** exps[p2]
    if not is_induced_odd_cycle(nu, xs):
        raise VerificationError(f"{case} construction failed on G_{nu}: {xs}")
    if not is_induced_odd_cycle(mu, xs):
        raise VerificationError(f"lift of {xs} from G_{nu} to G_{mu} is not a hole")

    cofactor = n // mu
    length = len(xs)
    if cofactor == 1:
        vertices = tuple(xs)
    else:
        if case == PALEY:
            # 0 -> x -> x + y -> 0, all steps quadratic units, then padding
            base = walk_with_signs(cofactor, 0, (1, 1, 1), QUADRATIC)
            if base is None:
                raise VerificationError(f"no closed 3-walk in G_{cofactor}")
            walk = pad_closed_walk(base, length - 3)
        else:
            signs = _orientations(mu, xs)
            walk = walk_with_signs(cofactor, 0, signs, QUADRATIC)
            if walk is None:
                raise VerificationError(
                    f"no closed walk with signs {signs} in G_{cofactor}"
                )
        ys = walk.vertices()[:length]
        vertices = tuple(crt_pair_combine((x, y), (mu, cofactor)) for x, y in zip(xs, ys))
    if not is_induced_odd_cycle(n, vertices):
        raise VerificationError(f"assembled cycle {vertices} is not a hole of G_{n}")
    return OddHoleCertificate(
        n, vertices, case, nu, mu, cofactor, _orientations(n, vertices)
    )


def perfectness(n, certify=True) -> PerfectnessVerdict:
    mod = factorize(n)
    n = mod.n
    if n == 1:
        return PerfectnessVerdict(n, True, "trivial")
    if n % 2 == 0:
        return PerfectnessVerdict(n, True, "even")
    if mod.is_prime_power and mod.primes[0] % 4 == 3:
        return PerfectnessVerdict(n, True, "prime-power-3-mod-4")
    cert = construct_odd_hole(n) if certify else None
    return PerfectnessVerdict(n, False, "hole-exists", cert)
