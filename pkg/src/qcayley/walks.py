"""Signed walks: r = s_1 u_1 + ... + s_l u_l (mod n) with u_i from a step set.

The step set is either the quadratic units Q_n (walks in G_n) or all units
(walks in the unitary Cayley graph). Every search is exhaustive over Z_n and
breaks ties towards the smallest step, then towards the + sign.
"""
from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .cayley import CirculantGraph, distances_from_zero
from .modring import factorize, quadratic_units, units

QUADRATIC = "quadratic-units"
ALL_UNITS = "all-units"
KINDS = (QUADRATIC, ALL_UNITS)


class UnreachableError(ValueError):
    pass


@lru_cache(maxsize=None)
def step_set(n, kind=QUADRATIC) -> tuple:
    if kind == QUADRATIC:
        return tuple(sorted(quadratic_units(n)))
    if kind == ALL_UNITS:
        return units(n)
    raise ValueError(f"unknown step-set kind {kind!r}")


def _normalize_signs(signs):
    out = []
    for s in signs:
        if s in (1, "+", "+1"):
            out.append(1)
        elif s in (-1, "-", "-1"):
            out.append(-1)
        else:
            raise ValueError(f"sign must be +1 or -1, got {s!r}")
    return tuple(out)


@dataclass(frozen=True)
class SignedWalk:
    n: int
    target: int
    signs: tuple
    steps: tuple
    kind: str = QUADRATIC

    def __post_init__(self):
        if len(self.signs) != len(self.steps):
            raise ValueError("signs and steps differ in length")
        allowed = set(step_set(self.n, self.kind))
        if any(u not in allowed for u in self.steps):
            raise ValueError(f"walk uses a step outside the {self.kind} step set")
        total = sum(s * u for s, u in zip(self.signs, self.steps)) % self.n
        if total != self.target % self.n:
            raise ValueError(f"walk sums to {total}, not {self.target} (mod {self.n})")

    def __len__(self):
        return len(self.steps)

    def vertices(self):
        """Partial sums 0, s_1 u_1, ..., ending at the target."""
        out, cur = [0], 0
        for s, u in zip(self.signs, self.steps):
            cur = (cur + s * u) % self.n
            out.append(cur)
        return out

    def format(self):
        terms = " ".join(f"{'+' if s > 0 else '-'}{u}" for s, u in zip(self.signs, self.steps))
        return f"{self.target} = {terms or '0'}  (mod {self.n})"


def _walk_graph(n, kind):
    steps = step_set(n, kind)
    return CirculantGraph(n, frozenset(steps) | frozenset(-u % n for u in steps), False)


def min_signed_walk(n, r, kind=QUADRATIC) -> SignedWalk:
    """A shortest signed walk from 0 to r (its length is the graph distance)."""
    n = factorize(n).n
    r %= n
    dist = distances_from_zero(_walk_graph(n, kind))
    if dist[r] < 0:
        raise UnreachableError(f"{r} is unreachable from 0 with {kind} steps mod {n}")
    steps = step_set(n, kind)
    signs, used = [], []
    cur, remaining = 0, dist[r]
    while remaining:
        for u in steps:
            for s in (1, -1):
                if dist[(r - cur - s * u) % n] == remaining - 1:
                    break
            else:
                continue
            break
        else:  # pragma: no cover - BFS distances guarantee a step
            raise AssertionError("no distance-decreasing step")
        signs.append(s)
        used.append(u)
        cur = (cur + s * u) % n
        remaining -= 1
    return SignedWalk(n, r, tuple(signs), tuple(used), kind)


@lru_cache(maxsize=4096)
def _suffix_sets(n, signs, kind):
    # sets[k] = all values of s_k u_k + ... + s_{l-1} u_{l-1}
    steps = step_set(n, kind)
    sets = [None] * (len(signs) + 1)
    last = bytearray(n)
    last[0] = 1
    sets[-1] = bytes(last)
    for k in range(len(signs) - 1, -1, -1):
        signed = [signs[k] * u % n for u in steps]
        last = kernels.sumset(n, last, signed)
        sets[k] = bytes(last)
    return tuple(sets)


def walk_with_signs(n, r, signs, kind=QUADRATIC):
    """A walk to r with exactly the prescribed signs, or None if none exists."""
    n = factorize(n).n
    r %= n
    signs = _normalize_signs(signs)
    sets = _suffix_sets(n, signs, kind)
    if not sets[0][r]:
        return None
    steps = step_set(n, kind)
    cur, used = 0, []
    for k, s in enumerate(signs):
        after = sets[k + 1]
        for u in steps:
            if after[(r - cur - s * u) % n]:
                break
        else:  # pragma: no cover
            raise AssertionError("suffix sets inconsistent")
        used.append(u)
        cur = (cur + s * u) % n
    return SignedWalk(n, r, signs, tuple(used), kind)


def sign_pattern_feasible(n, signs, kind=QUADRATIC) -> bool:
    """Whether every residue is reachable with this sign pattern."""
    n = factorize(n).n
    return all(_suffix_sets(n, _normalize_signs(signs), kind)[0])


def pad_closed_walk(walk: SignedWalk, extra) -> SignedWalk:
    """Append ``extra / 2`` closed walks (+u, -u) with u the smallest step."""
    if extra < 0 or extra % 2:
        raise ValueError(f"padding must be a non-negative even length, got {extra}")
    u = step_set(walk.n, walk.kind)[0]
    return SignedWalk(
        walk.n,
        walk.target,
        walk.signs + (1, -1) * (extra // 2),
        walk.steps + (u, u) * (extra // 2),
        walk.kind,
    )
