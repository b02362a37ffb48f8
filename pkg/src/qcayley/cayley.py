"""Quadratic unitary Cayley graphs G_n = Cay(Z_n, T_n) and Gamma_n = Cay(Z_n, Q_n).

Graphs are stored implicitly by their step set. Distances are computed from
vertex 0 only, which suffices because every G_n is vertex-transitive.
"""
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, prod

from . import kernels
from .errors import VerificationError
from .modring import (
    connection_set,
    factorize,
    is_quadratic_unit,
    mod_inverse,
    quadratic_units,
)


@dataclass(frozen=True)
class CirculantGraph:
    n: int
    steps: frozenset
    directed: bool = False

    def __post_init__(self):
        if 0 in self.steps:
            object.__setattr__(self, "steps", self.steps - {0})
        if not self.directed and any(-s % self.n not in self.steps for s in self.steps):
            raise ValueError("undirected circulant graph needs negation-closed steps")

    def has_arc(self, a, b):
        return (b - a) % self.n in self.steps

    def arcs(self):
        n = self.n
        return frozenset((a, (a + s) % n) for a in range(n) for s in self.steps)

    def adjacency_mask(self):
        """Byte mask over differences: mask[k] == 1 iff k is a step."""
        mask = bytearray(self.n)
        for s in self.steps:
            mask[s] = 1
        return mask

    def complement(self):
        if self.directed:
            raise ValueError("complement is only defined here for undirected graphs")
        rest = frozenset(range(1, self.n)) - self.steps
        return CirculantGraph(self.n, rest, False)


def quadratic_unitary_graph(n) -> CirculantGraph:
    """G_n: a ~ b iff a - b is plus or minus a quadratic unit."""
    n = factorize(n).n
    return CirculantGraph(n, connection_set(n), False)


def directed_quadratic_unitary_graph(n) -> CirculantGraph:
    """Gamma_n: a -> b iff b - a is a quadratic unit."""
    n = factorize(n).n
    return CirculantGraph(n, quadratic_units(n), True)


@lru_cache(maxsize=256)
def distances_from_zero(g: CirculantGraph) -> tuple:
    return tuple(kernels.bfs_distances(g.n, sorted(g.steps)))


def bfs_eccentricity_zero(g: CirculantGraph):
    """Largest distance from 0, or None when some vertex is unreachable."""
    dist = distances_from_zero(g)
    if min(dist) < 0:
        return None
    return max(dist)


# ---------------------------------------------------------------------------
# closed-form diameters


@dataclass(frozen=True)
class DiameterReport:
    n: int
    formula_value: int
    case_label: str
    bfs_value: object = None  # int, None if not computed; see `unreachable`
    unreachable: bool = False


def _delta3(mod):
    return int(any(p % 4 == 3 and p > 3 for p in mod.primes))


def _formula(mod):
    n = mod.n
    if n == 1:
        return 0, "n=1-convention"
    if n % 2:
        if mod.is_prime:
            return (1, "odd-prime-3mod4") if n % 4 == 3 else (2, "odd-prime-1mod4")
        if mod.omega == 1:
            return 2, "odd-prime-power"
        g3 = int(n % 3 == 0)
        g5 = int(n % 5 == 0)
        return 2 + g3 * _delta3(mod) + g5, "odd-composite"
    d3 = _delta3(mod)
    if n % 24 == 0:
        return 12, "even-24k"
    if n % 12 == 0:
        return 6, "even-odd-12k"
    if n % 10 == 0:
        return 5, "even-10k-not-12k"
    if n % 8 == 0 and gcd(n // 8, 15) == 1:
        return 4, "even-8k"
    if n % 6 == 0 and gcd(n // 6, 10) == 1:
        return 3 + d3, "even-6k"
    if n % 4 == 0 and n > 4 and gcd(n // 4, 30) == 1:
        return 3 + d3, "even-4k"
    if n > 2 and gcd(n // 2, 30) == 1:
        return 3, "even-2k"
    if n == 4:
        return 2, "n=4"
    if n == 2:
        return 1, "n=2"
    raise AssertionError(f"no diameter clause matched n={n}")  # pragma: no cover


def diameter_formula(n, verify=False) -> DiameterReport:
    """Closed-form diameter of G_n, with the clause that produced it.

    With ``verify=True`` the BFS eccentricity is computed too and a mismatch
    raises :class:`VerificationError`.
    """
    mod = factorize(n)
    value, label = _formula(mod)
    if not verify:
        return DiameterReport(mod.n, value, label)
    bfs = bfs_eccentricity_zero(quadratic_unitary_graph(mod.n))
    if bfs != value:
        raise VerificationError(
            f"diam(G_{mod.n}): formula {value} ({label}) but BFS gives {bfs}"
        )
    return DiameterReport(mod.n, value, label, bfs, bfs is None)


# ---------------------------------------------------------------------------
# uniform diameter of the directed graph


def uniform_diameter(g: CirculantGraph):
    """Least d with an exact-length-d walk from 0 to every vertex, else None.

    Iterates R_{k+1} = R_k + steps from R_0 = {0}; a repeated state before
    R_k = Z_n proves that no such d exists.
    """
    if not g.directed:
        raise ValueError("uniform_diameter expects the directed graph Gamma_n")
    n = g.n
    steps = sorted(g.steps) if n > 1 else [0]
    reach = bytearray(n)
    reach[0] = 1
    seen = {bytes(reach)}
    for k in range(0, 2 * n + 1):
        if all(reach):
            return k
        reach = kernels.sumset(n, reach, steps)
        key = bytes(reach)
        if key in seen and not all(reach):
            return None
        seen.add(key)
    raise RuntimeError(f"reachable sets of Gamma_{n} did not settle within {2 * n} steps")


def uniform_diameter_formula(n) -> int:
    """Closed form for udiam(Gamma_n) when n > 1 is coprime to 6."""
    mod = factorize(n)
    if mod.n < 2 or gcd(mod.n, 6) != 1:
        raise ValueError(f"closed form needs n > 1 coprime to 6, got {mod.n}")
    if mod.n % 5 == 0:
        return 4
    if all(p % 4 == 1 for p in mod.primes):
        return 2
    return 3


# ---------------------------------------------------------------------------
# tensor products


def tensor_factorizes(M, N) -> bool:
    """G_M (x) G_N = G_MN for coprime M, N iff -1 is a quadratic unit mod M or N."""
    M, N = factorize(M).n, factorize(N).n
    if gcd(M, N) != 1:
        raise ValueError(f"tensor criterion needs coprime factors, got {M}, {N}")
    return is_quadratic_unit(-1, M) or is_quadratic_unit(-1, N)


def connection_set_splits(M, N) -> bool:
    """Explicit check that the CRT image of T_MN equals T_M x T_N."""
    M, N = factorize(M).n, factorize(N).n
    if gcd(M, N) != 1:
        raise ValueError(f"need coprime factors, got {M}, {N}")
    image = {(t % M, t % N) for t in connection_set(M * N)}
    return image == {(a, b) for a in connection_set(M) for b in connection_set(N)}


def _corollary_split(mod):
    # full split over prime powers of a modulus with no prime = 1 (mod 4)
    bad = sum(1 for p in mod.primes if p % 4 != 1)
    return bad <= 1 or (bad == 2 and mod.n % 4 == 2)


@dataclass(frozen=True)
class TensorDecomposition:
    n: int
    factors: tuple  # moduli of the tensor factors, G_n = (x) G_f
    residual: int  # part of n free of primes = 1 (mod 4)
    residual_splits: bool
    refinements: tuple = field(default=())  # (q, base, clique): G_q = G_base (x) K_clique

    def describe(self):
        if not self.factors:
            return "G_1"
        text = " x ".join(f"G_{f}" for f in self.factors)
        for q, base, clique in self.refinements:
            text += f"; G_{q} = G_{base} x K_{clique}"
        return text


def full_tensor_decomposition(n) -> TensorDecomposition:
    mod = factorize(n)
    factors = [p**m for p, m in mod.factors if p % 4 == 1]
    residual = mod.n // prod(factors)
    rmod = factorize(residual)
    splits = _corollary_split(rmod)
    if residual > 1:
        if splits:
            factors.extend(rmod.prime_powers)
        elif residual % 4 == 2:
            # -1 is a quadratic unit mod 2, so G_2 always splits off
            factors.extend([2, residual // 2])
        else:
            factors.append(residual)
    factors.sort()
    refinements = []
    for q in factors:
        qmod = factorize(q)
        if not qmod.is_prime_power:
            continue
        p, m = qmod.factors[0]
        if p == 2 and m >= 4:
            refinements.append((q, 8, 2 ** (m - 3)))
        elif p > 2 and m >= 2:
            refinements.append((q, p, p ** (m - 1)))
    return TensorDecomposition(mod.n, tuple(factors), residual, splits, tuple(refinements))


@dataclass(frozen=True)
class ExplicitGraph:
    vertices: tuple
    arcs: frozenset


def explicit(g: CirculantGraph) -> ExplicitGraph:
    return ExplicitGraph(tuple(range(g.n)), g.arcs())


def pseudo_clique(k) -> ExplicitGraph:
    """Complete graph on k vertices with a loop at every vertex."""
    vs = tuple(range(k))
    return ExplicitGraph(vs, frozenset((a, b) for a in vs for b in vs))


def tensor_product(a: ExplicitGraph, b: ExplicitGraph) -> ExplicitGraph:
    vertices = tuple((u, v) for u in a.vertices for v in b.vertices)
    arcs = frozenset(((u, x), (v, y)) for u, v in a.arcs for x, y in b.arcs)
    return ExplicitGraph(vertices, arcs)


def relabel(g: ExplicitGraph, f) -> ExplicitGraph:
    return ExplicitGraph(
        tuple(f(v) for v in g.vertices), frozenset((f(u), f(v)) for u, v in g.arcs)
    )


def verify_tensor_isomorphism(M, N, directed=False) -> bool:
    """Edge-set equality of G_M (x) G_N and G_MN relabelled by r -> (r mod M, r mod N)."""
    build = directed_quadratic_unitary_graph if directed else quadratic_unitary_graph
    prod_graph = tensor_product(explicit(build(M)), explicit(build(N)))
    image = relabel(explicit(build(M * N)), lambda r: (r % M, r % N))
    return prod_graph.arcs == image.arcs and set(prod_graph.vertices) == set(image.vertices)


def verify_prime_power_refinement(q, directed=False) -> bool:
    """Edge-set check of G_q = G_base (x) K_clique under r -> (r mod base, r // base)."""
    mod = factorize(q)
    if not mod.is_prime_power:
        raise ValueError(f"{q} is not a prime power")
    p, m = mod.factors[0]
    if p == 2:
        if m < 3:
            raise ValueError("powers of 2 refine only from 8 upward")
        base = 8
    else:
        base = p
    build = directed_quadratic_unitary_graph if directed else quadratic_unitary_graph
    rhs = tensor_product(explicit(build(base)), pseudo_clique(q // base))
    lhs = relabel(explicit(build(q)), lambda r: (r % base, r // base))
    return lhs.arcs == rhs.arcs


def edge_automorphism(n, v, w, v2, w2):
    """(a, b) such that x -> a*x + b maps edge v-w of G_n onto edge v2-w2."""
    a = (w2 - v2) * mod_inverse(w - v, n) % n
    return a, (v2 - a * v) % n


def to_dot(g: CirculantGraph, max_n=200) -> str:
    if g.n > max_n:
        raise ValueError(f"DOT export is limited to n <= {max_n}, got {g.n}")
    if g.directed:
        head, arrow, name = "digraph", "->", f"Gamma_{g.n}"
        pairs = sorted(g.arcs())
    else:
        head, arrow, name = "graph", "--", f"G_{g.n}"
        pairs = sorted((a, b) for a, b in g.arcs() if a < b)
    lines = [f"{head} {name} {{"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {a} {arrow} {b};" for a, b in pairs]
    lines.append("}")
    return "\n".join(lines) + "\n"
