"""Sp_2m(Z_n): symplectic row operations and an O(m^2) decomposition.

Matrices are tuples of row tuples with entries in [0, n). Row indices are
1-based as in the usual convention: row j pairs with row j + m (mod 2m), and
an op program replays top to bottom as left-multiplications.
"""
import json
import random
from dataclasses import dataclass
from math import gcd

from .errors import VerificationError
from .modring import crt_pair_combine, factorize, is_unit, mod_inverse, sqrt_in_units
from .walks import ALL_UNITS, QUADRATIC, min_signed_walk

# Every decomposition uses at most OP_COUNT_CONSTANT * m^2 elementary ops.
# Level k of the reduction costs at most 78k - 2 ops (walks of length <= 12
# for partner rows, <= 3 otherwise), which sums to 39m^2 + 37m <= 76m^2.
OP_COUNT_CONSTANT = 80


# ---------------------------------------------------------------------------
# matrices


def identity(size, n):
    return tuple(tuple(int(i == j) % n for j in range(size)) for i in range(size))


def normalize(rows, n):
    return tuple(tuple(v % n for v in row) for row in rows)


def mat_mul(a, b, n):
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % n for col in cols) for row in a)


def transpose(a):
    return tuple(zip(*a))


def _half(S):
    size = len(S)
    if size == 0 or size % 2 or any(len(row) != size for row in S):
        raise ValueError(f"expected a square matrix of even size, got {len(S)} rows")
    return size // 2


def symplectic_form(m, n=None):
    """[[0, -I], [I, 0]]; entries reduced mod n when n is given."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    rows = [[0] * (2 * m) for _ in range(2 * m)]
    for i in range(m):
        rows[i][i + m] = -1
        rows[i + m][i] = 1
    return normalize(rows, n) if n else tuple(map(tuple, rows))


def is_symplectic(S, n) -> bool:
    m = _half(S)
    S = normalize(S, n)
    return mat_mul(mat_mul(transpose(S), symplectic_form(m, n), n), S, n) == symplectic_form(m, n)


# ---------------------------------------------------------------------------
# row operations


def partner(j, m):
    return (j - 1 + m) % (2 * m) + 1


def _top(j, m):
    return j <= m


@dataclass(frozen=True)
class M:
    j: int
    alpha: int

    def format(self):
        return f"M {self.j} {self.alpha}"

    def inverse(self, m, n):
        return M(self.j, mod_inverse(self.alpha, n))


@dataclass(frozen=True)
class E:
    j: int
    k: int

    def format(self):
        return f"E {self.j} {self.k}"

    def inverse(self, m, n):
        return E(self.k, self.j) if self.k == partner(self.j, m) else self


@dataclass(frozen=True)
class C:
    j: int
    k: int
    exponent: int = 1

    def format(self):
        return f"C {self.j} {self.k} {self.exponent:+d}"

    def inverse(self, m, n):
        return C(self.j, self.k, -self.exponent)


def _check(op, m, n):
    size = 2 * m
    idx = (op.j,) if isinstance(op, M) else (op.j, op.k)
    if any(not 1 <= i <= size for i in idx):
        raise ValueError(f"{op.format()}: indices must lie in 1..{size}")
    if isinstance(op, M):
        if not is_unit(op.alpha, n):
            raise ValueError(f"{op.format()}: alpha must be a unit mod {n}")
    elif op.j == op.k:
        raise ValueError(f"{op.format()}: j and k must differ")
    if isinstance(op, C) and op.exponent not in (1, -1):
        raise ValueError(f"{op.format()}: exponent must be +1 or -1")


def _add_power(rows, j, k, alpha, m, n):
    # in-place C_{j,k}^alpha on a list of row lists (0-based internally)
    def add(src, dst, c):
        rs, rd = rows[src - 1], rows[dst - 1]
        rows[dst - 1] = [(d + c * s) % n for s, d in zip(rs, rd)]

    if k == partner(j, m):
        add(j, k, alpha)
    elif _top(j, m) == _top(k, m):
        add(j, k, alpha)
        add(partner(k, m), partner(j, m), -alpha)
    else:
        add(j, k, alpha)
        add(partner(k, m), partner(j, m), alpha)


def apply(op, S, n):
    """rowop_matrix(op) . S, computed by row manipulation."""
    m = _half(S)
    _check(op, m, n)
    rows = [list(r) for r in normalize(S, n)]
    if isinstance(op, M):
        rows[op.j - 1] = [v * op.alpha % n for v in rows[op.j - 1]]
        inv = mod_inverse(op.alpha, n)
        pj = partner(op.j, m)
        rows[pj - 1] = [v * inv % n for v in rows[pj - 1]]
    elif isinstance(op, E):
        j, k = op.j, op.k
        if k == partner(j, m):
            rows[j - 1], rows[k - 1] = [(-v) % n for v in rows[k - 1]], rows[j - 1]
        else:
            jm, km = partner(j, m), partner(k, m)
            rows[j - 1], rows[k - 1] = rows[k - 1], rows[j - 1]
            rows[jm - 1], rows[km - 1] = rows[km - 1], rows[jm - 1]
            if _top(j, m) != _top(k, m):
                # the plain double swap would reverse one pairing; the sign restores it
                rows[jm - 1] = [(-v) % n for v in rows[jm - 1]]
                rows[km - 1] = [(-v) % n for v in rows[km - 1]]
    else:
        _add_power(rows, op.j, op.k, op.exponent, m, n)
    return tuple(map(tuple, rows))


def rowop_matrix(op, m, n):
    return apply(op, identity(2 * m, n), n)


def c_power_matrix(j, k, alpha, m, n):
    """The matrix of C_{j,k}^alpha for any residue alpha."""
    rows = [list(r) for r in identity(2 * m, n)]
    _add_power(rows, j, k, alpha % n, m, n)
    return tuple(map(tuple, rows))


# ---------------------------------------------------------------------------
# programs


@dataclass(frozen=True)
class OpProgram:
    m: int
    n: int
    ops: tuple = ()

    def __len__(self):
        return len(self.ops)

    def run(self, S):
        for op in self.ops:
            S = apply(op, S, self.n)
        return S

    def replay(self):
        """Product of the program, last op leftmost."""
        return self.run(identity(2 * self.m, self.n))

    def inverse(self):
        """Program whose replay is the inverse matrix."""
        return OpProgram(self.m, self.n, tuple(op.inverse(self.m, self.n) for op in reversed(self.ops)))

    def format(self):
        lines = [f"# m={self.m} n={self.n} ops={len(self.ops)}"]
        lines += [op.format() for op in self.ops]
        return "\n".join(lines) + "\n"


def parse_program(text, m, n) -> OpProgram:
    ops = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "M" and len(parts) == 3:
                op = M(int(parts[1]), int(parts[2]) % n)
            elif parts[0] == "E" and len(parts) == 3:
                op = E(int(parts[1]), int(parts[2]))
            elif parts[0] == "C" and len(parts) == 4 and parts[3] in ("+1", "-1"):
                op = C(int(parts[1]), int(parts[2]), int(parts[3]))
            else:
                raise ValueError("unrecognised op")
            _check(op, m, n)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {raw.strip()!r}: {exc}") from None
        ops.append(op)
    return OpProgram(m, n, tuple(ops))


def load_matrix(path):
    """Read ``{"n": ..., "m": ..., "rows": [...]}``; returns (n, m, rows)."""
    with open(path) as fh:
        data = json.load(fh)
    try:
        n, m, rows = int(data["n"]), int(data["m"]), data["rows"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"{path}: matrix file needs keys n, m, rows") from exc
    if n < 2 or m < 1:
        raise ValueError(f"{path}: need n >= 2 and m >= 1")
    if len(rows) != 2 * m or any(len(r) != 2 * m for r in rows):
        raise ValueError(f"{path}: rows must form a {2 * m}x{2 * m} matrix")
    if any(not isinstance(v, int) or not 0 <= v < n for r in rows for v in r):
        raise ValueError(f"{path}: entries must be integers in [0, {n})")
    return n, m, tuple(map(tuple, rows))


def dump_matrix(S, n):
    return json.dumps({"n": n, "m": _half(S), "rows": [list(r) for r in S]}) + "\n"


# ---------------------------------------------------------------------------
# Bezout coefficients constrained to units


@dataclass(frozen=True)
class BezoutCertificate:
    x: int
    n: int
    a: int
    gamma: int
    y: object = None
    b: object = None
    method: str = "lift"

    def holds(self) -> bool:
        n = self.n
        if not is_unit(self.a, n):
            return False
        total = self.a * self.x
        if self.y is not None:
            if not is_unit(self.b, n):
                return False
            total += self.b * self.y
        return (total - self.gamma) % n == 0


def bezout_unit(x, n) -> BezoutCertificate:
    """A unit a with a*x = gcd(x, n) (mod n).

    Inverts x/g modulo n/g and lifts the result along the class mod n/g until
    it is coprime to n; a unit always lies in that class.
    """
    n = factorize(n).n
    x %= n
    g = gcd(x, n)
    step = n // g
    a0 = pow(x // g, -1, step) if step > 1 else 0
    for t in range(g):
        a = a0 + t * step
        if gcd(a, n) == 1:
            return BezoutCertificate(x, n, a % n, g)
    raise AssertionError("no unit lift found")  # pragma: no cover


def _prime_support_part(n, d):
    # largest divisor of n whose primes all divide d
    out = 1
    for p, e in factorize(n).factors:
        if d % p == 0:
            out *= p**e
    return out


def _proof_pair(x, y, n):
    bx, by = bezout_unit(x, n), bezout_unit(y, n)
    ux, uy = mod_inverse(bx.a, n), mod_inverse(by.a, n)  # x = ux * gcd(x, n)
    xp, yp = bx.gamma, by.gamma
    g = gcd(xp, yp)
    xb, yb = xp // g, yp // g
    nx, ny = _prime_support_part(n, xb), _prime_support_part(n, yb)
    nn = n // (nx * ny)
    a = pow(xb, -1, yb) if yb > 1 else 0
    b = (1 - a * xb) // yb
    bad_a, bad_b = gcd(a, nx * nn) > 1, gcd(b, ny * nn) > 1
    h = {(False, False): 0, (True, False): ny, (False, True): nx}.get((bad_a, bad_b), 1)
    alpha, beta = a + h * yb, b - h * xb
    return alpha * mod_inverse(ux, n) % n if gcd(alpha, n) == 1 else None, (
        beta * mod_inverse(uy, n) % n if gcd(beta, n) == 1 else None
    ), g


def _val(v, p, e):
    # p-adic valuation of v mod p^e, capped at e
    if v == 0:
        return e
    k = 0
    while v % p == 0 and k < e:
        v //= p
        k += 1
    return k


def _solve_for(u, rest, k, p, q):
    # c with c*u = rest (mod q), given v(u) = k <= v(rest)
    pk = p**k
    return (rest // pk) * pow(u // pk, -1, q // pk) % (q // pk)


def _local_pair(x, y, n, g):
    # units a, b with a*x + b*y = g modulo each p^e, glued by CRT; None if impossible
    coef_a, coef_b, moduli = [], [], []
    for p, e in factorize(n).factors:
        q = p**e
        xs, ys, gs = x % q, y % q, g % q
        vx, vy = _val(xs, p, e), _val(ys, p, e)
        k = min(vx, vy)
        if k >= e:
            a, b = 1, 1
        else:
            # fix the coefficient of a minimal-valuation partner, solve for the other
            u, v, swapped = (xs, ys, False) if vx == k else (ys, xs, True)
            for cv in range(1, p):
                rest = (gs - cv * v) % q
                if _val(rest, p, e) == k:
                    cu = _solve_for(u, rest, k, p, q)
                    a, b = (cv, cu) if swapped else (cu, cv)
                    break
            else:
                return None
        coef_a.append(a % q)
        coef_b.append(b % q)
        moduli.append(q)
    return crt_pair_combine(coef_a, moduli), crt_pair_combine(coef_b, moduli)


def bezout_unit_pair(x, y, n) -> BezoutCertificate:
    """Units a, b with a*x + b*y = gcd(x, y, n) (mod n).

    Tries the coprime-split construction first and falls back to solving at
    each prime power. Raises ValueError when no unit pair exists, which
    happens exactly when n is even and x, y have the same 2-adic valuation
    below that of n.
    """
    n = factorize(n).n
    x, y = x % n, y % n
    g = gcd(gcd(x, y), n)
    a, b, _ = _proof_pair(x, y, n)
    if a is not None and b is not None and (a * x + b * y - g) % n == 0:
        return BezoutCertificate(x, n, a, g, y, b, "proof")
    local = _local_pair(x, y, n, g)
    if local is None:
        raise ValueError(f"no unit pair a, b with a*{x} + b*{y} = {g} (mod {n})")
    return BezoutCertificate(x, n, local[0], g, y, local[1], "local")


def bezout_pivot(x, y, n) -> BezoutCertificate:
    """a*x + b*y = gcd(x, y, n) (mod n) with b a unit; a is unconstrained.

    Always solvable, and enough for the row reduction, which only divides by
    the coefficient of the row being overwritten.
    """
    n = factorize(n).n
    x, y = x % n, y % n
    g = gcd(gcd(x, y), n)
    coef_a, coef_b, moduli = [], [], []
    for p, e in factorize(n).factors:
        q = p**e
        xs, ys, gs = x % q, y % q, g % q
        vx, vy = _val(xs, p, e), _val(ys, p, e)
        if min(vx, vy) >= e:
            a, b = 0, 1
        elif vy <= vx:
            a, b = 0, _solve_for(ys, gs, vy, p, q)
        else:
            a, b = _solve_for(xs, (gs - ys) % q, vx, p, q), 1
        coef_a.append(a % q)
        coef_b.append(b % q)
        moduli.append(q)
    a, b = crt_pair_combine(coef_a, moduli), crt_pair_combine(coef_b, moduli)
    return BezoutCertificate(x, n, a, g, y, b, "pivot")


# ---------------------------------------------------------------------------
# derived powers C_{j,k}^alpha


def _chain(j, k, signs, scalars, n):
    # application order M^{a_l}, C^{s_l}, M^{a_l^-1 a_(l-1)}, ..., C^{s_1}, M^{a_1^-1}
    ops = []
    prev = 1
    for s, a in reversed(list(zip(signs, scalars))):
        factor = a * mod_inverse(prev, n) % n
        if factor != 1:
            ops.append(M(j, factor))
        ops.append(C(j, k, s))
        prev = a
    last = mod_inverse(prev, n)
    if last != 1:
        ops.append(M(j, last))
    return ops


def expand_c_power(j, k, alpha, m, n) -> OpProgram:
    """Elementary program whose replay equals C_{j,k}^alpha.

    Partner rows (k = j + m) use a shortest signed walk over the quadratic
    units, alpha = sum s_i a_i^2; other pairs use a single conjugation when
    alpha is a unit and a walk over all units otherwise.
    """
    n = factorize(n).n
    _check(C(j, k), m, n)
    alpha %= n
    if alpha == 0:
        return OpProgram(m, n, ())
    if k == partner(j, m):
        walk = min_signed_walk(n, alpha, QUADRATIC)
        scalars = [sqrt_in_units(u, n) for u in walk.steps]
    elif is_unit(alpha, n):
        return OpProgram(m, n, tuple(_chain(j, k, (1,), (alpha,), n)))
    else:
        walk = min_signed_walk(n, alpha, ALL_UNITS)
        scalars = list(walk.steps)
    return OpProgram(m, n, tuple(_chain(j, k, walk.signs, scalars, n)))


# ---------------------------------------------------------------------------
# decomposition


def _emit(S, ops, j, k, alpha, m, n):
    prog = expand_c_power(j, k, alpha, m, n)
    ops.extend(prog.ops)
    return prog.run(S)


def reduce_column_pair(S, k, n):
    """Clear columns k and k + m, assuming rows/columns beyond level k are standard.

    Returns ``(S', program)`` with program applied to S giving S'; columns k
    and k + m of S' are the standard basis vectors.
    """
    m = _half(S)
    S = normalize(S, n)
    ops = []
    col = k + m - 1  # 0-based column k + m

    # each partner pair (i, i + m): move a unit multiple of gcd into the bottom row
    for i in range(1, k + 1):
        top, bot = S[i - 1][col], S[i + m - 1][col]
        if top == 0:
            continue
        cert = bezout_pivot(top, bot, n)
        S = _emit(S, ops, i, i + m, cert.a * mod_inverse(cert.b, n), m, n)
        g = cert.gamma
        d = top // g * pow(S[i + m - 1][col] // g, -1, n // g)
        S = _emit(S, ops, i + m, i, -d, m, n)

    # staircase down the bottom rows; companions only touch top rows, all zero here
    for i in range(1, k):
        x, y = S[i + m - 1][col], S[i + m][col]
        if x == 0:
            continue
        cert = bezout_pivot(x, y, n)
        S = _emit(S, ops, i + m, i + m + 1, cert.a * mod_inverse(cert.b, n), m, n)
        g = cert.gamma
        d = x // g * pow(S[i + m][col] // g, -1, n // g)
        S = _emit(S, ops, i + m + 1, i + m, -d, m, n)

    pivot = S[k + m - 1][col]
    if gcd(pivot, n) != 1:
        raise VerificationError(f"column {k + m} did not reduce to a unit pivot")
    if pivot != 1:
        op = M(k, pivot)
        ops.append(op)
        S = apply(op, S, n)

    # symplecticity now forces S[k][k] = 1; clear the rest of column k
    v = [row[k - 1] for row in S]
    for i in range(1, k):
        S = _emit(S, ops, k, i, -v[i - 1], m, n)
    for i in range(1, k):
        S = _emit(S, ops, k, i + m, -S[i + m - 1][k - 1], m, n)
    S = _emit(S, ops, k, k + m, -S[k + m - 1][k - 1], m, n)
    return S, OpProgram(m, n, tuple(ops))


def decompose(S, n) -> OpProgram:
    """Program P with P applied to S giving the identity."""
    n = factorize(n).n
    if n < 2:
        raise ValueError("decomposition needs n >= 2")
    if not is_symplectic(S, n):
        raise ValueError("input matrix is not symplectic")
    m = _half(S)
    S = normalize(S, n)
    ops = []
    for k in range(m, 0, -1):
        S, prog = reduce_column_pair(S, k, n)
        ops.extend(prog.ops)
    if S != identity(2 * m, n):
        raise VerificationError("reduction did not reach the identity")
    return OpProgram(m, n, tuple(ops))


def random_generator(m, n, rng):
    """One elementary generator with uniformly chosen kind, indices and unit."""
    size = 2 * m
    kind = rng.choice("MEC")
    j = rng.randint(1, size)
    if kind == "M":
        while True:
            alpha = rng.randrange(1, n)
            if gcd(alpha, n) == 1:
                return M(j, alpha)
    k = rng.choice([i for i in range(1, size + 1) if i != j])
    return E(j, k) if kind == "E" else C(j, k, rng.choice((1, -1)))


def random_symplectic(m, n, count, seed=0):
    n = factorize(n).n
    if count < 0:
        raise ValueError("generator count must be non-negative")
    rng = random.Random(seed)
    S = identity(2 * m, n)
    for _ in range(count):
        S = apply(random_generator(m, n, rng), S, n)
    return S
