"""Command-line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
"""
import argparse
import sys
from math import gcd

from . import cayley, counting, holes, symp, walks
from .errors import VerificationError
from .modring import factorize

SWEEP_COLUMNS = ("n", "diam_formula", "diam_bfs", "udiam", "case_label", "perfect", "tensor_factors")


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _factor_text(n):
    mod = factorize(n)
    return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in mod.factors) or "1"


def _udiam(n):
    if n == 1:
        return None
    return cayley.uniform_diameter(cayley.directed_quadratic_unitary_graph(n))


def cmd_info(args, out):
    n = args.n
    report = cayley.diameter_formula(n, verify=True)
    verdict = holes.perfectness(n, certify=False)
    tensor = cayley.full_tensor_decomposition(n)
    ud = _udiam(n)
    print(f"n = {n} = {_factor_text(n)}", file=out)
    print(f"diameter of G_{n}: {report.formula_value} ({report.case_label}; BFS agrees)", file=out)
    if ud is None:
        print(f"uniform diameter of Gamma_{n}: none", file=out)
    else:
        print(f"uniform diameter of Gamma_{n}: {ud}", file=out)
    print(f"tensor decomposition: {tensor.describe()}", file=out)
    if verdict.perfect:
        print(f"perfect: yes ({verdict.reason})", file=out)
    else:
        print(f"perfect: no (odd hole certificate: qcayley hole {n})", file=out)
    return 0


def cmd_sweep(args, out):
    print(",".join(SWEEP_COLUMNS), file=out)
    for n in range(args.min, args.max + 1):
        report = cayley.diameter_formula(n)
        bfs = cayley.bfs_eccentricity_zero(cayley.quadratic_unitary_graph(n))
        if bfs != report.formula_value:
            print(
                f"error: n={n}: formula {report.formula_value} ({report.case_label}) but BFS {bfs}",
                file=sys.stderr,
            )
            return 1
        ud = _udiam(n)
        if ud is not None and gcd(n, 6) == 1 and ud != cayley.uniform_diameter_formula(n):
            print(f"error: n={n}: uniform diameter {ud} disagrees with closed form", file=sys.stderr)
            return 1
        perfect = holes.perfectness(n, certify=False).perfect
        factors = "x".join(map(str, cayley.full_tensor_decomposition(n).factors)) or "1"
        row = (n, report.formula_value, bfs, "none" if ud is None else ud,
               report.case_label, str(perfect).lower(), factors)
        print(",".join(map(str, row)), file=out)
    return 0


def cmd_counts(args, out):
    n = args.n
    if n % 2 == 0:
        raise ValueError(f"closed forms cover odd n only, got n={n}")
    s_or, d_or = counting.sd_oracle_table(n)
    print("n,r,s_formula,d_formula,s_oracle,d_oracle", file=out)
    status = 0
    for r in range(n):
        f = counting.sd_counts(n, r)
        print(f"{n},{r},{f.s},{f.d},{s_or[r]},{d_or[r]}", file=out)
        if (f.s, f.d) != (s_or[r], d_or[r]):
            status = 1
    if status:
        print(f"error: closed form and enumeration disagree for n={n}", file=sys.stderr)
    return status


def cmd_hole(args, out):
    n = args.n
    verdict = holes.perfectness(n, certify=True)
    if verdict.perfect:
        print(f"G_{n} is perfect ({verdict.reason}); no odd hole exists", file=out)
        return 0
    cert = verdict.certificate
    print(cert.format(), file=out)
    if args.verify:
        if not holes.is_induced_odd_cycle(n, cert.vertices):
            print("error: certificate failed the induced-cycle check", file=sys.stderr)
            return 1
        print("verified: induced odd cycle", file=out)
    return 0


def cmd_walk(args, out):
    kind = walks.ALL_UNITS if args.units else walks.QUADRATIC
    if args.signs:
        walk = walks.walk_with_signs(args.n, args.r, list(args.signs), kind)
        if walk is None:
            print(f"no walk to {args.r} with signs {args.signs} (mod {args.n})", file=sys.stderr)
            return 1
    else:
        walk = walks.min_signed_walk(args.n, args.r, kind)
    print(walk.format(), file=out)
    return 0


def cmd_export_dot(args, out):
    build = cayley.directed_quadratic_unitary_graph if args.directed else cayley.quadratic_unitary_graph
    out.write(cayley.to_dot(build(args.n)))
    return 0


def _write(path, text, out):
    if path in (None, "-"):
        out.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_symplectic(args, out):
    if args.action == "random":
        S = symp.random_symplectic(args.m, args.n, args.count, args.seed)
        _write(args.out, symp.dump_matrix(S, args.n), out)
        return 0
    n, m, S = symp.load_matrix(args.input)
    if args.action == "decompose":
        prog = symp.decompose(S, n)
        if args.verify and prog.run(S) != symp.identity(2 * m, n):
            print("error: program does not reduce the matrix to I", file=sys.stderr)
            return 1
        _write(args.out, prog.format(), out)
        return 0
    with open(args.ops) as fh:
        prog = symp.parse_program(fh.read(), m, n)
    if prog.run(S) != symp.identity(2 * m, n):
        print("error: program does not reduce the matrix to I", file=sys.stderr)
        return 1
    print(f"ok: {len(prog)} ops reduce the matrix to I", file=out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="qcayley", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="diameter, uniform diameter, tensor split, perfectness")
    p.add_argument("n", type=_positive)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("sweep", help="CSV of closed forms against BFS")
    p.add_argument("--max", type=_positive, required=True)
    p.add_argument("--min", type=_positive, default=2)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("counts", help="CSV of S_n(r), D_n(r): closed form and enumeration")
    p.add_argument("n", type=_positive)
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("hole", help="odd-hole certificate for an imperfect G_n")
    p.add_argument("n", type=_positive)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_hole)

    p = sub.add_parser("walk", help="signed walk r = +-u1 +-u2 ... (mod n)")
    p.add_argument("n", type=_positive)
    p.add_argument("r", type=int)
    p.add_argument("--signs", help="sign pattern such as +-+")
    p.add_argument("--units", action="store_true", help="step through all units, not Q_n")
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("export-dot", help="Graphviz DOT of G_n (or Gamma_n)")
    p.add_argument("n", type=_positive)
    p.add_argument("--directed", action="store_true")
    p.set_defaults(func=cmd_export_dot)

    p = sub.add_parser("symplectic", help="decompose, verify and sample Sp_2m(Z_n)")
    ssub = p.add_subparsers(dest="action", required=True)
    q = ssub.add_parser("decompose")
    q.add_argument("--in", dest="input", required=True)
    q.add_argument("--out")
    q.add_argument("--verify", action="store_true")
    q = ssub.add_parser("verify")
    q.add_argument("--in", dest="input", required=True)
    q.add_argument("--ops", required=True)
    q = ssub.add_parser("random")
    q.add_argument("--m", type=_positive, required=True)
    q.add_argument("--n", type=_positive, required=True)
    q.add_argument("--count", type=int, default=20)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--out")
    p.set_defaults(func=cmd_symplectic)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
