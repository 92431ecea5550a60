"""Command-line front end.

Exit codes: 0 success, 1 usage error / unknown verb, 2 input error,
3 capacity error, 4 a verification reported a mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import hopf
from .characters import (
    Report,
    chrom_minus1_via_flats,
    chromatic_poly_s,
    euler_character,
    f_vector_via_psi,
    flat_rank_sum,
    in_even,
    in_odd,
    is_eulerian,
    psi,
    verify_kn_identity,
    verify_star_identity,
    verify_tree_identity,
    zeta_char,
    zeta_q_char,
)
from .complex import (
    complex_json,
    complexes_up_to,
    enumerate_complexes,
    f_vector,
    k_skeleton,
    parse_complex,
    to_text,
)
from .errors import CapacityError, InputError
from .graph import one_skeleton_graph, path_graph, star_graph
from .hopf import antipode_flat, antipode_recursive, antipode_table, coproduct
from .symfunc import kostka, multinomial, num_SYT, partitions

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_CAPACITY, EXIT_MISMATCH = 0, 1, 2, 3, 4

VERIFY_SUITES = ("hopf", "kn", "tree", "star", "theorem45", "trace", "kostka", "all")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _load(args):
    if args.file:
        try:
            text = Path(args.file).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc}") from None
    elif args.complex:
        text = args.complex
    else:
        raise InputError("give a complex with --file or --complex")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InputError("empty complex input")
    return parse_complex(text if text.strip().startswith("{") else lines[0])


def _coef(c) -> str:
    return str(Fraction(c))


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------

def cmd_antipode(args, out):
    cx = _load(args)
    s = antipode_recursive(cx) if args.method == "recursive" else antipode_flat(cx)
    if args.json:
        return s.to_json()
    for term, c in s.terms.items():
        out.append(f"{_coef(c)}\t{to_text(term)}")


def cmd_antipode_table(args, out):
    cx = _load(args)
    rows = antipode_table(cx)
    if args.json:
        return [
            {
                "blocks": [list(b) for b in r.flat.blocks],
                "flat_edges": [list(e) for e in r.flat.edges],
                "exponent": r.exponent,
                "sign": r.sign,
                "a": r.a_value,
                "term": complex_json(r.term),
            }
            for r in rows
        ]
    for r in rows:
        edges = ",".join("{%d,%d}" % e for e in r.flat.edges) or "∅"
        out.append(f"{edges}\t(-1)^{r.exponent}\t{r.a_value}\t{to_text(r.term)}")


def cmd_coproduct(args, out):
    cx = _load(args)
    d = coproduct(cx)
    if args.json:
        return [
            {"coefficient": _coef(c), "left": complex_json(a), "right": complex_json(b)}
            for (a, b), c in d.terms.items()
        ]
    for (a, b), c in d.terms.items():
        out.append(f"{_coef(c)}\t{to_text(a)}\t⊗\t{to_text(b)}")


def cmd_psi(args, out):
    cx = _load(args)
    phi = zeta_q_char(args.s) if args.q else zeta_char(args.s)
    f = psi(cx, phi)
    if args.json:
        return f.to_json()
    out.append(str(f))


def cmd_chromatic(args, out):
    cx = _load(args)
    p = chromatic_poly_s(cx, args.s)
    if args.at is not None:
        value = p(args.at)
        if args.json:
            return {"s": args.s, "t": args.at, "value": _coef(value)}
        out.append(_coef(value))
        return
    if args.json:
        return {"s": args.s, "poly_t": [_coef(c) for c in p.coeffs]}
    out.append(str(p))


def cmd_fvector(args, out):
    cx = _load(args)
    fv = f_vector_via_psi(cx) if args.via_psi else f_vector(cx)
    if args.json:
        return {"f_vector": list(fv)}
    out.append(" ".join(map(str, fv)))


def cmd_skeleton(args, out):
    cx = k_skeleton(_load(args), args.k)
    if args.json:
        return complex_json(cx)
    out.append(to_text(cx))


def cmd_euler(args, out):
    cx = _load(args)
    value = euler_character(cx, args.s)
    eulerian = is_eulerian(cx, args.s)
    if args.json:
        return {"s": args.s, "euler_character": _coef(value.constant_term()), "eulerian": eulerian}
    out.append(f"euler_character={value} eulerian={eulerian}")


def cmd_subalgebra(args, out):
    cx = _load(args)
    result = {
        "s": args.s,
        "even": in_even(cx, args.s),
        "odd": in_odd(cx, args.s),
        "eulerian": is_eulerian(cx, args.s),
    }
    if args.json:
        return result
    out.append(" ".join(f"{k}={v}" for k, v in result.items() if k != "s"))


def cmd_enumerate(args, out):
    cxs = enumerate_complexes(args.n)
    if args.json:
        return [complex_json(cx) for cx in cxs]
    out.extend(to_text(cx) for cx in cxs)


# ---------------------------------------------------------------------------
# verification suites
# ---------------------------------------------------------------------------

def suite_hopf(max_n):
    for cx in complexes_up_to(min(max_n, 5), min_n=0):
        axioms = hopf.verify_hopf_axioms(cx)
        passed = sum(axioms.values())
        s = antipode_flat(cx)
        yield Report("hopf", {"complex": to_text(cx)}, passed, len(axioms), passed == len(axioms))
        yield Report("antipode-oracle", {"complex": to_text(cx)}, len(s), len(antipode_recursive(cx)),
                     s == antipode_recursive(cx))
        yield Report("coefficient-sum", {"complex": to_text(cx)}, s.coefficient_sum(), (-1) ** cx.n,
                     s.coefficient_sum() == (-1) ** cx.n)


def suite_kn(max_n):
    for n in range(1, max_n + 1):
        yield verify_kn_identity(n, 2)


def suite_tree(max_n):
    for n in range(1, max_n + 1):
        yield verify_tree_identity(path_graph(n), 2)
        if n >= 3:
            yield verify_tree_identity(star_graph(n), 2)


def suite_star(max_n):
    for n in range(1, max_n + 1):
        for k in range(1, 5):
            yield verify_star_identity(n, k)


def suite_theorem45(max_n):
    for cx in complexes_up_to(min(max_n, 5)):
        for s in (1, 2, 3):
            lhs = chrom_minus1_via_flats(cx, s)
            rhs = chromatic_poly_s(cx, s)(-1)
            yield Report("theorem45", {"complex": to_text(cx), "s": s}, lhs, rhs, lhs == rhs)
        if cx.dim <= 1:
            total = flat_rank_sum(one_skeleton_graph(cx))
            yield Report("flat-rank-sum", {"graph": to_text(cx)}, total, 1, total == 1)


def suite_trace(max_n):
    for n in range(1, min(max_n, 5) + 1):
        lhs, rhs = hopf.trace_antipode(n), hopf.trace_mult_basis(n)
        yield Report("trace", {"n": n}, lhs, rhs, lhs == rhs)


def suite_kostka(max_n):
    for n in range(1, max_n + 1):
        for mu in partitions(n):
            lhs = sum(num_SYT(lam) * kostka(lam, mu) for lam in partitions(n))
            rhs = multinomial(n, mu)
            yield Report("kostka", {"mu": list(mu)}, lhs, rhs, lhs == rhs)


SUITES = {
    "hopf": suite_hopf,
    "kn": suite_kn,
    "tree": suite_tree,
    "star": suite_star,
    "theorem45": suite_theorem45,
    "trace": suite_trace,
    "kostka": suite_kostka,
}


def cmd_verify(args, out):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [r for name in names for r in SUITES[name](args.max_n)]
    args._mismatch = not all(r.equal for r in reports)
    if args.json:
        return [r.to_json() for r in reports]
    out.extend(r.line() for r in reports)
    passed = sum(r.equal for r in reports)
    out.append(f"{passed}/{len(reports)} identities EQUAL")


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1, help="worker cap for per-flat work")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--file", help="complex file (JSON object or 'n=4; {0,1,2},{2,3}')")
    source.add_argument("--complex", help="complex given inline in either format")

    p = _Parser(prog="hopfsimp", description="Hopf algebra of simplicial complexes")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)

    def add(name, fn, *parents, help=None):
        sp = sub.add_parser(name, parents=[common, *parents], help=help)
        sp.set_defaults(func=fn)
        return sp

    sp = add("antipode", cmd_antipode, source, help="collected antipode")
    sp.add_argument("--method", choices=("flat", "recursive"), default="flat")
    add("antipode-table", cmd_antipode_table, source, help="per-flat antipode terms")
    add("coproduct", cmd_coproduct, source, help="collected coproduct")
    sp = add("psi", cmd_psi, source, help="symmetric function of zeta_s (or zeta_{s,q})")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--q", action="store_true", help="use the q-analog character")
    sp = add("chromatic", cmd_chromatic, source, help="s-chromatic polynomial")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--at", type=int, help="evaluate at this number of colours")
    sp = add("fvector", cmd_fvector, source, help="f-vector")
    sp.add_argument("--via-psi", action="store_true")
    sp = add("skeleton", cmd_skeleton, source, help="k-skeleton")
    sp.add_argument("--k", type=int, required=True)
    sp = add("euler", cmd_euler, source, help="Euler character and Eulerian test")
    sp.add_argument("--s", type=int, required=True)
    sp = add("subalgebra", cmd_subalgebra, source, help="even/odd/Eulerian membership")
    sp.add_argument("--s", type=int, required=True)
    sp = add("verify", cmd_verify, help="run identity checks")
    sp.add_argument("suite", choices=VERIFY_SUITES)
    sp.add_argument("--max-n", type=int, default=4)
    sp = add("enumerate", cmd_enumerate, help="all complexes on n vertices")
    sp.add_argument("--n", type=int, required=True)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not getattr(args, "func", None):
        parser.print_usage(stderr)
        return EXIT_USAGE
    hopf.THREADS = max(1, args.threads)
    out: list[str] = []
    try:
        payload = args.func(args, out)
    except InputError as exc:
        print(f"input error: {exc}", file=stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=stderr)
        return EXIT_CAPACITY
    if args.json:
        stdout.write(json.dumps(payload, indent=None, sort_keys=True) + "\n")
    else:
        for line in out:
            stdout.write(line + "\n")
    return EXIT_MISMATCH if getattr(args, "_mismatch", False) else EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
