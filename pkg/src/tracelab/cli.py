"""Command-line frontend.

Every command computes one result object, then renders it either as a human
table or (with ``--json``) as a machine block whose values re-load through
:mod:`tracelab.formats`.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import artinian as art
from . import koszul, verifier
from .errors import GuardError, ParseError
from .formats import (
    dump_algebra,
    dump_semigroup,
    load_algebra,
    load_art_module,
    load_semigroup_input,
    read_json,
)
from .ideals import (
    ModuleSum,
    ValueIdeal,
    canonical_ideal,
    enumerate_normalized_ideals,
    is_nearly_gorenstein,
    maximal_ideal,
    ring_ideal,
)
from .polyparse import format_matrix
from .semigroup import NumericalSemigroup

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _name_value_ideal(ideal: ValueIdeal) -> str:
    sg = ideal.semigroup
    if ideal == ring_ideal(sg):
        return "R"
    if ideal == maximal_ideal(sg):
        return "m"
    return ""


def _semigroup_of(obj) -> NumericalSemigroup:
    if isinstance(obj, NumericalSemigroup):
        return obj
    return obj.semigroup


# -- sgp ---------------------------------------------------------------------
def cmd_sgp_info(args):
    sg = _semigroup_of(load_semigroup_input(read_json(args.file)))
    data = {
        "semigroup": dump_semigroup(sg),
        "frobenius": sg.frobenius,
        "gaps": list(sg.gaps),
        "multiplicity": sg.multiplicity,
        "embedding_dimension": sg.embedding_dimension,
        "genus": sg.genus,
        "flags": sg.flags(),
    }
    lines = [
        f"semigroup            {sg}",
        f"frobenius            {sg.frobenius}",
        f"gaps                 {{{','.join(map(str, sg.gaps))}}}",
        f"multiplicity         {sg.multiplicity}",
        f"embedding dimension  {sg.embedding_dimension}",
    ]
    lines += [f"{k.replace('_', ' '):<21}{_yes(v)}" for k, v in data["flags"].items()]
    return data, lines, EXIT_OK


def cmd_sgp_trace(args):
    obj = load_semigroup_input(read_json(args.file))
    if isinstance(obj, NumericalSemigroup):
        raise ParseError("sgp trace expects an ideal or module file")
    module = obj if isinstance(obj, ModuleSum) else ModuleSum((obj,))
    tr = module.trace()
    name = _name_value_ideal(tr)
    data = {
        "module": module.to_dict(),
        "trace": tr.to_dict(),
        "full_trace": module.is_full_trace(),
        "ulrich": module.is_ulrich(),
        "free_summand": module.has_free_summand(),
        "mu": module.mu(),
    }
    tag = f" (= {name})" if name else ""
    lines = [
        f"trace = {tr.format()}{tag} full-trace: {_yes(data['full_trace'])}",
        f"mu = {data['mu']}  ulrich: {_yes(data['ulrich'])}  free summand: {_yes(data['free_summand'])}",
    ]
    return data, lines, EXIT_OK


def cmd_sgp_enum_ftu(args):
    sg = _semigroup_of(load_semigroup_input(read_json(args.file)))
    found = [I for I in enumerate_normalized_ideals(sg) if I.is_ulrich() and I.is_full_trace()]
    data = {
        "semigroup": dump_semigroup(sg),
        "minimal_multiplicity": sg.has_minimal_multiplicity(),
        "full_trace_ulrich": [I.to_dict() for I in found],
    }
    lines = [f"{sg}: {len(found)} full-trace Ulrich ideal(s) up to shift, "
             f"minimal multiplicity: {_yes(sg.has_minimal_multiplicity())}"]
    m = maximal_ideal(sg).normalized()
    lines += [f"  {I.format()}" + ("  (= m shifted)" if I == m else "") for I in found]
    return data, lines, EXIT_OK


def cmd_sgp_canonical(args):
    sg = _semigroup_of(load_semigroup_input(read_json(args.file)))
    omega = canonical_ideal(sg)
    tr = omega.trace()
    data = {
        "semigroup": dump_semigroup(sg),
        "canonical": omega.to_dict(),
        "trace": tr.to_dict(),
        "symmetric": sg.is_symmetric(),
        "nearly_gorenstein": is_nearly_gorenstein(sg),
    }
    name = _name_value_ideal(tr)
    lines = [
        f"canonical = {omega.format()}",
        f"trace = {tr.format()}" + (f" (= {name})" if name else ""),
        f"gorenstein (symmetric): {_yes(data['symmetric'])}  nearly gorenstein: {_yes(data['nearly_gorenstein'])}",
    ]
    return data, lines, EXIT_OK


# -- art ---------------------------------------------------------------------
def _load_art(args):
    alg = load_algebra(read_json(args.algebra))
    module_obj = read_json(args.module) if args.module else {"kind": "residue_field"}
    return alg, load_art_module(module_obj, alg), module_obj


def _ideal_block(ideal: art.IdealSubspace) -> dict:
    return {"kind": "ideal", "generators": ideal.elements(), "name": ideal.describe()}


def cmd_art_resolve(args):
    alg, mod, module_obj = _load_art(args)
    res = art.minimal_resolution(mod, args.steps)
    traces = [art.trace(s) for s in res.syzygies]
    data = {
        "algebra": dump_algebra(alg),
        "module": module_obj,
        "betti": res.betti,
        "matrices": [format_matrix(a, alg) for a in res.matrices],
        "matrix_ideals": [_ideal_block(i) for i in res.matrix_ideals],
        "syzygy_traces": [_ideal_block(t) for t in traces],
    }
    lines = [f"algebra {alg!r}", "Betti " + " ".join(map(str, res.betti))]
    for i, t in enumerate(traces):
        lines.append(f"  trace(Omega^{i}) = {t.describe()}")
    for i, ideal in enumerate(res.matrix_ideals, start=1):
        lines.append(f"  I(phi_{i}) = {ideal.describe()}")
    if args.show:
        for i, a in enumerate(data["matrices"], start=1):
            lines.append(f"phi_{i}:")
            lines += ["  [" + ", ".join(row) + "]" for row in a]
    return data, lines, EXIT_OK


def cmd_art_trace(args):
    alg, mod, module_obj = _load_art(args)
    tr = art.trace(mod)
    data = {
        "algebra": dump_algebra(alg),
        "module": module_obj,
        "trace": _ideal_block(tr),
        "full_trace": art.is_full_trace(mod, tr),
        "free_summand": art.has_free_summand(mod, tr),
        "ulrich": art.is_ulrich(mod),
        "dim": mod.dim,
        "mu": mod.mu(),
    }
    lines = [
        f"trace = {tr.describe()} full-trace: {_yes(data['full_trace'])}",
        f"dim = {mod.dim}  mu = {data['mu']}  ulrich: {_yes(data['ulrich'])}  "
        f"free summand: {_yes(data['free_summand'])}",
    ]
    return data, lines, EXIT_OK


def cmd_art_check(args):
    alg = load_algebra(read_json(args.algebra))
    alg.check_table()
    data = {
        "algebra": dump_algebra(alg),
        "length": alg.length,
        "basis": [alg.format_monomial(m) for m in alg.basis],
        "socle": _ideal_block(alg.socle),
        "embedding_dimension": alg.embedding_dimension(),
        "pir": alg.is_pir(),
        "minimal_multiplicity": alg.has_minimal_multiplicity(),
        "gorenstein": alg.is_gorenstein(),
        "regular": alg.is_regular(),
    }
    lines = [
        f"algebra {alg!r}",
        f"length               {alg.length}",
        f"basis                {', '.join(data['basis'])}",
        f"socle                {alg.socle.describe()}",
        f"embedding dimension  {data['embedding_dimension']}",
    ]
    lines += [f"{k.replace('_', ' '):<21}{_yes(data[k])}" for k in ("pir", "minimal_multiplicity", "gorenstein", "regular")]
    if args.module:
        mod = load_art_module(read_json(args.module), alg)
        ok = art.check_lemma_matrix_trace(alg, _presentation_or_cover(mod))
        data["matrix_lemma"] = ok
        lines.append(f"entry ideal inside trace of image: {_yes(ok)}")
    return data, lines, EXIT_OK


def _presentation_or_cover(mod: art.PresentedModule):
    """A matrix to feed the entry-ideal check: the cover of the first syzygy."""
    res = art.minimal_resolution(mod, 1)
    if res.matrices:
        return res.matrices[0]
    alg = mod.algebra
    return alg.one().reshape(1, 1, -1)


# -- koszul, suite -----------------------------------------------------------
def cmd_koszul(args):
    K = koszul.build(args.n)
    data = {"n": K.n, "ranks": K.ranks()}
    lines = [f"Koszul complex on {K.n} variables", "ranks " + " ".join(map(str, K.ranks()))]
    if args.check:
        ok = koszul.verify_complex(K)
        ideals = [sorted(koszul.variable_ideal(K, i)) for i in range(1, K.n + 1)]
        data["complex"] = ok
        data["variable_ideals"] = [[f"x{j + 1}" for j in vs] for vs in ideals]
        lines.append(f"d^2 = 0: {_yes(ok)}")
        for i, vs in enumerate(data["variable_ideals"], start=1):
            lines.append(f"  I(d_{i}) = ({', '.join(vs)})")
    if args.show:
        data["differentials"] = [K.format(i) for i in range(1, K.n + 1)]
        for i, rows in enumerate(data["differentials"], start=1):
            lines.append(f"d_{i}:")
            lines += ["  [" + ", ".join(r) + "]" for r in rows]
    code = EXIT_FAIL if args.check and not data["complex"] else EXIT_OK
    return data, lines, code


def cmd_suite_list(args):
    names = list(verifier.SUITES)
    data = {"suites": names}
    lines = [f"{n:<18} {(verifier.SUITES[n].__doc__ or '').strip().splitlines()[0]}" for n in names]
    return data, lines, EXIT_OK


def cmd_suite_run(args):
    if args.all == bool(args.names):
        raise _UsageError("give either --all or suite names")
    names = None if args.all else args.names
    try:
        reports = verifier.run_suites(names, seed=args.seed, workers=args.workers)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    data = json.loads(verifier.reports_json(reports))
    lines = [
        f"{r.status:<8}{r.suite:<18}{r.instances:>7} instances  {r.wall_time:7.2f} s"
        + (f"  ({r.skipped})" if r.skipped else "")
        for r in reports
    ]
    for r in reports:
        for f in r.failures[:5]:
            lines.append(f"  {r.suite}: expected {f['expected']}, got {f['got']}")
            lines.append(f"    instance {json.dumps(f['instance'], sort_keys=True)}")
    failed = any(r.failures for r in reports)
    lines.append("all suites passed" if not failed else "FAILURES")
    return data, lines, EXIT_FAIL if failed else EXIT_OK


class _UsageError(Exception):
    pass


# -- parser ------------------------------------------------------------------
def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", nargs="?", const="-", default=argparse.SUPPRESS, metavar="PATH",
                   help="write the machine block to PATH (stdout if omitted)")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized suites")
    p.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="suppress the human table")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="tracelab", description="Trace ideals over semigroup rings and Artinian algebras.",
                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sgp = sub.add_parser("sgp", help="numerical semigroup rings").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    for name, fn, help_ in [
        ("info", cmd_sgp_info, "semigroup invariants and flags"),
        ("trace", cmd_sgp_trace, "trace of an ideal or a direct sum of ideals"),
        ("enum-ftu", cmd_sgp_enum_ftu, "full-trace Ulrich ideals up to shift"),
        ("canonical", cmd_sgp_canonical, "canonical ideal and its trace"),
    ]:
        p = sgp.add_parser(name, help=help_, parents=[common])
        p.add_argument("file")
        p.set_defaults(func=fn)

    artp = sub.add_parser("art", help="Artinian monomial algebras").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    for name, fn, help_ in [
        ("resolve", cmd_art_resolve, "minimal free resolution of a module"),
        ("trace", cmd_art_trace, "trace ideal of a module"),
        ("check", cmd_art_check, "algebra invariants"),
    ]:
        p = artp.add_parser(name, help=help_, parents=[common])
        p.add_argument("algebra")
        p.add_argument("--module", help="module file (default: the residue field)")
        if name == "resolve":
            p.add_argument("--steps", type=int, default=4)
            p.add_argument("--show", action="store_true", help="print the matrices")
        p.set_defaults(func=fn)

    p = sub.add_parser("koszul", help="symbolic Koszul complex", parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true", help="verify d^2 = 0 and the entry ideals")
    p.add_argument("--show", action="store_true", help="print the differentials")
    p.set_defaults(func=cmd_koszul)

    suite = sub.add_parser("suite", help="property suites").add_subparsers(
        dest="action", required=True, parser_class=_Parser)
    p = suite.add_parser("run", help="run suites", parents=[common])
    p.add_argument("names", nargs="*")
    p.add_argument("--all", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_suite_run)
    p = suite.add_parser("list", help="list suites", parents=[common])
    p.set_defaults(func=cmd_suite_list)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.json = getattr(args, "json", None)
    args.seed = getattr(args, "seed", verifier.DEFAULT_SEED)
    args.quiet = getattr(args, "quiet", False)
    try:
        data, lines, code = args.func(args)
    except _UsageError as exc:
        print(f"tracelab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardError as exc:
        print(f"tracelab: guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ParseError, OSError, ValueError) as exc:
        print(f"tracelab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if not args.quiet and args.json != "-":
        print("\n".join(lines))
    if args.json is not None:
        text = json.dumps(data, indent=2, sort_keys=True)
        if args.json == "-":
            print(text)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
