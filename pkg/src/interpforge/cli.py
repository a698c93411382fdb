"""Command line surface: catalog inspection, translation, bounded
semantic verification with machine-readable reports."""

import argparse
import json
import os
import sys
import time

from . import interpretations as I
from . import logic as L
from . import models as M
from . import sl2
from . import theories as T
from . import translation as TR

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_BUDGET = 2
EXIT_USAGE = 3


class CliError(Exception):
    pass


# verification

def _override_range_spec(spec, bounds):
    parts = spec.split(":")
    if parts[0] in ("strings_upto", "strings_eps_upto") and \
            bounds.get("len") is not None:
        parts[1] = str(bounds["len"])
    elif parts[0] == "nats_upto" and bounds.get("nat") is not None:
        parts[1] = str(bounds["nat"])
    elif parts[0] == "tuple_image":
        rest = _override_range_spec(":".join(parts[2:]), bounds)
        parts = parts[:2] + rest.split(":")
    return ":".join(parts)


def run_verification(name, bounds=None):
    """Check every obligation of a catalog interpretation on its ambient
    structure; returns a report dictionary."""
    bounds = dict(bounds or {})
    entry = I.get_interpretation(name)
    plan = entry.plan
    schema_bounds = dict(plan.schema_bounds)
    if bounds.get("alpha") is not None:
        schema_bounds["bits"] = bounds["alpha"]
    if bounds.get("n") is not None:
        schema_bounds["nat"] = bounds["n"]
    for v in list(schema_bounds.values()) + \
            [b for b in (bounds.get("len"), bounds.get("nat")) if b is not None]:
        if v is not None and v < 1:
            raise CliError("bounds must be positive")
    range_spec = _override_range_spec(plan.range_spec, bounds)
    rng = M.make_range(range_spec, I.get_interpretation)
    structure = M.get_structure(plan.structure_id)
    source = T.get_theory(entry.source)
    obs = TR.obligations(entry.translation, source, schema_bounds)
    records = [(ob.label, ob.sentence, False) for ob in obs]
    records += [(label, sentence, True) for label, sentence in plan.extras]
    budget = bounds.get("budget")
    checker = M.Checker(structure, rng, budget, exact_witness=True)
    extras_checker = checker
    extras_range_spec = None
    if plan.extras_range_spec is not None:
        # truth tables are range-specific, so extras get their own checker
        extras_range_spec = _override_range_spec(plan.extras_range_spec,
                                                 bounds)
        extras_rng = M.make_range(extras_range_spec, I.get_interpretation)
        extras_checker = M.Checker(structure, extras_rng, budget,
                                   exact_witness=True)
    out = []
    for label, sentence, is_extra in records:
        t0 = time.monotonic()
        verdict = (extras_checker if is_extra else checker).check(sentence)
        elapsed = int((time.monotonic() - t0) * 1000)
        rec = {"label": label,
               "sentence": L.to_sexpr(sentence),
               "verdict": verdict.status,
               "elapsed_ms": elapsed}
        if verdict.status == "fails":
            rec["counterexample"] = _jsonable(verdict.counterexample)
        out.append(rec)
    out.sort(key=lambda r: r["label"])
    summary = {
        "total": len(out),
        "holds": sum(1 for r in out if r["verdict"] == "holds"),
        "fails": sum(1 for r in out if r["verdict"] == "fails"),
        "budget_exceeded": sum(1 for r in out
                               if r["verdict"] == "budget-exceeded")}
    return {"interpretation": name,
            "bounds": {"range": range_spec,
                       "schema": schema_bounds,
                       "budget": budget},
            "obligations": out,
            "summary": summary}


def _jsonable(value):
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in sorted(value.items())}
    if isinstance(value, tuple):
        return list(value)
    return value


def render_report(report, fmt="text"):
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt != "text":
        raise CliError("unknown format %r" % fmt)
    lines = ["interpretation: %s" % report["interpretation"],
             "range: %s" % report["bounds"]["range"]]
    width = max([len(r["label"]) for r in report["obligations"]] + [5])
    for rec in report["obligations"]:
        line = "%-*s  %s" % (width, rec["label"], rec["verdict"])
        if "counterexample" in rec:
            line += "  %s" % json.dumps(rec["counterexample"])
        lines.append(line)
    s = report["summary"]
    lines.append("summary: %d total, %d hold, %d fail, %d budget-exceeded"
                 % (s["total"], s["holds"], s["fails"], s["budget_exceeded"]))
    return "\n".join(lines) + "\n"


# argument plumbing

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _load_config(path):
    if path is None:
        path = os.environ.get("INTERPFORGE_CONFIG")
    if not path:
        return {}
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise CliError("config must be a JSON object")
    return {k: data[k] for k in ("len", "nat", "alpha", "n", "budget")
            if k in data}


def _bounds_from(args, config):
    out = dict(config)
    for key in ("len", "nat", "alpha", "n", "budget"):
        val = getattr(args, key, None)
        if val is not None:
            out[key] = val
    return out


def _parse_schema_param(schema, text):
    def one(s):
        if schema.kind == "nat":
            if not s.isdigit():
                raise CliError("expected a natural number, got %r" % s)
            return int(s)
        return s

    if schema.params == 2:
        parts = text.split(",")
        if len(parts) != 2:
            raise CliError("schema %s takes a pair like 2,1" % schema.name)
        return (one(parts[0]), one(parts[1]))
    return one(text)


def build_parser():
    p = _Parser(prog="interpforge",
                description="relative translations between weak theories, "
                            "verified on bounded standard models")
    p.add_argument("--config", help="JSON config file with default bounds")
    sub = p.add_subparsers(dest="command", required=True)

    th = sub.add_parser("theories", help="catalog of theories")
    thsub = th.add_subparsers(dest="theories_command", required=True)
    thsub.add_parser("list", help="list theory names")
    show = thsub.add_parser("show", help="dump one theory as JSON")
    show.add_argument("name")

    sc = sub.add_parser("schema", help="instantiate an axiom schema")
    sc.add_argument("theory")
    sc.add_argument("schema")
    sc.add_argument("param", help="a natural, a bit string, or a pair n,m")

    tr = sub.add_parser("translate", help="translate a source formula")
    tr.add_argument("interp")
    tr.add_argument("formula")

    ob = sub.add_parser("obligations", help="list interpretation obligations")
    ob.add_argument("interp")
    ob.add_argument("--alpha", type=int)
    ob.add_argument("--n", type=int)
    ob.add_argument("--json", action="store_true")

    ve = sub.add_parser("verify", help="check all obligations semantically")
    ve.add_argument("interp")
    ve.add_argument("--len", type=int, dest="len")
    ve.add_argument("--nat", type=int)
    ve.add_argument("--alpha", type=int)
    ve.add_argument("--n", type=int)
    ve.add_argument("--budget", type=int)
    ve.add_argument("--json", action="store_true")

    en = sub.add_parser("encode", help="bit string to matrix literal")
    en.add_argument("bits")

    de = sub.add_parser("decode", help="matrix literal to bit string")
    de.add_argument("matrix")

    ev = sub.add_parser("eval", help="evaluate a formula on a structure")
    ev.add_argument("structure")
    ev.add_argument("range_spec")
    ev.add_argument("formula")

    pi = sub.add_parser("pipeline", help="compose catalog translations")
    pi.add_argument("names", nargs="+")
    return p


def _signature_for_formula(interp_entry):
    return T.get_theory(interp_entry.source).signature


def _theory_json(theory):
    sig = theory.signature
    return {"name": theory.name,
            "signature": {
                "constants": sorted(sig.constants),
                "functions": {k: sig.functions[k]
                              for k in sorted(sig.functions)},
                "relations": {k: sig.relations[k]
                              for k in sorted(sig.relations)}},
            "axioms": [{"label": label, "sentence": L.to_sexpr(ax)}
                       for label, ax in theory.axioms],
            "schemas": [s.name for s in theory.schemas]}


def _translation_json(tau):
    def defn(d):
        return {"variables": list(d.variables),
                "formula": L.to_sexpr(d.body)}

    return {"source": tau.source.name,
            "target": tau.target.name,
            "dimension": tau.dimension,
            "domain": defn(tau.domain),
            "relations": {k: defn(tau.relations[k])
                          for k in sorted(tau.relations)},
            "functions": {k: defn(tau.functions[k])
                          for k in sorted(tau.functions)},
            "constants": {k: defn(tau.constants[k])
                          for k in sorted(tau.constants)},
            "equality_default": tau.equality_is_default}


def _run(args, out):
    config = _load_config(args.config)
    if args.command == "theories":
        if args.theories_command == "list":
            for name in T.theory_names():
                out.write(name + "\n")
        else:
            theory = T.get_theory(args.name)
            out.write(json.dumps(_theory_json(theory), indent=2) + "\n")
        return EXIT_OK
    if args.command == "schema":
        theory = T.get_theory(args.theory)
        schema = theory.schema(args.schema)
        param = _parse_schema_param(schema, args.param)
        out.write(L.to_sexpr(schema.instantiate(param)) + "\n")
        return EXIT_OK
    if args.command == "translate":
        entry = I.get_interpretation(args.interp)
        phi = L.parse_formula(args.formula, _signature_for_formula(entry))
        out.write(L.to_sexpr(TR.translate_formula(phi, entry.translation))
                  + "\n")
        return EXIT_OK
    if args.command == "obligations":
        entry = I.get_interpretation(args.interp)
        bounds = _bounds_from(args, config)
        schema_bounds = dict(entry.plan.schema_bounds)
        if bounds.get("alpha") is not None:
            schema_bounds["bits"] = bounds["alpha"]
        if bounds.get("n") is not None:
            schema_bounds["nat"] = bounds["n"]
        obs = TR.obligations(entry.translation, T.get_theory(entry.source),
                             schema_bounds)
        records = [(ob.label, ob.sentence) for ob in obs]
        records += entry.plan.extras
        if args.json:
            data = [{"label": label, "sentence": L.to_sexpr(s)}
                    for label, s in records]
            out.write(json.dumps(data, indent=2) + "\n")
        else:
            for label, _ in records:
                out.write(label + "\n")
        return EXIT_OK
    if args.command == "verify":
        report = run_verification(args.interp, _bounds_from(args, config))
        out.write(render_report(report, "json" if args.json else "text"))
        if report["summary"]["fails"]:
            return EXIT_FAIL
        if report["summary"]["budget_exceeded"]:
            return EXIT_BUDGET
        return EXIT_OK
    if args.command == "encode":
        out.write(str(sl2.encode(args.bits)) + "\n")
        return EXIT_OK
    if args.command == "decode":
        out.write(sl2.decode(sl2.parse_matrix(args.matrix)) + "\n")
        return EXIT_OK
    if args.command == "eval":
        structure = M.get_structure(args.structure)
        rng = M.make_range(args.range_spec, I.get_interpretation)
        sig = _EVAL_SIGNATURES[structure.id]
        phi = L.parse_formula(args.formula, sig)
        out.write(("true" if M.evaluate(structure, rng, phi) else "false")
                  + "\n")
        return EXIT_OK
    if args.command == "pipeline":
        tau = I.pipeline(args.names)
        out.write(json.dumps(_translation_json(tau), indent=2) + "\n")
        return EXIT_OK
    raise CliError("unknown command %r" % args.command)


_EVAL_SIGNATURES = {
    "Naturals": T.ARITH,
    "BitStrings": T.BITS_SUFF_SUB,
    "BitStringsEps": T.BITS_EPS,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args, sys.stdout)
    except (CliError, L.LogicError, T.CatalogError, TR.TranslationError,
            M.EvalError, I.InterpError, sl2.CodecError, OSError,
            json.JSONDecodeError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
