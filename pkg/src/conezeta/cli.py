"""
conezeta command line.

    conezeta genfun DOC [--region 1,2] [--gamma zero|FILE]
    conezeta reciprocity DOC [--region ...]
    conezeta zeta DOC
    conezeta fneq DOC
    conezeta verify DOC [--order N]
    conezeta expand DOC [--region ...] [--order N]
    conezeta torus D K [--explicit]

DOC is a path or "-" for stdin.  Results go to stdout as JSON, logs to
stderr.  Exit codes: 0 ok, 2 malformed document, 3 hypotheses fail,
4 verification failed.
"""
import argparse
import json
import logging
import sys
from itertools import combinations

from . import document
from .algebra import eq_rational, normalize, render, to_json
from .document import SchemaError
from .genfun import GenFunEngine, HypothesisError, check_reciprocity
from .oracle import ExpansionError, compare, lattice_sum_cells, lattice_sum_truncated, series_expand
from .zeta import (WeightDataError, fneq_detect, torus_closed_form, verify_main_theorem,
                   weighted_zeta)

log = logging.getLogger("conezeta")

EXIT_OK, EXIT_SCHEMA, EXIT_HYPOTHESIS, EXIT_FAILED = 0, 2, 3, 4


class Failed(Exception):
    """Verification failed; carries the JSON payload to print."""

    def __init__(self, payload):
        super().__init__("verification failed")
        self.payload = payload


def _rational(x):
    x = normalize(x)
    return {"canonical": to_json(x), "rendered": {"t": render(x, "t"), "s": render(x, "s")}}


def _region(args, problem):
    if args.region is None:
        return problem.region
    text = args.region.strip()
    if not text:
        return ()
    try:
        idx = sorted({int(p) for p in text.split(",")})
    except ValueError:
        raise SchemaError("--region must be comma-separated integers", "--region") from None
    nb = len(problem.complex.bounding)
    for i in idx:
        if not 1 <= i <= nb:
            raise SchemaError("region index %d outside 1..%d" % (i, nb), "--region")
    return tuple(i - 1 for i in idx)


def _all_regions(nb):
    return [I for k in range(nb + 1) for I in combinations(range(nb), k)]


def _one_based(I):
    return [i + 1 for i in I]


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _gamma_override(spec):
    if spec is None:
        return None
    if spec == "zero":
        return "zero"
    try:
        raw = json.loads(_read(spec))
    except (OSError, json.JSONDecodeError) as exc:
        raise SchemaError("cannot read gamma file: %s" % exc, "--gamma") from None
    if isinstance(raw, dict) and "gamma" in raw:
        raw = raw["gamma"]
    try:
        document.validate({"torus_example": {"d": 2, "k": 3}, "gamma": raw})
    except SchemaError as exc:
        raise SchemaError(str(exc), "--gamma" + exc.pointer.replace("/gamma", "", 1)) from None
    return document.canonical({"torus_example": {"d": 2, "k": 3}, "gamma": raw})["gamma"]


def _load(args):
    doc = document.loads(_read(args.document))
    return document.build_problem(doc, _gamma_override(getattr(args, "gamma", None)))


def cmd_genfun(args):
    p = _load(args)
    I = _region(args, p)
    engine = GenFunEngine(p.complex, p.spec)
    log.info("%d cells", len(engine.cells))
    return {"command": "genfun", "region": _one_based(I), "genfun": _rational(engine.region(I))}


def cmd_reciprocity(args):
    p = _load(args)
    engine = GenFunEngine(p.complex, p.spec)
    regions = [_region(args, p)] if args.region is not None else _all_regions(len(p.complex.bounding))
    results = []
    for I in regions:
        v = check_reciprocity(p.complex, I, p.spec, engine)
        results.append({"region": _one_based(I), "holds": v.holds})
    out = {"command": "reciprocity", "results": results, "holds": all(r["holds"] for r in results)}
    if not out["holds"]:
        raise Failed(out)
    return out


def _zeta(p):
    engine = GenFunEngine(p.zeta.complex, p.zeta.spec)
    return weighted_zeta(p.zeta, engine)


def cmd_zeta(args):
    p = _load(args)
    Z = _zeta(p)
    out = {"command": "zeta", "zeta": _rational(Z)}
    if p.zeta.notes:
        out["notes"] = list(p.zeta.notes)
    return out


def cmd_fneq(args):
    p = _load(args)
    Z = _zeta(p)
    cert = fneq_detect(Z)
    return {"command": "fneq", "zeta": _rational(Z),
            "functional_equation": None if cert is None else cert.as_dict()}


def _oracle_checks(p, order, regions):
    engine = GenFunEngine(p.complex, p.spec)
    sums = lattice_sum_cells(p.complex, p.spec, order)
    results = []
    for I in regions:
        series = series_expand(engine.region(I), order)
        verdict = compare(series, lattice_sum_truncated(p.complex, I, p.spec, order, sums))
        results.append({"region": _one_based(I), **verdict})
    return results


def cmd_verify(args):
    p = _load(args)
    order = args.order if args.order is not None else p.series_order
    if p.kind == "weights":
        try:
            report = verify_main_theorem(p.zeta, p.datum)
        except WeightDataError as exc:
            raise HypothesisError(str(exc)) from None
        out = {"command": "verify", "kind": "weights", "checks": report["checks"],
               "a0": report["a0"], "c": report["c"], "expected": report["expected"],
               "certificate": report["certificate"], "zeta": _rational(report["zeta"]),
               "passed": report["passed"]}
        if "translation_failures" in report:
            out["translation_failures"] = report["translation_failures"]
    elif p.kind == "torus_example":
        d, k = p.torus
        Z = _zeta(p)
        _, closed = torus_closed_form(d, k)
        checks = {"closed_form": eq_rational(Z, closed), "no_functional_equation": fneq_detect(Z) is None}
        out = {"command": "verify", "kind": "torus_example", "checks": checks,
               "zeta": _rational(Z), "passed": all(checks.values())}
    else:
        engine = GenFunEngine(p.complex, p.spec)
        regions = _all_regions(len(p.complex.bounding))
        recip = [{"region": _one_based(I), "holds": check_reciprocity(p.complex, I, p.spec, engine).holds}
                 for I in regions]
        oracle = _oracle_checks(p, order, regions)
        checks = {"reciprocity": all(r["holds"] for r in recip), "oracle": all(r["equal"] for r in oracle)}
        out = {"command": "verify", "kind": "complex", "checks": checks, "order": order,
               "reciprocity": recip, "oracle": oracle, "passed": all(checks.values())}
    if not out["passed"]:
        raise Failed(out)
    return out


def cmd_expand(args):
    p = _load(args)
    I = _region(args, p)
    order = args.order if args.order is not None else p.series_order
    engine = GenFunEngine(p.complex, p.spec)
    try:
        series = series_expand(engine.region(I), order)
    except ExpansionError as exc:
        raise HypothesisError(str(exc)) from None
    brute = lattice_sum_truncated(p.complex, I, p.spec, order)
    verdict = compare(series, brute)
    out = {"command": "expand", "region": _one_based(I), "order": order,
           "series": series.to_json(), "lattice_sum": brute.to_json(), "comparison": verdict}
    if not verdict["equal"]:
        raise Failed(out)
    return out


def cmd_torus(args):
    try:
        doc = document.torus_document(args.d, args.k, args.explicit)
    except ValueError as exc:
        raise SchemaError(str(exc), "d/k") from None
    return document.canonical(doc)


def build_parser():
    ap = argparse.ArgumentParser(prog="conezeta", description="Exact cone generating functions and zeta functions.")
    ap.add_argument("-v", "--verbose", action="count", default=0, help="more logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def doc_cmd(name, func, help_, region=False, order=False):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("document", help="problem document (JSON path, or - for stdin)")
        sp.add_argument("--gamma", metavar="zero|FILE", help="override the piecewise weight")
        if region:
            sp.add_argument("--region", metavar="I", help="comma-separated 1-based bounding indices")
        if order:
            sp.add_argument("--order", type=int, metavar="N", help="t-degree for series checks")
        sp.set_defaults(func=func)

    doc_cmd("genfun", cmd_genfun, "generating function of the region C_I", region=True)
    doc_cmd("reciprocity", cmd_reciprocity, "check reciprocity for I (all I by default)", region=True)
    doc_cmd("zeta", cmd_zeta, "Weyl-weighted zeta function")
    doc_cmd("fneq", cmd_fneq, "detect a functional equation of the zeta function")
    doc_cmd("verify", cmd_verify, "run every check that applies to the document", order=True)
    doc_cmd("expand", cmd_expand, "t-expansion compared with a brute-force lattice sum", region=True, order=True)
    tp = sub.add_parser("torus", help="emit the torus-family document for (d, k)")
    tp.add_argument("d", type=int)
    tp.add_argument("k", type=int)
    tp.add_argument("--explicit", action="store_true", help="spell out the complex and spec")
    tp.set_defaults(func=cmd_torus)
    return ap


def _emit(payload):
    sys.stdout.write(document.dumps(payload) + "\n")
    sys.stdout.flush()


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s",
                        level=logging.WARNING - 10 * min(args.verbose, 2))
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    try:
        _emit(args.func(args))
        return EXIT_OK
    except SchemaError as exc:
        log.error("schema: %s at %s", exc, exc.pointer or "/")
        _emit(exc.to_json())
        return EXIT_SCHEMA
    except HypothesisError as exc:
        log.error("hypothesis: %s", exc)
        _emit({"error": "hypothesis", "message": str(exc)})
        return EXIT_HYPOTHESIS
    except Failed as exc:
        log.error("verification failed")
        _emit(exc.payload)
        return EXIT_FAILED
    except OSError as exc:
        log.error("%s", exc)
        _emit({"error": "io", "message": str(exc)})
        return EXIT_SCHEMA


if __name__ == "__main__":
    sys.exit(main())
