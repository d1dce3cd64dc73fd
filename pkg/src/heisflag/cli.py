"""Command-line interface.

Subcommands: classify, table, verify, witness, curvature, matsuki.  Output
is line-oriented "key: value" text; `--record` appends one machine-readable
JSON line.  Exit codes: 0 success, 1 malformed input, 2 precondition
violation (out-of-scope signature, degenerate matrix, bad shape), 3 failed
verification check or witness residual above tolerance.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import linalg, sampling
from .curvature import curvature_report
from .enumeration import survey_flags
from .forms import (
    Flag,
    FlagInvariants,
    LineSignature,
    PreconditionError,
    QuadraticSpace,
    Signature,
    Subspace,
    flag_invariants,
)
from .heisenberg import (
    HeisenbergAlgebra,
    admissible_classes,
    classify_metric,
    metric_class,
    parabolic_sample,
    act_on_metric,
    representative,
)
from .matrixio import MatrixFormatError, parse_rational, read_matrix
from .witness import (
    InequivalentFlagsError,
    WitnessFailureError,
    describe_inequivalence,
    isometry_witness,
    witness_residuals,
)

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_PRECONDITION = 2
EXIT_CHECK_FAILED = 3


def _print_record(args, record: dict) -> None:
    if getattr(args, "record", False):
        print("record: " + json.dumps(record, sort_keys=True))


def _parse_flag_spec(spec: str, small_count: int) -> Flag:
    vectors = []
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise MatrixFormatError("empty vector in flag spec")
        vectors.append(tuple(parse_rational(tok.strip()) for tok in chunk.split(",")))
    if len({len(v) for v in vectors}) != 1:
        raise MatrixFormatError("flag spec vectors must share one length")
    if not 1 <= small_count < len(vectors):
        raise MatrixFormatError("flag spec needs more vectors than the small part")
    n = len(vectors[0])
    small = Subspace.spanned_by(vectors[:small_count], n)
    big = Subspace.spanned_by(vectors, n)
    return Flag(small, big)


def _signature_str(sig: Signature) -> str:
    return str(sig)


def cmd_classify(args) -> int:
    try:
        gram = read_matrix(args.path)
    except (OSError, MatrixFormatError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_MALFORMED
    n = len(gram)
    if n < 4:
        print(f"error: n = {n} is out of scope (classification needs n >= 4)",
              file=sys.stderr)
        return EXIT_PRECONDITION
    try:
        alg = HeisenbergAlgebra(n)
        result = classify_metric(alg, gram)
    except PreconditionError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PRECONDITION
    row = result.metric_class
    print(f"p: {result.p}")
    print(f"q: {result.q}")
    print(f"swapped: {'true' if result.swapped else 'false'}")
    print(f"class_id: {result.class_id}")
    print(f"center_signature: {_signature_str(result.center_signature)}")
    print(f"derived_refined: {result.refined}")
    record = {
        "command": "classify", "p": result.p, "q": result.q,
        "swapped": result.swapped, "class_id": result.class_id,
        "center_signature": result.center_signature.as_tuple(),
        "derived_refined": str(result.refined),
        "notes": f"center pattern {row.pattern_str()}",
    }
    if args.curvature:
        report = curvature_report(alg, gram)
        print(f"flat: {'true' if report.is_flat else 'false'}")
        print(f"scalar_curvature: {report.scalar_curv}")
        record["flat"] = report.is_flat
        record["scalar_curvature"] = str(report.scalar_curv)
    print(f"notes: center pattern {row.pattern_str()}")
    _print_record(args, record)
    return EXIT_OK


def cmd_table(args) -> int:
    try:
        table = admissible_classes(args.p, args.q)
    except PreconditionError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PRECONDITION
    print(f"p: {table.p}")
    print(f"q: {table.q}")
    for row in table.classes:
        concrete = row.center_signature(table.p, table.q)
        print(f"class {row.id}: pattern {row.pattern_str()} = "
              f"{_signature_str(concrete)}, refined {row.refined}")
    print(f"count: {table.count}")
    _print_record(args, {
        "command": "table", "p": table.p, "q": table.q,
        "ids": list(table.ids), "count": table.count,
    })
    return EXIT_OK


def _expected_count(p: int, q: int) -> int:
    p, q = max(p, q), min(p, q)
    if q >= 3:
        return 21
    if q == 2:
        return 15 if p >= 3 else 10
    return 6


def cmd_verify(args) -> int:
    try:
        table = admissible_classes(args.p, args.q)
    except PreconditionError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PRECONDITION
    p, q = table.p, table.q
    n = p + q
    alg = HeisenbergAlgebra(n)
    rng = random.Random(args.seed)
    trials = args.trials
    print(f"p: {p}")
    print(f"q: {q}")
    print(f"seed: {args.seed}")
    print(f"trials: {trials}")
    failures = []

    def report(name: str, ok: bool, detail: str) -> None:
        print(f"check {name}: {'pass' if ok else 'FAIL'} ({detail})")
        if not ok:
            failures.append(name)

    expected = _expected_count(p, q)
    report("class_count", table.count == expected,
           f"derived {table.count}, expected {expected}")

    survey = survey_flags(p, q)
    expected_inv = {
        FlagInvariants(row.center_signature(p, q), _small_signature(row.refined),
                       1 if row.refined is LineSignature.RADICAL else 0)
        for row in table.classes
    }
    observed = survey.observed_invariants
    report("enumeration_completeness", observed == expected_inv,
           f"observed {len(observed)} orbit types, "
           f"missing {len(expected_inv - observed)}, extra {len(observed - expected_inv)}")

    report("matsuki_duality_count", len(survey.matsuki) == len(observed),
           f"matsuki {len(survey.matsuki)}, invariants {len(observed)}")

    seen_ids: set[int] = set()
    admissible_ids = set(table.ids)
    coverage_cap = max(3000, 5 * trials)
    stray = False
    for _ in range(coverage_cap):
        gram = sampling.random_gram(p, q, rng)
        seen_ids.add(classify_metric(alg, gram).class_id)
        if not seen_ids <= admissible_ids:
            stray = True
            break
        if seen_ids == admissible_ids:
            break
    report("metric_class_coverage", not stray and seen_ids == admissible_ids,
           f"observed ids {sorted(seen_ids)}")

    bad = 0
    for _ in range(trials):
        row = table.classes[rng.randrange(table.count)]
        base = act_on_metric([list(r) for r in parabolic_sample(n, rng).matrix],
                             representative(row.id, p, q))
        acted = act_on_metric([list(r) for r in parabolic_sample(n, rng).matrix], base)
        if classify_metric(alg, acted).class_id != row.id:
            bad += 1
    report("parabolic_invariance", bad == 0, f"{trials - bad}/{trials} trials")

    space = QuadraticSpace.standard(p, q)
    bad = 0
    for _ in range(trials):
        f = sampling.random_flag(p, q, rng)
        g = sampling.random_opq(p, q, rng)
        if flag_invariants(space, sampling.apply_to_flag(g, f)) != flag_invariants(space, f):
            bad += 1
    report("flag_invariance", bad == 0, f"{trials - bad}/{trials} trials")

    ok = not failures
    print(f"result: {'pass' if ok else 'FAIL: ' + ', '.join(failures)}")
    _print_record(args, {
        "command": "verify", "p": p, "q": q, "seed": args.seed, "trials": trials,
        "failures": failures, "observed_ids": sorted(seen_ids),
        "orbit_types": len(observed), "matsuki_tuples": len(survey.matsuki),
    })
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _small_signature(refined: LineSignature) -> Signature:
    return {
        LineSignature.SPACELIKE: Signature(1, 0, 0),
        LineSignature.TIMELIKE: Signature(0, 1, 0),
        LineSignature.LIGHTLIKE: Signature(0, 0, 1),
        LineSignature.RADICAL: Signature(0, 0, 1),
    }[refined]


def cmd_witness(args) -> int:
    try:
        f1 = _parse_flag_spec(args.flag1, args.small)
        f2 = _parse_flag_spec(args.flag2, args.small)
    except (MatrixFormatError, PreconditionError, linalg.ShapeError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_MALFORMED
    p, q = args.p, args.q
    if f1.big.ambient_dim != p + q or f2.big.ambient_dim != p + q:
        print("error: flag vectors must have length p + q", file=sys.stderr)
        return EXIT_MALFORMED
    if f1.shape != f2.shape:
        print(f"error: flag shapes differ: {f1.shape} vs {f2.shape}", file=sys.stderr)
        return EXIT_MALFORMED
    print(f"p: {p}")
    print(f"q: {q}")
    space = QuadraticSpace.standard(p, q)
    try:
        inv1 = flag_invariants(space, f1)
        inv2 = flag_invariants(space, f2)
    except PreconditionError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PRECONDITION
    diff = describe_inequivalence(inv1, inv2)
    if diff is not None:
        print("equivalent: false")
        print(f"inequivalent: {diff}")
        _print_record(args, {"command": "witness", "p": p, "q": q,
                             "equivalent": False, "reason": diff})
        return EXIT_OK
    try:
        g = isometry_witness(p, q, f1, f2)
    except WitnessFailureError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    res = witness_residuals(p, q, g, f1, f2)
    print("equivalent: true")
    print("witness:")
    for row in g:
        print("  " + " ".join(f"{x: .12e}" for x in row))
    print(f"residual_form: {res['form']:.3e}")
    print(f"residual_small: {res['small']:.3e}")
    print(f"residual_big: {res['big']:.3e}")
    _print_record(args, {"command": "witness", "p": p, "q": q, "equivalent": True,
                         "residual_form": res["form"], "residual_small": res["small"],
                         "residual_big": res["big"]})
    return EXIT_OK


def cmd_curvature(args) -> int:
    try:
        table = admissible_classes(args.p, args.q)
    except PreconditionError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PRECONDITION
    p, q = table.p, table.q
    alg = HeisenbergAlgebra(p + q)
    ids = [args.class_id] if args.class_id else list(table.ids)
    if args.class_id and args.class_id not in table.ids:
        print(f"error: class {args.class_id} is not admissible for ({p}, {q})",
              file=sys.stderr)
        return EXIT_PRECONDITION
    print(f"p: {p}")
    print(f"q: {q}")
    rows = []
    for cid in ids:
        rep = representative(cid, p, q)
        report = curvature_report(alg, rep)
        sol = report.soliton
        print(f"class {cid}:")
        print(f"  flat: {'true' if report.is_flat else 'false'}")
        print(f"  scalar_curvature: {report.scalar_curv}")
        print(f"  ricci_diagonal: {' '.join(str(report.ricci[i][i]) for i in range(p + q))}")
        if sol is None:
            print("  soliton: none")
        else:
            c, d = sol
            einstein = all(x == 0 for r in d for x in r)
            print(f"  soliton: c = {c}, derivation {'zero' if einstein else 'nonzero'}")
            print(f"  einstein: {'true' if einstein else 'false'}")
        rows.append({"class_id": cid, "flat": report.is_flat,
                     "scalar": str(report.scalar_curv),
                     "soliton_c": None if sol is None else str(sol[0]),
                     "einstein": report.is_einstein})
    _print_record(args, {"command": "curvature", "p": p, "q": q, "classes": rows})
    return EXIT_OK


def cmd_matsuki(args) -> int:
    try:
        f = _parse_flag_spec(args.flag, 1)
    except (MatrixFormatError, PreconditionError, linalg.ShapeError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_MALFORMED
    p, q = args.p, args.q
    try:
        from .forms import matsuki_data
        data = matsuki_data(f, p, q)
    except (PreconditionError, linalg.ShapeError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_PRECONDITION
    print(f"p: {p}")
    print(f"q: {q}")
    for name, val in zip(("c_plus", "c_minus", "c_zero", "d_plus", "d_minus",
                          "d_zero", "d_pm"), data.as_tuple()):
        print(f"{name}: {val}")
    _print_record(args, {"command": "matsuki", "p": p, "q": q,
                         "data": list(data.as_tuple())})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heisflag",
        description="Exact classification of left-invariant pseudo-Riemannian "
                    "metrics on the Heisenberg group times a Euclidean factor.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="classify a Gram matrix file")
    p_classify.add_argument("path", help="matrix file: header n, then n rows of rationals")
    p_classify.add_argument("--curvature", action="store_true",
                            help="also report flatness and scalar curvature")
    p_classify.add_argument("--record", action="store_true")
    p_classify.set_defaults(func=cmd_classify)

    p_table = sub.add_parser("table", help="print the admissible class table")
    p_table.add_argument("p", type=int)
    p_table.add_argument("q", type=int)
    p_table.add_argument("--record", action="store_true")
    p_table.set_defaults(func=cmd_table)

    p_verify = sub.add_parser("verify", help="run the verification checks")
    p_verify.add_argument("p", type=int)
    p_verify.add_argument("q", type=int)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--trials", type=int, default=200)
    p_verify.add_argument("--record", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_witness = sub.add_parser("witness", help="isometry witness between two flags")
    p_witness.add_argument("p", type=int)
    p_witness.add_argument("q", type=int)
    p_witness.add_argument("flag1", help="semicolon-separated vectors of comma-separated rationals")
    p_witness.add_argument("flag2")
    p_witness.add_argument("--small", type=int, default=1,
                           help="how many leading vectors span the small part")
    p_witness.add_argument("--record", action="store_true")
    p_witness.set_defaults(func=cmd_witness)

    p_curv = sub.add_parser("curvature", help="per-class curvature report")
    p_curv.add_argument("p", type=int)
    p_curv.add_argument("q", type=int)
    p_curv.add_argument("--class-id", type=int, default=None)
    p_curv.add_argument("--record", action="store_true")
    p_curv.set_defaults(func=cmd_curvature)

    p_matsuki = sub.add_parser("matsuki", help="seven coordinate counts of a flag")
    p_matsuki.add_argument("p", type=int)
    p_matsuki.add_argument("q", type=int)
    p_matsuki.add_argument("flag", help="flag spec; first vector spans the line")
    p_matsuki.add_argument("--record", action="store_true")
    p_matsuki.set_defaults(func=cmd_matsuki)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
