"""Command-line front end.

Subcommands: ``tableaux`` lists standard tableaux with contents,
``symmetrizer`` prints a group-algebra element, ``fusion-f`` builds the
two-parameter operator and reports its rank, ``verify`` runs named check
suites over a size-bounded sweep and writes a JSON certificate.

Exit codes: 0 all checks passed, 1 at least one check failed, 2 invalid
configuration or usage.  All randomness flows from --seed (default
1729); rerunning with the same configuration and seed yields a
byte-identical certificate (timings are only included with --timings).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .exactnum import PoleAtLimit
from .fusion import (CheckResult, ConfigError, FusionConfig, NotApplicable,
                     SizeLimitExceeded, certify, e_operator, f_operator_closed,
                     f_operator_general, max_dim, operator_hash,
                     scaled_idempotency_constant, verify_corollary32,
                     verify_prop33, verify_scaled_idempotent,
                     verify_theta_factorization)
from .shapes import (ContainmentError, ParityError, Partition, column_tableau,
                     partitions_of, row_tableau, skew, standard_tableaux,
                     validate_label)
from .symalg import e_col, e_row, e_tableau, fusion_e_skew
from .tensorop import alternating_form, rank, symmetric_form
from .rmatrix import (check_eval_consistency_E, check_eval_consistency_F,
                      check_intertwiner_E, check_intertwiner_F,
                      check_image_coincidence, check_lemma44,
                      check_reflection_image, check_rtt, check_unitarity,
                      check_yang_baxter_family)

DEFAULT_SEED = 1729
CERT_VERSION = 1

FORM_KIND = {"O": "symmetric", "Sp": "alternating"}


class UsageError(ValueError):
    pass


def _parse_partition(text: str | None) -> Partition:
    if not text:
        return Partition()
    try:
        return Partition.from_string(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _pick_tableau(shape, which: str):
    if which == "row":
        return row_tableau(shape)
    if which == "col":
        return column_tableau(shape)
    try:
        index = int(which)
    except ValueError as exc:
        raise UsageError(f"--tableau must be row, col or an index, got {which!r}") from exc
    tabs = standard_tableaux(shape)
    if not 0 <= index < len(tabs):
        raise UsageError(f"tableau index {index} out of range (shape has {len(tabs)})")
    return tabs[index]


def cmd_tableaux(args) -> int:
    lam = _parse_partition(args.lam)
    mu = _parse_partition(args.mu)
    shape = skew(lam, mu)  # raises ContainmentError on bad input
    tabs = standard_tableaux(shape)
    print(f"shape {shape}: {shape.n} boxes, {len(tabs)} standard tableaux")
    for i, t in enumerate(tabs):
        contents = ",".join(str(c) for c in t.contents)
        print(f"  [{i}] entries={','.join(str(e) for e in t.entries)} contents={contents}")
    rt, ct = row_tableau(shape), column_tableau(shape)
    print(f"row tableau contents:    {','.join(str(c) for c in rt.contents)}")
    print(f"column tableau contents: {','.join(str(c) for c in ct.contents)}")
    return 0


def cmd_symmetrizer(args) -> int:
    lam = _parse_partition(args.lam)
    mu = _parse_partition(args.mu)
    shape = skew(lam, mu)
    T = _pick_tableau(shape, args.tableau)
    if shape.is_skew:
        elem = fusion_e_skew(T, "row")
    else:
        elem = e_tableau(T)
    payload = elem.to_json()
    print(f"tableau {T}: {len(payload)} terms")
    print(json.dumps(payload, indent=2))
    return 0


def cmd_fusion_f(args) -> int:
    lam = _parse_partition(args.lam)
    mu = _parse_partition(args.mu)
    shape = skew(lam, mu)
    T = _pick_tableau(shape, args.tableau)
    cfg = FusionConfig(T, args.N, args.M, FORM_KIND[args.form])
    if args.N ** shape.n > max_dim():
        raise UsageError(f"N^n = {args.N ** shape.n} exceeds FUSION_MAX_DIM = {max_dim()}")
    try:
        F = f_operator_general(cfg)
    except PoleAtLimit as exc:
        print(f"FATAL: {exc}", file=sys.stderr)
        return 1
    print(f"operator for {T}, {args.form}_{args.N}, M={args.M}")
    print(f"rank {rank(F)}   nnz {F.nnz()}   hash {operator_hash(F)}")
    cert = certify(cfg)
    for chk in sorted(cert.checks, key=lambda c: c.name):
        print(f"  {'PASS' if chk.passed else 'FAIL'} {chk.name}")
    if args.output:
        payload = cert.to_json()
        payload["rank"] = rank(F)
        payload["entries"] = F.to_triplets()
        with open(args.output, "w") as fh:
            json.dump(payload, fh, indent=2)
        print(f"wrote {args.output}")
    return 1 if not cert.all_passed() else 0


# ---------------------------------------------------------------------------
# verification suites


def _valid_partitions(group: str, dim: int, max_boxes: int):
    for size in range(1, max_boxes + 1):
        for lam in partitions_of(size):
            if validate_label(lam, group, dim):
                yield lam


def _suite_idempotency(args, entries):
    group = args.form
    kind = FORM_KIND[group]
    for lam in _valid_partitions(group, args.N, args.max_boxes):
        if args.N ** lam.size > max_dim():
            continue
        scalar = scaled_idempotency_constant(lam)
        for T in standard_tableaux(skew(lam)):
            e = e_tableau(T)
            ok = (e * e) == e.scaled(scalar)
            cfg = FusionConfig(T, args.N, 0, kind)
            F = f_operator_general(cfg)
            ok = ok and verify_scaled_idempotent(F, scalar)
            entries.append((f"idempotency/{T}", "scaled-square", ok, None))


def _suite_prop33(args, entries):
    group = args.form
    kind = FORM_KIND[group]
    for lam in _valid_partitions(group, args.N, args.max_boxes):
        if args.N ** lam.size > max_dim():
            continue
        for T in standard_tableaux(skew(lam)):
            cfg = FusionConfig(T, args.N, 0, kind)
            ok = verify_prop33(cfg)
            entries.append((f"traceless-image/{T}", "traceless-image-equality", ok, None))


def _suite_corollary32(args, entries):
    group = args.form
    kind = FORM_KIND[group]
    for lam in _valid_partitions(group, args.N, args.max_boxes):
        if args.N ** lam.size > max_dim():
            continue
        for T in standard_tableaux(skew(lam)):
            rows = T.rows()
            cols = T.columns()
            for k in range(1, T.n):
                if rows[k - 1] == rows[k] or cols[k - 1] == cols[k]:
                    continue
                cfg = FusionConfig(T, args.N, 0, kind)
                ok = verify_corollary32(T, k, cfg)
                entries.append((f"exchange/{T}/k{k}", "fusion-exchange-relation", ok, None))


def _suite_yang_baxter(args, entries):
    form = symmetric_form(args.N) if args.form == "O" else alternating_form(args.N)
    for which in ("YB35", "tilde37", "bar38", "mixed385"):
        chk = check_yang_baxter_family(which, args.N, form, args.seed)
        entries.append((chk.name, chk.statement, chk.passed, chk.witness))
    for which in ("RR", "tildebar"):
        chk = check_unitarity(which, args.N, form, args.seed)
        entries.append((chk.name, chk.statement, chk.passed, chk.witness))


def _suite_intertwiners(args, entries):
    kind = FORM_KIND[args.form]
    form = symmetric_form(args.N) if args.form == "O" else alternating_form(args.N)
    max_boxes = min(args.max_boxes, 3)
    for lam in _valid_partitions(args.form, args.N + args.M, max_boxes):
        for T in standard_tableaux(skew(lam)):
            chk = check_intertwiner_E(T, args.N, Fraction(0), args.seed)
            entries.append((chk.name, chk.statement, chk.passed, chk.witness))
            try:
                cfg = FusionConfig(T, args.N, args.M, kind)
            except ConfigError:
                continue
            chk = check_intertwiner_F(cfg, args.seed)
            entries.append((chk.name, chk.statement, chk.passed, chk.witness))
            chk = check_eval_consistency_E(T, args.N, args.seed)
            entries.append((chk.name, chk.statement, chk.passed, chk.witness))
            if args.M == 0:
                chk = check_eval_consistency_F(cfg, args.seed)
                entries.append((chk.name, chk.statement, chk.passed, chk.witness))
    for n, zs in ((1, (Fraction(0),)), (2, (Fraction(0), Fraction(1)))):
        chk = check_rtt(zs, args.N, args.seed)
        entries.append((chk.name, chk.statement, chk.passed, chk.witness))
        chk = check_reflection_image(zs, args.N, form, args.seed)
        entries.append((chk.name, chk.statement, chk.passed, chk.witness))
    chk = check_image_coincidence(Fraction(0), args.N, form, args.seed)
    entries.append((chk.name, chk.statement, chk.passed, chk.witness))


def _suite_lemma44(args, entries):
    for size in range(0, min(args.max_boxes, 4) + 1):
        for mu in partitions_of(size):
            chk = check_lemma44(mu, args.seed)
            entries.append((chk.name, chk.statement, chk.passed, chk.witness))


def _suite_theta(args, entries):
    configs = [
        (Partition((2,)), 1, 2, 1, "symmetric"),
        (Partition((2, 1)), 1, 2, 2, "symmetric"),
    ]
    for lam, m, N, M, kind in configs:
        for T in standard_tableaux(skew(lam)):
            ok = verify_theta_factorization(T, m, N, M, kind)
            entries.append((f"split-factorization/{T}/m{m}/N{N}/M{M}",
                            "compression-factorization", ok, None))


SUITES = {
    "idempotency": _suite_idempotency,
    "prop33": _suite_prop33,
    "corollary32": _suite_corollary32,
    "yang-baxter": _suite_yang_baxter,
    "intertwiners": _suite_intertwiners,
    "lemma44": _suite_lemma44,
    "theta-factorization": _suite_theta,
}


def cmd_verify(args) -> int:
    suites = args.suite or list(SUITES)
    for name in suites:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; available: {', '.join(SUITES)}")
    if args.form == "Sp" and args.N % 2:
        raise ParityError(f"symplectic verification needs even N, got {args.N}")
    results: list[CheckResult] = []

    def run_suite(name):
        entries: list[tuple] = []
        t0 = time.monotonic()
        SUITES[name](args, entries)
        elapsed = int(1000 * (time.monotonic() - t0))
        out = []
        for ename, statement, ok, witness in entries:
            out.append(CheckResult(name=f"{name}/{ename}", statement=statement,
                                   passed=bool(ok), witness=witness,
                                   runtime_ms=elapsed if args.timings else None))
        return out

    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        for chunk in pool.map(run_suite, suites):
            results.extend(chunk)

    certificate = {
        "version": CERT_VERSION,
        "config": {
            "suites": sorted(suites),
            "form": args.form,
            "N": args.N,
            "M": args.M,
            "max_boxes": args.max_boxes,
            "seed": args.seed,
        },
        "entries": [r.to_json() for r in sorted(results, key=lambda r: r.name)],
    }
    payload = json.dumps(certificate, indent=2, sort_keys=True)
    with open(args.output, "w") as fh:
        fh.write(payload + "\n")
    failed = [r for r in results if not r.passed]
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        print(f"{mark} {r.name}")
    print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symfusion",
        description="Exact fusion symmetrizers on tensor space and their verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--lambda", dest="lam", required=True,
                       help="outer partition, comma separated (e.g. 5,3,3,3,3)")
        p.add_argument("--mu", dest="mu", default="",
                       help="inner partition for skew shapes")

    p = sub.add_parser("tableaux", help="list standard tableaux and contents")
    add_common(p)
    p.set_defaults(func=cmd_tableaux)

    p = sub.add_parser("symmetrizer", help="print a symmetrizer group-algebra element")
    add_common(p)
    p.add_argument("--tableau", default="row", help="row, col, or tableau index")
    p.set_defaults(func=cmd_symmetrizer)

    p = sub.add_parser("fusion-f", help="build the two-parameter fusion operator")
    add_common(p)
    p.add_argument("--tableau", default="row", help="row, col, or tableau index")
    p.add_argument("--form", choices=("O", "Sp"), required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--M", type=int, default=0)
    p.add_argument("--output", default=None, help="write operator JSON here")
    p.set_defaults(func=cmd_fusion_f)

    p = sub.add_parser("verify", help="run verification suites, write a certificate")
    p.add_argument("--suite", action="append", default=None,
                   help=f"suite name (repeatable); default all: {', '.join(SUITES)}")
    p.add_argument("--form", choices=("O", "Sp"), default="O")
    p.add_argument("--N", type=int, default=2)
    p.add_argument("--M", type=int, default=0)
    p.add_argument("--max-boxes", type=int, default=3)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--jobs", type=int, default=2)
    p.add_argument("--output", default="symfusion-certificate.json",
                   help="certificate path (always written)")
    p.add_argument("--timings", action="store_true",
                   help="include per-suite runtime_ms (breaks byte reproducibility)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ContainmentError, ParityError, ConfigError,
            NotApplicable, SizeLimitExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
