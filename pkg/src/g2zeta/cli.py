"""Batch command-line front end.

Subcommands: verify-group (matrix-model identity audit), unfold-cosets
(double-coset combinatorics), verify-lemmas (exact lemma equivalences),
closed-form (the local factor and its target, with verdict), oracle
(numeric comparison suite) and all.  Exit status 0 iff every executed check
passed; 1 on a failed check; 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import adjoint, oracle, roots, zeta


def _emit(payload: dict, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_verify_group(args) -> int:
    reports = adjoint.run_group_audit(samples=args.samples, seed=args.seed)
    ok = all(r.passed for r in reports)
    lines = []
    for r in reports:
        status = "pass" if r.passed else "FAIL"
        note = f"  ({r.detail})" if r.detail else ""
        lines.append(f"[{status}] {r.label}  x{r.samples}{note}")
    lines.append(f"group audit: {'all identities hold' if ok else 'FAILURES'}")
    payload = {
        "command": "verify-group",
        "samples": args.samples,
        "identities": [
            {"label": r.label, "samples": r.samples, "passed": r.passed, "note": r.detail}
            for r in reports
        ],
        "passed": ok,
    }
    _emit(payload, args.json, lines)
    return 0 if ok else 1


def cmd_unfold_cosets(args) -> int:
    reps = roots.double_coset_reps()
    cosets = roots.double_cosets()
    lines = [f"double cosets of {{1,s_a}}\\W/{{1,s_b}}: {len(reps)}"]
    rep_payload = []
    ok = len(reps) == 3 and sum(len(c) for c in cosets) == 12
    for rep in reps:
        fixed, levi = roots.stabilizer_data(rep)
        word = "".join(rep.word) or "1"
        fixed_txt = ", ".join(f"{g.m}a+{g.n}b" for g in fixed)
        lines.append(f"  rep {word}: V-roots fixed into P' = [{fixed_txt}]; Levi: {levi}")
        rep_payload.append({
            "word": word,
            "v_fixed": [[g.m, g.n] for g in fixed],
            "levi": levi,
        })
    gamma = roots.gamma_element()
    gamma_fixed, gamma_levi = roots.stabilizer_data(gamma)
    ok = ok and list(gamma_fixed) == [roots.Root(1, 1)] and gamma_levi == "borel"
    lines.append(f"gamma = w_b w_a w_b w_a: V^gamma = {{a+b}}, SL2^gamma = Borel: "
                 f"{'confirmed' if ok else 'MISMATCH'}")
    payload = {"command": "unfold-cosets", "representatives": rep_payload, "passed": ok}
    _emit(payload, args.json, lines)
    return 0 if ok else 1


def cmd_verify_lemmas(args) -> int:
    nmax = args.nmax
    checks = []

    def add(label, good):
        checks.append({"label": label, "passed": bool(good)})

    add(f"I closed = defining, n<=max({nmax},8)",
        all(zeta.I_at(n).eq(zeta.I_defining(n)) for n in range(max(nmax, 8) + 1)))
    add("I(0) = 1", zeta.I_at(0).eq(zeta.ONE))
    for n in range(nmax + 1):
        add(f"J1 lemma = decomposition, n={n}", zeta.J1_closed(n).eq(zeta.J1_defining(n)))
        add(f"R1 lemma = defining, n={n}", zeta.R1_closed(n).eq(zeta.R1_defining(n)))
        add(f"R2 lemma = defining, n={n}", zeta.R2_closed(n).eq(zeta.R2_defining(n)))
        add(f"R branch = R1+R2, n={n}", zeta.R_branch(n).eq(zeta.R_parts(n)))
        add(f"J2 = -R, n={n}", zeta.J2(n).eq(-zeta.R_parts(n)))
        add(f"J branch = J1 - R, n={n}",
            zeta.J_branch(n).eq(zeta.J1_closed(n) - zeta.R_branch(n)))
        add(f"J exppoly = branch, n={n}", zeta.J_exppoly().at(n).eq(zeta.J_branch(n)))
    ok = all(c["passed"] for c in checks)
    lines = [f"[{'pass' if c['passed'] else 'FAIL'}] {c['label']}" for c in checks]
    lines.append(f"lemma suite: {'all equal' if ok else 'FAILURES'}")
    payload = {"command": "verify-lemmas", "nmax": nmax, "checks": checks, "passed": ok}
    _emit(payload, args.json, lines)
    return 0 if ok else 1


def cmd_closed_form(args) -> int:
    report = zeta.verify_main_identity(args.eps)
    lines = [
        f"eps = {report.eps}",
        f"local factor = {report.computed.to_text()}",
        f"target       = {report.target.to_text()}",
        f"identity: {'EQUAL (zero cross-multiplication residue)' if report.equal else 'NOT EQUAL'}",
    ]
    if not report.equal:
        lines.append(f"residue: {report.witness}")
    payload = {
        "command": "closed-form",
        "eps": report.eps,
        "local_factor": report.computed.to_text(),
        "target": report.target.to_text(),
        "passed": report.equal,
        "residue": report.witness,
    }
    _emit(payload, args.json, lines)
    return 0 if report.equal else 1


def cmd_oracle(args) -> int:
    points = oracle.random_points(args.points, seed=args.seed, q=args.q, s=args.s)
    reports = oracle.run_suite(points, tolerance=args.tol, nmax=args.nmax)
    ok = all(r.passed for r in reports)
    lines = []
    for r in reports:
        status = "pass" if r.passed else "FAIL"
        if r.inconclusive:
            status = "inconclusive"
        lines.append(f"[{status}] {r.label}: rel={r.relative_error:.3e} tail={r.tail_bound:.3e}")
    lines.append(f"oracle: {'all comparisons pass' if ok else 'FAILURES'}")
    payload = {
        "command": "oracle",
        "q": args.q, "s": args.s, "points": args.points, "nmax": args.nmax,
        "tol": args.tol, "seed": args.seed,
        "comparisons": [r.as_dict() for r in reports],
        "passed": ok,
    }
    _emit(payload, args.json, lines)
    return 0 if ok else 1


def cmd_all(args) -> int:
    ns = argparse.Namespace(samples=5, seed=args.seed, json=False, nmax=6,
                            q=9.0, s=2.0, points=10, tol=1e-9, eps="sym")
    sections = {}
    status = 0
    if args.json:
        import contextlib
        import io
        for name, cmd in (("unfold-cosets", cmd_unfold_cosets),
                          ("verify-group", cmd_verify_group),
                          ("verify-lemmas", cmd_verify_lemmas),
                          ("oracle", cmd_oracle)):
            ns.json = False
            buf = io.StringIO()
            with contextlib.redirect_stdout(buf):
                rc = cmd(ns)
            sections[name] = {"passed": rc == 0}
            status = max(status, rc)
        for eps in ("-1", "+1", "sym"):
            report = zeta.verify_main_identity(eps)
            sections[f"closed-form[{eps}]"] = {"passed": report.equal}
            if not report.equal:
                status = 1
        print(json.dumps({"command": "all", "sections": sections,
                          "passed": status == 0}, indent=2, sort_keys=True))
        return status
    for name, cmd in (("unfold-cosets", cmd_unfold_cosets),
                      ("verify-group", cmd_verify_group),
                      ("verify-lemmas", cmd_verify_lemmas),
                      ("oracle", cmd_oracle)):
        print(f"==== {name}")
        status = max(status, cmd(ns))
    print("==== closed-form")
    for eps in ("-1", "+1", "sym"):
        report = zeta.verify_main_identity(eps)
        print(f"eps={report.eps}: {'EQUAL' if report.equal else 'NOT EQUAL'}")
        if not report.equal:
            status = 1
    print(f"==== overall: {'PASS' if status == 0 else 'FAIL'}")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="g2zeta",
        description="Exact verification of the unramified G2 Rankin-Selberg local factor.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-group", help="audit the matrix-model group identities")
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_group)

    p = sub.add_parser("unfold-cosets", help="double cosets and stabilizers of the unfolding")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_unfold_cosets)

    p = sub.add_parser("verify-lemmas", help="exact per-lemma equivalences")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_lemmas)

    p = sub.add_parser("closed-form", help="print the local factor, target, and verdict")
    p.add_argument("--eps", choices=["+1", "-1", "sym"], default="sym")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("oracle", help="numeric truncation suite")
    p.add_argument("--q", type=float, default=9.0)
    p.add_argument("--s", type=float, default=2.0)
    p.add_argument("--points", type=int, default=10)
    p.add_argument("--nmax", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("all", help="run every suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_all)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
