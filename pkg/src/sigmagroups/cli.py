"""Command-line surface: classification, residuals, permutability checks,
single-statement verification, and full campaigns.

Exit codes: 0 success/confirmed, 1 counterexample found, 2 usage error,
3 capacity abort.  Campaigns never abort on capacity — affected statements
become skipped rows in the report.
"""
from __future__ import annotations

import argparse
import datetime as _dt
import json
import sys

from .corpus import CorpusEntry, builtin_corpus, builtin_entry, parse_corpus_file
from .errors import CapacityError, DEFAULT_LIMITS, GroupInputError, Limits
from .harness import (STATEMENTS, CampaignConfig, VerificationOutcome,
                      campaign_sigmas, report_from_rows, run_campaign,
                      verify_cor_1_1, verify_cor_1_2, verify_lemma_2_1,
                      verify_lemma_2_2, verify_lemma_2_3, verify_lemma_2_4,
                      verify_lemma_2_5_converse_search, verify_lemma_2_5_forward,
                      verify_theorem_A)
from .numbers import primes_of
from .permcore import Perm, PermGroup, Subgroup
from .sigma import (SigmaPartition, complete_hall_sigma_set, is_psigma_t,
                    is_sigma_nilpotent, is_sigma_permutable, is_sigma_primary,
                    is_sigma_soluble, parse_sigma, sigma_nilpotent_residual,
                    sigma_of_group)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="sigmagroups",
        description="finite-group computations around prime partitions")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, sigma_default="sigma1"):
        p.add_argument("--group", required=True, help="corpus group name")
        p.add_argument("--corpus-file", help="resolve --group in this file instead of the builtin corpus")
        p.add_argument("--sigma", default=sigma_default,
                       help="partition text like [2,3][5], or sigma1")
        p.add_argument("--format", choices=("human", "machine"), default="human")
        caps(p)

    def caps(p):
        p.add_argument("--element-cache-bound", type=int)
        p.add_argument("--subgroup-bound", type=int)
        p.add_argument("--hall-set-cap", type=int)

    p = sub.add_parser("classify", help="class predicates and residual for one group")
    common(p)

    p = sub.add_parser("residual", help="sigma-nilpotent residual of one group")
    common(p)

    p = sub.add_parser("permutable", help="is a given subgroup sigma-permutable?")
    common(p)
    p.add_argument("--gen", action="append", default=[],
                   help="subgroup generator in cycle notation (repeatable; omit for trivial)")

    p = sub.add_parser("verify", help="run one statement verifier")
    common(p)
    p.add_argument("--statement", required=True, choices=STATEMENTS)
    p.add_argument("--pi", help="comma-separated primes for Lem2.2 (default: all subsets)")

    p = sub.add_parser("campaign", help="verify every statement over a corpus")
    p.add_argument("--corpus", default="builtin", help="'builtin' or a corpus file path")
    p.add_argument("--only", help="comma-separated statement ids")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="write the machine-readable report here")
    p.add_argument("--no-timestamp", action="store_true",
                   help="suppress generated_at and zero all millis (byte-identical reruns)")
    p.add_argument("--format", choices=("human", "machine"), default="human")
    caps(p)

    p = sub.add_parser("corpus-list", help="list builtin corpus entries")
    p.add_argument("--format", choices=("human", "machine"), default="human")
    return top


def _limits(args) -> Limits:
    kw = {}
    if getattr(args, "element_cache_bound", None):
        kw["element_cache_bound"] = args.element_cache_bound
    if getattr(args, "subgroup_bound", None):
        kw["subgroup_bound"] = args.subgroup_bound
    if getattr(args, "hall_set_cap", None):
        kw["hall_set_cap"] = args.hall_set_cap
    return Limits(**{**DEFAULT_LIMITS.__dict__, **kw}) if kw else DEFAULT_LIMITS


def _resolve_entry(args) -> CorpusEntry:
    if args.corpus_file:
        with open(args.corpus_file, encoding="utf-8") as fh:
            entries = parse_corpus_file(fh.read())
        for e in entries:
            if e.name == args.group:
                return e
        raise GroupInputError(f"no group named {args.group!r} in {args.corpus_file}")
    return builtin_entry(args.group)


def _sigmas_for(args, G: PermGroup, limits: Limits) -> list[SigmaPartition]:
    if args.sigma == "all":
        if args.command not in ("verify", "campaign"):
            raise _Usage("--sigma all is only valid for verify and campaign")
        return campaign_sigmas(G, limits)
    return [parse_sigma(args.sigma)]


class _Usage(Exception):
    pass


def _emit(args, human_lines: list[str], machine_obj) -> None:
    if args.format == "machine":
        print(json.dumps(machine_obj, indent=2, sort_keys=True))
    else:
        print("\n".join(human_lines))


# ---------------------------------------------------------------------------
# subcommands

def cmd_classify(args) -> int:
    limits = _limits(args)
    G = _resolve_entry(args).build()
    sigmas = _sigmas_for(args, G, limits)
    lines, blob = [], []
    lines.append(f"group {args.group} (order {G.order}, degree {G.degree})")
    for sigma in sigmas:
        fields = {}

        def guard(key, fn):
            try:
                fields[key] = fn()
            except CapacityError as exc:
                fields[key] = f"skipped: {exc}"

        guard("sigma_of", lambda: sorted(sigma_of_group(G, sigma)))
        guard("sigma_primary", lambda: is_sigma_primary(G.order, sigma))
        guard("sigma_soluble", lambda: is_sigma_soluble(G, sigma, limits))
        guard("sigma_nilpotent", lambda: is_sigma_nilpotent(G, sigma, limits))
        guard("psigma_t", lambda: is_psigma_t(G, sigma, limits))
        guard("complete_hall_set", lambda: (
            None if (hs := complete_hall_sigma_set(G, sigma, limits)) is None
            else list(hs.member_orders())))
        guard("residual_order", lambda: sigma_nilpotent_residual(G, sigma, limits).order)
        blob.append({"group": args.group, "sigma": sigma.text(), **fields})
        lines.append(f"sigma {sigma.text()}")
        lines.append(f"  sigma(G): {', '.join(map(str, fields['sigma_of'])) or '-'}")
        for label, key in [("sigma-primary", "sigma_primary"),
                           ("sigma-soluble", "sigma_soluble"),
                           ("sigma-nilpotent", "sigma_nilpotent"),
                           ("PsigmaT", "psigma_t")]:
            v = fields[key]
            lines.append(f"  {label}: {v if isinstance(v, str) else ('yes' if v else 'no')}")
        hall = fields["complete_hall_set"]
        if isinstance(hall, str):
            lines.append(f"  complete Hall sigma-set: {hall}")
        elif hall is None:
            lines.append("  complete Hall sigma-set: none")
        else:
            orders = ", ".join(map(str, hall)) if hall else "empty"
            lines.append(f"  complete Hall sigma-set: yes (orders {orders})")
        lines.append(f"  sigma-nilpotent residual order: {fields['residual_order']}")
    _emit(args, lines, blob)
    return EXIT_OK


def cmd_residual(args) -> int:
    limits = _limits(args)
    G = _resolve_entry(args).build()
    sigma = _sigmas_for(args, G, limits)[0]
    r = sigma_nilpotent_residual(G, sigma, limits)
    gens = ", ".join(str(g) for g in r.generators) or "()"
    _emit(args, [f"sigma-nilpotent residual of {args.group} under {sigma.text()}: "
                 f"order {r.order}, generators {gens}"],
          {"group": args.group, "sigma": sigma.text(),
           "order": r.order, "generators": [str(g) for g in r.generators]})
    return EXIT_OK


def cmd_permutable(args) -> int:
    limits = _limits(args)
    G = _resolve_entry(args).build()
    sigma = _sigmas_for(args, G, limits)[0]
    gens = [Perm.parse(t, G.degree) for t in args.gen]
    H = Subgroup(G, gens)
    verdict = is_sigma_permutable(G, H, sigma, limits)
    _emit(args, [f"subgroup of order {H.order} is "
                 f"{'sigma-permutable' if verdict else 'not sigma-permutable'} "
                 f"in {args.group} under {sigma.text()}"],
          {"group": args.group, "sigma": sigma.text(),
           "subgroup_order": H.order, "sigma_permutable": verdict})
    return EXIT_OK


def _outcome_lines(rows: list[VerificationOutcome]) -> list[str]:
    out = []
    for r in rows:
        flags = " (vacuous)" if r.vacuous else ""
        extra = f" — {r.reason}" if r.reason else ""
        out.append(f"{r.statement_id:11s} {r.group_name:12s} {r.sigma.text():12s} "
                   f"{r.verdict}{flags}{extra}")
    return out


def cmd_verify(args) -> int:
    limits = _limits(args)
    entry = _resolve_entry(args)
    G = entry.build()
    rows: list[VerificationOutcome] = []

    def run(fn, *fn_args):
        try:
            rows.append(fn(*fn_args, entry.name, limits))
        except CapacityError as exc:
            rows.append(VerificationOutcome(
                args.statement, entry.name, SigmaPartition.sigma1(), "skipped",
                reason=f"capacity: {exc}"))

    if args.statement == "Lem2.2":
        if args.pi:
            subsets = [frozenset(int(t) for t in args.pi.split(","))]
        else:
            subsets = [frozenset(s) for s in _all_subsets(sorted(primes_of(G.order)))]
        for pi in subsets:
            run(verify_lemma_2_2, G, pi)
    elif args.statement == "Cor1.2":
        run(verify_cor_1_2, G)
    else:
        thma_cls = {"ThmA.i": "sigma-soluble", "ThmA.ii": "sigma-nilpotent",
                    "ThmA.iii": "sigma-soluble-psigma-t"}
        per_sigma = {"Cor1.1": verify_cor_1_1, "Lem2.1": verify_lemma_2_1,
                     "Lem2.3": verify_lemma_2_3, "Lem2.4": verify_lemma_2_4,
                     "Lem2.5.fwd": verify_lemma_2_5_forward,
                     "Lem2.5.conv": verify_lemma_2_5_converse_search}
        for sigma in _sigmas_for(args, G, limits):
            if args.statement in thma_cls:
                run(verify_theorem_A, G, sigma, thma_cls[args.statement])
            else:
                run(per_sigma[args.statement], G, sigma)
    _emit(args, _outcome_lines(rows), [r.to_json() for r in rows])
    if any(r.verdict == "counterexample" for r in rows):
        return EXIT_COUNTEREXAMPLE
    if any(r.verdict == "skipped" and not r.vacuous for r in rows):
        return EXIT_CAPACITY
    return EXIT_OK


def _all_subsets(items):
    out = [()]
    for x in items:
        out += [s + (x,) for s in out]
    return sorted(out, key=lambda s: (len(s), s))


def cmd_campaign(args) -> int:
    limits = _limits(args)
    if args.corpus == "builtin":
        entries = builtin_corpus()
    else:
        with open(args.corpus, encoding="utf-8") as fh:
            entries = parse_corpus_file(fh.read())
    statements = STATEMENTS
    if args.only:
        chosen = tuple(t.strip() for t in args.only.split(","))
        unknown = [s for s in chosen if s not in STATEMENTS]
        if unknown:
            raise _Usage(f"unknown statement ids: {', '.join(unknown)}")
        statements = chosen
    config = CampaignConfig(jobs=max(1, args.jobs), limits=limits,
                            statements=statements, zero_millis=args.no_timestamp)
    rows = run_campaign(entries, config)
    stamp = None if args.no_timestamp else \
        _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")
    report = report_from_rows(rows, generated_at=stamp)
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    summary = report["summary"]
    lines = [f"groups: {len(entries)}   outcomes: {len(rows)}",
             f"confirmed: {summary['confirmed']}   "
             f"counterexamples: {summary['counterexample']}   "
             f"skipped: {summary['skipped']}   (vacuous: {summary['vacuous']})"]
    for sid in sorted(summary["by_statement"]):
        per = summary["by_statement"][sid]
        lines.append(f"  {sid:11s} confirmed={per['confirmed']:4d} "
                     f"counterexample={per['counterexample']} skipped={per['skipped']}")
    for r in rows:
        if r["verdict"] == "counterexample":
            lines.append(f"COUNTEREXAMPLE: {r['statement_id']} {r['group']} {r['sigma']}")
    if args.format == "machine" and not args.out:
        sys.stdout.write(text)
    else:
        print("\n".join(lines))
    return EXIT_COUNTEREXAMPLE if summary["counterexample"] else EXIT_OK


def cmd_corpus_list(args) -> int:
    entries = builtin_corpus()
    lines = [f"{e.name:12s} deg {e.degree:3d} order {e.expected_order:4d}  {' '.join(e.tags)}"
             for e in entries]
    _emit(args, lines,
          [{"name": e.name, "degree": e.degree, "order": e.expected_order,
            "tags": list(e.tags)} for e in entries])
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    handlers = {"classify": cmd_classify, "residual": cmd_residual,
                "permutable": cmd_permutable, "verify": cmd_verify,
                "campaign": cmd_campaign, "corpus-list": cmd_corpus_list}
    try:
        return handlers[args.command](args)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GroupInputError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity abort: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
