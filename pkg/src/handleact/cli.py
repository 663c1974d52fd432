"""Command-line interface.

Subcommands: classify, equivalent, extend-seifert, extend-hyperbolic,
homology, cover, selftest, report.  Human-readable text goes to stdout;
--json PATH additionally writes the machine-readable report.  Exit status
0 on success, 1 on domain errors (bad twist order, genus below 2, and the
like), 2 on unparseable or invalid input files.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import report as report_mod
from . import selftest as selftest_mod
from .actions import (actions_equivalent, classify_actions, load_action_file,
                      total_genus, HandlebodyAction)
from .covers import cover_h1, reidemeister_schreier
from .errors import DomainError, InputError
from .groups import load_group
from .homology import (GroupPresentation, h1_from_presentation,
                       h1_from_surgery, load_presentation_file)
from .hyperbolic import build_hyperbolic_diagram
from .seifert import build_seifert_extension, euler_number
from .surgery import load_diagram_file, validate_diagram
from .words import attaching_words, format_word


def _load_group_file(path: str):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError("cannot read group file %s: %s" % (path, exc))
    return load_group(data)


def _emit(args, payload: dict, text_lines) -> None:
    for line in text_lines:
        print(line)
    if getattr(args, "json", None):
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        print("wrote %s" % args.json)


def cmd_classify(args) -> int:
    group = _load_group_file(args.group)
    classes = classify_actions(group, args.genus, workers=args.workers,
                               up_to_automorphisms=args.up_to_aut)
    tuple_count = sum(c.orbit_size for c in classes)
    payload = {
        "group_size": group.size,
        "genus": args.genus,
        "up_to_automorphisms": args.up_to_aut,
        "class_count": len(classes),
        "generating_tuples": tuple_count,
        "classes": [{"representative": list(c.representative),
                     "orbit_size": c.orbit_size} for c in classes],
    }
    plural = "es" if len(classes) != 1 else ""
    lines = ["%d equivalence class%s (%d generating tuples)"
             % (len(classes), plural, tuple_count)]
    if args.up_to_aut:
        lines.append("note: merged under the full automorphism group; this is "
                     "coarser than equivalence of actions of an identified group")
    for k, c in enumerate(classes, start=1):
        lines.append("  class %d: representative %s, orbit size %d"
                     % (k, list(c.representative), c.orbit_size))
    _emit(args, payload, lines)
    return 0


def cmd_equivalent(args) -> int:
    if len(args.action) != 2:
        raise InputError("equivalent needs exactly two --action files")
    a1 = load_action_file(args.action[0])
    a2 = load_action_file(args.action[1])
    witness = actions_equivalent(a1, a2)
    payload = {"equivalent": witness is not None}
    lines = []
    if witness is None:
        lines.append("actions are NOT equivalent")
    else:
        payload["witness"] = witness.to_json()
        lines.append("actions are equivalent")
        lines.append("  moves: %d, conjugator: %d"
                     % (len(witness.moves), witness.conjugator))
    _emit(args, payload, lines)
    return 0


def _seifert_payload(result) -> dict:
    return {
        "n": result.n,
        "presentation": result.presentation.to_json(),
        "induced_images": list(result.induced_images),
        "psi_check": True,
        "diagram": result.diagram.to_json(),
        "invariants_unnormalized": result.invariants_unnormalized.to_json(),
        "invariants_normalized": result.invariants_normalized.to_json(),
        "euler_number": str(euler_number(result.invariants_normalized)),
        "h1": h1_from_presentation(result.presentation).to_json(),
        "cover_genus": result.cover_genus,
    }


def cmd_extend_seifert(args) -> int:
    action = load_action_file(args.action)
    result = build_seifert_extension(action, args.n)
    payload = _seifert_payload(result)
    shown = (result.invariants_normalized if args.normalized
             else result.invariants_unnormalized)
    h1 = h1_from_presentation(result.presentation)
    lines = [
        "closed extension for genus %d, twist order %d" % (action.quotient_genus, args.n),
        "  relators: %s" % "; ".join(format_word(r) for r in result.presentation.relators),
        "  surgery coefficients: %s" % ", ".join(
            "%s=%s" % (c.label, c.coeff) for c in result.diagram.components),
        "  invariants (%s): %s" % ("normalized" if args.normalized else "unnormalized",
                                   shown.render()),
        "  euler number: %s" % euler_number(shown),
        "  H1: %s" % h1.render(),
        "  cover genus: %d" % result.cover_genus,
    ]
    _emit(args, payload, lines)
    return 0


def cmd_extend_hyperbolic(args) -> int:
    action = load_action_file(args.action)
    spec = build_hyperbolic_diagram(action, args.n)
    payload = spec.to_json()
    lines = [
        "hyperbolic-case diagram for genus %d, twist order %d" % (spec.g, spec.n),
        "  components: %s" % ", ".join(
            "%s=%s" % (c.label, c.coeff) for c in spec.diagram.components),
        "  chain: %s (closed), clasp: %s" % (" ".join(spec.chain_order),
                                             spec.clasp_component),
        "  chain complement covers the Whitehead link complement with degree %d"
        % spec.cover_degree,
        "  note: %s" % payload["notice"],
    ]
    _emit(args, payload, lines)
    return 0


def cmd_homology(args) -> int:
    if bool(args.presentation) == bool(args.diagram):
        raise InputError("homology needs exactly one of --presentation/--diagram")
    if args.presentation:
        pres = load_presentation_file(args.presentation)
        h1 = h1_from_presentation(pres)
        payload = {"source": "presentation", "h1": h1.to_json(),
                   "rendered": h1.render()}
        lines = ["H1 = %s" % h1.render()]
    else:
        diagram = load_diagram_file(args.diagram)
        h1 = h1_from_surgery(diagram)
        check = validate_diagram(diagram)
        payload = {"source": "diagram", "h1": h1.to_json(),
                   "rendered": h1.render(), "determinant": check["determinant"]}
        lines = ["H1 = %s" % h1.render(),
                 "relation matrix determinant: %d" % check["determinant"]]
    _emit(args, payload, lines)
    return 0


def cmd_cover(args) -> int:
    action = load_action_file(args.action)
    if bool(args.presentation) == bool(args.n is not None):
        raise InputError("cover needs exactly one of --presentation/--n")
    if args.presentation:
        pres = load_presentation_file(args.presentation)
    else:
        result = build_seifert_extension(action, args.n)
        pres = result.presentation
    cover = reidemeister_schreier(pres, action)
    h1 = cover_h1(pres, action)
    payload = {
        "generators": cover.presentation.generator_count,
        "relators": len(cover.presentation.relators),
        "cover_genus": total_genus(action),
        "h1": h1.to_json(),
    }
    if args.full:
        payload["relator_words"] = [format_word(r)
                                    for r in cover.presentation.relators]
    lines = [
        "cover presentation: %d generators, %d relators"
        % (cover.presentation.generator_count, len(cover.presentation.relators)),
        "covering handlebody genus: %d" % total_genus(action),
        "H1 of the cover: %s" % h1.render(),
    ]
    if args.full:
        for r in cover.presentation.relators:
            lines.append("  relator: %s" % (format_word(r) or "(empty)"))
    _emit(args, payload, lines)
    return 0


def cmd_selftest(args) -> int:
    outcome = selftest_mod.run_selftest(seed=args.seed)
    lines = []
    for r in outcome["criteria"]:
        lines.append("%s  %-24s %s" % ("PASS" if r["ok"] else "FAIL",
                                       r["name"], r["detail"]))
    lines.append("%d passed, %d failed in %.1fs"
                 % (outcome["passed"], outcome["failed"], outcome["elapsed_s"]))
    _emit(args, outcome, lines)
    return 0 if outcome["failed"] == 0 else 1


def cmd_report(args) -> int:
    group = _load_group_file(args.group) if args.group else None
    if (group is None) != (args.genus is None):
        raise InputError("report classification needs both --group and --genus")
    result = report_mod.run_report(args.out, args.g_values, args.n_values,
                                   group=group, genus=args.genus,
                                   workers=args.workers)
    lines = ["wrote %d grid rows" % result["rows"]]
    lines += ["  %s" % path for path in result["files"]]
    if "class_count" in result:
        lines.append("  classification: %d classes" % result["class_count"])
    _emit(args, result, lines)
    return 0


def _int_list(text: str) -> list:
    try:
        return sorted({int(tok) for tok in text.split(",") if tok})
    except ValueError:
        raise argparse.ArgumentTypeError("expected a comma-separated integer list")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="handleact",
        description="Classify free finite-group actions on handlebodies and "
                    "build their closed Seifert-fibered and hyperbolic "
                    "extensions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="partition generating tuples into "
                                        "equivalence classes")
    p.add_argument("--group", required=True, help="group description file")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--up-to-aut", action="store_true",
                   help="also merge classes under the full automorphism group "
                        "(coarser than equivalence of identified actions)")
    p.add_argument("--json")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("equivalent", help="decide equivalence of two actions")
    p.add_argument("--action", action="append", required=True,
                   help="action file; give twice")
    p.add_argument("--json")
    p.set_defaults(func=cmd_equivalent)

    p = sub.add_parser("extend-seifert", help="build the Seifert-fibered "
                                              "closed extension")
    p.add_argument("--action", required=True)
    p.add_argument("--n", type=int, required=True,
                   help="twist order; must be a positive multiple of the group exponent")
    p.add_argument("--normalized", action="store_true",
                   help="print the normalized invariants")
    p.add_argument("--json")
    p.set_defaults(func=cmd_extend_seifert)

    p = sub.add_parser("extend-hyperbolic", help="emit the hyperbolic-case "
                                                 "chain diagram")
    p.add_argument("--action", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json")
    p.set_defaults(func=cmd_extend_hyperbolic)

    p = sub.add_parser("homology", help="first homology from a presentation "
                                        "or a surgery diagram")
    p.add_argument("--presentation")
    p.add_argument("--diagram")
    p.add_argument("--json")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("cover", help="presentation and homology of the cover")
    p.add_argument("--action", required=True)
    p.add_argument("--n", type=int,
                   help="build the closed-extension presentation for this twist order")
    p.add_argument("--presentation", help="rewrite this presentation instead")
    p.add_argument("--full", action="store_true", help="include relator words")
    p.add_argument("--json")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("selftest", help="run the acceptance grid")
    p.add_argument("--seed", type=int, default=selftest_mod.DEFAULT_SEED)
    p.add_argument("--json")
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("report", help="write the grid CSV and figures")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--g-values", type=_int_list, default=[2, 3, 4],
                   help="comma-separated genera (default 2,3,4)")
    p.add_argument("--n-values", type=_int_list, default=[2, 3, 4, 5, 6],
                   help="comma-separated twist orders (default 2..6)")
    p.add_argument("--group", help="also classify this group")
    p.add_argument("--genus", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    except DomainError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
