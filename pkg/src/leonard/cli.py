"""Command-line interface: ``leonard <command> [options]``.

Every command reading arrays accepts a path or ``-`` for stdin. Output is
deterministic; ``--json`` switches to machine-readable output.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import textio
from .affine import solve
from .classify import CaseTag, brute_force_partition, main_case, pair_self_maps, pair_swap_maps
from .d4 import orbit
from .errors import LeonardError
from .field import QQ, QuadraticExtension, parse_field
from .parray import validate
from .realize import (a_parameters, idempotent_laws_hold, recover_split_sequences, split_realize,
                      tridiagonal_check)
from .typefit import TypeKind, detect_type, fit, generate, random_typedata


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _docs(args, path: Optional[str] = None) -> list:
    default = parse_field(args.field) if getattr(args, "field", None) else QQ
    return textio.parse_documents(_read(path or args.path), default)


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _classes_text(classes) -> str:
    return " ".join("{" + ",".join(g.code for g in c) + "}" for c in classes)


# commands -----------------------------------------------------------------


def cmd_validate(args) -> int:
    status = 0
    lines, payload = [], []
    for doc in _docs(args):
        report = validate(doc.array)
        if doc.name:
            lines.append(f"# {doc.name}")
        lines += [str(v) for v in report.verdicts]
        lines.append("valid" if report.ok else "invalid")
        payload.append({
            "name": doc.name,
            "ok": report.ok,
            "conditions": {v.name: {"ok": v.ok, "witness": v.witness, "detail": v.detail}
                           for v in report.verdicts},
        })
        if not report.ok:
            status = 1
    _emit(args, "\n".join(lines), payload if len(payload) > 1 else payload[0])
    return status


def _maps_text(title: str, maps, F) -> list:
    return [f"{title}: {len(maps)}"] + ["  " + textio.format_map(m, F) for m in maps]


def cmd_classify(args) -> int:
    status = 0
    lines, payload = [], []
    for doc in _docs(args):
        pa = doc.array
        F = pa.field
        tag, classes = main_case(pa)
        selfs, swaps = pair_self_maps(pa), pair_swap_maps(pa)
        if doc.name:
            lines.append(f"# {doc.name}")
        lines.append(f"case: {tag.label}")
        lines.append(f"classes: {len(classes)} {_classes_text(classes)}")
        lines += _maps_text("self-maps", selfs, F)
        lines += _maps_text("swap-maps", swaps, F)
        entry = {
            "name": doc.name,
            "case": tag.label,
            "classes": [[g.code for g in c] for c in classes],
            "self_maps": [textio.map_to_json(m, F) for m in selfs],
            "swap_maps": [textio.map_to_json(m, F) for m in swaps],
        }
        if args.brute_force:
            brute = brute_force_partition(pa)
            if brute == classes:
                lines.append("brute-force: agree")
            else:
                lines.append("brute-force: differ")
                lines.append(f"  cases:   {_classes_text(classes)}")
                lines.append(f"  solve:   {_classes_text(brute)}")
                status = 1
            entry["brute_force"] = [[g.code for g in c] for c in brute]
            entry["agree"] = brute == classes
        payload.append(entry)
    _emit(args, "\n".join(lines), payload if len(payload) > 1 else payload[0])
    return status


def _cmd_maps(args, which: str) -> int:
    lines, payload = [], []
    for doc in _docs(args):
        pa = doc.array
        maps = pair_self_maps(pa) if which == "self" else pair_swap_maps(pa)
        lines += [textio.format_map(m, pa.field) for m in maps]
        payload.append([textio.map_to_json(m, pa.field) for m in maps])
    _emit(args, "\n".join(lines) if lines else "none", payload if len(payload) > 1 else payload[0])
    return 0


def cmd_orbit(args) -> int:
    doc = _docs(args)[0]
    rel = orbit(doc.array)
    docs = [textio.Document(a, g.code) for g, a in rel.items()]
    _emit(args, textio.format_documents(docs),
          {g.code: textio.array_to_json(a) for g, a in rel.items()})
    return 0


def cmd_affine_solve(args) -> int:
    src = _docs(args, args.src)[0].array
    dst = _docs(args, args.dst)[0].array
    m = solve(src, dst)
    if m is None:
        _emit(args, "none", None)
        return 1
    _emit(args, textio.format_map(m, src.field), textio.map_to_json(m, src.field))
    return 0


def _matrix_text(M, F) -> list:
    return ["  " + " ".join(F.format(x) for x in row) for row in M]


def cmd_realize(args) -> int:
    doc = _docs(args)[0]
    pa = doc.array
    F = pa.field
    r = split_realize(pa)
    lines = ["A:"] + _matrix_text(r.A, F) + ["A*:"] + _matrix_text(r.Astar, F)
    payload = {
        "A": [[F.format(x) for x in row] for row in r.A],
        "Astar": [[F.format(x) for x in row] for row in r.Astar],
    }
    status = 0
    if args.check:
        problems = []
        try:
            vp, ph = recover_split_sequences(r)
            if vp != pa.varphi or ph != pa.phi:
                problems.append("recovered split sequences differ")
            if not idempotent_laws_hold(r.A, r.E, pa.theta) or \
                    not idempotent_laws_hold(r.Astar, r.Estar, pa.theta_star):
                problems.append("idempotent laws fail")
            if not tridiagonal_check(r):
                problems.append("tridiagonal check fails")
            a, a_star = a_parameters(r)
            lines.append("a: " + " ".join(F.format(x) for x in a))
            lines.append("a*: " + " ".join(F.format(x) for x in a_star))
            payload["a"] = [F.format(x) for x in a]
            payload["a_star"] = [F.format(x) for x in a_star]
        except LeonardError as exc:
            problems.append(str(exc))
        verdict = "CERTIFIED" if not problems else "FAILED: " + "; ".join(problems)
        lines.append(verdict)
        payload["certified"] = not problems
        status = 0 if not problems else 1
    _emit(args, "\n".join(lines), payload)
    return status


def _poly_text(c1, c0, F) -> str:
    def term(c, mono):
        s = F.format(c)
        if s.startswith("-"):
            return f" - {s[1:]}{mono}" if s[1:] != "1" or not mono else f" - {mono}"
        return f" + {s}{mono}" if s != "1" or not mono else f" + {mono}"
    return "x^2" + term(c1, "x") + term(c0, "")


def cmd_fit(args) -> int:
    doc = _docs(args)[0]
    pa = doc.array
    tag = detect_type(pa)
    td = fit(pa, q=tag.field.parse(args.q) if args.q else None)
    K = td.field
    lines = [f"type: {tag.kind}"]
    payload = {"type": str(tag.kind), "d": pa.d}
    if tag.kind is TypeKind.I:
        lines.append(f"q: {K.format(td.q)}")
        lines.append("roots: " + " ".join(K.format(x) for x in tag.roots))
        payload["q"] = K.format(td.q)
        payload["roots"] = [K.format(x) for x in tag.roots]
        if isinstance(K, QuadraticExtension) and td.q.b != 0:
            c1, c0 = K.minimal_polynomial(td.q)
            poly = _poly_text(c1, c0, K.base)
            lines.append(f"field: {K.name}")
            lines.append(f"minimal-polynomial: {poly}")
            payload["field"] = K.name
            payload["minimal_polynomial"] = poly
    else:
        lines.append(f"q: {K.format(tag.q)}")
        payload["q"] = K.format(tag.q)
    scalars = {k: K.format(v) for k, v in td.scalar_items() if k != "q"}
    lines += [f"{k}: {v}" for k, v in scalars.items()]
    payload["scalars"] = scalars
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_generate(args) -> int:
    F = parse_field(args.field) if args.field else QQ
    kind = TypeKind.parse(args.type)
    case = CaseTag.parse(args.case) if args.case else None
    td = random_typedata(kind, args.d, F, args.seed, case=case)
    pa = generate(td)
    _emit(args, textio.format_document(pa), textio.array_to_json(pa))
    return 0


# parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--field", help="field for documents without a field line (Q, GF(p), ...)")

    p = argparse.ArgumentParser(prog="leonard", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, path=True):
        sp = sub.add_parser(name, help=help_text, parents=[common])
        if path:
            sp.add_argument("path", help="document file, or - for stdin")
        sp.set_defaults(func=func)
        return sp

    add("validate", cmd_validate, "check PA1 to PA5")
    sp = add("classify", cmd_classify, "case, partition of relatives, self and swap maps")
    sp.add_argument("--brute-force", action="store_true", help="also partition by pairwise affine solving")
    add("orbit", cmd_orbit, "the eight relatives")
    sp = add("affine-solve", cmd_affine_solve, "affine map taking one array to another", path=False)
    sp.add_argument("src")
    sp.add_argument("dst")
    sp = add("realize", cmd_realize, "split matrix realization")
    sp.add_argument("--check", action="store_true", help="run the trace oracle and tridiagonal check")
    sp = add("fit", cmd_fit, "detect the closed-form type and fit its scalars")
    sp.add_argument("--q", help="use this root of the q-equation instead of the canonical one")
    sp = add("generate", cmd_generate, "random valid array from closed-form data", path=False)
    sp.add_argument("--type", required=True, help="I, II, IIIplus, IIIminus or IV")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--case", help="force a case, e.g. iii or case-iii")
    add("self-maps", lambda a: _cmd_maps(a, "self"), "maps with the transformed pair isomorphic to (A, A*)")
    add("swap-maps", lambda a: _cmd_maps(a, "swap"), "maps with the transformed pair isomorphic to (A*, A)")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LeonardError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
