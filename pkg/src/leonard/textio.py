"""Plain-text and JSON encodings of parameter arrays, affine maps and type data.

A document is a block of ``key: values`` lines::

    # comment
    name: example
    field: Q
    d: 3
    theta: -3/2 -1/2 1/2 3/2
    theta_star: -3/2 -1/2 1/2 3/2
    varphi: -3/2 -2 -3/2
    phi: 3/2 2 3/2

Several documents in one stream are separated by a line holding ``---``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Optional

from .affine import AffineMap
from .errors import DocumentError, StructuralError
from .field import QQ, Field, parse_field
from .parray import ParameterArray

SEQ_KEYS = ("theta", "theta_star", "varphi", "phi")
KEYS = ("name", "field", "d") + SEQ_KEYS
SEPARATOR = "---"


@dataclass(frozen=True)
class Document:
    array: ParameterArray
    name: Optional[str] = None


def _tokens(text: str, offset: int) -> list:
    """(token, 1-based column) pairs; commas count as whitespace."""
    return [(m.group(), offset + m.start() + 1) for m in re.finditer(r"[^\s,]+", text)]


def _parse_block(lines: list, default_field: Field) -> Document:
    seen: dict = {}
    for lineno, raw in lines:
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        if ":" not in body:
            col = len(body) - len(body.lstrip()) + 1
            raise DocumentError("expected 'key: values'", lineno, col)
        key_part, rest = body.split(":", 1)
        key = key_part.strip()
        key_col = len(key_part) - len(key_part.lstrip()) + 1
        if key not in KEYS:
            raise DocumentError(f"unknown key {key!r}", lineno, key_col)
        if key in seen:
            raise DocumentError(f"duplicate key {key!r}", lineno, key_col)
        seen[key] = (lineno, rest, len(key_part) + 1)
    for key in ("d",) + SEQ_KEYS:
        if key not in seen:
            raise DocumentError(f"missing key {key!r}", lines[0][0] if lines else None)

    F = default_field
    if "field" in seen:
        lineno, rest, off = seen["field"]
        try:
            F = parse_field(rest)
        except ValueError as exc:
            raise DocumentError(str(exc), lineno, off + len(rest) - len(rest.lstrip()) + 1) from None
    lineno, rest, off = seen["d"]
    toks = _tokens(rest, off)
    if len(toks) != 1 or not re.fullmatch(r"\d+", toks[0][0]):
        raise DocumentError("d must be a single nonnegative integer", lineno,
                            toks[0][1] if toks else off + 1)
    d = int(toks[0][0])
    values = {}
    for key in SEQ_KEYS:
        lineno, rest, off = seen[key]
        seq = []
        for tok, col in _tokens(rest, off):
            try:
                seq.append(F.parse(tok))
            except (ValueError, ZeroDivisionError) as exc:
                raise DocumentError(f"bad {F.name} scalar {tok!r}: {exc}", lineno, col) from None
        values[key] = seq
    try:
        pa = ParameterArray(d, *(tuple(values[k]) for k in SEQ_KEYS), F)
    except StructuralError as exc:
        raise DocumentError(str(exc), seen["d"][0]) from None
    name = seen["name"][1].strip() if "name" in seen else None
    return Document(pa, name or None)


def parse_documents(text: str, default_field: Field = QQ) -> list:
    """All documents in a text stream (plain or JSON)."""
    stripped = text.lstrip()
    if stripped.startswith("{") or stripped.startswith("["):
        return _parse_json(stripped, default_field)
    blocks: list = [[]]
    for n, line in enumerate(text.splitlines(), 1):
        if line.strip() == SEPARATOR:
            blocks.append([])
        else:
            blocks[-1].append((n, line))
    docs = []
    for block in blocks:
        if any(line.split("#", 1)[0].strip() for _, line in block):
            docs.append(_parse_block(block, default_field))
    if not docs:
        raise DocumentError("no document found", 1, 1)
    return docs


def parse_document(text: str, default_field: Field = QQ) -> Document:
    docs = parse_documents(text, default_field)
    if len(docs) != 1:
        raise DocumentError(f"expected one document, found {len(docs)}")
    return docs[0]


def _fmt_seq(F: Field, seq) -> str:
    return " ".join(F.format(x) for x in seq)


def format_document(pa: ParameterArray, name: Optional[str] = None) -> str:
    F = pa.field
    lines = []
    if name:
        lines.append(f"name: {name}")
    lines += [
        f"field: {F.name}",
        f"d: {pa.d}",
        f"theta: {_fmt_seq(F, pa.theta)}",
        f"theta_star: {_fmt_seq(F, pa.theta_star)}",
        f"varphi: {_fmt_seq(F, pa.varphi)}",
        f"phi: {_fmt_seq(F, pa.phi)}",
    ]
    return "\n".join(lines) + "\n"


def format_documents(docs) -> str:
    return (SEPARATOR + "\n").join(format_document(d.array, d.name) for d in docs)


# JSON ----------------------------------------------------------------------


def array_to_json(pa: ParameterArray, name: Optional[str] = None) -> dict:
    F = pa.field
    out = {"field": F.name, "d": pa.d}
    if name:
        out = {"name": name, **out}
    for key in SEQ_KEYS:
        out[key] = [F.format(x) for x in getattr(pa, key)]
    return out


def _doc_from_json(obj, default_field: Field) -> Document:
    if not isinstance(obj, dict):
        raise DocumentError("JSON document must be an object")
    unknown = set(obj) - set(KEYS)
    if unknown:
        raise DocumentError(f"unknown key {sorted(unknown)[0]!r}")
    for key in ("d",) + SEQ_KEYS:
        if key not in obj:
            raise DocumentError(f"missing key {key!r}")
    try:
        F = parse_field(obj["field"]) if "field" in obj else default_field
        seqs = [tuple(F.parse(str(x)) for x in obj[k]) for k in SEQ_KEYS]
        pa = ParameterArray(int(obj["d"]), *seqs, F)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise DocumentError(str(exc)) from None
    return Document(pa, obj.get("name"))


def _parse_json(text: str, default_field: Field) -> list:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, exc.lineno, exc.colno) from None
    items = data if isinstance(data, list) else [data]
    return [_doc_from_json(o, default_field) for o in items]


# affine maps and type data --------------------------------------------------


def format_map(m: AffineMap, F: Field) -> str:
    return "[" + ", ".join(F.format(x) for x in m.as_tuple()) + "]"


def map_to_json(m: AffineMap, F: Field) -> list:
    return [F.format(x) for x in m.as_tuple()]


def parse_map(text: str, F: Field) -> AffineMap:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise DocumentError("affine map must look like [xi, zeta, xi_star, zeta_star]", 1, 1)
    parts = [p.strip() for p in body[1:-1].split(",")]
    if len(parts) != 4:
        raise DocumentError("affine map needs exactly four entries", 1, 1)
    return AffineMap(*(F.parse(p) for p in parts))


def typedata_to_json(td) -> dict:
    F = td.field
    return {
        "type": str(td.kind),
        "d": td.d,
        "field": F.name,
        "scalars": {k: F.format(v) for k, v in td.scalar_items()},
    }
