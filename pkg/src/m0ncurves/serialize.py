"""Text and JSON forms of classes, expressions, relations and cycles.

JSON documents carry a ``kind`` field and are written with sorted keys so
that identical inputs give byte-identical files.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
from typing import Any

from .core import (
    CurveClass,
    FCurve,
    FCurveExpression,
    KeelRelation,
    canonical_divisor_rep,
)
from .errors import M0nError
from .permutations import parse_label

# ----------------------------------------------------------------------------
# text

_FCURVE_RE = re.compile(r"F\{([^}]*)\}")


def parse_fcurve(text: str, n: int) -> FCurve:
    """Parse 'F{1,2|3|4|5,6}'.  Labels a/b/c are accepted."""
    m = _FCURVE_RE.fullmatch(text.strip())
    if not m:
        raise M0nError(f"not an F-curve: {text!r}")
    blocks = [[parse_label(t) for t in b.split(",") if t.strip()] for b in m.group(1).split("|")]
    return FCurve.from_blocks(blocks, n)


def expression_to_text(E: FCurveExpression) -> str:
    lines = [f"{c:+d} {F.to_text()}" for F, c in E.items()]
    return "\n".join(lines) + ("\n" if lines else "")


def expression_from_text(text: str, n: int) -> FCurveExpression:
    terms = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        coeff, _, curve = line.partition(" ")
        terms.append((parse_fcurve(curve, n), int(coeff)))
    return FCurveExpression(n, terms)


def class_to_text(C: CurveClass) -> str:
    return "".join("{%s} %d\n" % (",".join(map(str, D.labels)), v) for D, v in C.items())


# ----------------------------------------------------------------------------
# JSON

def class_to_json(C: CurveClass, **extra) -> dict:
    data = {
        "kind": "class",
        "n": C.n,
        "pairings": [[list(D.labels), v] for D, v in C.items()],
    }
    data.update(extra)
    return data


def class_from_json(data: dict) -> CurveClass:
    _expect(data, "class")
    n = int(data["n"])
    values: dict[int, int] = {}
    for subset, v in data["pairings"]:
        D = canonical_divisor_rep([parse_label(str(x)) for x in subset], n)
        values[D.mask] = values.get(D.mask, 0) + int(v)
    return CurveClass(n, values)


def fcurve_to_json(F: FCurve) -> list[list[int]]:
    return [list(b) for b in F.block_labels]


def expression_to_json(E: FCurveExpression, **extra) -> dict:
    data = {
        "kind": "expression",
        "n": E.n,
        "terms": [{"coefficient": c, "blocks": fcurve_to_json(F)} for F, c in E.items()],
    }
    data.update(extra)
    return data


def expression_from_json(data: dict) -> FCurveExpression:
    _expect(data, "expression")
    n = int(data["n"])
    terms = []
    for t in data["terms"]:
        blocks = [[parse_label(str(x)) for x in b] for b in t["blocks"]]
        terms.append((FCurve.from_blocks(blocks, n), int(t["coefficient"])))
    return FCurveExpression(n, terms)


def relation_to_json(R: KeelRelation) -> dict:
    return {
        "parts": [list(p) for p in R.part_labels],
        "terms": [{"coefficient": c, "blocks": fcurve_to_json(F)} for F, c in R.terms()],
    }


def _expect(data: dict, kind: str) -> None:
    got = data.get("kind", kind)
    if got != kind:
        raise M0nError(f"expected a {kind} document, got {got!r}")


# ----------------------------------------------------------------------------
# files

def dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def write_json(path: str, data: Any) -> None:
    """Write atomically: a temporary file in the target directory, then rename."""
    text = dumps(data)
    if path == "-":
        print(text, end="")
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise M0nError(f"cannot read {path}: {exc}") from exc
