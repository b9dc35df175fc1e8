"""Formula documents: the JSON form of a :class:`QuadratureFormula`.

Schema::

    {"d": -1 | "rational",
     "nodes":   [{"a": "<rational>", "b": "<rational>"}, ...],
     "weights": [{"a": ..., "b": ...}, ...],
     "metadata": {"label": ..., "expected_degree": ...}}   # optional

Serialization is canonical (lowest terms, sign on the numerator, fixed key
order), so ``dump(load(text))`` is stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .arith import QuadFieldElement, components, format_rational, is_squarefree, parse_rational
from .quadrature import QuadratureFormula

FIXTURE_NAMES = ("example-3-2", "section-5-example", "remark-3-1", "sqrt-minus-3")


@dataclass(frozen=True)
class FormulaDocument:
    formula: QuadratureFormula
    metadata: dict = field(default_factory=dict)

    @property
    def label(self) -> Optional[str]:
        return self.metadata.get("label")

    @property
    def expected_degree(self) -> Optional[int]:
        return self.metadata.get("expected_degree")


def element_to_json(x) -> dict:
    a, b = components(x)
    return {"a": format_rational(a), "b": format_rational(b)}


def element_from_json(obj, d: Optional[int]):
    if not isinstance(obj, dict) or set(obj) - {"a", "b"} or "a" not in obj:
        raise ValueError(f"malformed field element: {obj!r}")
    a = parse_rational(str(obj["a"]))
    b = parse_rational(str(obj.get("b", "0")))
    if d is None:
        if b:
            raise ValueError("nonzero b in a rational formula")
        return a
    return QuadFieldElement(a, b, d)


def formula_to_json(formula: QuadratureFormula, metadata: Optional[dict] = None) -> dict:
    out = {
        "d": "rational" if formula.d is None else formula.d,
        "nodes": [element_to_json(z) for z in formula.nodes],
        "weights": [element_to_json(x) for x in formula.weights],
    }
    if metadata:
        out["metadata"] = dict(metadata)
    return out


def _parse_d(raw) -> Optional[int]:
    if raw == "rational" or raw is None:
        return None
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise ValueError(f"d must be an integer or 'rational', got {raw!r}")
    if raw >= 0 or not is_squarefree(raw):
        raise ValueError(f"d must be negative and squarefree, got {raw}")
    return raw


def formula_from_json(obj) -> FormulaDocument:
    if not isinstance(obj, dict):
        raise ValueError("formula document must be a JSON object")
    for key in ("nodes", "weights"):
        if not isinstance(obj.get(key), list):
            raise ValueError(f"missing or malformed {key!r}")
    d = _parse_d(obj.get("d"))
    nodes = [element_from_json(z, d) for z in obj["nodes"]]
    weights = [element_from_json(x, d) for x in obj["weights"]]
    metadata = obj.get("metadata") or {}
    if not isinstance(metadata, dict):
        raise ValueError("metadata must be an object")
    formula = QuadratureFormula(d, nodes, weights, label=metadata.get("label"))
    return FormulaDocument(formula, metadata)


def dumps(doc) -> str:
    if isinstance(doc, FormulaDocument):
        obj = formula_to_json(doc.formula, doc.metadata)
    else:
        obj = formula_to_json(doc)
    return json.dumps(obj, indent=2) + "\n"


def loads(text: str) -> FormulaDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from exc
    return formula_from_json(obj)


def load_file(path: str) -> FormulaDocument:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def load_fixture(name: str) -> FormulaDocument:
    if name not in FIXTURE_NAMES:
        raise ValueError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}")
    text = resources.files("quadra").joinpath("data", f"{name}.json").read_text(encoding="utf-8")
    return loads(text)


def bundled_fixtures() -> list[FormulaDocument]:
    return [load_fixture(n) for n in FIXTURE_NAMES]
