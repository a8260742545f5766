"""JSON input files and result documents.

Family file::

    {"pairs": [[1, 0], [0, 1], [-1, 2]],
     "order": "lex",                                   # optional: lex | block_grevlex
     "var_order": ["a10", "a01", "a-1,2", "b10", "b01", "b2,-1"]}   # optional

Point file::

    {"point": ["1", "2", "1/2+i", "3", "2", "1"]}

Point entries are Gaussian-rational literals (plain integers are accepted
too), ordered ``a_1 .. a_l, b_l .. b_1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from .groebner import Budget
from .poly import Polynomial
from .reversibility import (
    CoefficientPoint,
    GammaRelation,
    OrderConfig,
    ReversibilityResult,
    SibirskyResult,
    SystemFamily,
    Verdict,
    ab_ring,
    monomial_of,
)
from .reversibility.ideal import ORDER_KINDS
from .scalars import format_gaussian


class InputFormatError(ValueError):
    """Malformed input file or literal."""


@dataclass(frozen=True)
class FamilySpec:
    pairs: tuple[tuple[int, int], ...]
    var_order: tuple[str, ...] | None = None
    order: str = "lex"

    def family(self) -> SystemFamily:
        return SystemFamily(self.pairs)

    def config(self, budget: Budget | None = None) -> OrderConfig:
        S = self.family()
        if self.var_order is not None:
            ab_ring(S, self.var_order)  # validates the permutation
        return OrderConfig(self.order, self.var_order, budget or Budget())

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"pairs": [list(p) for p in self.pairs], "order": self.order}
        if self.var_order is not None:
            d["var_order"] = list(self.var_order)
        return d

    @classmethod
    def from_dict(cls, data: Any) -> FamilySpec:
        if not isinstance(data, dict) or "pairs" not in data:
            raise InputFormatError("family document needs a 'pairs' list")
        extra = set(data) - {"pairs", "order", "var_order"}
        if extra:
            raise InputFormatError(f"unknown family keys: {sorted(extra)}")
        raw = data["pairs"]
        if not isinstance(raw, list) or not all(
            isinstance(p, list) and len(p) == 2
            and all(isinstance(x, int) and not isinstance(x, bool) for x in p)
            for p in raw
        ):
            raise InputFormatError("'pairs' must be a list of [p, q] integer pairs")
        order = data.get("order", "lex")
        if order not in ORDER_KINDS:
            raise InputFormatError(f"'order' must be one of {ORDER_KINDS}")
        var_order = data.get("var_order")
        if var_order is not None:
            if not isinstance(var_order, list) or not all(isinstance(v, str) for v in var_order):
                raise InputFormatError("'var_order' must be a list of variable names")
            var_order = tuple(var_order)
        return cls(tuple((p, q) for p, q in raw), var_order, order)

    def dumps(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def loads(cls, text: str) -> FamilySpec:
        return cls.from_dict(_json_loads(text))


def _json_loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON: {exc}") from None


def read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc.strerror}") from None
    return _json_loads(text)


def load_family(path: str | Path) -> FamilySpec:
    return FamilySpec.from_dict(read_json(path))


def point_from_data(data: Any) -> CoefficientPoint:
    if isinstance(data, dict):
        if "point" not in data:
            raise InputFormatError("point document needs a 'point' list")
        data = data["point"]
    if not isinstance(data, list):
        raise InputFormatError("'point' must be a list")
    for v in data:
        if isinstance(v, bool) or not isinstance(v, (int, str)):
            raise InputFormatError(f"bad point entry {v!r}: use integers or strings")
    try:
        return CoefficientPoint([str(v) for v in data])
    except (ValueError, ZeroDivisionError) as exc:
        raise InputFormatError(str(exc)) from None


def point_to_data(pt: CoefficientPoint) -> dict:
    return {"point": [format_gaussian(v) for v in pt]}


def load_point(path: str | Path) -> CoefficientPoint:
    return point_from_data(read_json(path))


# ---------------------------------------------------------------------
# result documents
# ---------------------------------------------------------------------
def polynomial_entry(f: Polynomial, label: str) -> dict:
    return {"label": label, "text": f.to_text(), "terms": f.to_struct()}


def sibirsky_document(spec: FamilySpec, res: SibirskyResult) -> dict:
    stats = res.H_basis.stats
    return {
        "command": "sibirsky",
        "family": spec.to_dict(),
        "variables": list(res.ring.names),
        "generators": [polynomial_entry(g, f"f{i + 1}") for i, g in enumerate(res.generators)],
        "groebner": {
            "H_basis_size": len(res.H_basis),
            "pairs_reduced": stats.pairs_reduced if stats else None,
            "max_degree": stats.max_degree if stats else None,
        },
    }


def hilbert_entries(S: SystemFamily, vectors: Sequence[Sequence[int]], res: SibirskyResult) -> list:
    return [{"nu": list(v), "monomial": monomial_of(v, S, res.ring).to_text()} for v in vectors]


def relation_entry(rel: GammaRelation) -> dict:
    return {
        "exponent": rel.exponent,
        "value": None if rel.value is None else format_gaussian(rel.value),
        "consistent": rel.consistent,
        "unconstrained": rel.unconstrained,
        "text": str(rel),
    }


def verdict_entry(res: ReversibilityResult, gens: Sequence[Polynomial],
                  rel: GammaRelation | None) -> dict:
    out: dict[str, Any] = {"verdict": res.verdict.value}
    if res.verdict is Verdict.OFF_VARIETY:
        idx = list(gens).index(res.generator)
        out["witness"] = {
            **polynomial_entry(res.generator, f"f{idx + 1}"),
            "value": format_gaussian(res.value),
        }
    elif res.verdict is Verdict.ON_VARIETY_NOT_REVERSIBLE:
        out["witness"] = {"index": res.index}
    if rel is not None:
        out["gamma_relation"] = relation_entry(rel)
    return out


def verdict_text(doc: dict) -> str:
    v = doc["verdict"]
    if v == Verdict.REVERSIBLE.value:
        rel = doc.get("gamma_relation")
        return "reversible" + (f", {rel['text']}" if rel else "")
    if v == Verdict.ON_VARIETY_NOT_REVERSIBLE.value:
        return f"on variety, not reversible, witness index {doc['witness']['index']}"
    w = doc["witness"]
    return f"off variety, witness {w['label']} = {w['text']} (value {w['value']})"


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
