# Description: JSON economy documents: parsing with field paths, exact serialization.
"""Economy documents.

Notes:
- Rationals are "p/q" strings (plain integers are accepted on input); bundles are
  integer arrays, and value tables are objects keyed by "q1,q2,...".
- Every parse failure raises ``DocumentError`` naming the offending field, e.g.
  ``agents[1].utility.values["0,1"]``; malformed JSON reports its line and column.
- ``dumps_document(parse_document(d))`` is canonical, so a second parse is an identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping

from hicksdual.core.errors import DocumentError, HicksDualError
from hicksdual.core.models import (
    Agent,
    ConsumptionBundle,
    Economy,
    EndowmentAllocation,
    Quasilinear,
    Quasilog,
    TabulatedFamily,
    Valuation,
    validate_economy,
    validate_endowment,
)
from hicksdual.core.numbers import (
    Bundle,
    format_bundle,
    format_rational,
    parse_bundle,
    parse_rational,
)

KINDS = ("quasilinear", "quasilog", "tabulated")


@dataclass(frozen=True)
class EconomyDocument:
    """A parsed document: the economy, optional endowments and an optional demand type."""

    economy: Economy
    endowment: EndowmentAllocation | None = None
    demand_type: tuple[Bundle, ...] | None = None


def _require(data: Mapping[str, Any], key: str, path: str) -> Any:
    if not isinstance(data, Mapping):
        raise DocumentError(path, "expected an object")
    if key not in data:
        raise DocumentError(f"{path}.{key}" if path else key, "missing required field")
    return data[key]


def _rational(value: Any, path: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise DocumentError(path, f"expected a rational string like \"3/2\", got {value!r}")
    try:
        return Fraction(value) if isinstance(value, int) else parse_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise DocumentError(path, str(exc)) from None


def _bundle(value: Any, path: str) -> Bundle:
    if not isinstance(value, list) or any(
        isinstance(q, bool) or not isinstance(q, int) for q in value
    ):
        raise DocumentError(path, f"expected an array of integers, got {value!r}")
    return tuple(value)


def _values(data: Any, path: str) -> Valuation:
    if not isinstance(data, Mapping) or not data:
        raise DocumentError(path, "expected a nonempty object keyed by bundles")
    values: dict[Bundle, Fraction] = {}
    for key, raw in data.items():
        item = f'{path}["{key}"]'
        try:
            x = parse_bundle(key)
        except ValueError:
            raise DocumentError(item, "bundle keys are comma-separated integers") from None
        if x in values:
            raise DocumentError(item, "bundle listed twice")
        values[x] = _rational(raw, item)
    try:
        return Valuation(values)
    except HicksDualError as exc:
        raise DocumentError(path, str(exc)) from None


def _utility(data: Any, path: str) -> Quasilinear | Quasilog | TabulatedFamily:
    kind = _require(data, "kind", path)
    try:
        if kind == "quasilinear":
            return Quasilinear(_values(_require(data, "values", path), f"{path}.values"))
        if kind == "quasilog":
            return Quasilog(_values(_require(data, "values", path), f"{path}.values"))
        if kind == "tabulated":
            levels = _require(data, "levels", path)
            tables = _require(data, "valuations", path)
            if not isinstance(levels, list) or not isinstance(tables, list):
                raise DocumentError(path, "levels and valuations must be arrays")
            floor = data.get("money_floor")
            return TabulatedFamily(
                tuple(_rational(u, f"{path}.levels[{i}]") for i, u in enumerate(levels)),
                tuple(_values(t, f"{path}.valuations[{i}]") for i, t in enumerate(tables)),
                None if floor is None else _rational(floor, f"{path}.money_floor"),
            )
    except DocumentError:
        raise
    except HicksDualError as exc:
        raise DocumentError(path, str(exc)) from None
    raise DocumentError(f"{path}.kind", f"expected one of {', '.join(KINDS)}, got {kind!r}")


def parse_document(data: Mapping[str, Any]) -> EconomyDocument:
    goods = _require(data, "goods", "")
    if not isinstance(goods, list) or not all(isinstance(g, str) for g in goods):
        raise DocumentError("goods", "expected an array of names")
    total = _bundle(_require(data, "total_endowment", ""), "total_endowment")
    raw_agents = _require(data, "agents", "")
    if not isinstance(raw_agents, list) or not raw_agents:
        raise DocumentError("agents", "expected a nonempty array")

    agents = []
    endowments: list[ConsumptionBundle | None] = []
    for j, raw in enumerate(raw_agents):
        path = f"agents[{j}]"
        name = _require(raw, "name", path)
        if not isinstance(name, str) or not name:
            raise DocumentError(f"{path}.name", "expected a nonempty string")
        agents.append(Agent(name, _utility(_require(raw, "utility", path), f"{path}.utility")))
        endow = raw.get("endowment")
        if endow is None:
            endowments.append(None)
        else:
            where = f"{path}.endowment"
            money = _rational(_require(endow, "money", where), f"{where}.money")
            goods_held = _bundle(_require(endow, "goods", where), f"{where}.goods")
            endowments.append(ConsumptionBundle(money, goods_held))

    economy = Economy(tuple(goods), tuple(agents), total)
    try:
        validate_economy(economy)
    except HicksDualError as exc:
        raise DocumentError("agents", str(exc)) from None

    endowment = None
    given = [c is not None for c in endowments]
    if any(given):
        if not all(given):
            missing = given.index(False)
            raise DocumentError(
                f"agents[{missing}].endowment", "either every agent or none has one"
            )
        endowment = EndowmentAllocation(tuple(c for c in endowments if c is not None))
        try:
            validate_endowment(economy, endowment)
        except HicksDualError as exc:
            raise DocumentError("agents[].endowment", str(exc)) from None

    demand_type = None
    if data.get("demand_type") is not None:
        raw_vectors = data["demand_type"]
        if not isinstance(raw_vectors, list):
            raise DocumentError("demand_type", "expected an array of integer vectors")
        demand_type = tuple(
            _bundle(d, f"demand_type[{i}]") for i, d in enumerate(raw_vectors)
        )
    return EconomyDocument(economy, endowment, demand_type)


def loads_document(text: str) -> EconomyDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"line {exc.lineno}, column {exc.colno}", exc.msg) from None
    if not isinstance(data, dict):
        raise DocumentError("", "an economy document must be a JSON object")
    return parse_document(data)


def load_document(path: str | Path) -> EconomyDocument:
    return loads_document(Path(path).read_text(encoding="utf-8"))


def _values_to_dict(v: Valuation) -> dict[str, str]:
    return {format_bundle(x): format_rational(q) for x, q in v.values.items()}


def _utility_to_dict(agent: Agent) -> dict[str, Any]:
    model = agent.utility
    if isinstance(model, Quasilinear):
        return {"kind": "quasilinear", "values": _values_to_dict(model.valuation)}
    if isinstance(model, Quasilog):
        return {"kind": "quasilog", "values": _values_to_dict(model.quasivaluation)}
    return {
        "kind": "tabulated",
        "levels": [format_rational(u) for u in model.levels],
        "valuations": [_values_to_dict(v) for v in model.valuations],
        "money_floor": None if model.money_floor is None else format_rational(model.money_floor),
    }


def document_to_dict(doc: EconomyDocument) -> dict[str, Any]:
    e = doc.economy
    agents = []
    for j, agent in enumerate(e.agents):
        item: dict[str, Any] = {"name": agent.name, "utility": _utility_to_dict(agent)}
        if doc.endowment is not None:
            c = doc.endowment[j]
            item["endowment"] = {"money": format_rational(c.money), "goods": list(c.goods)}
        agents.append(item)
    out: dict[str, Any] = {
        "goods": list(e.goods),
        "total_endowment": list(e.total_endowment),
        "agents": agents,
    }
    if doc.demand_type is not None:
        out["demand_type"] = [list(d) for d in doc.demand_type]
    return out


def dumps_document(doc: EconomyDocument) -> str:
    return json.dumps(document_to_dict(doc), indent=2) + "\n"


def write_document(doc: EconomyDocument, path: str | Path) -> Path:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(dumps_document(doc), encoding="utf-8")
    return out
