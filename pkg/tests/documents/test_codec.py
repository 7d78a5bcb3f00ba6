from __future__ import annotations

import json
from pathlib import Path

import pytest

from hicksdual.core.errors import DocumentError
from hicksdual.core.models import Quasilog, TabulatedFamily
from hicksdual.documents.codec import (
    document_to_dict,
    dumps_document,
    load_document,
    loads_document,
    parse_document,
    write_document,
)
from hicksdual.documents.fixtures import FIXTURES, ex44b, write_fixtures
from hicksdual.hicksian.valuations import tabulate


def _ex44b_dict() -> dict:
    return document_to_dict(ex44b())


def test_fixtures_survive_a_second_parse() -> None:
    for build in FIXTURES.values():
        text = dumps_document(build())
        assert dumps_document(loads_document(text)) == text


def test_rationals_are_written_as_strings() -> None:
    data = _ex44b_dict()
    j = data["agents"][0]
    assert j["utility"]["kind"] == "quasilog"
    assert j["utility"]["values"]["1,0"] == "-4"
    assert j["endowment"] == {"money": "3", "goods": [0, 1]}


def test_tabulated_utilities_round_trip(tmp_path: Path) -> None:
    doc = ex44b()
    j = doc.economy.agents[0]
    assert isinstance(j.utility, Quasilog)
    data = document_to_dict(doc)
    family = tabulate(j, ["1/2", 1])
    data["agents"][0]["utility"] = {
        "kind": "tabulated",
        "levels": ["1/2", "1"],
        "valuations": [
            {",".join(map(str, x)): str(v(x)) for x in v.feasible_set}
            for v in family.valuations
        ],
        "money_floor": "0",
    }
    path = write_document(parse_document(data), tmp_path / "tab.json")
    loaded = load_document(path)
    model = loaded.economy.agents[0].utility
    assert isinstance(model, TabulatedFamily)
    assert model == family


def test_errors_name_the_offending_field() -> None:
    data = _ex44b_dict()
    data["agents"][1]["utility"]["values"]["0,1"] = 0.5
    with pytest.raises(DocumentError) as err:
        parse_document(data)
    assert err.value.path == 'agents[1].utility.values["0,1"]'

    data = _ex44b_dict()
    del data["agents"][0]["utility"]["kind"]
    with pytest.raises(DocumentError) as err:
        parse_document(data)
    assert err.value.path == "agents[0].utility.kind"

    data = _ex44b_dict()
    data["agents"][0]["utility"]["kind"] = "cobb-douglas"
    with pytest.raises(DocumentError, match="expected one of"):
        parse_document(data)


def test_endowments_are_all_or_nothing() -> None:
    data = _ex44b_dict()
    del data["agents"][1]["endowment"]
    with pytest.raises(DocumentError) as err:
        parse_document(data)
    assert err.value.path == "agents[1].endowment"


def test_economy_errors_are_reported() -> None:
    data = _ex44b_dict()
    data["total_endowment"] = [2, 2]
    with pytest.raises(DocumentError):
        parse_document(data)
    data = _ex44b_dict()
    data["agents"][0]["endowment"]["money"] = "0"
    with pytest.raises(DocumentError):
        parse_document(data)


def test_malformed_json_reports_the_position() -> None:
    with pytest.raises(DocumentError, match="line 1, column"):
        loads_document('{"goods": [')
    with pytest.raises(DocumentError):
        loads_document(json.dumps([1, 2]))


def test_write_fixtures(tmp_path: Path) -> None:
    paths = write_fixtures(tmp_path / "fixtures")
    assert sorted(p.name for p in paths) == sorted(f"{name}.json" for name in FIXTURES)
    ex53 = load_document(tmp_path / "fixtures" / "ex53.json")
    assert ex53.demand_type is not None and len(ex53.demand_type) == 10
