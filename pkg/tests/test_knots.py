import io
import json

import pytest

from zdisk.knots import (
    InvalidSeifert, KnotRecord, alexander_from_seifert, dk_table,
    dk_table_from_csv, five_crossing_table, parse_seifert, twist_knot_record,
    record_alexander, write_table,
)
from zdisk.laurent import delta_n, parse_poly


def test_five_crossing_rows():
    rows = {r["name"]: r for r in five_crossing_table()}
    assert [rows[k]["isotopy_count"] for k in ("0_1", "3_1", "4_1", "5_1", "5_2")] == \
        [1, 1, 2, "unsupported", 2]
    assert rows["4_1"]["equivalence_count"] == 1
    assert rows["5_1"]["note"]


@pytest.mark.parametrize("n", range(-5, 6))
def test_twist_matrix_gives_delta(n):
    assert record_alexander(twist_knot_record(n)) == delta_n(n)


def test_seifert_validation():
    with pytest.raises(InvalidSeifert):
        alexander_from_seifert([[1, 0], [0, 1]])
    with pytest.raises(InvalidSeifert):
        alexander_from_seifert([[1]])
    assert alexander_from_seifert([]).poly == parse_poly("-1")


def test_parse_seifert():
    assert parse_seifert("-1,1;0,-1") == ((-1, 1), (0, -1))
    assert parse_seifert("") is None


def test_empty_and_malformed_csv():
    assert dk_table_from_csv(io.StringIO("name,seifert,alexander\n")) == []
    text = "name,seifert,alexander\ngood,\"-1,1;0,1\",\nbad,\"1,2;3\",\nworse,,t+\n"
    rows = dk_table_from_csv(io.StringIO(text))
    assert [r["name"] for r in rows] == ["good", "bad", "worse"]
    assert rows[0]["isotopy_count"] == 2 and not rows[0]["error"]
    assert rows[1]["error"] and rows[2]["error"]


def test_write_formats():
    rows = dk_table([KnotRecord("4_1", None, delta_n(-1))])
    out = io.StringIO()
    write_table(rows, out, "json")
    assert json.loads(out.getvalue())[0]["isotopy_count"] == 1
    out = io.StringIO()
    write_table(rows, out, "csv")
    assert out.getvalue().splitlines()[0].startswith("name,")
