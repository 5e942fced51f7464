import json
import math

import numpy as np

from fermigate.freefermion import SingleExcitationState
from fermigate.model import ChainSpec
from fermigate.serialize import (
    csv_text,
    dumps_json,
    format_float,
    single_state_csv,
    two_state_csv,
    write_atomic,
)
from fermigate.twobody import product_state


def test_format_float_round_trips():
    for x in (math.pi, 1e-300, -2.5e17, 0.1):
        assert float(format_float(x)) == x
    assert format_float(math.nan) == ""
    assert format_float(True) == "true"
    assert format_float(np.int64(7)) == "7"
    assert format_float(None) == ""


def test_json_is_sorted_and_nan_free():
    text = dumps_json({"b": math.nan, "a": np.float64(0.1), "c": [np.int32(2), np.bool_(True)]})
    assert json.loads(text) == {"a": 0.1, "b": None, "c": [2, True]}
    assert text.index('"a"') < text.index('"b"')


def test_csv_fills_missing_cells():
    text = csv_text(("x", "y"), [{"x": 1.5}, {"x": 2, "y": "s"}])
    assert text == "x,y\n1.5,\n2,s\n"


def test_write_atomic_creates_parents(tmp_path):
    path = write_atomic(tmp_path / "a" / "b.txt", "hello")
    assert path.read_text() == "hello"
    assert list(path.parent.iterdir()) == [path]


def test_state_dumps():
    chain = ChainSpec(4)
    s = SingleExcitationState([1, 1j, 0, 0], chain)
    assert single_state_csv(s).splitlines()[:3] == ["site,re,im", "1,1,0", "2,0,1"]
    psi, _ = product_state(SingleExcitationState.delta(chain, 1), SingleExcitationState.delta(chain, 3))
    lines = two_state_csv(psi).splitlines()
    assert lines[0] == "j,j_prime,re,im"
    assert len(lines) == 7
    assert lines[2] == "1,3,1,0"
