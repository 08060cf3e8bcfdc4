import io
import json
import logging

import numpy as np
import pytest

from steklov_models.records import (
    BackendError,
    CSVBackend,
    JSONBackend,
    LogBackend,
    PlotDataBackend,
    backend_for,
    emit,
)

ROWS = [
    {"t": 0.0, "f": 0.0, "fprime": 1.0},
    {"t": 0.1, "f": np.float64(0.09983341664682815), "fprime": 0.9950041652780258},
]


def test_json_backend():
    out = io.StringIO()
    JSONBackend().emit("warp", ROWS, out, {"first_zero": None, "steps": np.int64(12)})
    document = json.loads(out.getvalue())
    assert list(document) == ["command", "first_zero", "steps", "records"]
    assert document["command"] == "warp"
    assert document["steps"] == 12
    assert document["records"][1]["f"] == 0.09983341664682815


def test_csv_backend(caplog):
    out = io.StringIO()
    with caplog.at_level(logging.INFO, logger="steklov_models.records"):
        CSVBackend().emit("warp", ROWS, out, {"first_zero": 3.0})
    assert out.getvalue() == (
        "t,f,fprime\n"
        "0.0,0.0,1.0\n"
        "0.1,0.09983341664682815,0.9950041652780258\n"
    )
    assert "first_zero" in caplog.text


def test_csv_backend_without_records():
    out = io.StringIO()
    CSVBackend().emit("wentzell", [], out)
    assert out.getvalue() == ""


def test_plot_data_backend():
    out = io.StringIO()
    rows = [{"n": 2, "upper": 1.5, "valid": True, "note": "x"}]
    PlotDataBackend().emit("wentzell", rows, out, {"degenerate": False})
    assert out.getvalue().splitlines() == [
        "# wentzell",
        "# degenerate = False",
        "# n upper",
        "2.0 1.5",
    ]


def test_non_finite_values_are_refused():
    with pytest.raises(BackendError):
        JSONBackend().emit("warp", [{"f": float("nan")}], io.StringIO())


def test_backend_for():
    assert isinstance(backend_for("csv"), CSVBackend)
    assert isinstance(backend_for("plot-data"), PlotDataBackend)
    with pytest.raises(BackendError):
        backend_for("xml")


def test_emit_is_deterministic(caplog):
    outputs = []
    for _ in range(2):
        out = io.StringIO()
        with caplog.at_level(logging.DEBUG, logger="steklov_models.records"):
            emit("warp", ROWS, out, [JSONBackend(), LogBackend()], {"method": "DOP853"})
        outputs.append(out.getvalue())
    assert outputs[0] == outputs[1]
    assert "emitted 2 records" in caplog.text
