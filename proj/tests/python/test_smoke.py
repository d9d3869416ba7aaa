"""Smoke tests for the _core extension: exact strings in, exact strings out."""

import json

import linfinf


def interval(lo, hi, lo_closed=True, hi_closed=True):
    return {"lo": lo, "hi": hi, "lo_closed": lo_closed, "hi_closed": hi_closed}


def figure(*boxes):
    return json.dumps({"boxes": [{"x": x, "y": y} for x, y in boxes]})


def indicator(coeff, fig):
    return json.dumps({"terms": [{"coeff": coeff, "figure": json.loads(fig)}]})


VSEG_HALF = figure((interval("1/2", "1/2"), interval("0", "1")))
SQUARE = figure((interval("0", "1"), interval("0", "1")))
STRIP = figure((interval("0", "1/2"), interval("0", "1")))
HLINE = figure((interval("0", "1"), interval("1/3", "1/3")))


def test_norm_and_pairing():
    germ = linfinf.coordinate_germ()
    assert linfinf.germ_norm(germ) == "1/1"
    f = indicator("1", VSEG_HALF)
    assert linfinf.l1_norm(f, "grid") == "1/1"
    assert linfinf.pairing(germ, f, "grid") == "1/2"
    assert linfinf.pairing(germ, f, "lines") == "0/1"


def test_norm_witness():
    germ = linfinf.coordinate_germ()
    w = linfinf.norm_witness(germ, "1/10", "grid")
    assert linfinf.l1_norm(w, "grid") == "1/1"
    assert linfinf.pairing(germ, w, "grid") == "19/20"


def test_measures():
    assert linfinf.measure_of(SQUARE, "grid") == "inf"
    assert not linfinf.sigma_finite(SQUARE)
    assert linfinf.sigma_finite(VSEG_HALF)
    assert linfinf.measure_of(VSEG_HALF, "grid") == "1/1"
    assert linfinf.measure_of(VSEG_HALF, "lines") == "0/1"
    assert linfinf.measure_of(HLINE, "lines") == "1/1"


def test_restriction():
    got = json.loads(linfinf.restrict_germ(linfinf.coordinate_germ(), VSEG_HALF))
    assert [e["at"] for e in got["vertical"]] == ["1/2"]
    assert got["horizontal"] == []


def test_representability():
    plane = json.dumps(
        {
            "x_cuts": [],
            "y_cuts": [],
            "cells": [[{"a": "0", "b": "0", "c": "1"}] * 3] * 3,
        }
    )
    verdict = json.loads(linfinf.represents(plane, linfinf.coordinate_germ()))
    assert not verdict["represents"]
    assert verdict["witness"]["orientation"] == "horizontal"


def test_field_and_patch():
    assert linfinf.field_member(HLINE)
    assert not linfinf.field_member(STRIP)
    germ = json.dumps(
        {
            "vertical": {
                "default": {"breaks": [], "pieces": [{"a0": "0", "a1": "0", "b0": "0", "b1": "0"}]}
            },
            "horizontal": {
                "default": {"breaks": [], "pieces": [{"a0": "0", "a1": "0", "b0": "1", "b1": "0"}]}
            },
        }
    )
    patched = linfinf.patch_global(germ)
    w = json.loads(linfinf.measurable_witness(patched))
    assert w["threshold"] == "1/2"


def test_demos():
    ds = json.loads(linfinf.demo_ds_remark())
    assert ds["pass"]
    assert ds["measurability_witness"]["threshold"] == "1/2"
    ax = json.loads(linfinf.run_axioms(seed=7, cases=10))
    assert ax["pass"]
    dual = json.loads(linfinf.demo_dual_pairing())
    assert dual["pass"]
    assert dual["cases"][0]["value"] == "1/2"


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"{name}: ok")
    print("smoke: PASS")
