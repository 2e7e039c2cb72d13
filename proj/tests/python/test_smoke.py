# Copyright 2026 The convexlab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math
from fractions import Fraction
from pathlib import Path

import pytest

import convexlab as cl

DATA = Path(__file__).resolve().parents[2] / "data"


def abs_fn():
    return cl.Function.max_affine([[1], [-1]], [0, 0])


def test_evaluate_and_conjugate():
    f = abs_fn()
    assert f([Fraction(-3, 2)]) == Fraction(3, 2)
    g = f.conjugate()
    assert g(["1/2"]) == 0
    assert g([2]) == math.inf


def test_eps_subdiff_interval():
    r = abs_fn().eps_subdiff([1], "1/2")
    assert r.contains([Fraction(3, 4)])
    assert r.contains(["1/2"])
    assert not r.contains([Fraction(1, 4)])
    assert r.is_closed()


def test_float_rejected():
    with pytest.raises(cl.ConvexlabError) as info:
        abs_fn()([0.5])
    assert info.value.code == "parse-error"


def test_sum_rule_and_inf_conv():
    f = abs_fn()
    res = cl.sum_rule_check([f, f], [0])
    assert res["holds"]
    ic = cl.inf_conv_value([f, f], [1])
    assert ic["value"] == 1 and ic["attained"]
    assert sum(p[0] for p in ic["split"]) == 1
    assert cl.condition_i_check([f, f], [0], 1)[0]


def test_catalog_parabola():
    p = cl.Function.catalog("parabola-indicator")
    assert p.dim == 2
    assert not p.is_polyhedral


def test_instance_duality():
    inst = cl.load_instance(str(DATA / "poly_demo.json"))
    rep = inst.gap_report()
    assert rep["primal"] == 1 and rep["dual"] == 1 and rep["gap"] == 0
    assert rep["cq"]["weak-duality"]["holds"]
    text, ok = inst.run_queries("csv")
    assert ok
    assert text.startswith("query,verdict,value,witness,certificate-id\r\n")


def test_gallery():
    assert "example33" in cl.gallery_names()
    text, ok = cl.run_gallery("example33")
    assert ok
    assert text == cl.run_gallery("example33")[0]
    with pytest.raises(cl.ConvexlabError):
        cl.run_gallery("nope")
