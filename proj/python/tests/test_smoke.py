# Copyright 2026 The zetalab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json

import pytest

import zetalab


def test_qpoly_roundtrip_and_eval():
    p = zetalab.QPoly("3*q^6-6*q^4+3*q^3")
    assert str(p) == "3*q^6-6*q^4+3*q^3"
    assert p.eval("2") == "120"
    assert p.degree == 6
    assert (p - p) == zetalab.QPoly("0")
    assert p.coefficients()[3] == "3"


def test_complex_and_transfer():
    assert zetalab.edge_source((1, 1, 2, 3)) == (4, 2)
    assert zetalab.edge_target((1, 0, 2, 1)) == (3, 0)
    assert len(zetalab.edges_in_region(1, 3, 6)) == 54
    arrows = zetalab.out_neighbors((1, 0, 0, 1))
    assert [(t, str(w)) for t, w in arrows] == [((1, 0, 0, 2), "q^2-1"), ((1, 0, 1, 1), "1")]
    assert str(zetalab.row_sum((2, 3, 5, 3))) == "q^2"
    with pytest.raises(zetalab.ZetalabError):
        zetalab.out_neighbors((1, 2, 0, 1), truncation=2)


def test_traces_cycles_counts():
    value, region = zetalab.trace_power(1, 3)
    assert value == "3*q^6-6*q^4+3*q^3"
    assert zetalab.trace_power(1, 6, q="2")[0] == "10944"
    assert zetalab.weighted_count(1, 9, q="2") == "763392"
    cycles = zetalab.enumerate_cycles(1, 3)
    assert len(cycles) == 2
    assert str(cycles[1]["weight"]) == "q^5-q^4"
    counts = zetalab.counts_from_zeta(6)
    assert counts[6] == zetalab.counts_closed_form(6)
    assert zetalab.as_fraction(zetalab.counts_closed_form(3).eval("5")) == 43500


def test_determinants_agree():
    alpha = zetalab.det_via_alpha(6, q="2")
    traces = zetalab.det_via_traces(1, 6, q="2")
    direct = zetalab.det_direct(7, 7, 6, "2")
    assert alpha == traces == direct
    assert alpha[3] == "-40"
    assert zetalab.zeta_series("full", 0) == ["1"]
    assert zetalab.zeta_closed_form("1") == "(1-q^(4-3s))^2/((1-q^(3-3s))*(1-q^(6-3s)))"


def test_verify_and_cli():
    report = zetalab.verify_all(max_m=3, order=3)
    assert all(ok for _, ok, _ in report)
    code, out, _ = zetalab.run_cli(["det", "--method", "traces", "--order", "3", "--no-cache"])
    assert code == 0
    assert json.loads(out)["series"] == ["1", "0", "0", "-q^6+2*q^4-q^3"]
    code, _, err = zetalab.run_cli(["trace"])
    assert code == 2 and "--m" in err
