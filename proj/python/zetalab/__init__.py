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
"""Exact edge zeta functions of the PGL(3, F_q[t]) quotient complex."""

from fractions import Fraction

from ._core import (
    QPoly,
    ZetalabError,
    counts_closed_form,
    counts_from_zeta,
    det_direct,
    det_via_alpha,
    det_via_traces,
    edge_source,
    edge_target,
    edges_in_region,
    enumerate_cycles,
    out_neighbors,
    row_sum,
    run_cli,
    trace_power,
    verify_all,
    weighted_count,
    zeta_closed_form,
    zeta_series,
)

__all__ = [
    "QPoly",
    "ZetalabError",
    "as_fraction",
    "counts_closed_form",
    "counts_from_zeta",
    "det_direct",
    "det_via_alpha",
    "det_via_traces",
    "edge_source",
    "edge_target",
    "edges_in_region",
    "enumerate_cycles",
    "out_neighbors",
    "row_sum",
    "run_cli",
    "trace_power",
    "verify_all",
    "weighted_count",
    "zeta_closed_form",
    "zeta_series",
]

__version__ = "0.1.0"


def as_fraction(value: str) -> Fraction:
    """Exact rational from one of the library's string results."""
    return Fraction(value)
