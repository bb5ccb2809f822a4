# Copyright 2026 The approxdd Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Approximating decision-diagram quantum circuit simulator."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional

from . import _core
from ._core import (
    CapacityError,
    Circuit,
    InputError,
    ParseError,
    ResourceError,
    TruncationError,
    approximate_round,
    contributions,
    dense_simulate,
    fidelity,
    gen_ghz,
    gen_qft,
    gen_random,
    gen_shor_period,
    gen_supremacy,
    parse_qasm,
    plan_rounds,
    shor_postprocess,
)

__all__ = [
    "CapacityError",
    "Circuit",
    "InputError",
    "ParseError",
    "ResourceError",
    "SimulationResult",
    "TruncationError",
    "approximate_round",
    "contributions",
    "dense_simulate",
    "fidelity",
    "gen_ghz",
    "gen_qft",
    "gen_random",
    "gen_shor_period",
    "gen_supremacy",
    "parse_qasm",
    "plan_rounds",
    "shor_postprocess",
    "simulate",
]


@dataclass(frozen=True)
class SimulationResult:
    """Statistics document and, if requested, the dense final state."""

    stats: dict[str, Any]
    amplitudes: Optional[list[complex]]

    @property
    def fidelity_lower_bound(self) -> float:
        return self.stats["fidelity_lower_bound"]

    @property
    def max_dd_size(self) -> int:
        return self.stats["max_dd_size"]

    @property
    def rounds(self) -> int:
        return self.stats["rounds"]


def simulate(
    circuit: Circuit,
    mode: str = "exact",
    *,
    threshold: Optional[int] = None,
    f_round: Optional[float] = None,
    f_final: Optional[float] = None,
    placement: str = "even",
    amplitudes: bool = False,
    node_limit: Optional[int] = None,
) -> SimulationResult:
    """Simulates `circuit` in exact, memory or fidelity mode."""
    text, amps = _core.simulate(
        circuit,
        mode=mode,
        threshold=threshold,
        f_round=f_round,
        f_final=f_final,
        placement=placement,
        amplitudes=amplitudes,
        node_limit=node_limit,
    )
    return SimulationResult(stats=json.loads(text), amplitudes=amps)
