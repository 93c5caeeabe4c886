# Copyright 2026 The qwalk Authors
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

"""Coined quantum-walk search on hypercubes, complete graphs and twisted toroids."""

from ._core import (
    FamilySpec,
    InvalidArgument,
    NotCompilable,
    ParseError,
    QwalkError,
    SizeCapExceeded,
    circuit_unitary,
    compile_step,
    decode_node,
    default_marked_node,
    encode_node,
    find_peak,
    fit_power_law,
    gate_count_scan,
    is_compilable,
    neighbor,
    scaling_scan,
    step_matrix,
    success_curve,
    two_qubit_gate_count,
    verify_step,
)

__version__ = "0.1.0"

__all__ = [
    "FamilySpec",
    "InvalidArgument",
    "NotCompilable",
    "ParseError",
    "QwalkError",
    "SizeCapExceeded",
    "circuit_unitary",
    "compile_step",
    "decode_node",
    "default_marked_node",
    "encode_node",
    "find_peak",
    "fit_power_law",
    "gate_count_scan",
    "is_compilable",
    "neighbor",
    "scaling_scan",
    "step_matrix",
    "success_curve",
    "two_qubit_gate_count",
    "verify_step",
]
