# Copyright 2026 The sympair Authors
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

"""Exact Hamming and symbol-pair distances of constacyclic codes over GF(q)."""

from ._sympair import (
    BudgetExceeded,
    Code,
    Field,
    InvariantError,
    SympairError,
    build,
    certify,
    decompose,
    dual,
    enumerate_shapes,
    exclude_pattern,
    families,
    hamming_weight,
    join,
    make_code,
    min_hamming,
    min_pair,
    negacyclic_dual_generator,
    pair_weight,
    root_choice_stability,
    same_code,
    subcode_check,
    witness_low_weight,
)

__all__ = [
    "BudgetExceeded",
    "Code",
    "Field",
    "InvariantError",
    "SympairError",
    "build",
    "certify",
    "decompose",
    "dual",
    "enumerate_shapes",
    "exclude_pattern",
    "families",
    "hamming_weight",
    "join",
    "make_code",
    "min_hamming",
    "min_pair",
    "negacyclic_dual_generator",
    "pair_weight",
    "root_choice_stability",
    "same_code",
    "subcode_check",
    "witness_low_weight",
]
