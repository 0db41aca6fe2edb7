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

import itertools
import random

import pytest

import sympair


def test_prime_field_matches_integers():
    f = sympair.Field(7)
    for a, b in itertools.product(range(7), repeat=2):
        assert f.add(a, b) == (a + b) % 7
        assert f.mul(a, b) == (a * b) % 7
    assert f.inv(3) == 5
    with pytest.raises(sympair.SympairError):
        f.inv(0)


def test_extension_field_roots():
    f = sympair.Field(3, 2)
    xi = f.nth_root_of_unity(8)
    assert f.pow(xi, 4) == f.from_int(-1)
    assert f.pow(xi, 8) == 1


def test_build_and_encode():
    code = sympair.build("dp9", 5)
    assert (code.n, code.k) == (12, 5)
    word = code.encode([1, 0, 2, 0, 3])
    assert code.contains(word)
    assert code.contains(code.shift(word))
    assert code.to_dict()["k"] == 5


def test_distances_match_brute_force():
    code = sympair.build("dp8", 3)
    words = [code.encode(list(m)) for m in itertools.product(range(3), repeat=code.k)]
    nonzero = [w for w in words if any(w)]
    assert sympair.min_hamming(code, 8)["value"] == min(map(sympair.hamming_weight, nonzero)) == 6
    assert sympair.min_pair(code, 8)["value"] == min(map(sympair.pair_weight, nonzero)) == 8


def test_pair_weight_is_union_of_support_and_its_shift():
    rng = random.Random(3)
    for _ in range(2000):
        n = rng.randint(2, 20)
        w = [rng.choice([0, 0, 1, 2]) for _ in range(n)]
        s = {i for i, v in enumerate(w) if v}
        assert sympair.pair_weight(w) == len(s | {(i - 1) % n for i in s})


def test_certify_statuses():
    assert sympair.certify("dp7", 5)["status"] == "MDS_CONFIRMED"
    bad = sympair.certify("dp9", 3)
    assert bad["status"] == "DISCREPANCY"
    assert bad["d_P"]["value"] == 8
    with pytest.raises(sympair.SympairError):
        sympair.certify("dp7", 7)


def test_decomposition_round_trip():
    code = sympair.build("dp9", 7)
    c1, c2 = sympair.decompose(code)
    assert c1.k + c2.k == code.k
    assert sympair.same_code(sympair.join(c1, c2), code)
    b = sympair.negacyclic_dual_generator(7)
    f = sympair.Field(7)
    assert [f.div(x, b[-1]) for x in b] == sympair.dual(c2).generator


def test_shapes_and_exclusion():
    assert sympair.enumerate_shapes(24, 2) == [[0]]
    code = sympair.build("dp7", 5)
    assert not sympair.exclude_pattern(code, [0, 1, 2, 5])["admissible"]
    assert sympair.exclude_pattern(code, [0, 4, 12, 16])["admissible"]


def test_budget_errors_are_catchable():
    code = sympair.build("dp7", 5)
    with pytest.raises(sympair.SympairError):
        sympair.min_hamming(code, 4, method="bogus")
    assert issubclass(sympair.BudgetExceeded, sympair.SympairError)
