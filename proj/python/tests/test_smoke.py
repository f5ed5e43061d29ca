# Copyright 2026 The mstent Authors
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
"""Smoke tests of the Python bindings."""

import json
import math

import numpy as np
import pytest
from scipy import integrate, stats

import mstent


def symmetric_t(v):
    return mstent.SkewT(np.zeros(1), np.eye(1), np.zeros(1), v)


def two_component():
    a = mstent.SkewT([0.3], [[1.5]], [0.3], 3.0)
    b = mstent.SkewT([4.0], [[5.0]], [4.0], 3.0)
    return mstent.Mixture([a, b], [0.2, 0.8])


def test_symmetric_shannon_matches_scipy():
    for v in (1.5, 3.0, 12.0):
        assert symmetric_t(v).shannon() == pytest.approx(stats.t(v).entropy(), abs=1e-8)


def test_renyi_order_two_matches_integral():
    v = 3.0
    val, _ = integrate.quad(lambda x: stats.t.pdf(x, v) ** 2, -np.inf, np.inf)
    assert symmetric_t(v).renyi(2.0) == pytest.approx(-math.log(val), abs=1e-7)


def test_skew_shannon_agrees_with_monte_carlo():
    p = mstent.example1(1, 3.0)
    exact = p.shannon()
    est = mstent.mc_shannon(mstent.Mixture([p], [1.0]), n=200000, seed=7)
    assert abs(exact - est.value) < 5 * est.std_error
    assert est.method == "plain_mc"


def test_renyi_decreases_in_order():
    p = mstent.example1(2, 5.0)
    values = [p.renyi(a) for a in (0.5, 2.0, 5.0)]
    assert values[0] > p.shannon() > values[1] > values[2]


def test_bounds_sandwich_monte_carlo():
    mx = two_component()
    rep = mstent.shannon_bounds(mx)
    est = mstent.mc_shannon(mx, n=200000, seed=11)
    assert rep.lower <= est.value + 4 * est.std_error
    assert est.value - 4 * est.std_error <= rep.upper
    low = mstent.renyi_bounds(mx, 2)
    assert low.alpha == 2
    assert len(low.per_component) == 2


def test_mc_is_deterministic():
    mx = two_component()
    a = mstent.mc_renyi(mx, 2.0, n=50000, seed=5, threads=1)
    b = mstent.mc_renyi(mx, 2.0, n=50000, seed=5, threads=4)
    assert a.value == b.value
    assert a.seed == 5 and a.n == 50000


def test_sampling_shape_and_mean():
    p = mstent.example1(1, 5.0)
    x = np.asarray(p.sample(100000, seed=3))
    assert x.size == 100000 * p.dim
    assert x.reshape(-1, p.dim).mean(axis=0) == pytest.approx(
        np.asarray(p.mean()).ravel(), abs=0.05)


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        symmetric_t(-1.0)
    with pytest.raises(mstent.Error):
        mstent.renyi_bounds(two_component(), 0)


def test_parse_config():
    text = json.dumps({
        "components": [
            {"mu": [0.3], "scale": [[1.5]], "delta": [0.3], "dof": 3},
            {"mu": [4], "scale": [[5]], "delta": [4], "dof": 3},
        ],
        "weights": [0.2, 0.8],
    })
    mx = mstent.parse_config(text)
    assert mx.size == 2 and mx.dim == 1
    assert list(mx.weights) == [0.2, 0.8]
    x = np.array([0.5])
    assert mx.logpdf(x) == pytest.approx(two_component().logpdf(x), abs=1e-14)
    with pytest.raises(ValueError, match="positive definite"):
        mstent.parse_config(json.dumps({
            "components": [{"mu": [0, 0], "scale": [[1, 2], [2, 1]],
                            "delta": [0, 0], "dof": 3}],
            "weights": [1.0]}))
