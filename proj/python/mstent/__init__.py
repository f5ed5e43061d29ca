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
"""Shannon and Renyi entropies of multivariate skew-t laws and their mixtures."""

from ._mstent import (  # noqa: F401
    BoundsReport,
    Error,
    Estimate,
    FormulaReadings,
    Mixture,
    SkewT,
    digamma,
    example1,
    example2,
    is_renyi,
    log_gamma,
    mc_renyi,
    mc_shannon,
    parse_config,
    reg_inc_beta,
    renyi_bounds,
    renyi_large_alpha_approx,
    shannon_bounds,
    student_t_cdf,
    student_t_logpdf,
)

__version__ = "0.1.0"
