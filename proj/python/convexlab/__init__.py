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

"""Exact convex calculus, infimal convolution and monotropic duality checks.

All numbers cross the boundary exactly: pass ``int``, ``fractions.Fraction``
or ``"p/q"`` strings; results come back as ``Fraction`` (or ``math.inf``).
Floats are rejected.
"""

from pathlib import Path as _Path

from ._convexlab import (  # noqa: F401
    ConvexlabError,
    Function,
    condition_i_check,
    Instance,
    Region,
    conjugate,
    fn_sum,
    gallery_names,
    inf_conv_value,
    load_instance,
    loads_instance,
    run_gallery,
    set_data_dir,
    sum_eps_subdiffs,
    sum_rule_check,
)

_packaged = _Path(__file__).with_name("data")
if _packaged.is_dir():
    set_data_dir(str(_packaged))

__all__ = [
    "ConvexlabError",
    "Function",
    "Instance",
    "Region",
    "conjugate",
    "condition_i_check",
    "fn_sum",
    "gallery_names",
    "inf_conv_value",
    "load_instance",
    "loads_instance",
    "run_gallery",
    "sum_eps_subdiffs",
    "sum_rule_check",
]
