# __init__.py
#
# Copyright 2026 The psca Authors
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

"""Permutation sequence covering arrays from projective geometry.

Rows are lists of symbols 0..v-1. Large integers are returned as Python ints;
JSON reports keep integers above 2**53 as decimal strings.
"""

import json as _json

from ._core import (
    DifferenceSetError,
    GuardExceeded,
    NonPlanarDifferenceSet,
    NotADifferenceSet,
    PreconditionError,
    PscaFormatError,
    construct,
    coverage,
    default_threads,
    delete_symbols,
    is_prime_power,
    read_psca,
    singer_difference_set,
    upper_bound,
    validate_difference_set,
    verify,
    write_psca,
)
from . import _core

__all__ = [
    "DifferenceSetError",
    "GuardExceeded",
    "NonPlanarDifferenceSet",
    "NotADifferenceSet",
    "PreconditionError",
    "PscaFormatError",
    "construct",
    "coverage",
    "default_threads",
    "delete_symbols",
    "geometry",
    "is_prime_power",
    "pgl_order",
    "read_psca",
    "singer",
    "singer_difference_set",
    "thm2",
    "upper_bound",
    "validate_difference_set",
    "verify",
    "write_psca",
]

__version__ = "0.1.0"


def pgl_order(n, q):
    """Order of the projectivity group of PG(n, q)."""
    return int(_core.pgl_order(n, q))


def geometry(n, q):
    """Points (log-encoded coordinates, -1 for zero) and, for planes, lines."""
    return _json.loads(_core._geometry_json(n, q))


def singer(q):
    """Planar difference set mod q^2+q+1 and its translate lines."""
    return _json.loads(_core._singer_json(q))


def thm2(q, threads=1, max_group_size=10**9, difference_set=None):
    """Coverage of 4-sequences by the group acting on a cyclically labeled plane."""
    return _json.loads(_core._thm2_json(q, threads, max_group_size, difference_set))
