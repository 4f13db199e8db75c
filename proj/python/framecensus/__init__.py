# Copyright 2026 The framecensus Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact counting and classification of cyclic harmonic frames.

Subsets of Z_n are passed as lists of residues. Big counts come back as
Python ints and the asymptotic constant as a ``fractions.Fraction``.
"""

from ._core import (
    CatalogParseError,
    CensusReport,
    SearchBudgetExceeded,
    affine_canonical,
    asymptotic_a,
    burnside_m,
    burnside_p,
    count_generating,
    divisors,
    euler_phi,
    fix_count_affine,
    fix_count_mult,
    hall_eulerian,
    import_catalog,
    is_exceptional,
    is_lifted,
    is_real,
    moebius,
    mult_canonical,
    mult_witness,
    prime_lifted,
    prime_real,
    prime_unlifted,
    run_census,
    units,
    unitary_witness,
    verify,
    verify_tight,
)

__version__ = "1.0.0"
__all__ = [name for name in dir() if not name.startswith("_")]
