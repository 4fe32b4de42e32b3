"""Resource caps for the exact enumeration kernels.

All scans are exhaustive within these gates and raise ResourceLimitError
beyond them; nothing is ever sampled silently.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ResourceCaps:
    # admissibility: path basis must stabilize at some length below this
    length_cap: int = 32
    # paths enumerated while building the algebra basis
    path_count_cap: int = 20000
    # per-vertex bound allowed for universe enumeration
    dim_bound_cap: int = 8
    # raw arrow-matrix tuples scanned per dimension vector
    candidate_cap: int = 1 << 20
    # submodule oracle gate: total dimension of the scanned module
    submodule_dim_cap: int = 12
    # ext scans enumerate all q^d classes only while d stays below this
    ext_dim_cap: int = 12
    # and while q^d stays below this element count
    scan_count_cap: int = 1 << 16
    # retries for seeded random searches before exhaustion / undetermined
    random_tries: int = 64
    # universe size gate for the torsion-class subset scan
    lattice_indec_cap: int = 24


DEFAULT_CAPS = ResourceCaps()
