"""Girth and cogirth of low-rank perturbations of graphic matroids over GF(2).

Matrices are lists of row strings ("0101"), graphs are a vertex count plus
(id, u, v) edge triples, parity classes are bitmasks with bit i =
coordinate i, and infinite sizes come back as float('inf').
"""

from ._core import (
    CogirthResult,
    cogirth,
    cogirth_oracle,
    cogirth_oracle_witness,
    gen_perturbed,
    girth,
    girth_oracle,
    girth_oracle_witness,
    mat_add,
    mat_rank,
    min_even_cut_dim,
    min_even_cut_set,
    parity_cycle,
    parity_join,
    parity_matching,
    parity_walk,
    selftest,
)

__all__ = [
    "CogirthResult",
    "cogirth",
    "cogirth_oracle",
    "cogirth_oracle_witness",
    "gen_perturbed",
    "girth",
    "girth_oracle",
    "girth_oracle_witness",
    "mat_add",
    "mat_rank",
    "min_even_cut_dim",
    "min_even_cut_set",
    "parity_cycle",
    "parity_join",
    "parity_matching",
    "parity_walk",
    "selftest",
]

try:
    from ._core import __version__
except ImportError:  # pragma: no cover - version macro absent in dev builds
    __version__ = "0.0.0"
