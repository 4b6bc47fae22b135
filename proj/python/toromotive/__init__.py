"""Poincare polynomials of toroidal compactifications and motivic decompositions of SL_1(D)."""

from ._toromotive import (
    ToromotiveError,
    chow_ring_sl1,
    chow_torsor,
    compactification_poincare,
    decompose,
    diagonal_pairs,
    flag_poincare,
    rost_polynomial,
    run_cli,
    sb_copy_count,
    severi_brauer_polynomial,
    subdivide,
    toric_poincare,
    validate_fan,
    weyl_chamber_fan,
)

__all__ = [
    "ToromotiveError",
    "chow_ring_sl1",
    "chow_torsor",
    "compactification_poincare",
    "decompose",
    "diagonal_pairs",
    "flag_poincare",
    "rost_polynomial",
    "run_cli",
    "sb_copy_count",
    "severi_brauer_polynomial",
    "subdivide",
    "toric_poincare",
    "validate_fan",
    "weyl_chamber_fan",
]
