"""Unitary units of Z[t, 1/t]/(n t - (2n+1) + n/t) and the disk counts they control."""

from .laurent import LaurentPoly, AlexanderPoly, delta_n, parse_poly, format_poly
from .lambda_ring import LambdaElement, embed, t_shift_class, class_representative
from .unitgroup import classify, classify_pm, disk_count, UnitGroupStructure
from .oracle import OracleConfig, run_oracle
from .knots import dk_table, five_crossing_table

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly", "AlexanderPoly", "delta_n", "parse_poly", "format_poly",
    "LambdaElement", "embed", "t_shift_class", "class_representative",
    "classify", "classify_pm", "disk_count", "UnitGroupStructure",
    "OracleConfig", "run_oracle", "dk_table", "five_crossing_table",
]
