"""
Steenrod package: operations on Chern classes through the splitting
principle, and tabled operations on presented rings.
"""

from .splitting import (
    NotSymmetricError,
    SteenrodExpansion,
    SteenrodOperation,
    SymmetricExpansion,
    chern_algebra,
    conjugate,
    elementary_product_expansion,
    elementary_symmetric,
    power_op_on_chern,
    splitting_algebra,
    symmetric_to_elementary,
    total_operation,
    total_operation_component,
)
from .tables import InsufficientDataError, SteenrodTable, TableEntry, table_apply

__all__ = [
    "NotSymmetricError",
    "SteenrodExpansion",
    "SteenrodOperation",
    "SymmetricExpansion",
    "chern_algebra",
    "conjugate",
    "elementary_product_expansion",
    "elementary_symmetric",
    "power_op_on_chern",
    "splitting_algebra",
    "symmetric_to_elementary",
    "total_operation",
    "total_operation_component",
    "InsufficientDataError",
    "SteenrodTable",
    "TableEntry",
    "table_apply",
]
