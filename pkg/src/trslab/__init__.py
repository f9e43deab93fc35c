"""trslab: twisted Reed-Solomon covering radii, deep holes, and character sums."""

__version__ = "0.1.0"

from trslab.errors import BudgetExceeded, Falsification
from trslab.field import FieldCtx, enumerate_field, make_field, parse_field_spec

__all__ = [
    "BudgetExceeded",
    "Falsification",
    "FieldCtx",
    "enumerate_field",
    "make_field",
    "parse_field_spec",
    "__version__",
]
