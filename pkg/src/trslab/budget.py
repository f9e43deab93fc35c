"""Operation budgets for the exhaustive scans.

Every potentially explosive enumeration estimates its cost up front and
refuses with BudgetExceeded (carrying the estimate) instead of running
open-ended.  The env var TRSLAB_BUDGET overrides the default cap; an
explicit max_ops argument overrides both.
"""

from __future__ import annotations

import os

DEFAULT_SCAN_BUDGET = 1 << 33  # deep-hole subset scans: classes * subsets * r^2
DEFAULT_COVERING_BUDGET = 1 << 26  # covering radius: q^(n-k) cosets * q^k codewords
ERROR_DISTANCE_CAP = 1 << 22  # codeword enumeration bound q^k (fixed)


def resolve(max_ops: int | None, default: int) -> int:
    if max_ops is not None:
        return int(max_ops)
    env = os.environ.get("TRSLAB_BUDGET")
    if env:
        return int(env)
    return default
