"""Shared exception types."""


class BudgetExceeded(RuntimeError):
    """An exhaustive scan was refused because its cost estimate exceeds the cap."""

    def __init__(self, estimate: int, cap: int, what: str = "operation"):
        self.estimate = int(estimate)
        self.cap = int(cap)
        self.what = what
        super().__init__(
            f"{what} refused: estimated {self.estimate} ops exceeds budget {self.cap} "
            f"(raise TRSLAB_BUDGET or pass max_ops to override)"
        )


class Falsification(RuntimeError):
    """A witness search whose success the classification guarantees came up empty.

    Raised loudly instead of returning an empty result: it means either the
    implementation or the classification is wrong.
    """
