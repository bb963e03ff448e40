import os

from .errors import InputError

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "QSS_BUDGET"

# Largest order enumerate_latin_squares accepts without an explicit override.
MAX_ENUM_ORDER = 5

DEFAULT_GF_SAMPLES = 100_000
DEFAULT_GF_SEED = 1


def resolve_budget(budget=None):
    """Return the effective budget: explicit value, then $QSS_BUDGET, then default."""
    if budget is not None:
        value = budget
    else:
        raw = os.environ.get(BUDGET_ENV)
        if raw is None or raw.strip() == "":
            return DEFAULT_BUDGET
        try:
            value = int(raw)
        except ValueError:
            raise InputError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InputError(f"budget must be positive, got {value}")
    return int(value)
