"""Exception types shared by every module.

The CLI maps these onto exit codes: input errors are 2, budget errors are 3.
A property that simply does not hold is never an exception.
"""


class QSSError(Exception):
    """Base class for toolkit errors."""


class InputError(QSSError, ValueError):
    """Malformed or out-of-range input (bad table, bad map, order mismatch)."""


class PreconditionError(InputError):
    """Input is well formed but violates an operation's precondition."""


class BudgetExceeded(QSSError, RuntimeError):
    """A search or enumeration would exceed its configured budget.

    ``partial`` carries whatever was computed before the budget ran out.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
