from typing import Any, Optional


class FPError(ValueError):
    """Base class for every domain error raised by fp_walls"""


class WordParseError(FPError):
    def __init__(self, token: str, message: Optional[str] = None):
        self.token = token
        super().__init__(message or f"Cannot parse word token '{token}'")


class IndexOutOfRange(FPError):
    def __init__(self, index: int, n: int, token: Optional[str] = None):
        self.index = index
        self.n = n
        where = f" in token '{token}'" if token else ""
        super().__init__(f"Generator index {index} out of range 1..{n}{where}")


class NotInKernel(FPError):
    """The element does not have y-exponent zero"""

    def __init__(self, phi_value: int):
        self.phi_value = phi_value
        super().__init__(f"Element is not in the kernel of phi (phi = {phi_value})")


class BudgetExceeded(FPError):
    """A search ran out of budget; `partial` holds what was found so far"""

    def __init__(self, message: str, partial: Any = None):
        self.partial = partial
        super().__init__(message)


class ResourceLimit(FPError):
    def __init__(self, what: str, limit: int):
        self.limit = limit
        super().__init__(f"{what} exceeds the configured cap of {limit}")


class UnresolvedEdge(FPError):
    """Membership of an edge base in H_i could not be decided within budget"""

    def __init__(self, i: int, base: Any, membership: Any):
        self.i = i
        self.base = base
        self.membership = membership
        super().__init__(f"t{i}-edge at {base} is unresolved")


class PropertyViolation(FPError):
    """A checked mathematical property failed"""
