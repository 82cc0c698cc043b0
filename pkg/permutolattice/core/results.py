from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of a verification: `ok`, or the first counterexample found.
    `pair` holds the two offending items (permutations, regions, points),
    `data` the numbers that witness the failure.
    """
    ok: bool
    pair: Optional[Tuple[Any, Any]] = None
    detail: str = ""
    data: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, detail: str = "") -> "CheckResult":
        return cls(True, None, detail)

    @classmethod
    def failed(cls, pair, detail: str, **data) -> "CheckResult":
        return cls(False, tuple(pair) if pair is not None else None, detail, dict(data))
