"""Plain-text renderings used by the command line."""

from typing import Optional

from ..core.geometry import Arrangement
from ..core.perm import format_permutation
from ..core.results import CheckResult
from ..utils.helpers import format_rational


def format_regions(arrangement: Arrangement) -> str:
    """`<sign-vector> <witness coords> <perm>` per region; '.' is the empty sign vector."""
    out = []
    for r in arrangement.regions:
        coords = " ".join(format_rational(v) for v in r.witness)
        out.append(f"{r.signs or '.'} {coords} {format_permutation(r.perm)}")
    return "\n".join(out) + "\n"


def format_hyperplanes(arrangement: Arrangement) -> str:
    out = []
    for h in arrangement.hyperplanes:
        pairs = " ".join(f"({i},{j})" for i, j in h.pairs)
        out.append(f"{h} pairs {pairs}")
    return "".join(line + "\n" for line in out)


def format_check(name: Optional[str], result: CheckResult) -> str:
    """`[name ]ok` or `[name ]counterexample <a> <b> key=value ...`."""
    prefix = f"{name} " if name else ""
    if result.ok:
        return f"{prefix}ok"
    parts = [prefix + "counterexample"]
    if result.pair is not None:
        parts.extend(str(item) for item in result.pair)
    for key, value in result.data.items():
        parts.append(f"{key}={'unreachable' if value is None else value}")
    return " ".join(parts)
