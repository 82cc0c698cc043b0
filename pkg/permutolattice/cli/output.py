from typing import TextIO

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


def fail(err: TextIO, kind: str, message: str = "") -> None:
    """First line `error: <kind>`, then the human-readable message."""
    print(f"error: {kind}", file=err)
    if message:
        print(message, file=err)
