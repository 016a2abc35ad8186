"""Collects one verdict per acceptance criterion for the terminal summary."""

RESULTS: dict[int, tuple[bool, str]] = {}


def note_criterion(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (bool(ok), detail)
