"""Lightweight elementary-operation counter for scaling checks."""

from __future__ import annotations


class OpCounter:
    """Counts ring multiply-accumulate steps performed by an engine."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0

    def add(self, k: int = 1) -> None:
        self.count += k

    def __repr__(self) -> str:
        return f"OpCounter({self.count})"
