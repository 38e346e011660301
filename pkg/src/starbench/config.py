"""Tunable limits shared by the constructors and scanners."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    """Resource caps applied at construction and scan time.

    element_cap: largest ring order build_ring will materialize.
    table_threshold: maximum number of table entries (order squared) to
        precompute; larger rings stay call-based with vectorized rows.
    scan_warn_order: rings above this order get a stderr note from the CLI
        before superquadratic scans start.
    family_cap: maximum number of distinct annihilator sets the family
        closure will collect before giving up.
    """

    element_cap: int = 10_000
    table_threshold: int = 4_000_000
    scan_warn_order: int = 2_500
    family_cap: int = 4_096

    def with_element_cap(self, cap: int) -> "Limits":
        return replace(self, element_cap=cap)


DEFAULT_LIMITS = Limits()
