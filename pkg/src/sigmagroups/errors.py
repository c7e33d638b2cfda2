"""Shared error types and capacity limits."""
from __future__ import annotations

from dataclasses import dataclass


class GroupInputError(ValueError):
    """Malformed input: bad cycle text, degree mismatch, non-member generator, ..."""


class CapacityError(RuntimeError):
    """A configured resource bound was exceeded; the message names the bound."""


@dataclass(frozen=True)
class Limits:
    """Resource bounds for the element cache, lattice search and Hall-set products."""

    element_cache_bound: int = 20000
    subgroup_bound: int = 2000
    hall_set_cap: int = 100000
    partition_prime_cap: int = 4


DEFAULT_LIMITS = Limits()
