"""Finite descriptions of 2-complete abelian groups.

A group is a direct sum of summands, each either the 2-adic integers (encoded
as 0 and written Z2) or a cyclic 2-group of order a power of 2. The canonical
form lists 2-adic summands first, then cyclic orders in descending order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


class GroupDescriptorError(ValueError):
    pass


def _is_power_of_two(n: int) -> bool:
    return n >= 2 and (n & (n - 1)) == 0


@dataclass(frozen=True)
class GroupDescriptor:
    """Multiset of summands in canonical order; empty means the trivial group."""

    summands: tuple[int, ...]

    def __post_init__(self) -> None:
        for n in self.summands:
            if n != 0 and not _is_power_of_two(n):
                raise GroupDescriptorError(f"summand {n} is neither 0 (2-adics) nor a power of 2 >= 2")
        canon = tuple(sorted(self.summands, key=lambda n: (n != 0, -n)))
        object.__setattr__(self, "summands", canon)

    @classmethod
    def trivial(cls) -> GroupDescriptor:
        return cls(())

    @classmethod
    def z2adic(cls) -> GroupDescriptor:
        return cls((0,))

    @classmethod
    def cyclic(cls, order: int) -> GroupDescriptor:
        return cls((order,))

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> GroupDescriptor:
        return cls(tuple(orders))

    @property
    def is_trivial(self) -> bool:
        return not self.summands

    @property
    def order(self) -> int | None:
        """Total order; None when a 2-adic summand makes the group infinite."""
        total = 1
        for n in self.summands:
            if n == 0:
                return None
            total *= n
        return total

    def __str__(self) -> str:
        if not self.summands:
            return "0"
        return "+".join("Z2" if n == 0 else f"Z/{n}" for n in self.summands)


TRIVIAL_GROUP = GroupDescriptor.trivial()
Z2_ADIC = GroupDescriptor.z2adic()
Z_MOD_2 = GroupDescriptor.cyclic(2)
