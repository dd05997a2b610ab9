"""Base rings of scalars: the integers, or the integers modulo n."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Ring:
    """The coefficient ring.

    ``modulus == 0`` means the ring of integers; ``modulus == n >= 2`` means
    the integers modulo n.  Modular values are kept reduced into ``[0, n)``.
    """

    modulus: int = 0

    def __post_init__(self) -> None:
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError(
                f"ring modulus must be 0 (integers) or >= 2, got {self.modulus}"
            )

    @property
    def is_modular(self) -> bool:
        return self.modulus != 0

    def reduce(self, x: int) -> int:
        return x % self.modulus if self.modulus else x

    def __str__(self) -> str:
        return f"Z/{self.modulus}" if self.modulus else "Z"


#: The ring of integers.
ZZ = Ring(0)


def Zmod(n: int) -> Ring:
    """The ring of integers modulo ``n`` (requires ``n >= 2``)."""
    if n < 2:
        raise ValueError(f"integers mod n need n >= 2, got {n}")
    return Ring(n)
