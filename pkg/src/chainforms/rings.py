"""Coefficient rings: Z and Z/m, the only two kinds used anywhere."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Ring:
    """modulus == 0 means the integers; otherwise Z/modulus, modulus >= 2."""

    modulus: int = 0

    def __post_init__(self):
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError(f"invalid modulus {self.modulus}")

    @property
    def is_integers(self) -> bool:
        return self.modulus == 0

    def reduce(self, x: int) -> int:
        return x % self.modulus if self.modulus else x

    def prime_power(self) -> tuple[int, int] | None:
        """(p, n) if modulus == p**n for a prime p, else None."""
        m = self.modulus
        if m < 2:
            return None
        p = 2
        while p * p <= m:
            if m % p == 0:
                n = 0
                while m % p == 0:
                    m //= p
                    n += 1
                return (p, n) if m == 1 else None
            p += 1
        return (m, 1)

    def __str__(self) -> str:
        return "Z" if self.is_integers else f"Z/{self.modulus}"


Z = Ring(0)
F2 = Ring(2)


def Zmod(m: int) -> Ring:
    return Ring(m)


def parse_ring(text: str) -> Ring:
    """CLI ring selector: 'z' or 'mod:<m>'."""
    t = text.strip().lower()
    if t == "z":
        return Z
    if t.startswith("mod:"):
        return Ring(int(t[4:]))
    raise ValueError(f"unknown ring selector {text!r} (use 'z' or 'mod:<m>')")
