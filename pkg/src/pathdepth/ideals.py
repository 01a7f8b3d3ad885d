"""Squarefree monomials and monomial ideals over a fixed set of variables.

A squarefree monomial in K[x_1..x_n] is identified with the subset of
variable indices it contains, stored as a bitmask: bit i-1 set means x_i
divides the monomial.  Mask 0 is the unit monomial 1.  Divisibility is
bitmask inclusion, gcd is bitwise AND, lcm is bitwise OR.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

# All engines enumerate subsets of [n]; keep the ambient size bounded.
MAX_AMBIENT = 24


def monomial(indices, n: int) -> int:
    """Bitmask of a squarefree monomial from 1-based variable indices."""
    mask = 0
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside 1..{n}")
        mask |= 1 << (i - 1)
    return mask


def monomial_vars(mask: int) -> tuple[int, ...]:
    """Sorted 1-based variable indices of a monomial bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def divides(u: int, v: int) -> bool:
    """True iff monomial u divides monomial v."""
    return u & v == u


def check_ambient(n: int) -> None:
    if not 1 <= n <= MAX_AMBIENT:
        raise ValueError(f"ambient variable count {n} outside 1..{MAX_AMBIENT}")


def check_monomial(mask: int, n: int) -> None:
    if mask < 0 or mask >> n:
        raise ValueError(f"monomial {bin(mask)} uses variables outside 1..{n}")


def _minimal_masks(masks, n: int) -> tuple[int, ...]:
    """Divisibility-antichain of a collection of monomial bitmasks."""
    uniq = set(masks)
    for m in uniq:
        check_monomial(m, n)
    if 0 in uniq:
        return (0,)
    kept = [m for m in uniq
            if not any(o != m and divides(o, m) for o in uniq)]
    return tuple(sorted(kept, key=monomial_vars))


@dataclass(frozen=True)
class VarPermutation:
    """A bijection on variable indices {1..n}; images[i-1] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError("images must be a bijection on 1..n")

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "VarPermutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def rotation(cls, n: int, shift: int = 1) -> "VarPermutation":
        return cls(tuple((i - 1 + shift) % n + 1 for i in range(1, n + 1)))

    @classmethod
    def reflection(cls, n: int) -> "VarPermutation":
        return cls(tuple(n + 1 - i for i in range(1, n + 1)))

    def apply(self, mask: int) -> int:
        out = 0
        for i in range(1, self.n + 1):
            if mask >> (i - 1) & 1:
                out |= 1 << (self.images[i - 1] - 1)
        return out

    def after(self, other: "VarPermutation") -> "VarPermutation":
        """Composition self∘other: apply other first, then self."""
        if self.n != other.n:
            raise ValueError("permutation size mismatch")
        return VarPermutation(tuple(self.images[other.images[i - 1] - 1]
                                    for i in range(1, self.n + 1)))


@dataclass(frozen=True)
class MonomialIdeal:
    """A squarefree monomial ideal given by its minimal generators.

    ``gens`` is always a divisibility antichain, normalised on construction.
    The zero ideal has no generators; the whole ring is generated by the
    unit monomial (mask 0).
    """

    n: int
    gens: tuple[int, ...] = field(default=())

    def __post_init__(self):
        check_ambient(self.n)
        object.__setattr__(self, "gens", _minimal_masks(self.gens, self.n))

    # -- constructors -------------------------------------------------

    @classmethod
    def from_vars(cls, n: int, gens) -> "MonomialIdeal":
        return cls(n, tuple(monomial(g, n) for g in gens))

    @classmethod
    def zero(cls, n: int) -> "MonomialIdeal":
        return cls(n, ())

    @classmethod
    def whole_ring(cls, n: int) -> "MonomialIdeal":
        return cls(n, (0,))

    # -- predicates ---------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_whole_ring(self) -> bool:
        return self.gens == (0,)

    @property
    def is_proper(self) -> bool:
        return not self.is_whole_ring

    def contains(self, mask: int) -> bool:
        """Ideal membership of a squarefree monomial."""
        check_monomial(mask, self.n)
        return any(divides(g, mask) for g in self.gens)

    def support(self) -> int:
        """Union of the variables occurring in the generators."""
        out = 0
        for g in self.gens:
            out |= g
        return out

    # -- operations ---------------------------------------------------

    def colon(self, u: int) -> "MonomialIdeal":
        """The colon ideal (I : u)."""
        check_monomial(u, self.n)
        return MonomialIdeal(self.n, tuple(g & ~u for g in self.gens))

    def add_generator(self, u: int) -> "MonomialIdeal":
        """The sum (I, u)."""
        check_monomial(u, self.n)
        return MonomialIdeal(self.n, self.gens + (u,))

    def relabel(self, p: VarPermutation) -> "MonomialIdeal":
        """Image of the ideal under a variable permutation."""
        if p.n != self.n:
            raise ValueError("permutation size must match ambient n")
        return MonomialIdeal(self.n, tuple(p.apply(g) for g in self.gens))

    def same_ambient(self, other: "MonomialIdeal") -> None:
        if self.n != other.n:
            raise ValueError("ambient variable counts differ")

    # -- serialisation ------------------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "gens": [list(monomial_vars(g)) for g in self.gens]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "MonomialIdeal":
        return cls.from_vars(int(data["n"]), data["gens"])

    @classmethod
    def from_json(cls, text: str) -> "MonomialIdeal":
        return cls.from_dict(json.loads(text))

    def __str__(self):
        if self.is_zero:
            return f"(0) in S[{self.n}]"
        names = ["*".join(f"x{i}" for i in monomial_vars(g)) or "1"
                 for g in self.gens]
        return f"({', '.join(names)}) in S[{self.n}]"


def minimalize(monomials, n: int) -> MonomialIdeal:
    """Ideal generated by the given monomial bitmasks, minimally presented."""
    return MonomialIdeal(n, tuple(monomials))
