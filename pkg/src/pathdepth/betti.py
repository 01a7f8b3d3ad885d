"""Multigraded Betti numbers, projective dimension and depth of S/I.

The main route is Hochster's formula: β_{i,σ}(S/I) is the rank of reduced
homology in degree |σ|-i-1 of the Stanley-Reisner complex of I restricted
to σ.  An independent Taylor-complex route computes the same numbers from
the multigraded strands of the Taylor resolution and serves as an oracle.
Depth comes out of the Auslander-Buchsbaum identity depth = n - pd.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .ideals import MonomialIdeal, monomial_vars, divides
from .homology import reduced_homology_ranks
from .linalg import rank_bareiss, rank_mod_p

HOCHSTER_MAX_N = 16
TAYLOR_MAX_GENS = 12


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: rationals (p=None) or the prime field GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


RATIONALS = Field()
GF2 = Field(2)


@dataclass(frozen=True)
class BettiTable:
    """Nonzero multigraded Betti numbers β_{i,σ} of S/I."""

    n: int
    entries: tuple[tuple[int, int, int], ...]  # (i, sigma mask, beta), sorted

    @classmethod
    def from_dict(cls, n: int, data: dict[tuple[int, int], int]) -> "BettiTable":
        items = tuple(sorted((i, s, b) for (i, s), b in data.items() if b))
        return cls(n, items)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return {(i, s): b for i, s, b in self.entries}

    def beta(self, i: int, sigma: int) -> int:
        return self.as_dict().get((i, sigma), 0)

    def projective_dimension(self) -> int:
        return max((i for i, _, _ in self.entries), default=0)

    def total(self, i: int) -> int:
        return sum(b for j, _, b in self.entries if j == i)

    def rows(self):
        """(i, sorted variable tuple, beta) rows, sorted for stable output."""
        return [(i, monomial_vars(s), b) for i, s, b in self.entries]


def _restricted_faces(sigma: int, gens_in: list[int]) -> list[int]:
    faces = []
    sub = sigma
    while True:
        if not any(divides(g, sub) for g in gens_in):
            faces.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & sigma
    return faces


@lru_cache(maxsize=4096)
def hochster_betti(ideal: MonomialIdeal, field: Field = RATIONALS) -> BettiTable:
    """All multigraded Betti numbers of S/I via Hochster's formula."""
    if ideal.is_whole_ring:
        raise ValueError("S/S is the zero module; no Betti table")
    if ideal.n > HOCHSTER_MAX_N:
        raise ValueError(f"ambient n={ideal.n} exceeds cap {HOCHSTER_MAX_N}")
    n = ideal.n
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    for sigma in range(1, 1 << n):
        gens_in = [g for g in ideal.gens if divides(g, sigma)]
        if not gens_in:
            continue
        covered = 0
        for g in gens_in:
            covered |= g
        if covered != sigma:
            # some vertex of sigma is a cone point: no reduced homology
            continue
        faces = _restricted_faces(sigma, gens_in)
        ranks = reduced_homology_ranks(faces, field, check_closed=False)
        size = bin(sigma).count("1")
        for d, r in ranks.items():
            if r:
                entries[(size - 1 - d, sigma)] = r
    return BettiTable.from_dict(n, entries)


def taylor_betti(ideal: MonomialIdeal, field: Field = RATIONALS) -> BettiTable:
    """Betti numbers from the multigraded strands of the Taylor complex."""
    if ideal.is_whole_ring:
        raise ValueError("S/S is the zero module; no Betti table")
    gens = ideal.gens
    if len(gens) > TAYLOR_MAX_GENS:
        raise ValueError(f"{len(gens)} generators exceed cap {TAYLOR_MAX_GENS}")
    r = len(gens)
    # group generator subsets by their lcm multidegree
    strands: dict[int, dict[int, list[int]]] = {}
    for fset in range(1 << r):
        deg = 0
        for t in range(r):
            if fset >> t & 1:
                deg |= gens[t]
        strands.setdefault(deg, {}).setdefault(bin(fset).count("1"), []).append(fset)
    entries: dict[tuple[int, int], int] = {}
    rank = rank_bareiss if field.p is None else (lambda m: rank_mod_p(m, field.p))
    for deg, by_size in strands.items():
        top = max(by_size)
        ranks_i = {}
        for i in range(1, top + 1):
            lower = by_size.get(i - 1, [])
            upper = by_size.get(i, [])
            if not lower or not upper:
                ranks_i[i] = 0
                continue
            index = {f: k for k, f in enumerate(lower)}
            mat = np.zeros((len(lower), len(upper)), dtype=np.int64)
            for j, fset in enumerate(upper):
                sign = 1
                m = fset
                while m:
                    low = m & -m
                    tgt = fset ^ low
                    if tgt in index:  # lcm must stay equal to deg
                        mat[index[tgt], j] = sign
                    sign = -sign
                    m ^= low
            ranks_i[i] = rank(mat)
        for i in range(0, top + 1):
            ci = len(by_size.get(i, []))
            h = ci - ranks_i.get(i, 0) - ranks_i.get(i + 1, 0)
            if h:
                entries[(i, deg)] = h
    return BettiTable.from_dict(ideal.n, entries)


def projective_dimension(ideal: MonomialIdeal, field: Field = RATIONALS) -> int:
    """Largest homological degree with a nonzero Betti number."""
    return hochster_betti(ideal, field).projective_dimension()


def depth_quotient(ideal: MonomialIdeal, field: Field = RATIONALS) -> int:
    """depth(S/I) through the Auslander-Buchsbaum identity n - pd."""
    return ideal.n - projective_dimension(ideal, field)
