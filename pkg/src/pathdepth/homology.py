"""Reduced simplicial homology ranks from boundary-matrix ranks.

Faces are variable-subset bitmasks.  The empty face (mask 0) sits in
dimension -1 and carries the augmentation, so the complex {∅} with no
vertices has H̃_{-1} of rank 1 and a void face list has no homology at
all.  These are the conventions Hochster's formula needs at small
multidegrees.
"""

from __future__ import annotations

import numpy as np

from .linalg import rank_bareiss, rank_mod_p


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _rank(matrix, field) -> int:
    if field.p is None:
        return rank_bareiss(matrix)
    return rank_mod_p(matrix, field.p)


def validate_closed(faces) -> None:
    """Raise if the face list is not closed under taking subsets."""
    face_set = set(faces)
    for f in face_set:
        m = f
        while m:
            low = m & -m
            if f ^ low not in face_set:
                raise ValueError(f"face list not downward closed at {bin(f)}")
            m ^= low


def boundary_matrix(lower: list[int], upper: list[int]) -> np.ndarray:
    """Signed boundary matrix from d-faces (upper) to (d-1)-faces (lower)."""
    index = {f: i for i, f in enumerate(lower)}
    mat = np.zeros((len(lower), len(upper)), dtype=np.int64)
    for j, f in enumerate(upper):
        sign = 1
        m = f
        while m:
            low = m & -m
            mat[index[f ^ low], j] = sign
            sign = -sign
            m ^= low
    return mat


def reduced_homology_ranks(faces, field, *, check_closed: bool = True) -> dict[int, int]:
    """Ranks of reduced homology H̃_d, d = -1..dim, over the given field."""
    face_list = sorted(set(faces))
    if check_closed:
        validate_closed(face_list)
    if not face_list:
        return {}
    by_dim: dict[int, list[int]] = {}
    for f in face_list:
        by_dim.setdefault(_popcount(f) - 1, []).append(f)
    top = max(by_dim)
    if -1 not in by_dim:
        # no empty face: treat the input as a void complex
        return {d: 0 for d in range(-1, top + 1)}
    ranks_d = {}  # rank of the boundary map out of dimension d
    for d in range(0, top + 1):
        lower = by_dim.get(d - 1, [])
        upper = by_dim.get(d, [])
        if not lower or not upper:
            ranks_d[d] = 0
        else:
            ranks_d[d] = _rank(boundary_matrix(lower, upper), field)
    out = {}
    for d in range(-1, top + 1):
        fd = len(by_dim.get(d, []))
        out[d] = fd - ranks_d.get(d, 0) - ranks_d.get(d + 1, 0)
    return out
