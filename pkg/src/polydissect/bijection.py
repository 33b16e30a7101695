"""Bijective encoding of type-B dissection faces.

A face with i diagonals maps to a pair (a, eps): `a` is the weakly increasing
tuple of the diagonals' initial-point labels and `eps` is a 0/1 vector with n
entries and i ones.  The encoding peels the polygon in n stages; each stage
locates the smallest initial point whose next m vertices (inside the current
subpolygon) carry no initial point, records whether the diagonal spanning
that window belongs to the face, then deletes the window and its mirror
image.  Decoding replays the same stages and draws the diagonal whenever its
eps entry is 1.  Both directions keep absolute vertex labels; the subpolygon
is just the set of not-yet-deleted positions.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .complexes import Face, face_from_diagonals, is_face
from .errors import InvalidImageError, MalformedFaceError
from .polygons import (
    FAMILY_B,
    KIND_DIAMETER,
    KIND_PAIR,
    Diagonal,
    PolygonParams,
    b_pair,
    chord,
    diameter,
    initial_label,
    initial_position,
)


@dataclass(frozen=True)
class BijectionImage:
    """Code word (a, eps) for a face with len(a) diagonals."""

    a: tuple[int, ...]
    eps: tuple[int, ...]


def _subpolygon_step(active: list[int], p: int, k: int) -> int:
    """Position k anticlockwise steps after p among the active positions."""
    idx = bisect_left(active, p)
    if idx >= len(active) or active[idx] != p:
        raise ValueError(f"position {p} is not active")
    return active[(idx + k) % len(active)]


def _check_b_face(face: Face) -> None:
    params = face.params
    if params.family != FAMILY_B:
        raise MalformedFaceError("the encoding is defined for family-B faces")
    for d in face.diagonals:
        try:
            if d.kind == KIND_DIAMETER:
                ok = diameter(params, d.canonical.a) == d
            elif d.kind == KIND_PAIR:
                ok = b_pair(params, d.canonical.a, d.canonical.b) == d
            else:
                ok = False
        except ValueError:
            ok = False
        if not ok:
            raise MalformedFaceError(f"{d} is not a valid diagonal of this polygon")
    if not is_face(face):
        raise MalformedFaceError("diagonals are not pairwise compatible")


def encode(face: Face) -> BijectionImage:
    """Map a face to its code word; raises MalformedFaceError on bad input."""
    _check_b_face(face)
    params = face.params
    m, n = params.m, params.n
    mirror = params.mirror

    work = face.sorted_diagonals()
    a_sorted = tuple(sorted(initial_label(d, params) for d in work))
    active = list(range(params.size))
    eps: list[int] = []

    for _stage in range(n):
        if not work:
            eps.append(0)
            continue
        starts = sorted({initial_position(d, params) for d in work})
        taken = set(starts) | {mirror(p) for p in starts}
        found = None
        for p in starts:
            window = [_subpolygon_step(active, p, k) for k in range(1, m + 1)]
            if not taken.intersection(window):
                found = (p, window)
                break
        if found is None:
            raise MalformedFaceError("no initial point has a free window; not a face")
        p, window = found
        q = _subpolygon_step(active, p, m + 1)
        if q == mirror(p):
            target = frozenset((chord(p, q),))
        else:
            target = frozenset((chord(p, q), chord(mirror(p), mirror(q))))
        hit = next((d for d in work if d.endpoint_chords(params) == target), None)
        if hit is None:
            eps.append(0)
        else:
            eps.append(1)
            work.remove(hit)
        removed = set(window) | {mirror(w) for w in window}
        for d in work:
            for c in d.constituents(params):
                if c.a in removed or c.b in removed:
                    raise MalformedFaceError(f"{d} touches a deleted vertex; not a face")
        active = [s for s in active if s not in removed]

    return BijectionImage(a_sorted, tuple(eps))


def decode(params: PolygonParams, a: tuple[int, ...], eps: tuple[int, ...]) -> Face:
    """Inverse of encode; raises InvalidImageError on a malformed code word."""
    if params.family != FAMILY_B:
        raise InvalidImageError("the encoding is defined for family B")
    m, n = params.m, params.n
    if len(eps) != n:
        raise InvalidImageError(f"eps must have {n} entries, got {len(eps)}")
    if any(e not in (0, 1) for e in eps):
        raise InvalidImageError(f"eps entries must be 0 or 1, got {eps!r}")
    if sum(eps) != len(a):
        raise InvalidImageError(f"eps has {sum(eps)} ones but a has {len(a)} entries")
    if any(not 1 <= x <= params.half for x in a):
        raise InvalidImageError(f"a entries must lie in 1..{params.half}, got {a!r}")
    if list(a) != sorted(a):
        raise InvalidImageError(f"a must be weakly increasing, got {a!r}")

    mirror = params.mirror
    pool = list(a)
    active = list(range(params.size))
    diagonals: list[Diagonal] = []

    for stage, e in enumerate(eps):
        if not pool:
            continue  # remaining eps entries are all 0 by the count check
        starts = sorted({x - 1 for x in pool})
        taken = set(starts) | {mirror(p) for p in starts}
        found = None
        for p in starts:
            window = [_subpolygon_step(active, p, k) for k in range(1, m + 1)]
            if not taken.intersection(window):
                found = (p, window)
                break
        if found is None:
            raise InvalidImageError(f"no eligible initial point at stage {stage + 1}")
        p, window = found
        if e == 1:
            q = _subpolygon_step(active, p, m + 1)
            try:
                d = diameter(params, p) if q == mirror(p) else b_pair(params, p, q)
            except ValueError as exc:
                raise InvalidImageError(f"stage {stage + 1} drew an invalid diagonal: {exc}")
            diagonals.append(d)
            pool.remove(p + 1)
        removed = set(window) | {mirror(w) for w in window}
        active = [s for s in active if s not in removed]

    face = face_from_diagonals(params, diagonals)
    if len(face.diagonals) != len(a) or not is_face(face):
        raise InvalidImageError("decoded diagonals do not form a face")
    return face
