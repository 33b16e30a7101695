"""Dissection complexes: faces are sets of pairwise compatible diagonals.

The complex is flag (a set of diagonals is a face exactly when its members
are pairwise compatible), so enumeration walks the compatibility graph in
canonical vertex order and never produces a face twice.  Facets of the
type-A complex have n-1 diagonals, facets of the type-B complex have n, and
each facet dissects the polygon into (m+2)-gons.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from . import counting
from .errors import ResourceLimitError
from .polygons import (
    FAMILY_A,
    KIND_DIAMETER,
    Chord,
    Diagonal,
    PolygonParams,
    all_diagonals,
    compatible,
)

DEFAULT_MAX_FACES = 10_000_000
MAX_FACES_ENV = "POLYDISSECT_MAX_FACES"


def max_faces_bound(explicit: int | None = None) -> int:
    if explicit is not None:
        return explicit
    raw = os.environ.get(MAX_FACES_ENV)
    return int(raw) if raw else DEFAULT_MAX_FACES


@dataclass(frozen=True)
class Face:
    """A face: a frozenset of pairwise compatible diagonals."""

    params: PolygonParams
    diagonals: frozenset[Diagonal]

    def sorted_diagonals(self) -> list[Diagonal]:
        return sorted(self.diagonals, key=lambda d: d.sort_key)

    def __len__(self) -> int:
        return len(self.diagonals)


@dataclass
class FaceTable:
    """All faces of a complex, listed per cardinality in canonical order."""

    params: PolygonParams
    vertices: list[Diagonal]
    by_cardinality: list[list[tuple[int, ...]]] = field(repr=False)

    def count(self, i: int) -> int:
        return len(self.by_cardinality[i]) if i < len(self.by_cardinality) else 0

    def f_vector(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.by_cardinality)

    def faces(self, i: int) -> list[Face]:
        return [self.face_from_indices(ix) for ix in self.by_cardinality[i]]

    def face_from_indices(self, indices: tuple[int, ...]) -> Face:
        return Face(self.params, frozenset(self.vertices[j] for j in indices))

    def facets(self) -> list[Face]:
        return self.faces(len(self.by_cardinality) - 1)


def face_from_diagonals(params: PolygonParams, diagonals) -> Face:
    return Face(params, frozenset(diagonals))


def is_face(face: Face) -> bool:
    """Pairwise compatibility test (the complex is flag)."""
    ds = face.sorted_diagonals()
    for i in range(len(ds)):
        for j in range(i + 1, len(ds)):
            if not compatible(ds[i], ds[j], face.params):
                return False
    return True


def enumerate_faces(
    params: PolygonParams,
    up_to: int | None = None,
    max_faces: int | None = None,
) -> FaceTable:
    """Backtracking enumeration of all faces with at most `up_to` diagonals.

    Faces are emitted in canonical order (vertices sorted by chord positions,
    faces extended only by higher-indexed vertices), so repeated runs produce
    identical tables.  Raises ResourceLimitError when the projected total
    face count exceeds the bound.
    """
    bound = max_faces_bound(max_faces)
    top = params.rank if up_to is None else min(up_to, params.rank)
    projected = sum(counting.count_faces(params, i) for i in range(top + 1))
    if projected > bound:
        raise ResourceLimitError(
            f"projected face count {projected} exceeds bound {bound}",
            projected=projected,
            bound=bound,
        )

    vertices = all_diagonals(params)
    v = len(vertices)
    compat = [[False] * v for _ in range(v)]
    for i in range(v):
        for j in range(i + 1, v):
            if compatible(vertices[i], vertices[j], params):
                compat[i][j] = compat[j][i] = True

    by_card: list[list[tuple[int, ...]]] = [[] for _ in range(top + 1)]
    by_card[0].append(())
    emitted = 1

    stack: list[int] = []

    def extend(start: int) -> None:
        nonlocal emitted
        if len(stack) == top:
            return
        for k in range(start, v):
            row = compat[k]
            if all(row[j] for j in stack):
                stack.append(k)
                emitted += 1
                if emitted > bound:
                    raise ResourceLimitError(
                        f"enumerated face count exceeded bound {bound}", bound=bound
                    )
                by_card[len(stack)].append(tuple(stack))
                extend(k + 1)
                stack.pop()

    extend(0)
    return FaceTable(params, vertices, by_card)


def facets(params: PolygonParams, max_faces: int | None = None) -> list[Face]:
    return enumerate_faces(params, max_faces=max_faces).facets()


def check_pure(table: FaceTable) -> Face | None:
    """Return a witness face contained in no facet, or None when pure."""
    top_sets = [set(ix) for ix in table.by_cardinality[-1]]
    for level in table.by_cardinality[:-1]:
        for ix in level:
            s = set(ix)
            if not any(s <= f for f in top_sets):
                return table.face_from_indices(ix)
    return None


def region_sizes(face: Face) -> list[int]:
    """Vertex counts of the planar regions cut out by the face's chords.

    The chords of a face never cross, so each chord splits its region in two;
    the sizes are computed by recursive splitting of the boundary cycle.
    Every facet must produce regions that are all (m+2)-gons.
    """
    params = face.params
    chords: list[Chord] = []
    for d in face.sorted_diagonals():
        chords.extend(d.constituents(params))

    def split(cycle: tuple[int, ...], pending: list[Chord]) -> list[int]:
        if not pending:
            return [len(cycle)]
        c = pending[0]
        pos = {p: i for i, p in enumerate(cycle)}
        ia, ib = pos[c.a], pos[c.b]
        if ia > ib:
            ia, ib = ib, ia
        side1 = cycle[ia : ib + 1]
        side2 = cycle[ib:] + cycle[: ia + 1]
        in1, in2 = set(side1), set(side2)
        rest1, rest2 = [], []
        for other in pending[1:]:
            # noncrossing chords fall entirely on one side; ties (shared
            # endpoints) resolve by whichever side contains both endpoints
            if other.a in in1 and other.b in in1 and not (other.a in in2 and other.b in in2):
                rest1.append(other)
            elif other.a in in2 and other.b in in2:
                rest2.append(other)
            else:
                raise ValueError(f"chord {other} crosses {c}; not a face")
        return split(side1, rest1) + split(side2, rest2)

    return sorted(split(tuple(range(params.size)), chords))


def facet_region_audit(face: Face) -> bool:
    """True when the face dissects the polygon entirely into (m+2)-gons."""
    want = face.params.m + 2
    return all(size == want for size in region_sizes(face))


def diameter_count(face: Face) -> int:
    return sum(1 for d in face.diagonals if d.kind == KIND_DIAMETER)


# -- bridge to the abstract simplicial engine --------------------------------


def abstract_facets(table: FaceTable) -> list[frozenset[int]]:
    """Facets as frozensets of canonical vertex indices."""
    return [frozenset(ix) for ix in table.by_cardinality[-1]]


def decomposition_priority(params: PolygonParams, vertices: list[Diagonal]) -> dict[int, int]:
    """Search hints for vertex decomposition, keyed by vertex index.

    A minimal diagonal cuts off an (m+2)-gon whose m interior corners sit at
    positions 1..m; diagonals incident to an earlier corner come first, those
    at the same corner ordered clockwise by their other endpoint.
    """
    m, size = params.m, params.size
    corners = list(range(1, m + 1))

    def endpoint_positions(d: Diagonal) -> set[int]:
        out: set[int] = set()
        for c in d.constituents(params):
            out.update(c)
        return out

    def key(idx_d: tuple[int, Diagonal]) -> tuple:
        idx, d = idx_d
        pts = endpoint_positions(d)
        for rank, corner in enumerate(corners):
            if corner in pts:
                others = [p for c in d.constituents(params) if corner in c for p in c if p != corner]
                clockwise = min((corner - p) % size for p in others)
                return (rank, clockwise, d.sort_key)
        return (len(corners), 0, d.sort_key)

    ranked = sorted(enumerate(vertices), key=key)
    return {idx: pos for pos, (idx, _d) in enumerate(ranked)}
