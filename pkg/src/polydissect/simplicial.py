"""Abstract simplicial complexes on opaque, sortable vertex identities.

A complex is stored by its facet antichain.  The module provides the face
operations (deletion, link, join, cone), a memoized search for vertex
decompositions, an independent certificate verifier, and the derivation of a
shelling order from a certificate together with a checker for the shelling
condition: each facet after the first must meet the union of its
predecessors in a nonempty pure complex of codimension one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Union

from .errors import NotAFaceError, ResourceLimitError, ShellingError

DEFAULT_MAX_STATES = 500_000


def _vkey(v) -> tuple[str, str]:
    return (v.__class__.__name__, repr(v))


def sort_vertices(items: Iterable) -> list:
    """Deterministic vertex order; falls back to a typed key when the values
    are not mutually comparable (e.g. after coning an int complex over a
    string apex)."""
    items = list(items)
    try:
        return sorted(items)
    except TypeError:
        return sorted(items, key=_vkey)


def sorted_facets(facets: Iterable[frozenset]) -> list[frozenset]:
    """Deterministic facet order: by cardinality, then vertex content."""
    facets = list(facets)
    try:
        return sorted(facets, key=lambda f: (len(f), tuple(sorted(f))))
    except TypeError:
        return sorted(
            facets, key=lambda f: (len(f), tuple(_vkey(v) for v in sort_vertices(f)))
        )


class AbstractComplex:
    """Finite simplicial complex given by its facets.

    Vertices may be any hashable, mutually sortable values (ints, strings).
    Faces passed to the constructor are closed downward implicitly: only the
    maximal ones are kept.  The void complex (no faces at all) has an empty
    facet tuple; the complex whose only face is empty has the single facet
    frozenset().
    """

    __slots__ = ("facets", "_vertices")

    def __init__(self, faces: Iterable[Iterable] = ()):
        sets = {frozenset(f) for f in faces}
        maximal = [f for f in sets if not any(f < g for g in sets)]
        self.facets: tuple[frozenset, ...] = tuple(sorted_facets(maximal))
        self._vertices: Optional[tuple] = None

    @property
    def vertices(self) -> tuple:
        if self._vertices is None:
            ground = set()
            for f in self.facets:
                ground |= f
            self._vertices = tuple(sort_vertices(ground))
        return self._vertices

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty-face complex, -2 for the void complex."""
        if not self.facets:
            return -2
        return max(len(f) for f in self.facets) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def impure_witness(self) -> Optional[frozenset]:
        """A facet of non-maximal cardinality, or None when pure."""
        if self.is_pure():
            return None
        top = max(len(f) for f in self.facets)
        return sorted_facets(f for f in self.facets if len(f) < top)[0]

    def has_face(self, face: Iterable) -> bool:
        s = frozenset(face)
        return any(s <= f for f in self.facets)

    def __eq__(self, other) -> bool:
        return isinstance(other, AbstractComplex) and set(self.facets) == set(other.facets)

    def __hash__(self):
        return hash(frozenset(self.facets))

    def __repr__(self) -> str:
        return f"AbstractComplex({len(self.facets)} facets, dim {self.dim})"


def deletion(complex_: AbstractComplex, cut: Iterable) -> AbstractComplex:
    """Subcomplex of faces disjoint from the vertex set `cut`."""
    cut = frozenset(cut)
    return AbstractComplex(f - cut for f in complex_.facets)


def link(complex_: AbstractComplex, face: Iterable) -> AbstractComplex:
    """Link of a face: all faces whose union with it is again a face."""
    s = frozenset(face)
    if not complex_.has_face(s):
        raise NotAFaceError(f"{set(s) or '{}'} is not a face")
    return AbstractComplex(f - s for f in complex_.facets if s <= f)


def join(c1: AbstractComplex, c2: AbstractComplex) -> AbstractComplex:
    """Join of complexes on disjoint ground sets."""
    overlap = set(c1.vertices) & set(c2.vertices)
    if overlap:
        raise ValueError(f"join needs disjoint ground sets; shared: {sort_vertices(overlap)}")
    return AbstractComplex(f1 | f2 for f1 in c1.facets for f2 in c2.facets)


def cone(complex_: AbstractComplex, apex) -> AbstractComplex:
    """Join with the single new vertex `apex`."""
    return join(complex_, AbstractComplex([[apex]]))


def faces_by_dimension(complex_: AbstractComplex) -> dict[int, list[tuple]]:
    """All faces, keyed by dimension, each list sorted; includes dim -1."""
    if not complex_.facets:
        return {}
    # one global vertex order keeps every subset's tuple form unique, even
    # when facets mix vertex types that are not mutually comparable
    order = {v: i for i, v in enumerate(complex_.vertices)}
    closure: set[tuple] = set()
    for f in complex_.facets:
        members = sorted(f, key=order.__getitem__)
        for k in range(len(members) + 1):
            closure.update(combinations(members, k))
    out: dict[int, list[tuple]] = {}
    for face in closure:
        out.setdefault(len(face) - 1, []).append(face)
    for level in out.values():
        level.sort(key=lambda face: tuple(order[v] for v in face))
    return out


# -- vertex decompositions ----------------------------------------------------


@dataclass(frozen=True)
class DecompositionLeaf:
    """Certificate for a complex with at most one facet."""


@dataclass(frozen=True)
class DecompositionNode:
    """Certificate step: shed `vertex`; `deletion` is None in the cone case."""

    vertex: object
    link: "Certificate"
    deletion: Optional["Certificate"]


Certificate = Union[DecompositionLeaf, DecompositionNode]


def _canonical_form(facets: list[frozenset]) -> tuple[tuple, dict]:
    """Facet tuple after dense re-indexing of vertices, plus the renaming map.

    Complexes that differ only by vertex names share a form, so memoized
    certificates must be renamed through the map on the way in and out.
    """
    row_list = [tuple(sort_vertices(f)) for f in facets]
    try:
        rows = sorted(row_list)
    except TypeError:
        rows = sorted(row_list, key=lambda row: tuple(_vkey(v) for v in row))
    index: dict = {}
    out = []
    for row in rows:
        for v in row:
            if v not in index:
                index[v] = len(index)
        out.append(tuple(sorted(index[v] for v in row)))
    return tuple(sorted(out)), index


def _rename(cert: "Certificate", mapping: dict) -> "Certificate":
    if isinstance(cert, DecompositionLeaf):
        return cert
    return DecompositionNode(
        mapping[cert.vertex],
        _rename(cert.link, mapping),
        None if cert.deletion is None else _rename(cert.deletion, mapping),
    )


def find_vertex_decomposition(
    complex_: AbstractComplex,
    priority: Optional[dict] = None,
    max_states: int = DEFAULT_MAX_STATES,
) -> Optional[Certificate]:
    """Search for a vertex decomposition; None when the complex has none.

    Candidate vertices are tried in `priority` order (missing vertices come
    last, in natural order).  Subproblems are memoized on their canonical
    key, successes and failures alike; the memo size is capped by
    `max_states`.
    """
    rank = priority or {}
    memo: dict[tuple, Optional[Certificate]] = {}
    leaf = DecompositionLeaf()

    def candidate_order(verts: Iterable) -> list:
        return sorted(sort_vertices(verts), key=lambda v: rank.get(v, len(rank)))

    def search(facets: list[frozenset]) -> Optional[Certificate]:
        if len(facets) <= 1:
            return leaf
        if len({len(f) for f in facets}) > 1:
            return None
        key, fwd = _canonical_form(facets)
        if key in memo:
            stored = memo[key]
            if stored is None:
                return None
            return _rename(stored, {c: a for a, c in fwd.items()})
        if len(memo) >= max_states:
            raise ResourceLimitError(
                f"decomposition search exceeded {max_states} memoized states",
                bound=max_states,
            )
        memo[key] = None

        # how many facets contain each codimension-1 face
        cover: dict[frozenset, int] = {}
        for f in facets:
            for v in f:
                sub = f - {v}
                cover[sub] = cover.get(sub, 0) + 1
        ground = set()
        for f in facets:
            ground |= f

        result: Optional[Certificate] = None
        for v in candidate_order(ground):
            inside = [f for f in facets if v in f]
            outside = [f for f in facets if v not in f]
            if outside and any(cover[f - {v}] == 1 for f in inside):
                continue  # deletion would be impure
            link_facets = [f - {v} for f in inside]
            cert_link = search(link_facets)
            if cert_link is None:
                continue
            if not outside:
                result = DecompositionNode(v, cert_link, None)
                break
            cert_del = search(outside)
            if cert_del is None:
                continue
            result = DecompositionNode(v, cert_link, cert_del)
            break

        memo[key] = None if result is None else _rename(result, fwd)
        return result

    return search(list(complex_.facets))


def verify_vertex_decomposition(complex_: AbstractComplex, cert: Certificate) -> bool:
    """Recompute every deletion and link named by the certificate and check
    purity and dimensions at each step."""
    if not complex_.is_pure():
        return False
    if isinstance(cert, DecompositionLeaf):
        return len(complex_.facets) <= 1
    if not isinstance(cert, DecompositionNode):
        return False
    v = cert.vertex
    if not complex_.has_face([v]):
        return False
    lk = link(complex_, [v])
    if cert.deletion is None:
        if any(v not in f for f in complex_.facets):
            return False
        return verify_vertex_decomposition(lk, cert.link)
    dl = deletion(complex_, [v])
    if not dl.facets or dl.dim != complex_.dim or lk.dim != complex_.dim - 1:
        return False
    return verify_vertex_decomposition(dl, cert.deletion) and verify_vertex_decomposition(
        lk, cert.link
    )


# -- shellings -----------------------------------------------------------------


@dataclass(frozen=True)
class ShellingOrder:
    """A verified shelling: facet order plus restriction set per facet."""

    facets: tuple[frozenset, ...]
    restrictions: tuple[frozenset, ...]

    def restriction_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for r in self.restrictions:
            hist[len(r)] = hist.get(len(r), 0) + 1
        return hist

    def h_vector(self, dim: int) -> tuple[int, ...]:
        hist = self.restriction_histogram()
        return tuple(hist.get(k, 0) for k in range(dim + 2))


def shelling_from_decomposition(
    complex_: AbstractComplex, cert: Certificate
) -> list[frozenset]:
    """Facet order induced by a decomposition: deleted part first, then the
    facets through the shed vertex in the order of its link's shelling."""
    if isinstance(cert, DecompositionLeaf):
        return list(complex_.facets)
    v = cert.vertex
    coned = [f | {v} for f in shelling_from_decomposition(link(complex_, [v]), cert.link)]
    if cert.deletion is None:
        return coned
    first = shelling_from_decomposition(deletion(complex_, [v]), cert.deletion)
    return first + coned


def verify_shelling(complex_: AbstractComplex, order: list[frozenset]) -> ShellingOrder:
    """Check the shelling condition; raises ShellingError at the first bad step.

    Returns the order with each facet's restriction set (its unique minimal
    new face).  The histogram of restriction sizes equals the h-vector of a
    pure shellable complex.
    """
    if not complex_.is_pure():
        raise ShellingError("complex is not pure", step=0)
    if len(order) != len(set(order)) or set(order) != set(complex_.facets):
        raise ShellingError("order is not a permutation of the facets", step=0)

    seen_subfaces: set[frozenset] = set()
    containing: dict[object, set[int]] = {}
    restrictions: list[frozenset] = []

    for j, facet in enumerate(order):
        if j == 0:
            restrictions.append(frozenset())
        else:
            rest = frozenset(v for v in facet if facet - {v} in seen_subfaces)
            if not rest:
                raise ShellingError(
                    f"facet {j + 1} meets the earlier facets only in codimension >= 2",
                    step=j + 1,
                )
            holders: Optional[set[int]] = None
            for v in rest:
                idxs = containing.get(v, set())
                holders = set(idxs) if holders is None else holders & idxs
                if not holders:
                    break
            if holders:
                bad = min(holders)
                raise ShellingError(
                    f"facet {j + 1} meets facet {bad + 1} outside its restriction faces",
                    step=j + 1,
                )
            restrictions.append(rest)
        for v in facet:
            seen_subfaces.add(facet - {v})
            containing.setdefault(v, set()).add(j)

    return ShellingOrder(tuple(order), tuple(restrictions))


# -- facet-list text format -----------------------------------------------------


def parse_facet_lines(text: str) -> AbstractComplex:
    """One facet per line, vertices as whitespace-separated string tokens."""
    facets = []
    for line in text.splitlines():
        tokens = line.split()
        if tokens:
            facets.append(tokens)
    return AbstractComplex(facets)


def format_facet_lines(complex_: AbstractComplex) -> str:
    lines = [" ".join(str(v) for v in sort_vertices(f)) for f in complex_.facets]
    return "\n".join(lines) + ("\n" if lines else "")
