"""Face enumeration against closed forms and a brute-force clique oracle."""

from itertools import combinations

import pytest

from polydissect import counting
from polydissect.complexes import (
    DEFAULT_MAX_FACES,
    MAX_FACES_ENV,
    Face,
    abstract_facets,
    check_pure,
    decomposition_priority,
    diameter_count,
    enumerate_faces,
    face_from_diagonals,
    facet_region_audit,
    facets,
    is_face,
    max_faces_bound,
    region_sizes,
)
from polydissect.errors import ResourceLimitError
from polydissect.polygons import (
    FAMILY_A,
    FAMILY_B,
    PolygonParams,
    all_diagonals,
    b_pair,
    compatible,
    diameter,
)

SMALL_GRID = [
    (fam, m, n)
    for fam in (FAMILY_A, FAMILY_B)
    for m in (1, 2, 3)
    for n in (1, 2, 3)
]


def brute_force_f_vector(params):
    """All pairwise-compatible diagonal subsets, by exhaustive subset search."""
    diags = all_diagonals(params)
    counts = [1]
    size = 1
    while True:
        level = 0
        for combo in combinations(diags, size):
            if all(
                compatible(d1, d2, params) for d1, d2 in combinations(combo, 2)
            ):
                level += 1
        if level == 0:
            break
        counts.append(level)
        size += 1
    return tuple(counts)


def test_vertex_counts():
    assert len(all_diagonals(PolygonParams(FAMILY_A, 1, 3))) == 5
    assert len(all_diagonals(PolygonParams(FAMILY_B, 1, 2))) == 6
    assert len(all_diagonals(PolygonParams(FAMILY_A, 3, 1))) == 0


@pytest.mark.parametrize(
    "fam,m,n",
    [(FAMILY_A, 1, 3), (FAMILY_A, 2, 3), (FAMILY_A, 3, 2), (FAMILY_B, 1, 2), (FAMILY_B, 2, 2)],
)
def test_enumeration_matches_brute_force(fam, m, n):
    params = PolygonParams(fam, m, n)
    assert enumerate_faces(params).f_vector() == brute_force_f_vector(params)


@pytest.mark.parametrize("fam,m,n", SMALL_GRID)
def test_enumeration_matches_closed_form(fam, m, n):
    params = PolygonParams(fam, m, n)
    assert enumerate_faces(params).f_vector() == counting.f_vector(params)


@pytest.mark.parametrize("fam,m,n", SMALL_GRID)
def test_complex_is_pure(fam, m, n):
    params = PolygonParams(fam, m, n)
    assert check_pure(enumerate_faces(params)) is None


def test_empty_complex_edge_case():
    table = enumerate_faces(PolygonParams(FAMILY_A, 3, 1))
    assert table.f_vector() == (1,)
    assert table.facets() == [Face(table.params, frozenset())]
    assert check_pure(table) is None


def test_up_to_truncates_enumeration():
    params = PolygonParams(FAMILY_B, 2, 3)
    table = enumerate_faces(params, up_to=1)
    assert table.f_vector() == counting.f_vector(params)[:2]


def test_region_sizes_of_empty_face_is_whole_polygon():
    params = PolygonParams(FAMILY_A, 2, 3)
    assert region_sizes(Face(params, frozenset())) == [8]


def test_region_sizes_of_a_facet():
    params = PolygonParams(FAMILY_A, 1, 3)
    facet = facets(params)[0]
    assert sorted(region_sizes(facet)) == [3, 3, 3]


@pytest.mark.parametrize("fam,m,n", SMALL_GRID)
def test_every_facet_dissects_into_minimal_cells(fam, m, n):
    params = PolygonParams(fam, m, n)
    for facet in enumerate_faces(params).facets():
        assert facet_region_audit(facet)
        sizes = region_sizes(facet)
        assert all(s == m + 2 for s in sizes)


@pytest.mark.parametrize("m,n", [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)])
def test_every_b_facet_has_exactly_one_diameter(m, n):
    params = PolygonParams(FAMILY_B, m, n)
    table = enumerate_faces(params)
    for facet in table.facets():
        assert diameter_count(facet) == 1
    for i in range(params.rank + 1):
        for face in table.faces(i):
            assert diameter_count(face) <= 1


def test_interior_face_region_sizes_are_valid_cells():
    params = PolygonParams(FAMILY_B, 2, 3)
    for face in enumerate_faces(params).faces(1):
        for s in region_sizes(face):
            assert s % 2 == 2 % 2 and s >= 4  # every cell stays 2 mod m

def test_is_face_rejects_crossing_diagonals():
    params = PolygonParams(FAMILY_B, 1, 2)
    crossing = face_from_diagonals(params, [b_pair(params, 0, 2), diameter(params, 1)])
    assert not is_face(crossing)
    fine = face_from_diagonals(params, [b_pair(params, 0, 2), diameter(params, 0)])
    assert is_face(fine)


def test_enumeration_is_deterministic():
    params = PolygonParams(FAMILY_B, 2, 2)
    t1 = enumerate_faces(params)
    t2 = enumerate_faces(params)
    assert t1.vertices == t2.vertices
    assert t1.by_cardinality == t2.by_cardinality


def test_projected_count_guard_raises_before_enumerating():
    params = PolygonParams(FAMILY_B, 3, 4)
    with pytest.raises(ResourceLimitError) as err:
        enumerate_faces(params, max_faces=100)
    assert err.value.projected == 4239
    assert err.value.bound == 100


def test_max_faces_env_override(monkeypatch):
    monkeypatch.setenv(MAX_FACES_ENV, "7")
    assert max_faces_bound(None) == 7
    with pytest.raises(ResourceLimitError):
        enumerate_faces(PolygonParams(FAMILY_B, 1, 2))
    monkeypatch.setenv(MAX_FACES_ENV, "not a number")
    with pytest.raises(ValueError):
        max_faces_bound(None)
    monkeypatch.delenv(MAX_FACES_ENV)
    assert max_faces_bound(None) == DEFAULT_MAX_FACES
    assert max_faces_bound(123) == 123


def test_abstract_facets_reference_vertex_indices():
    params = PolygonParams(FAMILY_B, 1, 2)
    table = enumerate_faces(params)
    afs = abstract_facets(table)
    assert len(afs) == 6
    assert all(len(f) == 2 for f in afs)
    union = set()
    for f in afs:
        union |= f
    assert union == set(range(len(table.vertices)))


def test_decomposition_priority_covers_all_vertices_and_prefers_corners():
    params = PolygonParams(FAMILY_A, 2, 3)
    table = enumerate_faces(params)
    prio = decomposition_priority(params, table.vertices)
    assert set(prio) == set(range(len(table.vertices)))
    best = min(prio, key=prio.get)
    c = table.vertices[best].canonical
    assert {c.a, c.b} & {1, 2}  # touches the corner cell cut off by {0, 3}
