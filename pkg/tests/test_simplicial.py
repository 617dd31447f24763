"""Simplicial complexes: construction, links, joins, pseudomanifold tests."""

import pytest

from posurf import (
    DomainError,
    ParseError,
    SimplicialComplex,
    annulus,
    disk,
    icosahedron,
    is_isomorphic,
    is_k_surface,
    local_sets,
    pinched_box,
    pinched_sphere,
    read_facets,
    restrict,
    simplicial_join,
    solid_simplex,
    sphere,
    write_facets,
)

from .conftest import (
    octahedron,
    path_complex,
    three_triangles_shared_edge,
    two_triangles_shared_vertex,
)
from . import oracles


# ---------------------------------------------------------------------------
# construction


def test_from_facets_triangle():
    k = SimplicialComplex.from_facets([{1, 2, 3}])
    assert len(k) == 7
    assert k.faces == tuple(sorted(oracles.powerset_nonempty({1, 2, 3}), key=lambda s: (len(s), tuple(sorted(s)))))
    assert k.dim == 2


def test_from_facets_sphere2_counts():
    k = sphere(2)
    assert len(k) == 14
    assert k.f_vector() == (4, 6, 4)


def test_two_isolated_vertices():
    k = SimplicialComplex.from_facets([{1}, {2}])
    assert len(k) == 2 and k.dim == 0


def test_empty_complex():
    k = SimplicialComplex.from_facets([])
    assert len(k) == 0 and k.dim == -1
    assert k.face_poset().rank() == -1


def test_empty_facet_rejected():
    with pytest.raises(DomainError):
        SimplicialComplex.from_facets([[]])


def test_closure_validated():
    with pytest.raises(DomainError):
        SimplicialComplex([(1, 2)])  # missing vertices


def test_intersection_closed(complexes):
    for name, k in complexes:
        faces = set(k.faces)
        for f in faces:
            for g in faces:
                inter = f & g
                if inter:
                    assert inter in faces, name


# ---------------------------------------------------------------------------
# face poset bridge


def test_face_poset_edge():
    p = solid_simplex(1).face_poset()
    assert len(p) == 3
    assert p.cover_lists == ((), (), (0, 1))


def test_face_poset_rank_equals_dimension(complexes):
    for name, k in complexes:
        p = k.face_poset()
        for f in k.faces:
            assert p.face_ranks[k.face_id(f)] == len(f) - 1, name


def test_face_poset_triangle_boundary_is_hexagon():
    v = is_k_surface(sphere(1).face_poset())
    assert v.is_surface and v.rank == 1


# ---------------------------------------------------------------------------
# links


def test_link_of_vertex_in_triangle():
    k = solid_simplex(2)
    lk = k.link({0})
    assert set(lk.faces) == {frozenset({1}), frozenset({2}), frozenset({1, 2})}


def test_link_of_vertex_in_sphere2_is_cycle():
    k = sphere(2)
    lk = k.link({0})
    v = is_k_surface(lk.face_poset())
    assert v.is_surface and v.rank == 1
    assert lk.f_vector() == (3, 3)


def test_link_of_pinch_vertex_is_two_cycles():
    k = pinched_sphere()
    lk = k.link({0})
    assert lk.f_vector() == (10, 10)
    from posurf import connected_components

    comps = connected_components(lk.face_poset())
    assert len(comps) == 2
    for c in comps:
        assert len(c) == 10  # 5 vertices + 5 edges


def test_link_unknown_face():
    with pytest.raises(DomainError):
        sphere(1).link({9})


def test_link_coface_isomorphism(complexes):
    for name, k in complexes:
        p = k.face_poset()
        for f in k.faces:
            h = k.face_id(f)
            beta = restrict(p, sorted(local_sets(p, h, "beta")))
            assert is_isomorphic(beta, k.link(f).face_poset()), (name, sorted(f))


# ---------------------------------------------------------------------------
# joins


def test_cone_over_triangle_boundary_is_disk_like():
    apex = SimplicialComplex.from_facets([[99]])
    cone = simplicial_join(sphere(1), apex)
    assert cone.dim == 2
    assert len(cone.facets) == 3
    assert is_isomorphic(cone.face_poset(), disk(3).face_poset())


def test_suspension_of_triangle_boundary_is_2_sphere():
    k = octahedron()
    assert k.dim == 2
    v = is_k_surface(k.face_poset())
    assert v.is_surface and v.rank == 2
    assert k.is_normal_pseudomanifold()


def test_join_renumbers_on_collision():
    a = solid_simplex(1)
    b = solid_simplex(1)  # same vertex labels
    j = simplicial_join(a, b)
    assert j.dim == 3
    assert len(j.vertices) == 4


def test_pinched_box_is_join_of_annulus_and_point():
    box = pinched_box(6)
    assert box.dim == 3
    assert len(box.facets) == len(annulus(6).facets)
    assert all(12 in f for f in box.facets)


# ---------------------------------------------------------------------------
# purity


def test_purity_cases():
    assert sphere(2).is_pure()
    assert SimplicialComplex.from_facets([[5]]).is_pure()
    mixed = SimplicialComplex.from_facets([(1, 2, 3), (3, 4)])
    assert not mixed.is_pure()


# ---------------------------------------------------------------------------
# codimension-1 connectivity


def test_codim1_requires_pure():
    mixed = SimplicialComplex.from_facets([(1, 2, 3), (3, 4)])
    with pytest.raises(DomainError):
        mixed.is_codim1_connected()


def test_codim1_cases():
    assert sphere(2).is_codim1_connected()
    assert not two_triangles_shared_vertex().is_codim1_connected()
    assert pinched_sphere().is_codim1_connected()
    disjoint = SimplicialComplex.from_facets([(0, 1, 2), (3, 4, 5)])
    assert not disjoint.is_codim1_connected()


def test_codim1_matches_definitional_oracle(complexes, big_complexes):
    for name, k in complexes + big_complexes:
        if not k.is_pure() or k.dim < 1:
            continue
        assert k.is_codim1_connected() == oracles.codim1_connected_definitional(k), name


def test_codim1_within_coface_sets(complexes):
    # coface sets of low-dimensional faces of PCMs/surfaces stay connected
    from posurf import classify_recursive

    for name, k in complexes:
        if k.dim < 1 or not k.is_pure():
            continue
        cls = classify_recursive(k)
        if cls.category not in ("surface", "pcm"):
            continue
        n = k.dim
        for f in k.faces:
            if 1 <= len(f) - 1 <= n - 2:
                assert k.is_codim1_connected(within=f), (name, sorted(f))


# ---------------------------------------------------------------------------
# pseudomanifolds


def test_pseudomanifold_cases():
    assert sphere(2).is_pseudomanifold()
    assert pinched_sphere().is_pseudomanifold()
    assert not three_triangles_shared_edge().is_pseudomanifold()
    assert SimplicialComplex.from_facets([[7]]).is_pseudomanifold()
    assert not sphere(0).is_pseudomanifold()  # two isolated vertices
    assert not SimplicialComplex.from_facets([]).is_pseudomanifold()


def test_normal_pseudomanifold_cases():
    assert sphere(2).is_normal_pseudomanifold()
    assert sphere(3).is_normal_pseudomanifold()
    assert not pinched_sphere().is_normal_pseudomanifold()
    assert pinched_box(6).is_normal_pseudomanifold()
    assert disk(6).is_normal_pseudomanifold()
    assert path_complex(3).is_normal_pseudomanifold()


def test_icosahedron_structure():
    k = icosahedron()
    assert k.f_vector() == (12, 30, 20)
    assert all(c == 2 for c in k.ridge_facet_counts().values())
    assert k.is_normal_pseudomanifold()
    v = is_k_surface(k.face_poset())
    assert v.is_surface and v.rank == 2
    # the two identified vertices are non-adjacent with disjoint links
    assert frozenset({0, 11}) not in k.faces
    assert not set(k.link({0}).vertices) & set(k.link({11}).vertices)


def test_pinched_sphere_structure():
    k = pinched_sphere()
    assert k.f_vector() == (11, 30, 20)
    assert all(c == 2 for c in k.ridge_facet_counts().values())


# ---------------------------------------------------------------------------
# facet IO


def test_facet_roundtrip(complexes):
    for name, k in complexes:
        assert read_facets(write_facets(k)) == k, name


def test_facet_parse_errors():
    with pytest.raises(ParseError) as e:
        read_facets("1 2\n1 x\n")
    assert "line 2" in str(e.value)
    with pytest.raises(ParseError):
        read_facets("1 1 2\n")


def test_facet_comments_and_empty():
    k = read_facets("# a triangle\n1 2 3\n\n")
    assert k.dim == 2
    assert len(read_facets("")) == 0
