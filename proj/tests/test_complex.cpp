#include <angdef/complex.hpp>
#include <angdef/generators.hpp>

#include "oracles.hpp"

#include <doctest.h>

using namespace angdef;

namespace {

EmbeddedComplex one_triangle()
{
    return EmbeddedComplex::build({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}}, {.auto_close_faces = true});
}

} // namespace

TEST_CASE("build closes faces on request")
{
    const auto k = one_triangle();
    CHECK(k.fvector() == FVector{3, 3, 1});
    CHECK(k.find_edge(2, 0).has_value());
    CHECK(k.find_triangle(2, 0, 1).has_value());
}

TEST_CASE("build rejects missing faces without closure")
{
    try {
        EmbeddedComplex::build({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}});
        FAIL("expected DanglingFace");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DanglingFace);
    }
}

TEST_CASE("build rejects degenerate and out-of-range simplices")
{
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::ParseError;
    };
    CHECK(kind_of([] { EmbeddedComplex::build({{0, 0}, {1, 0}, {2, 0}}, {{0, 1, 2}}, {.auto_close_faces = true}); })
          == ErrorKind::DegenerateSimplex);
    CHECK(kind_of([] { EmbeddedComplex::build({{0, 0}, {0, 0}}, {{0, 1}}); }) == ErrorKind::DegenerateSimplex);
    CHECK(kind_of([] { EmbeddedComplex::build({{0, 0}, {1, 0}}, {{0, 5}}); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { EmbeddedComplex::build({{0, 0}, {1, 0}}, {{0, 0}}); }) == ErrorKind::DegenerateSimplex);
    CHECK(kind_of([] { link(one_triangle(), 7); }) == ErrorKind::UnknownVertex);
    CHECK(kind_of([] { edge_order(one_triangle(), 0, 7); }) == ErrorKind::UnknownVertex);
    CHECK(kind_of([] { edge_order(EmbeddedComplex::build({{0, 0}, {1, 0}, {0, 1}}, {{0, 1}, {1, 2}}), 0, 2); })
          == ErrorKind::NoSuchEdge);
}

TEST_CASE("isolated vertices are implicit")
{
    const auto k = EmbeddedComplex::build({{0, 0}, {1, 0}, {5, 5}}, {{0, 1}});
    CHECK(k.fvector() == FVector{3, 1, 0});
    CHECK(vertex_order(k, 2) == 0);
    CHECK(link(k, 2).fvector() == FVector{0, 0, 0});
}

TEST_CASE("f-vectors and Euler characteristic of reference shapes")
{
    CHECK(regular_tetrahedron().fvector() == FVector{4, 6, 4});
    CHECK(octahedron().fvector() == FVector{6, 12, 8});
    CHECK(icosahedron().fvector() == FVector{12, 30, 20});
    CHECK(csaszar_torus().fvector() == FVector{7, 21, 14});
    for (std::size_t m = 3; m <= 12; ++m) {
        const auto k = regular_bipyramid(m, 1.0);
        CHECK(k.fvector() == FVector{m + 2, 3 * m, 2 * m});
        CHECK(euler_characteristic(k) == 2);
    }
    CHECK(euler_characteristic(csaszar_torus()) == 0);
}

TEST_CASE("star and link agree with enumeration")
{
    for (const auto& k : {regular_tetrahedron(), icosahedron(), csaszar_torus(), n_flap(4, std::vector<double>(4, 0.1)),
                          fan_with_dangling_edge(5), triangle_wedge(3)}) {
        for (VertexId v = 0; v < k.num_vertices(); ++v) {
            const auto lk = link(k, v);
            const auto expect = oracle::link_fvector(k, v);
            CHECK(lk.vertices.size() == expect[0]);
            CHECK(lk.edges.size() == expect[1]);
            CHECK(lk.triangles.empty());
            const auto st = star(k, v);
            CHECK(st.vertices.size() == expect[0] + 1);
            CHECK(st.edges.size() == k.incident_edges(v).size() + lk.edges.size());
            CHECK(st.triangles.size() == k.incident_triangles(v).size());
            CHECK_FALSE(lk.contains_vertex(v));
        }
    }
}

TEST_CASE("link of a tetrahedron vertex is a triangle boundary")
{
    const auto k = regular_tetrahedron();
    CHECK(link(k, 0).fvector() == FVector{3, 3, 0});
    CHECK(link_is_circle(k, 0));
    CHECK_FALSE(link_is_arc(k, 0));
    CHECK(ordered_link(k, 0)->size() == 3);
}

TEST_CASE("extract copies the star with the center first")
{
    const auto k = icosahedron();
    const auto ex = extract(star(k, 5));
    CHECK(ex.to_parent[0] == 5);
    CHECK(ex.complex.fvector() == FVector{6, 10, 5});
    for (VertexId i = 0; i < ex.complex.num_vertices(); ++i) {
        CHECK(ex.complex.point(i)[0] == k.point(ex.to_parent[i])[0]);
    }
}

TEST_CASE("edge orders")
{
    const auto flap = n_flap(5, std::vector<double>(5, 0.1));
    CHECK(edge_order(flap, 0, 1) == 5);
    CHECK(edge_order(flap, 0, 2) == 1);
    CHECK(vertex_order(flap, 0) == 6);
}

TEST_CASE("classify")
{
    SUBCASE("closed surfaces")
    {
        for (const auto& k : {regular_tetrahedron(), octahedron(), icosahedron(), csaszar_torus(), regular_pyramid(5, 1.0)}) {
            const auto c = classify(k);
            CHECK(c.is_surface);
            CHECK(c.is_pseudomanifold);
            CHECK_FALSE(c.is_cone);
        }
    }
    SUBCASE("flaps")
    {
        for (std::size_t n = 0; n <= 6; ++n) {
            const auto c = classify(n_flap(n, std::vector<double>(n, 0.1)));
            CHECK(c.is_n_flap);
            CHECK(c.flap_n == n);
            CHECK_FALSE(c.is_surface);
            CHECK(c.is_pseudomanifold == (n >= 1 && n <= 2));
        }
    }
    SUBCASE("planar fan")
    {
        const auto c = classify(regular_polygon_fan(6));
        CHECK(c.is_planar_fan);
        CHECK(c.is_cone);
        CHECK(c.cone_apex == VertexId{0});
    }
    SUBCASE("wedge is a cone but no pseudomanifold")
    {
        const auto c = classify(triangle_wedge(3));
        CHECK(c.is_cone);
        CHECK_FALSE(c.is_pseudomanifold);
        CHECK_FALSE(c.is_surface);
    }
}

TEST_CASE("coplanarity")
{
    CHECK(is_coplanar(lift_to_3d(regular_polygon_fan(5))));
    CHECK_FALSE(is_coplanar(regular_tetrahedron()));
}

TEST_CASE("disjoint union shifts indices")
{
    const auto u = disjoint_union(regular_tetrahedron(), one_triangle());
    CHECK(u.fvector() == FVector{7, 9, 5});
    CHECK(u.ambient_dim() == 3);
    CHECK(u.find_triangle(4, 5, 6).has_value());
    CHECK(euler_characteristic(u) == 3);
}

TEST_CASE("with_coordinates revalidates")
{
    const auto k = one_triangle();
    CHECK_THROWS_AS(k.with_coordinates(2, {0, 0, 1, 0, 2, 0}), Error);
    const auto moved = k.with_coordinates(2, {0, 0, 2, 0, 0, 2});
    CHECK(moved.fvector() == k.fvector());
}
