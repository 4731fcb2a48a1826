#include <angdef/curvature.hpp>
#include <angdef/generators.hpp>
#include <angdef/metric.hpp>
#include <angdef/subdivision.hpp>

#include "oracles.hpp"

#include <doctest.h>

using namespace angdef;

namespace {

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::ParseError;
}

void check_invariants(const EmbeddedComplex& k, const EmbeddedComplex& j)
{
    CHECK(oracle::euler(j) == oracle::euler(k));
    CHECK(std::abs(oracle::total_area(j) - oracle::total_area(k)) < 1e-9 * oracle::total_area(k));
    for (VertexId v = 0; v < k.num_vertices(); ++v) {
        for (std::size_t i = 0; i < k.ambient_dim(); ++i) CHECK(j.point(v)[i] == k.point(v)[i]);
        CHECK(std::abs(classical_angle_defect(j, v) - classical_angle_defect(k, v)) < 1e-12);
        CHECK(std::abs(standard_curvature(j, v) - standard_curvature(k, v)) < 1e-12);
    }
}

} // namespace

TEST_CASE("face split of a tetrahedron")
{
    const auto k = regular_tetrahedron();
    const auto j = subdivide(k, SubdivisionScheme::face_centroid(k, k.triangles()[0]));
    CHECK(j.fvector() == FVector{5, 9, 6});
    CHECK(std::abs(oracle::angle_sum(j, 4) - 1.0) < 1e-12);
    check_invariants(k, j);
}

TEST_CASE("edge split on a closed surface adds two triangles")
{
    const auto k = octahedron();
    const auto j = subdivide(k, SubdivisionScheme::edge_midpoint(k, k.edges()[3]));
    CHECK(j.fvector() == FVector{7, 15, 10});
    CHECK(std::abs(oracle::angle_sum(j, 6) - 1.0) < 1e-12);
    check_invariants(k, j);
}

TEST_CASE("edge split on a flap spine doubles its pages")
{
    const auto k = n_flap(4, std::vector<double>(4, 0.1));
    const auto j = subdivide(k, SubdivisionScheme::split_edge_at(k, {0, 1}, 0.3));
    CHECK(j.fvector() == FVector{k.num_vertices() + 1, k.edges().size() + 1 + 4, 8});
    CHECK(std::abs(oracle::angle_sum(j, 6) - 2.0) < 1e-12);
    check_invariants(k, j);
}

TEST_CASE("barycentric subdivision of one triangle")
{
    const auto k = EmbeddedComplex::build({{0, 0}, {2, 0}, {0, 1}}, {{0, 1, 2}}, {.auto_close_faces = true});
    const auto j = subdivide(k, SubdivisionScheme::barycentric());
    CHECK(j.fvector() == FVector{7, 12, 6});
    CHECK(std::abs(oracle::angle_sum(j, 6) - 1.0) < 1e-12); // the centroid
    check_invariants(k, j);
}

TEST_CASE("barycentric subdivision across shapes")
{
    for (const auto& k : {icosahedron(), csaszar_torus(), triangle_wedge(3), fan_with_dangling_edge(4),
                          n_flap(3, std::vector<double>(3, 0.15))}) {
        const auto j = subdivide(k, SubdivisionScheme::barycentric());
        const auto f = k.fvector();
        CHECK(j.fvector() == FVector{f.f0 + f.f1 + f.f2, 2 * f.f1 + 6 * f.f2, 6 * f.f2});
        check_invariants(k, j);
    }
}

TEST_CASE("off-center splits everywhere keep curvature")
{
    for (const auto& k : {csaszar_torus(), regular_bipyramid(5, 0.7), triangle_wedge(2)}) {
        for (const auto& e : k.edges()) check_invariants(k, subdivide(k, SubdivisionScheme::split_edge_at(k, e, 0.37)));
        for (const auto& t : k.triangles()) {
            const auto j = subdivide(k, SubdivisionScheme::split_face_at(k, t, {0.21, 0.33, 0.46}));
            CHECK(std::abs(oracle::angle_sum(j, k.num_vertices()) - 1.0) < 1e-12);
            check_invariants(k, j);
        }
    }
}

TEST_CASE("psi changes next to a split")
{
    const auto k = regular_tetrahedron();
    const auto& t = k.triangles()[0];
    const auto j = subdivide(k, SubdivisionScheme::face_centroid(k, t));
    CHECK(psi(j, t[0], 1.0 / 6.0) == doctest::Approx(psi(k, t[0], 1.0 / 6.0) - 1.0 / 6.0));
}

TEST_CASE("subdivision errors")
{
    const auto k = regular_tetrahedron();
    const auto& t = k.triangles()[0];
    CHECK(kind_of([&] { subdivide(k, SubdivisionScheme::split_edge_at(k, {t[0], t[1]}, 1.0)); })
          == ErrorKind::PointNotInRelativeInterior);
    CHECK(kind_of([&] { subdivide(k, SubdivisionScheme::split_edge(Edge{t[0], t[1]}, {9.0, 9.0, 9.0})); })
          == ErrorKind::PointNotInRelativeInterior);
    CHECK(kind_of([&] { subdivide(k, SubdivisionScheme::split_face_at(k, t, {0.5, 0.5, 0.0})); })
          == ErrorKind::PointNotInRelativeInterior);
    CHECK(kind_of([&] { subdivide(k, SubdivisionScheme::split_face_at(k, t, {1.0, 1.0, -1.0})); })
          == ErrorKind::PointNotInRelativeInterior);
    const auto flap = n_flap(2, std::vector<double>(2, 0.1));
    CHECK(kind_of([&] { subdivide(flap, SubdivisionScheme::split_edge(Edge{2, 3}, {0.0, 0.0, 0.0})); })
          == ErrorKind::NoSuchSimplex);
    CHECK(kind_of([&] { subdivide(flap, SubdivisionScheme::split_face(Triangle{0, 2, 3}, {0.0, 0.0, 0.0})); })
          == ErrorKind::NoSuchSimplex);
}
