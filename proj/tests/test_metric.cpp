#include <angdef/generators.hpp>
#include <angdef/metric.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace angdef;

TEST_CASE("interior angles match the law of cosines")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::vector<std::vector<double>> pts{{u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}, {u(rng), u(rng), u(rng)}};
        const auto k = EmbeddedComplex::build(pts, {{0, 1, 2}}, {.auto_close_faces = true});
        double total = 0.0;
        for (VertexId v = 0; v < 3; ++v) {
            const double a = interior_angle(k, v, std::size_t{0});
            CHECK(a == doctest::Approx(oracle::angle_sum(k, v)).epsilon(1e-12));
            total += a;
        }
        CHECK(total == doctest::Approx(0.5).epsilon(1e-13));
    }
}

TEST_CASE("normalized angles of known shapes")
{
    const auto tet = regular_tetrahedron();
    CHECK(angle_sum(tet, 0) == doctest::Approx(0.5).epsilon(1e-14));
    const auto oct = octahedron();
    CHECK(angle_sum(oct, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    const auto ico = icosahedron();
    CHECK(angle_sum(ico, 0) == doctest::Approx(5.0 / 6.0).epsilon(1e-14));
    const auto fan = regular_polygon_fan(6);
    CHECK(angle_sum(fan, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("exterior angles")
{
    const auto k = regular_tetrahedron();
    const auto& t = k.triangles()[0];
    CHECK(exterior_angle(k, t[0], {t[0]}) == 1.0);
    CHECK(exterior_angle(k, t[0], {t[0], t[1]}) == 0.5);
    CHECK(exterior_angle(k, t[0], {t[0], t[1], t[2]}) == doctest::Approx(0.5 - 1.0 / 6.0));
    CHECK_THROWS_AS(exterior_angle(k, t[0], {t[1], t[2]}), Error);
}

TEST_CASE("lookup errors")
{
    const auto k = regular_tetrahedron();
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::ParseError;
    };
    CHECK(kind_of([&] { interior_angle(k, 0, std::size_t{99}); }) == ErrorKind::NoSuchSimplex);
    const auto& t = k.triangles()[0];
    VertexId outside = 0;
    while (std::find(t.begin(), t.end(), outside) != t.end()) ++outside;
    CHECK(kind_of([&] { interior_angle(k, outside, t); }) == ErrorKind::NotIncident);
    CHECK(kind_of([&] { edge_length(k, std::size_t{99}); }) == ErrorKind::NoSuchEdge);
    const auto flap = n_flap(2, std::vector<double>(2, 0.1));
    CHECK(kind_of([&] { edge_length(flap, 2, 3); }) == ErrorKind::NoSuchEdge);
}

TEST_CASE("edge lengths and areas")
{
    const auto k = regular_tetrahedron();
    for (std::size_t e = 0; e < k.edges().size(); ++e) CHECK(edge_length(k, e) == doctest::Approx(std::sqrt(8.0)));
    const auto& t = k.triangles()[0];
    CHECK(triangle_area(k.point(t[0]), k.point(t[1]), k.point(t[2])) == doctest::Approx(std::sqrt(3.0) / 4.0 * 8.0));
}
