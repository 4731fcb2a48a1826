#include <angdef/generators.hpp>
#include <angdef/io.hpp>

#include <doctest.h>

#include <random>

using namespace angdef;

namespace {

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::BadParameter;
}

const char* kTetraOff = R"(OFF
# regular tetrahedron
4 4 6
1 1 1
1 -1 -1
-1 1 -1
-1 -1 1
3 0 1 2
3 0 3 1
3 0 2 3
3 1 3 2
)";

} // namespace

TEST_CASE("minimal JSON triangle")
{
    const auto k = parse_complex_json(R"({"ambient_dim": 2, "vertices": [[0,0],[1,0],[0,1]], "simplices": [[0,1,2]]})");
    CHECK(k.fvector() == FVector{3, 3, 1});
}

TEST_CASE("JSON round trip is exact")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> coords = icosahedron().coordinates();
    for (auto& x : coords) x += 1e-3 * u(rng);
    const auto k = icosahedron().with_coordinates(3, coords);
    const std::string text = serialize_complex_json(k);
    const auto back = parse_complex_json(text);
    CHECK(back.coordinates() == k.coordinates());
    CHECK(back.edges() == k.edges());
    CHECK(back.triangles() == k.triangles());
    CHECK(serialize_complex_json(back) == text);
}

TEST_CASE("isolated vertices survive a round trip")
{
    const auto k = EmbeddedComplex::build({{0.0}, {1.0}, {3.0}}, {{0, 1}});
    const auto back = parse_complex_json(serialize_complex_json(k));
    CHECK(back.fvector() == FVector{3, 1, 0});
}

TEST_CASE("JSON errors")
{
    CHECK(kind_of([] { parse_complex_json("{\"ambient_dim\": 2, "); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_complex_json("[1, 2]"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_complex_json(R"({"ambient_dim": 2, "vertices": [[0,0,0]], "simplices": []})"); })
          == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_complex_json(R"({"ambient_dim": 2, "vertices": [[0,0]], "simplices": [[-1]]})"); })
          == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_complex_json(R"({"ambient_dim": 2, "vertices": [[0,0],[1,0]], "simplices": [[0,4]]})"); })
          == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] {
        parse_complex_json(R"({"ambient_dim": 2, "vertices": [[0,0],[1,0],[2,0]], "simplices": [[0,1,2]]})");
    }) == ErrorKind::DegenerateSimplex);
}

TEST_CASE("OFF tetrahedron")
{
    const auto k = parse_off(kTetraOff);
    CHECK(k.fvector() == FVector{4, 6, 4});
    CHECK(classify(k).is_surface);
}

TEST_CASE("OFF errors")
{
    std::string quad = "OFF\n4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n";
    CHECK(kind_of([&] { parse_off(quad); }) == ErrorKind::NonTriangularFace);
    CHECK(kind_of([] { parse_off("PLY\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_off("OFF\n3 1 0\n0 0 0\n1 0 0\n"); }) == ErrorKind::ParseError);
    try {
        parse_off("OFF\n3 1 0\n0 0 0\n1 0 x\n0 1 0\n3 0 1 2\n");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("report totals equal column sums")
{
    const auto k = regular_bipyramid(5, 0.5);
    const std::string text = report_json(k, VertexFunction::standard_curvature(), ComplexFunction::euler());
    CHECK(text.find("\"residual\"") != std::string::npos);
    CHECK(text.find("\"link_fvector\"") != std::string::npos);
}
