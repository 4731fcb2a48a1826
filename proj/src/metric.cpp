#include <angdef/metric.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace angdef {

double distance(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

double corner_angle(std::span<const double> vertex, std::span<const double> a, std::span<const double> b)
{
    double uu = 0.0, vv = 0.0, uv = 0.0;
    for (std::size_t i = 0; i < vertex.size(); ++i) {
        const double u = a[i] - vertex[i];
        const double v = b[i] - vertex[i];
        uu += u * u;
        vv += v * v;
        uv += u * v;
    }
    const double c = std::clamp(uv / std::sqrt(uu * vv), -1.0, 1.0);
    return std::acos(c) / kFullTurn;
}

double triangle_area(std::span<const double> a, std::span<const double> b, std::span<const double> c)
{
    double uu = 0.0, vv = 0.0, uv = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double u = b[i] - a[i];
        const double v = c[i] - a[i];
        uu += u * u;
        vv += v * v;
        uv += u * v;
    }
    return 0.5 * std::sqrt(std::max(0.0, uu * vv - uv * uv));
}

double interior_angle(const EmbeddedComplex& complex, VertexId v, const Triangle& triangle)
{
    complex.require_vertex(v);
    if (!complex.find_triangle(triangle[0], triangle[1], triangle[2])) {
        throw Error(ErrorKind::NoSuchSimplex, "triangle is not a 2-simplex of the complex");
    }
    std::array<VertexId, 2> others{};
    std::size_t n = 0;
    bool incident = false;
    for (auto u : triangle) {
        if (u == v) {
            incident = true;
        } else if (n < 2) {
            others[n++] = u;
        }
    }
    if (!incident) {
        std::ostringstream msg;
        msg << "vertex " << v << " is not a corner of triangle (" << triangle[0] << ", " << triangle[1] << ", "
            << triangle[2] << ")";
        throw Error(ErrorKind::NotIncident, msg.str());
    }
    return corner_angle(complex.point(v), complex.point(others[0]), complex.point(others[1]));
}

double interior_angle(const EmbeddedComplex& complex, VertexId v, std::size_t triangle)
{
    if (triangle >= complex.triangles().size()) {
        throw Error(ErrorKind::NoSuchSimplex, "triangle index out of range");
    }
    return interior_angle(complex, v, complex.triangles()[triangle]);
}

double angle_sum(const EmbeddedComplex& complex, VertexId v)
{
    double sum = 0.0;
    for (auto ti : complex.incident_triangles(v)) {
        const Triangle& t = complex.triangles()[ti];
        const VertexId a = t[0] == v ? t[1] : t[0];
        const VertexId b = t[2] == v ? t[1] : t[2];
        sum += corner_angle(complex.point(v), complex.point(a), complex.point(b));
    }
    return sum;
}

double exterior_angle(const EmbeddedComplex& complex, VertexId v, const SimplexTuple& simplex)
{
    complex.require_vertex(v);
    if (std::find(simplex.begin(), simplex.end(), v) == simplex.end()) {
        throw Error(ErrorKind::NotIncident, "simplex does not contain the vertex");
    }
    switch (simplex.size()) {
    case 1:
        return 1.0;
    case 2:
        if (!complex.find_edge(simplex[0], simplex[1])) {
            throw Error(ErrorKind::NoSuchSimplex, "edge is not a simplex of the complex");
        }
        return 0.5;
    case 3:
        return 0.5 - interior_angle(complex, v, Triangle{simplex[0], simplex[1], simplex[2]});
    default:
        throw Error(ErrorKind::NoSuchSimplex, "simplex must have 1 to 3 vertices");
    }
}

double edge_length(const EmbeddedComplex& complex, VertexId a, VertexId b)
{
    if (!complex.find_edge(a, b)) {
        std::ostringstream msg;
        msg << "no edge (" << a << ", " << b << ")";
        throw Error(ErrorKind::NoSuchEdge, msg.str());
    }
    return distance(complex.point(a), complex.point(b));
}

double edge_length(const EmbeddedComplex& complex, std::size_t edge)
{
    if (edge >= complex.edges().size()) {
        throw Error(ErrorKind::NoSuchEdge, "edge index out of range");
    }
    const Edge& e = complex.edges()[edge];
    return distance(complex.point(e[0]), complex.point(e[1]));
}

} // namespace angdef
