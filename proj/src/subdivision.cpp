#include <angdef/subdivision.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace angdef {

namespace {

SimplexTuple sorted(SimplexTuple s)
{
    std::sort(s.begin(), s.end());
    return s;
}

void require_dim(const EmbeddedComplex& complex, const std::vector<double>& point)
{
    if (point.size() != complex.ambient_dim()) {
        throw Error(ErrorKind::PointNotInRelativeInterior, "split point has the wrong dimension");
    }
}

// Parameter t of p on segment a-b; throws unless p is strictly between them.
double edge_parameter(std::span<const double> a, std::span<const double> b, const std::vector<double>& p)
{
    double ll = 0.0, t = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = b[i] - a[i];
        ll += d * d;
        t += (p[i] - a[i]) * d;
    }
    t /= ll;
    double off = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double r = p[i] - (a[i] + t * (b[i] - a[i]));
        off += r * r;
    }
    if (std::sqrt(off) > kRelativeInteriorTolerance * std::sqrt(ll) || !(t > 1e-12) || !(t < 1.0 - 1e-12)) {
        throw Error(ErrorKind::PointNotInRelativeInterior, "split point is not inside the edge");
    }
    return t;
}

// Barycentric weights of p in triangle abc; throws unless all are positive.
void check_face_point(std::span<const double> a, std::span<const double> b, std::span<const double> c,
    const std::vector<double>& p)
{
    double uu = 0.0, vv = 0.0, uv = 0.0, pu = 0.0, pv = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double u = b[i] - a[i];
        const double v = c[i] - a[i];
        const double q = p[i] - a[i];
        uu += u * u;
        vv += v * v;
        uv += u * v;
        pu += q * u;
        pv += q * v;
    }
    scale = std::sqrt(std::max(uu, vv));
    const double det = uu * vv - uv * uv;
    const double s = (pu * vv - pv * uv) / det;
    const double t = (pv * uu - pu * uv) / det;
    double off = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double r = p[i] - (a[i] + s * (b[i] - a[i]) + t * (c[i] - a[i]));
        off += r * r;
    }
    const double eps = 1e-12;
    if (std::sqrt(off) > kRelativeInteriorTolerance * scale || !(s > eps) || !(t > eps) || !(1.0 - s - t > eps)) {
        throw Error(ErrorKind::PointNotInRelativeInterior, "split point is not inside the face");
    }
}

EmbeddedComplex apply_split_edge(const EmbeddedComplex& complex, const SubdivisionScheme& scheme)
{
    if (scheme.simplex.size() != 2) throw Error(ErrorKind::NoSuchSimplex, "split_edge needs an edge");
    const VertexId a = scheme.simplex[0], b = scheme.simplex[1];
    if (!complex.has_vertex(a) || !complex.has_vertex(b)) throw Error(ErrorKind::NoSuchSimplex, "edge vertex out of range");
    const auto ei = complex.find_edge(a, b);
    if (!ei) throw Error(ErrorKind::NoSuchSimplex, "no such edge");
    require_dim(complex, scheme.point);
    edge_parameter(complex.point(a), complex.point(b), scheme.point);

    const VertexId m = complex.num_vertices();
    std::vector<SimplexTuple> out;
    for (const auto& e : complex.edges()) {
        if ((e[0] == a && e[1] == b) || (e[0] == b && e[1] == a)) continue;
        out.push_back({e[0], e[1]});
    }
    out.push_back({a, m});
    out.push_back({m, b});
    for (const auto& t : complex.triangles()) {
        const bool has_a = std::find(t.begin(), t.end(), a) != t.end();
        const bool has_b = std::find(t.begin(), t.end(), b) != t.end();
        if (!(has_a && has_b)) {
            out.push_back({t[0], t[1], t[2]});
            continue;
        }
        VertexId c = t[0];
        for (auto x : t) {
            if (x != a && x != b) c = x;
        }
        out.push_back({a, m, c});
        out.push_back({m, b, c});
        out.push_back({m, c});
    }
    std::vector<double> coords = complex.coordinates();
    coords.insert(coords.end(), scheme.point.begin(), scheme.point.end());
    return EmbeddedComplex::build(complex.ambient_dim(), std::move(coords), out, {.auto_close_faces = true});
}

EmbeddedComplex apply_split_face(const EmbeddedComplex& complex, const SubdivisionScheme& scheme)
{
    if (scheme.simplex.size() != 3) throw Error(ErrorKind::NoSuchSimplex, "split_face needs a triangle");
    const auto& s = scheme.simplex;
    for (auto v : s) {
        if (!complex.has_vertex(v)) throw Error(ErrorKind::NoSuchSimplex, "face vertex out of range");
    }
    if (!complex.find_triangle(s[0], s[1], s[2])) throw Error(ErrorKind::NoSuchSimplex, "no such face");
    require_dim(complex, scheme.point);
    check_face_point(complex.point(s[0]), complex.point(s[1]), complex.point(s[2]), scheme.point);

    const VertexId m = complex.num_vertices();
    const SimplexTuple target = sorted(s);
    std::vector<SimplexTuple> out;
    for (const auto& e : complex.edges()) out.push_back({e[0], e[1]});
    for (const auto& t : complex.triangles()) {
        if (SimplexTuple{t[0], t[1], t[2]} == target) continue;
        out.push_back({t[0], t[1], t[2]});
    }
    out.push_back({s[0], s[1], m});
    out.push_back({s[1], s[2], m});
    out.push_back({s[0], s[2], m});
    std::vector<double> coords = complex.coordinates();
    coords.insert(coords.end(), scheme.point.begin(), scheme.point.end());
    return EmbeddedComplex::build(complex.ambient_dim(), std::move(coords), out, {.auto_close_faces = true});
}

EmbeddedComplex apply_barycentric(const EmbeddedComplex& complex)
{
    const std::size_t d = complex.ambient_dim();
    const std::size_t n = complex.num_vertices();
    const auto& edges = complex.edges();
    const auto& tris = complex.triangles();
    std::vector<double> coords = complex.coordinates();
    coords.reserve((n + edges.size() + tris.size()) * d);
    for (const auto& e : edges) {
        for (std::size_t i = 0; i < d; ++i) coords.push_back(0.5 * (complex.point(e[0])[i] + complex.point(e[1])[i]));
    }
    for (const auto& t : tris) {
        for (std::size_t i = 0; i < d; ++i) {
            coords.push_back((complex.point(t[0])[i] + complex.point(t[1])[i] + complex.point(t[2])[i]) / 3.0);
        }
    }
    std::vector<SimplexTuple> out;
    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
        const VertexId m = n + ei;
        out.push_back({edges[ei][0], m});
        out.push_back({m, edges[ei][1]});
    }
    for (std::size_t ti = 0; ti < tris.size(); ++ti) {
        const Triangle& t = tris[ti];
        const VertexId c = n + edges.size() + ti;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                const VertexId m = n + *complex.find_edge(t[i], t[j]);
                out.push_back({t[i], m, c});
            }
        }
    }
    return EmbeddedComplex::build(d, std::move(coords), out, {.auto_close_faces = true});
}

} // namespace

SubdivisionScheme SubdivisionScheme::split_edge(Edge edge, std::vector<double> point)
{
    return {Kind::SplitEdge, {edge[0], edge[1]}, std::move(point)};
}

SubdivisionScheme SubdivisionScheme::split_face(Triangle face, std::vector<double> point)
{
    return {Kind::SplitFace, {face[0], face[1], face[2]}, std::move(point)};
}

SubdivisionScheme SubdivisionScheme::barycentric()
{
    return {Kind::Barycentric, {}, {}};
}

SubdivisionScheme SubdivisionScheme::split_edge_at(const EmbeddedComplex& complex, Edge edge, double t)
{
    complex.require_vertex(edge[0]);
    complex.require_vertex(edge[1]);
    std::vector<double> p(complex.ambient_dim());
    for (std::size_t i = 0; i < p.size(); ++i) {
        p[i] = (1.0 - t) * complex.point(edge[0])[i] + t * complex.point(edge[1])[i];
    }
    return split_edge(edge, std::move(p));
}

SubdivisionScheme SubdivisionScheme::split_face_at(const EmbeddedComplex& complex, Triangle face, std::array<double, 3> w)
{
    for (auto v : face) complex.require_vertex(v);
    std::vector<double> p(complex.ambient_dim(), 0.0);
    for (int k = 0; k < 3; ++k) {
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += w[k] * complex.point(face[k])[i];
    }
    return split_face(face, std::move(p));
}

SubdivisionScheme SubdivisionScheme::edge_midpoint(const EmbeddedComplex& complex, Edge edge)
{
    return split_edge_at(complex, edge, 0.5);
}

SubdivisionScheme SubdivisionScheme::face_centroid(const EmbeddedComplex& complex, Triangle face)
{
    return split_face_at(complex, face, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
}

std::string SubdivisionScheme::describe() const
{
    std::ostringstream out;
    switch (kind) {
    case Kind::SplitEdge: out << "split_edge"; break;
    case Kind::SplitFace: out << "split_face"; break;
    case Kind::Barycentric: return "barycentric";
    }
    out << "(";
    for (std::size_t i = 0; i < simplex.size(); ++i) out << (i ? "," : "") << simplex[i];
    out << ")";
    return out.str();
}

EmbeddedComplex subdivide(const EmbeddedComplex& complex, const SubdivisionScheme& scheme)
{
    switch (scheme.kind) {
    case SubdivisionScheme::Kind::SplitEdge: return apply_split_edge(complex, scheme);
    case SubdivisionScheme::Kind::SplitFace: return apply_split_face(complex, scheme);
    case SubdivisionScheme::Kind::Barycentric: return apply_barycentric(complex);
    }
    return complex;
}

} // namespace angdef
