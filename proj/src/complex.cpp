#include <angdef/complex.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace angdef {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorKind::DanglingFace: return "DanglingFace";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::NoSuchEdge: return "NoSuchEdge";
    case ErrorKind::NoSuchSimplex: return "NoSuchSimplex";
    case ErrorKind::NotIncident: return "NotIncident";
    case ErrorKind::NotASurface: return "NotASurface";
    case ErrorKind::AllVerticesFlat: return "AllVerticesFlat";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::InfeasibleAngles: return "InfeasibleAngles";
    case ErrorKind::ClosureFailure: return "ClosureFailure";
    case ErrorKind::ApexInPlane: return "ApexInPlane";
    case ErrorKind::ApicesSameSide: return "ApicesSameSide";
    case ErrorKind::AngleTooLarge: return "AngleTooLarge";
    case ErrorKind::TargetUnreachable: return "TargetUnreachable";
    case ErrorKind::RibbonSelfOverlap: return "RibbonSelfOverlap";
    case ErrorKind::PointNotInRelativeInterior: return "PointNotInRelativeInterior";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::UnsupportedLinkShape: return "UnsupportedLinkShape";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonTriangularFace: return "NonTriangularFace";
    }
    return "Unknown";
}

namespace {

std::uint64_t edge_key(VertexId a, VertexId b)
{
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

double squared_distance(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

template <typename Tuple>
void build_csr(
    std::size_t num_keys,
    const std::vector<Tuple>& items,
    std::vector<std::size_t>& offsets,
    std::vector<std::size_t>& values)
{
    offsets.assign(num_keys + 1, 0);
    for (const auto& t : items) {
        for (auto v : t) ++offsets[v + 1];
    }
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    values.assign(offsets.back(), 0);
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (auto v : items[i]) values[cursor[v]++] = i;
    }
}

} // namespace

EmbeddedComplex EmbeddedComplex::build(
    std::size_t ambient_dim,
    std::vector<double> coordinates,
    const std::vector<SimplexTuple>& simplices,
    BuildOptions options)
{
    if (ambient_dim == 0) {
        throw Error(ErrorKind::IndexOutOfRange, "ambient dimension must be positive");
    }
    if (coordinates.size() % ambient_dim != 0) {
        throw Error(ErrorKind::IndexOutOfRange, "coordinate count is not a multiple of the ambient dimension");
    }
    EmbeddedComplex k;
    k.m_dim = ambient_dim;
    k.m_num_vertices = coordinates.size() / ambient_dim;
    k.m_coords = std::move(coordinates);

    std::set<Edge> edges;
    std::set<Triangle> triangles;
    std::set<Edge> listed_edges;
    for (const auto& raw : simplices) {
        if (raw.empty() || raw.size() > 3) {
            std::ostringstream msg;
            msg << "simplex with " << raw.size() << " vertices; only sizes 1 to 3 are allowed";
            throw Error(ErrorKind::IndexOutOfRange, msg.str());
        }
        SimplexTuple s = raw;
        std::sort(s.begin(), s.end());
        for (auto v : s) {
            if (v >= k.m_num_vertices) {
                std::ostringstream msg;
                msg << "vertex index " << v << " out of range (" << k.m_num_vertices << " vertices)";
                throw Error(ErrorKind::IndexOutOfRange, msg.str());
            }
        }
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
            throw Error(ErrorKind::DegenerateSimplex, "simplex repeats a vertex");
        }
        if (s.size() == 2) {
            edges.insert({s[0], s[1]});
            listed_edges.insert({s[0], s[1]});
        } else if (s.size() == 3) {
            triangles.insert({s[0], s[1], s[2]});
        }
    }

    for (const auto& t : triangles) {
        for (const Edge e : {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}}) {
            if (!options.auto_close_faces && !listed_edges.contains(e)) {
                std::ostringstream msg;
                msg << "edge (" << e[0] << ", " << e[1] << ") of triangle (" << t[0] << ", " << t[1]
                    << ", " << t[2] << ") is missing";
                throw Error(ErrorKind::DanglingFace, msg.str());
            }
            edges.insert(e);
        }
    }

    k.m_edges.assign(edges.begin(), edges.end());
    k.m_triangles.assign(triangles.begin(), triangles.end());
    k.index();
    k.validate_geometry();
    return k;
}

EmbeddedComplex EmbeddedComplex::build(
    const std::vector<std::vector<double>>& points,
    const std::vector<SimplexTuple>& simplices,
    BuildOptions options)
{
    if (points.empty()) {
        return build(1, {}, simplices, options);
    }
    const std::size_t dim = points.front().size();
    std::vector<double> flat;
    flat.reserve(points.size() * dim);
    for (const auto& p : points) {
        if (p.size() != dim) {
            throw Error(ErrorKind::IndexOutOfRange, "points do not share one ambient dimension");
        }
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return build(dim, std::move(flat), simplices, options);
}

EmbeddedComplex EmbeddedComplex::with_coordinates(std::size_t ambient_dim, std::vector<double> coordinates) const
{
    if (ambient_dim == 0 || coordinates.size() != ambient_dim * m_num_vertices) {
        throw Error(ErrorKind::IndexOutOfRange, "replacement coordinates do not match the vertex count");
    }
    EmbeddedComplex k = *this;
    k.m_dim = ambient_dim;
    k.m_coords = std::move(coordinates);
    k.validate_geometry();
    return k;
}

void EmbeddedComplex::index()
{
    build_csr(m_num_vertices, m_edges, m_vertex_edge_offsets, m_vertex_edges);
    build_csr(m_num_vertices, m_triangles, m_vertex_tri_offsets, m_vertex_tris);

    m_edge_lookup.clear();
    m_edge_lookup.reserve(m_edges.size());
    for (std::size_t i = 0; i < m_edges.size(); ++i) {
        m_edge_lookup.emplace(edge_key(m_edges[i][0], m_edges[i][1]), i);
    }

    std::vector<std::array<std::size_t, 3>> tri_edges;
    tri_edges.reserve(m_triangles.size());
    for (const auto& t : m_triangles) {
        tri_edges.push_back({
            m_edge_lookup.at(edge_key(t[0], t[1])),
            m_edge_lookup.at(edge_key(t[0], t[2])),
            m_edge_lookup.at(edge_key(t[1], t[2])),
        });
    }
    build_csr(m_edges.size(), tri_edges, m_edge_tri_offsets, m_edge_tris);
}

void EmbeddedComplex::validate_geometry() const
{
    for (const auto& e : m_edges) {
        if (!(squared_distance(point(e[0]), point(e[1])) > 0.0)) {
            std::ostringstream msg;
            msg << "edge (" << e[0] << ", " << e[1] << ") has zero length";
            throw Error(ErrorKind::DegenerateSimplex, msg.str());
        }
    }
    for (const auto& t : m_triangles) {
        const auto a = point(t[0]);
        const auto b = point(t[1]);
        const auto c = point(t[2]);
        double uu = 0.0, vv = 0.0, uv = 0.0;
        for (std::size_t i = 0; i < m_dim; ++i) {
            const double u = b[i] - a[i];
            const double v = c[i] - a[i];
            uu += u * u;
            vv += v * v;
            uv += u * v;
        }
        // Gram determinant = (2 * area)^2
        const double area = 0.5 * std::sqrt(std::max(0.0, uu * vv - uv * uv));
        const double longest2 = std::max({uu, vv, squared_distance(b, c)});
        if (!(area >= kDegeneracyTolerance * longest2)) {
            std::ostringstream msg;
            msg << "triangle (" << t[0] << ", " << t[1] << ", " << t[2] << ") is degenerate (area " << area << ")";
            throw Error(ErrorKind::DegenerateSimplex, msg.str());
        }
    }
}

void EmbeddedComplex::require_vertex(VertexId v) const
{
    if (!has_vertex(v)) {
        std::ostringstream msg;
        msg << "vertex " << v << " not in complex with " << m_num_vertices << " vertices";
        throw Error(ErrorKind::UnknownVertex, msg.str());
    }
}

std::span<const std::size_t> EmbeddedComplex::incident_edges(VertexId v) const
{
    require_vertex(v);
    return {m_vertex_edges.data() + m_vertex_edge_offsets[v], m_vertex_edge_offsets[v + 1] - m_vertex_edge_offsets[v]};
}

std::span<const std::size_t> EmbeddedComplex::incident_triangles(VertexId v) const
{
    require_vertex(v);
    return {m_vertex_tris.data() + m_vertex_tri_offsets[v], m_vertex_tri_offsets[v + 1] - m_vertex_tri_offsets[v]};
}

std::span<const std::size_t> EmbeddedComplex::edge_triangles(std::size_t edge_index) const
{
    if (edge_index >= m_edges.size()) {
        throw Error(ErrorKind::NoSuchEdge, "edge index out of range");
    }
    return {m_edge_tris.data() + m_edge_tri_offsets[edge_index],
            m_edge_tri_offsets[edge_index + 1] - m_edge_tri_offsets[edge_index]};
}

std::optional<std::size_t> EmbeddedComplex::find_edge(VertexId a, VertexId b) const
{
    if (!has_vertex(a) || !has_vertex(b) || a == b) return std::nullopt;
    auto it = m_edge_lookup.find(edge_key(a, b));
    if (it == m_edge_lookup.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> EmbeddedComplex::find_triangle(VertexId a, VertexId b, VertexId c) const
{
    if (!has_vertex(a) || !has_vertex(b) || !has_vertex(c)) return std::nullopt;
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    auto it = std::lower_bound(m_triangles.begin(), m_triangles.end(), t);
    if (it == m_triangles.end() || *it != t) return std::nullopt;
    return static_cast<std::size_t>(it - m_triangles.begin());
}

// ---------------------------------------------------------------------------
// stars and links

bool SubcomplexView::contains_vertex(VertexId v) const
{
    return std::binary_search(vertices.begin(), vertices.end(), v);
}

namespace {

VertexId other_end(const Edge& e, VertexId v) { return e[0] == v ? e[1] : e[0]; }

Edge opposite_edge(const Triangle& t, VertexId v)
{
    if (t[0] == v) return {t[1], t[2]};
    if (t[1] == v) return {t[0], t[2]};
    return {t[0], t[1]};
}

template <typename T>
void sort_unique(std::vector<T>& xs)
{
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

} // namespace

LinkView link(const EmbeddedComplex& complex, VertexId v)
{
    complex.require_vertex(v);
    LinkView view;
    view.parent = &complex;
    view.center = v;
    for (auto ei : complex.incident_edges(v)) {
        view.vertices.push_back(other_end(complex.edges()[ei], v));
    }
    for (auto ti : complex.incident_triangles(v)) {
        view.edges.push_back(opposite_edge(complex.triangles()[ti], v));
    }
    sort_unique(view.vertices);
    sort_unique(view.edges);
    return view;
}

StarView star(const EmbeddedComplex& complex, VertexId v)
{
    StarView view = link(complex, v);
    view.vertices.push_back(v);
    for (auto ei : complex.incident_edges(v)) {
        view.edges.push_back(complex.edges()[ei]);
    }
    for (auto ti : complex.incident_triangles(v)) {
        view.triangles.push_back(complex.triangles()[ti]);
    }
    sort_unique(view.vertices);
    sort_unique(view.edges);
    sort_unique(view.triangles);
    return view;
}

ExtractedComplex extract(const SubcomplexView& view)
{
    const EmbeddedComplex& parent = *view.parent;
    ExtractedComplex out;
    std::unordered_map<VertexId, VertexId> to_local;
    auto add = [&](VertexId v) {
        if (to_local.emplace(v, out.to_parent.size()).second) out.to_parent.push_back(v);
    };
    if (view.contains_vertex(view.center)) add(view.center);
    for (auto v : view.vertices) add(v);

    std::vector<double> coords;
    coords.reserve(out.to_parent.size() * parent.ambient_dim());
    for (auto v : out.to_parent) {
        auto p = parent.point(v);
        coords.insert(coords.end(), p.begin(), p.end());
    }
    std::vector<SimplexTuple> simplices;
    for (const auto& e : view.edges) simplices.push_back({to_local.at(e[0]), to_local.at(e[1])});
    for (const auto& t : view.triangles) {
        simplices.push_back({to_local.at(t[0]), to_local.at(t[1]), to_local.at(t[2])});
    }
    out.complex = EmbeddedComplex::build(parent.ambient_dim(), std::move(coords), simplices);
    return out;
}

std::size_t edge_order(const EmbeddedComplex& complex, VertexId v, VertexId w)
{
    complex.require_vertex(v);
    complex.require_vertex(w);
    auto e = complex.find_edge(v, w);
    if (!e) {
        std::ostringstream msg;
        msg << "no edge (" << v << ", " << w << ")";
        throw Error(ErrorKind::NoSuchEdge, msg.str());
    }
    return complex.edge_triangles(*e).size();
}

std::size_t vertex_order(const EmbeddedComplex& complex, VertexId v)
{
    return complex.incident_edges(v).size();
}

long long euler_characteristic(const EmbeddedComplex& complex)
{
    return complex.fvector().euler();
}

// ---------------------------------------------------------------------------
// classification

namespace {

/// Degree of each link vertex inside the link graph, plus connectivity.
struct LinkShape
{
    std::size_t num_vertices = 0;
    std::size_t num_edges = 0;
    std::size_t degree_one = 0;
    std::size_t degree_two = 0;
    bool connected = false;
};

LinkShape link_shape(const EmbeddedComplex& complex, VertexId v)
{
    const LinkView lk = link(complex, v);
    LinkShape shape;
    shape.num_vertices = lk.vertices.size();
    shape.num_edges = lk.edges.size();
    if (lk.vertices.empty()) return shape;

    std::unordered_map<VertexId, std::vector<VertexId>> adj;
    for (auto u : lk.vertices) adj[u];
    for (const auto& e : lk.edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    for (const auto& [u, nbrs] : adj) {
        if (nbrs.size() == 1) ++shape.degree_one;
        if (nbrs.size() == 2) ++shape.degree_two;
    }
    std::set<VertexId> seen{lk.vertices.front()};
    std::vector<VertexId> stack{lk.vertices.front()};
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto w : adj[u]) {
            if (seen.insert(w).second) stack.push_back(w);
        }
    }
    shape.connected = seen.size() == lk.vertices.size();
    return shape;
}

bool is_cone_from(const EmbeddedComplex& complex, VertexId apex)
{
    return star(complex, apex).fvector() == complex.fvector();
}

bool strongly_connected_components(const EmbeddedComplex& complex)
{
    // Every connected component must be connected through triangles across edges.
    const auto& tris = complex.triangles();
    std::vector<std::size_t> parent(tris.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t e = 0; e < complex.edges().size(); ++e) {
        auto ts = complex.edge_triangles(e);
        for (std::size_t i = 1; i < ts.size(); ++i) parent[find(ts[i])] = find(ts[0]);
    }
    // Each vertex must see a single triangle class.
    for (VertexId v = 0; v < complex.num_vertices(); ++v) {
        auto ts = complex.incident_triangles(v);
        for (std::size_t i = 1; i < ts.size(); ++i) {
            if (find(ts[i]) != find(ts[0])) return false;
        }
    }
    return true;
}

} // namespace

bool link_is_circle(const EmbeddedComplex& complex, VertexId v)
{
    const LinkShape s = link_shape(complex, v);
    return s.num_vertices >= 3 && s.connected && s.degree_two == s.num_vertices && s.num_edges == s.num_vertices;
}

bool link_is_arc(const EmbeddedComplex& complex, VertexId v)
{
    const LinkShape s = link_shape(complex, v);
    return s.num_edges >= 1 && s.connected && s.degree_one == 2 && s.degree_two + 2 == s.num_vertices
        && s.num_edges + 1 == s.num_vertices;
}

std::optional<std::vector<VertexId>> ordered_link(const EmbeddedComplex& complex, VertexId v)
{
    const bool circle = link_is_circle(complex, v);
    if (!circle && !link_is_arc(complex, v)) return std::nullopt;
    const LinkView lk = link(complex, v);
    std::unordered_map<VertexId, std::vector<VertexId>> adj;
    for (const auto& e : lk.edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    VertexId start = lk.vertices.front();
    if (!circle) {
        for (auto u : lk.vertices) {
            if (adj[u].size() == 1) {
                start = u;
                break;
            }
        }
    }
    std::vector<VertexId> order{start};
    VertexId prev = start;
    VertexId cur = adj[start].front();
    while (order.size() < lk.vertices.size()) {
        order.push_back(cur);
        const auto& nb = adj[cur];
        VertexId next = nb[0] == prev ? (nb.size() > 1 ? nb[1] : nb[0]) : nb[0];
        prev = cur;
        cur = next;
    }
    return order;
}

bool is_coplanar(const EmbeddedComplex& complex)
{
    const std::size_t dim = complex.ambient_dim();
    const std::size_t n = complex.num_vertices();
    if (dim <= 2 || n <= 3) return true;

    // Orthonormal basis of the affine span, built greedily (Gram-Schmidt).
    auto p0 = complex.point(0);
    double scale = 0.0;
    for (VertexId v = 1; v < n; ++v) scale = std::max(scale, std::sqrt(squared_distance(complex.point(v), p0)));
    if (scale == 0.0) return true;
    const double tol = 1e-9 * scale;

    std::vector<std::vector<double>> basis;
    for (VertexId v = 1; v < n; ++v) {
        auto p = complex.point(v);
        std::vector<double> r(dim);
        for (std::size_t i = 0; i < dim; ++i) r[i] = p[i] - p0[i];
        for (const auto& b : basis) {
            double d = 0.0;
            for (std::size_t i = 0; i < dim; ++i) d += r[i] * b[i];
            for (std::size_t i = 0; i < dim; ++i) r[i] -= d * b[i];
        }
        double norm = 0.0;
        for (double x : r) norm += x * x;
        norm = std::sqrt(norm);
        if (norm > tol) {
            if (basis.size() == 2) return false;
            for (double& x : r) x /= norm;
            basis.push_back(std::move(r));
        }
    }
    return true;
}

ComplexClass classify(const EmbeddedComplex& complex)
{
    ComplexClass c;
    const FVector f = complex.fvector();
    if (f.f0 == 0) return c;

    // Pseudomanifold: pure, edge orders <= 2, strongly connected per component.
    bool pure = f.f2 > 0;
    bool orders_ok = true;
    for (std::size_t e = 0; e < f.f1; ++e) {
        const auto order = complex.edge_triangles(e).size();
        if (order == 0) pure = false;
        if (order > 2) orders_ok = false;
    }
    for (VertexId v = 0; v < f.f0 && pure; ++v) {
        if (complex.incident_triangles(v).empty()) pure = false;
    }
    c.is_pseudomanifold = pure && orders_ok && strongly_connected_components(complex);

    bool surface = f.f2 > 0;
    for (std::size_t e = 0; e < f.f1 && surface; ++e) {
        if (complex.edge_triangles(e).size() != 2) surface = false;
    }
    for (VertexId v = 0; v < f.f0 && surface; ++v) {
        if (!link_is_circle(complex, v)) surface = false;
    }
    c.is_surface = surface;

    for (VertexId v = 0; v < f.f0; ++v) {
        if (is_cone_from(complex, v)) {
            c.is_cone = true;
            c.cone_apex = v;
            break;
        }
    }

    if (c.is_cone && f.f2 > 0 && is_coplanar(complex)) {
        for (VertexId v = 0; v < f.f0; ++v) {
            if (is_cone_from(complex, v) && link_is_arc(complex, v)) {
                c.is_planar_fan = true;
                break;
            }
        }
    }

    // n-flap: every triangle contains one common edge and nothing else exists.
    if (f.f2 == 0) {
        if (f.f0 == 2 && f.f1 == 1) {
            c.is_n_flap = true;
            c.flap_n = 0;
            c.flap_ends = complex.edges().front();
        }
    } else if (f.f0 == f.f2 + 2 && f.f1 == 2 * f.f2 + 1) {
        for (const auto& e : complex.edges()) {
            if (complex.edge_triangles(*complex.find_edge(e[0], e[1])).size() == f.f2) {
                c.is_n_flap = true;
                c.flap_n = f.f2;
                c.flap_ends = e;
                break;
            }
        }
    }
    return c;
}

EmbeddedComplex disjoint_union(const EmbeddedComplex& a, const EmbeddedComplex& b)
{
    const std::size_t dim = std::max(a.ambient_dim(), b.ambient_dim());
    std::vector<double> coords;
    coords.reserve((a.num_vertices() + b.num_vertices()) * dim);
    for (const auto* k : {&a, &b}) {
        for (VertexId v = 0; v < k->num_vertices(); ++v) {
            auto p = k->point(v);
            coords.insert(coords.end(), p.begin(), p.end());
            coords.insert(coords.end(), dim - p.size(), 0.0);
        }
    }
    const VertexId shift = a.num_vertices();
    std::vector<SimplexTuple> simplices;
    for (const auto& e : a.edges()) simplices.push_back({e[0], e[1]});
    for (const auto& t : a.triangles()) simplices.push_back({t[0], t[1], t[2]});
    for (const auto& e : b.edges()) simplices.push_back({e[0] + shift, e[1] + shift});
    for (const auto& t : b.triangles()) simplices.push_back({t[0] + shift, t[1] + shift, t[2] + shift});
    return EmbeddedComplex::build(dim, std::move(coords), simplices);
}

} // namespace angdef
