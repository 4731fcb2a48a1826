#include <angdef/isometry.hpp>

#include <angdef/metric.hpp>
#include <angdef/subdivision.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace angdef {

namespace {

constexpr VertexId kUnset = std::numeric_limits<VertexId>::max();

double relative_gap(double a, double b)
{
    const double m = std::max(a, b);
    return m > 0.0 ? std::abs(a - b) / m : 0.0;
}

struct VertexSignature
{
    std::size_t degree = 0;
    std::size_t triangles = 0;
    std::vector<double> lengths; // sorted
};

VertexSignature signature(const EmbeddedComplex& c, VertexId v)
{
    VertexSignature s;
    s.degree = c.incident_edges(v).size();
    s.triangles = c.incident_triangles(v).size();
    for (auto ei : c.incident_edges(v)) s.lengths.push_back(edge_length(c, ei));
    std::sort(s.lengths.begin(), s.lengths.end());
    return s;
}

bool compatible(const VertexSignature& a, const VertexSignature& b, double tol)
{
    if (a.degree != b.degree || a.triangles != b.triangles) return false;
    for (std::size_t i = 0; i < a.lengths.size(); ++i) {
        if (relative_gap(a.lengths[i], b.lengths[i]) > tol) return false;
    }
    return true;
}

VertexId other(const Edge& e, VertexId v) { return e[0] == v ? e[1] : e[0]; }

class Search
{
public:
    Search(const EmbeddedComplex& a, const EmbeddedComplex& b, const IsometryOptions& options)
        : m_a(a)
        , m_b(b)
        , m_opt(options)
        , m_map(a.num_vertices(), kUnset)
        , m_inv(b.num_vertices(), kUnset)
    {}

    std::optional<std::vector<VertexId>> run(std::optional<std::pair<VertexId, VertexId>> pin)
    {
        if (m_a.fvector() != m_b.fvector()) return std::nullopt;
        const std::size_t n = m_a.num_vertices();
        std::vector<VertexSignature> sa(n), sb(n);
        for (VertexId v = 0; v < n; ++v) {
            sa[v] = signature(m_a, v);
            sb[v] = signature(m_b, v);
        }
        m_candidates.assign(n, {});
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId x = 0; x < n; ++x) {
                if (compatible(sa[u], sb[x], m_opt.length_tolerance)) m_candidates[u].push_back(x);
            }
            if (m_candidates[u].empty()) return std::nullopt;
        }
        if (pin) {
            const auto& c = m_candidates[pin->first];
            if (std::find(c.begin(), c.end(), pin->second) == c.end()) return std::nullopt;
            m_candidates[pin->first] = {pin->second};
        }
        build_order(pin ? std::optional<VertexId>(pin->first) : std::nullopt);
        if (!extend(0)) return std::nullopt;
        return m_map;
    }

private:
    void build_order(std::optional<VertexId> first)
    {
        const std::size_t n = m_a.num_vertices();
        std::vector<std::size_t> placed_neighbors(n, 0);
        std::vector<bool> placed(n, false);
        m_order.clear();
        while (m_order.size() < n) {
            VertexId best = kUnset;
            if (m_order.empty() && first) {
                best = *first;
            } else {
                for (VertexId u = 0; u < n; ++u) {
                    if (placed[u]) continue;
                    if (best == kUnset || placed_neighbors[u] > placed_neighbors[best]
                        || (placed_neighbors[u] == placed_neighbors[best]
                            && m_candidates[u].size() < m_candidates[best].size())) {
                        best = u;
                    }
                }
            }
            placed[best] = true;
            m_order.push_back(best);
            for (auto ei : m_a.incident_edges(best)) ++placed_neighbors[other(m_a.edges()[ei], best)];
        }
    }

    bool consistent(VertexId u, VertexId x) const
    {
        std::size_t mapped_a = 0;
        for (auto ei : m_a.incident_edges(u)) {
            const VertexId u2 = other(m_a.edges()[ei], u);
            if (m_map[u2] == kUnset) continue;
            ++mapped_a;
            const auto fe = m_b.find_edge(x, m_map[u2]);
            if (!fe) return false;
            if (relative_gap(edge_length(m_a, ei), edge_length(m_b, *fe)) > m_opt.length_tolerance) return false;
        }
        std::size_t mapped_b = 0;
        for (auto ei : m_b.incident_edges(x)) {
            if (m_inv[other(m_b.edges()[ei], x)] != kUnset) ++mapped_b;
        }
        if (mapped_a != mapped_b) return false;

        std::size_t tri_a = 0;
        for (auto ti : m_a.incident_triangles(u)) {
            const Triangle& t = m_a.triangles()[ti];
            std::array<VertexId, 2> img{};
            std::size_t k = 0;
            bool full = true;
            for (auto y : t) {
                if (y == u) continue;
                if (m_map[y] == kUnset) full = false;
                else img[k++] = m_map[y];
            }
            if (!full) continue;
            ++tri_a;
            if (!m_b.find_triangle(x, img[0], img[1])) return false;
        }
        std::size_t tri_b = 0;
        for (auto ti : m_b.incident_triangles(x)) {
            const Triangle& t = m_b.triangles()[ti];
            bool full = true;
            for (auto y : t) {
                if (y != x && m_inv[y] == kUnset) full = false;
            }
            if (full) ++tri_b;
        }
        return tri_a == tri_b;
    }

    bool extend(std::size_t depth)
    {
        if (depth == m_order.size()) return true;
        const VertexId u = m_order[depth];
        for (auto x : m_candidates[u]) {
            if (m_inv[x] != kUnset) continue;
            if (++m_nodes > m_opt.node_budget) {
                throw Error(ErrorKind::SearchBudgetExceeded, "isometry search hit its node budget");
            }
            if (!consistent(u, x)) continue;
            m_map[u] = x;
            m_inv[x] = u;
            if (extend(depth + 1)) return true;
            m_map[u] = kUnset;
            m_inv[x] = kUnset;
        }
        return false;
    }

    const EmbeddedComplex& m_a;
    const EmbeddedComplex& m_b;
    IsometryOptions m_opt;
    std::vector<std::vector<VertexId>> m_candidates;
    std::vector<VertexId> m_order;
    std::vector<VertexId> m_map, m_inv;
    std::size_t m_nodes = 0;
};

IsometryWitness make_witness(const EmbeddedComplex& a, const EmbeddedComplex& b, const std::vector<VertexId>& map)
{
    IsometryWitness w;
    w.preserves_simplices = true;
    for (std::size_t ei = 0; ei < a.edges().size(); ++ei) {
        const Edge& e = a.edges()[ei];
        const auto fe = b.find_edge(map[e[0]], map[e[1]]);
        if (!fe) {
            w.preserves_simplices = false;
            continue;
        }
        w.max_length_deviation = std::max(w.max_length_deviation, relative_gap(edge_length(a, ei), edge_length(b, *fe)));
    }
    for (const auto& t : a.triangles()) {
        if (!b.find_triangle(map[t[0]], map[t[1]], map[t[2]])) w.preserves_simplices = false;
    }
    return w;
}

// Link vertices of v in arc order, starting from `start` when it is an end.
std::vector<VertexId> arc_from(const EmbeddedComplex& c, VertexId v, VertexId start)
{
    auto order = ordered_link(c, v);
    if (!order) throw Error(ErrorKind::UnsupportedLinkShape, "link is not a polygonal arc");
    if (order->front() != start) std::reverse(order->begin(), order->end());
    return *order;
}

std::vector<double> cumulative_angles(const EmbeddedComplex& c, VertexId v, const std::vector<VertexId>& arc)
{
    std::vector<double> cum{0.0};
    for (std::size_t j = 0; j + 1 < arc.size(); ++j) {
        cum.push_back(cum.back() + corner_angle(c.point(v), c.point(arc[j]), c.point(arc[j + 1])));
    }
    return cum;
}

// Split edge (a, b) where the ray from v at `theta` (normalized, measured from
// v->a inside the triangle v a b) crosses it.
EmbeddedComplex split_by_ray(const EmbeddedComplex& c, VertexId v, VertexId a, VertexId b, double theta)
{
    const std::size_t d = c.ambient_dim();
    std::vector<double> u(d), q(d);
    double lu = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        u[i] = c.point(a)[i] - c.point(v)[i];
        q[i] = c.point(b)[i] - c.point(v)[i];
        lu += u[i] * u[i];
    }
    lu = std::sqrt(lu);
    double qu = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        u[i] /= lu;
        qu += q[i] * u[i];
    }
    double qn = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        const double r = q[i] - qu * u[i];
        qn += r * r;
    }
    qn = std::sqrt(qn);
    // 2D frame: P = (lu, 0), Q = (qu, qn), ray direction dir.
    const double ang = theta * 2.0 * std::numbers::pi;
    const double dx = std::cos(ang), dy = std::sin(ang);
    const double ex = qu - lu, ey = qn;
    const double cross_dp = dx * 0.0 - dy * lu;
    const double cross_de = dx * ey - dy * ex;
    const double t = -cross_dp / cross_de;
    return subdivide(c, SubdivisionScheme::split_edge_at(c, Edge{a, b}, t));
}

constexpr double kBreakpointMerge = 1e-9;

EmbeddedComplex refine_star(EmbeddedComplex c, VertexId v, VertexId start, const std::vector<double>& breakpoints)
{
    for (double b : breakpoints) {
        const auto arc = arc_from(c, v, start);
        const auto cum = cumulative_angles(c, v, arc);
        bool present = false;
        for (double x : cum) {
            if (std::abs(x - b) <= kBreakpointMerge) present = true;
        }
        if (present) continue;
        for (std::size_t j = 0; j + 1 < cum.size(); ++j) {
            if (cum[j] < b && b < cum[j + 1]) {
                c = split_by_ray(c, v, arc[j], arc[j + 1], b - cum[j]);
                break;
            }
        }
    }
    return c;
}

double min_spoke(const EmbeddedComplex& c, VertexId v)
{
    double m = std::numeric_limits<double>::infinity();
    for (auto ei : c.incident_edges(v)) m = std::min(m, edge_length(c, ei));
    return m;
}

EmbeddedComplex cut_spokes(EmbeddedComplex c, VertexId v, double radius)
{
    std::vector<VertexId> ends;
    for (auto ei : c.incident_edges(v)) ends.push_back(other(c.edges()[ei], v));
    for (auto y : ends) {
        const double len = edge_length(c, v, y);
        c = subdivide(c, SubdivisionScheme::split_edge_at(c, Edge{v, y}, radius / len));
    }
    return c;
}

} // namespace

std::optional<IsometryWitness> find_isometry(const EmbeddedComplex& k, const EmbeddedComplex& l, const IsometryOptions& options)
{
    Search search(k, l, options);
    const auto map = search.run(std::nullopt);
    if (!map) return std::nullopt;
    IsometryWitness w = make_witness(k, l, *map);
    for (VertexId u = 0; u < map->size(); ++u) w.vertex_bijection.emplace_back(u, (*map)[u]);
    return w;
}

std::optional<IsometryWitness> find_star_isometry(
    const EmbeddedComplex& k, VertexId v, const EmbeddedComplex& l, VertexId w, const IsometryOptions& options)
{
    k.require_vertex(v);
    l.require_vertex(w);
    const ExtractedComplex sk = extract(star(k, v));
    const ExtractedComplex sl = extract(star(l, w));
    Search search(sk.complex, sl.complex, options);
    const auto map = search.run(std::make_pair(VertexId{0}, VertexId{0}));
    if (!map) return std::nullopt;
    IsometryWitness out = make_witness(sk.complex, sl.complex, *map);
    for (VertexId u = 0; u < map->size(); ++u) {
        out.vertex_bijection.emplace_back(sk.to_parent[u], sl.to_parent[(*map)[u]]);
    }
    std::sort(out.vertex_bijection.begin(), out.vertex_bijection.end());
    return out;
}

CommonRefinement common_refinement(
    const EmbeddedComplex& k, VertexId v, const EmbeddedComplex& l, VertexId w, bool build_witness)
{
    k.require_vertex(v);
    l.require_vertex(w);
    if (!link_is_arc(k, v) || !link_is_arc(l, w)) {
        throw Error(ErrorKind::UnsupportedLinkShape, "common refinement needs polygonal-arc links");
    }
    CommonRefinement result;
    result.exists = std::abs(angle_sum(k, v) - angle_sum(l, w)) <= 1e-9;
    if (!result.exists || !build_witness) return result;

    const VertexId ks = ordered_link(k, v)->front();
    const VertexId ls = ordered_link(l, w)->front();
    const auto ck = cumulative_angles(k, v, arc_from(k, v, ks));
    const auto cl = cumulative_angles(l, w, arc_from(l, w, ls));
    std::vector<double> breaks(ck.begin() + 1, ck.end() - 1);
    breaks.insert(breaks.end(), cl.begin() + 1, cl.end() - 1);
    std::sort(breaks.begin(), breaks.end());

    EmbeddedComplex kr = refine_star(k, v, ks, breaks);
    EmbeddedComplex lr = refine_star(l, w, ls, breaks);
    const double radius = 0.5 * std::min(min_spoke(kr, v), min_spoke(lr, w));
    result.k_refined = cut_spokes(std::move(kr), v, radius);
    result.l_refined = cut_spokes(std::move(lr), w, radius);
    return result;
}

bool common_refinement_exists(const EmbeddedComplex& k, VertexId v, const EmbeddedComplex& l, VertexId w)
{
    return common_refinement(k, v, l, w, false).exists;
}

} // namespace angdef
