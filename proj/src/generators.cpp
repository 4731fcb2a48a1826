#include <angdef/generators.hpp>

#include <angdef/metric.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace angdef {

namespace {

constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void bad_parameter(const std::string& message)
{
    throw Error(ErrorKind::BadParameter, message);
}

std::vector<double> flatten(std::span<const Point2> points)
{
    std::vector<double> out;
    out.reserve(points.size() * 2);
    for (const auto& p : points) out.insert(out.end(), p.begin(), p.end());
    return out;
}

void push3(std::vector<double>& out, const Point3& p) { out.insert(out.end(), p.begin(), p.end()); }

std::vector<SimplexTuple> fan_triangles(std::size_t m)
{
    std::vector<SimplexTuple> simplices;
    for (VertexId i = 1; i + 1 < m; ++i) simplices.push_back({0, i, i + 1});
    return simplices;
}

/// Boundary edges of a planar disk as a closed vertex cycle.
std::vector<VertexId> disk_boundary_cycle(const EmbeddedComplex& base)
{
    const FVector f = base.fvector();
    if (f.f2 == 0 || f.euler() != 1) bad_parameter("pyramid base must be a triangulated disk");
    std::vector<std::vector<VertexId>> adj(f.f0);
    std::size_t boundary_edges = 0;
    for (std::size_t e = 0; e < f.f1; ++e) {
        const auto order = base.edge_triangles(e).size();
        if (order == 0 || order > 2) bad_parameter("pyramid base must be a triangulated disk");
        if (order == 1) {
            const Edge& ed = base.edges()[e];
            adj[ed[0]].push_back(ed[1]);
            adj[ed[1]].push_back(ed[0]);
            ++boundary_edges;
        }
    }
    VertexId start = f.f0;
    for (VertexId v = 0; v < f.f0; ++v) {
        if (adj[v].empty()) continue;
        if (adj[v].size() != 2) bad_parameter("pyramid base boundary is not a single circle");
        if (start == f.f0) start = v;
    }
    std::vector<VertexId> cycle{start};
    VertexId prev = start;
    VertexId cur = adj[start][0];
    while (cur != start) {
        cycle.push_back(cur);
        const VertexId next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        if (cycle.size() > f.f0) break;
    }
    if (cycle.size() != boundary_edges) bad_parameter("pyramid base boundary is not a single circle");
    return cycle;
}

// Strictly inside: points within 1e-12 (relative) of an edge count as outside.
bool point_in_polygon(std::span<const Point2> polygon, const Point2& p)
{
    for (std::size_t i = 0, j = polygon.size() - 1; i < polygon.size(); j = i++) {
        const auto& a = polygon[j];
        const auto& b = polygon[i];
        const double ex = b[0] - a[0], ey = b[1] - a[1];
        const double len2 = ex * ex + ey * ey;
        const double t = std::clamp(((p[0] - a[0]) * ex + (p[1] - a[1]) * ey) / len2, 0.0, 1.0);
        const double dx = a[0] + t * ex - p[0], dy = a[1] + t * ey - p[1];
        if (dx * dx + dy * dy <= 1e-24 * len2) return false;
    }
    bool inside = false;
    for (std::size_t i = 0, j = polygon.size() - 1; i < polygon.size(); j = i++) {
        const auto& a = polygon[i];
        const auto& b = polygon[j];
        if ((a[1] > p[1]) != (b[1] > p[1])
            && p[0] < (b[0] - a[0]) * (p[1] - a[1]) / (b[1] - a[1]) + a[0]) {
            inside = !inside;
        }
    }
    return inside;
}

/// Suspension of a polygon without apex validation.
EmbeddedComplex suspension(std::span<const Point2> polygon, const Point3& top, const Point3& bottom)
{
    const std::size_t m = polygon.size();
    std::vector<double> coords;
    coords.reserve((m + 2) * 3);
    for (const auto& p : polygon) push3(coords, {p[0], p[1], 0.0});
    push3(coords, top);
    push3(coords, bottom);
    std::vector<SimplexTuple> simplices;
    for (VertexId i = 0; i < m; ++i) {
        const VertexId j = (i + 1) % m;
        simplices.push_back({m, i, j});
        simplices.push_back({m + 1, i, j});
    }
    return EmbeddedComplex::build(3, std::move(coords), simplices, {.auto_close_faces = true});
}

/// The end-vertex paired with `end_vertex` in an n-flap.
VertexId flap_other_end(const EmbeddedComplex& flap, VertexId end_vertex)
{
    flap.require_vertex(end_vertex);
    const ComplexClass c = classify(flap);
    if (!c.is_n_flap) bad_parameter("complex is not an n-flap");
    const std::size_t n = c.flap_n;
    for (auto ei : flap.incident_edges(end_vertex)) {
        if (flap.edge_triangles(ei).size() == n) {
            const Edge& e = flap.edges()[ei];
            return e[0] == end_vertex ? e[1] : e[0];
        }
    }
    bad_parameter("vertex is not an end-vertex of the flap");
}

/// L - A^T (A A^T)^{-1} A L, the orthogonal projection onto closed polygons.
std::vector<double> project_onto_closure(std::vector<double> lengths, std::span<const Point2> dirs)
{
    double m00 = 0.0, m01 = 0.0, m11 = 0.0, r0 = 0.0, r1 = 0.0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
        m00 += dirs[i][0] * dirs[i][0];
        m01 += dirs[i][0] * dirs[i][1];
        m11 += dirs[i][1] * dirs[i][1];
        r0 += dirs[i][0] * lengths[i];
        r1 += dirs[i][1] * lengths[i];
    }
    const double det = m00 * m11 - m01 * m01;
    if (!(std::abs(det) > 1e-14)) throw Error(ErrorKind::ClosureFailure, "edge directions do not span the plane");
    const double y0 = (m11 * r0 - m01 * r1) / det;
    const double y1 = (m00 * r1 - m01 * r0) / det;
    for (std::size_t i = 0; i < dirs.size(); ++i) lengths[i] -= dirs[i][0] * y0 + dirs[i][1] * y1;
    return lengths;
}

/// Strictly positive closing lengths built from three-edge closures: for each
/// edge i pick j, k with d_i + a d_j + b d_k = 0, a, b > 0, and add them up.
std::optional<std::vector<double>> positive_closure(std::span<const Point2> dirs)
{
    const std::size_t m = dirs.size();
    std::vector<double> total(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double best_quality = 0.0;
        std::size_t best_j = m, best_k = m;
        double best_a = 0.0, best_b = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            for (std::size_t k = j + 1; k < m; ++k) {
                if (k == i) continue;
                const double det = dirs[j][0] * dirs[k][1] - dirs[j][1] * dirs[k][0];
                if (std::abs(det) < 1e-12) continue;
                const double a = (-dirs[i][0] * dirs[k][1] + dirs[i][1] * dirs[k][0]) / det;
                const double b = (-dirs[j][0] * dirs[i][1] + dirs[j][1] * dirs[i][0]) / det;
                if (a <= 0.0 || b <= 0.0) continue;
                const double quality = std::min({1.0, a, b}) / std::max({1.0, a, b});
                if (quality > best_quality) {
                    best_quality = quality;
                    best_j = j;
                    best_k = k;
                    best_a = a;
                    best_b = b;
                }
            }
        }
        if (best_j == m) return std::nullopt;
        total[i] += 1.0;
        total[best_j] += best_a;
        total[best_k] += best_b;
    }
    return total;
}

} // namespace

// ---------------------------------------------------------------------------

std::vector<Point2> regular_polygon(std::size_t n, double radius)
{
    std::vector<Point2> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
        pts[i] = {radius * std::cos(t), radius * std::sin(t)};
    }
    return pts;
}

EmbeddedComplex regular_polygon_fan(std::size_t n)
{
    if (n < 3) bad_parameter("regular polygon needs at least 3 vertices");
    const auto pts = regular_polygon(n);
    return EmbeddedComplex::build(2, flatten(pts), fan_triangles(n), {.auto_close_faces = true});
}

PolygonSolution solve_polygon(std::span<const double> interior_angles)
{
    const std::size_t m = interior_angles.size();
    if (m < 3) throw Error(ErrorKind::InfeasibleAngles, "a polygon needs at least 3 angles");
    double turning = 0.0;
    for (double a : interior_angles) {
        if (!(a > 0.0 && a < 1.0)) throw Error(ErrorKind::InfeasibleAngles, "interior angles must lie in (0, 1)");
        turning += 0.5 - a;
    }
    if (std::abs(turning - 1.0) > 1e-9) {
        std::ostringstream msg;
        msg << "exterior angles sum to " << turning << ", not 1";
        throw Error(ErrorKind::InfeasibleAngles, msg.str());
    }

    // Edge i leaves vertex i; the walk turns by 1/2 - a_i at vertex i.
    std::vector<Point2> dirs(m);
    double heading = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        if (i > 0) heading += 0.5 - interior_angles[i];
        dirs[i] = {std::cos(2.0 * kPi * heading), std::sin(2.0 * kPi * heading)};
    }

    PolygonSolution sol;
    sol.lengths = project_onto_closure(std::vector<double>(m, 1.0), dirs);
    const double min_len = *std::min_element(sol.lengths.begin(), sol.lengths.end());
    if (!(min_len > 1e-3)) {
        auto fallback = positive_closure(dirs);
        if (!fallback) throw Error(ErrorKind::ClosureFailure, "no positive edge lengths close the polygon");
        sol.lengths = project_onto_closure(std::move(*fallback), dirs);
        sol.used_fallback = true;
        if (!(*std::min_element(sol.lengths.begin(), sol.lengths.end()) > 0.0)) {
            throw Error(ErrorKind::ClosureFailure, "no positive edge lengths close the polygon");
        }
    }
    const double mean = std::accumulate(sol.lengths.begin(), sol.lengths.end(), 0.0) / static_cast<double>(m);
    for (double& l : sol.lengths) l /= mean;

    sol.vertices.resize(m);
    Point2 p{0.0, 0.0};
    for (std::size_t i = 0; i < m; ++i) {
        sol.vertices[i] = p;
        p = {p[0] + sol.lengths[i] * dirs[i][0], p[1] + sol.lengths[i] * dirs[i][1]};
    }
    sol.closure_error = std::hypot(p[0], p[1]);
    return sol;
}

EmbeddedComplex prescribed_angle_polygon(std::span<const double> interior_angles)
{
    for (double a : interior_angles) {
        if (!(a > 0.0 && a < 0.5)) throw Error(ErrorKind::InfeasibleAngles, "convex polygon angles must lie in (0, 1/2)");
    }
    const PolygonSolution sol = solve_polygon(interior_angles);
    return EmbeddedComplex::build(
        2, flatten(sol.vertices), fan_triangles(sol.vertices.size()), {.auto_close_faces = true});
}

EmbeddedComplex quadrilateral_with_angle(double beta)
{
    if (!(beta > 0.0 && beta < 1.0)) bad_parameter("quadrilateral angle must lie in (0, 1)");
    const double rest = (1.0 - beta) / 3.0;
    const std::array<double, 4> angles{beta, rest, rest, rest};
    const PolygonSolution sol = solve_polygon(angles);
    return EmbeddedComplex::build(2, flatten(sol.vertices), fan_triangles(4), {.auto_close_faces = true});
}

// ---------------------------------------------------------------------------

EmbeddedComplex lift_to_3d(const EmbeddedComplex& planar)
{
    if (planar.ambient_dim() == 3) return planar;
    if (planar.ambient_dim() != 2) bad_parameter("expected a complex in R^2");
    std::vector<double> coords;
    coords.reserve(planar.num_vertices() * 3);
    for (VertexId v = 0; v < planar.num_vertices(); ++v) {
        auto p = planar.point(v);
        push3(coords, {p[0], p[1], 0.0});
    }
    return planar.with_coordinates(3, std::move(coords));
}

EmbeddedComplex pyramid(const EmbeddedComplex& base, const Point3& apex)
{
    const EmbeddedComplex base3 = lift_to_3d(base);
    if (!is_coplanar(base3)) bad_parameter("pyramid base is not planar");
    const auto cycle = disk_boundary_cycle(base3);

    // Plane normal from the first triangle.
    const Triangle& t = base3.triangles().front();
    auto a = base3.point(t[0]);
    auto b = base3.point(t[1]);
    auto c = base3.point(t[2]);
    const Point3 u{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
    const Point3 w{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
    Point3 n{u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0]};
    const double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    double scale = 0.0;
    for (VertexId v = 0; v < base3.num_vertices(); ++v) scale = std::max(scale, distance(base3.point(v), a));
    const double height = ((apex[0] - a[0]) * n[0] + (apex[1] - a[1]) * n[1] + (apex[2] - a[2]) * n[2]) / nn;
    if (!(std::abs(height) > 1e-9 * scale)) throw Error(ErrorKind::ApexInPlane, "pyramid apex lies in the base plane");

    std::vector<double> coords = base3.coordinates();
    push3(coords, apex);
    const VertexId top = base3.num_vertices();
    std::vector<SimplexTuple> simplices;
    for (const auto& tri : base3.triangles()) simplices.push_back({tri[0], tri[1], tri[2]});
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        simplices.push_back({top, cycle[i], cycle[(i + 1) % cycle.size()]});
    }
    return EmbeddedComplex::build(3, std::move(coords), simplices, {.auto_close_faces = true});
}

EmbeddedComplex bipyramid(std::span<const Point2> polygon, const Point3& top, const Point3& bottom)
{
    if (polygon.size() < 3) bad_parameter("bipyramid polygon needs at least 3 vertices");
    double scale = 0.0;
    for (const auto& p : polygon) scale = std::max(scale, std::hypot(p[0], p[1]));
    const double tol = 1e-9 * std::max(scale, 1.0);
    if (!(std::abs(top[2]) > tol) || !(std::abs(bottom[2]) > tol)) {
        throw Error(ErrorKind::ApexInPlane, "bipyramid apex lies in the polygon plane");
    }
    if ((top[2] > 0.0) == (bottom[2] > 0.0)) {
        throw Error(ErrorKind::ApicesSameSide, "bipyramid apices lie on the same side of the polygon plane");
    }
    return suspension(polygon, top, bottom);
}

std::vector<double> apex_heights(std::size_t k, double h0, HeightSchedule schedule)
{
    if (k == 0) bad_parameter("sequence length must be at least 1");
    if (!(h0 > 0.0)) bad_parameter("initial height must be positive");
    std::vector<double> hs(k);
    for (std::size_t j = 1; j <= k; ++j) {
        hs[j - 1] = schedule == HeightSchedule::Harmonic ? h0 / static_cast<double>(j)
                                                         : std::ldexp(h0, -static_cast<int>(j));
    }
    return hs;
}

std::vector<EmbeddedComplex> pyramid_apex_sequence(
    const EmbeddedComplex& base,
    const Point2& limit_point,
    std::size_t k,
    HeightSchedule schedule,
    double h0)
{
    if (base.ambient_dim() != 2) bad_parameter("apex sequences expect a base in R^2");
    std::vector<Point2> boundary;
    for (auto v : disk_boundary_cycle(base)) boundary.push_back({base.point(v)[0], base.point(v)[1]});
    if (!point_in_polygon(boundary, limit_point)) bad_parameter("limit point is not interior to the base");
    std::vector<EmbeddedComplex> out;
    for (double h : apex_heights(k, h0, schedule)) out.push_back(pyramid(base, {limit_point[0], limit_point[1], h}));
    return out;
}

std::vector<EmbeddedComplex> bipyramid_apex_sequence(
    std::span<const Point2> polygon,
    const Point3& top,
    const Point2& limit_point,
    std::size_t k,
    HeightSchedule schedule,
    double h0)
{
    if (!point_in_polygon(polygon, limit_point)) bad_parameter("limit point is not inside the polygon");
    std::vector<EmbeddedComplex> out;
    for (double h : apex_heights(k, h0, schedule)) {
        out.push_back(bipyramid(polygon, top, {limit_point[0], limit_point[1], -h}));
    }
    return out;
}

EmbeddedComplex bipyramid_apex_limit(std::span<const Point2> polygon, const Point3& top, const Point2& limit_point)
{
    if (!point_in_polygon(polygon, limit_point)) bad_parameter("limit point is not inside the polygon");
    return suspension(polygon, top, {limit_point[0], limit_point[1], 0.0});
}

// ---------------------------------------------------------------------------

EmbeddedComplex n_flap(std::size_t n, std::span<const double> angles, std::optional<std::vector<double>> dihedrals)
{
    if (angles.size() != n) bad_parameter("n-flap needs exactly n angles");
    if (dihedrals && dihedrals->size() != n) bad_parameter("n-flap needs exactly n dihedral angles");
    std::vector<double> coords{0.0, 0.0, 0.0, 1.0, 0.0, 0.0};
    std::vector<SimplexTuple> simplices{{0, 1}};
    for (std::size_t i = 0; i < n; ++i) {
        const double a = angles[i];
        if (!(a > 0.0 && a < 0.5)) bad_parameter("flap angles must lie in (0, 1/2)");
        const double phi = dihedrals ? (*dihedrals)[i] : 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
        const double r = 2.0 * kPi * a;
        push3(coords, {std::cos(r), std::sin(r) * std::cos(phi), std::sin(r) * std::sin(phi)});
        simplices.push_back({0, 1, 2 + i});
    }
    return EmbeddedComplex::build(3, std::move(coords), simplices, {.auto_close_faces = true});
}

EmbeddedComplex mirror_flap(const EmbeddedComplex& flap, VertexId end_vertex)
{
    const VertexId w = flap_other_end(flap, end_vertex);
    const std::size_t dim = flap.ambient_dim();
    const auto v = flap.point(end_vertex);
    const auto wp = flap.point(w);
    const double spine = distance(v, wp);
    std::vector<double> axis(dim);
    for (std::size_t i = 0; i < dim; ++i) axis[i] = (wp[i] - v[i]) / spine;

    std::vector<VertexId> pages;
    std::vector<double> reach; // axial coordinate of each page vertex
    double cut = spine;
    for (VertexId u = 0; u < flap.num_vertices(); ++u) {
        if (u == end_vertex || u == w) continue;
        if (corner_angle(v, wp, flap.point(u)) >= 0.25) {
            std::ostringstream msg;
            msg << "angle at the end-vertex in the page through vertex " << u << " is not below 1/4";
            throw Error(ErrorKind::AngleTooLarge, msg.str());
        }
        const auto p = flap.point(u);
        double s = 0.0;
        for (std::size_t i = 0; i < dim; ++i) s += (p[i] - v[i]) * axis[i];
        pages.push_back(u);
        reach.push_back(s);
        cut = std::min(cut, s);
    }
    // Cutting plane strictly between the end-vertex and everything else.
    const double t = 0.5 * cut;

    std::vector<double> coords(v.begin(), v.end());
    for (std::size_t i = 0; i < dim; ++i) coords.push_back(v[i] + 2.0 * t * axis[i]);
    std::vector<SimplexTuple> simplices{{0, 1}};
    for (std::size_t k = 0; k < pages.size(); ++k) {
        const auto p = flap.point(pages[k]);
        const double f = t / reach[k];
        for (std::size_t i = 0; i < dim; ++i) coords.push_back(v[i] + f * (p[i] - v[i]));
        simplices.push_back({0, 1, 2 + k});
    }
    return EmbeddedComplex::build(dim, std::move(coords), simplices, {.auto_close_faces = true});
}

EmbeddedComplex shrink_flap_angles(const EmbeddedComplex& flap, VertexId end_vertex)
{
    const VertexId v = flap_other_end(flap, end_vertex);
    const std::size_t dim = flap.ambient_dim();
    const auto vp = flap.point(v);
    const auto wp = flap.point(end_vertex);
    constexpr double kTarget = 0.2;

    std::vector<double> coords = flap.coordinates();
    for (VertexId u = 0; u < flap.num_vertices(); ++u) {
        if (u == v || u == end_vertex) continue;
        const auto e = flap.point(u);
        if (corner_angle(wp, vp, e) < 0.25) continue;
        std::vector<double> moved(dim);
        auto at = [&](double s) {
            for (std::size_t i = 0; i < dim; ++i) moved[i] = vp[i] + s * (e[i] - vp[i]);
            return corner_angle(wp, vp, moved);
        };
        // The angle at end_vertex grows monotonically with s; bisect for kTarget.
        double lo = 0.0, hi = 1.0;
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            (at(mid) < kTarget ? lo : hi) = mid;
        }
        at(lo);
        std::copy(moved.begin(), moved.end(), coords.begin() + static_cast<std::ptrdiff_t>(u * dim));
    }
    return flap.with_coordinates(dim, std::move(coords));
}

// ---------------------------------------------------------------------------

SpiralRibbon spiral_ribbon(std::size_t turns, double ribbon_width)
{
    constexpr double kPitch = 1.0;
    constexpr double kInnerRadius = 2.0 * kPitch;
    constexpr std::size_t kSegmentsPerTurn = 12;
    if (turns < 1) bad_parameter("spiral needs at least one turn");
    if (!(ribbon_width > 0.0)) bad_parameter("ribbon width must be positive");
    if (ribbon_width >= kPitch) {
        std::ostringstream msg;
        msg << "ribbon width " << ribbon_width << " overlaps the next winding (pitch " << kPitch << ")";
        throw Error(ErrorKind::RibbonSelfOverlap, msg.str());
    }

    const std::size_t m = kSegmentsPerTurn * turns;
    auto center = [&](std::size_t k, double offset) {
        const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(kSegmentsPerTurn);
        const double r = kInnerRadius + kPitch * theta / (2.0 * kPi) + offset;
        return Point2{r * std::cos(theta), r * std::sin(theta)};
    };

    SpiralRibbon ribbon;
    ribbon.inner_radius = kInnerRadius;
    ribbon.pitch = kPitch;
    ribbon.polygon.push_back(center(0, 0.0));
    for (std::size_t k = 1; k < m; ++k) ribbon.polygon.push_back(center(k, 0.5 * ribbon_width));
    ribbon.polygon.push_back(center(m, 0.0));
    for (std::size_t k = m - 1; k >= 1; --k) ribbon.polygon.push_back(center(k, -0.5 * ribbon_width));
    return ribbon;
}

namespace {

double spiral_apex_sum(const SpiralRibbon& ribbon, double height)
{
    const std::array<double, 3> apex{0.0, 0.0, height};
    double sum = 0.0;
    const auto& poly = ribbon.polygon;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& a = poly[i];
        const auto& b = poly[(i + 1) % poly.size()];
        const std::array<double, 3> a3{a[0], a[1], 0.0};
        const std::array<double, 3> b3{b[0], b[1], 0.0};
        sum += corner_angle(apex, a3, b3);
    }
    return sum;
}

} // namespace

double spiral_apex_sum_limit(const SpiralRibbon& ribbon)
{
    double sum = 0.0;
    const std::array<double, 2> origin{0.0, 0.0};
    const auto& poly = ribbon.polygon;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        sum += corner_angle(origin, poly[i], poly[(i + 1) % poly.size()]);
    }
    return sum;
}

SpiralBipyramid spiral_bipyramid(double target_omega, std::size_t turns, double ribbon_width)
{
    if (!(target_omega > 0.0) || !std::isfinite(target_omega)) bad_parameter("target angle sum must be positive");
    const SpiralRibbon ribbon = spiral_ribbon(turns, ribbon_width);

    double outer = 0.0;
    for (const auto& p : ribbon.polygon) outer = std::max(outer, std::hypot(p[0], p[1]));
    double log_lo = std::log(1e-6 * ribbon.inner_radius);
    double log_hi = std::log(1e6 * outer);
    const double sum_lo = spiral_apex_sum(ribbon, std::exp(log_lo));
    if (!(target_omega < sum_lo)) {
        std::ostringstream msg;
        msg << "apex angle sum " << target_omega << " exceeds what " << turns
            << " turn(s) can reach (about " << sum_lo << "); increase turns";
        throw Error(ErrorKind::TargetUnreachable, msg.str());
    }
    if (!(target_omega > spiral_apex_sum(ribbon, std::exp(log_hi)))) {
        throw Error(ErrorKind::TargetUnreachable, "apex angle sum too small for the height range");
    }

    // The apex sum decreases with height; bisect on log(height).
    SpiralBipyramid out;
    double log_mid = 0.5 * (log_lo + log_hi);
    for (out.iterations = 1; out.iterations <= 200; ++out.iterations) {
        log_mid = 0.5 * (log_lo + log_hi);
        const double s = spiral_apex_sum(ribbon, std::exp(log_mid));
        if (std::abs(s - target_omega) < 1e-13) break;
        (s > target_omega ? log_lo : log_hi) = log_mid;
    }
    out.iterations = std::min<std::size_t>(out.iterations, 200);
    out.height = std::exp(log_mid);
    out.complex = bipyramid(ribbon.polygon, {0.0, 0.0, out.height}, {0.0, 0.0, -out.height});
    out.top = ribbon.polygon.size();
    out.bottom = out.top + 1;
    out.achieved_omega = angle_sum(out.complex, out.top);

    for (VertexId v = 0; v < out.top; ++v) {
        if (!(angle_sum(out.complex, v) < 1.0 - 1e-9)) {
            std::ostringstream msg;
            msg << "ribbon vertex " << v << " reaches angle sum " << angle_sum(out.complex, v)
                << "; ribbon too wide";
            throw Error(ErrorKind::RibbonSelfOverlap, msg.str());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Triangles on the given points whose three sides all have length `side`.
std::vector<SimplexTuple> equilateral_faces(const std::vector<Point3>& pts, double side)
{
    std::vector<SimplexTuple> faces;
    auto len = [&](std::size_t a, std::size_t b) { return distance(pts[a], pts[b]); };
    for (std::size_t a = 0; a < pts.size(); ++a) {
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            if (std::abs(len(a, b) - side) > 1e-9) continue;
            for (std::size_t c = b + 1; c < pts.size(); ++c) {
                if (std::abs(len(a, c) - side) < 1e-9 && std::abs(len(b, c) - side) < 1e-9) faces.push_back({a, b, c});
            }
        }
    }
    return faces;
}

EmbeddedComplex from_points(const std::vector<Point3>& pts, const std::vector<SimplexTuple>& faces)
{
    std::vector<double> coords;
    for (const auto& p : pts) push3(coords, p);
    return EmbeddedComplex::build(3, std::move(coords), faces, {.auto_close_faces = true});
}

} // namespace

EmbeddedComplex regular_tetrahedron()
{
    const std::vector<Point3> pts{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    return from_points(pts, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

EmbeddedComplex octahedron()
{
    const std::vector<Point3> pts{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    return from_points(pts, equilateral_faces(pts, std::sqrt(2.0)));
}

EmbeddedComplex icosahedron()
{
    const double g = 0.5 * (1.0 + std::sqrt(5.0));
    std::vector<Point3> pts;
    for (double s : {-1.0, 1.0}) {
        for (double t : {-g, g}) {
            pts.push_back({0.0, s, t});
            pts.push_back({s, t, 0.0});
            pts.push_back({t, 0.0, s});
        }
    }
    return from_points(pts, equilateral_faces(pts, 2.0));
}

EmbeddedComplex csaszar_torus()
{
    const std::vector<Point3> pts{
        {-20, -20, -10}, {-20, 20, -15}, {-5, -8, 8}, {0, 0, 30}, {5, 8, 8}, {20, -20, -15}, {20, 20, -10}};
    return from_points(
        pts,
        {{1, 3, 6}, {1, 6, 5}, {2, 5, 6}, {0, 2, 6}, {0, 6, 4}, {3, 4, 6}, {1, 2, 3},
         {1, 4, 2}, {1, 0, 4}, {1, 5, 0}, {3, 5, 4}, {0, 5, 3}, {0, 3, 2}, {2, 4, 5}});
}

EmbeddedComplex regular_pyramid(std::size_t n, double height)
{
    return pyramid(regular_polygon_fan(n), {0.0, 0.0, height});
}

EmbeddedComplex regular_bipyramid(std::size_t m, double height)
{
    const auto poly = regular_polygon(m);
    return bipyramid(poly, {0.0, 0.0, height}, {0.0, 0.0, -height});
}

EmbeddedComplex triangle_wedge(std::size_t k)
{
    if (k == 0) bad_parameter("wedge needs at least one triangle");
    std::vector<double> coords{0.0, 0.0, 0.0};
    std::vector<SimplexTuple> simplices;
    for (std::size_t i = 0; i < k; ++i) {
        // Each triangle in its own direction, spread around the z-axis and tilted.
        const double phi = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(k);
        const double tilt = 0.3 + 0.4 * static_cast<double>(i) / static_cast<double>(k);
        const Point3 dir{std::cos(phi) * std::cos(tilt), std::sin(phi) * std::cos(tilt), std::sin(tilt)};
        const Point3 side{-std::sin(phi), std::cos(phi), 0.0};
        const double open = 0.15 + 0.05 * static_cast<double>(i % 3);
        const double len_a = 1.0 + 0.1 * static_cast<double>(i);
        push3(coords, {len_a * dir[0], len_a * dir[1], len_a * dir[2]});
        push3(coords,
              {dir[0] + open * side[0], dir[1] + open * side[1], dir[2] + open * side[2]});
        simplices.push_back({0, 1 + 2 * i, 2 + 2 * i});
    }
    return EmbeddedComplex::build(3, std::move(coords), simplices, {.auto_close_faces = true});
}

EmbeddedComplex fan_with_dangling_edge(std::size_t n)
{
    const EmbeddedComplex fan = lift_to_3d(regular_polygon_fan(n));
    std::vector<double> coords = fan.coordinates();
    push3(coords, {-0.5, 0.3, 1.2});
    std::vector<SimplexTuple> simplices;
    for (const auto& t : fan.triangles()) simplices.push_back({t[0], t[1], t[2]});
    simplices.push_back({0, fan.num_vertices()});
    return EmbeddedComplex::build(3, std::move(coords), simplices, {.auto_close_faces = true});
}

std::array<std::array<double, 3>, 3> rotation_matrix(const Point3& axis, double radians)
{
    const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
    const double x = axis[0] / n, y = axis[1] / n, z = axis[2] / n;
    const double c = std::cos(radians), s = std::sin(radians), t = 1.0 - c;
    return {{{t * x * x + c, t * x * y - s * z, t * x * z + s * y},
             {t * x * y + s * z, t * y * y + c, t * y * z - s * x},
             {t * x * z - s * y, t * y * z + s * x, t * z * z + c}}};
}

EmbeddedComplex rigid_motion(
    const EmbeddedComplex& complex,
    const std::array<std::array<double, 3>, 3>& rotation,
    const Point3& translation)
{
    const EmbeddedComplex k = lift_to_3d(complex);
    std::vector<double> coords;
    coords.reserve(k.num_vertices() * 3);
    for (VertexId v = 0; v < k.num_vertices(); ++v) {
        auto p = k.point(v);
        for (std::size_t r = 0; r < 3; ++r) {
            coords.push_back(rotation[r][0] * p[0] + rotation[r][1] * p[1] + rotation[r][2] * p[2] + translation[r]);
        }
    }
    return k.with_coordinates(3, std::move(coords));
}

EmbeddedComplex scaled(const EmbeddedComplex& complex, double factor)
{
    std::vector<double> coords = complex.coordinates();
    for (double& x : coords) x *= factor;
    return complex.with_coordinates(complex.ambient_dim(), std::move(coords));
}

EmbeddedComplex translated(const EmbeddedComplex& complex, std::span<const double> offset)
{
    const std::size_t dim = complex.ambient_dim();
    if (offset.size() != dim) bad_parameter("offset dimension mismatch");
    std::vector<double> coords = complex.coordinates();
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += offset[i % dim];
    return complex.with_coordinates(dim, std::move(coords));
}

} // namespace angdef
