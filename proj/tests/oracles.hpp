#pragma once

// Reference computations written independently of the library's own code
// paths (law of cosines instead of dot products, brute-force enumeration).

#include <angdef/complex.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <span>
#include <vector>

namespace oracle {

inline double dist(std::span<const double> a, std::span<const double> b)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

/// Angle at the corner opposite side c, normalized to a full turn of 1.
inline double cosine_law_angle(double a, double b, double c)
{
    const double x = std::clamp((a * a + b * b - c * c) / (2.0 * a * b), -1.0, 1.0);
    return std::acos(x) / (2.0 * std::numbers::pi);
}

inline double angle_sum(const angdef::EmbeddedComplex& k, angdef::VertexId v)
{
    double s = 0.0;
    for (const auto& t : k.triangles()) {
        for (int i = 0; i < 3; ++i) {
            if (t[i] != v) continue;
            const auto a = t[(i + 1) % 3], b = t[(i + 2) % 3];
            s += cosine_law_angle(dist(k.point(v), k.point(a)), dist(k.point(v), k.point(b)), dist(k.point(a), k.point(b)));
        }
    }
    return s;
}

/// Vertices, edges and triangles of the link by scanning every simplex.
inline std::array<std::size_t, 3> link_fvector(const angdef::EmbeddedComplex& k, angdef::VertexId v)
{
    std::set<angdef::VertexId> verts;
    std::size_t edges = 0;
    for (const auto& e : k.edges()) {
        if (e[0] == v) verts.insert(e[1]);
        if (e[1] == v) verts.insert(e[0]);
    }
    for (const auto& t : k.triangles()) {
        if (std::find(t.begin(), t.end(), v) != t.end()) ++edges;
    }
    return {verts.size(), edges, 0};
}

/// 1 - f0/2 + f1/2 - angle_sum, from the brute-force link and cosine-law angles.
inline double curvature(const angdef::EmbeddedComplex& k, angdef::VertexId v)
{
    const auto lf = link_fvector(k, v);
    return 1.0 - 0.5 * static_cast<double>(lf[0]) + 0.5 * static_cast<double>(lf[1]) - oracle::angle_sum(k, v);
}

inline long long euler(const angdef::EmbeddedComplex& k)
{
    return static_cast<long long>(k.num_vertices()) - static_cast<long long>(k.edges().size())
        + static_cast<long long>(k.triangles().size());
}

inline double total_area(const angdef::EmbeddedComplex& k)
{
    double s = 0.0;
    for (const auto& t : k.triangles()) {
        const double a = dist(k.point(t[0]), k.point(t[1]));
        const double b = dist(k.point(t[1]), k.point(t[2]));
        const double c = dist(k.point(t[0]), k.point(t[2]));
        const double p = 0.5 * (a + b + c);
        s += std::sqrt(std::max(0.0, p * (p - a) * (p - b) * (p - c))); // Heron
    }
    return s;
}

} // namespace oracle
