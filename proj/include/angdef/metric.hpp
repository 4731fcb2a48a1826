#pragma once

#include <angdef/complex.hpp>

#include <span>

namespace angdef {

// Angles are normalized so that a full turn is 1.
inline constexpr double kFullTurn = 6.283185307179586476925286766559;

/// Interior angle at `vertex` of the triangle with the two other corners.
double corner_angle(std::span<const double> vertex, std::span<const double> a, std::span<const double> b);

/// Interior angle at v of the 2-simplex `triangle` (index into triangles()).
double interior_angle(const EmbeddedComplex& complex, VertexId v, std::size_t triangle);

/// Interior angle at v of the 2-simplex with the given vertices.
double interior_angle(const EmbeddedComplex& complex, VertexId v, const Triangle& triangle);

/// Sum of the interior angles at v over all 2-simplices containing v.
double angle_sum(const EmbeddedComplex& complex, VertexId v);

/// Exterior angle at v of a 0-, 1- or 2-simplex containing v:
/// 1 for the vertex, 1/2 for an edge, 1/2 minus the interior angle for a triangle.
double exterior_angle(const EmbeddedComplex& complex, VertexId v, const SimplexTuple& simplex);

double edge_length(const EmbeddedComplex& complex, VertexId a, VertexId b);
double edge_length(const EmbeddedComplex& complex, std::size_t edge);

double distance(std::span<const double> a, std::span<const double> b);

/// Area of the triangle with the given corners (any ambient dimension).
double triangle_area(std::span<const double> a, std::span<const double> b, std::span<const double> c);

} // namespace angdef
