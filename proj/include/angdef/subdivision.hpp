#pragma once

#include <angdef/complex.hpp>

#include <array>
#include <string>
#include <vector>

namespace angdef {

/**
 * One subdivision step. split_edge and split_face insert a single vertex at
 * `point`, which must lie in the relative interior of the named simplex;
 * barycentric inserts every edge midpoint and face centroid.
 */
struct SubdivisionScheme
{
    enum class Kind { SplitEdge, SplitFace, Barycentric };

    Kind kind = Kind::Barycentric;
    SimplexTuple simplex;       // the edge or face being split (vertex indices)
    std::vector<double> point;  // ambient coordinates of the new vertex

    static SubdivisionScheme split_edge(Edge edge, std::vector<double> point);
    static SubdivisionScheme split_face(Triangle face, std::vector<double> point);
    static SubdivisionScheme barycentric();

    /// Point at parameter t along edge (a, b): (1 - t) a + t b.
    static SubdivisionScheme split_edge_at(const EmbeddedComplex& complex, Edge edge, double t);
    /// Point with barycentric weights w over the face corners (in the order given).
    static SubdivisionScheme split_face_at(const EmbeddedComplex& complex, Triangle face, std::array<double, 3> weights);

    static SubdivisionScheme edge_midpoint(const EmbeddedComplex& complex, Edge edge);
    static SubdivisionScheme face_centroid(const EmbeddedComplex& complex, Triangle face);

    std::string describe() const;
};

/**
 * Applies a scheme. Vertices of the input keep their index and coordinates;
 * new vertices are appended. split_edge on an edge of order m replaces the m
 * triangles on it with 2m; split_face replaces one triangle with three.
 */
EmbeddedComplex subdivide(const EmbeddedComplex& complex, const SubdivisionScheme& scheme);

/// Relative tolerance for "the point lies on the simplex's affine hull".
inline constexpr double kRelativeInteriorTolerance = 1e-9;

} // namespace angdef
