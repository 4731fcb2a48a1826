#pragma once

#include <angdef/complex.hpp>

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace angdef {

using Point2 = std::array<double, 2>;
using Point3 = std::array<double, 3>;

// ---------------------------------------------------------------------------
// Planar fans and polygons. Outputs live in R^2 and are coned from vertex 0.

/// Regular n-gon on the unit circle, fan-triangulated from vertex 0.
EmbeddedComplex regular_polygon_fan(std::size_t n);

/// Vertices of a regular n-gon on a circle of the given radius.
std::vector<Point2> regular_polygon(std::size_t n, double radius = 1.0);

/// Polygon realizing prescribed interior angles, before triangulation.
struct PolygonSolution
{
    std::vector<Point2> vertices;   // counterclockwise; vertex i has angle i
    std::vector<double> lengths;    // edge i runs from vertex i to vertex i+1
    double closure_error = 0.0;     // |walk end - start| before snapping
    bool used_fallback = false;     // min-norm lengths were not all positive
};

/**
 * Solves for a closed polygon with the given interior angles (normalized, so
 * the exterior angles 1/2 - a_i must sum to 1). Edge directions follow from
 * the turning angles; lengths are the minimum-norm correction of the all-ones
 * vector onto the closure constraints, falling back to a positive combination
 * of three-edge closures when that correction is not strictly positive.
 * Angles may exceed 1/2 (reflex corners) as long as lengths stay positive.
 */
PolygonSolution solve_polygon(std::span<const double> interior_angles);

/// Convex polygon with the given angles, each in (0, 1/2), fan-triangulated from vertex 0.
EmbeddedComplex prescribed_angle_polygon(std::span<const double> interior_angles);

/// Quadrilateral with angle beta at vertex 0 and (1 - beta)/3 at the others.
/// Coned from vertex 0 so that reflex beta is also triangulated correctly.
EmbeddedComplex quadrilateral_with_angle(double beta);

// ---------------------------------------------------------------------------
// Pyramids and bipyramids. Outputs live in R^3.

/// Boundary of the cone on a planar simplicial disk: the base triangles plus a
/// triangle from the apex over every boundary edge. The apex gets the index
/// base.num_vertices(); base vertices keep theirs.
EmbeddedComplex pyramid(const EmbeddedComplex& base, const Point3& apex);

/// Boundary of the suspension of a planar polygon (given as its boundary
/// cycle in the z = 0 plane). Vertex m is the top apex, m + 1 the bottom one.
EmbeddedComplex bipyramid(std::span<const Point2> polygon, const Point3& top, const Point3& bottom);

enum class HeightSchedule {
    Harmonic,  // h0 / j
    Geometric, // h0 * 2^-j
};

/// Heights h_1..h_k of an apex approaching its limit.
std::vector<double> apex_heights(std::size_t k, double h0, HeightSchedule schedule);

/// Pyramids on `base` (z = 0) with apex at limit_point + h_j e_z.
std::vector<EmbeddedComplex> pyramid_apex_sequence(
    const EmbeddedComplex& base,
    const Point2& limit_point,
    std::size_t k,
    HeightSchedule schedule = HeightSchedule::Harmonic,
    double h0 = 1.0);

/// Bipyramids on `polygon` with a fixed top apex and a bottom apex at
/// limit_point - h_j e_z.
std::vector<EmbeddedComplex> bipyramid_apex_sequence(
    std::span<const Point2> polygon,
    const Point3& top,
    const Point2& limit_point,
    std::size_t k,
    HeightSchedule schedule = HeightSchedule::Harmonic,
    double h0 = 1.0);

/// The limit of bipyramid_apex_sequence: same abstract complex, bottom apex
/// placed at limit_point inside the polygon.
EmbeddedComplex bipyramid_apex_limit(std::span<const Point2> polygon, const Point3& top, const Point2& limit_point);

// ---------------------------------------------------------------------------
// Flaps. End-vertices are 0 and 1; the page vertices follow.

/// n triangles around the edge from (0,0,0) to (1,0,0). Page i has angle
/// angles[i] at vertex 0, unit length from vertex 0 to its page vertex, and is
/// rotated about the edge by dihedrals[i] radians (default 2 pi i / n).
EmbeddedComplex n_flap(
    std::size_t n,
    std::span<const double> angles,
    std::optional<std::vector<double>> dihedrals = std::nullopt);

/// Cut the flap by a plane perpendicular to its spine near `end_vertex` and
/// double the piece on that side by reflection. The result is again an n-flap
/// with end-vertices 0 (the original end) and 1 (its mirror image), symmetric
/// under the reflection. Requires every angle at `end_vertex` below 1/4.
EmbeddedComplex mirror_flap(const EmbeddedComplex& flap, VertexId end_vertex);

/// Slide each page vertex toward the other end-vertex until the angle at
/// `end_vertex` is below 1/4. Angles at the other end-vertex are unchanged.
EmbeddedComplex shrink_flap_angles(const EmbeddedComplex& flap, VertexId end_vertex);

// ---------------------------------------------------------------------------
// Spiral ribbon bipyramid.

struct SpiralRibbon
{
    std::vector<Point2> polygon;
    double inner_radius = 0.0;
    double pitch = 0.0;
};

/// Ribbon around an Archimedean spiral r = r0 + pitch * theta / 2pi with
/// `turns` windings, 12 segments per turn, tapering to a point at both ends.
/// The spiral center (origin) is outside the ribbon.
SpiralRibbon spiral_ribbon(std::size_t turns, double ribbon_width);

struct SpiralBipyramid
{
    EmbeddedComplex complex;
    VertexId top = 0;
    VertexId bottom = 0;
    double height = 0.0;
    double achieved_omega = 0.0;
    std::size_t iterations = 0;
};

/// Bipyramid over a spiral ribbon with apices at (0, 0, +-h) over the spiral
/// center; h is found by bisection so the apex angle sum equals target_omega.
/// Every ribbon vertex has angle sum below 1.
SpiralBipyramid spiral_bipyramid(double target_omega, std::size_t turns, double ribbon_width);

/// Upper bound on the apex angle sum over the given ribbon (apex height -> 0).
double spiral_apex_sum_limit(const SpiralRibbon& ribbon);

// ---------------------------------------------------------------------------
// Reference complexes.

EmbeddedComplex regular_tetrahedron();
EmbeddedComplex octahedron();
EmbeddedComplex icosahedron();
/// The 7-vertex Csaszar torus with integer coordinates.
EmbeddedComplex csaszar_torus();
/// Regular polygon base with apex above its center.
EmbeddedComplex regular_pyramid(std::size_t n, double height);
/// m-gon bipyramid with apices at +-height over the center.
EmbeddedComplex regular_bipyramid(std::size_t m, double height);
/// k triangles meeting only at vertex 0.
EmbeddedComplex triangle_wedge(std::size_t k);
/// Planar fan in R^3 plus one extra edge hanging off its apex.
EmbeddedComplex fan_with_dangling_edge(std::size_t n);

/// Lift a planar complex into R^3 (z = 0).
EmbeddedComplex lift_to_3d(const EmbeddedComplex& planar);

/// Apply x -> R x + t to every vertex of a complex in R^3.
EmbeddedComplex rigid_motion(
    const EmbeddedComplex& complex,
    const std::array<std::array<double, 3>, 3>& rotation,
    const Point3& translation);

/// Rotation about a unit axis by an angle in radians.
std::array<std::array<double, 3>, 3> rotation_matrix(const Point3& axis, double radians);

EmbeddedComplex scaled(const EmbeddedComplex& complex, double factor);
EmbeddedComplex translated(const EmbeddedComplex& complex, std::span<const double> offset);

} // namespace angdef
