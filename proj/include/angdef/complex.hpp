#pragma once

#include <angdef/error.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace angdef {

using VertexId = std::size_t;
using Edge = std::array<VertexId, 2>;
using Triangle = std::array<VertexId, 3>;

/// A simplex as a sorted list of 1 to 3 vertex indices.
using SimplexTuple = std::vector<VertexId>;

struct FVector
{
    std::size_t f0 = 0;
    std::size_t f1 = 0;
    std::size_t f2 = 0;

    long long euler() const
    {
        return static_cast<long long>(f0) - static_cast<long long>(f1) + static_cast<long long>(f2);
    }
    bool operator==(const FVector&) const = default;
};

struct BuildOptions
{
    /// Add every missing face of every listed simplex instead of failing.
    bool auto_close_faces = false;
};

/// Relative area threshold below which a 2-simplex counts as degenerate:
/// area < kDegeneracyTolerance * (longest edge)^2.
inline constexpr double kDegeneracyTolerance = 1e-12;

/**
 * Immutable finite 2-dimensional simplicial complex with straight simplices in
 * Euclidean space of any dimension.
 *
 * Every coordinate row is a vertex; 0-simplices are therefore implicit and a
 * vertex that lies in no edge is an isolated vertex. Edges and triangles are
 * stored sorted and deduplicated. Only per-simplex non-degeneracy is
 * validated; pairwise intersection of simplices is not checked.
 */
class EmbeddedComplex
{
public:
    EmbeddedComplex() = default;

    /// Flat coordinates, `ambient_dim` doubles per vertex.
    static EmbeddedComplex build(
        std::size_t ambient_dim,
        std::vector<double> coordinates,
        const std::vector<SimplexTuple>& simplices,
        BuildOptions options = {});

    static EmbeddedComplex build(
        const std::vector<std::vector<double>>& points,
        const std::vector<SimplexTuple>& simplices,
        BuildOptions options = {});

    /// Same abstract complex with new coordinates (revalidated).
    EmbeddedComplex with_coordinates(std::size_t ambient_dim, std::vector<double> coordinates) const;

    std::size_t ambient_dim() const { return m_dim; }
    std::size_t num_vertices() const { return m_num_vertices; }
    bool has_vertex(VertexId v) const { return v < m_num_vertices; }
    bool empty() const { return m_num_vertices == 0; }

    std::span<const double> point(VertexId v) const
    {
        return {m_coords.data() + v * m_dim, m_dim};
    }
    const std::vector<double>& coordinates() const { return m_coords; }

    const std::vector<Edge>& edges() const { return m_edges; }
    const std::vector<Triangle>& triangles() const { return m_triangles; }
    FVector fvector() const { return {m_num_vertices, m_edges.size(), m_triangles.size()}; }

    /// Indices into edges() / triangles() of the simplices containing v.
    std::span<const std::size_t> incident_edges(VertexId v) const;
    std::span<const std::size_t> incident_triangles(VertexId v) const;
    /// Indices into triangles() of the triangles containing edge e.
    std::span<const std::size_t> edge_triangles(std::size_t edge_index) const;

    std::optional<std::size_t> find_edge(VertexId a, VertexId b) const;
    std::optional<std::size_t> find_triangle(VertexId a, VertexId b, VertexId c) const;

    /// Throws UnknownVertex when v is out of range.
    void require_vertex(VertexId v) const;

private:
    void index();
    void validate_geometry() const;

    std::size_t m_dim = 0;
    std::size_t m_num_vertices = 0;
    std::vector<double> m_coords;
    std::vector<Edge> m_edges;
    std::vector<Triangle> m_triangles;

    // CSR adjacency: vertex -> incident edges / triangles, edge -> triangles.
    std::vector<std::size_t> m_vertex_edge_offsets, m_vertex_edges;
    std::vector<std::size_t> m_vertex_tri_offsets, m_vertex_tris;
    std::vector<std::size_t> m_edge_tri_offsets, m_edge_tris;
    std::unordered_map<std::uint64_t, std::size_t> m_edge_lookup;
};

/// Subcomplex around a center vertex, expressed in the parent's vertex indices.
struct SubcomplexView
{
    const EmbeddedComplex* parent = nullptr;
    VertexId center = 0;
    std::vector<VertexId> vertices; // sorted
    std::vector<Edge> edges;        // sorted
    std::vector<Triangle> triangles; // sorted

    FVector fvector() const { return {vertices.size(), edges.size(), triangles.size()}; }
    bool contains_vertex(VertexId v) const;
};

using StarView = SubcomplexView;
using LinkView = SubcomplexView;

/// The star and the link of vertex v.
StarView star(const EmbeddedComplex& complex, VertexId v);
LinkView link(const EmbeddedComplex& complex, VertexId v);

/// A subcomplex copied out as a standalone complex. `to_parent[i]` is the
/// parent index of new vertex i; the view's center becomes vertex 0.
struct ExtractedComplex
{
    EmbeddedComplex complex;
    std::vector<VertexId> to_parent;
};
ExtractedComplex extract(const SubcomplexView& view);

/// Number of 2-simplices containing the edge <v, w>.
std::size_t edge_order(const EmbeddedComplex& complex, VertexId v, VertexId w);

/// Number of edges containing v.
std::size_t vertex_order(const EmbeddedComplex& complex, VertexId v);

long long euler_characteristic(const EmbeddedComplex& complex);

struct ComplexClass
{
    bool is_surface = false;
    bool is_pseudomanifold = false;
    bool is_cone = false;
    std::optional<VertexId> cone_apex;
    bool is_planar_fan = false;
    bool is_n_flap = false;
    std::size_t flap_n = 0;
    std::optional<Edge> flap_ends;
};

ComplexClass classify(const EmbeddedComplex& complex);

/// Link of v is one polygonal circle.
bool link_is_circle(const EmbeddedComplex& complex, VertexId v);
/// Link of v is one polygonal arc with at least one edge.
bool link_is_arc(const EmbeddedComplex& complex, VertexId v);

/// Link vertices of v in path/cycle order. Only meaningful for arc and circle
/// links; returns nullopt otherwise.
std::optional<std::vector<VertexId>> ordered_link(const EmbeddedComplex& complex, VertexId v);

/// All vertex coordinates lie in one affine plane (to relative 1e-9).
bool is_coplanar(const EmbeddedComplex& complex);

/// Disjoint union; the vertices of `b` are shifted by a.num_vertices().
EmbeddedComplex disjoint_union(const EmbeddedComplex& a, const EmbeddedComplex& b);

} // namespace angdef
