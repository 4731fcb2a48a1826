#pragma once

#include <angdef/complex.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace angdef {

struct IsometryOptions
{
    /// Edge lengths match when |a - b| <= length_tolerance * max(a, b).
    double length_tolerance = 1e-9;
    /// Backtracking nodes before SearchBudgetExceeded.
    std::size_t node_budget = 10'000'000;
};

struct IsometryWitness
{
    /// (vertex of the first complex, its image), sorted by the first entry.
    std::vector<std::pair<VertexId, VertexId>> vertex_bijection;
    bool preserves_simplices = false;
    double max_length_deviation = 0.0; // largest relative edge length mismatch
};

/**
 * Exhaustive search for a simplicial isometry K -> L. Candidates are pruned by
 * vertex degree, triangle count and incident edge lengths, so an empty result
 * means no isometry exists at the given tolerance.
 */
std::optional<IsometryWitness> find_isometry(
    const EmbeddedComplex& k, const EmbeddedComplex& l, const IsometryOptions& options = {});

/// Isometry between star(v, K) and star(w, L) taking v to w. The bijection is
/// expressed in the vertex indices of K and L.
std::optional<IsometryWitness> find_star_isometry(
    const EmbeddedComplex& k, VertexId v, const EmbeddedComplex& l, VertexId w, const IsometryOptions& options = {});

struct CommonRefinement
{
    bool exists = false;
    /// Subdivisions of K and L whose stars at v and w are isometric; only set
    /// when a witness was requested and exists.
    std::optional<EmbeddedComplex> k_refined;
    std::optional<EmbeddedComplex> l_refined;
};

/**
 * For vertices whose links are polygonal arcs: subdivisions with isometric
 * stars exist iff the angle sums agree (within 1e-9). The witness splits both
 * stars along the merged angle breakpoints and then cuts every spoke at a
 * common radius, leaving stars made of matching isosceles triangles.
 */
CommonRefinement common_refinement(
    const EmbeddedComplex& k, VertexId v, const EmbeddedComplex& l, VertexId w, bool build_witness = true);

bool common_refinement_exists(const EmbeddedComplex& k, VertexId v, const EmbeddedComplex& l, VertexId w);

} // namespace angdef
