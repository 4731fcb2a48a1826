#pragma once

#include <angdef/complex.hpp>
#include <angdef/curvature.hpp>
#include <angdef/isometry.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace angdef {

enum class Axiom { Subdivision, StarIsometry, Continuity, GaussBonnet };

std::string_view to_string(Axiom axiom);

struct WorstCase
{
    std::string complex_id;
    VertexId vertex = 0;
    double deviation = 0.0;
    std::string detail;
};

/// A pass only means no violation was found over the inputs tried.
struct AxiomVerdict
{
    Axiom axiom = Axiom::GaussBonnet;
    bool pass = true;
    std::optional<WorstCase> worst_case; // largest deviation seen, failing or not
    std::size_t trials = 0;
    std::size_t skipped = 0; // inputs outside the function's domain
    double tolerance = 0.0;
};

struct NamedComplex
{
    std::string id;
    EmbeddedComplex complex;
};
using Corpus = std::vector<NamedComplex>;

/// Coordinate assignments for one abstract complex, converging to `base`.
struct EmbeddingSequence
{
    std::string id;
    EmbeddedComplex base;
    std::vector<std::vector<double>> perturbations;
};

struct StarPair
{
    std::string id;
    EmbeddedComplex k;
    VertexId v = 0;
    EmbeddedComplex l;
    VertexId w = 0;
};

inline constexpr double kAxiomTolerance = 1e-9;
inline constexpr double kContinuityTolerance = 1e-6;

struct SubdivisionOptions
{
    bool split_edges = true;
    bool split_faces = true;
    bool barycentric = true;
    /// Cap on edges / faces tried per complex; 0 tries all of them.
    std::size_t max_per_kind = 0;
};

/// Off-center split points used by the harness.
inline constexpr double kEdgeSplitParameter = 0.37;
inline constexpr std::array<double, 3> kFaceSplitWeights{0.21, 0.33, 0.46};

AxiomVerdict check_subdivision(const VertexFunction& phi, const Corpus& corpus, const SubdivisionOptions& options = {});

/// Every pair is first checked with find_star_isometry; a pair without a
/// witness is rejected with BadParameter.
AxiomVerdict check_star_isometry(
    const VertexFunction& phi, const std::vector<StarPair>& pairs, const IsometryOptions& options = {});

/// Deviation at the final entry must be below 1e-6, at `vertex` or at every vertex.
AxiomVerdict check_continuity(
    const VertexFunction& phi, const EmbeddingSequence& sequence, std::optional<VertexId> vertex = std::nullopt);
AxiomVerdict check_continuity(const VertexFunction& phi, const std::vector<EmbeddingSequence>& sequences);

AxiomVerdict check_gauss_bonnet(const VertexFunction& phi, const ComplexFunction& lambda, const Corpus& corpus);

struct SuiteOptions
{
    std::uint64_t seed = 1;
    SubdivisionOptions subdivision;
};

struct SuiteResult
{
    std::vector<AxiomVerdict> verdicts; // subdivision, star isometry, continuity, Gauss-Bonnet
    /// "surface" or "star" when all four passed and the vertex formula was compared.
    std::string formula;
    std::optional<double> formula_residual;
    std::string summary;
};

/**
 * Runs the four checks. Star pairs and continuity sequences are generated from
 * the corpus (rigid motions, transplanted stars, jitter) plus fixed flap, fan
 * and apex-limit families. When everything passes, phi is compared vertexwise
 * against the surface formula (all-surface corpus) or the star formula.
 */
SuiteResult run_characterization_suite(
    const VertexFunction& phi, const ComplexFunction& lambda, const Corpus& corpus, const SuiteOptions& options = {});

// ---------------------------------------------------------------------------
// Corpora and generated inputs.

/// Closed surfaces: Platonic solids, square pyramid, bipyramids (m = 3..12),
/// spiral bipyramids and the Csaszar torus.
Corpus surface_corpus();
/// Flaps (n = 0..6), wedges, books, a fan with a dangling edge, disjoint unions.
Corpus nonmanifold_corpus();
Corpus full_corpus();

/// Every vertex moved along a fixed random direction by a0 2^-n, n = 1..steps,
/// with a0 = 0.05 * shortest edge.
EmbeddingSequence jitter_sequence(const NamedComplex& entry, std::uint64_t seed, std::size_t steps = 20);

/// A triangle bipyramid whose bottom apex rises to the centroid of the base.
/// The limit vertex is flat while every entry's apex is not.
EmbeddingSequence apex_limit_sequence(std::size_t steps = 20);
/// The vertex of apex_limit_sequence() that approaches the base.
inline constexpr VertexId kApexLimitVertex = 4;

std::vector<StarPair> rigid_motion_pairs(const Corpus& corpus, std::uint64_t seed);
std::vector<StarPair> flap_dihedral_pairs(std::size_t count, std::uint64_t seed);
/// Fans with equal angles re-embedded non-planarly, plus common refinements
/// of fans with equal angle sums but different triangle counts.
std::vector<StarPair> matched_fan_pairs(std::size_t count, std::uint64_t seed);
/// A surface paired with itself after one face away from vertex 0 is replaced
/// by a low pyramid; star(0) is untouched while the number of vertices grows.
std::vector<StarPair> star_transplant_pairs(const Corpus& corpus);

/// Random jittered copy; throws if the jitter degenerates a simplex.
EmbeddedComplex jittered(const EmbeddedComplex& complex, double amplitude, std::uint64_t seed);

} // namespace angdef
