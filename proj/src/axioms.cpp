#include <angdef/axioms.hpp>

#include <angdef/generators.hpp>
#include <angdef/metric.hpp>
#include <angdef/subdivision.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace angdef {

namespace {

constexpr double kPi = std::numbers::pi;

void record(AxiomVerdict& verdict, const std::string& id, VertexId v, double deviation, const std::string& detail)
{
    if (!verdict.worst_case || deviation > verdict.worst_case->deviation) {
        verdict.worst_case = WorstCase{id, v, deviation, detail};
    }
    if (!(deviation <= verdict.tolerance)) verdict.pass = false;
}

bool in_domain(const VertexFunction& phi, const EmbeddedComplex& complex)
{
    return !phi.surfaces_only() || classify(complex).is_surface;
}

std::vector<SubdivisionScheme> schemes_for(const EmbeddedComplex& c, const SubdivisionOptions& options)
{
    std::vector<SubdivisionScheme> out;
    auto pick = [&](std::size_t total) {
        std::vector<std::size_t> idx;
        const std::size_t n = options.max_per_kind == 0 ? total : std::min(total, options.max_per_kind);
        for (std::size_t i = 0; i < n; ++i) idx.push_back(n == total ? i : i * total / n);
        return idx;
    };
    if (options.split_edges) {
        for (auto i : pick(c.edges().size())) {
            out.push_back(SubdivisionScheme::split_edge_at(c, c.edges()[i], kEdgeSplitParameter));
        }
    }
    if (options.split_faces) {
        for (auto i : pick(c.triangles().size())) {
            out.push_back(SubdivisionScheme::split_face_at(c, c.triangles()[i], kFaceSplitWeights));
        }
    }
    if (options.barycentric) out.push_back(SubdivisionScheme::barycentric());
    return out;
}

Point3 random_unit(std::mt19937_64& rng)
{
    std::normal_distribution<double> g(0.0, 1.0);
    Point3 p{g(rng), g(rng), g(rng)};
    const double n = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    return {p[0] / n, p[1] / n, p[2] / n};
}

Point3 cross(const Point3& a, const Point3& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Point3 normalized(const Point3& a)
{
    const double n = std::sqrt(dot(a, a));
    return {a[0] / n, a[1] / n, a[2] / n};
}

Point3 as3(std::span<const double> p) { return {p[0], p[1], p.size() > 2 ? p[2] : 0.0}; }

double shortest_edge(const EmbeddedComplex& c)
{
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t ei = 0; ei < c.edges().size(); ++ei) m = std::min(m, edge_length(c, ei));
    return std::isfinite(m) ? m : 1.0;
}

std::vector<double> random_parts(std::mt19937_64& rng, std::size_t n, double total)
{
    std::uniform_real_distribution<double> u(0.5, 1.5);
    std::vector<double> w(n);
    double s = 0.0;
    for (auto& x : w) s += (x = u(rng));
    for (auto& x : w) x *= total / s;
    return w;
}

// Fan with the given angles at vertex 0 and spoke lengths; the spokes turn
// in the xy-plane, or around random axes when `twisted`.
EmbeddedComplex fan_from_angles(
    const std::vector<double>& angles, const std::vector<double>& spokes, bool twisted, std::mt19937_64& rng)
{
    std::vector<double> coords{0.0, 0.0, 0.0};
    Point3 d{1.0, 0.0, 0.0};
    std::vector<SimplexTuple> tris;
    for (std::size_t i = 0; i <= angles.size(); ++i) {
        coords.insert(coords.end(), {spokes[i] * d[0], spokes[i] * d[1], spokes[i] * d[2]});
        if (i == angles.size()) break;
        Point3 n{-d[1], d[0], 0.0};
        if (twisted) {
            const Point3 r = random_unit(rng);
            const double k = dot(r, d);
            n = normalized({r[0] - k * d[0], r[1] - k * d[1], r[2] - k * d[2]});
        } else {
            n = normalized(n);
        }
        const double c = std::cos(2.0 * kPi * angles[i]), s = std::sin(2.0 * kPi * angles[i]);
        d = {c * d[0] + s * n[0], c * d[1] + s * n[1], c * d[2] + s * n[2]};
        tris.push_back({0, i + 1, i + 2});
    }
    return EmbeddedComplex::build(3, std::move(coords), tris, {.auto_close_faces = true});
}

} // namespace

std::string_view to_string(Axiom axiom)
{
    switch (axiom) {
    case Axiom::Subdivision: return "subdivision";
    case Axiom::StarIsometry: return "star_isometry";
    case Axiom::Continuity: return "continuity";
    case Axiom::GaussBonnet: return "gauss_bonnet";
    }
    return "unknown";
}

AxiomVerdict check_subdivision(const VertexFunction& phi, const Corpus& corpus, const SubdivisionOptions& options)
{
    AxiomVerdict verdict{Axiom::Subdivision, true, std::nullopt, 0, 0, kAxiomTolerance};
    for (const auto& entry : corpus) {
        if (!in_domain(phi, entry.complex)) {
            ++verdict.skipped;
            continue;
        }
        const auto before = phi.values(entry.complex);
        for (const auto& scheme : schemes_for(entry.complex, options)) {
            const EmbeddedComplex after_complex = subdivide(entry.complex, scheme);
            const auto after = phi.values(after_complex);
            ++verdict.trials;
            for (VertexId v = 0; v < before.size(); ++v) {
                record(verdict, entry.id, v, std::abs(before[v] - after[v]), scheme.describe());
            }
        }
    }
    return verdict;
}

AxiomVerdict check_star_isometry(const VertexFunction& phi, const std::vector<StarPair>& pairs, const IsometryOptions& options)
{
    AxiomVerdict verdict{Axiom::StarIsometry, true, std::nullopt, 0, 0, kAxiomTolerance};
    for (const auto& pair : pairs) {
        if (!find_star_isometry(pair.k, pair.v, pair.l, pair.w, options)) {
            throw Error(ErrorKind::BadParameter, "pair " + pair.id + " has no star isometry");
        }
        if (!in_domain(phi, pair.k) || !in_domain(phi, pair.l)) {
            ++verdict.skipped;
            continue;
        }
        ++verdict.trials;
        const double a = phi.values(pair.k)[pair.v];
        const double b = phi.values(pair.l)[pair.w];
        std::ostringstream detail;
        detail.precision(17);
        detail << "phi(v) = " << a << ", phi(w) = " << b << ", w = " << pair.w;
        record(verdict, pair.id, pair.v, std::abs(a - b), detail.str());
    }
    return verdict;
}

AxiomVerdict check_continuity(const VertexFunction& phi, const EmbeddingSequence& sequence, std::optional<VertexId> vertex)
{
    AxiomVerdict verdict{Axiom::Continuity, true, std::nullopt, 0, 0, kContinuityTolerance};
    if (vertex) sequence.base.require_vertex(*vertex);
    if (!in_domain(phi, sequence.base) || sequence.perturbations.empty()) {
        ++verdict.skipped;
        return verdict;
    }
    const auto limit = phi.values(sequence.base);
    const std::size_t dim = sequence.base.ambient_dim();
    const EmbeddedComplex first = sequence.base.with_coordinates(dim, sequence.perturbations.front());
    const EmbeddedComplex last = sequence.base.with_coordinates(dim, sequence.perturbations.back());
    const auto v_first = phi.values(first);
    const auto v_last = phi.values(last);
    verdict.trials = sequence.perturbations.size();
    for (VertexId v = 0; v < limit.size(); ++v) {
        if (vertex && v != *vertex) continue;
        std::ostringstream detail;
        detail.precision(6);
        detail << "d_1 = " << std::abs(v_first[v] - limit[v]) << ", d_" << sequence.perturbations.size() << " = "
               << std::abs(v_last[v] - limit[v]);
        record(verdict, sequence.id, v, std::abs(v_last[v] - limit[v]), detail.str());
    }
    return verdict;
}

AxiomVerdict check_continuity(const VertexFunction& phi, const std::vector<EmbeddingSequence>& sequences)
{
    AxiomVerdict verdict{Axiom::Continuity, true, std::nullopt, 0, 0, kContinuityTolerance};
    for (const auto& seq : sequences) {
        const AxiomVerdict one = check_continuity(phi, seq);
        verdict.trials += one.trials;
        verdict.skipped += one.skipped;
        if (one.worst_case) record(verdict, one.worst_case->complex_id, one.worst_case->vertex, one.worst_case->deviation, one.worst_case->detail);
    }
    return verdict;
}

AxiomVerdict check_gauss_bonnet(const VertexFunction& phi, const ComplexFunction& lambda, const Corpus& corpus)
{
    AxiomVerdict verdict{Axiom::GaussBonnet, true, std::nullopt, 0, 0, kAxiomTolerance};
    for (const auto& entry : corpus) {
        if (!in_domain(phi, entry.complex)) {
            ++verdict.skipped;
            continue;
        }
        const CurvatureReport r = gauss_bonnet_report(entry.complex, phi, lambda);
        ++verdict.trials;
        std::ostringstream detail;
        detail.precision(17);
        detail << "sum = " << r.total << ", lambda = " << r.lambda_value;
        record(verdict, entry.id, 0, std::abs(r.residual), detail.str());
    }
    return verdict;
}

SuiteResult run_characterization_suite(
    const VertexFunction& phi, const ComplexFunction& lambda, const Corpus& corpus, const SuiteOptions& options)
{
    if (corpus.empty()) throw Error(ErrorKind::BadParameter, "corpus is empty");
    std::vector<StarPair> pairs = rigid_motion_pairs(corpus, options.seed);
    for (auto& p : star_transplant_pairs(corpus)) pairs.push_back(std::move(p));
    for (auto& p : flap_dihedral_pairs(6, options.seed)) pairs.push_back(std::move(p));
    for (auto& p : matched_fan_pairs(6, options.seed)) pairs.push_back(std::move(p));

    std::vector<EmbeddingSequence> sequences;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        sequences.push_back(jitter_sequence(corpus[i], options.seed + i));
    }
    sequences.push_back(apex_limit_sequence());

    SuiteResult result;
    result.verdicts.push_back(check_subdivision(phi, corpus, options.subdivision));
    result.verdicts.push_back(check_star_isometry(phi, pairs));
    result.verdicts.push_back(check_continuity(phi, sequences));
    result.verdicts.push_back(check_gauss_bonnet(phi, lambda, corpus));

    const bool all_pass = std::all_of(result.verdicts.begin(), result.verdicts.end(), [](const auto& v) { return v.pass; });
    if (all_pass) {
        const FamilyConstants constants(lambda);
        bool surfaces = true;
        for (const auto& e : corpus) surfaces = surfaces && classify(e.complex).is_surface;
        result.formula = surfaces ? "surface" : "star";
        double worst = 0.0;
        for (const auto& e : corpus) {
            if (!in_domain(phi, e.complex)) continue;
            const auto values = phi.values(e.complex);
            for (VertexId v = 0; v < values.size(); ++v) {
                const double rhs = surfaces ? surface_formula(e.complex, v, constants) : star_formula(e.complex, v, constants);
                worst = std::max(worst, std::abs(values[v] - rhs));
            }
        }
        result.formula_residual = worst;
    }

    std::ostringstream s;
    s << phi.name() << " vs " << lambda.name() << " over " << corpus.size() << " complexes:";
    for (const auto& v : result.verdicts) s << " " << to_string(v.axiom) << "=" << (v.pass ? "pass" : "fail");
    if (result.formula_residual) s << "; " << result.formula << " formula residual " << *result.formula_residual;
    s << ". A pass means no violation was found on these inputs.";
    result.summary = s.str();
    return result;
}

// ---------------------------------------------------------------------------

Corpus surface_corpus()
{
    Corpus c;
    c.push_back({"tetrahedron", regular_tetrahedron()});
    c.push_back({"octahedron", octahedron()});
    c.push_back({"icosahedron", icosahedron()});
    c.push_back({"square_pyramid", regular_pyramid(4, 1.0)});
    for (std::size_t m = 3; m <= 12; ++m) c.push_back({"bipyramid_" + std::to_string(m), regular_bipyramid(m, 1.0)});
    for (double omega : {0.5, 1.0, 2.5}) {
        std::ostringstream id;
        id << "spiral_" << omega;
        c.push_back({id.str(), spiral_bipyramid(omega, 3, 0.4).complex});
    }
    c.push_back({"csaszar_torus", csaszar_torus()});
    return c;
}

Corpus nonmanifold_corpus()
{
    Corpus c;
    for (std::size_t n = 0; n <= 6; ++n) {
        c.push_back({"flap_" + std::to_string(n), n_flap(n, std::vector<double>(n, 0.125))});
    }
    for (std::size_t k = 1; k <= 4; ++k) c.push_back({"wedge_" + std::to_string(k), triangle_wedge(k)});
    c.push_back({"book_3", n_flap(3, std::vector<double>{0.08, 0.15, 0.21}, std::vector<double>{0.0, 1.1, 2.9})});
    c.push_back({"book_5", n_flap(5, std::vector<double>{0.1, 0.12, 0.14, 0.16, 0.18})});
    c.push_back({"fan_dangling", fan_with_dangling_edge(5)});
    c.push_back({"flap_3+wedge_2", disjoint_union(n_flap(3, std::vector<double>(3, 0.125)), triangle_wedge(2))});
    c.push_back({"tetrahedron+flap_2", disjoint_union(regular_tetrahedron(), n_flap(2, std::vector<double>(2, 0.1)))});
    c.push_back({"fan_dangling+flap_0", disjoint_union(fan_with_dangling_edge(4), n_flap(0, std::vector<double>{}))});
    return c;
}

Corpus full_corpus()
{
    Corpus c = surface_corpus();
    for (auto& e : nonmanifold_corpus()) c.push_back(std::move(e));
    return c;
}

EmbeddedComplex jittered(const EmbeddedComplex& complex, double amplitude, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> coords = complex.coordinates();
    for (auto& x : coords) x += amplitude * u(rng);
    return complex.with_coordinates(complex.ambient_dim(), std::move(coords));
}

EmbeddingSequence jitter_sequence(const NamedComplex& entry, std::uint64_t seed, std::size_t steps)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const auto& base = entry.complex.coordinates();
    std::vector<double> direction(base.size());
    for (auto& x : direction) x = u(rng);
    const double a0 = 0.05 * shortest_edge(entry.complex);
    EmbeddingSequence seq{entry.id + "/jitter", entry.complex, {}};
    for (std::size_t n = 1; n <= steps; ++n) {
        const double a = a0 * std::ldexp(1.0, -static_cast<int>(n));
        std::vector<double> coords = base;
        for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += a * direction[i];
        seq.perturbations.push_back(std::move(coords));
    }
    return seq;
}

EmbeddingSequence apex_limit_sequence(std::size_t steps)
{
    // The apex angle sum approaches 1 like h^2, so heights decay as 2^(-n/2):
    // the last entry stays non-flat (|sum - 1| > 1e-9) while continuous
    // functions have converged to within 1e-6.
    const auto triangle = regular_polygon(3);
    const Point3 top{0.0, 0.0, 1.0};
    EmbeddingSequence seq{"apex_limit_bipyramid", bipyramid_apex_limit(triangle, top, {0.0, 0.0}), {}};
    for (std::size_t n = 1; n <= steps; ++n) {
        const double h = 0.5 * std::pow(2.0, -0.5 * static_cast<double>(n));
        seq.perturbations.push_back(bipyramid(triangle, top, {0.0, 0.0, -h}).coordinates());
    }
    return seq;
}

std::vector<StarPair> rigid_motion_pairs(const Corpus& corpus, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::vector<StarPair> out;
    for (const auto& entry : corpus) {
        const EmbeddedComplex k = entry.complex.ambient_dim() == 2 ? lift_to_3d(entry.complex) : entry.complex;
        if (k.ambient_dim() != 3 || k.num_vertices() == 0) continue;
        const auto rot = rotation_matrix(random_unit(rng), u(rng));
        const EmbeddedComplex l = rigid_motion(k, rot, {u(rng), u(rng), u(rng)});
        for (VertexId v : {VertexId{0}, k.num_vertices() / 2}) {
            out.push_back({entry.id + "/rigid@" + std::to_string(v), k, v, l, v});
        }
    }
    return out;
}

std::vector<StarPair> flap_dihedral_pairs(std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> angle(0.05, 0.2);
    std::uniform_real_distribution<double> jitter(-0.4, 0.4);
    std::vector<StarPair> out;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = 2 + i % 5;
        std::vector<double> angles(n), dihedrals(n);
        for (auto& a : angles) a = angle(rng);
        for (std::size_t j = 0; j < n; ++j) {
            dihedrals[j] = 2.0 * kPi * (static_cast<double>(j) + 0.5 + jitter(rng)) / static_cast<double>(n);
        }
        const VertexId end = i % 2;
        out.push_back({"flap_" + std::to_string(n) + "/dihedral#" + std::to_string(i), n_flap(n, angles), end,
                       n_flap(n, angles, dihedrals), end});
    }
    return out;
}

std::vector<StarPair> matched_fan_pairs(std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
    std::uniform_real_distribution<double> total(0.2, 0.45);
    std::uniform_real_distribution<double> spoke(0.7, 1.5);
    std::vector<StarPair> out;
    for (std::size_t i = 0; i < count; ++i) {
        const double s = total(rng);
        if (i % 2 == 0) {
            const std::size_t m = 2 + i % 4;
            const auto angles = random_parts(rng, m, s);
            std::vector<double> spokes(m + 1);
            for (auto& x : spokes) x = spoke(rng);
            out.push_back({"fan_" + std::to_string(m) + "/twisted#" + std::to_string(i),
                           fan_from_angles(angles, spokes, false, rng), 0, fan_from_angles(angles, spokes, true, rng), 0});
        } else {
            const std::size_t m1 = 2 + i % 3, m2 = 3 + i % 4;
            const auto a1 = random_parts(rng, m1, s);
            const auto a2 = random_parts(rng, m2, s);
            std::vector<double> s1(m1 + 1), s2(m2 + 1);
            for (auto& x : s1) x = spoke(rng);
            for (auto& x : s2) x = spoke(rng);
            const EmbeddedComplex k = fan_from_angles(a1, s1, false, rng);
            const EmbeddedComplex l = fan_from_angles(a2, s2, true, rng);
            const CommonRefinement r = common_refinement(k, 0, l, 0);
            out.push_back({"fans_" + std::to_string(m1) + "_" + std::to_string(m2) + "/refined#" + std::to_string(i),
                           *r.k_refined, 0, *r.l_refined, 0});
        }
    }
    return out;
}

std::vector<StarPair> star_transplant_pairs(const Corpus& corpus)
{
    std::vector<StarPair> out;
    for (const auto& entry : corpus) {
        const EmbeddedComplex& k = entry.complex;
        if (k.ambient_dim() != 3 || !classify(k).is_surface) continue;
        const auto& tris = k.triangles();
        const auto face = std::find_if(tris.begin(), tris.end(), [&](const Triangle& t) {
            return std::find(t.begin(), t.end(), VertexId{0}) == t.end();
        });
        if (face == tris.end()) continue;
        const Point3 a = as3(k.point((*face)[0])), b = as3(k.point((*face)[1])), c = as3(k.point((*face)[2]));
        Point3 normal = normalized(cross({b[0] - a[0], b[1] - a[1], b[2] - a[2]}, {c[0] - a[0], c[1] - a[1], c[2] - a[2]}));
        Point3 mid{(a[0] + b[0] + c[0]) / 3.0, (a[1] + b[1] + c[1]) / 3.0, (a[2] + b[2] + c[2]) / 3.0};
        Point3 center{0.0, 0.0, 0.0};
        for (VertexId v = 0; v < k.num_vertices(); ++v) {
            for (int i = 0; i < 3; ++i) center[i] += k.point(v)[i] / static_cast<double>(k.num_vertices());
        }
        if (dot(normal, {mid[0] - center[0], mid[1] - center[1], mid[2] - center[2]}) < 0.0) {
            normal = {-normal[0], -normal[1], -normal[2]};
        }
        const double h = 0.5 * std::sqrt(triangle_area(k.point((*face)[0]), k.point((*face)[1]), k.point((*face)[2])));
        const EmbeddedComplex split = subdivide(k, SubdivisionScheme::face_centroid(k, *face));
        std::vector<double> coords = split.coordinates();
        for (int i = 0; i < 3; ++i) coords[coords.size() - 3 + i] += h * normal[i];
        out.push_back({entry.id + "/transplant", k, 0, split.with_coordinates(3, std::move(coords)), 0});
    }
    return out;
}

} // namespace angdef
