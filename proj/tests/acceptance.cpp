// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <angdef/axioms.hpp>
#include <angdef/curvature.hpp>
#include <angdef/generators.hpp>
#include <angdef/isometry.hpp>
#include <angdef/metric.hpp>
#include <angdef/subdivision.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

using namespace angdef;

namespace {

struct Outcome
{
    bool pass = true;
    std::string detail;
};

int failures = 0;

void run(const char* id, const char* title, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
        r = body();
    } catch (const std::exception& e) {
        r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %s %s: %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", id, title, r.detail.c_str(), secs);
    std::fflush(stdout);
    if (!r.pass) ++failures;
}

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

double gb_residual_classical(const EmbeddedComplex& k)
{
    double s = 0.0;
    for (VertexId v = 0; v < k.num_vertices(); ++v) s += 1.0 - oracle::angle_sum(k, v);
    return std::abs(s - static_cast<double>(oracle::euler(k)));
}

double shortest_edge(const EmbeddedComplex& k)
{
    double m = 1e300;
    for (std::size_t e = 0; e < k.edges().size(); ++e) m = std::min(m, edge_length(k, e));
    return m;
}

double polygon_corner(const std::vector<Point2>& p, std::size_t i)
{
    const auto& prev = p[(i + p.size() - 1) % p.size()];
    const auto& cur = p[i];
    const auto& next = p[(i + 1) % p.size()];
    const double a_in = std::atan2(cur[1] - prev[1], cur[0] - prev[0]);
    const double a_out = std::atan2(next[1] - cur[1], next[0] - cur[0]);
    double turn = (a_out - a_in) / (2.0 * std::numbers::pi);
    while (turn <= -0.5) turn += 1.0;
    while (turn > 0.5) turn -= 1.0;
    return 0.5 - turn;
}

} // namespace

int main()
{
    const Corpus surfaces = surface_corpus();
    const Corpus nonmanifold = nonmanifold_corpus();
    const Corpus everything = full_corpus();

    run("01", "Gauss-Bonnet for the classical defect", [&] {
        double worst = 0.0;
        std::size_t checked = 0, rejected = 0;
        for (std::size_t i = 0; i < surfaces.size(); ++i) {
            const auto& k = surfaces[i].complex;
            worst = std::max(worst, gb_residual_classical(k));
            ++checked;
            const double amp = 0.1 * shortest_edge(k);
            for (std::uint64_t j = 0; j < 100; ++j) {
                try {
                    worst = std::max(worst, gb_residual_classical(jittered(k, amp, 1000 * i + j)));
                    ++checked;
                } catch (const Error&) {
                    ++rejected;
                }
            }
        }
        return Outcome{worst < 1e-9, "max |residual| " + fmt(worst) + " over " + std::to_string(checked) + " complexes ("
                                         + std::to_string(rejected) + " invalid jitters dropped)"};
    });

    run("02", "Gauss-Bonnet for the standard curvature off manifolds", [&] {
        double worst = 0.0;
        for (const auto& e : nonmanifold) {
            double s = 0.0;
            for (VertexId v = 0; v < e.complex.num_vertices(); ++v) s += standard_curvature(e.complex, v);
            worst = std::max(worst, std::abs(s - static_cast<double>(oracle::euler(e.complex))));
        }
        return Outcome{worst < 1e-9, "max |residual| " + fmt(worst) + " over " + std::to_string(nonmanifold.size())
                                         + " flaps, wedges, books, fans and unions"};
    });

    run("03", "curvature identities", [&] {
        double link_gap = 0.0, surface_gap = 0.0;
        std::size_t n = 0;
        for (const auto& e : everything) {
            const bool surface = classify(e.complex).is_surface;
            for (VertexId v = 0; v < e.complex.num_vertices(); ++v, ++n) {
                const double kappa = standard_curvature(e.complex, v);
                link_gap = std::max(link_gap, std::abs(kappa - oracle::curvature(e.complex, v)));
                if (surface) surface_gap = std::max(surface_gap, std::abs(kappa - classical_angle_defect(e.complex, v)));
            }
        }
        return Outcome{link_gap < 1e-12 && surface_gap < 1e-12,
                       "link formula gap " + fmt(link_gap) + ", surface gap " + fmt(surface_gap) + " at " + std::to_string(n)
                           + " vertices"};
    });

    run("04", "vertex formulas with lambda = Euler characteristic", [&] {
        double star = 0.0, surf = 0.0;
        for (const auto& e : everything) {
            for (VertexId v = 0; v < e.complex.num_vertices(); ++v) star = std::max(star, eqaaa_identity_residual(e.complex, v));
        }
        for (const auto& e : surfaces) {
            for (VertexId v = 0; v < e.complex.num_vertices(); ++v) surf = std::max(surf, eqaas_identity_residual(e.complex, v));
        }
        const double pyramid_chi = FamilyConstants(ComplexFunction::euler()).pyramid();
        return Outcome{star < 1e-9 && surf < 1e-9 && pyramid_chi == 2.0,
                       "star formula " + fmt(star) + ", surface formula " + fmt(surf) + ", pyramid value " + fmt(pyramid_chi)};
    });

    run("05", "subdivision invariance", [&] {
        double worst = 0.0, new_vertex = 0.0;
        std::size_t schemes = 0;
        for (const auto& e : everything) {
            const auto& k = e.complex;
            std::vector<SubdivisionScheme> list;
            for (const auto& ed : k.edges()) list.push_back(SubdivisionScheme::split_edge_at(k, ed, 0.37));
            for (const auto& t : k.triangles()) list.push_back(SubdivisionScheme::split_face_at(k, t, {0.21, 0.33, 0.46}));
            list.push_back(SubdivisionScheme::barycentric());
            std::vector<double> defect(k.num_vertices()), kappa(k.num_vertices());
            for (VertexId v = 0; v < k.num_vertices(); ++v) {
                defect[v] = classical_angle_defect(k, v);
                kappa[v] = standard_curvature(k, v);
            }
            for (const auto& s : list) {
                const auto j = subdivide(k, s);
                ++schemes;
                for (VertexId v = 0; v < k.num_vertices(); ++v) {
                    worst = std::max(worst, std::abs(classical_angle_defect(j, v) - defect[v]));
                    worst = std::max(worst, std::abs(standard_curvature(j, v) - kappa[v]));
                }
                if (s.kind == SubdivisionScheme::Kind::SplitFace) {
                    new_vertex = std::max(new_vertex, std::abs(oracle::angle_sum(j, k.num_vertices()) - 1.0));
                }
                if (s.kind == SubdivisionScheme::Kind::Barycentric) {
                    const std::size_t first_centroid = k.num_vertices() + k.edges().size();
                    for (VertexId v = first_centroid; v < j.num_vertices(); ++v) {
                        new_vertex = std::max(new_vertex, std::abs(oracle::angle_sum(j, v) - 1.0));
                    }
                }
            }
        }
        return Outcome{worst < 1e-12 && new_vertex < 1e-12,
                       "max change " + fmt(worst) + ", face vertex |angle_sum - 1| " + fmt(new_vertex) + " over "
                           + std::to_string(schemes) + " subdivisions"};
    });

    run("06", "counterexample functions", [&] {
        const auto chi = ComplexFunction::euler();
        std::ostringstream d;
        bool ok = true;
        auto pattern = [](const SuiteResult& r) {
            std::string s;
            for (const auto& v : r.verdicts) s += v.pass ? 'P' : 'F';
            return s; // subdivision, star isometry, continuity, Gauss-Bonnet
        };

        const auto zero = run_characterization_suite(VertexFunction::zero(), chi, surfaces);
        ok = ok && pattern(zero) == "PPPF";
        d << "zero " << pattern(zero);

        const Corpus tet{{"tetrahedron", regular_tetrahedron()}};
        const auto gb3 = check_gauss_bonnet(VertexFunction::psi(1.0 / 3.0), chi, tet);
        const double r3 = gb3.worst_case->deviation;
        ok = ok && !gb3.pass && std::abs(r3 - 2.0) < 1e-12;
        d << "; psi(1/3) tetrahedron residual " << fmt(r3);

        const auto psi6 = VertexFunction::psi(1.0 / 6.0);
        const auto gb6 = check_gauss_bonnet(psi6, chi, surfaces);
        const auto sub6 = check_subdivision(psi6, surfaces);
        ok = ok && gb6.pass && gb6.worst_case->deviation < 1e-9 && !sub6.pass && sub6.worst_case;
        d << "; psi(1/6) GB " << fmt(gb6.worst_case->deviation) << ", subdivision witness " << sub6.worst_case->complex_id
          << " v" << sub6.worst_case->vertex << " " << sub6.worst_case->detail;

        const auto mu = run_characterization_suite(VertexFunction::mu(), chi, surfaces);
        ok = ok && pattern(mu) == "PFFP";
        d << "; mu " << pattern(mu) << " (isometry witness " << mu.verdicts[1].worst_case->complex_id << " "
          << fmt(mu.verdicts[1].worst_case->deviation) << ", continuity witness " << mu.verdicts[2].worst_case->complex_id
          << " " << fmt(mu.verdicts[2].worst_case->deviation) << ")";
        return Outcome{ok, d.str()};
    });

    run("07", "spiral bipyramid generator", [&] {
        double worst_omega = 0.0, worst_ribbon = 0.0;
        std::size_t max_iter = 0;
        for (double omega : {0.25, 0.5, 1.0, 1.7, 2.5}) {
            const auto s = spiral_bipyramid(omega, 3, 0.4);
            worst_omega = std::max(worst_omega, std::abs(oracle::angle_sum(s.complex, s.top) - omega));
            worst_omega = std::max(worst_omega, std::abs(oracle::angle_sum(s.complex, s.bottom) - omega));
            for (VertexId v = 0; v < s.top; ++v) worst_ribbon = std::max(worst_ribbon, oracle::angle_sum(s.complex, v));
            max_iter = std::max(max_iter, s.iterations);
        }
        const bool ok = worst_omega < 1e-6 && worst_ribbon < 1.0 - 1e-9 && max_iter <= 200;
        return Outcome{ok, "max |omega error| " + fmt(worst_omega) + ", max ribbon angle sum " + fmt(worst_ribbon)
                               + ", max iterations " + std::to_string(max_iter)};
    });

    run("08", "isometry search", [&] {
        Corpus some;
        for (const auto* name : {"tetrahedron", "icosahedron", "csaszar_torus", "flap_4"}) {
            for (const auto& e : everything) {
                if (e.id == name) some.push_back(e);
            }
        }
        std::vector<StarPair> positives = rigid_motion_pairs(some, 5);
        for (auto& p : flap_dihedral_pairs(6, 5)) positives.push_back(p);
        for (auto& p : matched_fan_pairs(6, 5)) positives.push_back(p);

        std::size_t found = 0;
        for (const auto& p : positives) {
            const auto w = find_star_isometry(p.k, p.v, p.l, p.w);
            if (w && w->preserves_simplices && w->max_length_deviation <= 1e-9) ++found;
        }

        std::size_t rejected = 0, negatives = 0;
        std::mt19937_64 rng(9);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        for (std::size_t i = 0; i < positives.size(); ++i) {
            const auto& p = positives[i];
            EmbeddedComplex l;
            if (i % 2 == 0) {
                l = scaled(p.l, 1.0 + 0.05 * static_cast<double>(i + 1));
            } else {
                // Move one link vertex of w by 1e-3 of the shortest edge.
                std::vector<double> coords = p.l.coordinates();
                const auto& e = p.l.edges()[p.l.incident_edges(p.w)[0]];
                const VertexId y = e[0] == p.w ? e[1] : e[0];
                const double step = 1e-3 * shortest_edge(p.l);
                for (std::size_t c = 0; c < p.l.ambient_dim(); ++c) coords[y * p.l.ambient_dim() + c] += step * u(rng);
                l = p.l.with_coordinates(p.l.ambient_dim(), coords);
            }
            ++negatives;
            if (!find_star_isometry(p.k, p.v, l, p.w)) ++rejected;
        }

        std::size_t whole = 0;
        for (const auto& e : everything) {
            const EmbeddedComplex k = e.complex.ambient_dim() == 2 ? lift_to_3d(e.complex) : e.complex;
            const auto moved = rigid_motion(k, rotation_matrix({0.0, 0.0, 1.0}, 0.9), {1.0, 2.0, 3.0});
            if (find_isometry(k, moved)) ++whole;
        }
        const bool ok = positives.size() == 20 && found == 20 && negatives == 20 && rejected == 20 && whole == everything.size();
        return Outcome{ok, std::to_string(found) + "/" + std::to_string(positives.size()) + " witnesses, " + std::to_string(rejected)
                               + "/" + std::to_string(negatives) + " negatives rejected, " + std::to_string(whole) + "/"
                               + std::to_string(everything.size()) + " corpus self-isometries, no budget overrun"};
    });

    run("09", "continuity", [&] {
        std::vector<EmbeddingSequence> seqs;
        for (std::size_t i = 0; i < everything.size(); ++i) seqs.push_back(jitter_sequence(everything[i], 77 + i));
        const auto classical = check_continuity(VertexFunction::classical_defect(), seqs);
        const auto kappa = check_continuity(VertexFunction::standard_curvature(), seqs);
        const auto mu = check_continuity(VertexFunction::mu(), apex_limit_sequence(), kApexLimitVertex);
        const double jump = mu.worst_case->deviation;
        const bool ok = classical.pass && kappa.pass && !mu.pass && jump >= 0.4 - 1e-12;
        return Outcome{ok, "classical final " + fmt(classical.worst_case->deviation) + ", standard final "
                               + fmt(kappa.worst_case->deviation) + ", mu jump " + fmt(jump) + " (" + mu.worst_case->detail + ")"};
    });

    run("10", "prescribed-angle polygons", [&] {
        std::mt19937_64 rng(2024);
        std::uniform_real_distribution<double> u(0.2, 1.0);
        double angle_err = 0.0, closure = 0.0;
        std::size_t reflex = 0;
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 3 + static_cast<std::size_t>(trial % 7);
            // Turning angles are normalized to sum to 1; each must stay in
            // (-1/2, 1/2) so every interior angle lies in (0, 1).
            const bool with_reflex = trial % 5 == 4 && n >= 5;
            std::vector<double> turn(n);
            double s = 0.0;
            for (;;) {
                for (auto& t : turn) t = u(rng);
                if (with_reflex) turn[n / 2] = -0.4 * turn[n / 2];
                s = 0.0;
                for (double t : turn) s += t;
                const auto [lo, hi] = std::minmax_element(turn.begin(), turn.end());
                if (*hi < 0.5 * s && *lo > -0.5 * s) break;
            }
            if (with_reflex) ++reflex;
            std::vector<double> angles(n);
            for (std::size_t i = 0; i < n; ++i) angles[i] = 0.5 - turn[i] / s;
            const auto sol = solve_polygon(angles);
            closure = std::max(closure, sol.closure_error);
            for (std::size_t i = 0; i < n; ++i) angle_err = std::max(angle_err, std::abs(polygon_corner(sol.vertices, i) - angles[i]));
        }
        return Outcome{angle_err < 1e-9 && closure < 1e-9, "max angle error " + fmt(angle_err) + ", max closure "
                                                              + fmt(closure) + " (" + std::to_string(reflex) + " with a reflex corner)"};
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
