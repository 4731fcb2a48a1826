#include <angdef/axioms.hpp>
#include <angdef/curvature.hpp>
#include <angdef/generators.hpp>
#include <angdef/io.hpp>
#include <angdef/isometry.hpp>
#include <angdef/metric.hpp>
#include <angdef/subdivision.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace angdef;

namespace {

enum ExitCode { kOk = 0, kResidual = 1, kIo = 2, kValidation = 3, kGenerator = 4, kBudget = 5 };

int exit_for(const Error& e)
{
    switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::NonTriangularFace: return kIo;
    case ErrorKind::SearchBudgetExceeded: return kBudget;
    default: return kValidation;
    }
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    out << text;
}

// face:<i>:centroid | face:<i>:<a>,<b>,<c> | edge:<i>:midpoint | edge:<i>:<t> | barycentric
SubdivisionScheme parse_scheme(const EmbeddedComplex& k, const std::string& spec)
{
    if (spec == "barycentric") return SubdivisionScheme::barycentric();
    const auto c1 = spec.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
    if (c2 == std::string::npos) throw Error(ErrorKind::BadParameter, "bad scheme: " + spec);
    const std::string kind = spec.substr(0, c1);
    const std::size_t index = std::stoul(spec.substr(c1 + 1, c2 - c1 - 1));
    const std::string where = spec.substr(c2 + 1);
    if (kind == "edge") {
        if (index >= k.edges().size()) throw Error(ErrorKind::NoSuchSimplex, "edge index out of range");
        if (where == "midpoint") return SubdivisionScheme::edge_midpoint(k, k.edges()[index]);
        return SubdivisionScheme::split_edge_at(k, k.edges()[index], std::stod(where));
    }
    if (kind == "face") {
        if (index >= k.triangles().size()) throw Error(ErrorKind::NoSuchSimplex, "face index out of range");
        if (where == "centroid") return SubdivisionScheme::face_centroid(k, k.triangles()[index]);
        std::array<double, 3> w{};
        std::stringstream ss(where);
        std::string item;
        for (auto& x : w) {
            if (!std::getline(ss, item, ',')) throw Error(ErrorKind::BadParameter, "face weights need three values");
            x = std::stod(item);
        }
        return SubdivisionScheme::split_face_at(k, k.triangles()[index], w);
    }
    throw Error(ErrorKind::BadParameter, "bad scheme kind: " + kind);
}

Corpus load_corpus(const std::filesystem::path& dir)
{
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const auto ext = entry.path().extension().string();
        if (entry.is_regular_file() && (ext == ".json" || ext == ".off" || ext == ".OFF")) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    Corpus corpus;
    for (const auto& f : files) corpus.push_back({f.stem().string(), load_complex(f)});
    return corpus;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Angle defects, curvature functions and their axioms on embedded simplicial complexes"};
    app.require_subcommand(1);

    // analyze
    std::string analyze_file, phi_spec = "classical", lambda_spec = "euler", out_path;
    auto* analyze = app.add_subcommand("analyze", "Per-vertex curvature table and Gauss-Bonnet residual");
    analyze->add_option("file", analyze_file, "Complex file (.json or .off)")->required();
    analyze->add_option("--phi", phi_spec, "classical | standard | psi:<c> | mu | zero");
    analyze->add_option("--lambda", lambda_spec, "euler | const:<value>");
    analyze->add_option("--out", out_path, "Write the report here instead of stdout");

    // generate
    std::string gen_kind, gen_out;
    std::size_t n = 4, m = 4, turns = 3;
    double beta = 0.25, height = 1.0, omega = 1.0, width = 0.4;
    std::vector<double> angles, dihedrals;
    VertexId end_vertex = 0;
    auto* generate = app.add_subcommand("generate", "Write a generated complex");
    generate->add_option("kind", gen_kind, "fan | polygon | quad | pyramid | bipyramid | flap | mirror-flap | spiral")
        ->required()
        ->check(CLI::IsMember({"fan", "polygon", "quad", "pyramid", "bipyramid", "flap", "mirror-flap", "spiral"}));
    generate->add_option("--n", n, "Fan/pyramid sides or flap pages");
    generate->add_option("--m", m, "Bipyramid polygon sides");
    generate->add_option("--angles", angles, "Interior angles (polygon) or page angles (flap)")->delimiter(',');
    generate->add_option("--dihedrals", dihedrals, "Flap page dihedrals in radians")->delimiter(',');
    generate->add_option("--beta", beta, "Quadrilateral angle at vertex 0");
    generate->add_option("--height", height, "Apex height");
    generate->add_option("--omega", omega, "Target apex angle sum for the spiral");
    generate->add_option("--turns", turns, "Spiral windings");
    generate->add_option("--width", width, "Spiral ribbon width");
    generate->add_option("--end", end_vertex, "End-vertex for mirror-flap");
    generate->add_option("--out", gen_out, "Output file")->required();

    // subdivide
    std::string sub_file, sub_scheme, sub_out;
    auto* subdiv = app.add_subcommand("subdivide", "Apply one subdivision scheme");
    subdiv->add_option("file", sub_file)->required();
    subdiv->add_option("--scheme", sub_scheme, "face:<i>:centroid | face:<i>:<a,b,c> | edge:<i>:midpoint | edge:<i>:<t> | barycentric")
        ->required();
    subdiv->add_option("--out", sub_out)->required();

    // isometric
    std::string iso_a, iso_b;
    VertexId iso_va = 0, iso_vb = 0;
    std::size_t budget = 10'000'000;
    auto* isometric = app.add_subcommand("isometric", "Search for a star isometry taking vA to vB");
    isometric->add_option("fileA", iso_a)->required();
    isometric->add_option("vA", iso_va)->required();
    isometric->add_option("fileB", iso_b)->required();
    isometric->add_option("vB", iso_vb)->required();
    isometric->add_option("--budget", budget, "Backtracking node budget");

    // axiom-check
    std::string check_phi, corpus_dir, check_out;
    std::uint64_t seed = 1;
    auto* axiom = app.add_subcommand("axiom-check", "Run the four axiom checks on a corpus directory");
    axiom->add_option("phi", check_phi, "classical | standard | psi:<c> | mu | zero")->required();
    axiom->add_option("--corpus", corpus_dir, "Directory of .json / .off complexes")->required();
    axiom->add_option("--lambda", lambda_spec, "euler | const:<value>");
    axiom->add_option("--seed", seed, "Seed for jitter and pair generation");
    axiom->add_option("--out", check_out, "Write verdicts here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) {
            const VertexFunction phi = VertexFunction::parse(phi_spec);
            const ComplexFunction lambda = ComplexFunction::parse(lambda_spec);
            const EmbeddedComplex k = load_complex(analyze_file);
            write_text(out_path, report_json(k, phi, lambda));
            const CurvatureReport r = gauss_bonnet_report(k, phi, lambda);
            if (!(std::abs(r.residual) < kAxiomTolerance)) {
                std::cerr << "Gauss-Bonnet residual " << r.residual << " (sum " << r.total << ", lambda " << r.lambda_value
                          << ")\n";
                return kResidual;
            }
            return kOk;
        }
        if (generate->parsed()) {
            EmbeddedComplex k;
            std::cout.precision(17);
            try {
                if (gen_kind == "fan") {
                    k = regular_polygon_fan(n);
                } else if (gen_kind == "polygon") {
                    const PolygonSolution sol = solve_polygon(angles);
                    k = prescribed_angle_polygon(angles);
                    std::cout << "closure_error " << sol.closure_error << "\n";
                } else if (gen_kind == "quad") {
                    k = quadrilateral_with_angle(beta);
                    std::cout << "angle_sum(0) " << angle_sum(k, 0) << "\n";
                } else if (gen_kind == "pyramid") {
                    k = regular_pyramid(n, height);
                    std::cout << "apex_angle_sum " << angle_sum(k, n) << "\n";
                } else if (gen_kind == "bipyramid") {
                    k = regular_bipyramid(m, height);
                    std::cout << "apex_angle_sum " << angle_sum(k, m) << "\n";
                } else if (gen_kind == "flap" || gen_kind == "mirror-flap") {
                    if (angles.empty()) angles.assign(n, 0.125);
                    if (angles.size() != n) throw Error(ErrorKind::BadParameter, "--angles needs n values");
                    k = dihedrals.empty() ? n_flap(n, angles) : n_flap(n, angles, dihedrals);
                    if (gen_kind == "mirror-flap") k = mirror_flap(k, end_vertex);
                    std::cout << "spine_order " << edge_order(k, 0, 1) << "\n";
                } else {
                    const SpiralBipyramid s = spiral_bipyramid(omega, turns, width);
                    k = s.complex;
                    std::cout << "achieved_omega " << s.achieved_omega << "\nheight " << s.height << "\niterations "
                              << s.iterations << "\n";
                }
            } catch (const Error& e) {
                std::cerr << e.what() << "\n";
                return kGenerator;
            }
            const FVector f = k.fvector();
            std::cout << "fvector " << f.f0 << " " << f.f1 << " " << f.f2 << "\n";
            save_complex(gen_out, k);
            return kOk;
        }
        if (subdiv->parsed()) {
            const EmbeddedComplex k = load_complex(sub_file);
            const EmbeddedComplex j = subdivide(k, parse_scheme(k, sub_scheme));
            save_complex(sub_out, j);
            const FVector f = j.fvector();
            std::cout << "fvector " << f.f0 << " " << f.f1 << " " << f.f2 << "\n";
            return kOk;
        }
        if (isometric->parsed()) {
            const EmbeddedComplex a = load_complex(iso_a);
            const EmbeddedComplex b = load_complex(iso_b);
            IsometryOptions opt;
            opt.node_budget = budget;
            const auto w = find_star_isometry(a, iso_va, b, iso_vb, opt);
            if (!w) {
                std::cout << "none\n";
                return kResidual;
            }
            std::cout.precision(17);
            for (const auto& [x, y] : w->vertex_bijection) std::cout << x << " -> " << y << "\n";
            std::cout << "max_length_deviation " << w->max_length_deviation << "\n";
            return kOk;
        }
        if (axiom->parsed()) {
            const VertexFunction phi = VertexFunction::parse(check_phi);
            const ComplexFunction lambda = ComplexFunction::parse(lambda_spec);
            const Corpus corpus = load_corpus(corpus_dir);
            SuiteOptions opt;
            opt.seed = seed;
            const SuiteResult result = run_characterization_suite(phi, lambda, corpus, opt);
            write_text(check_out, verdicts_json(result));
            for (const auto& v : result.verdicts) {
                if (!v.pass && v.worst_case) {
                    std::cerr << to_string(v.axiom) << " fails on " << v.worst_case->complex_id << " vertex "
                              << v.worst_case->vertex << ": deviation " << v.worst_case->deviation << " ("
                              << v.worst_case->detail << ")\n";
                }
            }
            std::cerr << result.summary << "\n";
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_for(e);
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kValidation;
    }
    return kOk;
}
