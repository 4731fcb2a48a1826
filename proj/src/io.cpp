#include <angdef/io.hpp>

#include <angdef/metric.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace angdef {

namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& message)
{
    throw Error(ErrorKind::ParseError, message);
}

std::string format_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::size_t to_index(const json& value, const char* what)
{
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        parse_error(std::string(what) + " must be a non-negative integer");
    }
    return value.get<std::size_t>();
}

json verdict_json(const AxiomVerdict& v)
{
    json out{{"axiom", std::string(to_string(v.axiom))},
             {"status", v.pass ? "pass" : "fail"},
             {"trials", v.trials},
             {"skipped", v.skipped},
             {"tolerance", v.tolerance}};
    if (v.worst_case) {
        out["worst_case"] = {{"complex", v.worst_case->complex_id},
                             {"vertex", v.worst_case->vertex},
                             {"deviation", v.worst_case->deviation},
                             {"detail", v.worst_case->detail}};
    } else {
        out["worst_case"] = nullptr;
    }
    return out;
}

} // namespace

FileFormat format_for_path(const std::filesystem::path& path)
{
    std::string ext = path.extension().string();
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return ext == ".off" ? FileFormat::Off : FileFormat::Json;
}

EmbeddedComplex parse_complex_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::ostringstream msg;
        msg << "byte " << e.byte << ": " << e.what();
        parse_error(msg.str());
    }
    if (!doc.is_object()) parse_error("top level must be an object");
    if (!doc.contains("ambient_dim") || !doc.contains("vertices") || !doc.contains("simplices")) {
        parse_error("expected keys ambient_dim, vertices and simplices");
    }
    const std::size_t dim = to_index(doc["ambient_dim"], "ambient_dim");
    const json& verts = doc["vertices"];
    if (!verts.is_array()) parse_error("vertices must be an array");
    std::vector<double> coords;
    coords.reserve(verts.size() * dim);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const json& p = verts[i];
        if (!p.is_array() || p.size() != dim) {
            parse_error("vertex " + std::to_string(i) + " must have " + std::to_string(dim) + " coordinates");
        }
        for (const auto& x : p) {
            if (!x.is_number()) parse_error("vertex " + std::to_string(i) + " has a non-numeric coordinate");
            coords.push_back(x.get<double>());
        }
    }
    const json& simp = doc["simplices"];
    if (!simp.is_array()) parse_error("simplices must be an array");
    std::vector<SimplexTuple> simplices;
    for (std::size_t i = 0; i < simp.size(); ++i) {
        if (!simp[i].is_array()) parse_error("simplex " + std::to_string(i) + " must be an array");
        SimplexTuple s;
        for (const auto& v : simp[i]) s.push_back(to_index(v, "simplex entry"));
        simplices.push_back(std::move(s));
    }
    if (doc.contains("names") && !doc["names"].is_array()) parse_error("names must be an array");
    return EmbeddedComplex::build(dim, std::move(coords), simplices, {.auto_close_faces = true});
}

EmbeddedComplex parse_off(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> std::optional<std::string> {
        while (std::getline(in, line)) {
            ++line_no;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
        }
        return std::nullopt;
    };
    auto fail = [&](const std::string& what) { parse_error("line " + std::to_string(line_no) + ": " + what); };

    auto header = next_line();
    if (!header) parse_error("empty OFF file");
    std::istringstream hs(*header);
    std::string magic;
    hs >> magic;
    if (magic != "OFF") fail("expected OFF header");
    std::size_t nv = 0, nf = 0, ne = 0;
    if (!(hs >> nv)) {
        auto counts = next_line();
        if (!counts) fail("missing element counts");
        hs = std::istringstream(*counts);
        if (!(hs >> nv)) fail("bad vertex count");
    }
    if (!(hs >> nf >> ne)) fail("bad face or edge count");

    std::vector<double> coords;
    coords.reserve(nv * 3);
    for (std::size_t i = 0; i < nv; ++i) {
        auto l = next_line();
        if (!l) fail("expected " + std::to_string(nv) + " vertices");
        std::istringstream ls(*l);
        double x, y, z;
        if (!(ls >> x >> y >> z)) fail("bad vertex coordinates");
        coords.insert(coords.end(), {x, y, z});
    }
    std::vector<SimplexTuple> faces;
    for (std::size_t i = 0; i < nf; ++i) {
        auto l = next_line();
        if (!l) fail("expected " + std::to_string(nf) + " faces");
        std::istringstream ls(*l);
        std::size_t k = 0;
        if (!(ls >> k)) fail("bad face size");
        if (k != 3) {
            throw Error(ErrorKind::NonTriangularFace,
                "line " + std::to_string(line_no) + ": face with " + std::to_string(k) + " vertices");
        }
        long long a, b, c;
        if (!(ls >> a >> b >> c) || a < 0 || b < 0 || c < 0) fail("bad face indices");
        faces.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b), static_cast<VertexId>(c)});
    }
    return EmbeddedComplex::build(3, std::move(coords), faces, {.auto_close_faces = true});
}

EmbeddedComplex parse_complex(std::string_view text, FileFormat format)
{
    return format == FileFormat::Off ? parse_off(text) : parse_complex_json(text);
}

EmbeddedComplex load_complex(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_complex(buf.str(), format_for_path(path));
}

std::string serialize_complex_json(const EmbeddedComplex& complex)
{
    std::ostringstream out;
    out << "{\n  \"ambient_dim\": " << complex.ambient_dim() << ",\n  \"vertices\": [";
    for (VertexId v = 0; v < complex.num_vertices(); ++v) {
        out << (v ? ",\n    [" : "\n    [");
        const auto p = complex.point(v);
        for (std::size_t i = 0; i < p.size(); ++i) out << (i ? ", " : "") << format_double(p[i]);
        out << "]";
    }
    out << (complex.num_vertices() ? "\n  ],\n" : "],\n") << "  \"simplices\": [";
    bool first = true;
    auto emit = [&](std::span<const VertexId> s) {
        out << (first ? "\n    [" : ",\n    [");
        first = false;
        for (std::size_t i = 0; i < s.size(); ++i) out << (i ? ", " : "") << s[i];
        out << "]";
    };
    for (const auto& e : complex.edges()) emit(e);
    for (const auto& t : complex.triangles()) emit(t);
    out << (first ? "]\n}\n" : "\n  ]\n}\n");
    return out.str();
}

void save_complex(const std::filesystem::path& path, const EmbeddedComplex& complex)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) parse_error("cannot write " + path.string());
    out << serialize_complex_json(complex);
    if (!out) parse_error("write failed for " + path.string());
}

std::string report_json(const EmbeddedComplex& complex, const VertexFunction& phi, const ComplexFunction& lambda)
{
    const CurvatureReport report = gauss_bonnet_report(complex, phi, lambda);
    json rows = json::array();
    double total_defect = 0.0, total_kappa = 0.0;
    for (VertexId v = 0; v < complex.num_vertices(); ++v) {
        const FVector lf = link(complex, v).fvector();
        const double defect = classical_angle_defect(complex, v);
        const double kappa = standard_curvature(complex, v);
        total_defect += defect;
        total_kappa += kappa;
        rows.push_back({{"vertex", v},
                        {"angle_sum", angle_sum(complex, v)},
                        {"classical_defect", defect},
                        {"standard_curvature", kappa},
                        {"ord", vertex_order(complex, v)},
                        {"link_fvector", {lf.f0, lf.f1, lf.f2}},
                        {"phi", report.per_vertex[v]}});
    }
    const FVector f = complex.fvector();
    json doc{{"phi", phi.name()},
             {"lambda", lambda.name()},
             {"vertices", rows},
             {"global",
              {{"fvector", {f.f0, f.f1, f.f2}},
               {"euler_characteristic", euler_characteristic(complex)},
               {"total_classical_defect", total_defect},
               {"total_standard_curvature", total_kappa},
               {"total_phi", report.total},
               {"lambda_value", report.lambda_value},
               {"residual", report.residual}}}};
    return doc.dump(2) + "\n";
}

std::string verdicts_json(const SuiteResult& result)
{
    json verdicts = json::array();
    for (const auto& v : result.verdicts) verdicts.push_back(verdict_json(v));
    json doc{{"verdicts", verdicts}, {"summary", result.summary}};
    if (result.formula_residual) {
        doc["formula"] = {{"kind", result.formula}, {"max_residual", *result.formula_residual}};
    }
    return doc.dump(2) + "\n";
}

} // namespace angdef
