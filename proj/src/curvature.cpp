#include <angdef/curvature.hpp>

#include <angdef/generators.hpp>
#include <angdef/metric.hpp>

#include <cmath>
#include <sstream>
#include <vector>

namespace angdef {

double classical_angle_defect(const EmbeddedComplex& complex, VertexId v)
{
    return 1.0 - angle_sum(complex, v);
}

double standard_curvature(const EmbeddedComplex& complex, VertexId v)
{
    // sum_{i=0..2} (-1)^i sum_{eta^i containing v} exterior angle of eta^i at v
    double kappa = exterior_angle(complex, v, {v});
    for (auto ei : complex.incident_edges(v)) {
        const Edge& e = complex.edges()[ei];
        kappa -= exterior_angle(complex, v, {e[0], e[1]});
    }
    for (auto ti : complex.incident_triangles(v)) {
        const Triangle& t = complex.triangles()[ti];
        kappa += exterior_angle(complex, v, {t[0], t[1], t[2]});
    }
    return kappa;
}

double link_formula_curvature(const EmbeddedComplex& complex, VertexId v)
{
    const FVector lf = link(complex, v).fvector();
    return 1.0 - 0.5 * static_cast<double>(lf.f0) + 0.5 * static_cast<double>(lf.f1) - angle_sum(complex, v);
}

double psi(const EmbeddedComplex& complex, VertexId v, double c)
{
    return 1.0 - c * static_cast<double>(vertex_order(complex, v));
}

bool is_flat_vertex(const EmbeddedComplex& complex, VertexId v)
{
    return !(std::abs(angle_sum(complex, v) - 1.0) > kFlatnessTolerance);
}

std::size_t count_non_flat(const EmbeddedComplex& complex)
{
    std::size_t n = 0;
    for (VertexId v = 0; v < complex.num_vertices(); ++v) {
        if (!is_flat_vertex(complex, v)) ++n;
    }
    return n;
}

double mu(const EmbeddedComplex& complex, VertexId v)
{
    complex.require_vertex(v);
    if (!classify(complex).is_surface) throw Error(ErrorKind::NotASurface, "mu is defined on simplicial surfaces only");
    const std::size_t n = count_non_flat(complex);
    if (n == 0) throw Error(ErrorKind::AllVerticesFlat, "every vertex has angle sum 1; the embedding is corrupt");
    if (is_flat_vertex(complex, v)) return 0.0;
    return static_cast<double>(euler_characteristic(complex)) / static_cast<double>(n);
}

// ---------------------------------------------------------------------------

VertexFunction VertexFunction::classical_defect()
{
    return {"classical", [](const EmbeddedComplex& k, VertexId v) { return classical_angle_defect(k, v); }};
}

VertexFunction VertexFunction::standard_curvature()
{
    return {"standard", [](const EmbeddedComplex& k, VertexId v) { return angdef::standard_curvature(k, v); }};
}

VertexFunction VertexFunction::psi(double c)
{
    std::ostringstream name;
    name.precision(17);
    name << "psi:" << c;
    return {name.str(), [c](const EmbeddedComplex& k, VertexId v) { return angdef::psi(k, v, c); }, true};
}

VertexFunction VertexFunction::mu()
{
    auto batch = [](const EmbeddedComplex& k) {
        if (!classify(k).is_surface) throw Error(ErrorKind::NotASurface, "mu is defined on simplicial surfaces only");
        std::vector<bool> flat(k.num_vertices());
        std::size_t n = 0;
        for (VertexId v = 0; v < k.num_vertices(); ++v) {
            flat[v] = is_flat_vertex(k, v);
            if (!flat[v]) ++n;
        }
        if (n == 0) throw Error(ErrorKind::AllVerticesFlat, "every vertex has angle sum 1; the embedding is corrupt");
        const double value = static_cast<double>(euler_characteristic(k)) / static_cast<double>(n);
        std::vector<double> out(k.num_vertices());
        for (VertexId v = 0; v < k.num_vertices(); ++v) out[v] = flat[v] ? 0.0 : value;
        return out;
    };
    return {"mu", [](const EmbeddedComplex& k, VertexId v) { return angdef::mu(k, v); }, true, batch};
}

std::vector<double> VertexFunction::values(const EmbeddedComplex& complex) const
{
    if (m_batch) return m_batch(complex);
    std::vector<double> out(complex.num_vertices());
    for (VertexId v = 0; v < complex.num_vertices(); ++v) out[v] = m_eval(complex, v);
    return out;
}

VertexFunction VertexFunction::zero()
{
    return {"zero", [](const EmbeddedComplex& k, VertexId v) {
                k.require_vertex(v);
                return 0.0;
            }, true};
}

VertexFunction VertexFunction::parse(const std::string& spec)
{
    if (spec == "classical") return classical_defect();
    if (spec == "standard") return standard_curvature();
    if (spec == "mu") return mu();
    if (spec == "zero") return zero();
    if (spec.rfind("psi:", 0) == 0) {
        std::size_t used = 0;
        const std::string arg = spec.substr(4);
        double c = 0.0;
        try {
            c = std::stod(arg, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != arg.size()) throw Error(ErrorKind::BadParameter, "bad psi coefficient: " + arg);
        return psi(c);
    }
    throw Error(ErrorKind::BadParameter, "unknown vertex function: " + spec);
}

ComplexFunction ComplexFunction::euler()
{
    return {"euler", [](const EmbeddedComplex& k) { return static_cast<double>(euler_characteristic(k)); }};
}

ComplexFunction ComplexFunction::constant(double value)
{
    std::ostringstream name;
    name.precision(17);
    name << "const:" << value;
    return {name.str(), [value](const EmbeddedComplex&) { return value; }};
}

ComplexFunction ComplexFunction::parse(const std::string& spec)
{
    if (spec == "euler") return euler();
    if (spec.rfind("const:", 0) == 0) {
        std::size_t used = 0;
        const std::string arg = spec.substr(6);
        double value = 0.0;
        try {
            value = std::stod(arg, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != arg.size()) throw Error(ErrorKind::BadParameter, "bad constant: " + arg);
        return constant(value);
    }
    throw Error(ErrorKind::BadParameter, "unknown complex function: " + spec);
}

CurvatureReport gauss_bonnet_report(const EmbeddedComplex& complex, const VertexFunction& phi, const ComplexFunction& lambda)
{
    CurvatureReport report;
    report.per_vertex = phi.values(complex);
    for (double value : report.per_vertex) report.total += value;
    report.lambda_value = lambda(complex);
    report.residual = report.total - report.lambda_value;
    return report;
}

// ---------------------------------------------------------------------------

FamilyConstants::FamilyConstants(ComplexFunction lambda)
    : m_lambda(std::move(lambda))
    , m_fan(m_lambda(regular_polygon_fan(4)))
    , m_pyramid(m_lambda(regular_pyramid(4, 1.0)))
{}

double FamilyConstants::flap(std::size_t n) const
{
    std::lock_guard lock(m_mutex);
    auto it = m_flaps.find(n);
    if (it != m_flaps.end()) return it->second;
    const std::vector<double> angles(n, 1.0 / 8.0);
    const double value = m_lambda(n_flap(n, angles));
    m_flaps.emplace(n, value);
    return value;
}

double star_formula(const EmbeddedComplex& complex, VertexId v, const FamilyConstants& constants)
{
    const StarView st = star(complex, v);
    const double lambda_star = constants.lambda()(extract(st).complex);
    const LinkView lk = link(complex, v);
    double flap_sum = 0.0;
    for (auto w : lk.vertices) flap_sum += constants.flap(edge_order(complex, v, w));
    return lambda_star - 0.5 * flap_sum + 0.5 * constants.fan() * static_cast<double>(lk.edges.size())
        - constants.fan() * angle_sum(complex, v);
}

double surface_formula(const EmbeddedComplex& complex, VertexId v, const FamilyConstants& constants)
{
    return 0.5 * constants.pyramid() * (1.0 - angle_sum(complex, v));
}

namespace {

const FamilyConstants& euler_constants()
{
    static const FamilyConstants constants(ComplexFunction::euler());
    return constants;
}

} // namespace

double eqaaa_identity_residual(const EmbeddedComplex& complex, VertexId v)
{
    return std::abs(standard_curvature(complex, v) - star_formula(complex, v, euler_constants()));
}

double eqaas_identity_residual(const EmbeddedComplex& complex, VertexId v)
{
    complex.require_vertex(v);
    if (!classify(complex).is_surface) throw Error(ErrorKind::NotASurface, "the surface formula needs a simplicial surface");
    return std::abs(classical_angle_defect(complex, v) - surface_formula(complex, v, euler_constants()));
}

} // namespace angdef
