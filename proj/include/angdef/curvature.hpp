#pragma once

#include <angdef/complex.hpp>

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace angdef {

/// |angle_sum - 1| must exceed this for a vertex to count as non-flat.
inline constexpr double kFlatnessTolerance = 1e-9;

/// 1 - angle_sum(v).
double classical_angle_defect(const EmbeddedComplex& complex, VertexId v);

/// Alternating sum over the simplices containing v of their exterior angles at v.
double standard_curvature(const EmbeddedComplex& complex, VertexId v);

/// The same quantity via the link of v: 1 - f0(link)/2 + f1(link)/2 - angle_sum(v).
double link_formula_curvature(const EmbeddedComplex& complex, VertexId v);

/// 1 - c * ord(v). Combinatorial; c = 1/6 makes it sum to the Euler
/// characteristic on closed surfaces.
double psi(const EmbeddedComplex& complex, VertexId v, double c);

bool is_flat_vertex(const EmbeddedComplex& complex, VertexId v);

/// Number of vertices whose angle sum differs from 1.
std::size_t count_non_flat(const EmbeddedComplex& complex);

/// chi(K)/n(K) at non-flat vertices, 0 at flat ones. Surfaces only.
double mu(const EmbeddedComplex& complex, VertexId v);

/// A real-valued function of (complex, vertex).
class VertexFunction
{
public:
    using Evaluator = std::function<double(const EmbeddedComplex&, VertexId)>;
    using BatchEvaluator = std::function<std::vector<double>(const EmbeddedComplex&)>;

    VertexFunction(std::string name, Evaluator evaluator, bool surfaces_only = false, BatchEvaluator batch = {})
        : m_name(std::move(name))
        , m_eval(std::move(evaluator))
        , m_batch(std::move(batch))
        , m_surfaces_only(surfaces_only)
    {}

    const std::string& name() const { return m_name; }
    /// Only defined on simplicial surfaces; harness corpora skip other complexes.
    bool surfaces_only() const { return m_surfaces_only; }
    double operator()(const EmbeddedComplex& complex, VertexId v) const { return m_eval(complex, v); }
    /// Values at every vertex, in index order.
    std::vector<double> values(const EmbeddedComplex& complex) const;

    static VertexFunction classical_defect();
    static VertexFunction standard_curvature();
    static VertexFunction psi(double c);
    static VertexFunction mu();
    static VertexFunction zero();

    /// Parses "classical", "standard", "psi:<c>", "mu" or "zero".
    static VertexFunction parse(const std::string& spec);

private:
    std::string m_name;
    Evaluator m_eval;
    BatchEvaluator m_batch;
    bool m_surfaces_only;
};

/// A real-valued function of a complex.
class ComplexFunction
{
public:
    using Evaluator = std::function<double(const EmbeddedComplex&)>;

    ComplexFunction(std::string name, Evaluator evaluator)
        : m_name(std::move(name))
        , m_eval(std::move(evaluator))
    {}

    const std::string& name() const { return m_name; }
    double operator()(const EmbeddedComplex& complex) const { return m_eval(complex); }

    static ComplexFunction euler();
    static ComplexFunction constant(double value);

    /// Parses "euler" or "const:<value>".
    static ComplexFunction parse(const std::string& spec);

private:
    std::string m_name;
    Evaluator m_eval;
};

struct CurvatureReport
{
    std::vector<double> per_vertex;
    double total = 0.0;
    double lambda_value = 0.0;
    double residual = 0.0; // total - lambda_value
};

CurvatureReport gauss_bonnet_report(const EmbeddedComplex& complex, const VertexFunction& phi, const ComplexFunction& lambda);

/**
 * Values of a complex function on the generated family members it is assumed
 * constant on: a planar fan, an n-flap for each n, and a pyramid.
 */
class FamilyConstants
{
public:
    explicit FamilyConstants(ComplexFunction lambda);

    double fan() const { return m_fan; }
    double pyramid() const { return m_pyramid; }
    double flap(std::size_t n) const;
    const ComplexFunction& lambda() const { return m_lambda; }

private:
    ComplexFunction m_lambda;
    double m_fan;
    double m_pyramid;
    mutable std::mutex m_mutex;
    mutable std::map<std::size_t, double> m_flaps;
};

/**
 * Right-hand side of the general vertex formula
 *   lambda(star v) - 1/2 sum_{w in link} lambda(flap_{linkord(w,v)})
 *     + 1/2 lambda_fan f1(link v) - lambda_fan angle_sum(v).
 */
double star_formula(const EmbeddedComplex& complex, VertexId v, const FamilyConstants& constants);

/// Right-hand side of the surface formula 1/2 lambda_pyramid (1 - angle_sum(v)).
double surface_formula(const EmbeddedComplex& complex, VertexId v, const FamilyConstants& constants);

/// |standard_curvature - star_formula| with lambda = Euler characteristic.
double eqaaa_identity_residual(const EmbeddedComplex& complex, VertexId v);

/// |classical defect - surface_formula| with lambda = Euler characteristic. Surfaces only.
double eqaas_identity_residual(const EmbeddedComplex& complex, VertexId v);

} // namespace angdef
