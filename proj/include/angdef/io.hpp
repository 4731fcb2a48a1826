#pragma once

#include <angdef/axioms.hpp>
#include <angdef/complex.hpp>
#include <angdef/curvature.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace angdef {

enum class FileFormat { Json, Off };

/// .off selects OFF; anything else is read as JSON.
FileFormat format_for_path(const std::filesystem::path& path);

/**
 * {"ambient_dim": d, "vertices": [[x, ...], ...], "simplices": [[i], [i, j], [i, j, k], ...]}
 * with an optional "names" array. Missing faces of listed simplices are added.
 */
EmbeddedComplex parse_complex_json(std::string_view text);

/// ASCII OFF with triangle faces only; edges are implied by the faces.
EmbeddedComplex parse_off(std::string_view text);

EmbeddedComplex parse_complex(std::string_view text, FileFormat format);
EmbeddedComplex load_complex(const std::filesystem::path& path);

/// Canonical JSON: every edge then every triangle, sorted, coordinates with
/// 17 significant digits.
std::string serialize_complex_json(const EmbeddedComplex& complex);
void save_complex(const std::filesystem::path& path, const EmbeddedComplex& complex);

/// Per-vertex table plus a global block with totals and the residual.
std::string report_json(const EmbeddedComplex& complex, const VertexFunction& phi, const ComplexFunction& lambda);

std::string verdicts_json(const SuiteResult& result);

} // namespace angdef
