#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace angdef {

enum class ErrorKind {
    // construction and lookup
    DegenerateSimplex,
    DanglingFace,
    IndexOutOfRange,
    UnknownVertex,
    NoSuchEdge,
    NoSuchSimplex,
    NotIncident,
    // curvature
    NotASurface,
    AllVerticesFlat,
    // generators
    BadParameter,
    InfeasibleAngles,
    ClosureFailure,
    ApexInPlane,
    ApicesSameSide,
    AngleTooLarge,
    TargetUnreachable,
    RibbonSelfOverlap,
    // subdivision and isometry
    PointNotInRelativeInterior,
    SearchBudgetExceeded,
    UnsupportedLinkShape,
    // io
    ParseError,
    NonTriangularFace,
};

std::string_view to_string(ErrorKind kind);

/// Library-wide exception. Every failure carries a kind so callers (the CLI in
/// particular) can branch on the category without parsing messages.
class Error : public std::runtime_error
{
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message)
        , m_kind(kind)
    {}

    ErrorKind kind() const noexcept { return m_kind; }

private:
    ErrorKind m_kind;
};

} // namespace angdef
