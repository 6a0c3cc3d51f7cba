#pragma once

#include <stdexcept>
#include <string>

namespace origami {

enum class Err {
    Unbounded,
    EmptyInterior,
    RedundantFacet,
    UnknownFacet,
    DimensionMismatch,
    Outside,
    NotConvexUnion,
    SkeletonHit,
    NoHit,
    SampleAtCollision,
    EmptySection,
    DegenerateBeveling,
    InheritanceViolation,
    NotFolded,
    PreconditionFailed,
    IncompleteModel,
    FinalSegmentCreaseLike,
    AssertionFailed,
    NotALoop,
    BasepointMismatch,
    Singular,
    ValidationFailed,
    StageFailed,
    UnsupportedDim,
    BadArgument,
};

const char* err_name(Err e);

class GeomError : public std::runtime_error {
public:
    GeomError(Err code, std::string detail)
        : std::runtime_error(std::string(err_name(code)) + ": " + detail),
          code_(code), detail_(std::move(detail)) {}

    Err code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    Err code_;
    std::string detail_;
};

[[noreturn]] inline void fail(Err code, const std::string& detail) {
    throw GeomError(code, detail);
}

} // namespace origami
