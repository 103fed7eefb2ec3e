#pragma once

#include <stdexcept>
#include <string>

namespace dioph {

struct ZeroDivision : std::domain_error {
    ZeroDivision() : std::domain_error("division by zero") {}
};

struct NegativeRadicand : std::domain_error {
    NegativeRadicand() : std::domain_error("square root of a negative value") {}
};

struct ZeroPolynomial : std::domain_error {
    ZeroPolynomial() : std::domain_error("operation undefined for the zero polynomial") {}
};

struct NotSquareFree : std::domain_error {
    NotSquareFree() : std::domain_error("polynomial has a repeated root") {}
};

// A scaled derivative or one of its discriminant combinations vanishes at the
// query point; the root-count tables are undefined there and the caller must
// perturb the point.
struct ZeroSignAtPoint : std::domain_error {
    explicit ZeroSignAtPoint(const std::string& what) : std::domain_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct DimensionTooLarge : std::invalid_argument {
    explicit DimensionTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct ArityMismatch : std::invalid_argument {
    explicit ArityMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct NoAdmissibleCandidate : std::runtime_error {
    NoAdmissibleCandidate() : std::runtime_error("no admissible candidate above the volume threshold") {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

struct MissingDiscriminant : std::out_of_range {
    explicit MissingDiscriminant(int degree)
        : std::out_of_range("no discriminant entry for field degree " + std::to_string(degree)) {}
};

// One step of a certificate chain failed; `step` names it.
struct StepFailed : std::runtime_error {
    std::string step;
    explicit StepFailed(std::string step_id, const std::string& detail = "")
        : std::runtime_error("certificate step failed: " + step_id + (detail.empty() ? "" : " (" + detail + ")")),
          step(std::move(step_id)) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace dioph
