#ifndef LIEQUIV_REPORT_HPP
#define LIEQUIV_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "liequiv/connection.hpp"
#include "liequiv/curvature.hpp"
#include "liequiv/equiv.hpp"
#include "liequiv/errors.hpp"
#include "liequiv/geodesic.hpp"
#include "liequiv/metric.hpp"
#include "liequiv/parallel.hpp"
#include "liequiv/problem_spec.hpp"

namespace liequiv {

/// Failure inside the pipeline, tagged with the stage that raised it.
class AnalysisError : public Error {
public:
    AnalysisError(std::string stage, const std::string& message, bool internal)
        : Error(stage + ": " + message), stage_(std::move(stage)), internal_(internal) {}
    const std::string& stage() const { return stage_; }
    /// True for broken internal invariants (exit code 2).
    bool internal() const { return internal_; }

private:
    std::string stage_;
    bool internal_;
};

struct AffSection {
    RigidityVerdict verdict;
    SliceReport slice;
};

struct HolonomySection {
    CurvatureOperators curvature;
    HolonomyAlgebra holonomy;
    ObstructionReport obstruction;
};

struct GeodesicSection {
    std::vector<double> initial_velocity;
    std::vector<double> final_velocity;
    double energy_drift = 0.0;
    /// Non-proportional aff(S) member used as comparison partner, if any.
    std::optional<Matrix> partner;
    std::optional<bool> partner_connection_equal;
    std::optional<EquivalenceReport> equivalence;
};

struct AnalysisReport {
    ProblemSpec spec;
    Signature signature;
    ConnectionForms connection;
    std::optional<AffSection> aff;
    std::optional<HolonomySection> holonomy;
    std::optional<ParallelReport> parallel;
    std::optional<GeodesicSection> geodesic;
    /// Wall-clock per stage in milliseconds; only printed on request.
    std::vector<std::pair<std::string, double>> timing_ms;
};

/// Runs connection → aff → rigidity → curvature → holonomy → parallel
/// (→ geodesic) for the requested analyses. Every report carries exactly
/// zero metric-compatibility and torsion residuals; anything else throws an
/// internal AnalysisError.
AnalysisReport analyze(const ProblemSpec& spec);

enum class Format { Human, Structured };

nlohmann::ordered_json report_to_json(const AnalysisReport& report);
std::string emit(const AnalysisReport& report, Format format, bool with_timing = false);

/// Output of the `geodesic` subcommand: the integrator alone.
nlohmann::ordered_json geodesic_only_json(const ProblemSpec& spec);

}  // namespace liequiv

#endif
