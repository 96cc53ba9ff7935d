#ifndef LIEQUIV_PROBLEM_SPEC_HPP
#define LIEQUIV_PROBLEM_SPEC_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "liequiv/algebra.hpp"
#include "liequiv/errors.hpp"
#include "liequiv/metric.hpp"
#include "liequiv/rational.hpp"

#include <json.hpp>

namespace liequiv {

enum class Analysis { Connection, Aff, Holonomy, Parallel, Geodesic };

std::string to_string(Analysis a);
const std::set<Analysis>& all_analyses();

struct CatalogRef {
    std::string name;
    std::vector<Rational> params;
    friend bool operator==(const CatalogRef&, const CatalogRef&) = default;
};

struct GeodesicOptions {
    Rational h{1, 100};
    std::size_t steps = 1000;
    std::uint64_t seed = 1;
    std::size_t trials = 3;
    friend bool operator==(const GeodesicOptions&, const GeodesicOptions&) = default;
};

struct ProblemSpec {
    std::optional<CatalogRef> catalog;
    LieAlgebra algebra;
    MetricMatrix metric;
    std::set<Analysis> analyses = all_analyses();
    GeodesicOptions options;

    bool wants(Analysis a) const { return analyses.contains(a); }
    friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Semantic problem in a JSON spec (no line information available).
class SpecError : public Error {
public:
    using Error::Error;
};

/// Parses either the line-oriented text format or, when the first
/// non-blank character is '{', the JSON form. Validates the algebra and
/// the metric.
ProblemSpec parse_spec(std::string_view text);
ProblemSpec parse_spec_text(std::string_view text);
ProblemSpec parse_spec_json(const nlohmann::ordered_json& doc);

/// Canonical text form; parse_spec_text(emit_spec_text(s)) == s.
std::string emit_spec_text(const ProblemSpec& spec);
/// Structured echo; parse_spec_json(spec_to_json(s)) == s.
nlohmann::ordered_json spec_to_json(const ProblemSpec& spec);

/// "[e1, e3] = e1 - 1/2 e4" style rendering of a bracket value.
std::string format_combination(std::span<const Rational> coeffs);

}  // namespace liequiv

#endif
