#include "liequiv/problem_spec.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "liequiv/catalog.hpp"

namespace liequiv {

using nlohmann::ordered_json;

std::string to_string(Analysis a) {
    switch (a) {
        case Analysis::Connection: return "connection";
        case Analysis::Aff: return "aff";
        case Analysis::Holonomy: return "holonomy";
        case Analysis::Parallel: return "parallel";
        case Analysis::Geodesic: return "geodesic";
    }
    return "unknown";
}

const std::set<Analysis>& all_analyses() {
    static const std::set<Analysis> all = {Analysis::Connection, Analysis::Aff,
                                           Analysis::Holonomy, Analysis::Parallel,
                                           Analysis::Geodesic};
    return all;
}

namespace {

std::optional<Analysis> analysis_from(std::string_view word) {
    for (auto a : all_analyses())
        if (to_string(a) == word) return a;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Text format

/// Cursor over the value part of one line; columns are 1-based in the file.
class Cursor {
public:
    Cursor(std::string_view text, std::size_t line, std::size_t column0)
        : text_(text), line_(line), column0_(column0) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what);
    }
    std::string word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }
    /// Unsigned decimal integer.
    std::size_t integer(const char* what) {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail(std::string("expected ") + what);
        const std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 9) fail(std::string(what) + " out of range");
        return static_cast<std::size_t>(std::stoul(digits));
    }
    /// Unsigned rational "p" or "p/q" starting at the current position.
    std::optional<Rational> unsigned_rational() {
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            return std::nullopt;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
        }
        const std::size_t column = column0_ + start;
        try {
            return parse_rational(text_.substr(start, pos_ - start));
        } catch (const Error& e) {
            throw ParseError(line_, column, e.what());
        }
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(line_, column0_ + pos_, message);
    }
    std::size_t column() const { return column0_ + pos_; }
    std::size_t line() const { return line_; }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t column0_;
    std::size_t pos_ = 0;
};

Rational rational_token(Cursor& cur) {
    const std::size_t column = cur.column();
    const std::string w = cur.word();
    if (w.empty()) cur.fail("expected a rational number");
    try {
        return parse_rational(w);
    } catch (const Error& e) {
        throw ParseError(cur.line(), column + 1, e.what());
    }
}

std::vector<Rational> rational_list(Cursor& cur, std::size_t line) {
    std::vector<Rational> out;
    while (!cur.done()) {
        const std::size_t column = cur.column();
        const std::string w = cur.word();
        try {
            out.push_back(parse_rational(w));
        } catch (const Error& e) {
            throw ParseError(line, column + 1, e.what());
        }
    }
    return out;
}

/// "e<k>" with 1 <= k <= n; returns 0-based index.
std::size_t basis_index(Cursor& cur, std::size_t n) {
    cur.expect('e', "basis vector 'e<k>'");
    const std::size_t k = cur.integer("basis index");
    if (k < 1 || k > n) cur.fail("basis index e" + std::to_string(k) + " outside 1.." + std::to_string(n));
    return k - 1;
}

/// lincomb := "0" | term {("+"|"-") term};  term := [rational ["*"]] "e" int
Vector combination(Cursor& cur, std::size_t n) {
    Vector v(n, Rational(0));
    if (cur.peek() == '0') {
        Cursor probe = cur;
        if (auto z = probe.unsigned_rational(); z && *z == 0 && probe.done()) return v;
    }
    bool first = true;
    std::vector<bool> seen(n, false);
    while (true) {
        Rational sign = 1;
        if (cur.accept('-'))
            sign = -1;
        else if (!cur.accept('+') && !first)
            cur.fail("expected '+' or '-' between terms");
        Rational coeff = 1;
        if (auto c = cur.unsigned_rational()) {
            coeff = *c;
            cur.accept('*');
        }
        const std::size_t k = basis_index(cur, n);
        if (seen[k]) cur.fail("basis vector e" + std::to_string(k + 1) + " repeated");
        seen[k] = true;
        v[k] = sign * coeff;
        first = false;
        if (cur.done()) break;
    }
    return v;
}

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

struct PendingBracket {
    std::size_t line, column;
    std::size_t i, j;
    std::string value;
    std::size_t value_column;
};

MetricMatrix build_metric(std::vector<std::vector<Rational>> rows) {
    const std::size_t n = rows.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    return MetricMatrix(std::move(m));
}

void validate_algebra(const LieAlgebra& alg) {
    if (const auto report = validate(alg); !report.ok())
        throw InvalidAlgebra("structure constants violate the Lie algebra axioms:\n" +
                             report.describe());
}

}  // namespace

ProblemSpec parse_spec(std::string_view text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') {
            ordered_json doc;
            try {
                doc = ordered_json::parse(text);
            } catch (const nlohmann::json::parse_error& e) {
                std::size_t line = 1, column = 1;
                for (std::size_t p = 0; p + 1 < e.byte && p < text.size(); ++p) {
                    if (text[p] == '\n') {
                        ++line;
                        column = 1;
                    } else {
                        ++column;
                    }
                }
                throw ParseError(line, column, std::string("malformed JSON: ") + e.what());
            }
            return parse_spec_json(doc);
        }
        break;
    }
    return parse_spec_text(text);
}

ProblemSpec parse_spec_text(std::string_view text) {
    std::optional<CatalogRef> catalog;
    std::optional<std::size_t> dimension;
    std::string name;
    std::vector<PendingBracket> brackets;
    std::vector<std::vector<Rational>> metric_rows;
    std::vector<std::size_t> metric_lines;
    std::optional<std::set<Analysis>> analyses;
    GeodesicOptions options;
    std::set<std::string> seen_keys;
    std::size_t catalog_line = 0;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
        if (trim(raw).empty()) {
            if (end == text.size()) break;
            continue;
        }
        const auto colon = raw.find(':');
        std::size_t key_col = 1;
        while (key_col - 1 < raw.size() && std::isspace(static_cast<unsigned char>(raw[key_col - 1])))
            ++key_col;
        if (colon == std::string_view::npos)
            throw ParseError(line_no, key_col, "expected 'key: value'");
        const std::string key = trim(raw.substr(0, colon));
        const std::string_view value = raw.substr(colon + 1);
        Cursor cur(value, line_no, colon + 2);

        const bool repeatable = key == "bracket" || key == "metric";
        if (!repeatable && !seen_keys.insert(key).second)
            throw ParseError(line_no, key_col, "duplicate key '" + key + "'");

        if (key == "name") {
            name = trim(value);
        } else if (key == "catalog") {
            CatalogRef ref;
            ref.name = cur.word();
            if (ref.name.empty()) cur.fail("expected catalog name");
            ref.params = rational_list(cur, line_no);
            catalog = std::move(ref);
            catalog_line = line_no;
        } else if (key == "dimension") {
            dimension = cur.integer("dimension");
            if (*dimension == 0) throw ParseError(line_no, colon + 2, "dimension must be positive");
            if (!cur.done()) cur.fail("unexpected text after dimension");
        } else if (key == "bracket") {
            PendingBracket b{line_no, colon + 2, 0, 0, {}, 0};
            cur.expect('[', "'['");
            cur.expect('e', "'e<i>'");
            b.i = cur.integer("bracket index");
            cur.expect(',', "','");
            cur.expect('e', "'e<j>'");
            b.j = cur.integer("bracket index");
            cur.expect(']', "']'");
            cur.expect('=', "'='");
            b.value_column = cur.column();
            b.value = std::string(value.substr(b.value_column - (colon + 2)));
            brackets.push_back(std::move(b));
        } else if (key == "metric") {
            metric_rows.push_back(rational_list(cur, line_no));
            metric_lines.push_back(line_no);
        } else if (key == "analyses") {
            std::set<Analysis> set;
            while (!cur.done()) {
                const std::size_t column = cur.column() + 1;
                const std::string w = cur.word();
                if (w == "all") {
                    set.insert(all_analyses().begin(), all_analyses().end());
                } else if (auto a = analysis_from(w)) {
                    set.insert(*a);
                } else {
                    throw ParseError(line_no, column, "unknown analysis '" + w + "'");
                }
            }
            if (set.empty()) cur.fail("expected at least one analysis");
            analyses = std::move(set);
        } else if (key == "h") {
            Rational h = rational_token(cur);
            if (h <= 0) throw ParseError(line_no, colon + 2, "h must be positive");
            options.h = h;
        } else if (key == "steps") {
            options.steps = cur.integer("steps");
            if (options.steps == 0) throw ParseError(line_no, colon + 2, "steps must be >= 1");
        } else if (key == "seed") {
            options.seed = cur.integer("seed");
        } else if (key == "trials") {
            options.trials = cur.integer("trials");
        } else {
            throw ParseError(line_no, key_col, "unknown key '" + key + "'");
        }
        if (end == text.size()) break;
    }

    std::optional<LieAlgebra> algebra;
    std::optional<MetricMatrix> default_metric;
    if (catalog) {
        if (!brackets.empty())
            throw ParseError(brackets.front().line, 1, "'bracket' cannot be combined with 'catalog'");
        try {
            auto [alg, metric] = liequiv::catalog(catalog->name, catalog->params);
            algebra = std::move(alg);
            default_metric = std::move(metric);
        } catch (const InvalidArgument& e) {
            throw ParseError(catalog_line, 1, e.what());
        }
        if (dimension && *dimension != algebra->dim())
            throw SpecError("dimension does not match catalog entry");
        if (!name.empty() && name != algebra->name())
            throw SpecError("name does not match catalog entry");
    } else {
        if (!dimension) throw SpecError("missing 'dimension' (or 'catalog')");
        algebra.emplace(*dimension, name);
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        for (const auto& b : brackets) {
            const std::size_t n = *dimension;
            if (b.i < 1 || b.i > n || b.j < 1 || b.j > n)
                throw ParseError(b.line, b.column, "bracket index outside 1.." + std::to_string(n));
            if (b.i == b.j) throw ParseError(b.line, b.column, "[e_i, e_i] is always zero");
            if (!pairs.insert({std::min(b.i, b.j), std::max(b.i, b.j)}).second)
                throw ParseError(b.line, b.column, "bracket of this pair given twice");
            Cursor cur(b.value, b.line, b.value_column);
            algebra->set_bracket(b.i - 1, b.j - 1, combination(cur, n));
        }
    }
    validate_algebra(*algebra);

    const std::size_t n = algebra->dim();
    std::optional<MetricMatrix> metric;
    if (!metric_rows.empty()) {
        if (metric_rows.size() != n)
            throw SpecError("metric has " + std::to_string(metric_rows.size()) + " rows, expected " +
                            std::to_string(n));
        for (std::size_t r = 0; r < n; ++r)
            if (metric_rows[r].size() != n)
                throw ParseError(metric_lines[r], 1,
                                 "metric row has " + std::to_string(metric_rows[r].size()) +
                                     " entries, expected " + std::to_string(n));
        metric = build_metric(std::move(metric_rows));
    } else if (default_metric) {
        metric = std::move(default_metric);
    } else {
        throw SpecError("missing 'metric' rows");
    }
    return ProblemSpec{std::move(catalog), std::move(*algebra), std::move(*metric),
                       analyses.value_or(all_analyses()), options};
}

namespace {

Rational json_rational(const ordered_json& node, const std::string& where) {
    if (node.is_string()) {
        try {
            return parse_rational(node.get<std::string>());
        } catch (const Error& e) {
            throw SpecError(where + ": " + e.what());
        }
    }
    if (node.is_number_integer()) return Rational(node.get<long>());
    throw SpecError(where + ": expected a rational string \"p/q\" or an integer");
}

std::size_t json_count(const ordered_json& node, const std::string& where) {
    if (!node.is_number_unsigned() && !(node.is_number_integer() && node.get<long>() >= 0))
        throw SpecError(where + ": expected a non-negative integer");
    return node.get<std::size_t>();
}

}  // namespace

ProblemSpec parse_spec_json(const ordered_json& doc) {
    if (!doc.is_object()) throw SpecError("spec must be a JSON object");
    static const std::set<std::string> known = {"name",     "catalog",  "params", "dimension",
                                                "brackets", "metric",   "analyses", "h",
                                                "steps",    "seed",     "trials"};
    for (const auto& [key, _] : doc.items())
        if (!known.contains(key)) throw SpecError("unknown key '" + key + "'");

    std::optional<CatalogRef> catalog;
    std::optional<LieAlgebra> algebra;
    std::optional<MetricMatrix> metric;
    if (doc.contains("catalog")) {
        if (!doc["catalog"].is_string()) throw SpecError("catalog: expected a string");
        CatalogRef ref{doc["catalog"].get<std::string>(), {}};
        if (doc.contains("params")) {
            if (!doc["params"].is_array()) throw SpecError("params: expected an array");
            for (const auto& p : doc["params"]) ref.params.push_back(json_rational(p, "params"));
        }
        try {
            auto [alg, met] = liequiv::catalog(ref.name, ref.params);
            algebra = std::move(alg);
            metric = std::move(met);
        } catch (const InvalidArgument& e) {
            throw SpecError(e.what());
        }
        catalog = std::move(ref);
    }

    std::size_t n = algebra ? algebra->dim() : 0;
    if (doc.contains("dimension")) {
        const std::size_t d = json_count(doc["dimension"], "dimension");
        if (algebra && d != n) throw SpecError("dimension does not match catalog entry");
        n = d;
    }
    if (n == 0) throw SpecError("missing or zero 'dimension'");

    if (doc.contains("brackets")) {
        if (!doc["brackets"].is_array()) throw SpecError("brackets: expected an array");
        LieAlgebra explicit_alg(n, algebra ? algebra->name() : std::string());
        std::set<std::pair<std::size_t, std::size_t>> pairs;
        for (const auto& b : doc["brackets"]) {
            if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("value"))
                throw SpecError("brackets: each entry needs i, j and value");
            const std::size_t i = json_count(b["i"], "brackets.i");
            const std::size_t j = json_count(b["j"], "brackets.j");
            if (i < 1 || i > n || j < 1 || j > n || i == j)
                throw SpecError("brackets: bad index pair (" + std::to_string(i) + ", " +
                                std::to_string(j) + ")");
            if (!pairs.insert({std::min(i, j), std::max(i, j)}).second)
                throw SpecError("brackets: pair given twice");
            if (!b["value"].is_array() || b["value"].size() != n)
                throw SpecError("brackets.value: expected " + std::to_string(n) + " entries");
            Vector v;
            for (const auto& x : b["value"]) v.push_back(json_rational(x, "brackets.value"));
            explicit_alg.set_bracket(i - 1, j - 1, v);
        }
        if (algebra && !(explicit_alg == *algebra))
            throw SpecError("brackets do not match the catalog entry");
        algebra = std::move(explicit_alg);
    }
    if (!algebra) algebra.emplace(n);
    if (doc.contains("name") && !catalog) {
        if (!doc["name"].is_string()) throw SpecError("name: expected a string");
        algebra->set_name(doc["name"].get<std::string>());
    }
    validate_algebra(*algebra);

    if (doc.contains("metric")) {
        const auto& rows = doc["metric"];
        if (!rows.is_array() || rows.size() != n)
            throw SpecError("metric: expected " + std::to_string(n) + " rows");
        std::vector<std::vector<Rational>> values;
        for (const auto& row : rows) {
            if (!row.is_array() || row.size() != n)
                throw SpecError("metric: each row needs " + std::to_string(n) + " entries");
            values.emplace_back();
            for (const auto& x : row) values.back().push_back(json_rational(x, "metric"));
        }
        metric = build_metric(std::move(values));
    }
    if (!metric) throw SpecError("missing 'metric'");

    std::set<Analysis> analyses = all_analyses();
    if (doc.contains("analyses")) {
        if (!doc["analyses"].is_array() || doc["analyses"].empty())
            throw SpecError("analyses: expected a non-empty array");
        analyses.clear();
        for (const auto& a : doc["analyses"]) {
            const std::string w = a.is_string() ? a.get<std::string>() : std::string();
            if (w == "all")
                analyses.insert(all_analyses().begin(), all_analyses().end());
            else if (auto parsed = analysis_from(w))
                analyses.insert(*parsed);
            else
                throw SpecError("analyses: unknown entry '" + a.dump() + "'");
        }
    }
    GeodesicOptions options;
    if (doc.contains("h")) {
        options.h = json_rational(doc["h"], "h");
        if (options.h <= 0) throw SpecError("h must be positive");
    }
    if (doc.contains("steps")) {
        options.steps = json_count(doc["steps"], "steps");
        if (options.steps == 0) throw SpecError("steps must be >= 1");
    }
    if (doc.contains("seed")) options.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("trials")) options.trials = json_count(doc["trials"], "trials");

    return ProblemSpec{std::move(catalog), std::move(*algebra), std::move(*metric),
                       std::move(analyses), options};
}

std::string format_combination(std::span<const Rational> coeffs) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const Rational& c = coeffs[k];
        if (c == 0) continue;
        const Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (mag != 1) os << to_string(mag) << ' ';
        os << 'e' << (k + 1);
        first = false;
    }
    return first ? "0" : os.str();
}

std::string emit_spec_text(const ProblemSpec& spec) {
    std::ostringstream os;
    const std::size_t n = spec.algebra.dim();
    bool metric_is_default = false;
    if (spec.catalog) {
        os << "catalog: " << spec.catalog->name;
        for (const auto& p : spec.catalog->params) os << ' ' << to_string(p);
        os << '\n';
        metric_is_default = liequiv::catalog(spec.catalog->name, spec.catalog->params).second ==
                            spec.metric;
    } else {
        if (!spec.algebra.name().empty()) os << "name: " << spec.algebra.name() << '\n';
        os << "dimension: " << n << '\n';
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const Vector v = spec.algebra.bracket_basis(i, j);
                bool zero = true;
                for (const auto& x : v) zero = zero && x == 0;
                if (!zero)
                    os << "bracket: [e" << i + 1 << ", e" << j + 1 << "] = " << format_combination(v)
                       << '\n';
            }
    }
    if (!metric_is_default)
        for (std::size_t i = 0; i < n; ++i) {
            os << "metric:";
            for (std::size_t j = 0; j < n; ++j) os << ' ' << to_string(spec.metric(i, j));
            os << '\n';
        }
    os << "analyses:";
    for (auto a : spec.analyses) os << ' ' << to_string(a);
    os << '\n';
    os << "h: " << to_string(spec.options.h) << '\n';
    os << "steps: " << spec.options.steps << '\n';
    os << "seed: " << spec.options.seed << '\n';
    os << "trials: " << spec.options.trials << '\n';
    return os.str();
}

ordered_json spec_to_json(const ProblemSpec& spec) {
    ordered_json doc;
    const std::size_t n = spec.algebra.dim();
    if (spec.catalog) {
        doc["catalog"] = spec.catalog->name;
        ordered_json params = ordered_json::array();
        for (const auto& p : spec.catalog->params) params.push_back(to_string(p));
        doc["params"] = params;
    } else if (!spec.algebra.name().empty()) {
        doc["name"] = spec.algebra.name();
    }
    doc["dimension"] = n;
    ordered_json brackets = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector v = spec.algebra.bracket_basis(i, j);
            bool zero = true;
            for (const auto& x : v) zero = zero && x == 0;
            if (zero) continue;
            ordered_json value = ordered_json::array();
            for (const auto& x : v) value.push_back(to_string(x));
            brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"value", value}});
        }
    doc["brackets"] = brackets;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < n; ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(to_string(spec.metric(i, j)));
        rows.push_back(row);
    }
    doc["metric"] = rows;
    ordered_json analyses = ordered_json::array();
    for (auto a : spec.analyses) analyses.push_back(to_string(a));
    doc["analyses"] = analyses;
    doc["h"] = to_string(spec.options.h);
    doc["steps"] = spec.options.steps;
    doc["seed"] = spec.options.seed;
    doc["trials"] = spec.options.trials;
    return doc;
}

}  // namespace liequiv
