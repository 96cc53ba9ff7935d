// liequiv: analyse left-invariant metrics on Lie groups for affinely /
// geodesically equivalent left-invariant metrics.
//
// Exit codes: 0 success, 1 input error, 2 internal invariant violation.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liequiv/catalog.hpp"
#include "liequiv/problem_spec.hpp"
#include "liequiv/report.hpp"

namespace {

using namespace liequiv;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kInternalError = 2;

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::string> h;
    std::optional<std::size_t> steps;
};

ProblemSpec load(const std::string& path, const Overrides& o) {
    ProblemSpec spec = parse_spec(read_input(path));
    if (o.seed) spec.options.seed = *o.seed;
    if (o.h) {
        spec.options.h = parse_rational(*o.h);
        if (spec.options.h <= 0) throw InvalidArgument("--step must be positive");
    }
    if (o.steps) {
        if (*o.steps == 0) throw InvalidArgument("--steps must be >= 1");
        spec.options.steps = *o.steps;
    }
    return spec;
}

/// Runs fn per file, printing errors with the file name; returns the worst exit code.
template <typename Fn>
int for_each_file(const std::vector<std::string>& files, Fn&& fn) {
    int status = kOk;
    for (const auto& file : files) {
        try {
            fn(file);
        } catch (const AnalysisError& e) {
            std::cerr << file << ": " << (e.internal() ? "internal error: " : "error: ") << e.what()
                      << '\n';
            status = std::max(status, e.internal() ? kInternalError : kInputError);
        } catch (const InvariantViolation& e) {
            std::cerr << file << ": internal error: " << e.what() << '\n';
            status = kInternalError;
        } catch (const Error& e) {
            std::cerr << file << ": error: " << e.what() << '\n';
            status = std::max(status, kInputError);
        }
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"liequiv - affinely equivalent left-invariant metrics on Lie groups"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string format = "human";
    bool timing = false;
    Overrides overrides;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("files", files, "spec files ('-' for stdin)")->required();
        cmd->add_option("--format", format, "human | structured")
            ->check(CLI::IsMember({"human", "structured"}));
        cmd->add_option("--seed", overrides.seed, "seed for random initial velocities");
        cmd->add_option("--step", overrides.h, "integrator step, integer or p/q");
        cmd->add_option("--steps", overrides.steps, "integrator step count");
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "run the full analysis pipeline");
    add_common(analyze_cmd);
    analyze_cmd->add_flag("--timing", timing, "append per-stage timing (human format)");

    auto* check_cmd = app.add_subcommand("check", "parse and validate input only");
    check_cmd->add_option("files", files, "spec files ('-' for stdin)")->required();

    auto* geodesic_cmd = app.add_subcommand("geodesic", "run the geodesic integrator only");
    add_common(geodesic_cmd);

    auto* catalog_cmd = app.add_subcommand("catalog", "list built-in examples or print one as a spec");
    std::string catalog_name;
    std::vector<std::string> catalog_params;
    catalog_cmd->add_option("name", catalog_name, "catalog entry to print");
    catalog_cmd->add_option("params", catalog_params, "entry parameters");

    CLI11_PARSE(app, argc, argv);
    const Format fmt = format == "structured" ? Format::Structured : Format::Human;

    if (*catalog_cmd) {
        if (catalog_name.empty()) {
            for (const auto& e : catalog_entries())
                std::cout << e.name << "  [" << e.parameters << "]\n    " << e.description << '\n';
            return kOk;
        }
        return for_each_file({catalog_name}, [&](const std::string&) {
            std::vector<Rational> params;
            for (const auto& p : catalog_params) params.push_back(parse_rational(p));
            auto [alg, metric] = catalog(catalog_name, params);
            ProblemSpec spec{CatalogRef{catalog_name, params}, std::move(alg), std::move(metric),
                             all_analyses(), {}};
            std::cout << emit_spec_text(spec);
        });
    }

    if (*check_cmd) {
        return for_each_file(files, [&](const std::string& file) {
            const ProblemSpec spec = parse_spec(read_input(file));
            std::cout << file << ": ok (dim " << spec.algebra.dim() << ", "
                      << (spec.algebra.name().empty() ? "unnamed" : spec.algebra.name()) << ")\n";
        });
    }

    if (*geodesic_cmd) {
        return for_each_file(files, [&](const std::string& file) {
            const ProblemSpec spec = load(file, overrides);
            const auto doc = geodesic_only_json(spec);
            if (fmt == Format::Structured) {
                std::cout << doc.dump(2) << '\n';
            } else {
                std::cout << file << ": rk4 h=" << doc["h"].get<std::string>()
                          << " steps=" << spec.options.steps
                          << " energy drift=" << doc["energy_drift"].get<double>() << '\n';
            }
        });
    }

    // analyze
    nlohmann::ordered_json batch = nlohmann::ordered_json::array();
    const int status = for_each_file(files, [&](const std::string& file) {
        const AnalysisReport report = analyze(load(file, overrides));
        if (fmt == Format::Structured && files.size() > 1)
            batch.push_back(report_to_json(report));
        else
            std::cout << emit(report, fmt, timing);
    });
    if (fmt == Format::Structured && files.size() > 1) std::cout << batch.dump(2) << '\n';
    return status;
}
