#include "liequiv/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

namespace liequiv {

using nlohmann::ordered_json;

namespace {

template <typename Fn>
auto run_stage(AnalysisReport& report, const std::string& stage, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto record = [&] {
        const auto end = std::chrono::steady_clock::now();
        report.timing_ms.emplace_back(
            stage, std::chrono::duration<double, std::milli>(end - start).count());
    };
    try {
        if constexpr (std::is_void_v<decltype(fn())>) {
            fn();
            record();
        } else {
            auto result = fn();
            record();
            return result;
        }
    } catch (const InvariantViolation& e) {
        throw AnalysisError(stage, e.what(), true);
    } catch (const AnalysisError&) {
        throw;
    } catch (const Error& e) {
        throw AnalysisError(stage, e.what(), false);
    }
}

/// First member S + t·B (t = 1, 2, ...) that is nondegenerate, for the
/// first basis element B beyond S.
std::optional<Matrix> comparison_partner(const AffSpace& space) {
    if (space.basis.size() < 2) return std::nullopt;
    for (long t = 1; t <= 64; ++t) {
        Matrix member = space.basis[0] + space.basis[1] * Rational(t);
        if (determinant(member) != 0) return member;
    }
    return std::nullopt;
}

}  // namespace

AnalysisReport analyze(const ProblemSpec& spec) {
    AnalysisReport report{spec, {}, {}, {}, {}, {}, {}, {}};
    const LieAlgebra& alg = spec.algebra;
    const MetricMatrix& s = spec.metric;

    report.signature = run_stage(report, "signature", [&] { return signature(s); });
    report.connection = run_stage(report, "connection", [&] {
        ConnectionForms omega = levi_civita(alg, s);
        if (!check_compatibility(s, omega).all_zero())
            throw InvariantViolation("nonzero metric-compatibility residual");
        if (!check_torsion_free(alg, omega).all_zero())
            throw InvariantViolation("nonzero torsion residual");
        return omega;
    });
    const ConnectionForms& omega = report.connection;

    std::optional<RigidityVerdict> verdict;
    if (spec.wants(Analysis::Aff) || spec.wants(Analysis::Holonomy) ||
        spec.wants(Analysis::Geodesic)) {
        verdict = run_stage(report, "aff", [&] { return is_invariantly_rigid(s, omega); });
    }
    if (spec.wants(Analysis::Aff)) {
        SliceReport slice =
            run_stage(report, "slice", [&] { return nondegenerate_slice(verdict->space); });
        report.aff = AffSection{*verdict, std::move(slice)};
    }
    if (spec.wants(Analysis::Holonomy)) {
        report.holonomy = run_stage(report, "holonomy", [&] {
            CurvatureOperators r = curvature(alg, omega);
            if (!r.skew_residuals(s.matrix()).all_zero())
                throw InvariantViolation("curvature operator outside so(S)");
            HolonomyAlgebra hol = infinitesimal_holonomy(alg, omega, r);
            ObstructionReport obstruction = check_holonomy_obstruction(verdict->space.dim(), hol);
            if (!obstruction.consistent)
                throw InvariantViolation("holonomy obstruction violated: " + obstruction.verdict);
            return HolonomySection{std::move(r), std::move(hol), std::move(obstruction)};
        });
    }
    if (spec.wants(Analysis::Parallel)) {
        report.parallel = run_stage(report, "parallel", [&] { return parallel_report(s, omega); });
    }
    if (spec.wants(Analysis::Geodesic)) {
        report.geodesic = run_stage(report, "geodesic", [&] {
            GeodesicSection section;
            const FloatConnection fomega = FloatConnection::from(omega);
            const double h = to_double(spec.options.h);
            section.initial_velocity = random_velocity(alg.dim(), spec.options.seed, 0);
            const GeodesicTrajectory traj =
                integrate(fomega, section.initial_velocity, h, spec.options.steps);
            section.final_velocity = traj.samples.back().velocity;
            section.energy_drift = energy_drift(s, traj);
            if (auto partner = comparison_partner(verdict->space)) {
                const MetricMatrix sbar(*partner);
                const ConnectionForms omega_bar = levi_civita(alg, sbar);
                section.partner = *partner;
                section.partner_connection_equal = omega_bar == omega;
                section.equivalence =
                    empirical_equivalence(fomega, FloatConnection::from(omega_bar),
                                          spec.options.trials, spec.options.seed, h,
                                          spec.options.steps);
            }
            return section;
        });
    }
    return report;
}

namespace {

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

ordered_json vector_json(std::span<const Rational> v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

ordered_json signature_json(const Signature& sig) {
    return {{"positive", sig.positive}, {"negative", sig.negative}};
}

ordered_json equivalence_json(const EquivalenceReport& eq) {
    ordered_json trials = ordered_json::array();
    for (const auto& t : eq.trials)
        trials.push_back({{"initial_velocity", t.initial_velocity}, {"max_deviation", t.max_deviation}});
    return {{"seed", eq.seed},
            {"h", eq.step},
            {"steps", eq.steps},
            {"identical_connections", eq.identical_connections},
            {"max_deviation", eq.max_deviation},
            {"trials", trials}};
}

}  // namespace

ordered_json report_to_json(const AnalysisReport& report) {
    ordered_json doc;
    doc["spec"] = spec_to_json(report.spec);
    doc["signature"] = signature_json(report.signature);

    ordered_json connection;
    connection["convention"] = "omega[k][i][j] = omega^i_j(e_k), nabla_{e_k} e_j = sum_i omega[k][i][j] e_i";
    ordered_json forms = ordered_json::array();
    for (const auto& w : report.connection.omega) forms.push_back(matrix_json(w));
    connection["omega"] = forms;
    connection["compatibility_residual_zero"] = true;
    connection["torsion_residual_zero"] = true;
    doc["connection"] = connection;

    if (report.aff) {
        const AffSpace& space = report.aff->verdict.space;
        ordered_json aff;
        aff["dim"] = space.dim();
        aff["invariantly_rigid"] = report.aff->verdict.rigid;
        aff["contains_reference"] = space.contains_reference;
        ordered_json basis = ordered_json::array();
        for (const auto& b : space.basis) basis.push_back(matrix_json(b));
        aff["basis"] = basis;
        ordered_json echelon = ordered_json::array();
        for (const auto& b : space.echelon) echelon.push_back(matrix_json(b));
        aff["echelon"] = echelon;
        ordered_json samples = ordered_json::array();
        for (const auto& sample : report.aff->slice.samples) {
            samples.push_back({{"coords", vector_json(sample.coords)},
                               {"det", to_string(sample.det)},
                               {"signature", sample.signature ? signature_json(*sample.signature)
                                                              : ordered_json(nullptr)}});
        }
        aff["slice"] = {{"det", to_string(report.aff->slice.det)},
                        {"degenerate_members_sampled", report.aff->slice.degenerate_members_sampled},
                        {"samples", samples}};
        doc["aff"] = aff;
    }

    if (report.holonomy) {
        const auto& section = *report.holonomy;
        ordered_json hol;
        const std::size_t n = section.curvature.dim();
        ordered_json curv = ordered_json::array();
        std::size_t p = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j, ++p) {
                const Matrix& r = section.curvature.upper()[p];
                if (!r.is_zero()) curv.push_back({{"i", i + 1}, {"j", j + 1}, {"R", matrix_json(r)}});
            }
        hol["curvature_nonzero"] = section.curvature.nonzero_count();
        hol["curvature_pairs"] = section.curvature.upper().size();
        hol["curvature"] = curv;
        hol["dim"] = section.holonomy.dim();
        hol["full_dim"] = section.holonomy.ambient_skew_dim;
        hol["full"] = section.holonomy.full();
        hol["saturation_rounds"] = section.holonomy.saturation_rounds;
        ordered_json basis = ordered_json::array();
        for (const auto& b : section.holonomy.basis) basis.push_back(matrix_json(b));
        hol["basis"] = basis;
        hol["obstruction"] = {{"aff_dim", section.obstruction.aff_dim},
                              {"hol_dim", section.obstruction.hol_dim},
                              {"full_dim", section.obstruction.full_dim},
                              {"consistent", section.obstruction.consistent},
                              {"verdict", section.obstruction.verdict}};
        doc["holonomy"] = hol;
    }

    if (report.parallel) {
        const auto& par = *report.parallel;
        ordered_json basis = ordered_json::array(), causal = ordered_json::array(),
                     families = ordered_json::array();
        for (std::size_t a = 0; a < par.basis.size(); ++a) {
            basis.push_back(vector_json(par.basis[a]));
            causal.push_back({{"type", to_string(par.causal[a].type)},
                              {"norm", to_string(par.causal[a].norm)}});
            families.push_back({{"metric", matrix_json(par.families[a].metric)},
                                {"dual_square", matrix_json(par.families[a].dual_square)}});
        }
        doc["parallel"] = {{"basis", basis},
                           {"causal", causal},
                           {"gram", matrix_json(par.gram)},
                           {"families", families},
                           {"decomposability",
                            {{"summary", par.decomposition.summary},
                             {"split_certified", par.decomposition.split_certified()}}}};
    }

    if (report.geodesic) {
        const auto& geo = *report.geodesic;
        ordered_json g;
        g["method"] = "rk4";
        g["h"] = to_string(report.spec.options.h);
        g["steps"] = report.spec.options.steps;
        g["seed"] = report.spec.options.seed;
        g["initial_velocity"] = geo.initial_velocity;
        g["final_velocity"] = geo.final_velocity;
        g["energy_drift"] = geo.energy_drift;
        if (geo.partner) {
            g["partner_metric"] = matrix_json(*geo.partner);
            g["partner_connection_equal"] = *geo.partner_connection_equal;
            g["equivalence"] = equivalence_json(*geo.equivalence);
        } else {
            g["partner_metric"] = nullptr;
        }
        doc["geodesic"] = g;
    }
    return doc;
}

namespace {

void write_matrix(std::ostream& os, const Matrix& m, const std::string& indent) {
    std::vector<std::size_t> width(m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            width[j] = std::max(width[j], to_string(m(i, j)).size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << indent << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << std::setw(static_cast<int>(width[j])) << to_string(m(i, j));
        }
        os << "]\n";
    }
}

std::string vector_text(std::span<const Rational> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

std::string doubles_text(const std::vector<double>& v) {
    std::ostringstream os;
    os << std::setprecision(12) << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

std::string human(const AnalysisReport& report, bool with_timing) {
    std::ostringstream os;
    const ProblemSpec& spec = report.spec;
    const std::size_t n = spec.algebra.dim();
    const std::string title = spec.algebra.name().empty() ? "(unnamed)" : spec.algebra.name();
    os << "== liequiv analysis: " << title << " ==\n";
    if (spec.catalog) {
        os << "catalog: " << spec.catalog->name;
        for (const auto& p : spec.catalog->params) os << ' ' << to_string(p);
        os << '\n';
    }
    os << "dimension: " << n << '\n';
    os << "brackets:\n";
    bool any = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vector v = spec.algebra.bracket_basis(i, j);
            const std::string text = format_combination(v);
            if (text == "0") continue;
            os << "  [e" << i + 1 << ", e" << j + 1 << "] = " << text << '\n';
            any = true;
        }
    if (!any) os << "  (abelian)\n";
    os << "metric S:\n";
    write_matrix(os, spec.metric.matrix(), "  ");
    os << "signature: (" << report.signature.positive << ", " << report.signature.negative << ")\n";

    os << "\n-- Levi-Civita connection --\n";
    os << "convention: nabla_{e_k} e_j = sum_i omega_k[i][j] e_i\n";
    for (std::size_t k = 0; k < n; ++k) {
        os << "omega_" << k + 1 << (report.connection[k].is_zero() ? " = 0\n" : ":\n");
        if (!report.connection[k].is_zero()) write_matrix(os, report.connection[k], "  ");
    }
    os << "metric compatibility residual: zero (exact)\n";
    os << "torsion residual: zero (exact)\n";

    if (report.aff) {
        const AffSpace& space = report.aff->verdict.space;
        os << "\n-- Affinely equivalent left-invariant metrics aff(S) --\n";
        os << "dim aff(S): " << space.dim() << '\n';
        os << "INVARIANTLY RIGID: " << (report.aff->verdict.rigid ? "yes" : "no") << '\n';
        for (std::size_t b = 0; b < space.basis.size(); ++b) {
            os << "B" << b + 1 << (b == 0 ? " = S:\n" : ":\n");
            write_matrix(os, space.basis[b], "  ");
        }
        os << "det(sum t_k B_k) = " << to_string(report.aff->slice.det) << '\n';
        for (const auto& sample : report.aff->slice.samples) {
            os << "  t = " << vector_text(sample.coords) << ": det = " << to_string(sample.det);
            if (sample.signature)
                os << ", signature (" << sample.signature->positive << ", "
                   << sample.signature->negative << ")\n";
            else
                os << ", degenerate (parallel symmetric tensor, not a metric)\n";
        }
    }

    if (report.holonomy) {
        const auto& section = *report.holonomy;
        os << "\n-- Curvature and holonomy --\n";
        os << "nonzero curvature operators: " << section.curvature.nonzero_count() << " of "
           << section.curvature.upper().size() << '\n';
        os << "holonomy algebra: dim " << section.holonomy.dim() << " of "
           << section.holonomy.ambient_skew_dim << (section.holonomy.full() ? " (full)" : " (not full)")
           << '\n';
        os << "obstruction check: " << section.obstruction.verdict << '\n';
    }

    if (report.parallel) {
        const auto& par = *report.parallel;
        os << "\n-- Parallel left-invariant vector fields --\n";
        if (par.basis.empty()) os << "none\n";
        for (std::size_t a = 0; a < par.basis.size(); ++a) {
            os << "v" << a + 1 << " = " << vector_text(par.basis[a]) << ": "
               << to_string(par.causal[a].type) << ", g(v,v) = " << to_string(par.causal[a].norm)
               << '\n';
            os << "  family lambda*S + mu*(v* x v*), v* x v* =\n";
            write_matrix(os, par.families[a].dual_square, "    ");
        }
        os << "decomposability: " << par.decomposition.summary << '\n';
    }

    if (report.geodesic) {
        const auto& geo = *report.geodesic;
        os << "\n-- Geodesic harness (rk4, h = " << to_string(spec.options.h)
           << ", steps = " << spec.options.steps << ", seed = " << spec.options.seed << ") --\n";
        os << "initial velocity: " << doubles_text(geo.initial_velocity) << '\n';
        os << "final velocity:   " << doubles_text(geo.final_velocity) << '\n';
        os << std::scientific << std::setprecision(3);
        os << "energy drift: " << geo.energy_drift << '\n';
        if (geo.partner) {
            os << "partner metric (S + t*B2):\n";
            write_matrix(os, *geo.partner, "  ");
            os << "partner connection equal (exact): "
               << (*geo.partner_connection_equal ? "yes" : "no") << '\n';
            os << "empirical max velocity deviation over " << geo.equivalence->trials.size()
               << " trials: " << geo.equivalence->max_deviation << '\n';
        } else {
            os << "no non-proportional partner in aff(S)\n";
        }
        os << std::defaultfloat;
    }

    if (with_timing) {
        os << "\n-- Timing --\n";
        os << std::fixed << std::setprecision(3);
        for (const auto& [stage, ms] : report.timing_ms) os << stage << ": " << ms << " ms\n";
    }
    return os.str();
}

}  // namespace

std::string emit(const AnalysisReport& report, Format format, bool with_timing) {
    if (format == Format::Structured) return report_to_json(report).dump(2) + "\n";
    return human(report, with_timing);
}

ordered_json geodesic_only_json(const ProblemSpec& spec) {
    const ConnectionForms omega = levi_civita(spec.algebra, spec.metric);
    const FloatConnection fomega = FloatConnection::from(omega);
    const auto v0 = random_velocity(spec.algebra.dim(), spec.options.seed, 0);
    const auto traj = integrate(fomega, v0, to_double(spec.options.h), spec.options.steps);
    return {{"method", traj.method},
            {"h", to_string(spec.options.h)},
            {"steps", spec.options.steps},
            {"seed", spec.options.seed},
            {"initial_velocity", v0},
            {"final_velocity", traj.samples.back().velocity},
            {"energy_drift", energy_drift(spec.metric, traj)}};
}

}  // namespace liequiv
