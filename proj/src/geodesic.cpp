#include "liequiv/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace liequiv {

FloatConnection FloatConnection::from(const ConnectionForms& exact) {
    FloatConnection f;
    f.n = exact.dim();
    f.omega.reserve(f.n * f.n * f.n);
    for (const auto& w : exact.omega)
        for (const auto& x : w.flat()) f.omega.push_back(to_double(x));
    return f;
}

std::vector<double> reduced_rhs(const FloatConnection& omega, std::span<const double> v) {
    const std::size_t n = omega.n;
    if (v.size() != n) throw DimensionMismatch("reduced_rhs: velocity length != dim");
    std::vector<double> out(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        if (v[k] == 0.0) continue;
        const double* w = omega.omega.data() + k * n * n;
        for (std::size_t i = 0; i < n; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < n; ++j) acc += w[i * n + j] * v[j];
            out[i] -= v[k] * acc;
        }
    }
    return out;
}

GeodesicTrajectory integrate(const FloatConnection& omega, std::span<const double> v0, double h,
                             std::size_t steps) {
    if (!(h > 0.0) || !std::isfinite(h)) throw InvalidArgument("integrate: step must be > 0");
    if (steps == 0) throw InvalidArgument("integrate: steps must be >= 1");
    const std::size_t n = omega.n;
    if (v0.size() != n) throw DimensionMismatch("integrate: velocity length != dim");

    GeodesicTrajectory traj;
    traj.step = h;
    traj.samples.reserve(steps + 1);
    std::vector<double> v(v0.begin(), v0.end());
    traj.samples.push_back({0.0, v});

    std::vector<double> tmp(n);
    auto shifted = [&](const std::vector<double>& k, double scale) -> const std::vector<double>& {
        for (std::size_t i = 0; i < n; ++i) tmp[i] = v[i] + scale * k[i];
        return tmp;
    };
    for (std::size_t step = 1; step <= steps; ++step) {
        const auto k1 = reduced_rhs(omega, v);
        const auto k2 = reduced_rhs(omega, shifted(k1, h / 2));
        const auto k3 = reduced_rhs(omega, shifted(k2, h / 2));
        const auto k4 = reduced_rhs(omega, shifted(k3, h));
        for (std::size_t i = 0; i < n; ++i) {
            v[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            if (!std::isfinite(v[i])) throw GeodesicError(step, "non-finite velocity");
        }
        traj.samples.push_back({static_cast<double>(step) * h, v});
    }
    return traj;
}

double energy_drift(const MetricMatrix& s, const GeodesicTrajectory& trajectory) {
    const std::size_t n = s.dim();
    std::vector<double> g(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i * n + j] = to_double(s(i, j));
    auto energy = [&](const std::vector<double>& v) {
        double e = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) e += v[i] * g[i * n + j] * v[j];
        return e;
    };
    if (trajectory.samples.empty()) return 0.0;
    const double e0 = energy(trajectory.samples.front().velocity);
    double drift = 0.0;
    for (const auto& sample : trajectory.samples)
        drift = std::max(drift, std::fabs(energy(sample.velocity) - e0));
    return drift;
}

std::vector<double> random_velocity(std::size_t n, std::uint64_t seed, std::size_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    std::mt19937_64 gen(seq);
    std::vector<double> v(n);
    for (auto& x : v) {
        // top 53 bits -> [0, 1), then affine map to [-1, 1)
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
        x = 2.0 * u - 1.0;
    }
    return v;
}

EquivalenceReport empirical_equivalence(const FloatConnection& omega_g,
                                        const FloatConnection& omega_gbar, std::size_t trials,
                                        std::uint64_t seed, double h, std::size_t steps) {
    if (omega_g.n != omega_gbar.n) throw DimensionMismatch("empirical_equivalence: dimensions");
    EquivalenceReport report;
    report.seed = seed;
    report.step = h;
    report.steps = steps;
    report.identical_connections = omega_g == omega_gbar;
    for (std::size_t t = 0; t < trials; ++t) {
        EquivalenceTrial trial;
        trial.initial_velocity = random_velocity(omega_g.n, seed, t);
        const auto a = integrate(omega_g, trial.initial_velocity, h, steps);
        const auto b = integrate(omega_gbar, trial.initial_velocity, h, steps);
        for (std::size_t s = 0; s < a.samples.size(); ++s)
            for (std::size_t i = 0; i < omega_g.n; ++i)
                trial.max_deviation =
                    std::max(trial.max_deviation,
                             std::fabs(a.samples[s].velocity[i] - b.samples[s].velocity[i]));
        report.max_deviation = std::max(report.max_deviation, trial.max_deviation);
        report.trials.push_back(std::move(trial));
    }
    return report;
}

}  // namespace liequiv
