#ifndef LIEQUIV_GEODESIC_HPP
#define LIEQUIV_GEODESIC_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "liequiv/connection.hpp"
#include "liequiv/errors.hpp"
#include "liequiv/metric.hpp"

namespace liequiv {

/// Connection matrices rounded to nearest double. All floating-point work
/// in the library happens on this type.
struct FloatConnection {
    std::size_t n = 0;
    std::vector<double> omega;  ///< omega[(k * n + i) * n + j] = (ω_k)^i_j

    static FloatConnection from(const ConnectionForms& exact);
    friend bool operator==(const FloatConnection&, const FloatConnection&) = default;
};

/// v̇ = −ω(v) v with ω(v) = Σ_k v^k ω_k: the geodesic equation ∇_γ̇ γ̇ = 0
/// written for the velocity in the left-invariant frame.
std::vector<double> reduced_rhs(const FloatConnection& omega, std::span<const double> v);

struct GeodesicSample {
    double time;
    std::vector<double> velocity;
};

struct GeodesicTrajectory {
    std::vector<GeodesicSample> samples;  ///< steps + 1 samples, starting at t = 0
    double step = 0.0;
    std::string method = "rk4";
};

class GeodesicError : public Error {
public:
    GeodesicError(std::size_t step, const std::string& message)
        : Error("step " + std::to_string(step) + ": " + message), step_(step) {}
    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

/// Classical fourth-order Runge-Kutta. Throws InvalidArgument for h <= 0 or
/// steps == 0, GeodesicError if the state stops being finite.
GeodesicTrajectory integrate(const FloatConnection& omega, std::span<const double> v0, double h,
                             std::size_t steps);

/// max_t |g(v(t), v(t)) − g(v0, v0)|
double energy_drift(const MetricMatrix& s, const GeodesicTrajectory& trajectory);

struct EquivalenceTrial {
    std::vector<double> initial_velocity;
    double max_deviation = 0.0;
};

struct EquivalenceReport {
    std::uint64_t seed = 0;
    double step = 0.0;
    std::size_t steps = 0;
    std::vector<EquivalenceTrial> trials;
    double max_deviation = 0.0;
    bool identical_connections = false;
};

/// Integrates both reduced systems from shared pseudo-random initial
/// velocities (uniform in [-1, 1)^n, seeded) and reports the largest
/// componentwise velocity difference.
EquivalenceReport empirical_equivalence(const FloatConnection& omega_g,
                                        const FloatConnection& omega_gbar, std::size_t trials,
                                        std::uint64_t seed, double h = 0.01,
                                        std::size_t steps = 1000);

/// Deterministic uniform draws in [-1, 1) from a 64-bit Mersenne twister.
std::vector<double> random_velocity(std::size_t n, std::uint64_t seed, std::size_t stream);

}  // namespace liequiv

#endif
