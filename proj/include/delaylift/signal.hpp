#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "delaylift/errors.hpp"
#include "delaylift/linalg.hpp"

namespace delaylift {

/// A vector-valued signal sampled on the uniform grid t_k = k*dt, k = 0..n.
/// Column k holds the sample at t_k.
struct Signal {
    double dt = 0.0;
    Mat samples;  // dim x (n_steps+1)

    int dim() const { return static_cast<int>(samples.rows()); }
    int n_steps() const { return static_cast<int>(samples.cols()) - 1; }
    double horizon() const { return dt * n_steps(); }

    static Signal zero(int dim, double dt, int n_steps) {
        return Signal{dt, Mat::Zero(dim, n_steps + 1)};
    }

    /// Scalar signal from a function of time.
    static Signal from_function(double dt, int n_steps, const std::function<Complex(double)>& f) {
        Signal s = zero(1, dt, n_steps);
        for (int k = 0; k <= n_steps; ++k) s.samples(0, k) = f(k * dt);
        return s;
    }

    Complex value(int k) const { return samples(0, k); }
};

/// Trapezoid L^2([0,T]) norm of a signal.
inline double signal_l2_norm(const Signal& s) {
    double acc = 0.0;
    const int n = s.n_steps();
    for (int k = 0; k <= n; ++k) {
        double w = (k == 0 || k == n) ? 0.5 : 1.0;
        acc += w * s.dt * s.samples.col(k).squaredNorm();
    }
    return std::sqrt(acc);
}

/// Observation signal; samples may be missing (Divergent Yosida limits).
struct ObsSignal {
    double dt = 0.0;
    Mat samples;               // dim x (n+1); gap columns are zero
    std::vector<std::uint8_t> gap;  // 1 where the sample diverged

    int n_steps() const { return static_cast<int>(samples.cols()) - 1; }
    std::size_t gap_count() const {
        std::size_t c = 0;
        for (auto g : gap) c += g;
        return c;
    }
};

/// Trapezoid L^2 norm over non-gap samples (gaps contribute zero).
inline double obs_l2_norm(const ObsSignal& s) {
    double acc = 0.0;
    const int n = s.n_steps();
    for (int k = 0; k <= n; ++k) {
        if (s.gap[k]) continue;
        double w = (k == 0 || k == n) ? 0.5 : 1.0;
        acc += w * s.dt * s.samples.col(k).squaredNorm();
    }
    return std::sqrt(acc);
}

} // namespace delaylift
