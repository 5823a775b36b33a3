#pragma once

#include <optional>
#include <vector>

#include "delaylift/errors.hpp"
#include "delaylift/linalg.hpp"
#include "delaylift/signal.hpp"

namespace delaylift {

/// U-valued history segment on [-r,0], sampled at theta_j = -r + j*(r/m),
/// j = 0..m. Column j of `values` is the sample at theta_j; column m is the
/// value at theta = 0.
struct HistorySegment {
    double r = 1.0;
    int m = 1;
    Mat values;  // u_dim x (m+1)

    int u_dim() const { return static_cast<int>(values.rows()); }
    double dtheta() const { return r / m; }
    double theta(int j) const { return -r + j * dtheta(); }

    static HistorySegment zero(int u_dim, double r, int m) {
        return HistorySegment{r, m, Mat::Zero(u_dim, m + 1)};
    }
    void validate() const;
};

/// Trapezoid L^2([-r,0]) norm of a segment.
double segment_l2_norm(const HistorySegment& g);

/// Scalar density profiles for the absolutely continuous part of a delay
/// measure; `table` is linearly interpolated between its nodes.
struct DelayDensity {
    enum class Kind { Const, Exp, Table };
    Kind kind = Kind::Const;
    double scale = 1.0;
    double rate = 0.0;                // exp: scale * e^{rate * theta}
    std::vector<double> table_theta;  // increasing, within [-r,0]
    std::vector<double> table_value;

    double eval(double theta) const;
};

/// Stieltjes measure nu on [-r,0]: operator-valued atoms plus an optional
/// scalar density (acting as density * identity on U).
struct DelayMeasure {
    struct Atom {
        double theta;
        Mat weight;  // u_dim x u_dim
    };

    double r = 1.0;
    int u_dim = 1;
    std::vector<Atom> atoms;
    std::optional<DelayDensity> density;
    // Continuity at zero forbids an atom at theta = 0 unless the measure is
    // explicitly the no-delay measure.
    bool no_delay = false;

    void validate() const;
    double total_variation(int quad_cells = 256) const;

    static DelayMeasure single_atom(double r, double theta, int u_dim = 1, double weight = 1.0);
    /// Dirac at zero: boundary condition G X(t) = U(t).
    static DelayMeasure no_delay_measure(double r, int u_dim = 1, double weight = 1.0);
};

/// Left shift semigroup, exact on the grid:
/// (S(t)g)(theta) = g(t+theta) for theta < -t and 0 for -t <= theta <= 0.
/// t must be a multiple of r/m.
HistorySegment shift_apply(const HistorySegment& g, double t);

/// Lg = sum_k weight_k g(theta_k) + trapezoid quadrature of density * g.
/// Atoms snap to the nearest grid node.
Vec delay_functional(const DelayMeasure& nu, const HistorySegment& g);

/// Control maps of the shift semigroup:
/// (Phi_t u)(theta) = u(t+theta) on [-min(t,r),0], zero before.
HistorySegment phi_shift(double t, const Signal& u, double r, int m);

/// Grid samples of theta -> e^{lambda*theta} v.
HistorySegment e_lambda(double lambda, const Vec& v, double r, int m);

/// Verifies the history flow property: the segment built directly at t+s
/// equals the segment propagated from t and updated with u on (t, t+s].
bool history_cocycle_check(const Signal& u, double t, double s, double r, int m);

/// Number of grid steps in t; throws OffGridTime unless t is a (nonnegative)
/// multiple of the step.
int grid_steps(double t, double step);

/// History U_{t_k} built from the concatenated record (initial history phi,
/// control U): node theta_j takes U(t_k + theta_j) for t_k + theta_j > 0 and
/// phi(t_k + theta_j) otherwise.
HistorySegment history_at(const HistorySegment& phi, const Signal& u, int k);

} // namespace delaylift
