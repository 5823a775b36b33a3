#include "delaylift/delay_line.hpp"

#include <algorithm>
#include <cmath>

namespace delaylift {

void HistorySegment::validate() const {
    if (r <= 0.0) throw BadSpec("history segment requires r > 0");
    if (m < 1) throw BadSpec("history segment requires m >= 1");
    if (values.cols() != m + 1) throw BadSpec("history segment needs m+1 samples");
}

double segment_l2_norm(const HistorySegment& g) {
    double acc = 0.0;
    for (int j = 0; j <= g.m; ++j) {
        double w = (j == 0 || j == g.m) ? 0.5 : 1.0;
        acc += w * g.dtheta() * g.values.col(j).squaredNorm();
    }
    return std::sqrt(acc);
}

double DelayDensity::eval(double theta) const {
    switch (kind) {
        case Kind::Const:
            return scale;
        case Kind::Exp:
            return scale * std::exp(rate * theta);
        case Kind::Table: {
            if (table_theta.empty()) return 0.0;
            if (theta <= table_theta.front()) return table_value.front();
            if (theta >= table_theta.back()) return table_value.back();
            auto it = std::upper_bound(table_theta.begin(), table_theta.end(), theta);
            std::size_t i = static_cast<std::size_t>(it - table_theta.begin());
            double t0 = table_theta[i - 1], t1 = table_theta[i];
            double s = (theta - t0) / (t1 - t0);
            return (1.0 - s) * table_value[i - 1] + s * table_value[i];
        }
    }
    return 0.0;
}

void DelayMeasure::validate() const {
    if (r <= 0.0) throw BadSpec("delay measure requires r > 0");
    if (u_dim < 1) throw BadSpec("delay measure requires u_dim >= 1");
    for (const auto& a : atoms) {
        if (a.theta < -r - 1e-12 || a.theta > 1e-12)
            throw BadSpec("delay atom outside [-r,0]");
        if (a.weight.rows() != u_dim || a.weight.cols() != u_dim)
            throw BadSpec("delay atom weight dimension mismatch");
        if (std::abs(a.theta) < 1e-12 && !no_delay)
            throw BadSpec("atom at theta=0 requires the no-delay flag");
    }
}

double DelayMeasure::total_variation(int quad_cells) const {
    double tv = 0.0;
    for (const auto& a : atoms) tv += a.weight.jacobiSvd().singularValues()(0);
    if (density) {
        double h = r / quad_cells;
        for (int j = 0; j <= quad_cells; ++j) {
            double w = (j == 0 || j == quad_cells) ? 0.5 : 1.0;
            tv += w * h * std::abs(density->eval(-r + j * h)) * std::sqrt(static_cast<double>(u_dim));
        }
    }
    return tv;
}

DelayMeasure DelayMeasure::single_atom(double r, double theta, int u_dim, double weight) {
    DelayMeasure nu;
    nu.r = r;
    nu.u_dim = u_dim;
    nu.no_delay = std::abs(theta) < 1e-12;
    nu.atoms.push_back({theta, weight * Mat::Identity(u_dim, u_dim)});
    nu.validate();
    return nu;
}

DelayMeasure DelayMeasure::no_delay_measure(double r, int u_dim, double weight) {
    return single_atom(r, 0.0, u_dim, weight);
}

int grid_steps(double t, double step) {
    if (t < -1e-12) throw OffGridTime("negative time " + std::to_string(t));
    double q = t / step;
    int k = static_cast<int>(std::llround(q));
    if (std::abs(q - k) > 1e-9 * std::max(1.0, std::abs(q)))
        throw OffGridTime("t=" + std::to_string(t) + " is not a multiple of step " +
                          std::to_string(step));
    return k;
}

HistorySegment shift_apply(const HistorySegment& g, double t) {
    g.validate();
    int k = grid_steps(t, g.dtheta());
    if (k == 0) return g;
    HistorySegment out = HistorySegment::zero(g.u_dim(), g.r, g.m);
    for (int j = 0; j + k < g.m; ++j) out.values.col(j) = g.values.col(j + k);
    return out;
}

Vec delay_functional(const DelayMeasure& nu, const HistorySegment& g) {
    nu.validate();
    g.validate();
    if (nu.u_dim != g.u_dim()) throw GridMismatch("measure/segment boundary dimension");
    if (std::abs(nu.r - g.r) > 1e-12) throw GridMismatch("measure/segment horizon");
    const double dth = g.dtheta();
    Vec out = Vec::Zero(g.u_dim());
    for (const auto& a : nu.atoms) {
        int j = static_cast<int>(std::llround((a.theta + g.r) / dth));
        j = std::clamp(j, 0, g.m);
        double snap = std::abs(a.theta - g.theta(j));
        if (snap > dth / 2 + 1e-12) throw GridMismatch("atom snap distance exceeds half a cell");
        out += a.weight * g.values.col(j);
    }
    if (nu.density) {
        for (int j = 0; j <= g.m; ++j) {
            double w = (j == 0 || j == g.m) ? 0.5 : 1.0;
            out += (w * dth * nu.density->eval(g.theta(j))) * g.values.col(j);
        }
    }
    return out;
}

HistorySegment phi_shift(double t, const Signal& u, double r, int m) {
    const double dth = r / m;
    int k = grid_steps(t, dth);
    if (std::abs(u.dt - dth) > 1e-12 * dth) throw GridMismatch("control signal step != r/m");
    if (u.n_steps() < k) throw GridMismatch("control signal shorter than [0,t]");
    HistorySegment out = HistorySegment::zero(u.dim(), r, m);
    for (int j = m; j >= 0; --j) {
        int q = k + j - m;  // time index of t + theta_j
        if (q < 0) break;
        out.values.col(j) = u.samples.col(q);
    }
    return out;
}

HistorySegment e_lambda(double lambda, const Vec& v, double r, int m) {
    HistorySegment out = HistorySegment::zero(static_cast<int>(v.size()), r, m);
    for (int j = 0; j <= m; ++j) out.values.col(j) = std::exp(lambda * out.theta(j)) * v;
    return out;
}

bool history_cocycle_check(const Signal& u, double t, double s, double r, int m) {
    const double dth = r / m;
    int kt = grid_steps(t, dth);
    int ks = grid_steps(s, dth);
    if (u.n_steps() < kt + ks) throw GridMismatch("signal shorter than [0,t+s]");

    HistorySegment direct = phi_shift(t + s, u, r, m);

    HistorySegment prop = phi_shift(t, u, r, m);
    for (int i = 1; i <= ks; ++i) {
        prop = shift_apply(prop, dth);
        prop.values.col(m) = u.samples.col(kt + i);
    }
    return (direct.values.array() == prop.values.array()).all();
}

HistorySegment history_at(const HistorySegment& phi, const Signal& u, int k) {
    phi.validate();
    const int m = phi.m;
    if (std::abs(u.dt - phi.dtheta()) > 1e-12 * phi.dtheta())
        throw GridMismatch("control signal step != r/m");
    HistorySegment out = HistorySegment::zero(phi.u_dim(), phi.r, m);
    for (int j = 0; j <= m; ++j) {
        int q = k + j - m;
        if (q > 0) {
            if (q > u.n_steps()) throw GridMismatch("control record shorter than needed");
            out.values.col(j) = u.samples.col(q);
        } else {
            out.values.col(j) = phi.values.col(m + q);
        }
    }
    return out;
}

} // namespace delaylift
