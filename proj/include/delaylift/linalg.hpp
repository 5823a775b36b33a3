#pragma once

#include <Eigen/Dense>
#include <complex>

namespace delaylift {

using Complex = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

/// Weighted inner product <x,y> = sum_i w_i conj(x_i) y_i.
inline Complex weighted_dot(const Vec& x, const Vec& y, const RVec& w) {
    return (x.conjugate().cwiseProduct(y).cwiseProduct(w.cast<Complex>())).sum();
}

/// Weighted norm ||x|| = sqrt(sum_i w_i |x_i|^2).
inline double weighted_norm(const Vec& x, const RVec& w) {
    return std::sqrt((x.cwiseAbs2().cwiseProduct(w)).sum());
}

/// Operator 2-norm of M : (C^n, w_dom) -> (C^m, w_cod), i.e. the largest
/// singular value of diag(sqrt(w_cod)) M diag(1/sqrt(w_dom)).
inline double weighted_operator_norm(const Mat& M, const RVec& w_dom, const RVec& w_cod) {
    Mat scaled = w_cod.cwiseSqrt().cast<Complex>().asDiagonal() * M *
                 w_dom.cwiseSqrt().cwiseInverse().cast<Complex>().asDiagonal();
    return scaled.jacobiSvd().singularValues()(0);
}

/// Smallest singular value (unweighted), used for spectrum-hit checks.
inline double smallest_singular_value(const Mat& M) {
    auto sv = M.jacobiSvd().singularValues();
    return sv(sv.size() - 1);
}

inline bool nearly_real(const Mat& M, double tol = 1e-14) {
    return M.imag().cwiseAbs().maxCoeff() <= tol * (1.0 + M.real().cwiseAbs().maxCoeff());
}

} // namespace delaylift
