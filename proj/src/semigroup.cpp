#include "delaylift/semigroup.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

namespace delaylift {

void Generator::validate() const {
    if (matrix.rows() != matrix.cols() || matrix.rows() == 0)
        throw BadSpec("generator matrix must be square and nonempty");
    if (weights.size() != matrix.rows())
        throw BadSpec("generator weights size mismatch");
    if ((weights.array() <= 0.0).any())
        throw BadSpec("generator weights must be strictly positive");
}

Generator make_generator(Mat matrix, RVec weights, std::string label) {
    Generator g{std::move(matrix), std::move(weights), std::move(label)};
    g.validate();
    return g;
}

namespace {

// Similarity transform into the weighted space: Atil = W^{1/2} A W^{-1/2}.
// A is normal w.r.t. the weighted inner product iff Atil is normal.
Mat weighted_similar(const Generator& g) {
    RVec s = g.weights.cwiseSqrt();
    return s.cast<Complex>().asDiagonal() * g.matrix * s.cwiseInverse().cast<Complex>().asDiagonal();
}

double spectrum_threshold(const Generator& g) {
    double anorm = weighted_operator_norm(g.matrix, g.weights, g.weights);
    return 1e-12 * std::max(1.0, anorm);
}

} // namespace

bool in_resolvent_set(const Generator& g, double lambda) {
    Mat shifted = lambda * Mat::Identity(g.dim(), g.dim()) - g.matrix;
    return smallest_singular_value(shifted) >= spectrum_threshold(g);
}

OperatorMatrix resolvent(const Generator& g, double lambda) {
    const int n = g.dim();
    Mat shifted = lambda * Mat::Identity(n, n) - g.matrix;
    double smin = smallest_singular_value(shifted);
    double thr = spectrum_threshold(g);
    if (smin < thr) throw SpectrumHit(lambda, smin, thr);
    Mat inv = shifted.partialPivLu().solve(Mat::Identity(n, n));
    return OperatorMatrix{std::move(inv), g.weights, g.weights};
}

Mat propagator(const Generator& g, double t) {
    if (t < 0.0) throw NegativeTime(t);
    const int n = g.dim();
    if (t == 0.0) return Mat::Identity(n, n);

    Mat atil = weighted_similar(g);
    Eigen::ComplexSchur<Mat> schur(atil);
    const Mat& T = schur.matrixT();
    const Mat& U = schur.matrixU();
    double offdiag = (T - Mat(T.diagonal().asDiagonal())).norm();
    Mat expm;
    if (offdiag <= 1e-12 * (1.0 + T.norm())) {
        // Normal matrix: exponentiate the (diagonal) Schur form.
        Vec d = (t * T.diagonal().array()).exp();
        expm = U * d.asDiagonal() * U.adjoint();
    } else {
        expm = Mat(t * atil).exp();  // scaling-and-squaring, Pade(13)
    }
    RVec s = g.weights.cwiseSqrt();
    return s.cwiseInverse().cast<Complex>().asDiagonal() * expm * s.cast<Complex>().asDiagonal();
}

Vec semigroup_apply(const Generator& g, double t, const Vec& x) {
    if (t < 0.0) throw NegativeTime(t);
    if (t == 0.0) return x;
    return propagator(g, t) * x;
}

double growth_bound(const Generator& g) {
    Eigen::ComplexEigenSolver<Mat> es(g.matrix, /*computeEigenvectors=*/false);
    return es.eigenvalues().real().maxCoeff();
}

double dual_norm(const Generator& g, double lambda, const Vec& x) {
    OperatorMatrix r = resolvent(g, lambda);
    return weighted_norm(r.entries * x, g.weights);
}

Mat phi1_integral(const Generator& g, double t) {
    if (t < 0.0) throw NegativeTime(t);
    const int n = g.dim();
    if (t == 0.0) return Mat::Zero(n, n);
    Mat block = Mat::Zero(2 * n, 2 * n);
    block.topLeftCorner(n, n) = g.matrix;
    block.topRightCorner(n, n) = Mat::Identity(n, n);
    Mat e = Mat(t * block).exp();
    return e.topRightCorner(n, n);
}

} // namespace delaylift
