#pragma once

#include <string>

#include "delaylift/errors.hpp"
#include "delaylift/linalg.hpp"

namespace delaylift {

/// Finite-dimensional generator together with the quadrature weights that
/// define the discrete inner product of its state space.
struct Generator {
    Mat matrix;      // dim x dim, units 1/time
    RVec weights;    // strictly positive quadrature weights
    std::string label;

    int dim() const { return static_cast<int>(matrix.rows()); }
    void validate() const;
};

Generator make_generator(Mat matrix, RVec weights, std::string label = "");

/// Bounded map between weighted spaces.
struct OperatorMatrix {
    Mat entries;
    RVec domain_weights;
    RVec codomain_weights;

    int rows() const { return static_cast<int>(entries.rows()); }
    int cols() const { return static_cast<int>(entries.cols()); }
    double operator_norm() const {
        return weighted_operator_norm(entries, domain_weights, codomain_weights);
    }
};

/// Relative spectrum-hit threshold: smallest singular value of (lambda I - A)
/// below 1e-12 * max(1, ||A||) rejects lambda.
bool in_resolvent_set(const Generator& g, double lambda);

/// (lambda I - A)^{-1}. Throws SpectrumHit when lambda is numerically in the
/// spectrum.
OperatorMatrix resolvent(const Generator& g, double lambda);

/// e^{tA} as a matrix. Eigendecomposition (Schur) fast path for matrices that
/// are normal in the weighted inner product; Pade-13 scaling-and-squaring
/// otherwise.
Mat propagator(const Generator& g, double t);

/// e^{tA} x. Returns x exactly for t = 0; throws NegativeTime for t < 0.
Vec semigroup_apply(const Generator& g, double t, const Vec& x);

/// Discrete proxy for the semigroup type omega_0(A): max real part of the
/// eigenvalues.
double growth_bound(const Generator& g);

/// ||R(lambda,A) x|| in the weighted norm; stand-in for the extrapolation
/// norm ||x||_{-1}.
double dual_norm(const Generator& g, double lambda, const Vec& x);

/// J(t) = integral_0^t e^{sA} ds, computed from the block exponential
/// exp(t [[A, I], [0, 0]]); well defined also when A is singular.
Mat phi1_integral(const Generator& g, double t);

} // namespace delaylift
