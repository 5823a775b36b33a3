#pragma once

#include <stdexcept>
#include <string>

namespace delaylift {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// lambda is (numerically) in the spectrum of the generator.
class SpectrumHit : public Error {
public:
    SpectrumHit(double lambda, double smin, double threshold)
        : Error("SpectrumHit: lambda=" + std::to_string(lambda) +
                " smallest singular value " + std::to_string(smin) +
                " below threshold " + std::to_string(threshold)),
          lambda(lambda), smallest_singular_value(smin) {}
    double lambda;
    double smallest_singular_value;
};

class NegativeTime : public Error {
public:
    explicit NegativeTime(double t) : Error("NegativeTime: t=" + std::to_string(t)) {}
};

/// Signal/segment grids are incompatible (step, length or dimension).
class GridMismatch : public Error {
public:
    explicit GridMismatch(const std::string& msg) : Error("GridMismatch: " + msg) {}
};

/// Requested time is not a multiple of the locked step r/m.
class OffGridTime : public Error {
public:
    explicit OffGridTime(const std::string& msg) : Error("OffGridTime: " + msg) {}
};

/// The combined (lambda - A_m, G) system is rank deficient.
class SingularBoundarySystem : public Error {
public:
    explicit SingularBoundarySystem(const std::string& msg)
        : Error("SingularBoundarySystem: " + msg) {}
};

/// Picard iteration failed to contract.
class NoConvergence : public Error {
public:
    NoConvergence(int iterations, double last_diff, double ratio)
        : Error("NoConvergence: " + std::to_string(iterations) +
                " iterations, last diff " + std::to_string(last_diff) +
                ", contraction ratio " + std::to_string(ratio)),
          iterations(iterations), last_diff(last_diff), contraction_ratio(ratio) {}
    int iterations;
    double last_diff;
    double contraction_ratio;
};

/// Too many Divergent observation samples in a signal-valued result.
class DivergentSignal : public Error {
public:
    DivergentSignal(std::size_t gaps, std::size_t total)
        : Error("DivergentSignal: " + std::to_string(gaps) + " of " +
                std::to_string(total) + " samples diverged"),
          gaps(gaps), total(total) {}
    std::size_t gaps;
    std::size_t total;
};

class BadSpec : public Error {
public:
    explicit BadSpec(const std::string& msg) : Error("BadSpec: " + msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("ParseError: " + msg) {}
};

class ValidationError : public Error {
public:
    ValidationError(const std::string& key_path, const std::string& constraint)
        : Error("ValidationError: " + key_path + ": " + constraint),
          key_path(key_path) {}
    std::string key_path;
};

/// Every Monte Carlo output sample was a gap.
class DegenerateSample : public Error {
public:
    explicit DegenerateSample(const std::string& msg) : Error("DegenerateSample: " + msg) {}
};

} // namespace delaylift
