// Scalar rate math, base value types and the shared numeric-tolerance policy.
#ifndef CTR_CORE_HPP
#define CTR_CORE_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace ctr {

// Rate pair (r1, r2) in bits per channel use.
struct RatePair {
    double r1{0.0};
    double r2{0.0};
};

// Completion-time pair (d1, d2) in channel uses per source sample.
struct CompletionTimePair {
    double d1{0.0};
    double d2{0.0};
};

// Per-user load in bits per source sample.
struct LoadSpec {
    double tau1{1.0};
    double tau2{1.0};
};

// Maximum single-user rates when the channel serves one user alone.
struct SoloCaps {
    double cap1{0.0};
    double cap2{0.0};
};

struct NumericPolicy {
    double eps_member{1e-9};  // half-space slack for membership tests
    double eps_root{1e-12};   // bisection tolerance
    int grid_n{2000};         // oracle grid resolution
};

void validate(const RatePair& r);
void validate(const CompletionTimePair& d);
void validate(const LoadSpec& load);
void validate(const SoloCaps& caps);
void validate(const NumericPolicy& policy);

// Rate of a unit-noise Gaussian channel at signal-to-noise ratio x,
// in bits per channel use: 0.5*log2(1+x).
double snr_to_rate(double x);

// Inverse of snr_to_rate: 2^(2r) - 1.
double rate_to_snr(double r);

// Root of f(x) = target for f strictly increasing on [lo, hi].
// Requires f(lo) <= target <= f(hi); converges to |hi-lo| <= tol.
template <typename F>
double bisect_increasing(F&& f, double lo, double hi, double target, double tol) {
    if (!(lo <= hi)) throw std::invalid_argument("bisect_increasing: empty bracket");
    double flo = f(lo);
    double fhi = f(hi);
    if (target <= flo) return lo;
    if (target >= fhi) return hi;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // spacing limit
        if (f(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace ctr

#endif
