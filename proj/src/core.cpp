#include "ctr/core.hpp"

namespace ctr {

namespace {
void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}
}  // namespace

void validate(const RatePair& r) {
    require(std::isfinite(r.r1) && std::isfinite(r.r2), "rate pair must be finite");
    require(r.r1 >= 0.0 && r.r2 >= 0.0, "rate pair must be non-negative");
}

void validate(const CompletionTimePair& d) {
    require(std::isfinite(d.d1) && std::isfinite(d.d2), "completion-time pair must be finite");
    require(d.d1 > 0.0 && d.d2 > 0.0, "completion-time pair must be strictly positive");
}

void validate(const LoadSpec& load) {
    require(std::isfinite(load.tau1) && std::isfinite(load.tau2), "load must be finite");
    require(load.tau1 > 0.0 && load.tau2 > 0.0, "load must be strictly positive");
}

void validate(const SoloCaps& caps) {
    require(std::isfinite(caps.cap1) && std::isfinite(caps.cap2), "solo caps must be finite");
    require(caps.cap1 > 0.0 && caps.cap2 > 0.0, "solo caps must be strictly positive");
}

void validate(const NumericPolicy& policy) {
    require(policy.eps_member > 0.0 && policy.eps_root > 0.0, "tolerances must be positive");
    require(policy.eps_root < policy.eps_member, "eps_root must be below eps_member");
    require(policy.grid_n > 0, "grid resolution must be positive");
}

double snr_to_rate(double x) {
    if (!std::isfinite(x) || x < 0.0) throw std::domain_error("snr_to_rate: x must be finite and >= 0");
    return 0.5 * std::log2(1.0 + x);
}

double rate_to_snr(double r) {
    if (!std::isfinite(r) || r < 0.0) throw std::domain_error("rate_to_snr: r must be finite and >= 0");
    return std::exp2(2.0 * r) - 1.0;
}

}  // namespace ctr
