#include "gs/model.hpp"

#include <cmath>

namespace gs {

double hamiltonian(const SpinConfiguration& config, const DisorderSample& disorder,
                   const ModelParams& params) {
    const std::size_t n = config.size();
    if (n != disorder.size())
        throw std::invalid_argument("hamiltonian: config/disorder dimension mismatch");
    double coupling_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (config[i] == 0) continue;
        const double* gi = disorder.row(i);
        double acc = 0.0;
        for (std::size_t j = i + 1; j < n; ++j) acc += gi[j] * config[j];
        coupling_sum += acc * config[i];
    }
    std::int64_t sum_sq = 0, sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t s = config[i];
        sum += s;
        sum_sq += s * s;
    }
    return params.beta / std::sqrt(double(n)) * coupling_sum + params.D * double(sum_sq) +
           params.h * double(sum);
}

double overlap(const SpinConfiguration& a, const SpinConfiguration& b) {
    const std::size_t n = a.size();
    if (n != b.size()) throw std::invalid_argument("overlap: dimension mismatch");
    if (n == 0) throw std::invalid_argument("overlap: empty configuration");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += std::int64_t(a[i]) * std::int64_t(b[i]);
    return double(acc) / double(n);
}

double local_field(const SpinConfiguration& config, const DisorderSample& disorder,
                   const ModelParams& params, std::size_t site) {
    const std::size_t n = config.size();
    if (n != disorder.size())
        throw std::invalid_argument("local_field: config/disorder dimension mismatch");
    if (site >= n) throw std::out_of_range("local_field: site index out of range");
    const double* g = disorder.row(site);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += g[j] * config[j];  // g[site] == 0
    return params.beta / std::sqrt(double(n)) * acc;
}

}  // namespace gs
