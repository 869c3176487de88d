#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gs/rng.hpp"

// Ghatak-Sherrington model: spins in {0, +-1, ..., +-S} on N sites with
// Hamiltonian
//   H(sigma) = (beta/sqrt(N)) sum_{i<j} g_ij sigma_i sigma_j
//            + D sum_i sigma_i^2 + h sum_i sigma_i,
// Gibbs weight exp(H), couplings g_ij iid standard normal.

namespace gs {

struct ModelParams {
    double beta = 0.0;  // inverse temperature (multiplies the couplings only)
    double h = 0.0;     // external field
    double D = 0.0;     // crystal field
    int S = 1;          // largest spin magnitude

    // High-temperature certification: all Gaussian-fluctuation predictions are
    // guaranteed only for beta < 1/(2 S^2).
    bool high_temperature_certified() const {
        return beta < 1.0 / (2.0 * double(S) * double(S));
    }
    double certified_beta_bound() const { return 1.0 / (2.0 * double(S) * double(S)); }

    // h < 0 is accepted by every routine but is outside the model's stated
    // hypothesis; callers that produce reports should surface this flag.
    bool h_within_hypothesis() const { return h >= 0.0; }

    void validate(bool verification_mode = true) const {
        if (beta < 0.0) throw std::invalid_argument("ModelParams: beta must be >= 0");
        if (S < 1) throw std::invalid_argument("ModelParams: S must be >= 1");
        if (S > 127) throw std::invalid_argument("ModelParams: S must fit in int8");
        if (verification_mode && S > 10)
            throw std::invalid_argument("ModelParams: S > 10 rejected in verification mode");
    }
};

// One replica's spin configuration. int8 storage, S <= 127.
class SpinConfiguration {
  public:
    SpinConfiguration() = default;
    SpinConfiguration(std::size_t n, int fill = 0) : spins_(n, static_cast<std::int8_t>(fill)) {}
    explicit SpinConfiguration(std::vector<std::int8_t> spins) : spins_(std::move(spins)) {}

    std::size_t size() const { return spins_.size(); }
    int operator[](std::size_t i) const { return spins_[i]; }
    void set(std::size_t i, int value) { spins_[i] = static_cast<std::int8_t>(value); }
    const std::vector<std::int8_t>& raw() const { return spins_; }

    bool within_bound(int S) const {
        for (auto s : spins_)
            if (s < -S || s > S) return false;
        return true;
    }

  private:
    std::vector<std::int8_t> spins_;
};

// Quenched couplings for one disorder sample. The dense symmetric matrix is
// materialized for sweep speed, but every entry is a pure function of
// (seed, i, j), so instances can be regenerated or streamed entry by entry.
class DisorderSample {
  public:
    DisorderSample(std::size_t n, std::uint64_t seed) : n_(n), seed_(seed), g_(n * n, 0.0) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double g = coupling_from_seed(seed, i, j);
                g_[i * n + j] = g;
                g_[j * n + i] = g;
            }
    }

    static double coupling_from_seed(std::uint64_t seed, std::size_t i, std::size_t j) {
        if (i == j) return 0.0;
        if (i > j) std::swap(i, j);
        return counter_gaussian(seed, i, j);
    }

    std::size_t size() const { return n_; }
    std::uint64_t seed() const { return seed_; }
    double coupling(std::size_t i, std::size_t j) const { return g_[i * n_ + j]; }
    const double* row(std::size_t i) const { return g_.data() + i * n_; }

  private:
    std::size_t n_;
    std::uint64_t seed_;
    std::vector<double> g_;
};

// n independent replicas sharing one disorder sample.
struct ReplicaEnsemble {
    const DisorderSample* disorder = nullptr;
    std::vector<SpinConfiguration> replicas;

    std::size_t n_replicas() const { return replicas.size(); }
    std::size_t n_sites() const { return disorder ? disorder->size() : 0; }
};

double hamiltonian(const SpinConfiguration& config, const DisorderSample& disorder,
                   const ModelParams& params);

// (1/N) sum_i sigma^a_i sigma^b_i; a == b gives the self-overlap. Products are
// accumulated in 64-bit integers before the single division.
double overlap(const SpinConfiguration& a, const SpinConfiguration& b);

// Cavity field at `site`: (beta/sqrt(N)) sum_{j != site} g_{site,j} sigma_j.
double local_field(const SpinConfiguration& config, const DisorderSample& disorder,
                   const ModelParams& params, std::size_t site);

}  // namespace gs
