#pragma once

#include <functional>
#include <vector>

#include "gs/model.hpp"

// t = 0 cavity description of the last spin. With the interpolation fully
// decoupled, the last spin of every replica is conditionally independent given
// a shared standard normal eta, with single-spin measure on {-S..S}
//   w(sigma) ~ exp(beta eta sqrt(q) sigma + (beta^2/2)(p-q) sigma^2
//              + D sigma^2 + h sigma).
// Expectations over eta are evaluated by probabilists' Gauss-Hermite
// quadrature; the replica-symmetric (p, q) is the self-consistent point
// q = E[m1^2], p = E[m2].

namespace gs {

struct RSOrderParams {
    double q = 0.0;  // overlap concentration point
    double p = 0.0;  // self-overlap concentration point

    bool plausible(int S) const {
        const double s2 = double(S) * double(S);
        return q >= -1e-12 && q <= p + 1e-12 && p <= s2 + 1e-12;
    }
};

// Probabilists' Gauss-Hermite rule: sum_i w_i f(x_i) ~ E[f(Z)], Z ~ N(0,1).
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussHermiteRule& gauss_hermite(int order);

// First four moments of the local measure at one value of the cavity field.
struct CavityMoments {
    double m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
};

struct CavityNode {
    double eta = 0.0;
    double weight = 0.0;
    CavityMoments m;
};

struct CavityMomentTable {
    std::vector<CavityNode> nodes;
    double weight_sum() const {
        double s = 0.0;
        for (const auto& n : nodes) s += n.weight;
        return s;
    }
};

// Normalized local measure over sigma in {-S..S} at cavity field eta.
// Exponents are shifted by their maximum before exponentiation, so entries are
// finite and strictly positive for any parameter values.
std::vector<double> local_weights(const ModelParams& params, const RSOrderParams& rs,
                                  double eta);

CavityMoments local_moments(const ModelParams& params, const RSOrderParams& rs, double eta);

CavityMomentTable build_moment_table(const ModelParams& params, const RSOrderParams& rs,
                                     int order);

// E_eta[poly(m1..m4)] via quadrature over the moment table.
double cavity_expectation(const CavityMomentTable& table,
                          const std::function<double(const CavityMoments&)>& poly);

struct CavityEngine {
    ModelParams params;
    RSOrderParams rs;
    int order = 64;

    double expect(const std::function<double(const CavityMoments&)>& poly) const {
        return cavity_expectation(table(), poly);
    }
    const CavityMomentTable& table() const;

    // Doubling the order must move the result by < tol, otherwise the
    // quadrature has not converged for this integrand.
    bool converged(const std::function<double(const CavityMoments&)>& poly,
                   double tol = 1e-9) const;

  private:
    mutable CavityMomentTable cache_;
    mutable bool cached_ = false;
};

struct FixedPointResult {
    RSOrderParams rs;
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
    // Set when a second starting point lands on a visibly different fixed
    // point; only expected outside the certified regime.
    bool multiple_roots = false;
};

struct FixedPointOptions {
    int quadrature_order = 64;
    double damping = 0.5;
    double tol = 1e-12;
    int max_iterations = 10000;
    bool probe_second_start = true;
};

FixedPointResult solve_fixed_point(const ModelParams& params,
                                   const FixedPointOptions& options = {});

}  // namespace gs
