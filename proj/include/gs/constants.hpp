#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gs/cavity.hpp"

// Analytic constants of the overlap-fluctuation theory. Every entry reduces to
// a quadrature expectation of a polynomial in the local-measure moments
// m1..m4: replicas are conditionally independent given the cavity field, so a
// product of last spins across replicas factorizes into a product of moments
// at each quadrature node.
//
// The table constants D and H are stored as D_c and H_c; plain D is the
// crystal field and H elsewhere denotes a moment degree.

namespace gs {

struct SpinConstants {
    double A = 0, D_c = 0, E = 0, F = 0, G = 0, H_c = 0;
    double I1 = 0, I2 = 0, I3 = 0, I4 = 0, I5 = 0;
    double K1 = 0, K2 = 0, K3 = 0, K4 = 0;
    double M1 = 1, M2 = 1, M3 = 1, M = 1;
    double beta = 0;
    RSOrderParams rs;
};

struct IdentityCheck {
    std::string name;
    double lhs = 0, rhs = 0;
    double tol = 1e-11;
    bool passed() const;
};

SpinConstants compute_spin_constants(const ModelParams& params, const RSOrderParams& rs,
                                     int quadrature_order = 64);

// The cross-identities the constants must satisfy (E = H, A = F - G,
// I1 - I2 = F, ..., the M recombinations, and the certified-regime sign
// constraints). compute_spin_constants throws naming the first violated
// identity; this returns the whole suite for reporting.
std::vector<IdentityCheck> constants_identity_suite(const SpinConstants& c);

// Predicted Gaussian covariance parameters at system size N. All seven scale
// exactly as 1/N.
struct CovarianceModel {
    double A2sq = 0, A1sq = 0, A0sq = 0;
    double B1sq = 0, B0sq = 0;
    double C1sq = 0, C0sq = 0;
    long N = 0;
};

CovarianceModel predict_covariance(const SpinConstants& c, long N);

// Replica pair (k, l) with k <= l; k == l tags a self-overlap.
struct ReplicaPair {
    int k = 0, l = 0;
    ReplicaPair() = default;
    ReplicaPair(int k_, int l_) : k(k_), l(l_) {
        if (k < 1 || l < k) throw std::invalid_argument("ReplicaPair: need 1 <= k <= l");
    }
    bool diagonal() const { return k == l; }
    bool operator==(const ReplicaPair& o) const { return k == o.k && l == o.l; }
    bool operator<(const ReplicaPair& o) const {
        return k != o.k ? k < o.k : l < o.l;
    }
};

// Covariance of the limiting Gaussian family indexed by replica pairs:
//   off-diagonal x off-diagonal: A2^2 [pairs equal] + |intersection| A1^2 + A0^2
//   diagonal x diagonal:         B1^2 [k = k'] + B0^2
//   mixed:                       C1^2 [shared replica] + C0^2
double eta_covariance(const CovarianceModel& cm, const ReplicaPair& a, const ReplicaPair& b);

}  // namespace gs
