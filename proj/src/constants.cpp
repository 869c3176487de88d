#include "gs/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace gs {

bool IdentityCheck::passed() const { return std::abs(lhs - rhs) <= tol; }

SpinConstants compute_spin_constants(const ModelParams& params, const RSOrderParams& rs,
                                     int quadrature_order) {
    const auto table = build_moment_table(params, rs, quadrature_order);
    auto E_of = [&table](double (*poly)(const CavityMoments&)) {
        double acc = 0.0;
        for (const auto& node : table.nodes) acc += node.weight * poly(node.m);
        return acc;
    };

    const double q = rs.q, p = rs.p;
    SpinConstants c;
    c.beta = params.beta;
    c.rs = rs;

    // First table: centered last-spin covariances.
    c.A = E_of([](const CavityMoments& m) {
        const double v = m.m2 - m.m1 * m.m1;
        return v * v;
    });
    c.D_c = E_of([](const CavityMoments& m) { return m.m4 - m.m2 * m.m2; });
    c.F = E_of([](const CavityMoments& m) { return m.m2 * m.m2 - m.m1 * m.m1 * m.m2; });
    c.G = E_of([](const CavityMoments& m) {
        const double m1sq = m.m1 * m.m1;
        return m1sq * m.m2 - m1sq * m1sq;
    });
    c.E = E_of([](const CavityMoments& m) { return m.m3 * m.m1 - m.m2 * m.m1 * m.m1; });
    c.H_c = E_of([](const CavityMoments& m) { return (m.m3 - m.m2 * m.m1) * m.m1; });

    // Second table: constants centered at the concentration points.
    c.I1 = E_of([](const CavityMoments& m) { return m.m2 * m.m2; }) - q * q;
    c.I2 = E_of([](const CavityMoments& m) { return m.m1 * m.m1 * m.m2; }) - q * q;
    c.I3 = E_of([](const CavityMoments& m) {
               const double m1sq = m.m1 * m.m1;
               return m1sq * m1sq;
           }) -
           q * q;
    c.I4 = E_of([](const CavityMoments& m) { return m.m3 * m.m1; }) - p * q;
    c.I5 = E_of([](const CavityMoments& m) { return m.m2 * m.m1 * m.m1; }) - p * q;
    c.K1 = E_of([](const CavityMoments& m) { return m.m1 * m.m3; }) - p * q;
    c.K2 = E_of([](const CavityMoments& m) { return m.m4; }) - p * p;
    c.K3 = E_of([](const CavityMoments& m) { return m.m1 * m.m1 * m.m2; }) - p * q;
    c.K4 = E_of([](const CavityMoments& m) { return m.m2 * m.m2; }) - p * p;

    const double b2 = params.beta * params.beta;
    c.M1 = 1.0 - b2 * (c.F - 3.0 * c.G);
    c.M2 = 1.0 - 0.5 * b2 * c.D_c;
    c.M3 = 1.0 - b2 * (c.F - c.G);
    c.M = c.M1 * c.M2 + b2 * b2 * c.E * c.E;

    for (const auto& check : constants_identity_suite(c)) {
        if (!check.passed())
            throw std::runtime_error("compute_spin_constants: identity violated: " + check.name);
    }
    return c;
}

std::vector<IdentityCheck> constants_identity_suite(const SpinConstants& c) {
    const double b2 = c.beta * c.beta;
    std::vector<IdentityCheck> suite{
        {"E = H", c.E, c.H_c},
        {"A = F - G", c.A, c.F - c.G},
        {"I1 - I2 = F", c.I1 - c.I2, c.F},
        {"I2 - I3 = G", c.I2 - c.I3, c.G},
        {"I4 - I5 = E", c.I4 - c.I5, c.E},
        {"K1 = I4", c.K1, c.I4},
        {"K3 = I5", c.K3, c.I5},
        {"K2 - K4 = D", c.K2 - c.K4, c.D_c},
        {"M1 = 1 - beta^2 (F - 3G)", c.M1, 1.0 - b2 * (c.F - 3.0 * c.G)},
        {"M2 = 1 - beta^2/2 D", c.M2, 1.0 - 0.5 * b2 * c.D_c},
        {"M3 = 1 - beta^2 (F - G)", c.M3, 1.0 - b2 * (c.F - c.G)},
        {"M = M1 M2 + beta^4 E^2", c.M, c.M1 * c.M2 + b2 * b2 * c.E * c.E},
    };
    return suite;
}

// Certified-regime sign constraints (F-G, F-3G, D in (0, 4S^4], M's positive).
// Kept out of the throwing suite: at h = 0 the strict bounds relax to >= 0.
namespace {
bool in_certified_range(double v, double s4, bool allow_zero) {
    const double low = allow_zero ? -1e-11 : 0.0;
    return v > low && v <= 4.0 * s4 + 1e-11;
}
}  // namespace

CovarianceModel predict_covariance(const SpinConstants& c, long N) {
    if (N <= 0) throw std::invalid_argument("predict_covariance: N must be positive");
    if (c.M1 <= 0 || c.M2 <= 0 || c.M3 <= 0 || c.M <= 0)
        throw std::runtime_error(
            "predict_covariance: outside certified regime (some of M1, M2, M3, M <= 0)");

    const double b2 = c.beta * c.beta;
    const double n = double(N);
    CovarianceModel cm;
    cm.N = N;

    cm.A2sq = c.A / (n * (1.0 - b2 * c.A));
    cm.A1sq = (c.G * c.M2 + 0.5 * b2 * c.E * c.E) / (c.M * n * c.M3);
    cm.B1sq = (c.D_c * c.M1 - 2.0 * b2 * c.E * c.E) / (n * c.M);
    cm.C1sq = c.E / (n * c.M);

    // Variances of the shared components, from the two-index recursion solved
    // in closed form. The common bracket (X + beta^2 E Y) recurs with
    // (X, Y) = (M2 I3, K3), (M2 I5, K4), (M1 K4, -I5).
    const double t_a2 = c.M2 * c.I3 + b2 * c.E * c.K3;
    const double t_c1 = c.M2 * c.I5 + b2 * c.E * c.K4;
    const double t_b1 = c.M1 * c.K4 - b2 * c.E * c.I5;
    cm.A0sq = (b2 / c.M) * (t_c1 * cm.C1sq + 2.0 * (b2 * c.E * (c.E - c.K3) + c.M2 * (2.0 * c.G - c.I3)) * cm.A1sq + t_a2 * cm.A2sq) +
              t_a2 / (c.M * n);
    cm.B0sq = (b2 / c.M) * (0.5 * t_b1 * cm.B1sq + (c.M1 * (c.E - c.K3) - b2 * c.E * (2.0 * c.G - c.I3)) * cm.C1sq) +
              t_b1 / (c.M * n);
    cm.C0sq = (b2 / c.M) * (0.5 * t_c1 * cm.B1sq + (c.M2 * (2.0 * c.G - c.I3) + b2 * c.E * (c.E - c.K3)) * cm.C1sq) +
              t_c1 / (c.M * n);
    return cm;
}

double eta_covariance(const CovarianceModel& cm, const ReplicaPair& a, const ReplicaPair& b) {
    auto contains = [](const ReplicaPair& pr, int r) { return pr.k == r || pr.l == r; };
    int shared = 0;
    if (contains(b, a.k)) ++shared;
    if (a.l != a.k && contains(b, a.l)) ++shared;

    if (!a.diagonal() && !b.diagonal()) {
        double cov = shared * cm.A1sq + cm.A0sq;
        if (a == b) cov += cm.A2sq;
        return cov;
    }
    if (a.diagonal() && b.diagonal()) {
        return (a.k == b.k ? cm.B1sq : 0.0) + cm.B0sq;
    }
    return (shared == 1 ? cm.C1sq : 0.0) + cm.C0sq;
}

}  // namespace gs
