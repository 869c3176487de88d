#include "gs/cavity.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace gs {

namespace {

GaussHermiteRule compute_gauss_hermite(int order) {
    // Golub-Welsch on the Jacobi matrix of the probabilists' Hermite
    // polynomials: zero diagonal, off-diagonal sqrt(k). Weights are the
    // squared first components of the eigenvectors (total mass 1).
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        const double b = std::sqrt(double(k));
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    GaussHermiteRule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    for (int i = 0; i < order; ++i) {
        rule.nodes[i] = solver.eigenvalues()(i);
        const double v0 = solver.eigenvectors()(0, i);
        rule.weights[i] = v0 * v0;
    }
    return rule;
}

}  // namespace

const GaussHermiteRule& gauss_hermite(int order) {
    if (order < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");
    static std::map<int, GaussHermiteRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_hermite(order)).first;
    return it->second;
}

std::vector<double> local_weights(const ModelParams& params, const RSOrderParams& rs,
                                  double eta) {
    if (rs.q < 0.0) throw std::invalid_argument("local_weights: q must be >= 0");
    const int S = params.S;
    const double field = params.beta * eta * std::sqrt(rs.q);
    const double quad = 0.5 * params.beta * params.beta * (rs.p - rs.q) + params.D;
    std::vector<double> log_w(2 * S + 1);
    double max_log = -1e300;
    for (int s = -S; s <= S; ++s) {
        const double lw = field * s + quad * double(s) * double(s) + params.h * s;
        log_w[s + S] = lw;
        max_log = std::max(max_log, lw);
    }
    double z = 0.0;
    for (auto& lw : log_w) {
        lw = std::exp(lw - max_log);
        z += lw;
    }
    for (auto& w : log_w) w /= z;
    return log_w;
}

CavityMoments local_moments(const ModelParams& params, const RSOrderParams& rs, double eta) {
    const auto w = local_weights(params, rs, eta);
    const int S = params.S;
    CavityMoments m;
    for (int s = -S; s <= S; ++s) {
        const double p = w[s + S];
        const double s1 = s, s2 = s1 * s1;
        m.m1 += p * s1;
        m.m2 += p * s2;
        m.m3 += p * s2 * s1;
        m.m4 += p * s2 * s2;
    }
    return m;
}

CavityMomentTable build_moment_table(const ModelParams& params, const RSOrderParams& rs,
                                     int order) {
    const auto& rule = gauss_hermite(order);
    CavityMomentTable table;
    table.nodes.resize(order);
    for (int i = 0; i < order; ++i) {
        table.nodes[i].eta = rule.nodes[i];
        table.nodes[i].weight = rule.weights[i];
        table.nodes[i].m = local_moments(params, rs, rule.nodes[i]);
    }
    return table;
}

double cavity_expectation(const CavityMomentTable& table,
                          const std::function<double(const CavityMoments&)>& poly) {
    double acc = 0.0;
    for (const auto& node : table.nodes) acc += node.weight * poly(node.m);
    return acc;
}

const CavityMomentTable& CavityEngine::table() const {
    if (!cached_) {
        cache_ = build_moment_table(params, rs, order);
        cached_ = true;
    }
    return cache_;
}

bool CavityEngine::converged(const std::function<double(const CavityMoments&)>& poly,
                             double tol) const {
    const double coarse = cavity_expectation(table(), poly);
    const double fine = cavity_expectation(build_moment_table(params, rs, 2 * order), poly);
    return std::abs(coarse - fine) <= tol;
}

namespace {

// One self-consistency update: (q, p) -> (E[m1^2], E[m2]).
RSOrderParams fixed_point_map(const ModelParams& params, const RSOrderParams& rs, int order) {
    const auto table = build_moment_table(params, rs, order);
    RSOrderParams next;
    next.q = cavity_expectation(table, [](const CavityMoments& m) { return m.m1 * m.m1; });
    next.p = cavity_expectation(table, [](const CavityMoments& m) { return m.m2; });
    return next;
}

FixedPointResult iterate_from(const ModelParams& params, RSOrderParams rs,
                              const FixedPointOptions& options) {
    FixedPointResult result;
    const double keep = options.damping;
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        const RSOrderParams next = fixed_point_map(params, rs, options.quadrature_order);
        result.residual = std::max(std::abs(next.q - rs.q), std::abs(next.p - rs.p));
        rs.q = std::max(0.0, keep * rs.q + (1.0 - keep) * next.q);
        rs.p = keep * rs.p + (1.0 - keep) * next.p;
        result.iterations = iter + 1;
        if (result.residual <= options.tol) {
            result.converged = true;
            break;
        }
    }
    // Polish: one undamped evaluation pins the residual at the reported point.
    const RSOrderParams mapped = fixed_point_map(params, rs, options.quadrature_order);
    result.residual = std::max(std::abs(mapped.q - rs.q), std::abs(mapped.p - rs.p));
    result.rs = rs;
    return result;
}

}  // namespace

FixedPointResult solve_fixed_point(const ModelParams& params, const FixedPointOptions& options) {
    params.validate();
    const double s2 = double(params.S) * double(params.S);

    RSOrderParams start{0.0, 0.5 * s2};
    FixedPointResult result = iterate_from(params, start, options);

    // h = 0 forces q = 0 by spin-flip symmetry of the local measure; the
    // iteration preserves q = 0 exactly from the symmetric start, so just pin
    // out any quadrature dust.
    if (params.h == 0.0 && std::abs(result.rs.q) < 1e-13) result.rs.q = 0.0;

    if (options.probe_second_start) {
        RSOrderParams other{0.9 * s2, 0.95 * s2};
        const FixedPointResult probe = iterate_from(params, other, options);
        if (probe.converged && result.converged &&
            (std::abs(probe.rs.q - result.rs.q) > 1e-8 ||
             std::abs(probe.rs.p - result.rs.p) > 1e-8)) {
            result.multiple_roots = true;
        }
    }
    return result;
}

}  // namespace gs
