#include "patmine/model.hpp"

#include "patmine/errors.hpp"
#include "patmine/rng.hpp"
#include "patmine/stats.hpp"

#include <algorithm>
#include <cmath>

namespace patmine {

namespace {

void check_params(const CostModelParams& p) {
    if (!(p.d >= 1.0)) throw ValidationError("interaction parameter d must be >= 1");
    if (!(p.b > 0.0)) throw ValidationError("rate constant B must be positive");
}

// Per-replica sampled trajectory; sample_at holds 1-based attempt indices,
// strictly increasing.
std::vector<double> simulate_sampled(const DesignSearchParams& p, std::uint64_t seed,
                                     const std::vector<long>& sample_at) {
    Rng rng(seed);
    const int n = p.n_components;
    std::vector<double> cost(n);
    const double width = p.dist.hi - p.dist.lo;
    for (double& c : cost) c = p.dist.lo + width * rng.next_double();

    double total = 0.0;
    for (double c : cost) total += c;
    const double total0 = total;

    std::vector<double> out;
    out.reserve(sample_at.size());
    size_t next_sample = 0;
    std::vector<double> redraw(p.d);
    for (long m = 1; m <= p.attempts; ++m) {
        const int pick = static_cast<int>(rng.next_index(n));
        double old_sum = 0.0;
        double new_sum = 0.0;
        for (int k = 0; k < p.d; ++k) {
            old_sum += cost[(pick + k) % n];
            redraw[k] = p.dist.lo + width * rng.next_double();
            new_sum += redraw[k];
        }
        if (new_sum < old_sum) {
            for (int k = 0; k < p.d; ++k) cost[(pick + k) % n] = redraw[k];
            total += new_sum - old_sum;
        }
        while (next_sample < sample_at.size() && sample_at[next_sample] == m) {
            out.push_back(total / total0);
            ++next_sample;
        }
    }
    return out;
}

std::vector<long> log_spaced_samples(long attempts, int n_samples) {
    std::vector<long> pts;
    pts.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) {
        const double f = n_samples == 1 ? 1.0 : static_cast<double>(i) / (n_samples - 1);
        long v = static_cast<long>(std::llround(std::pow(static_cast<double>(attempts), f)));
        v = std::clamp(v, 1L, attempts);
        if (pts.empty() || v > pts.back()) pts.push_back(v);
    }
    return pts;
}

} // namespace

double analytic_cost(double m, const CostModelParams& params) {
    check_params(params);
    if (m < 0.0) throw ValidationError("attempts m must be >= 0");
    return std::pow(1.0 + params.d * params.b * m, -1.0 / params.d);
}

CostTrajectory integrate_cost_ode(const CostModelParams& params, double m_max,
                                  double step) {
    check_params(params);
    if (!(step > 0.0)) throw ValidationError("integration step must be positive");
    if (!(m_max > 0.0)) throw ValidationError("m_max must be positive");

    const auto f = [&](double c) { return -params.b * std::pow(c, params.d + 1.0); };

    CostTrajectory traj;
    const long n_steps = static_cast<long>(std::ceil(m_max / step - 1e-12));
    traj.m.reserve(n_steps + 1);
    traj.c.reserve(n_steps + 1);
    double m = 0.0;
    double c = 1.0;
    traj.m.push_back(m);
    traj.c.push_back(c);
    for (long i = 0; i < n_steps; ++i) {
        const double h = std::min(step, m_max - m);
        const double k1 = f(c);
        const double k2 = f(c + 0.5 * h * k1);
        const double k3 = f(c + 0.5 * h * k2);
        const double k4 = f(c + h * k3);
        c += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        m += h;
        traj.m.push_back(m);
        traj.c.push_back(c);
    }
    return traj;
}

CostTrajectory simulate_design_search(const DesignSearchParams& params,
                                      std::uint64_t seed) {
    if (params.d < 1 || params.d > params.n_components)
        throw ValidationError("d must be in [1, n_components]");
    if (params.attempts < 1) throw ValidationError("attempts must be >= 1");
    if (!(params.dist.hi > params.dist.lo) || params.dist.lo < 0.0)
        throw ValidationError("cost distribution needs 0 <= lo < hi");

    std::vector<long> every(params.attempts);
    for (long i = 0; i < params.attempts; ++i) every[i] = i + 1;
    CostTrajectory traj;
    traj.c = simulate_sampled(params, seed, every);
    traj.m.resize(every.size());
    for (size_t i = 0; i < every.size(); ++i) traj.m[i] = static_cast<double>(every[i]);
    return traj;
}

EnsembleResult ensemble_mean(const DesignSearchParams& params, std::uint64_t master_seed,
                             int n_seeds, int n_samples, bool parallel) {
    if (params.d < 1 || params.d > params.n_components)
        throw ValidationError("d must be in [1, n_components]");
    if (params.attempts < 1) throw ValidationError("attempts must be >= 1");
    if (n_seeds < 1) throw ValidationError("need at least one replica");

    const std::vector<long> sample_at = log_spaced_samples(params.attempts, n_samples);

    std::vector<std::vector<double>> replica(n_seeds);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int s = 0; s < n_seeds; ++s)
        replica[s] = simulate_sampled(params, derive_seed(master_seed, s), sample_at);

    EnsembleResult res;
    res.n_seeds = n_seeds;
    res.master_seed = master_seed;
    res.m.reserve(sample_at.size());
    for (long v : sample_at) res.m.push_back(static_cast<double>(v));
    // Fixed-order reduction keeps the result independent of the schedule.
    res.mean_c.assign(sample_at.size(), 0.0);
    for (int s = 0; s < n_seeds; ++s)
        for (size_t i = 0; i < sample_at.size(); ++i) res.mean_c[i] += replica[s][i];
    for (double& v : res.mean_c) v /= n_seeds;
    return res;
}

double tail_log_slope(const EnsembleResult& ens, double tail_from_fraction) {
    if (ens.m.empty()) throw ValidationError("empty ensemble trajectory");
    const double cutoff = tail_from_fraction * ens.m.back();
    std::vector<double> lx, ly;
    for (size_t i = 0; i < ens.m.size(); ++i) {
        if (ens.m[i] < cutoff) continue;
        lx.push_back(std::log(ens.m[i]));
        ly.push_back(std::log(ens.mean_c[i]));
    }
    if (lx.size() < 2) throw ValidationError("tail window holds fewer than 2 samples");
    return linear_trend(lx, ly).slope;
}

double predict_rate(double d_or_kw, double a, double k_ioi) {
    if (!(d_or_kw > 0.0))
        throw ValidationError("interaction proxy must be positive");
    return a * k_ioi / d_or_kw;
}

} // namespace patmine
