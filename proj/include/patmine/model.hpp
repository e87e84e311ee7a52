#ifndef PATMINE_MODEL_HPP
#define PATMINE_MODEL_HPP

#include <cstdint>
#include <vector>

namespace patmine {

// Cost-decay model dC/dm = -B * C^(d+1) with C(0) = 1.
struct CostModelParams {
    double d = 1.0; // interaction parameter, >= 1
    double b = 1.0; // rate constant, > 0
};

// Closed form C(m) = (1 + d*B*m)^(-1/d).
double analytic_cost(double m, const CostModelParams& params);

struct CostTrajectory {
    std::vector<double> m;
    std::vector<double> c;
};

// Fourth-order Runge-Kutta integration from C(0) = 1; one sample per step.
CostTrajectory integrate_cost_ode(const CostModelParams& params, double m_max,
                                  double step);

struct CostDistribution {
    double lo = 0.0;
    double hi = 1.0;
};

struct DesignSearchParams {
    int n_components = 50;
    int d = 1;        // components redrawn per attempt (the changed one plus
                      // d-1 fixed dependents on a ring)
    long attempts = 100000;
    CostDistribution dist{};
};

// Stochastic design search: per attempt one component is picked uniformly,
// the costs of that component and its d-1 ring dependents are redrawn
// independently, and the redraw is accepted iff total cost strictly
// decreases. Records total cost (normalized to the initial total) after
// every attempt.
CostTrajectory simulate_design_search(const DesignSearchParams& params,
                                      std::uint64_t seed);

struct EnsembleResult {
    std::vector<double> m;      // log-spaced attempt indices (1-based)
    std::vector<double> mean_c; // ensemble mean of normalized cost
    int n_seeds = 0;
    std::uint64_t master_seed = 0;
};

// Mean trajectory over n_seeds independent replicas whose seeds derive
// deterministically from master_seed. Replicas run in parallel (OpenMP)
// when requested; each writes its own slot and the reduction is a fixed
// serial pass, so the result is bit-identical to the serial path.
EnsembleResult ensemble_mean(const DesignSearchParams& params, std::uint64_t master_seed,
                             int n_seeds, int n_samples = 512, bool parallel = true);

// OLS slope of ln(mean C) vs ln(m) over the trajectory tail
// (m > tail_from_fraction * m_max); compared against the -1/d asymptote.
double tail_log_slope(const EnsembleResult& ens, double tail_from_fraction = 0.1);

// Eq-2-style rate prediction A * K / d; only cross-domain ratios are
// meaningful since A and K are opaque constants.
double predict_rate(double d_or_kw, double a = 1.0, double k_ioi = 1.0);

} // namespace patmine

#endif
