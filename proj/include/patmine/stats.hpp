#ifndef PATMINE_STATS_HPP
#define PATMINE_STATS_HPP

#include "patmine/textmine.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace patmine {

double pearson(std::span<const double> x, std::span<const double> y);

// Two-tailed p-value of a sample Pearson coefficient via the t-transform
// t = r*sqrt((n-2)/(1-r^2)) with n-2 degrees of freedom. |r| = 1 returns
// the p = 0 sentinel.
double p_value_two_tailed(double r, int n);

// Two-sided tail mass of Student's t with df degrees of freedom.
double student_t_tail_two_sided(double t, int df);

// Regularized incomplete beta function I_x(a, b).
double incomplete_beta(double a, double b, double x);

struct CorrelationResult {
    double r = 0.0;
    int n = 0;
    double p = 1.0;
};

CorrelationResult correlate_records(std::span<const DomainRecord> records,
                                    const std::vector<std::string>& exclusions = {});

struct RobustnessResult {
    int group_size = 0;
    int n_groups = 0;
    std::uint64_t seed = 0;
    std::vector<std::vector<int>> groups; // record indices per group
    std::vector<double> group_r;
    double mean = 0.0;
    double sd = 0.0;
    double min = 0.0;
    double max = 0.0;
};

// Each group is a uniform random subset drawn without replacement within
// the group; groups are drawn independently of each other. Subsets are
// pre-generated from the seed, so per-group correlations may run in
// parallel with schedule-independent results.
RobustnessResult robustness(std::span<const DomainRecord> records, int group_size,
                            int n_groups, std::uint64_t seed, bool parallel = true);

struct PerformanceSeries {
    std::string domain_id;
    std::vector<double> years;       // strictly increasing
    std::vector<double> performance; // > 0
};

// OLS slope of ln(performance) on year: the annual improvement rate as a
// fraction per year.
double fit_improvement_rate(const PerformanceSeries& series);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
};

LinearFit linear_trend(std::span<const double> x, std::span<const double> y);

} // namespace patmine

#endif
