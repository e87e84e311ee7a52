#include "patmine/stats.hpp"

#include "patmine/errors.hpp"
#include "patmine/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace patmine {

namespace {

// Continued-fraction evaluation of the incomplete beta (Lentz's method).
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-16;
    constexpr double kTiny = 1e-300;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

double mean_of(std::span<const double> v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

} // namespace

double incomplete_beta(double a, double b, double x) {
    if (x < 0.0 || x > 1.0) throw ValidationError("incomplete_beta: x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log(1.0 - x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double student_t_tail_two_sided(double t, int df) {
    if (df < 1) throw ValidationError("t distribution needs df >= 1");
    const double x = df / (df + t * t);
    return incomplete_beta(df / 2.0, 0.5, x);
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw ValidationError("pearson: length mismatch");
    const size_t n = x.size();
    if (n < 3) throw ValidationError("pearson: need at least 3 points");

    const double mx = mean_of(x);
    const double my = mean_of(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw ValidationError("pearson: zero variance");
    double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

double p_value_two_tailed(double r, int n) {
    if (n < 3) throw ValidationError("p-value needs n >= 3");
    if (std::fabs(r) > 1.0) throw ValidationError("|r| > 1");
    if (std::fabs(r) == 1.0) return 0.0; // degenerate sentinel
    const int df = n - 2;
    const double t = r * std::sqrt(df / (1.0 - r * r));
    return student_t_tail_two_sided(t, df);
}

CorrelationResult correlate_records(std::span<const DomainRecord> records,
                                    const std::vector<std::string>& exclusions) {
    std::vector<double> x, y;
    for (const DomainRecord& rec : records) {
        if (std::find(exclusions.begin(), exclusions.end(), rec.domain_id) !=
            exclusions.end())
            continue;
        x.push_back(rec.inv_kw);
        y.push_back(rec.k_percent);
    }
    if (x.size() < 3) throw ValidationError("too few records for correlation");
    CorrelationResult res;
    res.n = static_cast<int>(x.size());
    res.r = pearson(x, y);
    res.p = p_value_two_tailed(res.r, res.n);
    return res;
}

RobustnessResult robustness(std::span<const DomainRecord> records, int group_size,
                            int n_groups, std::uint64_t seed, bool parallel) {
    const int n = static_cast<int>(records.size());
    if (group_size < 3 || group_size > n)
        throw ValidationError("bad group size");
    if (n_groups < 1) throw ValidationError("need at least one group");

    RobustnessResult res;
    res.group_size = group_size;
    res.n_groups = n_groups;
    res.seed = seed;

    // Groups are drawn sequentially from the seed before any correlation
    // runs, so the parallel loop below cannot affect them.
    Rng rng(seed);
    res.groups.reserve(n_groups);
    for (int g = 0; g < n_groups; ++g) {
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        for (int i = 0; i < group_size; ++i) {
            const auto j = i + static_cast<int>(rng.next_index(n - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(group_size);
        res.groups.push_back(std::move(idx));
    }

    res.group_r.assign(n_groups, 0.0);
#pragma omp parallel for schedule(static) if (parallel)
    for (int g = 0; g < n_groups; ++g) {
        std::vector<double> x, y;
        x.reserve(group_size);
        y.reserve(group_size);
        for (int i : res.groups[g]) {
            x.push_back(records[i].inv_kw);
            y.push_back(records[i].k_percent);
        }
        res.group_r[g] = pearson(x, y);
    }

    res.mean = mean_of(res.group_r);
    double ss = 0.0;
    for (double r : res.group_r) ss += (r - res.mean) * (r - res.mean);
    res.sd = n_groups > 1 ? std::sqrt(ss / (n_groups - 1)) : 0.0;
    res.min = *std::min_element(res.group_r.begin(), res.group_r.end());
    res.max = *std::max_element(res.group_r.begin(), res.group_r.end());
    return res;
}

LinearFit linear_trend(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw ValidationError("linear_trend: need >= 2 paired points");
    const double mx = mean_of(x);
    const double my = mean_of(y);
    double sxy = 0.0, sxx = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) throw ValidationError("linear_trend: zero variance in x");
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    return fit;
}

double fit_improvement_rate(const PerformanceSeries& series) {
    if (series.years.size() != series.performance.size() || series.years.size() < 3)
        throw ValidationError("improvement-rate fit needs >= 3 observations");
    for (size_t i = 1; i < series.years.size(); ++i)
        if (!(series.years[i] > series.years[i - 1]))
            throw ValidationError("years must be strictly increasing");
    std::vector<double> lnq;
    lnq.reserve(series.performance.size());
    for (double q : series.performance) {
        if (!(q > 0.0))
            throw ValidationError("non-positive performance value in series " +
                                  series.domain_id);
        lnq.push_back(std::log(q));
    }
    return linear_trend(series.years, lnq).slope;
}

} // namespace patmine
