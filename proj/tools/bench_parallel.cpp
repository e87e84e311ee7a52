// Benchmark comparing the OpenMP kernels against their serial reference
// paths: Monte Carlo cost-decay ensembles, per-patent keyword counting,
// and per-group robustness correlations. Also checks the outputs match
// bit for bit.

#include "patmine/corpus.hpp"
#include "patmine/keywords.hpp"
#include "patmine/model.hpp"
#include "patmine/rng.hpp"
#include "patmine/stats.hpp"
#include "patmine/textmine.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace patmine;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename F>
double timed(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return seconds_since(t0);
}

std::vector<CleanedText> synthetic_corpus(int n_patents, int n_tokens) {
    const std::vector<std::string> vocab = {
        "prevent",  "failure", "undesirable", "overcome", "capacitor", "electrode",
        "leakage",  "voltage", "requirement", "disadvantage", "circuit", "design",
        "component"};
    Rng rng(7);
    std::vector<CleanedText> corpus(n_patents);
    for (int i = 0; i < n_patents; ++i) {
        corpus[i].patent_id = "SYN" + std::to_string(i);
        corpus[i].tokens.reserve(n_tokens);
        for (int t = 0; t < n_tokens; ++t)
            corpus[i].tokens.push_back(vocab[rng.next_index(vocab.size())]);
        corpus[i].word_count = n_tokens;
    }
    return corpus;
}

} // namespace

int main() {
    // Monte Carlo ensemble
    DesignSearchParams sim;
    sim.n_components = 50;
    sim.d = 2;
    sim.attempts = 100000;
    EnsembleResult serial, parallel;
    const double t_serial =
        timed([&] { serial = ensemble_mean(sim, 42, 100, 512, false); });
    const double t_parallel =
        timed([&] { parallel = ensemble_mean(sim, 42, 100, 512, true); });
    const bool sim_match = serial.mean_c == parallel.mean_c;
    std::printf("ensemble_mean   serial %.3fs  openmp %.3fs  speedup %.2fx  match=%s\n",
                t_serial, t_parallel, t_serial / t_parallel, sim_match ? "yes" : "NO");

    // Keyword counting
    const Registry reg = default_registry();
    const std::vector<CleanedText> corpus = synthetic_corpus(2000, 5000);
    std::vector<PatentCounts> cs, cp;
    const double t_cs = timed([&] { cs = count_corpus(corpus, "bench", reg, false); });
    const double t_cp = timed([&] { cp = count_corpus(corpus, "bench", reg, true); });
    bool count_match = cs.size() == cp.size();
    for (size_t i = 0; count_match && i < cs.size(); ++i)
        count_match = cs[i].per_keyword == cp[i].per_keyword;
    std::printf("count_corpus    serial %.3fs  openmp %.3fs  speedup %.2fx  match=%s\n",
                t_cs, t_cp, t_cs / t_cp, count_match ? "yes" : "NO");

    // Robustness groups
    const std::vector<DomainRecord> records = bundled_records();
    RobustnessResult rs, rp;
    const double t_rs = timed([&] {
        for (int i = 0; i < 200; ++i) rs = robustness(records, 14, 200, 99, false);
    });
    const double t_rp = timed([&] {
        for (int i = 0; i < 200; ++i) rp = robustness(records, 14, 200, 99, true);
    });
    const bool rob_match = rs.group_r == rp.group_r;
    std::printf("robustness      serial %.3fs  openmp %.3fs  speedup %.2fx  match=%s\n",
                t_rs, t_rp, t_rs / t_rp, rob_match ? "yes" : "NO");

    return sim_match && count_match && rob_match ? 0 : 1;
}
