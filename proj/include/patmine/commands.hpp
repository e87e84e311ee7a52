#ifndef PATMINE_COMMANDS_HPP
#define PATMINE_COMMANDS_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace patmine {

struct RunConfig {
    std::string command;
    std::string input;     // corpus directory (one file per patent)
    std::string rules;     // section-rules file; empty = bundled defaults
    std::string registry;  // keyword registry file; empty = bundled defaults
    std::string stopwords; // stopword list; empty = bundled defaults
    std::string overrides; // manual section-override sidecar
    std::string rates;     // domain,k_percent file; empty = bundled rates
    std::vector<std::string> exclusions = {"Genome sequencing"};
    bool bundled = false;  // operate on the bundled reference dataset
    bool full_precision = false; // use recomputed KW instead of published integers
    std::uint64_t seed = 20230456;
    std::string out = ".";
    std::set<std::string> formats = {"table", "json-summary"};

    // robustness
    int group_size = 14;
    int n_groups = 20;

    // simulate
    std::vector<int> d_values = {1, 2, 3};
    double b = 1.0;
    double m_max = 10.0;
    double step = 1e-3;
    long attempts = 100000;
    int n_components = 50;
    int n_seeds = 100;
};

void cmd_sections(const RunConfig& config);
void cmd_count(const RunConfig& config);
void cmd_correlate(const RunConfig& config);
void cmd_robustness(const RunConfig& config);
void cmd_simulate(const RunConfig& config);

// Dispatch on config.command; returns the process exit code (0 success,
// 2 input error, 3 validation error).
int run_command(const RunConfig& config);

} // namespace patmine

#endif
