#include "patmine/commands.hpp"

#include <CLI11.hpp>

#include <string>
#include <vector>

int main(int argc, char** argv) {
    patmine::RunConfig config;

    CLI::App app{
        "patmine: patent keyword mining, interaction-intensity statistics, and\n"
        "cost-decay model simulation.\n\n"
        "Exit codes: 0 success, 2 input error (missing/unreadable files),\n"
        "3 validation error (bad parameters or malformed data)."};
    app.require_subcommand(1);

    std::vector<std::string> formats;
    std::vector<std::string> exclusions;
    bool no_exclude = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", config.input, "corpus directory, one file per patent");
        sub->add_flag("--bundled", config.bundled, "use the bundled reference dataset");
        sub->add_option("--rules", config.rules, "section-rules file");
        sub->add_option("--registry", config.registry, "keyword registry file");
        sub->add_option("--stopwords", config.stopwords, "stopword list file");
        sub->add_option("--overrides", config.overrides, "manual section-override file");
        sub->add_option("--rates", config.rates, "improvement-rates file (domain,k_percent)");
        sub->add_option("--exclude", exclusions,
                        "domains to exclude (default: Genome sequencing)");
        sub->add_flag("--no-exclude", no_exclude, "clear the default exclusion list");
        sub->add_option("--seed", config.seed, "RNG seed for stochastic commands");
        sub->add_option("--out", config.out, "output directory (default: .)");
        sub->add_option("--format", formats,
                        "output formats: table, json-summary, svg")
            ->check(CLI::IsMember({"table", "json-summary", "svg"}));
        sub->add_flag("--full-precision", config.full_precision,
                      "use recomputed KW instead of published integers in bundled mode");
    };

    CLI::App* sections = app.add_subcommand(
        "sections", "extract title/abstract/background/summary sections");
    add_common(sections);

    CLI::App* count = app.add_subcommand(
        "count", "keyword counts and normalized intensity per domain");
    add_common(count);

    CLI::App* correlate = app.add_subcommand(
        "correlate", "correlate improvement rates with 1/KW");
    add_common(correlate);

    CLI::App* robust = app.add_subcommand(
        "robustness", "correlation over random domain subsets");
    add_common(robust);
    robust->add_option("--group-size", config.group_size, "domains per group");
    robust->add_option("--groups", config.n_groups, "number of groups");

    CLI::App* simulate = app.add_subcommand(
        "simulate", "cost-decay model: analytic, ODE, and Monte Carlo");
    add_common(simulate);
    simulate->add_option("--d", config.d_values, "interaction parameter values");
    simulate->add_option("--b", config.b, "rate constant B");
    simulate->add_option("--m-max", config.m_max, "integration horizon");
    simulate->add_option("--step", config.step, "integration step");
    simulate->add_option("--attempts", config.attempts, "design attempts per replica");
    simulate->add_option("--components", config.n_components, "components per artifact");
    simulate->add_option("--replicas", config.n_seeds, "Monte Carlo replicas");

    CLI11_PARSE(app, argc, argv);

    if (!formats.empty())
        config.formats = std::set<std::string>(formats.begin(), formats.end());
    if (no_exclude) config.exclusions.clear();
    else if (!exclusions.empty()) config.exclusions = exclusions;

    for (CLI::App* sub : {sections, count, correlate, robust, simulate}) {
        if (sub->parsed()) {
            config.command = sub->get_name();
            break;
        }
    }
    return patmine::run_command(config);
}
