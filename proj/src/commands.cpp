#include "patmine/commands.hpp"

#include "patmine/bundled.hpp"
#include "patmine/corpus.hpp"
#include "patmine/errors.hpp"
#include "patmine/keywords.hpp"
#include "patmine/model.hpp"
#include "patmine/stats.hpp"
#include "patmine/svgplot.hpp"
#include "patmine/textmine.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace patmine {

namespace {

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), f, v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write output file: " + path.string());
    out << content;
}

bool wants(const RunConfig& c, const std::string& format) {
    return c.formats.count(format) > 0;
}

SectionRules load_rules(const RunConfig& c) {
    return c.rules.empty() ? SectionRules::defaults() : SectionRules::load(c.rules);
}

Registry load_reg(const RunConfig& c) {
    return c.registry.empty() ? default_registry() : load_registry(c.registry);
}

StopwordList load_stops(const RunConfig& c) {
    return c.stopwords.empty() ? StopwordList::parse(bundled::stopwords_text())
                               : StopwordList::load(c.stopwords);
}

std::map<std::string, double> load_rates(const RunConfig& c) {
    if (c.rates.empty()) return bundled_rates();
    std::ifstream in(c.rates);
    if (!in) throw FileUnreadable(c.rates);
    std::map<std::string, double> rates;
    std::string line;
    std::getline(in, line); // header: domain,k_percent
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        size_t comma = line.find_last_of(',');
        if (comma == std::string::npos)
            throw ValidationError("rates row is not domain,k_percent: " + line);
        rates[line.substr(0, comma)] = std::stod(line.substr(comma + 1));
    }
    return rates;
}

// Corpus layout: one UTF-8 file per patent; subdirectory name = domain,
// top-level files fall into domain "default". Scan order is sorted for
// reproducible output.
std::vector<std::pair<std::string, fs::path>> scan_corpus(const std::string& input) {
    if (!fs::is_directory(input))
        throw InputError("input is not a directory: " + input);
    std::vector<std::pair<std::string, fs::path>> files;
    for (const auto& entry : fs::recursive_directory_iterator(input)) {
        if (!entry.is_regular_file()) continue;
        const fs::path rel = fs::relative(entry.path(), input);
        if (rel.filename() == "overrides.txt") continue;
        const std::string domain =
            rel.has_parent_path() ? rel.parent_path().begin()->string() : "default";
        files.emplace_back(domain, entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) throw InputError("no patent files under: " + input);
    return files;
}

std::vector<SectionOverride> collect_overrides(const RunConfig& c) {
    if (!c.overrides.empty()) return load_overrides(c.overrides);
    if (!c.input.empty()) {
        const fs::path implicit = fs::path(c.input) / "overrides.txt";
        if (fs::exists(implicit)) return load_overrides(implicit.string());
    }
    return {};
}

// Full mining pipeline for non-bundled inputs: section, clean, count,
// aggregate per domain.
std::vector<DomainCounts> mine_corpus(const RunConfig& c) {
    const SectionRules rules = load_rules(c);
    const Registry reg = load_reg(c);
    const StopwordList stops = load_stops(c);
    const std::vector<SectionOverride> overrides = collect_overrides(c);

    std::map<std::string, std::vector<CleanedText>> by_domain;
    for (const auto& [domain, path] : scan_corpus(c.input)) {
        const PatentDocument doc = parse_patent(path.string(), domain);
        const SectionedPatent sp = extract_sections(doc, rules, overrides);
        by_domain[domain].push_back(clean_text(sp, stops));
    }

    std::vector<DomainCounts> out;
    for (const auto& [domain, texts] : by_domain) {
        const std::vector<PatentCounts> pcs = count_corpus(texts, domain, reg);
        long words = 0;
        for (const PatentCounts& pc : pcs) words += pc.word_count;
        if (words == 0) {
            std::cerr << "warning: domain '" << domain
                      << "' has zero words after cleaning, dropped\n";
            continue;
        }
        out.push_back(aggregate_domain(pcs));
    }
    return out;
}

std::vector<DomainRecord> records_for(const RunConfig& c) {
    if (c.bundled)
        return bundled_records(c.full_precision ? KwMode::FullPrecision : KwMode::Published,
                               c.exclusions);
    const std::vector<DomainCounts> dc = mine_corpus(c);
    return build_domain_records(dc, load_rates(c), c.exclusions);
}

} // namespace

void cmd_sections(const RunConfig& c) {
    const SectionRules rules = load_rules(c);
    const std::vector<SectionOverride> overrides = collect_overrides(c);

    std::string csv =
        "patent_id,domain,title_provenance,abstract_provenance,background_provenance,"
        "summary_provenance,title_chars,abstract_chars,background_chars,summary_chars\n";
    std::map<std::string, long> tag_counts;
    for (const char* tag : {"exact-heading", "partial-heading", "paragraph-match",
                            "manual-override", "absent"})
        tag_counts[tag] = 0;

    long n_patents = 0;
    for (const auto& [domain, path] : scan_corpus(c.input)) {
        const PatentDocument doc = parse_patent(path.string(), domain);
        const SectionedPatent sp = extract_sections(doc, rules, overrides);
        ++n_patents;
        for (Provenance p : {sp.title_provenance, sp.abstract_provenance,
                             sp.background_provenance, sp.summary_provenance})
            ++tag_counts[provenance_name(p)];
        csv += csv_escape(sp.patent_id) + "," + csv_escape(domain) + "," +
               provenance_name(sp.title_provenance) + "," +
               provenance_name(sp.abstract_provenance) + "," +
               provenance_name(sp.background_provenance) + "," +
               provenance_name(sp.summary_provenance) + "," +
               std::to_string(sp.title.size()) + "," + std::to_string(sp.abstract.size()) +
               "," + std::to_string(sp.background.size()) + "," +
               std::to_string(sp.summary.size()) + "\n";
    }

    std::string summary = "provenance,count\n";
    for (const auto& [tag, count] : tag_counts)
        summary += tag + "," + std::to_string(count) + "\n";

    if (wants(c, "table")) {
        write_file(fs::path(c.out) / "sections.csv", csv);
        write_file(fs::path(c.out) / "provenance_summary.csv", summary);
    }
    if (wants(c, "json-summary")) {
        json j;
        j["n_patents"] = n_patents;
        j["provenance_counts"] = tag_counts;
        write_file(fs::path(c.out) / "sections.json", j.dump(2) + "\n");
    }
}

void cmd_count(const RunConfig& c) {
    std::string csv;
    json j;
    if (c.bundled) {
        // The bundled report is the reference table itself, byte for byte.
        csv = bundled::table_s2_text();
        j["mode"] = "bundled";
        j["n_domains"] = 28;
    } else {
        const std::vector<DomainCounts> dc = mine_corpus(c);
        const std::map<std::string, double> rates = load_rates(c);
        csv = "domain,n_patents";
        for (const std::string& k : bundled::keyword_columns()) csv += "," + k;
        csv += ",six_kw_total,word_total,kw_per_100k,k_percent\n";
        for (const DomainCounts& d : dc) {
            csv += csv_escape(d.domain_id) + "," + std::to_string(d.n_patents);
            for (long v : d.per_keyword) csv += "," + std::to_string(v);
            csv += "," + std::to_string(d.six_kw_total) + "," +
                   std::to_string(d.word_total) + "," + fmt("%.4f", d.kw_normalized);
            auto it = rates.find(d.domain_id);
            csv += ",";
            if (it != rates.end()) csv += fmt("%g", it->second);
            csv += "\n";
        }
        j["mode"] = "mined";
        j["n_domains"] = dc.size();
    }
    if (wants(c, "table")) write_file(fs::path(c.out) / "counts.csv", csv);
    if (wants(c, "json-summary"))
        write_file(fs::path(c.out) / "counts.json", j.dump(2) + "\n");
}

void cmd_correlate(const RunConfig& c) {
    const std::vector<DomainRecord> records = records_for(c);
    const CorrelationResult res = correlate_records(records);

    std::vector<double> x, y;
    for (const DomainRecord& r : records) {
        x.push_back(r.inv_kw);
        y.push_back(r.k_percent);
    }
    const LinearFit trend = linear_trend(x, y);

    if (wants(c, "table")) {
        std::string csv = "r,n,p,trend_slope,trend_intercept\n";
        csv += fmt("%.6f", res.r) + "," + std::to_string(res.n) + "," +
               fmt("%.6f", res.p) + "," + fmt("%.6f", trend.slope) + "," +
               fmt("%.6f", trend.intercept) + "\n";
        write_file(fs::path(c.out) / "correlation.csv", csv);
    }
    if (wants(c, "json-summary")) {
        json j;
        j["r"] = res.r;
        j["n"] = res.n;
        j["p"] = res.p;
        j["trend_slope"] = trend.slope;
        j["trend_intercept"] = trend.intercept;
        j["exclusions"] = c.exclusions;
        write_file(fs::path(c.out) / "correlation.json", j.dump(2) + "\n");
    }
    if (wants(c, "svg")) {
        write_file(fs::path(c.out) / "correlation.svg",
                   scatter_svg(x, y, "1 / KW", "K (%/yr)",
                               TrendLine{trend.slope, trend.intercept}));
    }
}

void cmd_robustness(const RunConfig& c) {
    const std::vector<DomainRecord> records = records_for(c);
    const RobustnessResult res =
        robustness(records, c.group_size, c.n_groups, c.seed);

    if (wants(c, "table")) {
        std::string csv = "group,r,members\n";
        for (int g = 0; g < res.n_groups; ++g) {
            std::string members;
            for (int i : res.groups[g]) {
                if (!members.empty()) members += ";";
                members += records[i].domain_id;
            }
            csv += std::to_string(g + 1) + "," + fmt("%.6f", res.group_r[g]) + "," +
                   csv_escape(members) + "\n";
        }
        csv += "mean," + fmt("%.6f", res.mean) + ",\n";
        csv += "sd," + fmt("%.6f", res.sd) + ",\n";
        csv += "min," + fmt("%.6f", res.min) + ",\n";
        csv += "max," + fmt("%.6f", res.max) + ",\n";
        csv += "seed," + std::to_string(res.seed) + ",\n";
        write_file(fs::path(c.out) / "robustness.csv", csv);
    }
    if (wants(c, "json-summary")) {
        json j;
        j["group_size"] = res.group_size;
        j["n_groups"] = res.n_groups;
        j["seed"] = res.seed;
        j["group_r"] = res.group_r;
        j["mean"] = res.mean;
        j["sd"] = res.sd;
        j["min"] = res.min;
        j["max"] = res.max;
        write_file(fs::path(c.out) / "robustness.json", j.dump(2) + "\n");
    }
    if (wants(c, "svg")) {
        std::vector<double> gx, gy;
        for (int g = 0; g < res.n_groups; ++g) {
            gx.push_back(g + 1);
            gy.push_back(res.group_r[g]);
        }
        write_file(fs::path(c.out) / "robustness.svg",
                   scatter_svg(gx, gy, "group", "Pearson r"));
    }
}

void cmd_simulate(const RunConfig& c) {
    if (!(c.m_max > 0.0)) throw ValidationError("m_max must be positive");

    json j;
    j["seed"] = c.seed;
    j["n_seeds"] = c.n_seeds;
    j["attempts"] = c.attempts;
    j["n_components"] = c.n_components;
    j["b"] = c.b;
    json exponents = json::array();

    std::string expo_csv =
        "d,b,n_components,attempts,n_seeds,seed,tail_slope,target_slope\n";

    for (int d : c.d_values) {
        const CostModelParams params{static_cast<double>(d), c.b};
        const CostTrajectory ode = integrate_cost_ode(params, c.m_max, c.step);

        DesignSearchParams sim;
        sim.n_components = c.n_components;
        sim.d = d;
        sim.attempts = c.attempts;
        const EnsembleResult ens = ensemble_mean(sim, c.seed, c.n_seeds);
        const double slope = tail_log_slope(ens);
        const double target = -1.0 / d;

        if (wants(c, "table")) {
            std::string traj = "m,analytic,ode\n";
            for (size_t i = 0; i < ode.m.size(); ++i)
                traj += fmt("%.6f", ode.m[i]) + "," +
                        fmt("%.12f", analytic_cost(ode.m[i], params)) + "," +
                        fmt("%.12f", ode.c[i]) + "\n";
            write_file(fs::path(c.out) / ("trajectory_d" + std::to_string(d) + ".csv"),
                       traj);

            std::string mc = "m,mean_c\n";
            for (size_t i = 0; i < ens.m.size(); ++i)
                mc += fmt("%.0f", ens.m[i]) + "," + fmt("%.12f", ens.mean_c[i]) + "\n";
            write_file(fs::path(c.out) / ("montecarlo_d" + std::to_string(d) + ".csv"),
                       mc);
        }

        expo_csv += std::to_string(d) + "," + fmt("%g", c.b) + "," +
                    std::to_string(c.n_components) + "," + std::to_string(c.attempts) +
                    "," + std::to_string(c.n_seeds) + "," + std::to_string(c.seed) + "," +
                    fmt("%.6f", slope) + "," + fmt("%.6f", target) + "\n";
        exponents.push_back({{"d", d},
                             {"tail_slope", slope},
                             {"target_slope", target}});
    }

    if (wants(c, "table"))
        write_file(fs::path(c.out) / "exponents.csv", expo_csv);
    if (wants(c, "json-summary")) {
        j["exponents"] = exponents;
        write_file(fs::path(c.out) / "simulate.json", j.dump(2) + "\n");
    }
}

int run_command(const RunConfig& config) {
    try {
        if (config.command == "sections") cmd_sections(config);
        else if (config.command == "count") cmd_count(config);
        else if (config.command == "correlate") cmd_correlate(config);
        else if (config.command == "robustness") cmd_robustness(config);
        else if (config.command == "simulate") cmd_simulate(config);
        else throw ValidationError("unknown command: " + config.command);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

} // namespace patmine
