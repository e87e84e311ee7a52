#include "patmine/keywords.hpp"

#include "patmine/bundled.hpp"
#include "patmine/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace patmine {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

double KeywordSpec::mean_relevancy() const {
    if (relevancy.empty()) return 0.0;
    double sum = 0.0;
    for (const RelevancyEntry& e : relevancy) sum += e.value;
    return sum / static_cast<double>(relevancy.size());
}

Registry parse_registry(const std::string& text) {
    Registry reg;
    std::istringstream iss(text);
    std::string line;
    if (!std::getline(iss, line)) throw ValidationError("empty registry table");
    std::vector<std::string> header = split_csv_line(line);
    if (header.size() < 6 || header[0] != "keyword" || header[1] != "root" ||
        header[2] != "status" || header[3] != "reason" || header[4] != "mean")
        throw ValidationError("registry table header not recognized");
    const std::vector<std::string> domains(header.begin() + 5, header.end());

    while (std::getline(iss, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f = split_csv_line(line);
        if (f.size() != header.size())
            throw ValidationError("registry row arity mismatch: " + line);
        KeywordSpec k;
        k.label = f[0];
        k.root = f[1];
        if (f[2] == "active") k.status = KeywordStatus::Active;
        else if (f[2] == "culled") k.status = KeywordStatus::Culled;
        else throw ValidationError("unknown keyword status: " + f[2]);
        k.cull_reason = f[3];
        k.published_mean_raw = f[4];
        k.published_mean = std::stod(f[4]);
        for (size_t i = 0; i < domains.size(); ++i) {
            const std::string& v = f[5 + i];
            if (v.empty() || v == "/") continue; // no usage observed
            RelevancyEntry e;
            e.domain = domains[i];
            e.raw = v;
            e.value = std::stod(v);
            if (e.value < 0.0 || e.value > 1.0)
                throw ValidationError("relevancy outside [0,1]: " + v);
            k.relevancy.push_back(std::move(e));
        }
        if (k.root.empty() ||
            !std::all_of(k.root.begin(), k.root.end(),
                         [](unsigned char c) { return std::islower(c); }))
            throw ValidationError("keyword root must be lowercase alphabetic: " + k.root);
        reg.push_back(std::move(k));
    }
    return reg;
}

Registry load_registry(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileUnreadable(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_registry(buf.str());
}

std::vector<std::string> registry_domain_columns(const Registry& reg) {
    std::vector<std::string> cols;
    for (const KeywordSpec& k : reg)
        for (const RelevancyEntry& e : k.relevancy)
            if (std::find(cols.begin(), cols.end(), e.domain) == cols.end())
                cols.push_back(e.domain);
    return cols;
}

std::string serialize_registry(const Registry& reg,
                               const std::vector<std::string>& domain_columns) {
    std::string out = "keyword,root,status,reason,mean";
    for (const std::string& d : domain_columns) out += "," + d;
    out += "\n";
    for (const KeywordSpec& k : reg) {
        out += k.label + "," + k.root + ",";
        out += (k.status == KeywordStatus::Active ? "active" : "culled");
        out += "," + k.cull_reason + "," + k.published_mean_raw;
        for (const std::string& d : domain_columns) {
            auto it = std::find_if(k.relevancy.begin(), k.relevancy.end(),
                                   [&](const RelevancyEntry& e) { return e.domain == d; });
            out += ",";
            out += (it == k.relevancy.end() ? "/" : it->raw);
        }
        out += "\n";
    }
    return out;
}

Registry default_registry() {
    return parse_registry(bundled::table_s3_text());
}

std::vector<const KeywordSpec*> active_keywords(const Registry& reg) {
    std::vector<const KeywordSpec*> out;
    for (const KeywordSpec& k : reg)
        if (k.status == KeywordStatus::Active) out.push_back(&k);
    return out;
}

double compute_relevancy(const RelevancyAnnotation& ann) {
    if (ann.total_count == 0)
        throw ValidationError("relevancy annotation with zero total count");
    if (ann.true_positive_count < 0 || ann.true_positive_count > ann.total_count)
        throw ValidationError("true positives out of range");
    return static_cast<double>(ann.true_positive_count) /
           static_cast<double>(ann.total_count);
}

std::set<std::string> cull_by_occurrence(const std::map<std::string, long>& counts,
                                         long min_count) {
    if (min_count < 1) throw ValidationError("min_count must be >= 1");
    std::set<std::string> culled;
    for (const auto& [kw, count] : counts)
        if (count < min_count) culled.insert(kw);
    return culled;
}

std::set<std::string> cull_by_cross_domain(
    const std::map<std::string, std::map<std::string, long>>& per_domain_counts,
    int min_domains) {
    if (min_domains < 1) throw ValidationError("min_domains must be >= 1");
    std::set<std::string> culled;
    for (const auto& [kw, domains] : per_domain_counts) {
        int used = 0;
        for (const auto& [domain, count] : domains)
            if (count >= 1) ++used;
        if (used < min_domains) culled.insert(kw);
    }
    return culled;
}

std::set<std::string> cull_by_relevancy(const Registry& reg, double min_relevancy) {
    if (!(min_relevancy > 0.0) || min_relevancy > 1.0)
        throw ValidationError("min_relevancy must be in (0,1]");
    std::set<std::string> culled;
    for (const KeywordSpec& k : reg)
        if (k.mean_relevancy() < min_relevancy) culled.insert(k.label);
    return culled;
}

} // namespace patmine
