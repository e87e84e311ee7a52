#include "patmine/textmine.hpp"

#include "patmine/bundled.hpp"
#include "patmine/errors.hpp"

#include <algorithm>
#include <cmath>

namespace patmine {

long count_keyword(std::span<const std::string> tokens, const std::string& root) {
    if (root.empty() ||
        !std::all_of(root.begin(), root.end(),
                     [](unsigned char c) { return std::islower(c); }))
        throw ValidationError("keyword root must be lowercase alphabetic: " + root);
    long n = 0;
    for (const std::string& tok : tokens)
        if (tok.size() >= root.size() && tok.compare(0, root.size(), root) == 0) ++n;
    return n;
}

PatentCounts count_patent(const CleanedText& ct, const Registry& reg) {
    const std::vector<const KeywordSpec*> active = active_keywords(reg);
    if (active.empty()) throw ValidationError("registry has no active keywords");
    PatentCounts pc;
    pc.patent_id = ct.patent_id;
    pc.word_count = ct.word_count;
    pc.per_keyword.reserve(active.size());
    for (const KeywordSpec* k : active)
        pc.per_keyword.push_back(count_keyword(ct.tokens, k->root));
    return pc;
}

std::vector<PatentCounts> count_corpus(std::span<const CleanedText> corpus,
                                       const std::string& domain_id, const Registry& reg,
                                       bool parallel) {
    std::vector<PatentCounts> out(corpus.size());
    const auto n = static_cast<long>(corpus.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (long i = 0; i < n; ++i) {
        out[i] = count_patent(corpus[i], reg);
        out[i].domain_id = domain_id;
    }
    return out;
}

DomainCounts aggregate_domain(std::span<const PatentCounts> counts) {
    if (counts.empty()) throw ValidationError("empty domain: no patent counts");
    DomainCounts dc;
    dc.domain_id = counts.front().domain_id;
    dc.n_patents = static_cast<int>(counts.size());
    dc.per_keyword.assign(counts.front().per_keyword.size(), 0);
    for (const PatentCounts& pc : counts) {
        if (pc.domain_id != dc.domain_id)
            throw ValidationError("mixed domains in aggregate: " + pc.domain_id +
                                  " vs " + dc.domain_id);
        if (pc.per_keyword.size() != dc.per_keyword.size())
            throw ValidationError("keyword arity mismatch in aggregate");
        for (size_t k = 0; k < pc.per_keyword.size(); ++k)
            dc.per_keyword[k] += pc.per_keyword[k];
        dc.word_total += pc.word_count;
    }
    for (long c : dc.per_keyword) dc.six_kw_total += c;
    if (dc.word_total <= 0) throw ValidationError("zero words in domain " + dc.domain_id);
    dc.kw_normalized =
        static_cast<double>(dc.six_kw_total) / static_cast<double>(dc.word_total) * 1e5;
    return dc;
}

long round_display(double v) {
    return static_cast<long>(v < 0 ? std::ceil(v - 0.5) : std::floor(v + 0.5));
}

std::vector<DomainRecord> build_domain_records(
    std::span<const DomainCounts> dc, const std::map<std::string, double>& rates_percent,
    const std::vector<std::string>& exclusions) {
    std::vector<DomainRecord> out;
    for (const DomainCounts& d : dc) {
        if (std::find(exclusions.begin(), exclusions.end(), d.domain_id) !=
            exclusions.end())
            continue;
        auto it = rates_percent.find(d.domain_id);
        if (it == rates_percent.end())
            throw ValidationError("missing improvement rate for domain " + d.domain_id);
        if (!(d.kw_normalized > 0.0))
            throw ValidationError("zero normalized keyword count for domain " +
                                  d.domain_id);
        out.push_back({d.domain_id, it->second, d.kw_normalized, 1.0 / d.kw_normalized});
    }
    return out;
}

std::vector<DomainCounts> bundled_domain_counts() {
    std::vector<DomainCounts> out;
    for (const bundled::TableS2Row& r : bundled::table_s2()) {
        DomainCounts dc;
        dc.domain_id = r.domain;
        dc.n_patents = r.n_patents;
        dc.per_keyword.assign(r.counts.begin(), r.counts.end());
        dc.six_kw_total = r.six_kw_total;
        dc.word_total = r.word_total;
        dc.kw_normalized =
            static_cast<double>(r.six_kw_total) / static_cast<double>(r.word_total) * 1e5;
        out.push_back(std::move(dc));
    }
    return out;
}

std::map<std::string, double> bundled_rates() {
    std::map<std::string, double> rates;
    for (const bundled::TableS2Row& r : bundled::table_s2())
        rates[r.domain] = r.k_percent;
    return rates;
}

std::vector<DomainRecord> bundled_records(KwMode mode,
                                          const std::vector<std::string>& exclusions) {
    std::vector<DomainRecord> out;
    for (const bundled::TableS2Row& r : bundled::table_s2()) {
        if (std::find(exclusions.begin(), exclusions.end(), r.domain) != exclusions.end())
            continue;
        double kw = mode == KwMode::Published
                        ? static_cast<double>(r.kw_published)
                        : static_cast<double>(r.six_kw_total) /
                              static_cast<double>(r.word_total) * 1e5;
        out.push_back({r.domain, r.k_percent, kw, 1.0 / kw});
    }
    return out;
}

} // namespace patmine
