#ifndef PATMINE_TEXTMINE_HPP
#define PATMINE_TEXTMINE_HPP

#include "patmine/corpus.hpp"
#include "patmine/keywords.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace patmine {

struct PatentCounts {
    std::string patent_id;
    std::string domain_id;
    std::vector<long> per_keyword; // parallel to active_keywords(registry)
    long word_count = 0;
};

struct DomainCounts {
    std::string domain_id;
    int n_patents = 0;
    std::vector<long> per_keyword;
    long six_kw_total = 0;
    long word_total = 0;
    double kw_normalized = 0.0; // per 100,000 words, full precision
};

struct DomainRecord {
    std::string domain_id;
    double k_percent = 0.0; // improvement rate, %/yr
    double kw = 0.0;        // normalized keyword intensity
    double inv_kw = 0.0;    // 1/kw
};

// Number of tokens having root as a prefix.
long count_keyword(std::span<const std::string> tokens, const std::string& root);

PatentCounts count_patent(const CleanedText& ct, const Registry& reg);

// Per-patent counting over a corpus. OpenMP over patents when parallel is
// set; output is identical to the serial path (disjoint slots, no shared
// accumulation).
std::vector<PatentCounts> count_corpus(std::span<const CleanedText> corpus,
                                       const std::string& domain_id, const Registry& reg,
                                       bool parallel = true);

DomainCounts aggregate_domain(std::span<const PatentCounts> counts);

// Display rounding used by the bundled table: round half away from zero.
long round_display(double v);

std::vector<DomainRecord> build_domain_records(
    std::span<const DomainCounts> dc, const std::map<std::string, double>& rates_percent,
    const std::vector<std::string>& exclusions = {"Genome sequencing"});

// How the normalized-KW column of the bundled table is fed into records:
// as-published integers (default for the reference analysis) or at full
// precision recomputed from counts and word totals.
enum class KwMode { Published, FullPrecision };

std::vector<DomainRecord> bundled_records(
    KwMode mode = KwMode::Published,
    const std::vector<std::string>& exclusions = {"Genome sequencing"});

std::vector<DomainCounts> bundled_domain_counts();
std::map<std::string, double> bundled_rates();

} // namespace patmine

#endif
