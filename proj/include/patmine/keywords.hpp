#ifndef PATMINE_KEYWORDS_HPP
#define PATMINE_KEYWORDS_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace patmine {

enum class KeywordStatus { Active, Culled };

struct RelevancyEntry {
    std::string domain;
    double value = 0.0;
    std::string raw; // value as written in the registry file, kept for
                     // byte-exact round trips
};

struct KeywordSpec {
    std::string label;
    std::string root; // lowercase prefix used for matching
    KeywordStatus status = KeywordStatus::Active;
    std::string cull_reason; // empty when active
    // In registry-file column order; domains the annotators saw no usage
    // in are simply absent.
    std::vector<RelevancyEntry> relevancy;
    double published_mean = 0.0; // mean as printed in the registry file
    std::string published_mean_raw;

    // Arithmetic mean of the present domain values.
    double mean_relevancy() const;
};

using Registry = std::vector<KeywordSpec>;

// The bundled 8-keyword registry: 6 active, 'problem' and 'parasitic'
// culled, relevancy preloaded from the bundled annotation table.
Registry default_registry();

std::vector<const KeywordSpec*> active_keywords(const Registry& reg);

struct RelevancyAnnotation {
    std::string keyword;
    std::string domain;
    long true_positive_count = 0;
    long total_count = 0;
};

double compute_relevancy(const RelevancyAnnotation& ann);

std::set<std::string> cull_by_occurrence(const std::map<std::string, long>& counts,
                                         long min_count);

std::set<std::string> cull_by_cross_domain(
    const std::map<std::string, std::map<std::string, long>>& per_domain_counts,
    int min_domains);

std::set<std::string> cull_by_relevancy(const Registry& reg, double min_relevancy);

Registry parse_registry(const std::string& text);
Registry load_registry(const std::string& path);

// Domain columns of the registry table, union in first-appearance order.
std::vector<std::string> registry_domain_columns(const Registry& reg);
std::string serialize_registry(const Registry& reg,
                               const std::vector<std::string>& domain_columns);

} // namespace patmine

#endif
