#ifndef PATMINE_BUNDLED_HPP
#define PATMINE_BUNDLED_HPP

#include <array>
#include <string>
#include <vector>

namespace patmine::bundled {

// Raw bundled reference files, compiled in so the CLI works from any
// directory. The data/ directory ships the same bytes.
const std::string& table_s2_text();
const std::string& table_s3_text();
const std::string& stopwords_text();
const std::string& section_rules_text();

// Active keywords in bundled column order.
inline constexpr int kNumKeywords = 6;
const std::array<std::string, 6>& keyword_columns();

struct TableS2Row {
    int domain_no = 0;
    std::string domain;
    int n_patents = 0;
    std::array<long, 6> counts{}; // prevent, undesirable, requirement, fail, disadvantage, overcome
    long six_kw_total = 0;
    long word_total = 0;
    int kw_published = 0; // (6KW/words)*1e5 as published (display rounding)
    double k_percent = 0.0;
};

std::vector<TableS2Row> table_s2();

} // namespace patmine::bundled

#endif
