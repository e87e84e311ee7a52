#ifndef PATMINE_CORPUS_HPP
#define PATMINE_CORPUS_HPP

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace patmine {

// One heading/paragraph pair from a patent file, in document order.
struct Block {
    std::optional<std::string> heading;
    std::string paragraph;
};

struct PatentDocument {
    std::string patent_id;
    std::string domain_id;
    std::vector<Block> blocks;
};

enum class Provenance {
    ExactHeading,
    PartialHeading,
    ParagraphMatch,
    ManualOverride,
    Absent,
};

const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

struct SectionedPatent {
    std::string patent_id;
    std::string domain_id;
    std::string title;
    std::string abstract;
    std::string background;
    std::string summary;
    Provenance title_provenance = Provenance::Absent;
    Provenance abstract_provenance = Provenance::Absent;
    Provenance background_provenance = Provenance::Absent;
    Provenance summary_provenance = Provenance::Absent;
};

struct CleanedText {
    std::string patent_id;
    std::vector<std::string> tokens;
    long word_count = 0;
};

// Section search terms. The defaults reproduce the bundled rules file; the
// two-character sequence ".*" in a pattern matches any character run, all
// other characters are literal, comparison is case-insensitive.
struct SectionRules {
    std::vector<std::string> title_terms;
    std::vector<std::string> abstract_terms;
    std::vector<std::string> background_exact;
    std::vector<std::string> background_partial_heading;
    std::vector<std::string> background_partial_paragraph;
    std::vector<std::string> summary_exact;
    std::vector<std::string> summary_partial_heading;
    std::vector<std::string> summary_partial_paragraph;

    static SectionRules defaults();
    static SectionRules parse(const std::string& text);
    static SectionRules load(const std::string& path);
    std::string serialize() const;
};

// Manual section override, mirroring manually processed patents whose
// headings were missing or merged.
struct SectionOverride {
    std::string patent_id;
    std::string section; // title | abstract | background | summary
    std::string start_marker;
    std::string end_marker;
};

std::vector<SectionOverride> parse_overrides(const std::string& text);
std::vector<SectionOverride> load_overrides(const std::string& path);

struct StopwordList {
    std::string version;
    std::unordered_set<std::string> words;

    static StopwordList parse(const std::string& text);
    static StopwordList load(const std::string& path);
    bool contains(const std::string& w) const { return words.count(w) > 0; }
};

// Case-insensitive wildcard match; ".*" in the pattern matches any run of
// characters, everything else is literal, match is anchored at both ends.
bool wildcard_match(const std::string& pattern, const std::string& text);

PatentDocument parse_patent(const std::string& path, const std::string& domain_id);
PatentDocument parse_patent_text(const std::string& text, const std::string& patent_id,
                                 const std::string& domain_id);

SectionedPatent extract_sections(const PatentDocument& doc, const SectionRules& rules,
                                 const std::vector<SectionOverride>& overrides = {});

CleanedText clean_text(const SectionedPatent& sp, const StopwordList& stopwords);

// Lowercases and splits into maximal alphabetic runs; digits and symbols
// are separators and never counted.
std::vector<std::string> tokenize(const std::string& text);

} // namespace patmine

#endif
