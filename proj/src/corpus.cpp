#include "patmine/corpus.hpp"

#include "patmine/bundled.hpp"
#include "patmine/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace patmine {

namespace {

std::string to_lower(const std::string& s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool iequals(const std::string& a, const std::string& b) {
    return a.size() == b.size() &&
           std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
               return std::tolower(x) == std::tolower(y);
           });
}

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Small connectives may stay lowercase inside a Title Case heading.
bool is_connective(const std::string& w) {
    static const std::unordered_set<std::string> kWords = {
        "of", "the", "and", "in", "to", "a", "an", "for", "on", "or", "with"};
    return kWords.count(to_lower(w)) > 0;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string w;
    while (iss >> w) out.push_back(w);
    return out;
}

// A candidate heading is a short line (<= 8 tokens) without a terminal
// period, in ALL CAPS or Title Case.
bool is_heading_line(const std::string& line) {
    std::vector<std::string> words = split_ws(line);
    if (words.empty() || words.size() > 8) return false;
    if (line.back() == '.') return false;

    bool any_upper = false, any_lower = false;
    for (char ch : line) {
        if (std::isupper(static_cast<unsigned char>(ch))) any_upper = true;
        if (std::islower(static_cast<unsigned char>(ch))) any_lower = true;
    }
    if (!any_upper) return false;
    if (!any_lower) return true; // ALL CAPS

    // Title Case: every alphabetic word capitalized, connectives exempt
    // after the first word.
    for (size_t i = 0; i < words.size(); ++i) {
        const std::string& w = words[i];
        auto it = std::find_if(w.begin(), w.end(), [](unsigned char c) {
            return std::isalpha(c) != 0;
        });
        if (it == w.end()) continue;
        if (std::isupper(static_cast<unsigned char>(*it))) continue;
        if (i > 0 && is_connective(w)) continue;
        return false;
    }
    return true;
}

std::string strip_markup(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool in_tag = false;
    for (char ch : text) {
        if (ch == '<') {
            in_tag = true;
        } else if (ch == '>' && in_tag) {
            in_tag = false;
            out.push_back(' ');
        } else if (!in_tag) {
            out.push_back(ch);
        }
    }
    return out;
}

// Maximal runs of consecutive blocks sharing one heading value.
struct Segment {
    std::optional<std::string> heading;
    size_t first = 0; // block index
    size_t last = 0;  // inclusive
};

std::vector<Segment> segment_blocks(const std::vector<Block>& blocks) {
    std::vector<Segment> segs;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (!segs.empty() && segs.back().heading == blocks[i].heading) {
            segs.back().last = i;
        } else {
            segs.push_back({blocks[i].heading, i, i});
        }
    }
    return segs;
}

std::string join_paragraphs(const std::vector<Block>& blocks, size_t first, size_t last) {
    std::string out;
    for (size_t i = first; i <= last; ++i) {
        if (blocks[i].paragraph.empty()) continue;
        if (!out.empty()) out += "\n";
        out += blocks[i].paragraph;
    }
    return out;
}

bool matches_any_exact(const std::string& heading, const std::vector<std::string>& terms) {
    return std::any_of(terms.begin(), terms.end(),
                       [&](const std::string& t) { return iequals(heading, t); });
}

bool matches_any_pattern(const std::string& text, const std::vector<std::string>& patterns) {
    return std::any_of(patterns.begin(), patterns.end(),
                       [&](const std::string& p) { return wildcard_match(p, text); });
}

// exact heading -> partial heading -> partial paragraph; the first stage
// with a match wins.
std::pair<std::string, Provenance> find_section(const std::vector<Block>& blocks,
                                                const std::vector<Segment>& segs,
                                                const std::vector<std::string>& exact,
                                                const std::vector<std::string>& partial_heading,
                                                const std::vector<std::string>& partial_paragraph) {
    for (const Segment& s : segs) {
        if (s.heading && matches_any_exact(*s.heading, exact))
            return {join_paragraphs(blocks, s.first, s.last), Provenance::ExactHeading};
    }
    for (const Segment& s : segs) {
        if (s.heading && matches_any_pattern(*s.heading, partial_heading))
            return {join_paragraphs(blocks, s.first, s.last), Provenance::PartialHeading};
    }
    for (const Segment& s : segs) {
        for (size_t i = s.first; i <= s.last; ++i) {
            if (matches_any_pattern(blocks[i].paragraph, partial_paragraph))
                return {join_paragraphs(blocks, i, s.last), Provenance::ParagraphMatch};
        }
    }
    return {"", Provenance::Absent};
}

void append_terms(std::string& out, const char* key, const std::vector<std::string>& terms) {
    out += "[";
    out += key;
    out += "]\n";
    for (const std::string& t : terms) {
        out += t;
        out += "\n";
    }
}

} // namespace

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::ExactHeading: return "exact-heading";
        case Provenance::PartialHeading: return "partial-heading";
        case Provenance::ParagraphMatch: return "paragraph-match";
        case Provenance::ManualOverride: return "manual-override";
        case Provenance::Absent: return "absent";
    }
    return "absent";
}

Provenance provenance_from_name(const std::string& name) {
    if (name == "exact-heading") return Provenance::ExactHeading;
    if (name == "partial-heading") return Provenance::PartialHeading;
    if (name == "paragraph-match") return Provenance::ParagraphMatch;
    if (name == "manual-override") return Provenance::ManualOverride;
    if (name == "absent") return Provenance::Absent;
    throw ValidationError("unknown provenance tag: " + name);
}

bool wildcard_match(const std::string& pattern, const std::string& text) {
    const std::string pat = to_lower(pattern);
    const std::string txt = to_lower(text);

    // Split the pattern into literal segments separated by ".*".
    std::vector<std::string> segments;
    size_t pos = 0;
    bool leading_wild = false, trailing_wild = false;
    while (pos <= pat.size()) {
        size_t wild = pat.find(".*", pos);
        if (wild == std::string::npos) {
            segments.push_back(pat.substr(pos));
            break;
        }
        if (wild == 0) leading_wild = true;
        segments.push_back(pat.substr(pos, wild - pos));
        pos = wild + 2;
        if (pos == pat.size()) {
            trailing_wild = true;
            segments.push_back("");
            break;
        }
    }
    // Drop empty segments produced by adjacent wildcards.
    std::vector<std::string> parts;
    for (const std::string& s : segments)
        if (!s.empty()) parts.push_back(s);

    if (parts.empty()) return leading_wild || trailing_wild || pat.empty() ? true : txt.empty();

    size_t at = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        size_t found = txt.find(parts[i], at);
        if (found == std::string::npos) return false;
        if (i == 0 && !leading_wild && found != 0) return false;
        at = found + parts[i].size();
    }
    if (!trailing_wild && at != txt.size()) return false;
    return true;
}

PatentDocument parse_patent_text(const std::string& text, const std::string& patent_id,
                                 const std::string& domain_id) {
    const std::string clean = strip_markup(text);

    PatentDocument doc;
    doc.patent_id = patent_id;
    doc.domain_id = domain_id;

    std::optional<std::string> heading;
    bool heading_consumed = true;
    std::string paragraph;

    auto flush = [&]() {
        if (!paragraph.empty()) {
            doc.blocks.push_back({heading, paragraph});
            paragraph.clear();
            heading_consumed = true;
        }
    };

    std::istringstream iss(clean);
    std::string line;
    while (std::getline(iss, line)) {
        const std::string t = trim(line);
        if (t.empty()) {
            flush();
            continue;
        }
        if (is_heading_line(t)) {
            flush();
            heading = t;
            heading_consumed = false;
            continue;
        }
        if (!paragraph.empty()) paragraph += " ";
        paragraph += t;
    }
    flush();
    if (!heading_consumed && heading)
        doc.blocks.push_back({heading, ""});

    if (doc.blocks.empty()) throw EmptyDocument(patent_id);
    return doc;
}

PatentDocument parse_patent(const std::string& path, const std::string& domain_id) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileUnreadable(path);
    std::stringstream buf;
    buf << in.rdbuf();

    // patent_id = file stem
    std::string id = path;
    size_t slash = id.find_last_of("/\\");
    if (slash != std::string::npos) id = id.substr(slash + 1);
    size_t dot = id.find_last_of('.');
    if (dot != std::string::npos && dot > 0) id = id.substr(0, dot);

    return parse_patent_text(buf.str(), id, domain_id);
}

SectionedPatent extract_sections(const PatentDocument& doc, const SectionRules& rules,
                                 const std::vector<SectionOverride>& overrides) {
    SectionedPatent sp;
    sp.patent_id = doc.patent_id;
    sp.domain_id = doc.domain_id;

    const std::vector<Segment> segs = segment_blocks(doc.blocks);

    // Title and abstract are matched by their term lists against headings.
    for (const Segment& s : segs) {
        if (sp.title_provenance == Provenance::Absent && s.heading &&
            matches_any_exact(*s.heading, rules.title_terms)) {
            sp.title = join_paragraphs(doc.blocks, s.first, s.last);
            sp.title_provenance = Provenance::ExactHeading;
        }
        if (sp.abstract_provenance == Provenance::Absent && s.heading &&
            matches_any_exact(*s.heading, rules.abstract_terms)) {
            sp.abstract = join_paragraphs(doc.blocks, s.first, s.last);
            sp.abstract_provenance = Provenance::ExactHeading;
        }
    }

    std::tie(sp.background, sp.background_provenance) =
        find_section(doc.blocks, segs, rules.background_exact,
                     rules.background_partial_heading, rules.background_partial_paragraph);
    std::tie(sp.summary, sp.summary_provenance) =
        find_section(doc.blocks, segs, rules.summary_exact,
                     rules.summary_partial_heading, rules.summary_partial_paragraph);

    if (!overrides.empty()) {
        std::string full;
        for (const Block& b : doc.blocks) {
            if (b.heading) {
                if (!full.empty()) full += "\n";
                full += *b.heading;
            }
            if (!b.paragraph.empty()) {
                if (!full.empty()) full += "\n";
                full += b.paragraph;
            }
        }
        for (const SectionOverride& ov : overrides) {
            if (ov.patent_id != doc.patent_id) continue;
            size_t start = full.find(ov.start_marker);
            if (start == std::string::npos || ov.start_marker.empty()) continue;
            start += ov.start_marker.size();
            size_t end = ov.end_marker.empty() ? full.size() : full.find(ov.end_marker, start);
            if (end == std::string::npos) end = full.size();
            std::string text = trim(full.substr(start, end - start));
            Provenance prov =
                text.empty() ? Provenance::Absent : Provenance::ManualOverride;
            if (ov.section == "title") {
                sp.title = text;
                sp.title_provenance = prov;
            } else if (ov.section == "abstract") {
                sp.abstract = text;
                sp.abstract_provenance = prov;
            } else if (ov.section == "background") {
                sp.background = text;
                sp.background_provenance = prov;
            } else if (ov.section == "summary") {
                sp.summary = text;
                sp.summary_provenance = prov;
            } else {
                throw ValidationError("override names unknown section: " + ov.section);
            }
        }
    }

    if (sp.title.empty()) sp.title_provenance = Provenance::Absent;
    if (sp.abstract.empty()) sp.abstract_provenance = Provenance::Absent;
    if (sp.background.empty()) sp.background_provenance = Provenance::Absent;
    if (sp.summary.empty()) sp.summary_provenance = Provenance::Absent;
    return sp;
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        unsigned char c = static_cast<unsigned char>(ch);
        if (std::isalpha(c)) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

CleanedText clean_text(const SectionedPatent& sp, const StopwordList& stopwords) {
    CleanedText ct;
    ct.patent_id = sp.patent_id;
    const std::string all = sp.title + " " + sp.abstract + " " + sp.background + " " + sp.summary;
    for (std::string& tok : tokenize(all)) {
        if (!stopwords.contains(tok)) ct.tokens.push_back(std::move(tok));
    }
    ct.word_count = static_cast<long>(ct.tokens.size());
    return ct;
}

SectionRules SectionRules::defaults() {
    return parse(bundled::section_rules_text());
}

SectionRules SectionRules::parse(const std::string& text) {
    SectionRules r;
    std::vector<std::string>* target = nullptr;
    std::istringstream iss(text);
    std::string line;
    while (std::getline(iss, line)) {
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[' && t.back() == ']') {
            const std::string key = t.substr(1, t.size() - 2);
            if (key == "title") target = &r.title_terms;
            else if (key == "abstract") target = &r.abstract_terms;
            else if (key == "background_exact") target = &r.background_exact;
            else if (key == "background_partial_heading") target = &r.background_partial_heading;
            else if (key == "background_partial_paragraph") target = &r.background_partial_paragraph;
            else if (key == "summary_exact") target = &r.summary_exact;
            else if (key == "summary_partial_heading") target = &r.summary_partial_heading;
            else if (key == "summary_partial_paragraph") target = &r.summary_partial_paragraph;
            else throw ValidationError("unknown section-rules group: " + key);
            continue;
        }
        if (!target) throw ValidationError("section-rules term before any group: " + t);
        target->push_back(t);
    }
    return r;
}

SectionRules SectionRules::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileUnreadable(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string SectionRules::serialize() const {
    std::string out;
    append_terms(out, "title", title_terms);
    append_terms(out, "abstract", abstract_terms);
    append_terms(out, "background_exact", background_exact);
    append_terms(out, "background_partial_heading", background_partial_heading);
    append_terms(out, "background_partial_paragraph", background_partial_paragraph);
    append_terms(out, "summary_exact", summary_exact);
    append_terms(out, "summary_partial_heading", summary_partial_heading);
    append_terms(out, "summary_partial_paragraph", summary_partial_paragraph);
    return out;
}

std::vector<SectionOverride> parse_overrides(const std::string& text) {
    std::vector<SectionOverride> out;
    SectionOverride cur;
    bool open = false;

    auto flush = [&]() {
        if (!open) return;
        if (cur.patent_id.empty() || cur.section.empty())
            throw ValidationError("override record missing patent_id or section");
        out.push_back(cur);
        cur = {};
        open = false;
    };

    std::istringstream iss(text);
    std::string line;
    while (std::getline(iss, line)) {
        const std::string t = trim(line);
        if (t.empty()) {
            flush();
            continue;
        }
        if (t[0] == '#') continue;
        size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw ValidationError("override line is not key:value: " + t);
        const std::string key = trim(t.substr(0, colon));
        const std::string value = trim(t.substr(colon + 1));
        open = true;
        if (key == "patent_id") cur.patent_id = value;
        else if (key == "section") cur.section = value;
        else if (key == "start-marker") cur.start_marker = value;
        else if (key == "end-marker") cur.end_marker = value;
        else throw ValidationError("unknown override key: " + key);
    }
    flush();
    return out;
}

std::vector<SectionOverride> load_overrides(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileUnreadable(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_overrides(buf.str());
}

StopwordList StopwordList::parse(const std::string& text) {
    StopwordList sw;
    std::istringstream iss(text);
    std::string line;
    while (std::getline(iss, line)) {
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            size_t v = t.find("version:");
            if (v != std::string::npos) sw.version = trim(t.substr(v + 8));
            continue;
        }
        sw.words.insert(to_lower(t));
    }
    return sw;
}

StopwordList StopwordList::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileUnreadable(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

} // namespace patmine
