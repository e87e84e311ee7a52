#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "patmine/bundled.hpp"
#include "patmine/errors.hpp"
#include "patmine/rng.hpp"
#include "patmine/textmine.hpp"

#include <algorithm>
#include <numeric>

using namespace patmine;

namespace {

CleanedText make_ct(std::vector<std::string> tokens) {
    CleanedText ct;
    ct.patent_id = "T";
    ct.tokens = std::move(tokens);
    ct.word_count = static_cast<long>(ct.tokens.size());
    return ct;
}

} // namespace

TEST_CASE("count_keyword is a prefix count") {
    const std::vector<std::string> toks = {"prevents", "prevention", "prevented",
                                           "prevalent"};
    CHECK(count_keyword(toks, "prevent") == 3);
    const std::vector<std::string> fails = {"failure", "fails", "failed", "failsafe"};
    CHECK(count_keyword(fails, "fail") == 4);
    CHECK(count_keyword(std::vector<std::string>{}, "fail") == 0);
    CHECK_THROWS_AS(count_keyword(toks, "Prevent"), ValidationError);
}

TEST_CASE("count_keyword is additive over concatenation") {
    Rng rng(77);
    const std::vector<std::string> vocab = {"prevent", "prevented", "prevalent",
                                            "fail",    "failing",   "flywheel"};
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::string> a, b;
        for (std::uint64_t i = 0, n = rng.next_index(30); i < n; ++i)
            a.push_back(vocab[rng.next_index(vocab.size())]);
        for (std::uint64_t i = 0, n = rng.next_index(30); i < n; ++i)
            b.push_back(vocab[rng.next_index(vocab.size())]);
        std::vector<std::string> ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        CHECK(count_keyword(ab, "prevent") ==
              count_keyword(a, "prevent") + count_keyword(b, "prevent"));
    }
}

TEST_CASE("no default root is a prefix of another") {
    const Registry reg = default_registry();
    const auto active = active_keywords(reg);
    for (const KeywordSpec* a : active)
        for (const KeywordSpec* b : active) {
            if (a == b) continue;
            CHECK(a->root.rfind(b->root, 0) == std::string::npos);
        }
}

TEST_CASE("no default root collides with a bundled stopword") {
    // counting before and after stopword removal is equivalent only if no
    // stopword would match a root
    const StopwordList stops = StopwordList::parse(bundled::stopwords_text());
    for (const KeywordSpec* k : active_keywords(default_registry()))
        for (const std::string& w : stops.words)
            CHECK(w.rfind(k->root, 0) == std::string::npos);
}

TEST_CASE("count_patent fills one slot per active keyword") {
    const Registry reg = default_registry();
    const PatentCounts pc =
        count_patent(make_ct({"prevent", "leakage", "undesirable", "prevent"}), reg);
    REQUIRE(pc.per_keyword.size() == 6);
    CHECK(pc.per_keyword[0] == 2); // prevent
    CHECK(pc.per_keyword[1] == 1); // undesirable
    CHECK(std::accumulate(pc.per_keyword.begin(), pc.per_keyword.end(), 0L) == 3);
    CHECK(pc.word_count == 4);

    const PatentCounts zero = count_patent(make_ct({}), reg);
    CHECK(std::accumulate(zero.per_keyword.begin(), zero.per_keyword.end(), 0L) == 0);
}

TEST_CASE("aggregate_domain sums counts and normalizes per 100k words") {
    const Registry reg = default_registry();
    std::vector<PatentCounts> pcs;
    for (int i = 0; i < 3; ++i) {
        PatentCounts pc = count_patent(
            make_ct({"prevent", "failure", "rotor", "hub", "overcome"}), reg);
        pc.domain_id = "dom";
        pc.patent_id = "p" + std::to_string(i);
        pcs.push_back(pc);
    }
    const DomainCounts dc = aggregate_domain(pcs);
    CHECK(dc.n_patents == 3);
    CHECK(dc.six_kw_total == 9);
    CHECK(dc.word_total == 15);
    CHECK(dc.kw_normalized == doctest::Approx(9.0 / 15.0 * 1e5));

    CHECK_THROWS_AS(aggregate_domain(std::vector<PatentCounts>{}), ValidationError);
    PatentCounts empty;
    empty.domain_id = "dom";
    empty.per_keyword.assign(6, 0);
    CHECK_THROWS_AS(aggregate_domain(std::vector<PatentCounts>{empty}),
                    ValidationError); // zero words
}

TEST_CASE("aggregation is order-independent over any partition") {
    const Registry reg = default_registry();
    Rng rng(101);
    std::vector<PatentCounts> pcs;
    const std::vector<std::string> vocab = {"prevent", "fail", "undesired", "rotor",
                                            "overcome", "requirement", "disadvantages"};
    for (int i = 0; i < 20; ++i) {
        std::vector<std::string> toks;
        for (std::uint64_t t = 0, n = 1 + rng.next_index(50); t < n; ++t)
            toks.push_back(vocab[rng.next_index(vocab.size())]);
        PatentCounts pc = count_patent(make_ct(std::move(toks)), reg);
        pc.domain_id = "dom";
        pcs.push_back(pc);
    }
    const DomainCounts direct = aggregate_domain(pcs);
    std::vector<PatentCounts> shuffled = pcs;
    for (size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1], shuffled[rng.next_index(i)]);
    const DomainCounts reordered = aggregate_domain(shuffled);
    CHECK(direct.per_keyword == reordered.per_keyword);
    CHECK(direct.six_kw_total == reordered.six_kw_total);
    CHECK(direct.word_total == reordered.word_total);
    CHECK(direct.kw_normalized == reordered.kw_normalized);
}

TEST_CASE("parallel and serial corpus counting agree exactly") {
    const Registry reg = default_registry();
    Rng rng(55);
    std::vector<CleanedText> corpus;
    const std::vector<std::string> vocab = {"prevent", "fail", "undesirable",
                                            "overcome", "stator", "winding"};
    for (int i = 0; i < 500; ++i) {
        std::vector<std::string> toks;
        for (std::uint64_t t = 0, n = 1 + rng.next_index(200); t < n; ++t)
            toks.push_back(vocab[rng.next_index(vocab.size())]);
        corpus.push_back(make_ct(std::move(toks)));
    }
    const auto serial = count_corpus(corpus, "dom", reg, false);
    const auto parallel = count_corpus(corpus, "dom", reg, true);
    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].per_keyword == parallel[i].per_keyword);
        CHECK(serial[i].word_count == parallel[i].word_count);
    }
}

TEST_CASE("every bundled row satisfies the sum and normalization invariants") {
    const auto rows = bundled::table_s2();
    REQUIRE(rows.size() == 28);
    for (const auto& r : rows) {
        CAPTURE(r.domain);
        long sum = 0;
        for (long c : r.counts) sum += c;
        CHECK(sum == r.six_kw_total);
        const double norm =
            static_cast<double>(r.six_kw_total) / static_cast<double>(r.word_total) * 1e5;
        CHECK(std::abs(round_display(norm) - r.kw_published) <= 1);
        CHECK(r.n_patents >= 97);
        CHECK(r.n_patents <= 100);
    }
}

TEST_CASE("spot-check published normalized values") {
    const auto rows = bundled::table_s2();
    const std::pair<const char*, int> spots[] = {
        {"3DPrinting", 94},      {"Aircraft", 270},       {"Batteries", 172},
        {"Electric motor", 200}, {"Flywheel", 237},       {"LED", 112},
        {"Genome sequencing", 53}};
    for (const auto& [domain, expect] : spots) {
        const auto it = std::find_if(rows.begin(), rows.end(),
                                     [&](const auto& r) { return r.domain == domain; });
        REQUIRE(it != rows.end());
        const double norm = static_cast<double>(it->six_kw_total) /
                            static_cast<double>(it->word_total) * 1e5;
        CHECK(round_display(norm) == expect);
    }
    // 3DPrinting at full precision
    CHECK(162.0 / 172952.0 * 1e5 == doctest::Approx(93.67).epsilon(1e-3));
}

TEST_CASE("domain word totals span a ratio slightly over two") {
    const auto rows = bundled::table_s2();
    long lo = rows.front().word_total, hi = lo;
    for (const auto& r : rows) {
        lo = std::min(lo, r.word_total);
        hi = std::max(hi, r.word_total);
    }
    const double ratio = static_cast<double>(hi) / static_cast<double>(lo);
    CHECK(ratio > 1.9);
    CHECK(ratio < 2.2);
    CHECK(lo == 95661);
    CHECK(hi == 191484);
}

TEST_CASE("build_domain_records computes 1/KW at full precision") {
    const std::vector<DomainCounts> dc = bundled_domain_counts();
    const auto records = build_domain_records(dc, bundled_rates());
    CHECK(records.size() == 27); // genome excluded by default
    const auto opt = std::find_if(records.begin(), records.end(), [](const auto& r) {
        return r.domain_id == "Optical Telcom";
    });
    REQUIRE(opt != records.end());
    CHECK(opt->k_percent == doctest::Approx(65.0));
    CHECK(opt->kw == doctest::Approx(120.79).epsilon(1e-4));
    CHECK(opt->inv_kw == doctest::Approx(1.0 / (129.0 / 106801.0 * 1e5)));

    for (const auto& r : records) CHECK(r.domain_id != "Genome sequencing");

    const auto all = build_domain_records(dc, bundled_rates(), {});
    CHECK(all.size() == 28);
}

TEST_CASE("build_domain_records validates its inputs") {
    std::vector<DomainCounts> dc = bundled_domain_counts();
    std::map<std::string, double> rates = bundled_rates();
    rates.erase("Aircraft");
    CHECK_THROWS_AS(build_domain_records(dc, rates), ValidationError);

    dc[0].kw_normalized = 0.0;
    CHECK_THROWS_AS(build_domain_records(dc, bundled_rates()), ValidationError);
}

TEST_CASE("bundled_records kw modes") {
    const auto pub = bundled_records(KwMode::Published);
    const auto full = bundled_records(KwMode::FullPrecision);
    REQUIRE(pub.size() == 27);
    REQUIRE(full.size() == 27);
    for (size_t i = 0; i < pub.size(); ++i) {
        CHECK(pub[i].domain_id == full[i].domain_id);
        CHECK(round_display(full[i].kw) == doctest::Approx(pub[i].kw).epsilon(1e-12));
        CHECK(pub[i].inv_kw == doctest::Approx(1.0 / pub[i].kw));
    }
}
