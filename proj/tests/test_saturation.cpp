#include "ccglex/saturation.hpp"

#include "ccglex/corpus_xml.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

using namespace ccglex;
using namespace ccglex::testing;

namespace {

std::vector<StreamToken> synthetic_stream(std::size_t n,
                                          std::size_t vocabulary,
                                          std::mt19937& rng) {
    // Zipf-like closed vocabulary: rank r drawn with weight 1/r.
    std::vector<double> weights;
    for (std::size_t r = 1; r <= vocabulary; ++r)
        weights.push_back(1.0 / static_cast<double>(r));
    std::discrete_distribution<std::size_t> pick(weights.begin(),
                                                 weights.end());
    std::vector<StreamToken> stream;
    stream.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        stream.push_back({"w" + std::to_string(pick(rng)), Pos::Noun});
    }
    return stream;
}

} // namespace

TEST_CASE("segmentation partitions the stream with near-equal sizes") {
    auto ten = segment(10, 10);
    REQUIRE(ten.size() == 10);
    for (std::size_t i = 0; i < 10; ++i) {
        CHECK(ten[i].begin == i);
        CHECK(ten[i].end == i + 1);
    }

    auto three = segment(10, 3);
    REQUIRE(three.size() == 3);
    CHECK(three[0].end - three[0].begin == 4);
    CHECK(three[1].end - three[1].begin == 3);
    CHECK(three[2].end - three[2].begin == 3);

    CHECK_THROWS_AS(segment(10, 0), std::invalid_argument);
    CHECK_THROWS_AS(segment(10, 11), std::invalid_argument);

    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> total_pick(1, 5000);
    for (int i = 0; i < 50; ++i) {
        std::size_t total = total_pick(rng);
        std::uniform_int_distribution<std::size_t> k_pick(1, total);
        std::size_t k = k_pick(rng);
        auto samples = segment(total, k);
        REQUIRE(samples.size() == k);
        std::size_t at = 0;
        std::size_t min_size = total, max_size = 0;
        for (const auto& s : samples) {
            CHECK(s.begin == at);
            at = s.end;
            min_size = std::min(min_size, s.end - s.begin);
            max_size = std::max(max_size, s.end - s.begin);
        }
        CHECK(at == total);
        CHECK(max_size - min_size <= 1);
    }
}

TEST_CASE("fifteen samples over 18834 tokens differ by one token") {
    auto samples = segment(18834, 15);
    std::size_t larger = 0, smaller = 0;
    for (const auto& s : samples) {
        std::size_t size = s.end - s.begin;
        if (size == 1256) ++larger;
        else if (size == 1255) ++smaller;
        else FAIL("unexpected sample size");
    }
    CHECK(larger == 9);
    CHECK(smaller == 6);
}

TEST_CASE("cumulative frequency counts occurrences per sample") {
    std::vector<StreamToken> stream;
    for (int i = 0; i < 12; ++i)
        stream.push_back({i % 3 == 0 ? "current" : "w" + std::to_string(i),
                          Pos::Noun});
    auto samples = segment(stream.size(), 4);

    auto zero = cumulative_frequency(stream, samples, {"absent"});
    for (std::size_t v : zero.per_sample) CHECK(v == 0);
    CHECK(zero.cumulative.back() == 0);

    auto hits = cumulative_frequency(stream, samples, {"current"});
    CHECK(hits.cumulative.back() == 4);
    for (std::size_t i = 1; i < hits.cumulative.size(); ++i)
        CHECK(hits.cumulative[i] >= hits.cumulative[i - 1]);

    // every token matches: cumulative equals the running sample sizes
    std::set<std::string> all;
    for (const auto& t : stream) all.insert(t.norm);
    auto full = cumulative_frequency(stream, samples, all);
    std::size_t running = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        running += samples[i].end - samples[i].begin;
        CHECK(full.cumulative[i] == running);
    }

    CHECK_THROWS_AS(cumulative_frequency(stream, samples, {}),
                    std::invalid_argument);
}

TEST_CASE("bundled corpus term curve matches the authored hand count") {
    std::ifstream in(std::string(CCGLEX_DATA_DIR) + "/mini_corpus.xml",
                     std::ios::binary);
    REQUIRE(in);
    AnnotatedCorpus c = read_corpus_xml(in);
    auto stream = token_stream(c);
    auto samples = segment(stream.size(), 5);
    auto curve =
        cumulative_frequency(stream, samples, {"circuit", "current"});
    CHECK(curve.per_sample ==
          std::vector<std::size_t>{13, 11, 12, 10, 6});
    CHECK(curve.cumulative ==
          std::vector<std::size_t>{13, 24, 36, 46, 52});
}

TEST_CASE("a stream of novel types never saturates") {
    std::vector<StreamToken> stream;
    for (int i = 0; i < 600; ++i)
        stream.push_back({"t" + std::to_string(i), Pos::Noun});
    auto curve = new_type_curve(stream, segment(stream.size(), 10),
                                Selector::all_words());
    CHECK(!curve.saturation.has_value());
    for (std::size_t v : curve.per_sample) CHECK(v == 60);
}

TEST_CASE("a closed vocabulary saturates early") {
    std::mt19937 rng(2024);
    auto stream = synthetic_stream(15 * 500, 50, rng);
    auto curve = new_type_curve(stream, segment(stream.size(), 15),
                                Selector::all_words());
    REQUIRE(curve.saturation.has_value());
    CHECK(*curve.saturation < 15);

    // independent recount of first-seen samples
    std::map<std::string, std::size_t> first_seen;
    for (std::size_t si = 0; si < curve.samples.size(); ++si) {
        for (std::size_t i = curve.samples[si].begin;
             i < curve.samples[si].end; ++i) {
            first_seen.emplace(stream[i].norm, si);
        }
    }
    std::vector<std::size_t> expected(curve.samples.size(), 0);
    for (const auto& [w, si] : first_seen) {
        (void)w;
        ++expected[si];
    }
    CHECK(curve.per_sample == expected);
}

TEST_CASE("term-list selectors track only listed types") {
    std::vector<StreamToken> stream = {
        {"current", Pos::Noun}, {"flows", Pos::Verb},
        {"circuit", Pos::Noun}, {"current", Pos::Noun},
        {"lamp", Pos::Noun},    {"circuit", Pos::Noun},
    };
    auto curve =
        new_type_curve(stream, segment(stream.size(), 3),
                       Selector::term_list({"current", "circuit"}));
    CHECK(curve.per_sample == std::vector<std::size_t>{1, 1, 0});
    CHECK(curve.cumulative.back() == 2);
    CHECK(curve.descriptor == "new-types:terms(2)");
}

TEST_CASE("pos filters track only matching tokens") {
    std::vector<StreamToken> stream = {
        {"flows", Pos::Verb}, {"lamp", Pos::Noun},  {"glows", Pos::Verb},
        {"wire", Pos::Noun},  {"flows", Pos::Verb}, {"fades", Pos::Verb},
    };
    auto curve = new_type_curve(stream, segment(stream.size(), 3),
                                Selector::pos_filter(Pos::Verb));
    CHECK(curve.per_sample == std::vector<std::size_t>{1, 1, 1});
    CHECK(curve.cumulative.back() == 3);
}

TEST_CASE("all-words growth conserves the unique word count") {
    std::ifstream in(std::string(CCGLEX_DATA_DIR) + "/mini_corpus.xml",
                     std::ios::binary);
    REQUIRE(in);
    AnnotatedCorpus c = read_corpus_xml(in);
    auto stream = token_stream(c);
    for (std::size_t k : {1u, 5u, 12u}) {
        auto curve = new_type_curve(stream, segment(stream.size(), k),
                                    Selector::all_words());
        CHECK(curve.cumulative.back() == c.unique_words().size());
    }
}

TEST_CASE("saturation index definition") {
    SaturationCurve c;
    c.per_sample = {50, 30, 10, 0, 0, 0, 0};
    c.cumulative = {50, 80, 90, 90, 90, 90, 90};
    CHECK(saturation_index(c, 0.02, 3) == 3);

    SaturationCurve growing;
    growing.per_sample = {10, 20, 30, 40};
    growing.cumulative = {10, 30, 60, 100};
    CHECK(!saturation_index(growing, 0.02, 3).has_value());

    CHECK_THROWS_AS(saturation_index(c, 0.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(saturation_index(c, 1.0, 3), std::invalid_argument);
    CHECK_THROWS_AS(saturation_index(c, 0.02, 0), std::invalid_argument);

    // the final sample has no successor to examine, so it never qualifies
    SaturationCurve flat;
    flat.per_sample = {5};
    flat.cumulative = {5};
    CHECK(!saturation_index(flat, 0.5, 3).has_value());
}

TEST_CASE("saturation index matches the literal scan on random curves") {
    std::mt19937 rng(31415);
    std::uniform_int_distribution<int> len_pick(1, 20);
    std::uniform_int_distribution<int> val_pick(0, 40);
    std::uniform_int_distribution<int> window_pick(1, 5);
    for (int t = 0; t < 300; ++t) {
        SaturationCurve c;
        int len = len_pick(rng);
        std::size_t run = 0;
        for (int i = 0; i < len; ++i) {
            std::size_t v = static_cast<std::size_t>(val_pick(rng));
            run += v;
            c.per_sample.push_back(v);
            c.cumulative.push_back(run);
        }
        double eps = 0.01 + 0.2 * std::uniform_real_distribution<>()(rng);
        std::size_t window = window_pick(rng);
        CHECK(saturation_index(c, eps, window) ==
              oracle_saturation_index(c.per_sample, c.cumulative, eps,
                                      window));
    }
}

TEST_CASE("larger epsilon saturates no later") {
    std::mt19937 rng(1618);
    std::uniform_int_distribution<int> val_pick(0, 30);
    for (int t = 0; t < 100; ++t) {
        SaturationCurve c;
        std::size_t run = 0;
        for (int i = 0; i < 12; ++i) {
            std::size_t v = static_cast<std::size_t>(val_pick(rng));
            run += v;
            c.per_sample.push_back(v);
            c.cumulative.push_back(run);
        }
        auto tight = saturation_index(c, 0.05, 3);
        auto loose = saturation_index(c, 0.2, 3);
        if (tight) {
            REQUIRE(loose.has_value());
            CHECK(*loose <= *tight);
        }
    }
}

TEST_CASE("curves are deterministic and csv-stable") {
    std::mt19937 rng(99);
    auto stream = synthetic_stream(2000, 80, rng);
    auto samples = segment(stream.size(), 8);
    auto a = new_type_curve(stream, samples, Selector::all_words());
    auto b = new_type_curve(stream, samples, Selector::all_words());
    CHECK(a.per_sample == b.per_sample);
    CHECK(a.cumulative == b.cumulative);
    CHECK(a.saturation == b.saturation);

    std::ostringstream ca, cb;
    write_curve_csv(a, ca);
    write_curve_csv(b, cb);
    CHECK(ca.str() == cb.str());
    CHECK(ca.str().rfind("# saturation_index=") != std::string::npos);
    CHECK(ca.str().substr(0, 22) == "sample,new,cumulative\n");
}
