#include "ccglex/chart.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace ccglex;
using namespace ccglex::testing;

TEST_CASE("three-token sentence has the expected single derivation") {
    std::vector<CategorySet> toks = {cats({"np/n"}), cats({"n"}),
                                     cats({"s\\np"})};
    auto derivs = cky_parse(toks);
    REQUIRE(derivs.size() == 1);
    const Derivation& root = *derivs[0];
    CHECK(root.category == cat("s"));
    CHECK(root.rule == Rule::BackwardApplication);
    CHECK(root.begin == 0);
    CHECK(root.end == 3);
    REQUIRE(root.children.size() == 2);
    const Derivation& np = *root.children[0];
    CHECK(np.rule == Rule::ForwardApplication);
    CHECK(np.category == cat("np"));
    CHECK(np.end == 2);
    CHECK(validate_derivation(root, toks));

    auto roots = oracle_span_categories(toks);
    CHECK(roots.count(cat("s")) == 1);
}

TEST_CASE("two tokens, single backward application") {
    std::vector<CategorySet> toks = {cats({"np"}), cats({"s\\np"})};
    auto derivs = cky_parse(toks);
    REQUIRE(derivs.size() == 1);
    CHECK(derivs[0]->category == cat("s"));
}

TEST_CASE("uncombinable tokens fail") {
    std::vector<CategorySet> toks = {cats({"n"}), cats({"n"})};
    CHECK(cky_parse(toks).empty());
}

TEST_CASE("empty inputs are precondition violations") {
    CHECK_THROWS_AS(cky_parse({}), std::invalid_argument);
    std::vector<CategorySet> toks = {cats({"np"}), {}, cats({"s\\np"})};
    try {
        cky_parse(toks);
        FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("token 1") != std::string::npos);
    }
}

TEST_CASE("ambiguity is retained and ordered canonically") {
    // s/s s/s s derives s twice: composition-first and application-only.
    std::vector<CategorySet> toks = {cats({"s/s"}), cats({"s/s"}),
                                     cats({"s"})};
    auto derivs = cky_parse(toks);
    REQUIRE(derivs.size() == 2);
    CHECK(derivs[0]->key() < derivs[1]->key());
    for (const auto& d : derivs) {
        CHECK(d->category == cat("s"));
        CHECK(validate_derivation(*d, toks));
    }

    ParseOptions capped;
    capped.derivation_cap = 1;
    CHECK(cky_parse(toks, capped).size() == 1);
}

TEST_CASE("root policy is exact") {
    std::vector<CategorySet> toks = {cats({"np/n"}), cats({"n"})};
    CHECK(cky_parse(toks).empty()); // np is not s

    ParseOptions np_root;
    np_root.root = cat("np");
    auto derivs = cky_parse(toks, np_root);
    REQUIRE(derivs.size() == 1);
    CHECK(derivs[0]->category == cat("np"));
}

TEST_CASE("conjunction promotion is off by default and unary when on") {
    std::vector<CategorySet> toks = {cats({"np"}), cats({"conj"}),
                                     cats({"np"})};
    ParseOptions np_root;
    np_root.root = cat("np");
    CHECK(cky_parse(toks, np_root).empty());

    np_root.conj_promotion = true;
    auto derivs = cky_parse(toks, np_root);
    REQUIRE(!derivs.empty());
    for (const auto& d : derivs) CHECK(validate_derivation(*d, toks));

    // the promotion node sits over the conj leaf, same span, one child
    const Derivation* promo = nullptr;
    const Derivation* walk = derivs[0].get();
    std::vector<const Derivation*> stack = {walk};
    while (!stack.empty()) {
        const Derivation* d = stack.back();
        stack.pop_back();
        if (d->rule == Rule::ConjPromotion) promo = d;
        for (const auto& c : d->children) stack.push_back(c.get());
    }
    REQUIRE(promo != nullptr);
    REQUIRE(promo->children.size() == 1);
    CHECK(promo->begin == promo->children[0]->begin);
    CHECK(promo->end == promo->children[0]->end);
    CHECK(promo->children[0]->category == cat("conj"));
    CHECK(promo->category == cat("(np\\np)/np"));
}

TEST_CASE("chart agrees with the bracketing oracle on random sentences") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> len_pick(1, 6);
    std::uniform_int_distribution<int> ncat_pick(1, 2);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<CategorySet> toks;
        int len = len_pick(rng);
        for (int i = 0; i < len; ++i) {
            CategorySet cs;
            int n = ncat_pick(rng);
            while (static_cast<int>(cs.size()) < n)
                cs.insert(random_category(rng, 3));
            toks.push_back(std::move(cs));
        }
        Chart chart(toks, ParseOptions{});
        CHECK(chart.categories(0, toks.size()) ==
              oracle_span_categories(toks));
    }
}

TEST_CASE("chart with conjunction promotion matches the closed oracle") {
    std::mt19937 rng(515151);
    std::uniform_int_distribution<int> len_pick(1, 5);
    std::uniform_int_distribution<int> coin(0, 3);
    ParseOptions opts;
    opts.conj_promotion = true;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<CategorySet> toks;
        int len = len_pick(rng);
        for (int i = 0; i < len; ++i) {
            CategorySet cs;
            // bias toward bare conj cells so promotion actually fires
            if (coin(rng) == 0) cs.insert(Category::atomic(Atom::Conj));
            while (cs.size() < 2) cs.insert(random_category(rng, 2));
            toks.push_back(std::move(cs));
        }
        Chart chart(toks, opts);
        CHECK(chart.categories(0, toks.size()) ==
              oracle_span_categories(toks, /*with_conj_promotion=*/true));
    }
}

TEST_CASE("all unpacked derivations are well-formed") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> len_pick(2, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<CategorySet> toks;
        int len = len_pick(rng);
        for (int i = 0; i < len; ++i) {
            toks.push_back({random_category(rng, 2)});
        }
        Chart chart(toks, ParseOptions{});
        for (const Category& root : chart.categories(0, toks.size())) {
            for (const auto& d : chart.derivations(root, 64)) {
                CHECK(validate_derivation(*d, toks));
                CHECK(d->begin == 0);
                CHECK(d->end == toks.size());
                CHECK(d->category == root);
            }
        }
    }
}

TEST_CASE("maximal spans cover the failed chart") {
    std::vector<CategorySet> toks = {cats({"n"}), cats({"n"})};
    Chart chart(toks, ParseOptions{});
    auto spans = chart.maximal_spans();
    REQUIRE(spans.size() == 2);
    CHECK(spans[0] == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(spans[1] == std::pair<std::size_t, std::size_t>{1, 2});

    std::vector<CategorySet> toks2 = {cats({"np/n"}), cats({"n"}),
                                      cats({"n"})};
    Chart chart2(toks2, ParseOptions{});
    auto spans2 = chart2.maximal_spans();
    REQUIRE(spans2.size() == 2);
    CHECK(spans2[0] == std::pair<std::size_t, std::size_t>{0, 2});
    CHECK(spans2[1] == std::pair<std::size_t, std::size_t>{2, 3});
}
