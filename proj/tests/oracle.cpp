#include "oracle.hpp"

namespace ccglex::testing {

namespace {

// Substitution check for one rule schema: X/Y Y -> X and friends.
// Each candidate is rebuilt from the inputs and compared wholesale, so a
// transcription slip in the library's pattern matching cannot hide here.
void try_rule(Rule rule, const Category& left, const Category& right,
              std::vector<CombineResult>& out) {
    switch (rule) {
    case Rule::ForwardApplication:
        if (left.is_complex() && left.slash() == SlashDir::Forward) {
            Category x = left.result();
            Category y = left.argument();
            if (right == y) out.push_back({x, rule});
        }
        break;
    case Rule::BackwardApplication:
        if (right.is_complex() && right.slash() == SlashDir::Backward) {
            Category x = right.result();
            Category y = right.argument();
            if (left == y) out.push_back({x, rule});
        }
        break;
    case Rule::ForwardComposition:
        if (left.is_complex() && left.slash() == SlashDir::Forward &&
            right.is_complex() && right.slash() == SlashDir::Forward) {
            Category x = left.result();
            Category y = left.argument();
            Category z = right.argument();
            if (right == Category::complex(y, SlashDir::Forward, z))
                out.push_back(
                    {Category::complex(x, SlashDir::Forward, z), rule});
        }
        break;
    case Rule::BackwardComposition:
        if (left.is_complex() && left.slash() == SlashDir::Backward &&
            right.is_complex() && right.slash() == SlashDir::Backward) {
            Category y = left.result();
            Category z = left.argument();
            Category x = right.result();
            if (right == Category::complex(x, SlashDir::Backward, y))
                out.push_back(
                    {Category::complex(x, SlashDir::Backward, z), rule});
        }
        break;
    default: break;
    }
}

void close_under_promotion(std::set<Category>& cats) {
    Category conj = Category::atomic(Atom::Conj);
    if (!cats.count(conj)) return;
    for (const Category& p : conj_promotions(conj)) cats.insert(p);
}

std::set<Category> oracle_rec(const std::vector<CategorySet>& tokens,
                              std::size_t b, std::size_t e, bool promote) {
    std::set<Category> out;
    if (e - b == 1) {
        out = {tokens[b].begin(), tokens[b].end()};
        if (promote) close_under_promotion(out);
        return out;
    }
    for (std::size_t k = b + 1; k < e; ++k) {
        std::set<Category> lefts = oracle_rec(tokens, b, k, promote);
        std::set<Category> rights = oracle_rec(tokens, k, e, promote);
        for (const Category& l : lefts) {
            for (const Category& r : rights) {
                for (const auto& res : oracle_combine(l, r)) {
                    out.insert(res.category);
                }
            }
        }
    }
    if (promote) close_under_promotion(out);
    return out;
}

} // namespace

std::vector<CombineResult> oracle_combine(const Category& left,
                                          const Category& right) {
    std::vector<CombineResult> out;
    for (Rule rule :
         {Rule::ForwardApplication, Rule::BackwardApplication,
          Rule::ForwardComposition, Rule::BackwardComposition}) {
        try_rule(rule, left, right, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::set<Category> oracle_span_categories(
    const std::vector<CategorySet>& tokens, bool with_conj_promotion) {
    return oracle_rec(tokens, 0, tokens.size(), with_conj_promotion);
}

std::optional<std::size_t> oracle_saturation_index(
    const std::vector<std::size_t>& per_sample,
    const std::vector<std::size_t>& cumulative, double epsilon,
    std::size_t window) {
    std::size_t k = per_sample.size();
    if (k == 0) return std::nullopt;
    double bound = epsilon * static_cast<double>(cumulative.back());
    for (std::size_t i = 1; i <= k; ++i) {
        std::size_t examined = 0;
        bool all_low = true;
        for (std::size_t j = i + 1; j <= k && j <= i + window; ++j) {
            ++examined;
            if (static_cast<double>(per_sample[j - 1]) > bound)
                all_low = false;
        }
        if (examined >= 1 && all_low) return i;
    }
    return std::nullopt;
}

} // namespace ccglex::testing
