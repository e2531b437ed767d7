#pragma once

#include "ccglex/category.hpp"
#include "ccglex/rules.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace ccglex {

struct Derivation;
using DerivationPtr = std::shared_ptr<const Derivation>;

/// A binary parse tree over a token span [begin, end). LEX nodes are
/// leaves, CONJ-PROMOTE nodes have one child covering the same span,
/// binary rule nodes have two adjacent children.
struct Derivation {
    std::size_t begin;
    std::size_t end;
    Category category;
    Rule rule;
    std::vector<DerivationPtr> children;

    /// Canonical text key; total order over derivations of one sentence.
    std::string key() const;
};

/// Checks span structure and re-derives every node's category from its
/// children by the named rule. LEX leaf categories must come from the
/// token's category set.
bool validate_derivation(const Derivation& d,
                         const std::vector<CategorySet>& tokens);

struct ParseOptions {
    Category root = Category::atomic(Atom::S);
    bool conj_promotion = false;
    std::size_t derivation_cap = 256;
};

/// Packed CKY chart over per-token category sets. Cells hold every
/// derivable category with backpointers; derivations are unpacked on
/// demand. Construction is deterministic for identical inputs.
class Chart {
public:
    /// allow_empty_cells permits tokens with no categories (used by the
    /// failure diagnosis, where unknown tokens are legitimate holes).
    Chart(const std::vector<CategorySet>& tokens, const ParseOptions& opts,
          bool allow_empty_cells = false);

    std::size_t token_count() const { return n_; }

    CategorySet categories(std::size_t begin, std::size_t end) const;
    bool contains(std::size_t begin, std::size_t end,
                  const Category& c) const;

    /// Full-span derivations rooted at exactly `root`, sorted by
    /// Derivation::key, at most `cap` of them.
    std::vector<DerivationPtr> derivations(const Category& root,
                                           std::size_t cap) const;

    /// Non-empty spans not properly contained in any other non-empty
    /// span, sorted by (begin, end).
    std::vector<std::pair<std::size_t, std::size_t>> maximal_spans() const;

private:
    struct Back {
        Rule rule;
        std::size_t split = 0;             // binary only
        std::optional<Category> left;      // binary: left cat; unary: child
        std::optional<Category> right;     // binary only
    };
    using Cell = std::map<Category, std::vector<Back>>;

    Cell& cell(std::size_t b, std::size_t e) {
        return cells_[b * (n_ + 1) + e];
    }
    const Cell& cell(std::size_t b, std::size_t e) const {
        return cells_[b * (n_ + 1) + e];
    }

    void promote(std::size_t b, std::size_t e);
    std::vector<DerivationPtr> unpack(std::size_t b, std::size_t e,
                                      const Category& c,
                                      std::size_t limit) const;

    std::size_t n_;
    ParseOptions opts_;
    std::vector<Cell> cells_;
};

/// Parses a categorized sentence and returns all full-span derivations
/// whose root is exactly opts.root, sorted by canonical key and capped at
/// opts.derivation_cap. Empty result means parse failure. Throws
/// std::invalid_argument if the token list is empty or any category set
/// is empty (the message names the token index).
std::vector<DerivationPtr> cky_parse(const std::vector<CategorySet>& tokens,
                                     const ParseOptions& opts = {});

} // namespace ccglex
