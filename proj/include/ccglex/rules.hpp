#pragma once

#include "ccglex/category.hpp"

#include <vector>

namespace ccglex {

enum class Rule {
    Lex,
    ForwardApplication,
    BackwardApplication,
    ForwardComposition,
    BackwardComposition,
    ConjPromotion,
};

/// Short labels: LEX, FA, BA, FC, BC, CONJ-PROMOTE.
const char* rule_name(Rule r);

struct CombineResult {
    Category category;
    Rule rule;

    friend bool operator==(const CombineResult& a, const CombineResult& b) {
        return a.rule == b.rule && a.category == b.category;
    }
    friend bool operator<(const CombineResult& a, const CombineResult& b) {
        if (a.category != b.category) return a.category < b.category;
        return static_cast<int>(a.rule) < static_cast<int>(b.rule);
    }
};

/// Every category derivable from (left, right) by exactly one binary rule:
///   FA:  X/Y  Y    -> X
///   BA:  Y    X\Y  -> X
///   FC:  X/Y  Y/Z  -> X/Z
///   BC:  Y\Z  X\Y  -> X\Z
/// Sorted, duplicate-free; empty when nothing applies.
std::vector<CombineResult> combine(const Category& left,
                                   const Category& right);

/// Unary promotion of a bare conjunction cell: the atom `conj` becomes
/// (a\a)/a for each non-conj atom a, so that after applying to the right
/// conjunct it yields a\a and coordination completes by application.
/// Empty unless `c` is exactly the conj atom.
std::vector<Category> conj_promotions(const Category& c);

} // namespace ccglex
