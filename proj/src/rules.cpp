#include "ccglex/rules.hpp"

#include <algorithm>

namespace ccglex {

const char* rule_name(Rule r) {
    switch (r) {
    case Rule::Lex: return "LEX";
    case Rule::ForwardApplication: return "FA";
    case Rule::BackwardApplication: return "BA";
    case Rule::ForwardComposition: return "FC";
    case Rule::BackwardComposition: return "BC";
    case Rule::ConjPromotion: return "CONJ-PROMOTE";
    }
    return "?";
}

std::vector<CombineResult> combine(const Category& left,
                                   const Category& right) {
    std::vector<CombineResult> out;

    // FA: X/Y  Y -> X
    if (left.is_complex() && left.slash() == SlashDir::Forward &&
        left.argument() == right) {
        out.push_back({left.result(), Rule::ForwardApplication});
    }
    // BA: Y  X\Y -> X
    if (right.is_complex() && right.slash() == SlashDir::Backward &&
        right.argument() == left) {
        out.push_back({right.result(), Rule::BackwardApplication});
    }
    // FC: X/Y  Y/Z -> X/Z
    if (left.is_complex() && left.slash() == SlashDir::Forward &&
        right.is_complex() && right.slash() == SlashDir::Forward &&
        right.result() == left.argument()) {
        out.push_back({Category::complex(left.result(), SlashDir::Forward,
                                         right.argument()),
                       Rule::ForwardComposition});
    }
    // BC: Y\Z  X\Y -> X\Z
    if (left.is_complex() && left.slash() == SlashDir::Backward &&
        right.is_complex() && right.slash() == SlashDir::Backward &&
        right.argument() == left.result()) {
        out.push_back({Category::complex(right.result(), SlashDir::Backward,
                                         left.argument()),
                       Rule::BackwardComposition});
    }

    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Category> conj_promotions(const Category& c) {
    std::vector<Category> out;
    if (!c.is_atomic() || c.atom() != Atom::Conj) return out;
    for (Atom a : {Atom::S, Atom::NP, Atom::N, Atom::PP}) {
        Category x = Category::atomic(a);
        out.push_back(Category::complex(
            Category::complex(x, SlashDir::Backward, x), SlashDir::Forward,
            x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ccglex
