#include "ccglex/chart.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccglex {

std::string Derivation::key() const {
    // Rule rank leads so application-only readings order before composed
    // ones; the canonical first derivation is the plain hand trace.
    std::string out = "(";
    out += static_cast<char>('0' + static_cast<int>(rule));
    out += ' ';
    out += std::to_string(begin);
    out += '-';
    out += std::to_string(end);
    out += ' ';
    out += category.to_string();
    for (const auto& c : children) out += c->key();
    out += ')';
    return out;
}

bool validate_derivation(const Derivation& d,
                         const std::vector<CategorySet>& tokens) {
    switch (d.rule) {
    case Rule::Lex: {
        if (!d.children.empty()) return false;
        if (d.end != d.begin + 1 || d.begin >= tokens.size()) return false;
        return tokens[d.begin].count(d.category) > 0;
    }
    case Rule::ConjPromotion: {
        if (d.children.size() != 1) return false;
        const Derivation& c = *d.children[0];
        if (c.begin != d.begin || c.end != d.end) return false;
        auto targets = conj_promotions(c.category);
        if (std::find(targets.begin(), targets.end(), d.category) ==
            targets.end())
            return false;
        return validate_derivation(c, tokens);
    }
    default: {
        if (d.children.size() != 2) return false;
        const Derivation& l = *d.children[0];
        const Derivation& r = *d.children[1];
        if (l.begin != d.begin || r.end != d.end || l.end != r.begin)
            return false;
        bool found = false;
        for (const auto& cr : combine(l.category, r.category)) {
            if (cr.rule == d.rule && cr.category == d.category) found = true;
        }
        if (!found) return false;
        return validate_derivation(l, tokens) &&
               validate_derivation(r, tokens);
    }
    }
}

Chart::Chart(const std::vector<CategorySet>& tokens,
             const ParseOptions& opts, bool allow_empty_cells)
    : n_(tokens.size()), opts_(opts), cells_(n_ * (n_ + 1) + n_ + 1) {
    if (n_ == 0) throw std::invalid_argument("cannot parse zero tokens");
    if (!allow_empty_cells) {
        for (std::size_t i = 0; i < n_; ++i) {
            if (tokens[i].empty())
                throw std::invalid_argument(
                    "token " + std::to_string(i) +
                    " has an empty category set");
        }
    }

    for (std::size_t i = 0; i < n_; ++i) {
        Cell& c = cell(i, i + 1);
        for (const Category& cat : tokens[i]) {
            c[cat].push_back(Back{Rule::Lex, 0, std::nullopt, std::nullopt});
        }
        if (opts_.conj_promotion) promote(i, i + 1);
    }

    for (std::size_t len = 2; len <= n_; ++len) {
        for (std::size_t b = 0; b + len <= n_; ++b) {
            std::size_t e = b + len;
            Cell& target = cell(b, e);
            for (std::size_t k = b + 1; k < e; ++k) {
                const Cell& lc = cell(b, k);
                const Cell& rc = cell(k, e);
                for (const auto& [lcat, lbps] : lc) {
                    (void)lbps;
                    for (const auto& [rcat, rbps] : rc) {
                        (void)rbps;
                        for (const auto& res : combine(lcat, rcat)) {
                            target[res.category].push_back(
                                Back{res.rule, k, lcat, rcat});
                        }
                    }
                }
            }
            if (opts_.conj_promotion) promote(b, e);
        }
    }
}

void Chart::promote(std::size_t b, std::size_t e) {
    Cell& c = cell(b, e);
    Category conj = Category::atomic(Atom::Conj);
    auto it = c.find(conj);
    if (it == c.end()) return;
    for (const Category& promoted : conj_promotions(conj)) {
        c[promoted].push_back(
            Back{Rule::ConjPromotion, 0, conj, std::nullopt});
    }
}

CategorySet Chart::categories(std::size_t begin, std::size_t end) const {
    CategorySet out;
    for (const auto& [cat, bps] : cell(begin, end)) {
        (void)bps;
        out.insert(cat);
    }
    return out;
}

bool Chart::contains(std::size_t begin, std::size_t end,
                     const Category& c) const {
    return cell(begin, end).count(c) > 0;
}

std::vector<DerivationPtr> Chart::unpack(std::size_t b, std::size_t e,
                                         const Category& c,
                                         std::size_t limit) const {
    std::vector<DerivationPtr> out;
    auto it = cell(b, e).find(c);
    if (it == cell(b, e).end()) return out;
    for (const Back& bp : it->second) {
        if (out.size() >= limit) break;
        switch (bp.rule) {
        case Rule::Lex: {
            out.push_back(std::make_shared<Derivation>(
                Derivation{b, e, c, Rule::Lex, {}}));
            break;
        }
        case Rule::ConjPromotion: {
            for (auto& child : unpack(b, e, *bp.left, limit - out.size())) {
                out.push_back(std::make_shared<Derivation>(Derivation{
                    b, e, c, Rule::ConjPromotion, {std::move(child)}}));
            }
            break;
        }
        default: {
            auto lefts = unpack(b, bp.split, *bp.left, limit - out.size());
            for (auto& l : lefts) {
                if (out.size() >= limit) break;
                auto rights =
                    unpack(bp.split, e, *bp.right, limit - out.size());
                for (auto& r : rights) {
                    if (out.size() >= limit) break;
                    out.push_back(std::make_shared<Derivation>(
                        Derivation{b, e, c, bp.rule, {l, r}}));
                }
            }
            break;
        }
        }
    }
    return out;
}

std::vector<DerivationPtr> Chart::derivations(const Category& root,
                                              std::size_t cap) const {
    auto out = unpack(0, n_, root, cap);
    std::sort(out.begin(), out.end(),
              [](const DerivationPtr& a, const DerivationPtr& b) {
                  return a->key() < b->key();
              });
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Chart::maximal_spans()
    const {
    std::vector<std::pair<std::size_t, std::size_t>> filled;
    for (std::size_t b = 0; b < n_; ++b) {
        for (std::size_t e = b + 1; e <= n_; ++e) {
            if (!cell(b, e).empty()) filled.emplace_back(b, e);
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& s : filled) {
        bool contained = false;
        for (const auto& t : filled) {
            if (t == s) continue;
            if (t.first <= s.first && s.second <= t.second) {
                contained = true;
                break;
            }
        }
        if (!contained) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<DerivationPtr> cky_parse(const std::vector<CategorySet>& tokens,
                                     const ParseOptions& opts) {
    Chart chart(tokens, opts, /*allow_empty_cells=*/false);
    return chart.derivations(opts.root, opts.derivation_cap);
}

} // namespace ccglex
