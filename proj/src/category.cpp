#include "ccglex/category.hpp"

#include <array>
#include <cassert>

namespace ccglex {

namespace {

constexpr std::array<const char*, 5> kAtomNames = {"s", "np", "n", "pp",
                                                   "conj"};

} // namespace

const char* atom_name(Atom a) {
    return kAtomNames[static_cast<std::size_t>(a)];
}

Atom atom_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kAtomNames.size(); ++i) {
        if (name == kAtomNames[i]) return static_cast<Atom>(i);
    }
    throw std::invalid_argument("unknown atomic category name '" +
                                std::string(name) + "'");
}

bool is_atom_name(std::string_view name) {
    for (const char* n : kAtomNames) {
        if (name == n) return true;
    }
    return false;
}

CategoryParseError::CategoryParseError(const std::string& what,
                                       std::size_t offset)
    : std::runtime_error("category parse error at offset " +
                         std::to_string(offset) + ": " + what),
      offset_(offset) {}

Category Category::atomic(Atom a) {
    auto node = std::make_shared<Node>();
    node->atomic = true;
    node->atom = a;
    return Category(std::move(node));
}

Category Category::complex(const Category& result, SlashDir slash,
                           const Category& argument) {
    auto node = std::make_shared<Node>();
    node->atomic = false;
    node->atom = Atom::S;
    node->slash = slash;
    node->result = result.node_;
    node->argument = argument.node_;
    return Category(std::move(node));
}

Atom Category::atom() const {
    assert(node_->atomic);
    return node_->atom;
}

Category Category::result() const {
    assert(!node_->atomic);
    return Category(node_->result);
}

SlashDir Category::slash() const {
    assert(!node_->atomic);
    return node_->slash;
}

Category Category::argument() const {
    assert(!node_->atomic);
    return Category(node_->argument);
}

int Category::compare_nodes(const Node& a, const Node& b) {
    if (a.atomic != b.atomic) return a.atomic ? -1 : 1;
    if (a.atomic) {
        int av = static_cast<int>(a.atom);
        int bv = static_cast<int>(b.atom);
        return av < bv ? -1 : (av > bv ? 1 : 0);
    }
    if (int c = compare_nodes(*a.result, *b.result); c != 0) return c;
    if (a.slash != b.slash)
        return a.slash == SlashDir::Forward ? -1 : 1;
    return compare_nodes(*a.argument, *b.argument);
}

int Category::compare(const Category& other) const {
    return compare_nodes(*node_, *other.node_);
}

void Category::format(const Node& n, std::string& out) {
    if (n.atomic) {
        out += atom_name(n.atom);
        return;
    }
    format(*n.result, out);
    out += n.slash == SlashDir::Forward ? '/' : '\\';
    if (n.argument->atomic) {
        format(*n.argument, out);
    } else {
        out += '(';
        format(*n.argument, out);
        out += ')';
    }
}

std::string Category::to_string() const {
    std::string out;
    format(*node_, out);
    return out;
}

namespace {

// Recursive-descent parser for left-associative slash notation:
//   category := operand (slash operand)*
//   operand  := atom | '(' category ')'
class NotationParser {
public:
    explicit NotationParser(std::string_view text) : text_(text) {}

    Category run() {
        if (text_.empty())
            throw CategoryParseError("empty category text", 0);
        Category c = parse_category();
        if (pos_ != text_.size())
            throw CategoryParseError("unexpected character '" +
                                         std::string(1, text_[pos_]) + "'",
                                     pos_);
        return c;
    }

private:
    Category parse_category() {
        Category acc = parse_operand();
        while (pos_ < text_.size() &&
               (text_[pos_] == '/' || text_[pos_] == '\\')) {
            SlashDir dir = text_[pos_] == '/' ? SlashDir::Forward
                                              : SlashDir::Backward;
            std::size_t slash_at = pos_;
            ++pos_;
            if (pos_ == text_.size())
                throw CategoryParseError("trailing slash", slash_at);
            acc = Category::complex(acc, dir, parse_operand());
        }
        return acc;
    }

    Category parse_operand() {
        if (pos_ >= text_.size())
            throw CategoryParseError("expected category", pos_);
        if (text_[pos_] == '(') {
            std::size_t open_at = pos_;
            ++pos_;
            Category inner = parse_category();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw CategoryParseError("unbalanced '('", open_at);
            ++pos_;
            return inner;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= 'a' &&
               text_[pos_] <= 'z') {
            ++pos_;
        }
        if (pos_ == start)
            throw CategoryParseError("unexpected character '" +
                                         std::string(1, text_[pos_]) + "'",
                                     pos_);
        std::string_view name = text_.substr(start, pos_ - start);
        if (!is_atom_name(name))
            throw CategoryParseError("unknown atomic category '" +
                                         std::string(name) + "'",
                                     start);
        return Category::atomic(atom_from_name(name));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Category Category::parse(std::string_view text) {
    return NotationParser(text).run();
}

} // namespace ccglex
