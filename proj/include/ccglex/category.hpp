#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ccglex {

/// The closed set of atomic category names.
enum class Atom { S, NP, N, PP, Conj };

enum class SlashDir { Forward, Backward };

const char* atom_name(Atom a);

/// Returns the atom for a lowercase name, or throws std::invalid_argument.
Atom atom_from_name(std::string_view name);
bool is_atom_name(std::string_view name);

/// A CCG category: either an atom or a slashed functor over two
/// subcategories. Immutable, value semantics; copies share structure.
///
/// Text form is left-associative slash notation: "s\np/pp" reads as
/// "(s\np)/pp". A functor X/Y looks for Y to its right, X\Y for Y to
/// its left.
class Category {
public:
    static Category atomic(Atom a);
    static Category complex(const Category& result, SlashDir slash,
                            const Category& argument);

    /// Parses slash notation. Throws CategoryParseError with the byte
    /// offset of the first offending character.
    static Category parse(std::string_view text);

    bool is_atomic() const { return node_->atomic; }
    bool is_complex() const { return !node_->atomic; }

    Atom atom() const;        // atomic only
    Category result() const;  // complex only
    SlashDir slash() const;   // complex only
    Category argument() const; // complex only

    /// Minimal-parenthesis left-associative notation. Parsing the result
    /// reproduces this category structurally.
    std::string to_string() const;

    /// Structural comparison; total order used for deterministic
    /// iteration everywhere.
    int compare(const Category& other) const;

    friend bool operator==(const Category& a, const Category& b) {
        return a.compare(b) == 0;
    }
    friend bool operator!=(const Category& a, const Category& b) {
        return a.compare(b) != 0;
    }
    friend bool operator<(const Category& a, const Category& b) {
        return a.compare(b) < 0;
    }

private:
    struct Node {
        bool atomic;
        Atom atom;
        SlashDir slash;
        std::shared_ptr<const Node> result;
        std::shared_ptr<const Node> argument;
    };

    explicit Category(std::shared_ptr<const Node> node)
        : node_(std::move(node)) {}

    static int compare_nodes(const Node& a, const Node& b);
    static void format(const Node& n, std::string& out);

    std::shared_ptr<const Node> node_;
};

class CategoryParseError : public std::runtime_error {
public:
    CategoryParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

using CategorySet = std::set<Category>;

} // namespace ccglex
