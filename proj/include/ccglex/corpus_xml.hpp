#pragma once

#include "ccglex/corpus.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ccglex {

class XmlError : public std::runtime_error {
public:
    XmlError(const std::string& what, std::size_t line,
             const std::string& path);
    std::size_t line() const { return line_; }
    const std::string& path() const { return path_; }

private:
    std::size_t line_;
    std::string path_;
};

/// Reads the corpus interchange format:
///   corpus > document[url,date] > sentence[id] > word[stem,pos,cat?]
/// with the surface form as the word element's text. Lossless; optional
/// cat attributes are parsed as categories. Unknown elements or
/// attributes, bad pos values, malformed categories, duplicate sentence
/// ids and empty sentences all raise XmlError with line and element path.
AnnotatedCorpus read_corpus_xml(std::string_view text);
AnnotatedCorpus read_corpus_xml(std::istream& in);

/// Canonical form: fixed attribute order, two-space indent, LF endings,
/// minimal escaping (&, <, > everywhere; " additionally in attributes).
/// Writing the result of a read is a fixpoint: the bytes do not change
/// on a second write. Validates the corpus first.
std::string write_corpus_xml(const AnnotatedCorpus& corpus);
void write_corpus_xml(const AnnotatedCorpus& corpus, std::ostream& out);

} // namespace ccglex
