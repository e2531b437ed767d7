#include "ccglex/corpus_xml.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace ccglex {

XmlError::XmlError(const std::string& what, std::size_t line,
                   const std::string& path)
    : std::runtime_error("xml error at line " + std::to_string(line) +
                         " (" + path + "): " + what),
      line_(line),
      path_(path) {}

namespace {

class XmlReader {
public:
    explicit XmlReader(std::string_view text) : s_(text) {}

    AnnotatedCorpus run() {
        skip_misc();
        AnnotatedCorpus corpus;
        path_ = "/corpus";
        Tag root = open_tag();
        if (root.name != "corpus")
            fail("expected root element <corpus>, found <" + root.name + ">");
        require_no_attrs(root);
        if (!root.self_closing) {
            while (next_is_child()) {
                corpus.documents.push_back(read_document(
                    corpus.documents.size()));
            }
            close_tag("corpus");
        }
        skip_misc();
        if (pos_ != s_.size()) fail("trailing content after </corpus>");
        return corpus;
    }

private:
    struct Tag {
        std::string name;
        std::vector<std::pair<std::string, std::string>> attrs;
        bool self_closing = false;
        std::size_t line = 1;
    };

    [[noreturn]] void fail(const std::string& msg) const {
        throw XmlError(msg, line_at(pos_), path_);
    }
    [[noreturn]] void fail_at(const std::string& msg,
                              std::size_t offset) const {
        throw XmlError(msg, line_at(offset), path_);
    }

    std::size_t line_at(std::size_t offset) const {
        std::size_t line = 1;
        for (std::size_t i = 0; i < offset && i < s_.size(); ++i) {
            if (s_[i] == '\n') ++line;
        }
        return line;
    }

    static bool is_space(char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r';
    }
    static bool is_name_char(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
               (c >= '0' && c <= '9') || c == '_' || c == '-' || c == ':';
    }

    void skip_space() {
        while (pos_ < s_.size() && is_space(s_[pos_])) ++pos_;
    }

    // Whitespace, the XML declaration and comments between elements.
    void skip_misc() {
        for (;;) {
            skip_space();
            if (s_.compare(pos_, 5, "<?xml") == 0) {
                std::size_t end = s_.find("?>", pos_);
                if (end == std::string_view::npos)
                    fail("unterminated XML declaration");
                pos_ = end + 2;
                continue;
            }
            if (s_.compare(pos_, 4, "<!--") == 0) {
                std::size_t end = s_.find("-->", pos_);
                if (end == std::string_view::npos)
                    fail("unterminated comment");
                pos_ = end + 3;
                continue;
            }
            break;
        }
    }

    // True when the next markup opens a child element (and not an end tag).
    bool next_is_child() {
        skip_misc();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        if (s_[pos_] != '<') fail("unexpected text content");
        return s_.compare(pos_, 2, "</") != 0;
    }

    Tag open_tag() {
        skip_misc();
        if (pos_ >= s_.size() || s_[pos_] != '<') fail("expected element");
        Tag tag;
        tag.line = line_at(pos_);
        ++pos_;
        std::size_t name_start = pos_;
        while (pos_ < s_.size() && is_name_char(s_[pos_])) ++pos_;
        tag.name = std::string(s_.substr(name_start, pos_ - name_start));
        if (tag.name.empty()) fail("missing element name");
        for (;;) {
            skip_space();
            if (pos_ >= s_.size()) fail("unterminated tag");
            if (s_[pos_] == '>') {
                ++pos_;
                return tag;
            }
            if (s_.compare(pos_, 2, "/>") == 0) {
                pos_ += 2;
                tag.self_closing = true;
                return tag;
            }
            std::size_t attr_start = pos_;
            while (pos_ < s_.size() && is_name_char(s_[pos_])) ++pos_;
            if (pos_ == attr_start) fail("malformed tag");
            std::string name(s_.substr(attr_start, pos_ - attr_start));
            skip_space();
            if (pos_ >= s_.size() || s_[pos_] != '=')
                fail("attribute '" + name + "' has no value");
            ++pos_;
            skip_space();
            if (pos_ >= s_.size() || (s_[pos_] != '"' && s_[pos_] != '\''))
                fail("attribute '" + name + "' value is not quoted");
            char quote = s_[pos_];
            ++pos_;
            std::size_t val_start = pos_;
            while (pos_ < s_.size() && s_[pos_] != quote) ++pos_;
            if (pos_ >= s_.size())
                fail_at("unterminated attribute value", val_start);
            std::string value =
                decode(s_.substr(val_start, pos_ - val_start), val_start);
            ++pos_;
            tag.attrs.emplace_back(std::move(name), std::move(value));
        }
    }

    void close_tag(std::string_view name) {
        skip_misc();
        if (s_.compare(pos_, 2, "</") != 0)
            fail("expected </" + std::string(name) + ">");
        pos_ += 2;
        std::size_t start = pos_;
        while (pos_ < s_.size() && is_name_char(s_[pos_])) ++pos_;
        if (s_.substr(start, pos_ - start) != name)
            fail_at("mismatched end tag", start);
        skip_space();
        if (pos_ >= s_.size() || s_[pos_] != '>')
            fail("malformed end tag");
        ++pos_;
    }

    std::string decode(std::string_view raw, std::size_t base) const {
        std::string out;
        out.reserve(raw.size());
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (raw[i] != '&') {
                out += raw[i];
                continue;
            }
            std::size_t semi = raw.find(';', i);
            if (semi == std::string_view::npos)
                fail_at("unterminated entity reference", base + i);
            std::string_view ent = raw.substr(i + 1, semi - i - 1);
            if (ent == "amp") out += '&';
            else if (ent == "lt") out += '<';
            else if (ent == "gt") out += '>';
            else if (ent == "quot") out += '"';
            else if (ent == "apos") out += '\'';
            else if (!ent.empty() && ent[0] == '#') {
                long code = 0;
                try {
                    code = ent[1] == 'x' || ent[1] == 'X'
                               ? std::stol(std::string(ent.substr(2)),
                                           nullptr, 16)
                               : std::stol(std::string(ent.substr(1)));
                } catch (const std::exception&) {
                    fail_at("bad character reference", base + i);
                }
                if (code < 1 || code > 0x10FFFF)
                    fail_at("character reference out of range", base + i);
                append_utf8(out, static_cast<unsigned long>(code));
            } else {
                fail_at("unknown entity '&" + std::string(ent) + ";'",
                        base + i);
            }
            i = semi;
        }
        return out;
    }

    static void append_utf8(std::string& out, unsigned long cp) {
        if (cp < 0x80) {
            out += static_cast<char>(cp);
        } else if (cp < 0x800) {
            out += static_cast<char>(0xC0 | (cp >> 6));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else if (cp < 0x10000) {
            out += static_cast<char>(0xE0 | (cp >> 12));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        } else {
            out += static_cast<char>(0xF0 | (cp >> 18));
            out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
            out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
            out += static_cast<char>(0x80 | (cp & 0x3F));
        }
    }

    void require_no_attrs(const Tag& tag) {
        if (!tag.attrs.empty())
            fail("element <" + tag.name + "> takes no attribute '" +
                 tag.attrs.front().first + "'");
    }

    const std::string* find_attr(const Tag& tag, std::string_view name,
                                 bool required) {
        const std::string* found = nullptr;
        for (const auto& [k, v] : tag.attrs) {
            if (k == name) {
                if (found) fail("duplicate attribute '" + k + "'");
                found = &v;
            }
        }
        if (required && !found)
            fail("element <" + tag.name + "> is missing attribute '" +
                 std::string(name) + "'");
        return found;
    }

    void check_attrs(const Tag& tag,
                     std::initializer_list<std::string_view> allowed) {
        for (const auto& [k, v] : tag.attrs) {
            (void)v;
            if (std::find(allowed.begin(), allowed.end(), k) ==
                allowed.end())
                fail("element <" + tag.name + "> has unknown attribute '" +
                     k + "'");
        }
    }

    Document read_document(std::size_t index) {
        std::string saved = path_;
        path_ += "/document[" + std::to_string(index) + "]";
        Tag tag = open_tag();
        if (tag.name != "document")
            fail("unexpected element <" + tag.name + ">");
        check_attrs(tag, {"url", "date"});
        Document doc;
        doc.url = *find_attr(tag, "url", true);
        if (const std::string* date = find_attr(tag, "date", false))
            doc.date = *date;
        if (!doc.date.empty() && !is_iso_date(doc.date))
            fail("date '" + doc.date + "' is not an ISO-8601 calendar date");
        if (!tag.self_closing) {
            while (next_is_child()) {
                doc.sentences.push_back(
                    read_sentence(doc.sentences.size()));
            }
            close_tag("document");
        }
        for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
            for (std::size_t j = i + 1; j < doc.sentences.size(); ++j) {
                if (doc.sentences[i].id == doc.sentences[j].id)
                    fail("duplicate sentence id '" + doc.sentences[i].id +
                         "'");
            }
        }
        path_ = saved;
        return doc;
    }

    Sentence read_sentence(std::size_t index) {
        std::string saved = path_;
        path_ += "/sentence[" + std::to_string(index) + "]";
        Tag tag = open_tag();
        if (tag.name != "sentence")
            fail("unexpected element <" + tag.name + ">");
        check_attrs(tag, {"id"});
        Sentence sent;
        sent.id = *find_attr(tag, "id", true);
        if (tag.self_closing) fail("sentence has no tokens");
        while (next_is_child()) {
            sent.tokens.push_back(read_word(sent.tokens.size()));
        }
        close_tag("sentence");
        if (sent.tokens.empty()) fail("sentence has no tokens");
        path_ = saved;
        return sent;
    }

    AnnotatedToken read_word(std::size_t index) {
        std::string saved = path_;
        path_ += "/word[" + std::to_string(index) + "]";
        Tag tag = open_tag();
        if (tag.name != "word")
            fail("unexpected element <" + tag.name + ">");
        check_attrs(tag, {"stem", "pos", "cat"});
        AnnotatedToken tok;
        tok.stem = *find_attr(tag, "stem", true);
        const std::string& pos_text = *find_attr(tag, "pos", true);
        std::optional<Pos> pos = pos_from_name(pos_text);
        if (!pos)
            fail("invalid pos value '" + pos_text + "'");
        tok.pos = *pos;
        if (const std::string* cat = find_attr(tag, "cat", false)) {
            try {
                tok.category = Category::parse(*cat);
            } catch (const CategoryParseError& e) {
                fail(std::string("bad cat attribute: ") + e.what());
            }
        }
        if (tag.self_closing) fail("word has empty text");
        // Surface text runs to the end tag; no child elements allowed.
        std::size_t start = pos_;
        std::size_t lt = s_.find('<', pos_);
        if (lt == std::string_view::npos) fail("unterminated word element");
        tok.word = decode(s_.substr(start, lt - start), start);
        pos_ = lt;
        close_tag("word");
        if (tok.word.empty()) fail("word has empty text");
        path_ = saved;
        return tok;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::string path_ = "/";
};

void escape_text(std::string_view in, std::string& out) {
    for (char c : in) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
}

void escape_attr(std::string_view in, std::string& out) {
    for (char c : in) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
}

} // namespace

AnnotatedCorpus read_corpus_xml(std::string_view text) {
    return XmlReader(text).run();
}

AnnotatedCorpus read_corpus_xml(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    return read_corpus_xml(std::string_view(text));
}

std::string write_corpus_xml(const AnnotatedCorpus& corpus) {
    validate_corpus(corpus);
    std::string out;
    if (corpus.documents.empty()) {
        out = "<corpus/>\n";
        return out;
    }
    out += "<corpus>\n";
    for (const Document& d : corpus.documents) {
        out += "  <document url=\"";
        escape_attr(d.url, out);
        out += "\" date=\"";
        escape_attr(d.date, out);
        out += d.sentences.empty() ? "\"/>\n" : "\">\n";
        for (const Sentence& s : d.sentences) {
            out += "    <sentence id=\"";
            escape_attr(s.id, out);
            out += "\">\n";
            for (const AnnotatedToken& t : s.tokens) {
                out += "      <word stem=\"";
                escape_attr(t.stem, out);
                out += "\" pos=\"";
                out += pos_name(t.pos);
                out += '"';
                if (t.category) {
                    out += " cat=\"";
                    escape_attr(t.category->to_string(), out);
                    out += '"';
                }
                out += '>';
                escape_text(t.word, out);
                out += "</word>\n";
            }
            out += "    </sentence>\n";
        }
        if (!d.sentences.empty()) out += "  </document>\n";
    }
    out += "</corpus>\n";
    return out;
}

void write_corpus_xml(const AnnotatedCorpus& corpus, std::ostream& out) {
    out << write_corpus_xml(corpus);
}

} // namespace ccglex
