// ccglex command line: corpus statistics, saturation curves, lexicon
// augmentation, parse-ability reports, schema validation and plain-text
// conversion over the annotated-corpus XML format.

#include "ccglex/corpus.hpp"
#include "ccglex/corpus_xml.hpp"
#include "ccglex/eval.hpp"
#include "ccglex/lexicon.hpp"
#include "ccglex/normalize.hpp"
#include "ccglex/report_io.hpp"
#include "ccglex/saturation.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace ccglex;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Atomic replace: write a sibling temp file, then rename over the target.
void atomic_write(const fs::path& path, const std::string& content) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write " + tmp.string());
        out << content;
        if (!out.flush())
            throw InputError("failed while writing " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw InputError("cannot replace " + path.string() + ": " +
                         ec.message());
    }
}

AnnotatedCorpus load_corpus(const fs::path& path) {
    std::string text = slurp(path);
    AnnotatedCorpus corpus = read_corpus_xml(text);
    validate_corpus(corpus);
    return corpus;
}

Lexicon load_lexicon(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    return Lexicon::read(in);
}

void ensure_out_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec && !fs::is_directory(dir))
        throw InputError("cannot create output directory " + dir.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Shared flags; the resolved values are echoed into every JSON output.
struct Options {
    std::string corpus;
    std::string lexicon;
    std::string out = ".";
    std::size_t samples = 15;
    double epsilon = kDefaultSaturationEpsilon;
    std::size_t window = kDefaultSaturationWindow;
    std::string root = "s";
    std::size_t cap = 256;
    bool conj_promotion = false;
    bool no_pos_fallback = false;
    bool all_words = false;
    std::vector<std::string> pos_filters;
    std::vector<std::string> term_files;
    std::string text;
    std::string tags;
    std::string url;
    std::string date;
    std::string out_file;
};

Json config_echo(const std::string& command, const Options& o,
                 std::initializer_list<const char*> keys) {
    Json j;
    j["command"] = command;
    for (const char* key : keys) {
        std::string k = key;
        if (k == "corpus") j["corpus"] = o.corpus;
        else if (k == "lexicon") j["lexicon"] = o.lexicon;
        else if (k == "out") j["out"] = o.out;
        else if (k == "samples") j["samples"] = o.samples;
        else if (k == "epsilon") j["epsilon"] = o.epsilon;
        else if (k == "window") j["window"] = o.window;
        else if (k == "root") j["root"] = o.root;
        else if (k == "derivation_cap") j["derivation_cap"] = o.cap;
        else if (k == "conj_promotion") j["conj_promotion"] = o.conj_promotion;
        else if (k == "pos_fallback") j["pos_fallback"] = !o.no_pos_fallback;
        else if (k == "all_words") j["all_words"] = o.all_words;
        else if (k == "pos_filters") j["pos_filters"] = o.pos_filters;
        else if (k == "term_files") j["term_files"] = o.term_files;
        else if (k == "text") j["text"] = o.text;
        else if (k == "tags") j["tags"] = o.tags;
        else if (k == "url") j["url"] = o.url;
        else if (k == "date") j["date"] = o.date;
        else if (k == "out_file") j["out_file"] = o.out_file;
    }
    return j;
}

int cmd_stats(const Options& o) {
    AnnotatedCorpus corpus = load_corpus(o.corpus);
    CorpusStats stats = corpus_stats(corpus);
    ensure_out_dir(o.out);
    Json config = config_echo("stats", o, {"corpus", "out"});

    Json body = stats_to_json(stats);
    Json out;
    out["config"] = config;
    for (auto& [k, v] : body.items()) out[k] = v;
    atomic_write(fs::path(o.out) / "stats.json", dump(out));

    std::ostringstream csv;
    write_sentence_kind_csv(stats, csv);
    atomic_write(fs::path(o.out) / "sentence_kinds.csv", csv.str());
    atomic_write(fs::path(o.out) / "run_config.json", dump(config));
    return kExitOk;
}

std::set<std::string> load_terms(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::set<std::string> terms;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::string norm = normalize_word(line);
        if (!norm.empty()) terms.insert(norm);
    }
    if (terms.empty())
        throw InputError("term file " + path.string() + " has no terms");
    return terms;
}

int cmd_saturate(const Options& o) {
    AnnotatedCorpus corpus = load_corpus(o.corpus);
    auto stream = token_stream(corpus);
    auto samples = segment(stream.size(), o.samples);

    struct Job {
        std::string file;
        SaturationCurve curve;
    };
    std::vector<Job> jobs;

    bool any_selector =
        o.all_words || !o.pos_filters.empty() || !o.term_files.empty();
    if (o.all_words || !any_selector) {
        jobs.push_back({"curve_all_words.csv",
                        new_type_curve(stream, samples,
                                       Selector::all_words(), o.epsilon,
                                       o.window)});
    }
    for (const std::string& name : o.pos_filters) {
        auto pos = pos_from_name(name);
        if (!pos) throw InputError("unknown pos filter '" + name + "'");
        jobs.push_back({"curve_pos_" + name + ".csv",
                        new_type_curve(stream, samples,
                                       Selector::pos_filter(*pos),
                                       o.epsilon, o.window)});
    }
    for (const std::string& file : o.term_files) {
        auto terms = load_terms(file);
        SaturationCurve curve = cumulative_frequency(stream, samples, terms);
        curve.saturation = saturation_index(curve, o.epsilon, o.window);
        jobs.push_back(
            {"curve_terms_" + fs::path(file).stem().string() + ".csv",
             std::move(curve)});
    }

    ensure_out_dir(o.out);
    for (const Job& job : jobs) {
        std::ostringstream csv;
        write_curve_csv(job.curve, csv);
        atomic_write(fs::path(o.out) / job.file, csv.str());
    }
    atomic_write(fs::path(o.out) / "run_config.json",
                 dump(config_echo("saturate", o,
                                  {"corpus", "out", "samples", "epsilon",
                                   "window", "all_words", "pos_filters",
                                   "term_files"})));
    return kExitOk;
}

int cmd_augment(const Options& o) {
    AnnotatedCorpus corpus = load_corpus(o.corpus);
    Lexicon lexicon = load_lexicon(o.lexicon);
    AugmentationReport report = lexicon.augment_from_corpus(corpus);
    CoverageReport coverage = lexicon.vocabulary_coverage(corpus);

    ensure_out_dir(o.out);
    Json config = config_echo("augment", o, {"corpus", "lexicon", "out"});
    std::ostringstream lex_text;
    lexicon.write(lex_text);
    atomic_write(fs::path(o.out) / "lexicon.txt", lex_text.str());

    Json body = augmentation_to_json(report);
    Json out;
    out["config"] = config;
    for (auto& [k, v] : body.items()) out[k] = v;
    out["coverage_after"] = coverage_to_json(coverage);
    atomic_write(fs::path(o.out) / "augmentation.json", dump(out));
    atomic_write(fs::path(o.out) / "run_config.json", dump(config));
    return kExitOk;
}

int cmd_parse(const Options& o) {
    AnnotatedCorpus corpus = load_corpus(o.corpus);
    Lexicon lexicon = load_lexicon(o.lexicon);

    EvalOptions opts;
    opts.parse.root = Category::parse(o.root);
    opts.parse.conj_promotion = o.conj_promotion;
    opts.parse.derivation_cap = o.cap;
    opts.pos_fallback = !o.no_pos_fallback;
    ParseReport report = parsing_ability(corpus, lexicon, opts);
    SvoProfile profile = svo_profile(report);

    ensure_out_dir(o.out);
    Json config = config_echo("parse", o,
                              {"corpus", "lexicon", "out", "root",
                               "derivation_cap", "conj_promotion",
                               "pos_fallback"});
    Json report_body = parse_report_to_json(report);
    Json out;
    out["config"] = config;
    for (auto& [k, v] : report_body.items()) out[k] = v;
    atomic_write(fs::path(o.out) / "parse_report.json", dump(out));

    Json svo_body = svo_profile_to_json(profile);
    Json svo;
    svo["config"] = config;
    for (auto& [k, v] : svo_body.items()) svo[k] = v;
    atomic_write(fs::path(o.out) / "svo_profile.json", dump(svo));

    std::ostringstream sentences;
    write_sentence_csv(report, sentences);
    atomic_write(fs::path(o.out) / "sentences.csv", sentences.str());

    std::ostringstream failures;
    write_failure_csv(report, failures);
    atomic_write(fs::path(o.out) / "failures.csv", failures.str());
    atomic_write(fs::path(o.out) / "run_config.json", dump(config));
    return kExitOk;
}

int cmd_validate(const Options& o) {
    AnnotatedCorpus corpus = load_corpus(o.corpus);
    CorpusStats stats = corpus_stats(corpus);
    std::cout << "OK: " << stats.documents << " documents, "
              << stats.sentences << " sentences, " << stats.tokens
              << " tokens\n";
    return kExitOk;
}

// One sentence per text line; the tags line carries whitespace-separated
// stem|pos or stem|pos|category annotations, one per token.
int cmd_convert(const Options& o) {
    std::istringstream text(slurp(o.text));
    std::istringstream tags(slurp(o.tags));

    Document doc;
    doc.url = o.url;
    doc.date = o.date;
    std::string text_line;
    std::string tag_line;
    std::size_t line_no = 0;
    while (std::getline(text, text_line)) {
        ++line_no;
        if (!std::getline(tags, tag_line))
            throw InputError("tags file ends before text line " +
                             std::to_string(line_no));
        std::istringstream words(text_line);
        std::istringstream annots(tag_line);
        Sentence sent;
        sent.id = "s" + std::to_string(line_no);
        std::string word;
        std::string annot;
        while (words >> word) {
            if (!(annots >> annot))
                throw InputError("line " + std::to_string(line_no) +
                                 ": fewer tags than words");
            std::vector<std::string> fields;
            std::stringstream splitter(annot);
            std::string field;
            while (std::getline(splitter, field, '|'))
                fields.push_back(field);
            if (fields.size() < 2 || fields.size() > 3)
                throw InputError("line " + std::to_string(line_no) +
                                 ": tag '" + annot +
                                 "' is not stem|pos[|cat]");
            AnnotatedToken t;
            t.word = word;
            t.stem = fields[0];
            auto pos = pos_from_name(fields[1]);
            if (!pos)
                throw InputError("line " + std::to_string(line_no) +
                                 ": invalid pos '" + fields[1] + "'");
            t.pos = *pos;
            if (fields.size() == 3) t.category = Category::parse(fields[2]);
            sent.tokens.push_back(std::move(t));
        }
        if (annots >> annot)
            throw InputError("line " + std::to_string(line_no) +
                             ": more tags than words");
        if (sent.tokens.empty())
            throw InputError("line " + std::to_string(line_no) +
                             ": empty sentence");
        doc.sentences.push_back(std::move(sent));
    }
    if (std::getline(tags, tag_line))
        throw InputError("more tag lines than text lines");

    AnnotatedCorpus corpus;
    corpus.documents.push_back(std::move(doc));
    validate_corpus(corpus);
    atomic_write(o.out_file, write_corpus_xml(corpus));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"CCG lexicon and corpus evaluation toolkit"};
    app.require_subcommand(1);
    app.set_config("--config");
    Options o;

    auto add_corpus = [&](CLI::App* cmd) {
        cmd->add_option("--corpus", o.corpus, "annotated corpus XML")
            ->required();
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", o.out, "output directory");
    };

    CLI::App* stats = app.add_subcommand("stats", "corpus statistics");
    add_corpus(stats);
    add_out(stats);

    CLI::App* saturate = app.add_subcommand("saturate", "saturation curves");
    add_corpus(saturate);
    add_out(saturate);
    saturate->add_option("-k,--samples", o.samples, "number of samples");
    saturate->add_option("--epsilon", o.epsilon, "saturation threshold");
    saturate->add_option("--window", o.window, "samples that must stay low");
    saturate->add_flag("--all-words", o.all_words, "track all word types");
    saturate->add_option("--pos", o.pos_filters,
                         "track types of one part of speech (repeatable)");
    saturate->add_option("--terms", o.term_files,
                         "term list file, one term per line (repeatable)");

    CLI::App* augment =
        app.add_subcommand("augment", "grow the lexicon from the corpus");
    add_corpus(augment);
    add_out(augment);
    augment->add_option("--lexicon", o.lexicon, "lexicon file")->required();

    CLI::App* parse = app.add_subcommand("parse", "parse-ability report");
    add_corpus(parse);
    add_out(parse);
    parse->add_option("--lexicon", o.lexicon, "lexicon file")->required();
    parse->add_option("--root", o.root, "root category for success");
    parse->add_option("--cap", o.cap, "derivations kept per sentence");
    parse->add_flag("--conj-promote", o.conj_promotion,
                    "enable bare-conjunction promotion");
    parse->add_flag("--no-pos-fallback", o.no_pos_fallback,
                    "do not fall back to pos default categories");

    CLI::App* validate = app.add_subcommand(
        "validate", "check corpus XML against the schema");
    add_corpus(validate);

    CLI::App* convert = app.add_subcommand(
        "convert", "build corpus XML from text and tag files");
    convert->add_option("--text", o.text, "one sentence per line")
        ->required();
    convert->add_option("--tags", o.tags, "stem|pos[|cat] tokens per line")
        ->required();
    convert->add_option("--url", o.url, "document source url")->required();
    convert->add_option("--date", o.date, "document ISO date");
    convert->add_option("--out-file", o.out_file, "output XML path")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (stats->parsed()) return cmd_stats(o);
        if (saturate->parsed()) return cmd_saturate(o);
        if (augment->parsed()) return cmd_augment(o);
        if (parse->parsed()) return cmd_parse(o);
        if (validate->parsed()) return cmd_validate(o);
        if (convert->parsed()) return cmd_convert(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const XmlError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const LexiconFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const CategoryParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
