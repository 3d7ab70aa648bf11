#include "stylo/tagged_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <istream>
#include <set>
#include <sstream>

#include "stylo/error.hpp"

namespace stylo {

namespace {

namespace fs = std::filesystem;

struct LineReader {
    std::istream& in;
    std::string source;
    int lineno = 0;

    bool next(std::string& line) {
        if (!std::getline(in, line)) return false;
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(source + ":" + std::to_string(lineno) + ": " + msg);
    }
};

struct DocBuilder {
    std::string id, author, date_text, genre, title;
    std::vector<std::vector<Token>> sentences;
    std::vector<Token> current;
    bool has_data = false;

    void close_sentence() {
        if (!current.empty()) sentences.push_back(std::move(current));
        current.clear();
    }

    Document finish(const LineReader& r) {
        close_sentence();
        if (id.empty()) r.fail("missing #id header");
        if (author.empty()) r.fail("missing #author header");
        if (date_text.empty()) r.fail("missing #date header");
        auto date = Date::parse(date_text);
        if (!date) r.fail("invalid #date '" + date_text + "' (expected YYYY-MM-DD)");
        if (sentences.empty()) r.fail("document '" + id + "' has no tokens");
        Document doc;
        doc.meta.id = std::move(id);
        doc.meta.author = std::move(author);
        doc.meta.date = *date;
        if (!genre.empty()) doc.meta.genre = std::move(genre);
        if (!title.empty()) doc.meta.title = std::move(title);
        doc.sentences = std::move(sentences);
        return doc;
    }
};

void apply_header(DocBuilder& b, const LineReader& r, const std::string& line) {
    auto colon = line.find(':');
    if (colon == std::string::npos) r.fail("malformed header line (expected #key:value)");
    std::string key = line.substr(1, colon - 1);
    std::string value = line.substr(colon + 1);
    std::string* slot = nullptr;
    if (key == "id") slot = &b.id;
    else if (key == "author") slot = &b.author;
    else if (key == "date") slot = &b.date_text;
    else if (key == "genre") slot = &b.genre;
    else if (key == "title") slot = &b.title;
    else r.fail("unknown header key '" + key + "'");
    if (!slot->empty()) r.fail("duplicate #" + key + " header");
    *slot = value;
}

Token parse_data_line(const LineReader& r, const std::string& line) {
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos ||
        line.find('\t', t2 + 1) != std::string::npos)
        r.fail("expected 3 tab-separated fields");
    Token tok;
    tok.form = line.substr(0, t1);
    tok.lemma = line.substr(t1 + 1, t2 - t1 - 1);
    std::string code = line.substr(t2 + 1);
    if (tok.form.empty()) r.fail("empty form");
    auto pos = parse_pos_code(code);
    if (!pos) r.fail("unknown POS code " + code);
    tok.pos = *pos;
    if (is_punctuation(tok.pos)) {
        if (tok.lemma != tok.form) r.fail("punctuation lemma must equal form");
    } else if (tok.lemma.empty()) {
        r.fail("empty lemma");
    }
    return tok;
}

} // namespace

std::vector<Document> read_tagged(std::istream& in, const std::string& source) {
    LineReader reader{in, source};
    std::vector<Document> docs;
    DocBuilder builder;
    bool in_document = false;

    std::string line;
    while (reader.next(line)) {
        if (line.empty()) {
            builder.close_sentence();
            continue;
        }
        if (line[0] == '#') {
            if (builder.has_data) {
                // '#' after data resumes a new document.
                docs.push_back(builder.finish(reader));
                builder = DocBuilder{};
            }
            in_document = true;
            apply_header(builder, reader, line);
            continue;
        }
        in_document = true;
        builder.has_data = true;
        builder.current.push_back(parse_data_line(reader, line));
    }
    if (in_document) docs.push_back(builder.finish(reader));
    return docs;
}

std::vector<Document> read_tagged_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    return read_tagged(in, path);
}

Document parse_tagged(std::istream& in, const std::string& source) {
    auto docs = read_tagged(in, source);
    if (docs.empty()) throw ParseError(source + ": empty stream");
    if (docs.size() > 1)
        throw ParseError(source + ": expected a single document, found " +
                         std::to_string(docs.size()));
    return std::move(docs.front());
}

std::string serialize_tagged(const Document& doc) {
    std::string out;
    out += "#id:" + doc.meta.id + "\n";
    out += "#author:" + doc.meta.author + "\n";
    out += "#date:" + doc.meta.date.to_string() + "\n";
    if (doc.meta.genre) out += "#genre:" + *doc.meta.genre + "\n";
    if (doc.meta.title) out += "#title:" + *doc.meta.title + "\n";
    for (const auto& sentence : doc.sentences) {
        for (const auto& tok : sentence) {
            out += tok.form;
            out += '\t';
            out += tok.lemma;
            out += '\t';
            out += pos_code(tok.pos);
            out += '\n';
        }
        out += '\n';
    }
    return out;
}

std::string serialize_tagged(const std::vector<Document>& docs) {
    std::string out;
    for (const auto& d : docs) out += serialize_tagged(d);
    return out;
}

Manifest Manifest::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open manifest");
    fs::path base = fs::path(path).parent_path();
    auto resolve = [&](const std::string& p) {
        fs::path fp(p);
        return fp.is_absolute() ? fp.string() : (base / fp).string();
    };

    Manifest m;
    LineReader reader{in, path};
    std::string line;
    while (reader.next(line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) reader.fail("expected key<TAB>value");
        std::string key = line.substr(0, tab);
        std::string value = line.substr(tab + 1);
        if (value.empty()) reader.fail("empty value for key '" + key + "'");
        if (key == "doc") {
            m.document_paths.push_back(resolve(value));
        } else if (key == "norm") {
            if (!m.normalization_path.empty()) reader.fail("duplicate norm entry");
            m.normalization_path = resolve(value);
        } else {
            reader.fail("unknown manifest key '" + key + "'");
        }
    }
    if (m.document_paths.empty()) throw ParseError(path + ": manifest lists no documents");
    return m;
}

Corpus load_corpus(const std::string& manifest_path) {
    Manifest manifest = Manifest::load(manifest_path);

    Corpus corpus;
    if (!manifest.normalization_path.empty())
        corpus.normalization = NormalizationTable::load(manifest.normalization_path);

    // One parse task per file; results keep manifest order.
    struct FileResult {
        std::vector<Document> docs;
        std::string error;
    };
    std::vector<std::future<FileResult>> futures;
    futures.reserve(manifest.document_paths.size());
    for (const auto& path : manifest.document_paths) {
        futures.push_back(std::async(std::launch::async, [path]() {
            FileResult r;
            try {
                r.docs = read_tagged_file(path);
            } catch (const Error& e) {
                r.error = e.what();
            }
            return r;
        }));
    }

    std::vector<std::string> errors;
    for (auto& f : futures) {
        FileResult r = f.get();
        if (!r.error.empty()) {
            errors.push_back(r.error);
            continue;
        }
        for (auto& d : r.docs) corpus.documents.push_back(std::move(d));
    }

    std::set<std::string> seen;
    for (const auto& d : corpus.documents)
        if (!seen.insert(d.meta.id).second)
            errors.push_back(manifest_path + ": duplicate document id '" + d.meta.id + "'");

    if (!errors.empty()) {
        std::string msg = std::to_string(errors.size()) + " error(s) loading corpus:";
        for (const auto& e : errors) msg += "\n  " + e;
        throw ParseError(msg);
    }

    if (!corpus.normalization.empty())
        for (auto& d : corpus.documents)
            for (auto& sentence : d.sentences)
                for (auto& tok : sentence) tok.form = corpus.normalization.apply(tok.form);

    return corpus;
}

} // namespace stylo
