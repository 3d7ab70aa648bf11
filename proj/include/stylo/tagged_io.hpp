#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stylo/corpus.hpp"

namespace stylo {

// Tagged document format, UTF-8 text:
//   header lines   #key:value     (keys: id, author, date, genre, title)
//   data lines     FORM<TAB>LEMMA<TAB>POS
//   blank line     ends the current sentence
//   '#' after data starts the next document of a multi-document stream
//
// id, author and date headers are required; date is an ISO-8601 day. POS
// codes come from the published table (see pos.hpp); an unknown code is a
// fatal parse error, never coerced.

// Parses every document in the stream. `source` names the stream in errors.
std::vector<Document> read_tagged(std::istream& in, const std::string& source);
std::vector<Document> read_tagged_file(const std::string& path);

// Parses a stream that must contain exactly one document.
Document parse_tagged(std::istream& in, const std::string& source = "<stream>");

// Canonical serialization; parse_tagged(serialize_tagged(d)) == d.
std::string serialize_tagged(const Document& doc);
std::string serialize_tagged(const std::vector<Document>& docs);

// Corpus manifest: line-oriented key-value text, one `key<TAB>value` pair
// per line. Keys: `doc` (a tagged file, repeatable) and `norm` (the
// normalization table, optional, at most once). Blank lines and lines
// starting with '#' are skipped. Relative paths resolve against the
// manifest's directory.
struct Manifest {
    std::vector<std::string> document_paths;
    std::string normalization_path; // empty if absent

    static Manifest load(const std::string& path);
};

// Loads everything listed in a manifest: parses all documents, applies the
// normalization table to every form, verifies document ids are unique.
// Collects all per-file errors and reports them together.
Corpus load_corpus(const std::string& manifest_path);

} // namespace stylo
