#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace targetrank {

using DocId = std::int64_t;
using TermId = std::uint32_t;

// Profiles are keyed by their (non-negative) network node id; the brand
// profile lives under this reserved id.
inline constexpr DocId kBrandDocId = -1;

using StopwordSet = std::unordered_set<std::string>;

// Lower-cases and splits on any non-alphanumeric byte; empty fragments are
// dropped. Bytes >= 0x80 (multi-byte UTF-8 sequences) count as word
// characters and pass through unchanged. No stemming.
std::vector<std::string> tokenize(std::string_view text);
std::vector<std::string> tokenize(std::string_view text, const StopwordSet& stopwords);

struct Document {
  DocId id = 0;
  std::vector<TermId> tokens;  // normalized tokens in text order, interned
  // occurrence counts per distinct term, ascending term id; derived from
  // tokens at corpus build so vectorization never re-sorts
  std::vector<std::pair<TermId, std::uint32_t>> counts;

  std::size_t token_count() const { return tokens.size(); }
  bool is_empty() const { return tokens.empty(); }
};

// All profile documents plus the brand document, with per-word document
// counts. Immutable once built; concurrent reads are safe.
class Corpus {
 public:
  // Rejects duplicate or negative profile ids and non-UTF-8 text. Documents
  // that tokenize to nothing are kept (they vectorize to zero).
  static Corpus build(const std::vector<std::pair<DocId, std::string>>& profiles,
                      const std::string& brand_text, const StopwordSet& stopwords = {});

  std::size_t num_documents() const { return docs_.size(); }  // m, brand included
  std::size_t vocabulary_size() const { return terms_.size(); }

  const std::string& term(TermId t) const { return terms_[t]; }
  std::optional<TermId> term_id(std::string_view word) const;
  // number of documents containing the word (h)
  std::uint32_t doc_frequency(TermId t) const { return doc_freq_[t]; }

  bool contains(DocId id) const { return index_.count(id) != 0; }
  const Document& document(DocId id) const;  // throws on unknown id
  const Document& brand() const { return document(kBrandDocId); }
  // brand first, then profiles in ascending id order
  const std::vector<Document>& documents() const { return docs_; }

  std::vector<DocId> empty_document_ids() const;
  std::vector<std::string> tokens_of(const Document& doc) const;

 private:
  std::vector<Document> docs_;
  std::unordered_map<DocId, std::size_t> index_;
  std::vector<std::string> terms_;
  std::unordered_map<std::string, TermId> term_ids_;
  std::vector<std::uint32_t> doc_freq_;
};

// Whole-file read with UTF-8 validation (used for the brand profile).
std::string read_text_file(const std::filesystem::path& path);

// JSON-lines profiles: one {"id": <int>, "text": <string>} object per line.
std::vector<std::pair<DocId, std::string>> load_profiles_jsonl(const std::filesystem::path& path);

// Directory of <id>.txt files.
std::vector<std::pair<DocId, std::string>> load_profiles_dir(const std::filesystem::path& dir);

// One word per line; empty lines ignored.
StopwordSet load_stopwords(const std::filesystem::path& path);

}  // namespace targetrank
