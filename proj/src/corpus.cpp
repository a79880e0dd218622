#include "targetrank/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "targetrank/util.hpp"

namespace targetrank {

namespace {

bool is_word_byte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c >= 0x80;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  static const StopwordSet kNone;
  return tokenize(text, kNone);
}

std::vector<std::string> tokenize(std::string_view text, const StopwordSet& stopwords) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      if (stopwords.empty() || !stopwords.count(cur)) out.push_back(cur);
      cur.clear();
    }
  };
  for (char ch : text) {
    auto c = static_cast<unsigned char>(ch);
    if (is_word_byte(c)) {
      cur.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : ch);
    } else {
      flush();
    }
  }
  flush();
  return out;
}

Corpus Corpus::build(const std::vector<std::pair<DocId, std::string>>& profiles,
                     const std::string& brand_text, const StopwordSet& stopwords) {
  if (profiles.empty()) throw std::invalid_argument("corpus: at least one user profile required");

  std::vector<std::pair<DocId, const std::string*>> ordered;
  ordered.reserve(profiles.size() + 1);
  ordered.emplace_back(kBrandDocId, &brand_text);
  for (const auto& [id, text] : profiles) {
    if (id < 0)
      throw std::invalid_argument("corpus: profile id " + std::to_string(id) +
                                  " is negative (reserved for the brand)");
    ordered.emplace_back(id, &text);
  }
  std::sort(ordered.begin() + 1, ordered.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 2; i < ordered.size(); ++i) {
    if (ordered[i].first == ordered[i - 1].first)
      throw std::invalid_argument("corpus: duplicate doc id " + std::to_string(ordered[i].first));
  }

  Corpus c;
  c.docs_.reserve(ordered.size());
  std::vector<TermId> sorted;
  for (const auto& [id, text] : ordered) {
    if (!is_valid_utf8(*text))
      throw std::runtime_error("corpus: document " +
                               (id == kBrandDocId ? std::string("<brand>") : std::to_string(id)) +
                               " is not valid UTF-8");
    Document doc;
    doc.id = id;
    for (auto& word : tokenize(*text, stopwords)) {
      auto [it, inserted] = c.term_ids_.try_emplace(word, static_cast<TermId>(c.terms_.size()));
      if (inserted) {
        c.terms_.push_back(std::move(word));
        c.doc_freq_.push_back(0);
      }
      doc.tokens.push_back(it->second);
    }
    sorted.assign(doc.tokens.begin(), doc.tokens.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
      std::size_t j = i + 1;
      while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
      doc.counts.emplace_back(sorted[i], static_cast<std::uint32_t>(j - i));
      ++c.doc_freq_[sorted[i]];
      i = j;
    }
    c.index_.emplace(id, c.docs_.size());
    c.docs_.push_back(std::move(doc));
  }
  return c;
}

std::optional<TermId> Corpus::term_id(std::string_view word) const {
  auto it = term_ids_.find(std::string(word));
  if (it == term_ids_.end()) return std::nullopt;
  return it->second;
}

const Document& Corpus::document(DocId id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw std::invalid_argument("corpus: unknown doc id " + std::to_string(id));
  return docs_[it->second];
}

std::vector<DocId> Corpus::empty_document_ids() const {
  std::vector<DocId> out;
  for (const auto& d : docs_)
    if (d.is_empty()) out.push_back(d.id);
  return out;
}

std::vector<std::string> Corpus::tokens_of(const Document& doc) const {
  std::vector<std::string> out;
  out.reserve(doc.tokens.size());
  for (TermId t : doc.tokens) out.push_back(terms_[t]);
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  if (!is_valid_utf8(text)) throw std::runtime_error(path.string() + " is not valid UTF-8");
  return text;
}

std::vector<std::pair<DocId, std::string>> load_profiles_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<std::pair<DocId, std::string>> out;
  std::unordered_set<DocId> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("id") || !j.contains("text") ||
        !j["id"].is_number_integer() || !j["text"].is_string())
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": expected {\"id\": <integer>, \"text\": <string>}");
    DocId id = j["id"].get<DocId>();
    if (!seen.insert(id).second)
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                               ": duplicate profile id " + std::to_string(id));
    out.emplace_back(id, j["text"].get<std::string>());
  }
  return out;
}

std::vector<std::pair<DocId, std::string>> load_profiles_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw std::runtime_error(dir.string() + " is not a directory");
  std::vector<std::pair<DocId, std::string>> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    const std::string stem = entry.path().stem().string();
    DocId id;
    try {
      std::size_t pos = 0;
      id = std::stoll(stem, &pos);
      if (pos != stem.size()) throw std::invalid_argument(stem);
    } catch (const std::exception&) {
      throw std::runtime_error(entry.path().string() + ": file name is not an integer node id");
    }
    out.emplace_back(id, read_text_file(entry.path()));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i].first == out[i - 1].first)
      throw std::runtime_error(dir.string() + ": duplicate profile id " +
                               std::to_string(out[i].first));
  }
  return out;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  StopwordSet words;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (!line.empty()) words.insert(line);
  }
  return words;
}

}  // namespace targetrank
