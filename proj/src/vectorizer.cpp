#include "targetrank/vectorizer.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "targetrank/util.hpp"

namespace targetrank {

double term_frequency(std::string_view word, const Document& doc, const Corpus& corpus) {
  if (doc.is_empty())
    throw std::domain_error("term frequency undefined for empty document " +
                            std::to_string(doc.id));
  auto t = corpus.term_id(word);
  if (!t) return 0.0;
  auto it = std::lower_bound(doc.counts.begin(), doc.counts.end(), *t,
                             [](const auto& entry, TermId term) { return entry.first < term; });
  if (it == doc.counts.end() || it->first != *t) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(doc.token_count());
}

double inverse_document_frequency(std::string_view word, const Corpus& corpus) {
  auto t = corpus.term_id(word);
  if (!t)
    throw std::domain_error("IDF undefined: word \"" + std::string(word) +
                            "\" occurs in no corpus document");
  auto m = static_cast<double>(corpus.num_documents());
  auto h = static_cast<double>(corpus.doc_frequency(*t));
  return std::log(m / h);
}

namespace {

// TF*IDF entries from the document's precomputed term counts; idf(t) must
// equal ln(m / doc_frequency(t))
template <typename IdfLookup>
void build_entries(const Document& doc, IdfLookup&& idf, SparseVector& v) {
  v.entries.clear();
  v.norm = 0.0;
  if (doc.is_empty()) return;

  v.entries.reserve(doc.counts.size());
  const auto len = static_cast<double>(doc.token_count());
  double sq = 0.0;
  for (const auto& [t, n] : doc.counts) {
    const double idf_t = idf(t);
    if (idf_t == 0.0) continue;
    const double weight = (static_cast<double>(n) / len) * idf_t;
    v.entries.emplace_back(t, weight);
    sq += weight * weight;
  }
  v.norm = std::sqrt(sq);
}

}  // namespace

SparseVector tfidf_vector(const Document& doc, const Corpus& corpus) {
  if (!corpus.contains(doc.id))
    throw std::invalid_argument("tfidf_vector: document " + std::to_string(doc.id) +
                                " does not belong to the corpus");
  SparseVector v;
  const auto m = static_cast<double>(corpus.num_documents());
  build_entries(
      doc, [&](TermId t) { return std::log(m / static_cast<double>(corpus.doc_frequency(t))); },
      v);
  return v;
}

double cosine_similarity(const SparseVector& a, const SparseVector& b) {
  if (a.norm == 0.0 || b.norm == 0.0) return 0.0;
  double dot = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return std::clamp(dot / (a.norm * b.norm), 0.0, 1.0);
}

double affinity(DocId user, const Corpus& corpus) {
  const auto& doc = corpus.document(user);
  return cosine_similarity(tfidf_vector(doc, corpus), tfidf_vector(corpus.brand(), corpus));
}

TfIdfModel::TfIdfModel(const Corpus& corpus) : corpus_(&corpus) {
  const auto& docs = corpus.documents();
  const auto vocab = corpus.vocabulary_size();
  const auto m = static_cast<double>(corpus.num_documents());

  idf_.resize(vocab);
  for (TermId t = 0; t < vocab; ++t)
    idf_[t] = std::log(m / static_cast<double>(corpus.doc_frequency(t)));

  vectors_.resize(docs.size());
  std::vector<std::uint32_t> nnz(docs.size(), 0);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < docs.size(); ++i) {
    std::uint32_t n = 0;
    for (const auto& [t, count] : docs[i].counts)
      if (idf_[t] != 0.0) ++n;
    nnz[i] = n;
  }
  // allocations stay on one thread; concurrent malloc is the bottleneck here
  for (std::size_t i = 0; i < docs.size(); ++i) vectors_[i].entries.resize(nnz[i]);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const auto& doc = docs[i];
    SparseVector& v = vectors_[i];
    const auto len = static_cast<double>(doc.token_count());
    double sq = 0.0;
    std::size_t w = 0;
    for (const auto& [t, n] : doc.counts) {
      const double idf_t = idf_[t];
      if (idf_t == 0.0) continue;
      const double weight = (static_cast<double>(n) / len) * idf_t;
      v.entries[w] = {t, weight};
      ++w;
      sq += weight * weight;
    }
    v.norm = std::sqrt(sq);
  }

  brand_weights_.assign(vocab, 0.0);
  for (const auto& [t, weight] : brand_vector().entries) brand_weights_[t] = weight;
}

const SparseVector& TfIdfModel::vector_of(DocId id) const {
  const auto& doc = corpus_->document(id);
  return vectors_[static_cast<std::size_t>(&doc - corpus_->documents().data())];
}

double TfIdfModel::affinity(DocId user) const {
  const SparseVector& v = vector_of(user);
  const SparseVector& b = brand_vector();
  if (v.norm == 0.0 || b.norm == 0.0) return 0.0;
  double dot = 0.0;
  for (const auto& [t, weight] : v.entries) dot += weight * brand_weights_[t];
  return std::clamp(dot / (v.norm * b.norm), 0.0, 1.0);
}

void TfIdfModel::dump_jsonl(std::ostream& out) const {
  const auto& docs = corpus_->documents();
  for (std::size_t i = 0; i < docs.size(); ++i) {
    nlohmann::json weights = nlohmann::json::object();
    for (const auto& [t, weight] : vectors_[i].entries) weights[corpus_->term(t)] = weight;
    nlohmann::json line = {{"id", docs[i].id}, {"weights", std::move(weights)}};
    out << line.dump() << '\n';
  }
}

}  // namespace targetrank
