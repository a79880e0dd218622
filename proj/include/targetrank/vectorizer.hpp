#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "targetrank/corpus.hpp"

namespace targetrank {

// TF-IDF weights of one document; zero entries are omitted and entries are
// sorted by term id. `norm` caches the Euclidean norm.
struct SparseVector {
  std::vector<std::pair<TermId, double>> entries;
  double norm = 0.0;

  bool empty() const { return entries.empty(); }
};

// occurrences of `word` in the document / total tokens; throws for empty
// documents (TF is undefined there; callers fall back to the zero vector)
double term_frequency(std::string_view word, const Document& doc, const Corpus& corpus);

// ln(m / h); throws if the word occurs in no corpus document
double inverse_document_frequency(std::string_view word, const Corpus& corpus);

// One entry per distinct word with weight TF*IDF; words occurring in every
// document (IDF = 0) are dropped. Empty documents give the empty vector.
SparseVector tfidf_vector(const Document& doc, const Corpus& corpus);

// Dot product over the shared support divided by the cached norms, clamped
// to [0, 1]. Zero-norm inputs give 0.
double cosine_similarity(const SparseVector& a, const SparseVector& b);

// Cosine similarity between the user's and the brand's TF-IDF vectors.
double affinity(DocId user, const Corpus& corpus);

// All document vectors materialized once against a fixed corpus; immutable
// afterwards, so lookups are safe from any thread.
class TfIdfModel {
 public:
  explicit TfIdfModel(const Corpus& corpus);

  const SparseVector& vector_of(DocId id) const;
  const SparseVector& brand_vector() const { return vector_of(kBrandDocId); }
  double affinity(DocId user) const;

  // Debug dump, one {"id": ..., "weights": {word: weight}} object per line.
  void dump_jsonl(std::ostream& out) const;

 private:
  const Corpus* corpus_;
  std::vector<double> idf_;             // per-term ln(m/h), computed once
  std::vector<SparseVector> vectors_;   // aligned with corpus.documents()
  std::vector<double> brand_weights_;   // brand vector scattered over term ids
};

}  // namespace targetrank
