#include <cmath>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "targetrank/reference.hpp"
#include "targetrank/util.hpp"
#include "targetrank/vectorizer.hpp"

using namespace targetrank;

namespace {

// random small corpus (<= 10 docs, <= 50 distinct words) plus a brand text
Corpus random_corpus(Rng& rng) {
  std::vector<std::pair<DocId, std::string>> profiles;
  const auto docs = 1 + rng.below(9);
  auto random_text = [&] {
    std::string text;
    const auto words = rng.below(40);
    for (std::uint64_t w = 0; w < words; ++w) text += "w" + std::to_string(rng.below(50)) + " ";
    return text;
  };
  for (std::uint64_t d = 0; d < docs; ++d)
    profiles.emplace_back(static_cast<DocId>(d), random_text());
  return Corpus::build(profiles, random_text());
}

double weight_of(const SparseVector& v, const Corpus& c, const std::string& word) {
  auto t = c.term_id(word);
  REQUIRE(t.has_value());
  for (const auto& [term, w] : v.entries)
    if (term == *t) return w;
  return 0.0;
}

}  // namespace

TEST_CASE("term frequency is occurrence count over document length") {
  auto c = Corpus::build({{1, "a b a"}, {2, "b"}}, "z");
  CHECK(term_frequency("a", c.document(1), c) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(term_frequency("z", c.document(1), c) == 0.0);
  CHECK(term_frequency("nowhere", c.document(1), c) == 0.0);
  CHECK(term_frequency("b", c.document(2), c) == 1.0);

  auto empty = Corpus::build({{1, ""}}, "z");
  CHECK_THROWS_AS(term_frequency("z", empty.document(1), empty), std::domain_error);
}

TEST_CASE("inverse document frequency is ln(m/h)") {
  auto c = Corpus::build({{1, "a b"}, {2, "b c"}}, "c");  // m=3
  CHECK(inverse_document_frequency("a", c) == doctest::Approx(1.0986122886681098).epsilon(1e-15));
  CHECK_THROWS_AS(inverse_document_frequency("nope", c), std::domain_error);

  auto everywhere = Corpus::build({{1, "q a"}, {2, "q b"}}, "q c");
  CHECK(inverse_document_frequency("q", everywhere) == 0.0);

  auto four = Corpus::build({{1, "a"}, {2, "a"}, {3, "b"}}, "c");  // m=4, h(a)=2
  CHECK(inverse_document_frequency("a", four) == doctest::Approx(0.6931471805599453).epsilon(1e-15));
}

TEST_CASE("IDF strictly decreases as h grows at fixed m") {
  // h(rare)=1 < h(mid)=2 < h(all)=4
  auto c = Corpus::build({{1, "rare mid all"}, {2, "mid all"}, {3, "all"}}, "all");
  const double rare = inverse_document_frequency("rare", c);
  const double mid = inverse_document_frequency("mid", c);
  const double all = inverse_document_frequency("all", c);
  CHECK(rare > mid);
  CHECK(mid > all);
  CHECK(all == 0.0);
}

TEST_CASE("tfidf vector matches the hand-computed example") {
  auto c = Corpus::build({{1, "apple banana apple"}, {2, "banana cherry"}}, "cherry cherry");
  auto v = tfidf_vector(c.document(1), c);
  REQUIRE(v.entries.size() == 2);
  CHECK(weight_of(v, c, "apple") == doctest::Approx(0.7324081924454064).epsilon(1e-14));
  CHECK(weight_of(v, c, "banana") == doctest::Approx(0.13515503603605478).epsilon(1e-14));
  CHECK(v.norm == doctest::Approx(std::sqrt(0.7324081924454064 * 0.7324081924454064 +
                                            0.13515503603605478 * 0.13515503603605478))
                      .epsilon(1e-12));
}

TEST_CASE("empty and all-zero-IDF documents vectorize to the empty vector") {
  auto c = Corpus::build({{1, ""}}, "x");
  auto v = tfidf_vector(c.document(1), c);
  CHECK(v.entries.empty());
  CHECK(v.norm == 0.0);

  auto shared = Corpus::build({{1, "a"}}, "a");  // "a" occurs in every document
  CHECK(tfidf_vector(shared.document(1), shared).entries.empty());
}

TEST_CASE("tfidf vector of a foreign document is rejected") {
  auto c = Corpus::build({{1, "a"}}, "b");
  Document foreign;
  foreign.id = 99;
  CHECK_THROWS_AS(tfidf_vector(foreign, c), std::invalid_argument);
}

TEST_CASE("sparse vector invariants hold on random corpora") {
  Rng rng(7);
  for (int iter = 0; iter < 20; ++iter) {
    auto c = random_corpus(rng);
    for (const auto& doc : c.documents()) {
      auto v = tfidf_vector(doc, c);
      double sq = 0.0;
      TermId prev = 0;
      for (std::size_t i = 0; i < v.entries.size(); ++i) {
        const auto& [t, w] = v.entries[i];
        CHECK(w != 0.0);
        CHECK(w > 0.0);
        if (i > 0) CHECK(t > prev);
        prev = t;
        sq += w * w;
      }
      CHECK(v.norm * v.norm == doctest::Approx(sq).epsilon(1e-9));
    }
  }
}

TEST_CASE("cosine similarity basics") {
  SparseVector a{{{0, 1.0}, {1, 2.0}}, std::sqrt(5.0)};
  SparseVector b{{{0, 2.0}, {1, 1.0}}, std::sqrt(5.0)};
  CHECK(cosine_similarity(a, b) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(cosine_similarity(a, a) == doctest::Approx(1.0).epsilon(1e-12));

  SparseVector disjoint{{{5, 3.0}}, 3.0};
  CHECK(cosine_similarity(a, disjoint) == 0.0);

  SparseVector zero;
  CHECK(cosine_similarity(a, zero) == 0.0);
  CHECK(cosine_similarity(zero, zero) == 0.0);
}

TEST_CASE("cosine similarity is symmetric and bounded on random vectors") {
  Rng rng(21);
  auto random_vec = [&] {
    SparseVector v;
    double sq = 0.0;
    const auto n = rng.below(12);
    TermId t = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      t += 1 + static_cast<TermId>(rng.below(4));
      const double w = rng.unit() + 1e-6;
      v.entries.emplace_back(t, w);
      sq += w * w;
    }
    v.norm = std::sqrt(sq);
    return v;
  };
  for (int iter = 0; iter < 300; ++iter) {
    auto a = random_vec();
    auto b = random_vec();
    const double ab = cosine_similarity(a, b);
    CHECK(ab == cosine_similarity(b, a));  // bitwise symmetric
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
  }
}

TEST_CASE("cosine similarity ignores uniform scaling of one vector") {
  Rng rng(22);
  for (int iter = 0; iter < 100; ++iter) {
    SparseVector a, scaled;
    const double c = 0.001 + rng.unit() * 100.0;
    double sq = 0.0, sq_scaled = 0.0;
    for (TermId t = 0; t < 8; ++t) {
      if (rng.bernoulli(0.7)) {
        const double w = rng.unit() + 0.01;
        a.entries.emplace_back(t, w);
        scaled.entries.emplace_back(t, w * c);
        sq += w * w;
        sq_scaled += (w * c) * (w * c);
      }
    }
    a.norm = std::sqrt(sq);
    scaled.norm = std::sqrt(sq_scaled);
    SparseVector b{{{0, 0.4}, {2, 1.3}, {5, 0.2}, {9, 2.0}}, 0.0};
    double bsq = 0.0;
    for (auto& [t, w] : b.entries) bsq += w * w;
    b.norm = std::sqrt(bsq);
    CHECK(cosine_similarity(a, b) == doctest::Approx(cosine_similarity(scaled, b)).epsilon(1e-12));
  }
}

TEST_CASE("affinity endpoints") {
  auto same = Corpus::build({{1, "alpha beta"}, {2, "gamma"}}, "alpha beta");
  CHECK(affinity(1, same) == doctest::Approx(1.0).epsilon(1e-12));

  auto disjoint = Corpus::build({{1, "alpha beta"}, {2, "other"}}, "gamma delta");
  CHECK(affinity(1, disjoint) == 0.0);

  auto empty = Corpus::build({{1, ""}}, "brand words");
  CHECK(affinity(1, empty) == 0.0);

  CHECK_THROWS_AS(affinity(42, same), std::invalid_argument);
}

TEST_CASE("affinity matches the frozen dense-oracle value") {
  // d1 vs d2-as-brand within the 3-document corpus
  auto c = Corpus::build({{1, "apple banana apple"}, {3, "cherry cherry"}}, "banana cherry");
  CHECK(affinity(1, c) == doctest::Approx(0.12831948188497175).epsilon(1e-12));
  CHECK(affinity(1, c) == doctest::Approx(ref::dense_affinity(1, c)).epsilon(1e-9));
}

TEST_CASE("sparse results match the dense brute force on random corpora") {
  Rng rng(31);
  for (int iter = 0; iter < 30; ++iter) {
    auto c = random_corpus(rng);
    TfIdfModel model(c);
    for (const auto& doc : c.documents()) {
      if (doc.id == kBrandDocId) continue;
      const double sparse = affinity(doc.id, c);
      const double cached = model.affinity(doc.id);
      const double dense = ref::dense_affinity(doc.id, c);
      CHECK(sparse == doctest::Approx(dense).epsilon(1e-9));
      CHECK(cached == doctest::Approx(dense).epsilon(1e-9));
      CHECK(sparse >= 0.0);
      CHECK(sparse <= 1.0);
    }
  }
}

TEST_CASE("vector dump emits one JSON object per document") {
  auto c = Corpus::build({{1, "apple banana apple"}, {2, "banana cherry"}}, "cherry cherry");
  TfIdfModel model(c);
  std::ostringstream out;
  model.dump_jsonl(out);
  std::istringstream in(out.str());
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("id"));
    CHECK(j.contains("weights"));
    ++lines;
  }
  CHECK(lines == c.num_documents());
}
