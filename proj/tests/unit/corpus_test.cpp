#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "hot/corpus.hpp"
#include "hot/errors.hpp"
#include "oracle.hpp"

namespace hot {
namespace {

IngestResult ingest_string(const std::string& s) {
  std::istringstream in(s);
  return ingest(in, Tokenizer());
}

TEST(Ingest, PreservesOrderAndIds) {
  const auto r = ingest_string(R"({"id":"b","text":"Second thing."}
{"id":"a","title":"T","text":"First thing."})");
  ASSERT_EQ(r.corpus.size(), 2u);
  EXPECT_EQ(r.corpus[0].id.str(), "b");
  EXPECT_EQ(r.corpus[1].title, "T");
  EXPECT_EQ(r.corpus.find(NodeId("a")), std::size_t{1});
}

TEST(Ingest, SkipsBlankLinesAndCountsEmptyText) {
  const auto r = ingest_string("\n{\"id\":\"a\",\"text\":\"  \"}\n\n{\"id\":\"b\",\"text\":\"Hello world.\"}\n");
  EXPECT_EQ(r.corpus.size(), 1u);
  EXPECT_EQ(r.skipped_empty, 1u);
}

TEST(Ingest, MissingTextNamesRecord) {
  try {
    (void)ingest_string("{\"id\":\"a\",\"text\":\"x y\"}\n\n{\"id\":\"b\"}\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(e.location().find("record 2"), std::string::npos) << e.location();
    EXPECT_NE(e.location().find("line 3"), std::string::npos) << e.location();
  }
}

TEST(Ingest, MalformedJsonAndBadTypes) {
  EXPECT_THROW((void)ingest_string("{not json}\n"), ParseError);
  EXPECT_THROW((void)ingest_string("{\"id\":1,\"text\":\"x\"}\n"), ParseError);
  EXPECT_THROW((void)ingest_string("{\"id\":\"a\",\"title\":3,\"text\":\"x\"}\n"), ParseError);
  EXPECT_THROW((void)ingest_string("{\"text\":\"x\"}\n"), ParseError);
}

TEST(Ingest, DuplicateIdIsNamed) {
  try {
    (void)ingest_string("{\"id\":\"dup\",\"text\":\"a b\"}\n{\"id\":\"dup\",\"text\":\"c d\"}\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("dup"), std::string::npos);
  }
}

TEST(Document, SentencesAreDenseAndTokenized) {
  const auto doc = make_document(NodeId("d"), "Title words", "Cats purr. Dogs bark loudly!", Tokenizer());
  ASSERT_EQ(doc.sentences.size(), 2u);
  EXPECT_EQ(doc.sentences[1].index, 1u);
  EXPECT_EQ(doc.sentences[1].doc_id.str(), "d");
  EXPECT_EQ(doc.sentences[1].tokens, (std::vector<std::string>{"dogs", "bark", "loudly"}));
  EXPECT_EQ(doc.tokens, (std::vector<std::string>{"cats", "purr", "dogs", "bark", "loudly"}));
  EXPECT_EQ(document_node_text(doc), "Title words\n\nCats purr. Dogs bark loudly!");
  const auto untitled = make_document(NodeId("u"), "", "Body only.", Tokenizer());
  EXPECT_EQ(document_node_text(untitled), "Body only.");
}

Corpus toy() {
  return testing::make_corpus({{"d1", "", "alpha alpha beta"}, {"d2", "", "beta gamma"}, {"d3", "", "gamma delta"}});
}

TEST(TfIdf, CountsAndIdf) {
  const auto stats = TfIdfStats::build(toy());
  EXPECT_EQ(stats.document_count(), 3u);
  EXPECT_EQ(std::vector<std::string>(stats.vocabulary().begin(), stats.vocabulary().end()),
            (std::vector<std::string>{"alpha", "beta", "delta", "gamma"}));
  const auto alpha = *stats.find_term("alpha");
  EXPECT_EQ(stats.df(alpha), 1u);
  EXPECT_EQ(stats.tf(alpha, 0), 2u);
  EXPECT_EQ(stats.tf(alpha, 1), 0u);
  EXPECT_DOUBLE_EQ(stats.idf(alpha), std::log(3.0));
  EXPECT_DOUBLE_EQ(tfidf("alpha", NodeId("d1"), stats), 2.0 * std::log(3.0));
  EXPECT_EQ(tfidf("alpha", NodeId("d2"), stats), 0.0);
}

TEST(TfIdf, ThreeTimesLnFive) {
  // tf=3, N=10, df=2.
  std::vector<std::vector<std::string>> docs{{"x0", "", "kiwi kiwi kiwi"}, {"x1", "", "kiwi"}};
  for (int i = 2; i < 10; ++i) docs.push_back({"x" + std::to_string(i), "", "filler"});
  const auto stats = TfIdfStats::build(testing::make_corpus(docs));
  EXPECT_NEAR(tfidf("kiwi", NodeId("x0"), stats), 4.828313737302301, 1e-12);
}

TEST(TfIdf, TermInEveryDocumentScoresZero) {
  const auto stats = TfIdfStats::build(testing::make_corpus({{"a", "", "common word"}, {"b", "", "common thing"}}));
  EXPECT_EQ(tfidf("common", NodeId("a"), stats), 0.0);
}

TEST(TfIdf, UnknownTermOrDocument) {
  const auto stats = TfIdfStats::build(toy());
  EXPECT_THROW((void)tfidf("zzz", NodeId("d1"), stats), InputError);
  EXPECT_THROW((void)tfidf("alpha", NodeId("nope"), stats), InputError);
}

// Property: df equals a brute-force document count; tfidf >= 0, and zero
// exactly when tf = 0 or df = N.
TEST(TfIdf, DocumentFrequencyMatchesBruteForce) {
  std::mt19937 gen(5);
  const std::vector<std::string> words{"apple", "pear", "plum", "fig", "lime", "kiwi", "date", "lemon"};
  for (int round = 0; round < 10; ++round) {
    std::vector<std::vector<std::string>> docs;
    const int n = 1 + static_cast<int>(gen() % 100);
    for (int d = 0; d < n; ++d) {
      std::string text;
      for (int k = 0, len = 1 + static_cast<int>(gen() % 12); k < len; ++k) text += words[gen() % words.size()] + " ";
      docs.push_back({"doc" + std::to_string(d), "", text});
    }
    const auto corpus = testing::make_corpus(docs);
    const auto stats = TfIdfStats::build(corpus);
    const auto df = oracle::document_frequency(corpus);
    ASSERT_EQ(stats.vocabulary_size(), df.size());
    for (const auto& [term, count] : df) {
      const auto t = *stats.find_term(term);
      ASSERT_EQ(stats.df(t), count) << term;
      ASSERT_GE(count, 1u);
      ASSERT_LE(count, corpus.size());
      for (const auto& doc : corpus.documents()) {
        const double v = tfidf(term, doc.id, stats);
        const auto tf = std::count(doc.tokens.begin(), doc.tokens.end(), term);
        ASSERT_GE(v, 0.0);
        ASSERT_EQ(v == 0.0, tf == 0 || count == corpus.size());
      }
    }
  }
}

TEST(SentenceScore, HandComputedToyValue) {
  const auto corpus = toy();
  const auto stats = TfIdfStats::build(corpus);
  // tokens [alpha, alpha, beta]: (2 ln 3 + ln 1.5) / 3.
  EXPECT_NEAR(sentence_score(corpus[0].sentences.at(0), stats), 0.8675632284814613, 1e-12);
}

TEST(SentenceScore, ZeroCases) {
  const auto corpus = testing::make_corpus({{"a", "", "shared words"}, {"b", "", "shared words"}});
  const auto stats = TfIdfStats::build(corpus);
  EXPECT_EQ(sentence_score(corpus[0].sentences.at(0), stats), 0.0);
  Sentence empty{NodeId("a"), 0, "", {}};
  EXPECT_EQ(sentence_score(empty, stats), 0.0);
  Sentence unknown{NodeId("a"), 0, "zz", {"zzz"}};
  EXPECT_EQ(sentence_score(unknown, stats), 0.0);
}

TEST(SentenceScore, InvariantUnderTokenReordering) {
  const auto corpus = testing::make_corpus({{"a", "", "red green blue red cyan"},
                                            {"b", "", "green magenta"},
                                            {"c", "", "blue yellow black"}});
  const auto stats = TfIdfStats::build(corpus);
  Sentence s = corpus[0].sentences.at(0);
  const double base = sentence_score(s, stats);
  std::mt19937 gen(3);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(s.tokens.begin(), s.tokens.end(), gen);
    EXPECT_EQ(sentence_score(s, stats), base);
  }
}

}  // namespace
}  // namespace hot
