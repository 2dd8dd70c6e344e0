#include "compsum/search.h"

#include <gtest/gtest.h>

#include <cmath>

#include "compsum/error.h"

namespace compsum {
namespace {

DocumentRecord doc(const std::string& id, const std::vector<std::string>& sentences) {
  DocumentRecord r;
  r.doc_id = id;
  r.source = id + ".html";
  r.title = "Title " + id;
  for (size_t i = 0; i < sentences.size(); ++i) {
    r.sentences[static_cast<int>(i)].text = sentences[i];
  }
  return r;
}

std::vector<DocumentRecord> corpus() {
  return {doc("a", {"The placement cell is busy.", "Placement drives run yearly."}),
          doc("b", {"Our placement office opens daily."}),
          doc("c", {"Hostel rooms are clean."})};
}

TEST(SearchIndex, ScoresAreTfTimesSmoothedIdf) {
  SearchIndex index(corpus());
  EXPECT_EQ(index.document_count(), 3u);
  EXPECT_EQ(index.term_frequency("a", "placement"), 2);
  EXPECT_EQ(index.term_frequency("zzz", "placement"), 0);
  auto hits = index.search("placement", 10);
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_EQ(hits[0].doc_id, "a");
  EXPECT_NEAR(hits[0].score, 2 * std::log(1 + 3.0 / 2), 1e-12);
  EXPECT_EQ(hits[1].doc_id, "b");
  EXPECT_NEAR(hits[1].score, std::log(1 + 3.0 / 2), 1e-12);
  EXPECT_EQ(hits[0].snippet, "The placement cell is busy.");
  EXPECT_EQ(hits[0].title, "Title a");
  EXPECT_EQ(hits[0].source, "a.html");
}

TEST(SearchIndex, RareTermOutweighsCommonTerm) {
  SearchIndex index(corpus());
  auto hits = index.search("placement hostel", 10);
  ASSERT_EQ(hits.size(), 3u);
  EXPECT_EQ(hits[0].doc_id, "a");
  EXPECT_EQ(hits[1].doc_id, "c");
  EXPECT_EQ(hits[2].doc_id, "b");
}

TEST(SearchIndex, NoHitsIsEmpty) {
  SearchIndex index(corpus());
  EXPECT_TRUE(index.search("astronomy", 10).empty());
}

TEST(SearchIndex, TiesRankByDocId) {
  SearchIndex index({doc("zeta", {"Labs open."}), doc("alpha", {"Labs open."}),
                     doc("mid", {"Other text."})});
  auto hits = index.search("labs", 10);
  ASSERT_EQ(hits.size(), 2u);
  EXPECT_EQ(hits[0].doc_id, "alpha");
  EXPECT_EQ(hits[1].doc_id, "zeta");
  EXPECT_EQ(index.search("labs", 1).size(), 1u);
}

TEST(SearchIndex, SnippetFallsBackToFirstSentence) {
  SearchIndex index({doc("a", {"Welcome.", "Hostel rooms."}), doc("b", {"Labs."})});
  auto hits = index.search("hostel", 5);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].snippet, "Hostel rooms.");
}

TEST(SearchIndex, RejectsEmptyQueriesAndBadLimits) {
  SearchIndex index(corpus());
  for (const char* q : {"", "   ", "the of and"}) {
    try {
      index.search(q, 10);
      ADD_FAILURE() << q;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kEmptyQuery) << q;
    }
  }
  try {
    index.search("placement", 0);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

}  // namespace
}  // namespace compsum
