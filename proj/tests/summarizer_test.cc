#include "compsum/summarizer.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "compsum/error.h"
#include "compsum/ingest.h"
#include "compsum/pipeline.h"
#include "compsum/text.h"
#include "oracles.h"
#include "test_support.h"

namespace compsum {
namespace {

ConceptBlock block(int id, ConceptList concepts) {
  ConceptBlock b;
  b.id = id;
  b.doc_id = "d";
  b.concepts = std::move(concepts);
  return b;
}

Sentence sentence(const std::string& text, EmphasisSet emphasis = {},
                  int sibling_index = 0, int sibling_count = 1) {
  Sentence s;
  s.text = text;
  s.tokens = tokenize(text);
  s.emphasis = emphasis;
  s.sibling_index = sibling_index;
  s.sibling_count = sibling_count;
  return s;
}

std::set<std::string> matching_terms(const FeatureQuery& fq) {
  std::set<std::string> out(fq.query_terms.begin(), fq.query_terms.end());
  out.insert(fq.feature_terms.begin(), fq.feature_terms.end());
  return out;
}

oracle::ScoredInput oracle_input(const Sentence& s) {
  oracle::ScoredInput in;
  in.seq_no = s.seq_no;
  for (const auto& token : s.tokens) {
    in.terms.push_back(normalize_term(token, Lexicon::bundled()));
  }
  in.strong_tag = s.emphasis.contains(Emphasis::kBold) ||
                  s.emphasis.contains(Emphasis::kUnderline) ||
                  s.emphasis.contains(Emphasis::kItalics) ||
                  s.emphasis.contains(Emphasis::kCaption) ||
                  s.emphasis.contains(Emphasis::kParagraphTitle);
  in.color_tag = s.emphasis.contains(Emphasis::kColorChange);
  in.sibling_index = s.sibling_index;
  in.sibling_count = s.sibling_count;
  return in;
}

TEST(FeatureQuery, NormalisesAndDedupes) {
  auto fq = make_feature_query("Engineering colleges", {"placement, placements", "Recruiters"});
  EXPECT_EQ(fq.query_terms.size(), 2u);
  EXPECT_EQ(fq.feature_terms,
            (std::vector<std::string>{normalize_term("placement", Lexicon::bundled()),
                                      normalize_term("recruiters", Lexicon::bundled())}));
  EXPECT_THROW(make_feature_query("x", {"the", ""}), Error);
}

TEST(Synonyms, ParseAndMatch) {
  auto syn = parse_synonyms("# comment\nRecruiters, employers, hirers\n\nlone\n");
  ASSERT_EQ(syn.size(), 1u);
  const std::string recruit = normalize_term("recruiters", Lexicon::bundled());
  const std::string employ = normalize_term("employers", Lexicon::bundled());
  ASSERT_TRUE(syn.contains(recruit));
  EXPECT_EQ(syn.at(recruit).size(), 2u);

  auto fq = make_feature_query("", {"recruiters"}, syn);
  EXPECT_TRUE(fq.matches_feature(employ));
  EXPECT_FALSE(fq.matches_feature("hostel"));

  // A synonym occurrence counts like the canonical term.
  WeightParams p;
  double with_syn = sentence_weight(sentence("Top employers visit."), fq, p);
  double with_term = sentence_weight(sentence("Top recruiters visit."), fq, p);
  EXPECT_DOUBLE_EQ(with_syn, with_term);
}

TEST(FeatureBlockSimilarity, Examples) {
  auto fq = make_feature_query("", {"placement"});
  const std::string a = fq.feature_terms[0];
  EXPECT_NEAR(feature_block_similarity(fq, block(0, {{a, 3}, {"hostel", 4}})), 0.6, 1e-12);
  EXPECT_EQ(feature_block_similarity(fq, block(0, {{"hostel", 4}})), 0.0);

  auto both = make_feature_query("", {"placement", "recruiters"});
  EXPECT_EQ(feature_block_similarity(
                both, block(0, {{both.feature_terms[0], 3}, {both.feature_terms[1], 3}})),
            1.0);
  try {
    feature_block_similarity(fq, block(0, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUndefinedSimilarity);
  }
}

TEST(SelectBestBlock, TiesEmptiesAndNoMatch) {
  auto fq = make_feature_query("", {"placement"});
  const std::string a = fq.feature_terms[0];
  std::vector<ConceptBlock> blocks = {block(0, {}), block(1, {{"x", 1}}),
                                      block(2, {{a, 1}, {"x", 1}}),
                                      block(3, {{a, 1}, {"y", 1}})};
  auto choice = select_best_block(fq, blocks);
  ASSERT_TRUE(choice);
  EXPECT_EQ(choice->index, 2u);
  EXPECT_NEAR(choice->similarity, 1 / std::sqrt(2.0), 1e-12);

  EXPECT_FALSE(select_best_block(fq, {block(0, {{"x", 1}}), block(1, {})}));
  try {
    select_best_block(fq, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoBlocks);
  }
}

TEST(SelectBestBlock, IsTheArgmaxOfBlockSimilarity) {
  std::mt19937 rng(4);
  auto fq = make_feature_query("", {"placement", "recruiters"});
  std::vector<std::string> vocab = {fq.feature_terms[0], fq.feature_terms[1], "x", "y", "z"};
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<ConceptBlock> blocks;
    int n = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int i = 0; i < n; ++i) {
      ConceptList c;
      for (const auto& t : vocab) {
        int ctf = std::uniform_int_distribution<int>(0, 3)(rng);
        if (ctf) c.add(t, ctf);
      }
      blocks.push_back(block(i, c));
    }
    double best = 0;
    int best_i = -1;
    for (int i = 0; i < n; ++i) {
      double num = 0, norm = 0;
      for (const auto& [t, ctf] : blocks[i].concepts.entries()) {
        norm += ctf * ctf;
        if (t == vocab[0] || t == vocab[1]) num += ctf;
      }
      if (norm == 0) continue;
      double s = std::min(1.0, num / std::sqrt(norm));
      if (s > best) {
        best = s;
        best_i = i;
      }
    }
    auto choice = select_best_block(fq, blocks);
    if (best_i < 0) {
      EXPECT_FALSE(choice);
    } else {
      ASSERT_TRUE(choice);
      EXPECT_EQ(static_cast<int>(choice->index), best_i);
    }
  }
}

TEST(AvgFeatureDistance, Examples) {
  auto fq = make_feature_query("", {"placement", "recruiters"});
  EXPECT_EQ(avg_feature_distance(sentence("placement a b recruiters"), fq), 2.0);
  EXPECT_EQ(avg_feature_distance(sentence("placement recruiters"), fq), 1.0);
  EXPECT_TRUE(std::isinf(avg_feature_distance(sentence("placement only here"), fq)));
}

TEST(Weights, TagAndLocation) {
  EXPECT_EQ(tag_weight({Emphasis::kBold}), 3);
  EXPECT_EQ(tag_weight({Emphasis::kUnderline}), 3);
  EXPECT_EQ(tag_weight({Emphasis::kItalics}), 3);
  EXPECT_EQ(tag_weight({Emphasis::kCaption}), 3);
  EXPECT_EQ(tag_weight({Emphasis::kParagraphTitle}), 3);
  EXPECT_EQ(tag_weight({Emphasis::kColorChange}), 2);
  EXPECT_EQ(tag_weight({Emphasis::kColorChange, Emphasis::kBold}), 3);
  EXPECT_EQ(tag_weight({}), 0);
  EXPECT_EQ(location_weight(0, 1), 1.0);
  EXPECT_EQ(location_weight(0, 5), 1.0);
  EXPECT_EQ(location_weight(4, 5), 0.5);
  EXPECT_EQ(location_weight(2, 5), 0.75);
}

TEST(SentenceWeight, NoHitsLeavesOnlyLocation) {
  auto fq = make_feature_query("", {"placement"});
  Sentence s = sentence("Hostel rooms are clean today");
  EXPECT_DOUBLE_EQ(sentence_weight(s, fq, {}), 1.0 / 5);
}

TEST(SentenceWeight, EveryMatchingTokenCounts) {
  // One query hit and two feature hits, gaps of 2 and 2, bold, leftmost.
  auto fq = make_feature_query("college", {"placement", "recruiters"});
  Sentence s = sentence("College teams hold placement sessions with recruiters here.",
                        {Emphasis::kBold});
  ASSERT_EQ(s.tokens.size(), 8u);
  EXPECT_EQ(avg_feature_distance(s, fq), 2.0);
  EXPECT_NEAR(sentence_weight(s, fq, {}), (3 + std::exp(-0.5) + 3 + 1) / 8, 1e-12);
}

TEST(SentenceWeight, ZeroTokensIsLengthError) {
  auto fq = make_feature_query("", {"placement"});
  try {
    sentence_weight(sentence("..."), fq, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLength);
  }
}

TEST(SentenceWeight, MatchesOracleOnRandomSentences) {
  std::mt19937 rng(17);
  auto fq = make_feature_query("engineering college", {"placement", "recruiters"});
  auto matching = matching_terms(fq);
  const char* words[] = {"placement", "recruiters", "college", "engineering", "the",
                         "hostel", "labs", "visit", "students", "and"};
  for (int trial = 0; trial < 1000; ++trial) {
    std::string text;
    int n = std::uniform_int_distribution<int>(1, 25)(rng);
    for (int i = 0; i < n; ++i) text += std::string(i ? " " : "") + words[rng() % 10];
    Sentence s = sentence(text, EmphasisSet::from_bits(rng() % 64),
                          0, 1 + static_cast<int>(rng() % 4));
    s.sibling_index = static_cast<int>(rng() % s.sibling_count);
    oracle::Weights w{0.1 * (rng() % 20), 0.5 * (rng() % 4), 0.5 * (rng() % 4)};
    WeightParams p;
    p.gamma = w.gamma;
    p.alpha_tag = w.alpha_tag;
    p.beta_loc = w.beta_loc;
    EXPECT_NEAR(sentence_weight(s, fq, p), oracle::sentence_score(oracle_input(s), matching, w),
                1e-12)
        << text;
  }
}

TEST(SentenceWeight, AddingAMatchRaisesTheScore) {
  std::mt19937 rng(23);
  auto fq = make_feature_query("", {"placement", "recruiters"});
  const char* fillers[] = {"hostel", "labs", "visit", "rooms"};
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::string> words;
    int n = std::uniform_int_distribution<int>(2, 15)(rng);
    for (int i = 0; i < n; ++i) {
      words.push_back(rng() % 3 == 0 ? "placement" : fillers[rng() % 4]);
    }
    std::vector<size_t> filler_pos;
    for (size_t i = 0; i < words.size(); ++i) {
      if (words[i] != "placement") filler_pos.push_back(i);
    }
    if (filler_pos.empty()) continue;
    auto join = [](const std::vector<std::string>& w) {
      std::string out;
      for (const auto& x : w) out += (out.empty() ? "" : " ") + x;
      return out;
    };
    double before = sentence_weight(sentence(join(words)), fq, {});
    words[filler_pos[rng() % filler_pos.size()]] = "recruiters";
    double after = sentence_weight(sentence(join(words)), fq, {});
    EXPECT_GT(after, before) << join(words);
  }
}

TEST(SentenceBudget, CountsAndRatios) {
  WeightParams p;
  EXPECT_EQ(sentence_budget(p, 10), 3);
  EXPECT_EQ(sentence_budget(p, 2), 2);
  p.budget = SummaryRatio{0.3};
  EXPECT_EQ(sentence_budget(p, 10), 3);
  EXPECT_EQ(sentence_budget(p, 11), 4);
  p.budget = SummaryRatio{1.0};
  EXPECT_EQ(sentence_budget(p, 7), 7);
  p.budget = SummaryRatio{0.01};
  EXPECT_EQ(sentence_budget(p, 7), 1);
  EXPECT_EQ(sentence_budget(p, 0), 0);
}

TEST(ValidateParams, RejectsOutOfRange) {
  WeightParams p;
  EXPECT_NO_THROW(validate_params(p));
  p.gamma = -1;
  EXPECT_THROW(validate_params(p), Error);
  p = {};
  p.budget = SentenceCount{0};
  EXPECT_THROW(validate_params(p), Error);
  p.budget = SummaryRatio{0};
  EXPECT_THROW(validate_params(p), Error);
  p.budget = SummaryRatio{1.5};
  EXPECT_THROW(validate_params(p), Error);
  p = {};
  p.beta_loc = std::nan("");
  EXPECT_THROW(validate_params(p), Error);
}

// One concept block over random sentences.
DocumentRecord random_block_record(std::mt19937& rng, int n) {
  const char* words[] = {"placement", "recruiters", "college", "the", "hostel",
                         "labs", "visit", "students", "of", "IT"};
  DocumentRecord r;
  r.doc_id = "r";
  ConceptBlock b = block(0, {{normalize_term("placement", Lexicon::bundled()), 1}});
  for (int i = 0; i < n; ++i) {
    StoredSentence s;
    int len = std::uniform_int_distribution<int>(1, 12)(rng);
    for (int j = 0; j < len; ++j) s.text += std::string(j ? " " : "") + words[rng() % 10];
    s.text += ".";
    s.emphasis = EmphasisSet::from_bits(static_cast<uint8_t>(rng() % 64));
    s.sibling_count = 1 + static_cast<int>(rng() % 5);
    s.sibling_index = static_cast<int>(rng() % s.sibling_count);
    s.heading = rng() % 4 == 0 ? s.text : "H" + std::to_string(rng() % 3);
    r.sentences[i] = s;
    b.sentence_refs.push_back(i);
  }
  r.concept_blocks.push_back(b);
  return r;
}

TEST(ExtractSummary, EqualsBruteForceTopK) {
  std::mt19937 rng(42);
  auto fq = make_feature_query("college", {"placement", "recruiters"});
  auto matching = matching_terms(fq);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 50)(rng);
    DocumentRecord r = random_block_record(rng, n);
    WeightParams p;
    if (rng() % 2) {
      p.budget = SentenceCount{1 + static_cast<int>(rng() % 8)};
    } else {
      p.budget = SummaryRatio{0.05 * (1 + rng() % 20)};
    }

    std::vector<oracle::ScoredInput> candidates;
    for (const auto& [seq, stored] : r.sentences) {
      bool heading_like = stored.emphasis.contains(Emphasis::kParagraphTitle) ||
                          stored.emphasis.contains(Emphasis::kCaption);
      if (heading_like && stored.text == stored.heading) continue;
      Sentence s = sentence(stored.text, stored.emphasis, stored.sibling_index,
                            stored.sibling_count);
      s.seq_no = seq;
      candidates.push_back(oracle_input(s));
    }
    int k;
    if (const auto* c = std::get_if<SentenceCount>(&p.budget)) {
      k = std::min<int>(c->value, static_cast<int>(candidates.size()));
    } else {
      // Integer arithmetic avoids the rounding the library guards against.
      int twentieths = static_cast<int>(std::lround(std::get<SummaryRatio>(p.budget).value * 20));
      k = static_cast<int>((twentieths * candidates.size() + 19) / 20);
    }
    auto expected = oracle::top_k(candidates, matching, {}, k);

    DocumentSummary summary = extract_summary(r, fq, p);
    std::vector<int> got;
    for (const auto& section : summary.sections) {
      for (const auto& s : section.sentences) {
        got.push_back(s.seq_no);
        EXPECT_EQ(s.text, r.sentences.at(s.seq_no).text);
        EXPECT_EQ(section.subtitle, r.sentences.at(s.seq_no).heading);
      }
    }
    // Sections group by heading, so flattening them loses document order.
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << "trial " << trial;
    EXPECT_FALSE(summary.no_match);
  }
}

TEST(ExtractSummary, EqualScoresKeepTheEarliest) {
  DocumentRecord r;
  r.doc_id = "r";
  ConceptBlock b = block(0, {{normalize_term("placement", Lexicon::bundled()), 1}});
  for (int i = 0; i < 6; ++i) {
    r.sentences[i] = {"Placement is strong.", {}, 0, 1, "H"};
    b.sentence_refs.push_back(i);
  }
  r.concept_blocks.push_back(b);
  auto summary = extract_summary(r, make_feature_query("", {"placement"}), {});
  ASSERT_EQ(summary.sections.size(), 1u);
  ASSERT_EQ(summary.sections[0].sentences.size(), 3u);
  EXPECT_EQ(summary.sections[0].sentences[0].seq_no, 0);
  EXPECT_EQ(summary.sections[0].sentences[2].seq_no, 2);
}

TEST(ExtractSummary, NoMatchingBlock) {
  DocumentRecord r;
  r.doc_id = "r";
  r.title = "T";
  r.sentences[0] = {"Hostel rooms.", {}, 0, 1, "H"};
  ConceptBlock b = block(0, {{"hostel", 1}});
  b.sentence_refs = {0};
  r.concept_blocks.push_back(b);
  auto summary = extract_summary(r, make_feature_query("", {"placement"}), {});
  EXPECT_TRUE(summary.no_match);
  ASSERT_EQ(summary.sections.size(), 1u);
  EXPECT_TRUE(summary.sections[0].sentences.empty());
  EXPECT_EQ(summary.title, "T");
}

TEST(ExtractSummary, OwnSubtitleIsNotExtracted) {
  EXPECT_TRUE(is_own_subtitle({"IT", {Emphasis::kParagraphTitle}, 0, 1, "IT"}));
  EXPECT_TRUE(is_own_subtitle({"IT", {Emphasis::kCaption}, 0, 1, "IT"}));
  EXPECT_FALSE(is_own_subtitle({"IT", {Emphasis::kBold}, 0, 1, "IT"}));
  EXPECT_FALSE(is_own_subtitle({"IT labs", {Emphasis::kParagraphTitle}, 0, 1, "IT"}));
}

TEST(ExtractSummary, FixturesYieldDepartmentSubtitles) {
  Pipeline pipeline;
  auto fq = make_feature_query("engineering college", {"placement", "recruiters"});
  auto fixtures = testing::college_fixtures();
  ASSERT_GE(fixtures.size(), 6u);
  for (const auto& path : fixtures) {
    DocumentRecord r = pipeline.index(load_document(path.string(), path.stem().string()));
    DocumentSummary summary = extract_summary(r, fq, {});
    std::vector<std::string> subtitles;
    for (const auto& section : summary.sections) subtitles.push_back(section.subtitle);
    EXPECT_EQ(subtitles, (std::vector<std::string>{"IT", "CSE", "ECE"})) << path;
    for (const auto& section : summary.sections) {
      ASSERT_EQ(section.sentences.size(), 1u) << path;
      std::string text = to_lower_ascii(section.sentences[0].text);
      EXPECT_TRUE(text.find("placement") != std::string::npos ||
                  text.find("recruiter") != std::string::npos)
          << text;
    }
  }
}

TEST(ComposeComparative, KeepsSelectionOrder) {
  DocumentSummary a, b;
  a.doc_id = "b";
  b.doc_id = "a";
  auto c = compose_comparative({a, b}, "q", {"f"});
  ASSERT_EQ(c.columns.size(), 2u);
  EXPECT_EQ(c.columns[0].doc_id, "b");
  EXPECT_THROW(compose_comparative({}, "q", {"f"}), Error);
}

}  // namespace
}  // namespace compsum
