#include "compsum/segmentation.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "compsum/error.h"

namespace compsum {

namespace {

bool has_prefix(const ParentPath& path, const ParentPath& prefix) {
  return path.size() >= prefix.size() &&
         std::equal(prefix.begin(), prefix.end(), path.begin());
}

bool is_heading_like(EmphasisSet e) {
  return e.contains(Emphasis::kParagraphTitle) || e.contains(Emphasis::kCaption);
}

double norm(const ConceptList& concepts) {
  double sum = 0.0;
  for (const auto& [term, ctf] : concepts.entries()) {
    sum += static_cast<double>(ctf) * static_cast<double>(ctf);
  }
  return std::sqrt(sum);
}

}  // namespace

std::vector<TopicBlock> form_topic_blocks(const std::vector<MicroBlock>& blocks,
                                          const ConceptExtractor& extractor) {
  std::vector<std::vector<Sentence>> sentences_by_block;
  sentences_by_block.reserve(blocks.size());
  int seq = 0;
  for (const auto& block : blocks) {
    auto sentences = split_sentences(block.text, block.doc_id, seq);
    for (auto& s : sentences) {
      s.emphasis = block.emphasis;
      s.sibling_index = block.sibling_index;
      s.sibling_count = block.sibling_count;
    }
    seq += static_cast<int>(sentences.size());
    sentences_by_block.push_back(std::move(sentences));
  }

  std::vector<TopicBlock> out;
  for (size_t i = 0; i < blocks.size(); ++i) {
    const MicroBlock& block = blocks[i];
    bool extends_previous = !out.empty() &&
                            out.back().doc_id == block.doc_id &&
                            out.back().parent_path == block.parent_path;
    if (!extends_previous) {
      TopicBlock tb;
      tb.id = static_cast<int>(out.size());
      tb.doc_id = block.doc_id;
      tb.parent_path = block.parent_path;
      out.push_back(std::move(tb));
    }
    TopicBlock& tb = out.back();
    tb.micro_block_ids.push_back(block.id);
    for (auto& s : sentences_by_block[i]) {
      tb.concepts = merge_concept_lists(tb.concepts, extract_concepts(s, extractor));
      tb.sentences.push_back(s);
    }
  }

  for (auto& tb : out) {
    for (size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].doc_id == tb.doc_id && is_heading_like(blocks[i].emphasis) &&
          has_prefix(blocks[i].parent_path, tb.parent_path) &&
          !sentences_by_block[i].empty()) {
        tb.heading = sentences_by_block[i].front().text;
        break;
      }
    }
    if (!tb.heading && !tb.sentences.empty()) {
      tb.heading = tb.sentences.front().text;
    }
  }
  return out;
}

double ctf_weight(const ConceptList& concepts, const std::string& term) {
  int ctf = concepts.ctf(term);
  if (ctf == 0) {
    throw Error(ErrorCode::kAbsentTerm, "term '" + term + "' is not in the list");
  }
  return static_cast<double>(ctf) / norm(concepts);
}

double concept_similarity(const ConceptList& a, const ConceptList& b) {
  const double norm_a = norm(a);
  const double norm_b = norm(b);
  double sum_a = 0.0;
  double sum_b = 0.0;
  bool shared = false;
  for (const auto& [term, ctf_a] : a.entries()) {
    int ctf_b = b.ctf(term);
    if (ctf_b == 0) continue;
    shared = true;
    sum_a += ctf_a * (ctf_a / norm_a);
    sum_b += ctf_b * (ctf_b / norm_b);
  }
  if (!shared) return 0.0;
  return std::clamp(1.0 - std::abs(sum_a - sum_b), 0.0, 1.0);
}

double topic_block_similarity(const TopicBlock& a, const TopicBlock& b) {
  return concept_similarity(a.concepts, b.concepts);
}

std::vector<std::vector<size_t>> complete_linkage_clusters(
    const SimilarityMatrix& similarity, double alpha) {
  const size_t n = similarity.n;
  std::vector<double> link = similarity.values;
  std::vector<std::vector<size_t>> members(n);
  std::vector<bool> active(n, true);
  for (size_t i = 0; i < n; ++i) members[i] = {i};

  // A cluster lives in the slot of its smallest member, so slot order is
  // the tie-break order.
  while (true) {
    double best = -std::numeric_limits<double>::infinity();
    size_t best_i = n;
    size_t best_j = n;
    for (size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      for (size_t j = i + 1; j < n; ++j) {
        if (!active[j]) continue;
        double value = link[i * n + j];
        if (value > alpha && value > best) {
          best = value;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_i == n) break;

    for (size_t k = 0; k < n; ++k) {
      if (!active[k] || k == best_i || k == best_j) continue;
      double merged = std::min(link[best_i * n + k], link[best_j * n + k]);
      link[best_i * n + k] = merged;
      link[k * n + best_i] = merged;
    }
    auto& target = members[best_i];
    target.insert(target.end(), members[best_j].begin(), members[best_j].end());
    std::sort(target.begin(), target.end());
    members[best_j].clear();
    active[best_j] = false;
  }

  std::vector<std::vector<size_t>> clusters;
  for (size_t i = 0; i < n; ++i) {
    if (active[i]) clusters.push_back(std::move(members[i]));
  }
  return clusters;
}

std::vector<ConceptBlock> merge_into_concept_blocks(
    const std::vector<TopicBlock>& topic_blocks, double alpha) {
  if (alpha < 0.0 || alpha > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in [0, 1]");
  }
  std::vector<const TopicBlock*> ordered;
  for (const auto& tb : topic_blocks) {
    if (!ordered.empty() && tb.doc_id != ordered.front()->doc_id) {
      throw Error(ErrorCode::kInvalidArgument,
                  "concept blocks cannot span documents");
    }
    ordered.push_back(&tb);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const TopicBlock* x, const TopicBlock* y) { return x->id < y->id; });

  SimilarityMatrix matrix;
  matrix.n = ordered.size();
  matrix.values.assign(matrix.n * matrix.n, 0.0);
  for (size_t i = 0; i < matrix.n; ++i) {
    matrix.values[i * matrix.n + i] = 1.0;
    for (size_t j = i + 1; j < matrix.n; ++j) {
      double s = topic_block_similarity(*ordered[i], *ordered[j]);
      matrix.values[i * matrix.n + j] = s;
      matrix.values[j * matrix.n + i] = s;
    }
  }

  std::vector<ConceptBlock> out;
  for (const auto& cluster : complete_linkage_clusters(matrix, alpha)) {
    ConceptBlock cb;
    cb.id = static_cast<int>(out.size());
    cb.doc_id = ordered[cluster.front()]->doc_id;
    for (size_t index : cluster) {
      const TopicBlock& tb = *ordered[index];
      cb.topic_block_ids.push_back(tb.id);
      cb.concepts = merge_concept_lists(cb.concepts, tb.concepts);
      for (const auto& s : tb.sentences) cb.sentence_refs.push_back(s.seq_no);
      if (tb.heading &&
          std::find(cb.headings.begin(), cb.headings.end(), *tb.heading) ==
              cb.headings.end()) {
        cb.headings.push_back(*tb.heading);
      }
    }
    std::sort(cb.sentence_refs.begin(), cb.sentence_refs.end());
    cb.sentence_refs.erase(
        std::unique(cb.sentence_refs.begin(), cb.sentence_refs.end()),
        cb.sentence_refs.end());
    out.push_back(std::move(cb));
  }
  return out;
}

}  // namespace compsum
