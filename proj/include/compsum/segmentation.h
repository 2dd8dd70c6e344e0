#ifndef COMPSUM_SEGMENTATION_H_
#define COMPSUM_SEGMENTATION_H_

#include <optional>
#include <string>
#include <vector>

#include "compsum/concepts.h"
#include "compsum/ingest.h"

namespace compsum {

inline constexpr double kDefaultMergeThreshold = 0.6;

struct TopicBlock {
  int id = 0;
  std::string doc_id;
  ParentPath parent_path;
  std::vector<int> micro_block_ids;
  std::vector<Sentence> sentences;
  ConceptList concepts;
  // Title or first sentence of the parent subtree, used as a subtitle.
  std::optional<std::string> heading;
};

struct ConceptBlock {
  int id = 0;
  std::string doc_id;
  std::vector<int> topic_block_ids;
  ConceptList concepts;
  // Ascending, no duplicates.
  std::vector<int> sentence_refs;
  std::vector<std::string> headings;

  friend bool operator==(const ConceptBlock&, const ConceptBlock&) = default;
};

// Groups runs of adjacent micro blocks that share a parent path, splits
// each micro block into sentences (numbered across the whole document) and
// builds each block's concept list.
std::vector<TopicBlock> form_topic_blocks(const std::vector<MicroBlock>& blocks,
                                          const ConceptExtractor& extractor);

// ctf of term over the Euclidean norm of all ctfs in the list.
double ctf_weight(const ConceptList& concepts, const std::string& term);

// 1 - |S1 - S2| clamped to [0, 1], where Sk sums ctf * ctf_weight over the
// terms both lists share, evaluated in list k. 0 when nothing is shared.
double concept_similarity(const ConceptList& a, const ConceptList& b);

double topic_block_similarity(const TopicBlock& a, const TopicBlock& b);

// Row-major symmetric n x n matrix.
struct SimilarityMatrix {
  size_t n = 0;
  std::vector<double> values;

  double at(size_t i, size_t j) const { return values[i * n + j]; }
};

// Greedy complete-linkage agglomeration. At every step the two clusters
// whose weakest cross pair is strongest are merged, provided that link
// exceeds alpha; equal links go to the pair with the smallest
// (min-member, min-member) indices. Returns clusters with members
// ascending, ordered by first member.
std::vector<std::vector<size_t>> complete_linkage_clusters(
    const SimilarityMatrix& similarity, double alpha);

// Concept blocks never span documents; all input blocks must share a
// doc_id. Block ids are assigned in order of each block's first topic block.
std::vector<ConceptBlock> merge_into_concept_blocks(
    const std::vector<TopicBlock>& topic_blocks, double alpha);

}  // namespace compsum

#endif  // COMPSUM_SEGMENTATION_H_
