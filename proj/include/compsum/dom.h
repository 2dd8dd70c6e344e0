#ifndef COMPSUM_DOM_H_
#define COMPSUM_DOM_H_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace compsum {

enum class Emphasis : uint8_t {
  kBold = 1 << 0,
  kUnderline = 1 << 1,
  kItalics = 1 << 2,
  kCaption = 1 << 3,
  kParagraphTitle = 1 << 4,
  kColorChange = 1 << 5,
};

// Small bit set over Emphasis. Empty means "none".
class EmphasisSet {
 public:
  EmphasisSet() = default;
  EmphasisSet(std::initializer_list<Emphasis> flags) {
    for (Emphasis f : flags) insert(f);
  }

  bool contains(Emphasis e) const { return bits_ & static_cast<uint8_t>(e); }
  bool empty() const { return bits_ == 0; }
  void insert(Emphasis e) { bits_ |= static_cast<uint8_t>(e); }
  EmphasisSet operator|(EmphasisSet other) const {
    return from_bits(bits_ | other.bits_);
  }
  EmphasisSet operator&(EmphasisSet other) const {
    return from_bits(bits_ & other.bits_);
  }
  uint8_t bits() const { return bits_; }

  // Names in a fixed order: bold, underline, italics, caption,
  // paragraph-title, color-change.
  std::vector<std::string> names() const;
  // Inverse of names(); unknown names and "none" are ignored.
  static EmphasisSet from_names(const std::vector<std::string>& names);
  static EmphasisSet from_bits(uint8_t bits) {
    EmphasisSet s;
    s.bits_ = bits;
    return s;
  }

  friend bool operator==(EmphasisSet, EmphasisSet) = default;

 private:
  uint8_t bits_ = 0;
};

std::string_view emphasis_name(Emphasis e);

struct DomNode {
  std::string tag;
  std::vector<DomNode> children;
  // Whitespace-normalised text; only leaves carry it.
  std::string text;
  int sibling_index = 0;
  EmphasisSet emphasis;

  bool is_leaf() const { return children.empty(); }
};

struct PathStep {
  std::string tag;
  int sibling_index = 0;

  friend bool operator==(const PathStep&, const PathStep&) = default;
};

using ParentPath = std::vector<PathStep>;

struct DomTree {
  std::string doc_id;
  DomNode root;

  // Follows path from the root; the first step must name the root itself.
  const DomNode* resolve(const ParentPath& path) const;
};

}  // namespace compsum

#endif  // COMPSUM_DOM_H_
