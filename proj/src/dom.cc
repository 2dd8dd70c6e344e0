#include "compsum/dom.h"

#include <array>

namespace compsum {

namespace {

constexpr std::array kAllEmphasis = {
    Emphasis::kBold,    Emphasis::kUnderline,      Emphasis::kItalics,
    Emphasis::kCaption, Emphasis::kParagraphTitle, Emphasis::kColorChange,
};

}  // namespace

std::string_view emphasis_name(Emphasis e) {
  switch (e) {
    case Emphasis::kBold: return "bold";
    case Emphasis::kUnderline: return "underline";
    case Emphasis::kItalics: return "italics";
    case Emphasis::kCaption: return "caption";
    case Emphasis::kParagraphTitle: return "paragraph-title";
    case Emphasis::kColorChange: return "color-change";
  }
  return "none";
}

std::vector<std::string> EmphasisSet::names() const {
  std::vector<std::string> out;
  for (Emphasis e : kAllEmphasis) {
    if (contains(e)) out.emplace_back(emphasis_name(e));
  }
  return out;
}

EmphasisSet EmphasisSet::from_names(const std::vector<std::string>& names) {
  EmphasisSet set;
  for (const auto& name : names) {
    for (Emphasis e : kAllEmphasis) {
      if (emphasis_name(e) == name) set.insert(e);
    }
  }
  return set;
}

const DomNode* DomTree::resolve(const ParentPath& path) const {
  if (path.empty()) return nullptr;
  if (path.front().tag != root.tag || path.front().sibling_index != 0) {
    return nullptr;
  }
  const DomNode* node = &root;
  for (size_t i = 1; i < path.size(); ++i) {
    const auto& step = path[i];
    if (step.sibling_index < 0 ||
        static_cast<size_t>(step.sibling_index) >= node->children.size()) {
      return nullptr;
    }
    node = &node->children[static_cast<size_t>(step.sibling_index)];
    if (node->tag != step.tag) return nullptr;
  }
  return node;
}

}  // namespace compsum
