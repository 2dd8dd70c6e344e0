#include "compsum/text.h"

#include <gtest/gtest.h>

namespace compsum {
namespace {

TEST(NormalizeWhitespace, CollapsesAndTrims) {
  EXPECT_EQ(normalize_whitespace("  a \t\n b   c  "), "a b c");
  EXPECT_EQ(normalize_whitespace(""), "");
  EXPECT_EQ(normalize_whitespace(" \n\t "), "");
}

TEST(NormalizeWhitespace, TreatsNoBreakSpaceAsSpace) {
  EXPECT_EQ(normalize_whitespace("a\xC2\xA0\xC2\xA0 b"), "a b");
}

TEST(Tokenize, SplitsOnPunctuationAndLowercases) {
  EXPECT_EQ(tokenize("The IT-cell, placed 92% of students!"),
            (std::vector<std::string>{"the", "it", "cell", "placed", "92",
                                      "of", "students"}));
  EXPECT_TRUE(tokenize("... -- !!").empty());
}

TEST(Tokenize, KeepsNonAsciiLettersInsideTokens) {
  EXPECT_EQ(tokenize("caf\xC3\xA9 na\xC3\xAFve"),
            (std::vector<std::string>{"caf\xC3\xA9", "na\xC3\xAFve"}));
}

TEST(Tokenize, UnicodePunctuationSeparates) {
  // Middle dot, en dash and a right double quote.
  EXPECT_EQ(tokenize("home\xC2\xB7news \xE2\x80\x93 x\xE2\x80\x9D"),
            (std::vector<std::string>{"home", "news", "x"}));
}

TEST(Utf8, AcceptsWellFormed) {
  EXPECT_TRUE(is_valid_utf8("plain"));
  EXPECT_TRUE(is_valid_utf8("\xC3\xA9\xE2\x82\xAC\xF0\x9F\x98\x80"));
}

TEST(Utf8, RejectsMalformed) {
  EXPECT_FALSE(is_valid_utf8("\xE9t\xE9"));          // Latin-1 bytes
  EXPECT_FALSE(is_valid_utf8("\xC0\xAF"));           // overlong
  EXPECT_FALSE(is_valid_utf8("\xED\xA0\x80"));       // surrogate
  EXPECT_FALSE(is_valid_utf8("\xE2\x82"));           // truncated
  EXPECT_FALSE(is_valid_utf8("\xF4\x90\x80\x80"));   // above U+10FFFF
}

TEST(HtmlEscape, EscapesMarkupCharacters) {
  EXPECT_EQ(html_escape("a < b & c > \"d\""), "a &lt; b &amp; c &gt; \"d\"");
  EXPECT_EQ(html_escape("\"q\"", true), "&quot;q&quot;");
}

}  // namespace
}  // namespace compsum
