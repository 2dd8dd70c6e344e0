#include "compsum/render.h"

#include <algorithm>
#include <sstream>

#include "compsum/text.h"

namespace compsum {

namespace {

const SummarySection* find_section(const DocumentSummary& column,
                                   const std::string& subtitle) {
  for (const auto& section : column.sections) {
    if (section.subtitle == subtitle && !section.sentences.empty()) {
      return &section;
    }
  }
  return nullptr;
}

constexpr const char* kStyle =
    "table{border-collapse:collapse;width:100%}"
    "th,td{border:1px solid #999;padding:6px;vertical-align:top;"
    "text-align:left}"
    ".sentence{display:block;margin-top:4px}"
    ".no-match{color:#666}";

}  // namespace

std::string render_html(const ComparativeSummary& summary) {
  std::vector<std::string> subtitles;
  for (const auto& column : summary.columns) {
    for (const auto& section : column.sections) {
      if (section.sentences.empty()) continue;
      if (std::find(subtitles.begin(), subtitles.end(), section.subtitle) ==
          subtitles.end()) {
        subtitles.push_back(section.subtitle);
      }
    }
  }

  std::string features;
  for (const auto& f : summary.features) {
    if (!features.empty()) features += ", ";
    features += f;
  }

  std::ostringstream out;
  out << "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n"
      << "<title>Comparative summary: " << html_escape(summary.query)
      << "</title>\n<style>" << kStyle << "</style>\n</head>\n<body>\n"
      << "<table class=\"comparative-summary\">\n<caption>"
      << html_escape(summary.query) << " / " << html_escape(features)
      << "</caption>\n<thead>\n<tr>";
  for (const auto& column : summary.columns) {
    out << "<th data-doc=\"" << html_escape(column.doc_id, true) << "\">"
        << html_escape(column.title) << "</th>";
  }
  out << "</tr>\n</thead>\n<tbody>\n";

  auto no_match_cell = [&](const DocumentSummary& column) {
    return column.no_match ? "<em class=\"no-match\">no matching content</em>"
                           : "";
  };
  if (subtitles.empty()) {
    out << "<tr>";
    for (const auto& column : summary.columns) {
      out << "<td>" << no_match_cell(column) << "</td>";
    }
    out << "</tr>\n";
  }
  for (size_t row = 0; row < subtitles.size(); ++row) {
    out << "<tr>";
    for (const auto& column : summary.columns) {
      out << "<td>";
      if (const SummarySection* section = find_section(column, subtitles[row])) {
        out << "<b>" << html_escape(section->subtitle) << "</b>";
        for (const auto& s : section->sentences) {
          out << "<span class=\"sentence\" data-seq=\"" << s.seq_no << "\">"
              << html_escape(s.text) << "</span>";
        }
      } else if (row == 0) {
        out << no_match_cell(column);
      }
      out << "</td>";
    }
    out << "</tr>\n";
  }
  out << "</tbody>\n</table>\n</body>\n</html>\n";
  return out.str();
}

}  // namespace compsum
