#include "latquot/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "latquot/error.hpp"

namespace latquot {

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_words(std::string_view line, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), base + start});
  }
  return out;
}

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Fill colours cycle when there are more blocks than entries.
const char* const kPalette[] = {"#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f", "#cab2d6",
                                "#ffff99", "#1f78b4", "#33a02c", "#e31a1c", "#ff7f00"};

}  // namespace

Lattice parse_lattice_text(std::string_view text) {
  std::optional<std::vector<std::string>> elements;
  std::vector<CoverPair> covers;
  std::size_t line_start = 0;
  while (line_start < text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = text.substr(line_start, line_end - line_start);
    auto words = split_words(line, line_start);
    const auto comment = std::find_if(words.begin(), words.end(),
                                      [](const auto& w) { return w.text.starts_with('#'); });
    words.erase(comment, words.end());
    if (!words.empty()) {
      const auto& head = words.front();
      if (head.text == "elements:") {
        if (elements) throw SyntaxError(head.offset, "second 'elements:' line");
        elements.emplace();
        for (std::size_t k = 1; k < words.size(); ++k) elements->emplace_back(words[k].text);
      } else if (head.text == "covers:") {
        for (std::size_t k = 1; k < words.size(); ++k) {
          const auto& w = words[k];
          const auto lt = w.text.find('<');
          if (lt == std::string_view::npos || lt == 0 || lt + 1 == w.text.size() ||
              w.text.find('<', lt + 1) != std::string_view::npos) {
            throw SyntaxError(w.offset, "cover must look like 'a<b'");
          }
          covers.emplace_back(std::string(w.text.substr(0, lt)), std::string(w.text.substr(lt + 1)));
        }
      } else {
        throw SyntaxError(head.offset, "expected 'elements:' or 'covers:'");
      }
    }
    line_start = line_end + 1;
  }
  if (!elements) throw SyntaxError(text.size(), "missing 'elements:' line");
  return Lattice::from_covers(std::move(*elements), covers);
}

std::string format_lattice_text(const Lattice& l) {
  std::string out = "elements:";
  for (const auto& id : l.elements()) out += " " + id;
  out += "\ncovers:";
  for (const auto& [lo, hi] : l.covers()) out += " " + l.id(lo) + "<" + l.id(hi);
  out += "\n";
  return out;
}

std::string to_dot(const Lattice& l, const std::optional<Congruence>& highlight) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  std::vector<std::string> fill(l.size());
  if (highlight) {
    std::size_t cluster = 0;
    for (const auto& block : highlight->blocks()) {
      if (block.size() < 2) continue;
      const char* colour = kPalette[cluster % std::size(kPalette)];
      out << "  subgraph cluster_" << cluster << " {\n    style=filled;\n    color="
          << quote(colour) << ";\n";
      for (Index x : block) {
        out << "    n" << x << ";\n";
        fill[x] = colour;
      }
      out << "  }\n";
      ++cluster;
    }
  }
  for (Index x = 0; x < l.size(); ++x) {
    out << "  n" << x << " [label=" << quote(l.id(x));
    if (!fill[x].empty()) out << ", style=filled, fillcolor=" << quote(fill[x]);
    out << "];\n";
  }
  for (const auto& [lo, hi] : l.covers()) out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace latquot
