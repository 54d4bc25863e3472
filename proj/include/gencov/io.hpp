#pragma once

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gencov/construct.hpp"
#include "gencov/core.hpp"

namespace gencov {

// A parse failure with its 1-based position in the input.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, int column, const std::string& message)
      : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {

struct SourceLine {
  int number;       // 1-based
  int indent;       // columns stripped from the left
  std::string text; // comment and surrounding blanks removed
};

inline std::vector<SourceLine> meaningful_lines(std::string_view text) {
  std::vector<SourceLine> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, end - pos));
    ++number;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      if (end == text.size()) break;
      continue;
    }
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back({number, static_cast<int>(first), line.substr(first, last - first + 1)});
    if (end == text.size()) break;
  }
  return out;
}

struct Token {
  std::string text;
  int column;  // 1-based
};

inline std::vector<Token> tokenize(const std::string& s, int base_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t' || s[i] == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    out.push_back({s.substr(start, i - start), base_column + static_cast<int>(start)});
  }
  return out;
}

inline int parse_int(const Token& tok, int line) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(ErrorKind::SyntaxError, line, tok.column, "expected an integer, found '" + tok.text + "'");
  return value;
}

struct Document {
  int t = 0;
  int lambda = 1;
  std::optional<PartStructure> structure;
  std::vector<PlaceholderBlock> blocks;
  bool has_placeholders = false;
  int first_placeholder_line = 0;
  int first_placeholder_column = 0;
};

inline Document parse_document(std::string_view text) {
  const auto lines = meaningful_lines(text);
  if (lines.empty()) throw ParseError(ErrorKind::SyntaxError, 1, 1, "empty document");
  if (lines[0].text != "gcd 1") {
    throw ParseError(ErrorKind::SyntaxError, lines[0].number, lines[0].indent + 1, "expected header 'gcd 1'");
  }

  std::map<std::string, std::vector<int>> headers;
  std::size_t n = 1;
  int blocks_line = 0;
  for (; n < lines.size(); ++n) {
    const auto& line = lines[n];
    if (line.text == "blocks:") {
      blocks_line = line.number;
      ++n;
      break;
    }
    const auto colon = line.text.find(':');
    if (colon == std::string::npos)
      throw ParseError(ErrorKind::SyntaxError, line.number, line.indent + 1, "expected 'key: value' or 'blocks:'");
    const std::string key = line.text.substr(0, colon);
    if (key != "t" && key != "lambda" && key != "v" && key != "k")
      throw ParseError(ErrorKind::SyntaxError, line.number, line.indent + 1, "unknown key '" + key + "'");
    if (headers.count(key))
      throw ParseError(ErrorKind::SyntaxError, line.number, line.indent + 1, "duplicate key '" + key + "'");
    std::vector<int> values;
    for (const auto& tok : tokenize(line.text.substr(colon + 1), line.indent + static_cast<int>(colon) + 2))
      values.push_back(parse_int(tok, line.number));
    if (values.empty() || ((key == "t" || key == "lambda") && values.size() != 1))
      throw ParseError(ErrorKind::SyntaxError, line.number, line.indent + 1,
                       "key '" + key + "' needs " + (key == "v" || key == "k" ? "a list of integers" : "one integer"));
    headers[key] = std::move(values);
  }
  if (blocks_line == 0) {
    const auto& last = lines.back();
    throw ParseError(ErrorKind::SyntaxError, last.number, last.indent + 1, "missing 'blocks:' line");
  }
  for (const char* key : {"t", "lambda", "v", "k"})
    if (!headers.count(key))
      throw ParseError(ErrorKind::SemanticError, blocks_line, 1, std::string("missing key '") + key + "'");

  Document doc;
  doc.t = headers["t"][0];
  doc.lambda = headers["lambda"][0];
  try {
    doc.structure.emplace(headers["v"], headers["k"]);
    if (doc.t < 0 || doc.t > doc.structure->k_sum())
      throw Error(ErrorKind::StrengthTooLarge, "t must lie in 0..k_sum");
    if (doc.lambda < 1) throw Error(ErrorKind::InvalidInput, "lambda must be positive");
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(ErrorKind::SemanticError, blocks_line, 1, e.what());
  }
  const PartStructure& s = *doc.structure;

  for (; n < lines.size(); ++n) {
    const auto& line = lines[n];
    PlaceholderBlock pb;
    std::size_t start = 0;
    int part = 0;
    while (true) {
      const std::size_t bar = line.text.find('|', start);
      const std::string chunk = line.text.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
      const int column = line.indent + static_cast<int>(start) + 1;
      if (part >= s.parts())
        throw ParseError(ErrorKind::SemanticError, line.number, column,
                         "block has more than " + std::to_string(s.parts()) + " parts");
      PlaceholderPart pp;
      for (const auto& tok : tokenize(chunk, column)) {
        if (tok.text == "*") {
          if (!doc.has_placeholders) {
            doc.first_placeholder_line = line.number;
            doc.first_placeholder_column = tok.column;
          }
          doc.has_placeholders = true;
          ++pp.placeholders;
          continue;
        }
        const int x = parse_int(tok, line.number);
        if (x < 1 || x > s.size(part))
          throw ParseError(ErrorKind::SemanticError, line.number, tok.column,
                           "label " + std::to_string(x) + " outside 1.." + std::to_string(s.size(part)));
        if (std::find(pp.points.begin(), pp.points.end(), x) != pp.points.end())
          throw ParseError(ErrorKind::SemanticError, line.number, tok.column, "repeated label " + std::to_string(x));
        pp.points.push_back(x);
      }
      if (static_cast<int>(pp.points.size()) + pp.placeholders != s.profile(part))
        throw ParseError(ErrorKind::SemanticError, line.number, column,
                         "part " + std::to_string(part + 1) + " needs " + std::to_string(s.profile(part)) + " entries");
      std::sort(pp.points.begin(), pp.points.end());
      pb.parts.push_back(std::move(pp));
      ++part;
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (part != s.parts())
      throw ParseError(ErrorKind::SemanticError, line.number, line.indent + 1,
                       "block has " + std::to_string(part) + " parts, expected " + std::to_string(s.parts()));
    doc.blocks.push_back(std::move(pb));
  }
  return doc;
}

}  // namespace detail

// Parses a design document. Placeholders are rejected.
inline Design parse_design(std::string_view text) {
  auto doc = detail::parse_document(text);
  if (doc.has_placeholders)
    throw ParseError(ErrorKind::SemanticError, doc.first_placeholder_line, doc.first_placeholder_column,
                     "placeholder '*' in a concrete design");
  std::vector<Block> blocks;
  for (auto& pb : doc.blocks) {
    std::vector<PointSet> parts;
    for (auto& pp : pb.parts) parts.push_back(std::move(pp.points));
    blocks.emplace_back(std::move(parts));
  }
  return Design(*doc.structure, doc.t, doc.lambda, std::move(blocks));
}

// Parses a document whose blocks may contain '*'.
inline PlaceholderDesign parse_placeholder_design(std::string_view text) {
  auto doc = detail::parse_document(text);
  return PlaceholderDesign{*doc.structure, doc.t, doc.lambda, std::move(doc.blocks)};
}

namespace detail {

inline std::string emit_header(const PartStructure& s, int t, int lambda) {
  std::ostringstream out;
  out << "gcd 1\n"
      << "t: " << t << "\n"
      << "lambda: " << lambda << "\n"
      << "v: " << join_ints(s.sizes(), ' ') << "\n"
      << "k: " << join_ints(s.profile(), ' ') << "\n"
      << "blocks:\n";
  return out.str();
}

}  // namespace detail

inline std::string emit_design(const Design& d) {
  std::string out = detail::emit_header(d.structure(), d.strength(), d.lambda());
  for (const Block& b : d.blocks()) {
    for (int i = 0; i < b.parts_count(); ++i) {
      if (i) out += " | ";
      out += join_ints(b.part(i), ' ');
    }
    out += '\n';
  }
  return out;
}

inline std::string emit_placeholder_design(const PlaceholderDesign& d) {
  std::string out = detail::emit_header(d.structure, d.t, d.lambda);
  for (const auto& b : d.blocks) {
    for (std::size_t i = 0; i < b.parts.size(); ++i) {
      if (i) out += " | ";
      std::string part = join_ints(b.parts[i].points, ' ');
      for (int p = 0; p < b.parts[i].placeholders; ++p) part += part.empty() ? "*" : " *";
      out += part;
    }
    out += '\n';
  }
  return out;
}

// A covering array read from text: rows of symbols relabeled to 1..s per column.
struct ArrayText {
  ArrayRows rows;
  std::vector<int> alphabet;
};

// Rows are whitespace-separated symbols; a file whose rows are all single
// tokens is read one character per column. The distinct symbols of a column
// are sorted (numerically when they are all integers) and numbered from 1.
inline ArrayText parse_covering_array(std::string_view text) {
  std::vector<std::vector<std::string>> cells;
  std::vector<int> line_numbers;
  for (const auto& line : detail::meaningful_lines(text)) {
    std::vector<std::string> row;
    for (auto& tok : detail::tokenize(line.text, 1)) row.push_back(tok.text);
    cells.push_back(std::move(row));
    line_numbers.push_back(line.number);
  }
  if (cells.empty()) throw ParseError(ErrorKind::SyntaxError, 1, 1, "empty covering array");
  const bool packed = std::all_of(cells.begin(), cells.end(), [](const auto& r) { return r.size() == 1; }) &&
                      cells.front().front().size() > 1;
  if (packed)
    for (auto& r : cells) {
      std::vector<std::string> split;
      for (char c : r.front()) split.emplace_back(1, c);
      r = std::move(split);
    }
  const std::size_t columns = cells.front().size();
  for (std::size_t r = 0; r < cells.size(); ++r)
    if (cells[r].size() != columns)
      throw ParseError(ErrorKind::SemanticError, line_numbers[r], 1,
                       "row has " + std::to_string(cells[r].size()) + " columns, expected " + std::to_string(columns));

  ArrayText out;
  out.rows.assign(cells.size(), std::vector<int>(columns, 0));
  for (std::size_t c = 0; c < columns; ++c) {
    std::vector<std::string> symbols;
    for (const auto& r : cells) symbols.push_back(r[c]);
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    auto as_int = [](const std::string& s) -> std::optional<long long> {
      long long v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
      return v;
    };
    if (std::all_of(symbols.begin(), symbols.end(), [&](const auto& s) { return as_int(s).has_value(); }))
      std::sort(symbols.begin(), symbols.end(), [&](const auto& a, const auto& b) { return *as_int(a) < *as_int(b); });
    for (std::size_t r = 0; r < cells.size(); ++r)
      out.rows[r][c] = static_cast<int>(std::find(symbols.begin(), symbols.end(), cells[r][c]) - symbols.begin()) + 1;
    out.alphabet.push_back(static_cast<int>(symbols.size()));
  }
  return out;
}

// One row per block, symbols 0..s-1 separated by spaces.
inline std::string emit_covering_array(const ArrayRows& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ' ';
      out += std::to_string(row[c] - 1);
    }
    out += '\n';
  }
  return out;
}

}  // namespace gencov
