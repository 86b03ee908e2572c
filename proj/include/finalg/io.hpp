#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finalg/algebra.hpp"
#include "finalg/error.hpp"

namespace finalg {

// Line-oriented algebra file format.
//
//   algebra NAME
//   elements n1 n2 ... nk
//   cover a b            # repeatable; a is covered by b
//   op NAME ARITY        # followed by 1 row (arity 1) or k rows (arity 2)
//   const NAME element
//   signature sh|h|n|sn|dsh|dsn
//   end
//
// `#` starts a comment, blank lines are ignored. Rows are k element names
// separated by whitespace; for binary ops row i holds op(e_i, *).
// serialize_algebra emits the canonical form (elements in index order,
// covers sorted, ops sorted by name, single spaces, LF endings) and
// parse(serialize(a)) == a holds exactly.

namespace detail {

struct Token {
  std::string text;
  int line;
  int col;  // 1-based
};

struct Line {
  std::vector<Token> tokens;
  int number;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int lineno = 1;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line;
    line.number = lineno;
    size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == '#') break;
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' &&
             raw[i] != '#')
        ++i;
      line.tokens.push_back(Token{std::string(raw.substr(start, i - start)),
                                  lineno, static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++lineno;
  }
  return lines;
}

[[noreturn]] inline void fail(ErrorKind kind, const Token& tok,
                              const std::string& msg) {
  throw ParseError(kind, tok.line, tok.col, msg);
}

}  // namespace detail

inline AlgebraTable parse_algebra(std::string_view text) {
  using detail::Token;
  auto lines = detail::tokenize(text);
  size_t li = 0;
  auto have = [&]() { return li < lines.size(); };
  auto peek = [&]() -> const detail::Line& { return lines[li]; };

  if (!have())
    throw ParseError(ErrorKind::Parse, 1, 1, "empty input, expected: algebra");
  if (peek().tokens[0].text != "algebra")
    detail::fail(ErrorKind::Parse, peek().tokens[0],
                 "expected 'algebra NAME'");
  if (peek().tokens.size() != 2)
    detail::fail(ErrorKind::Parse, peek().tokens[0],
                 "'algebra' takes exactly one name");
  AlgebraTable a;
  a.name = peek().tokens[1].text;
  ++li;

  if (!have() || peek().tokens[0].text != "elements")
    throw ParseError(ErrorKind::Parse,
                     have() ? peek().tokens[0].line : lines.back().number + 1,
                     1, "expected 'elements ...' after 'algebra'");
  std::vector<std::string> names;
  for (size_t i = 1; i < peek().tokens.size(); ++i) {
    const Token& t = peek().tokens[i];
    for (const auto& seen : names)
      if (seen == t.text)
        detail::fail(ErrorKind::Parse, t,
                     "duplicate element '" + t.text + "'");
    for (const char* kw : {"algebra", "elements", "cover", "op", "const",
                           "signature", "end"})
      if (t.text == kw)
        detail::fail(ErrorKind::Parse, t,
                     "element name collides with keyword '" + t.text + "'");
    names.push_back(t.text);
  }
  if (names.empty())
    detail::fail(ErrorKind::Parse, peek().tokens[0],
                 "'elements' needs at least one name");
  const int n = static_cast<int>(names.size());
  auto elem_index = [&](const Token& t) {
    for (int i = 0; i < n; ++i)
      if (names[i] == t.text) return i;
    detail::fail(ErrorKind::UnknownElement,
                 t, "unknown element '" + t.text + "'");
  };
  ++li;

  std::vector<std::pair<std::string, std::string>> covers;
  bool saw_signature = false;
  bool saw_end = false;
  Token end_tok{"end", lines.back().number, 1};

  while (have()) {
    const detail::Line& line = peek();
    const Token& head = line.tokens[0];
    if (head.text == "end") {
      if (line.tokens.size() != 1)
        detail::fail(ErrorKind::Parse, line.tokens[1],
                     "unexpected token after 'end'");
      saw_end = true;
      end_tok = head;
      ++li;
      break;
    } else if (head.text == "cover") {
      if (line.tokens.size() != 3)
        detail::fail(ErrorKind::Parse, head, "'cover' takes two elements");
      elem_index(line.tokens[1]);
      elem_index(line.tokens[2]);
      covers.emplace_back(line.tokens[1].text, line.tokens[2].text);
      ++li;
    } else if (head.text == "op") {
      if (line.tokens.size() != 3)
        detail::fail(ErrorKind::Parse, head, "expected 'op NAME ARITY'");
      const std::string op_name = line.tokens[1].text;
      if (a.ops.count(op_name))
        detail::fail(ErrorKind::DuplicateOp, line.tokens[1],
                     "op '" + op_name + "' declared twice");
      const std::string& ar = line.tokens[2].text;
      if (ar != "1" && ar != "2")
        detail::fail(ErrorKind::Parse, line.tokens[2],
                     "arity must be 1 or 2");
      OpTable table;
      table.arity = ar == "2" ? 2 : 1;
      ++li;
      int rows = table.arity == 2 ? n : 1;
      for (int r = 0; r < rows; ++r) {
        if (!have())
          throw ParseError(ErrorKind::Parse, head.line, head.col,
                           "op '" + op_name + "' is missing table rows");
        const detail::Line& row = peek();
        if (row.tokens[0].text == "end" || row.tokens[0].text == "op" ||
            row.tokens[0].text == "cover" || row.tokens[0].text == "const" ||
            row.tokens[0].text == "signature")
          throw ParseError(ErrorKind::Parse, row.tokens[0].line,
                           row.tokens[0].col,
                           "op '" + op_name + "' is missing table rows");
        if (static_cast<int>(row.tokens.size()) != n)
          detail::fail(ErrorKind::ArityMismatch, row.tokens[0],
                       "row has " + std::to_string(row.tokens.size()) +
                           " entries, expected " + std::to_string(n));
        std::vector<int> vals;
        vals.reserve(n);
        for (const Token& t : row.tokens) vals.push_back(elem_index(t));
        if (table.arity == 2)
          table.binary.push_back(std::move(vals));
        else
          table.unary = std::move(vals);
        ++li;
      }
      a.ops[op_name] = std::move(table);
    } else if (head.text == "const") {
      if (line.tokens.size() != 3)
        detail::fail(ErrorKind::Parse, head, "expected 'const NAME element'");
      if (a.constants.count(line.tokens[1].text))
        detail::fail(ErrorKind::Parse, line.tokens[1],
                     "const '" + line.tokens[1].text + "' declared twice");
      a.constants[line.tokens[1].text] = elem_index(line.tokens[2]);
      ++li;
    } else if (head.text == "signature") {
      if (line.tokens.size() != 2)
        detail::fail(ErrorKind::Parse, head, "expected 'signature KIND'");
      if (saw_signature)
        detail::fail(ErrorKind::Parse, head, "signature declared twice");
      auto kind = signature_from_string(line.tokens[1].text);
      if (!kind || *kind == SignatureKind::PCL)
        detail::fail(ErrorKind::Parse, line.tokens[1],
                     "signature must be one of sh h n sn dsh dsn");
      a.signature.kind = *kind;
      saw_signature = true;
      ++li;
    } else {
      detail::fail(ErrorKind::Parse, head,
                   "unknown directive '" + head.text + "'");
    }
  }

  if (!saw_end) {
    int last = lines.empty() ? 1 : lines.back().number;
    throw ParseError(ErrorKind::Parse, last, 1, "missing 'end'");
  }
  if (have())
    detail::fail(ErrorKind::Parse, peek().tokens[0],
                 "content after 'end'");
  if (!saw_signature)
    throw ParseError(ErrorKind::Parse, end_tok.line, end_tok.col,
                     "missing 'signature' declaration");

  // Order-theoretic defects surface here; report them as diagnostics
  // anchored at the closing keyword so callers always get a position.
  try {
    a.lattice = build_lattice(names, covers);
    a.validate();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(ErrorKind::Parse, end_tok.line, end_tok.col, e.what());
  }
  return a;
}

/// Canonical, bit-stable rendering; parse(serialize(a)) reproduces `a`.
inline std::string serialize_algebra(const AlgebraTable& a) {
  std::string out = "algebra " + a.name + "\n";
  out += "elements";
  for (int i = 0; i < a.n(); ++i) out += " " + a.elem(i);
  out += "\n";
  for (const auto& [lo, hi] : a.lattice.cover_pairs())
    out += "cover " + a.elem(lo) + " " + a.elem(hi) + "\n";
  for (const auto& [name, table] : a.ops) {
    out += "op " + name + " " + std::to_string(table.arity) + "\n";
    auto row_text = [&](const std::vector<int>& row) {
      std::string s;
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) s += " ";
        s += a.elem(row[i]);
      }
      return s + "\n";
    };
    if (table.arity == 1) {
      out += row_text(table.unary);
    } else {
      for (const auto& row : table.binary) out += row_text(row);
    }
  }
  for (const auto& [name, v] : a.constants)
    out += "const " + name + " " + a.elem(v) + "\n";
  out += std::string("signature ") + to_string(a.signature.kind) + "\n";
  out += "end\n";
  return out;
}

/// Comma-separated element names -> indices ("e,1" for a filter flag).
inline std::vector<int> parse_element_list(const AlgebraTable& a,
                                           std::string_view text) {
  std::vector<int> out;
  size_t pos = 0;
  if (text.empty()) return out;
  while (true) {
    size_t comma = text.find(',', pos);
    std::string name(text.substr(pos, comma == std::string_view::npos
                                          ? text.size() - pos
                                          : comma - pos));
    int idx = a.lattice.index_of(name);
    if (idx < 0)
      throw Error(ErrorKind::UnknownElement, "'" + name + "'");
    out.push_back(idx);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::string format_element_list(const AlgebraTable& a,
                                       const std::vector<int>& members) {
  std::string out;
  for (size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += a.elem(members[i]);
  }
  return out;
}

}  // namespace finalg
