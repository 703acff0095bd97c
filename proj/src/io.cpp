// Copyright 2026 The dmarkov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dmarkov/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "dmarkov/errors.hpp"

namespace dmarkov {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

// Non-blank, non-comment lines split into whitespace separated tokens.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::vector<Token> tokens;
    std::size_t p = 0;
    while (p < line.size()) {
      while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
      if (p >= line.size()) break;
      if (line[p] == '#' && tokens.empty()) break;
      const std::size_t q = p;
      while (p < line.size() && !std::isspace(static_cast<unsigned char>(line[p]))) ++p;
      tokens.push_back({std::string(line.substr(q, p - q)), line_no, static_cast<int>(q) + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const std::string& what, const Token& t) {
  throw ParseError(what, t.line, t.column);
}

int parse_int(const Token& t, const std::string& what) {
  if (t.text.empty() || t.text.size() > 6) fail("expected " + what + ", got '" + t.text + "'", t);
  for (char c : t.text)
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      fail("expected " + what + ", got '" + t.text + "'", t);
    }
  return std::stoi(t.text);
}

int parse_size_line(const std::vector<std::vector<Token>>& lines, const char* label) {
  if (lines.empty()) throw ParseError(std::string("missing '") + label + "' line", 1, 1);
  const auto& first = lines[0];
  if (first[0].text != label || first.size() != 2) {
    fail(std::string("expected '") + label + " <count>'", first[0]);
  }
  const int n = parse_int(first[1], "vertex count");
  if (n < 1 || n > kMaxVertices) fail("vertex count " + first[1].text + " outside [1, 16]", first[1]);
  return n;
}

Graph parse_edges(int n, const std::vector<Token>& line, std::size_t from) {
  Graph g(n);
  for (std::size_t k = from; k < line.size(); ++k) {
    const Token& t = line[k];
    const std::size_t dash = t.text.find('-');
    const std::string bad = "malformed edge '" + t.text + "'";
    if (dash == std::string::npos) fail(bad, t);
    const Token a{t.text.substr(0, dash), t.line, t.column};
    const Token b{t.text.substr(dash + 1), t.line, t.column + static_cast<int>(dash) + 1};
    if (a.text.empty() || b.text.empty()) fail(bad, t);
    for (char c : a.text + b.text)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(bad, t);
    if (a.text.size() > 3 || b.text.size() > 3) fail(bad + ": vertex out of range", t);
    const int i = std::stoi(a.text), j = std::stoi(b.text);
    if (i == j) fail(bad + ": self-loop", t);
    if (i < 1 || j < 1 || i > n || j > n) fail(bad + ": vertex out of range", t);
    g.add_edge(i - 1, j - 1);
  }
  return g;
}

Statement parse_statement(const std::vector<Token>& line, int n) {
  // Re-split the line on parentheses and the bar.
  std::vector<Token> parts;
  for (const Token& t : line) {
    std::string cur;
    int cur_col = t.column;
    for (std::size_t p = 0; p < t.text.size(); ++p) {
      const char c = t.text[p];
      if (c == '(' || c == ')' || c == '|') {
        if (!cur.empty()) parts.push_back({cur, t.line, cur_col});
        parts.push_back({std::string(1, c), t.line, t.column + static_cast<int>(p)});
        cur.clear();
        cur_col = t.column + static_cast<int>(p) + 1;
      } else {
        if (cur.empty()) cur_col = t.column + static_cast<int>(p);
        cur += c;
      }
    }
    if (!cur.empty()) parts.push_back({cur, t.line, cur_col});
  }
  const Token& first = line.front();
  if (parts.size() < 5 || parts.front().text != "(" || parts.back().text != ")" ||
      parts[3].text != "|") {
    fail("malformed statement, expected '(i j | k ...)'", first);
  }
  auto vertex = [&](const Token& t) {
    const int v = parse_int(t, "vertex");
    if (v < 1 || v > n) fail("vertex " + t.text + " out of range", t);
    return v - 1;
  };
  const int i = vertex(parts[1]);
  const int j = vertex(parts[2]);
  VertexSet k = 0;
  for (std::size_t p = 4; p + 1 < parts.size(); ++p) {
    const int v = vertex(parts[p]);
    if (v == i || v == j || (k & singleton(v)) != 0) fail("repeated vertex " + parts[p].text, parts[p]);
    k |= singleton(v);
  }
  if (i == j) fail("statement needs two distinct vertices", parts[2]);
  return Statement::make(i, j, k);
}

}  // namespace

GraphPair parse_graph_pair(std::string_view text) {
  const auto lines = tokenize(text);
  const int n = parse_size_line(lines, "n");
  GraphPair pair{Graph(n), Graph(n)};
  bool seen_g = false, seen_h = false;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Token& head = lines[l][0];
    if (head.text == "G" && !seen_g) {
      pair.g = parse_edges(n, lines[l], 1);
      seen_g = true;
    } else if (head.text == "H" && !seen_h) {
      pair.h = parse_edges(n, lines[l], 1);
      seen_h = true;
    } else {
      fail("unexpected '" + head.text + "', expected a 'G' or 'H' line", head);
    }
  }
  if (!seen_g || !seen_h) {
    const int line = lines.back()[0].line + 1;
    throw ParseError(seen_g ? "missing 'H' line" : "missing 'G' line", line, 1);
  }
  return pair;
}

Relation parse_relation(std::string_view text) {
  const auto lines = tokenize(text);
  const int n = parse_size_line(lines, "n");
  if (n < 2) fail("relations need n >= 2", lines[0][1]);
  Relation r(n);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto& line = lines[l];
    if (line[0].text == "hex") {
      if (line.size() != 2 || lines.size() != 2) fail("a 'hex' line must be the only entry", line[0]);
      try {
        return Relation::from_hex(n, line[1].text);
      } catch (const ArgumentError& e) {
        fail(e.what(), line[1]);
      }
    }
    r.insert(parse_statement(line, n));
  }
  return r;
}

RationalSymMatrix parse_matrix(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty matrix file", 1, 1);
  if (lines[0].size() != 1) fail("expected the matrix size alone on the first line", lines[0][0]);
  const int n = parse_int(lines[0][0], "matrix size");
  if (n < 1 || n > kMaxVertices) fail("matrix size outside [1, 16]", lines[0][0]);
  if (static_cast<int>(lines.size()) != n + 1) {
    const Token& where = lines.back().back();
    fail("expected " + std::to_string(n) + " rows, got " + std::to_string(lines.size() - 1), where);
  }
  DenseMatrix<Rational> a(n, n);
  for (int r = 0; r < n; ++r) {
    const auto& line = lines[r + 1];
    if (static_cast<int>(line.size()) != n) {
      fail("expected " + std::to_string(n) + " entries in row " + std::to_string(r + 1), line[0]);
    }
    for (int c = 0; c < n; ++c) {
      try {
        a(r, c) = parse_rational(line[c].text);
      } catch (const ArgumentError& e) {
        fail(e.what(), line[c]);
      }
    }
  }
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c)
      if (a(r, c) != a(c, r)) {
        fail("matrix is not symmetric at entry (" + std::to_string(c + 1) + ", " +
                 std::to_string(r + 1) + ")",
             lines[c + 1][r]);
      }
  return RationalSymMatrix::from_dense(a);
}

std::string format_graph_pair(const GraphPair& pair) {
  std::string out = "n " + std::to_string(pair.g.size()) + "\n";
  const std::string g = pair.g.to_string(), h = pair.h.to_string();
  out += g.empty() ? "G\n" : "G " + g + "\n";
  out += h.empty() ? "H\n" : "H " + h + "\n";
  return out;
}

std::string format_relation_hex(const Relation& r) {
  return "n " + std::to_string(r.ground_size()) + "\nhex " + r.to_hex() + "\n";
}

std::string format_relation_list(const Relation& r) {
  return "n " + std::to_string(r.ground_size()) + "\n" + r.to_list();
}

std::string format_matrix(const RationalSymMatrix& s) {
  std::string out = std::to_string(s.size()) + "\n";
  for (int i = 0; i < s.size(); ++i) {
    for (int j = 0; j < s.size(); ++j) {
      if (j > 0) out += " ";
      out += to_string(s(i, j));
    }
    out += "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace dmarkov
