#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matroid/constructions.hpp"
#include "matroid/linear_algebra.hpp"
#include "matroid/matroid.hpp"

namespace matroid::io {

enum class Format { Bases, Revlex, Matrix, Graph, Named };

inline Format parse_format(std::string_view s) {
  if (s == "bases") return Format::Bases;
  if (s == "revlex") return Format::Revlex;
  if (s == "matrix") return Format::Matrix;
  if (s == "graph") return Format::Graph;
  if (s == "named") return Format::Named;
  fail(ErrorCode::Parse, "unknown format '" + std::string(s) + "'");
}

namespace detail {

/// Whitespace tokenizer that remembers line and column, skipping '#' comments.
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  bool next(std::string& tok) {
    skip();
    if (pos_ >= text_.size()) return false;
    tok_line_ = line_;
    tok_col_ = col_;
    tok.clear();
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '#')
      advance(tok);
    return true;
  }

  std::string take(const char* what) {
    std::string t;
    if (!next(t)) error(std::string("expected ") + what + ", found end of input");
    return t;
  }

  long long take_int(const char* what) {
    std::string t = take(what);
    try {
      std::size_t used = 0;
      long long v = std::stoll(t, &used);
      if (used != t.size()) throw std::invalid_argument(t);
      return v;
    } catch (const std::exception&) {
      error(std::string("expected ") + what + ", found '" + t + "'");
    }
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::Parse, "line " + std::to_string(tok_line_) + ", column " +
                               std::to_string(tok_col_) + ": " + msg);
  }

  /// Rest of the current line (after the last token), trimmed.
  std::string rest_of_line() {
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '\n') advance(out);
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) out.pop_back();
    while (!out.empty() && std::isspace(static_cast<unsigned char>(out.front()))) out.erase(0, 1);
    return out;
  }

 private:
  void advance(std::string& into) {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    into.push_back(text_[pos_++]);
  }
  void skip() {
    std::string sink;
    while (pos_ < text_.size()) {
      if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance(sink);
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance(sink);
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  int tok_line_ = 1, tok_col_ = 1;
};

inline int digit_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'z') return 10 + (c - 'a');
  return -1;
}

inline char digit_char(int e) { return e < 10 ? static_cast<char>('0' + e) : static_cast<char>('a' + e - 10); }

/// "013" (one character per element, 0-9 then a-z), "{0,1,13}", "0,1,13" or "-" / "{}" for ∅.
inline Mask parse_subset(const Lexer& lx, const std::string& tok) {
  if (tok == "-" || tok == "{}") return 0;
  std::string body = tok;
  bool listed = body.find(',') != std::string::npos || body.front() == '{';
  if (body.front() == '{') {
    if (body.back() != '}') lx.error("unterminated subset '" + tok + "'");
    body = body.substr(1, body.size() - 2);
  }
  Mask s = 0;
  auto put = [&](int e) {
    if (e < 0 || e >= max_ground_set) lx.error("element out of range in '" + tok + "'");
    if (contains(s, e)) lx.error("repeated element in '" + tok + "'");
    s |= bit(e);
  };
  if (listed) {
    std::stringstream ss(body);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty()) lx.error("empty element in '" + tok + "'");
      for (char c : part)
        if (!std::isdigit(static_cast<unsigned char>(c))) lx.error("bad element in '" + tok + "'");
      put(std::stoi(part));
    }
  } else {
    for (char c : body) {
      int e = digit_value(c);
      if (e < 0) lx.error("bad element character in '" + tok + "'");
      put(e);
    }
  }
  return s;
}

}  // namespace detail

inline std::string subset_token(Mask s, int n) {
  if (s == 0) return "-";
  if (n <= 36) {
    std::string out;
    for_each_element(s, [&](int e) { out += detail::digit_char(e); });
    return out;
  }
  return to_string(s);
}

/// Bases format: header "n r" followed by one token per basis.
inline Matroid parse_bases(std::string_view text) {
  detail::Lexer lx(text);
  const long long n = lx.take_int("ground set size");
  const long long r = lx.take_int("rank");
  if (n < 0 || n > max_ground_set) lx.error("ground set size out of range");
  std::vector<Mask> bases;
  std::string tok;
  while (lx.next(tok)) {
    Mask s = detail::parse_subset(lx, tok);
    if (!is_subset(s, full_mask(static_cast<int>(n)))) lx.error("basis '" + tok + "' leaves E");
    if (popcount(s) != r) lx.error("basis '" + tok + "' does not have " + std::to_string(r) + " elements");
    bases.push_back(s);
  }
  if (bases.empty() && r == 0) bases.push_back(0);
  return Matroid::from_bases(static_cast<int>(n), std::move(bases));
}

inline std::string write_bases(const Matroid& m) {
  std::string out = std::to_string(m.size()) + " " + std::to_string(m.rank()) + "\n";
  for (std::size_t i = 0; i < m.bases().size(); ++i) {
    out += (i ? " " : "") + subset_token(m.bases()[i], m.size());
  }
  return out + "\n";
}

/// One revlex line: r-subsets in colex order (ascending reversed tuples),
/// '*' for a basis, '0' otherwise.
inline std::string revlex_line(const Matroid& m) {
  std::string out;
  for_each_k_subset(m.size(), m.rank(), [&](Mask s) { out += m.is_basis(s) ? '*' : '0'; });
  return out;
}

inline Matroid from_revlex(int n, int r, std::string_view line) {
  std::vector<Mask> bases;
  std::size_t i = 0;
  bool bad = false;
  for_each_k_subset(n, r, [&](Mask s) {
    if (i >= line.size()) {
      bad = true;
      return;
    }
    const char c = line[i++];
    if (c == '*') bases.push_back(s);
    else if (c != '0') bad = true;
  });
  if (bad || i != line.size())
    fail(ErrorCode::Parse, "revlex line does not match C(" + std::to_string(n) + "," +
                               std::to_string(r) + ") characters of '*'/'0'");
  return Matroid::from_bases(n, std::move(bases));
}

/// Revlex database: blocks of "n r count" headers, each followed by count lines.
inline std::vector<Matroid> parse_revlex(std::string_view text) {
  detail::Lexer lx(text);
  std::vector<Matroid> out;
  std::string tok;
  while (lx.next(tok)) {
    long long n = 0;
    try {
      n = std::stoll(tok);
    } catch (const std::exception&) {
      lx.error("expected block header, found '" + tok + "'");
    }
    const long long r = lx.take_int("rank");
    const long long count = lx.take_int("matroid count");
    if (n < 0 || n > max_ground_set || r < 0 || r > n || count < 0) lx.error("bad block header");
    for (long long k = 0; k < count; ++k) {
      std::string line = lx.take("revlex line");
      try {
        out.push_back(from_revlex(static_cast<int>(n), static_cast<int>(r), line));
      } catch (const Error& e) {
        lx.error(e.what());
      }
    }
  }
  return out;
}

inline Matroid parse_revlex_single(std::string_view text) {
  auto all = parse_revlex(text);
  if (all.empty()) fail(ErrorCode::Parse, "no matroid in revlex input");
  return all.front();
}

/// Groups consecutive matroids of equal (n, r) into blocks.
inline std::string write_revlex(const std::vector<Matroid>& ms) {
  std::string out;
  std::size_t i = 0;
  while (i < ms.size()) {
    std::size_t j = i;
    while (j < ms.size() && ms[j].size() == ms[i].size() && ms[j].rank() == ms[i].rank()) ++j;
    out += std::to_string(ms[i].size()) + " " + std::to_string(ms[i].rank()) + " " +
           std::to_string(j - i) + "\n";
    for (std::size_t k = i; k < j; ++k) out += revlex_line(ms[k]) + "\n";
    i = j;
  }
  return out;
}

inline Rational parse_rational(const detail::Lexer& lx, const std::string& tok) {
  try {
    auto slash = tok.find('/');
    if (slash == std::string::npos) return Rational(BigInt(tok));
    BigInt den(tok.substr(slash + 1));
    if (den == 0) lx.error("zero denominator in '" + tok + "'");
    return Rational(BigInt(tok.substr(0, slash)), den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    lx.error("bad number '" + tok + "'");
  }
}

/// Matrix format: "gf p" or "q", then "rows cols", then the entries row by row.
/// Over q entries may be fractions "a/b".
inline Matroid parse_matrix(std::string_view text) {
  detail::Lexer lx(text);
  const std::string field = lx.take("field ('gf' or 'q')");
  long long p = 0;
  if (field == "gf") {
    p = lx.take_int("prime");
    if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p));
  } else if (field != "q") {
    lx.error("expected 'gf' or 'q', found '" + field + "'");
  }
  const long long rows = lx.take_int("row count");
  const long long cols = lx.take_int("column count");
  if (rows < 0 || cols < 0 || cols > max_ground_set) lx.error("matrix dimensions out of range");
  if (p > 0) {
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
    for (auto& row : a)
      for (auto& x : row) x = lx.take_int("matrix entry");
    return linear_matroid(Field::gf(p), a);
  }
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (auto& row : a)
    for (auto& x : row) x = parse_rational(lx, lx.take("matrix entry"));
  return linear_matroid(a);
}

/// Graph format: "V E" then E lines "u v"; the matroid is graphic.
inline Graph parse_graph_data(std::string_view text) {
  detail::Lexer lx(text);
  Graph g;
  g.vertices = static_cast<int>(lx.take_int("vertex count"));
  const long long e = lx.take_int("edge count");
  if (g.vertices < 0 || e < 0 || e > max_ground_set) lx.error("graph size out of range");
  for (long long i = 0; i < e; ++i) {
    const long long u = lx.take_int("edge endpoint");
    const long long v = lx.take_int("edge endpoint");
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices) lx.error("edge endpoint out of range");
    g.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

inline Matroid parse_graph(std::string_view text) { return graphic(parse_graph_data(text)); }

inline Matroid parse(std::string_view text, Format f) {
  switch (f) {
    case Format::Bases: return parse_bases(text);
    case Format::Revlex: return parse_revlex_single(text);
    case Format::Matrix: return parse_matrix(text);
    case Format::Graph: return parse_graph(text);
    case Format::Named: {
      detail::Lexer lx(text);
      return named(lx.take("matroid name"));
    }
  }
  fail(ErrorCode::Parse, "unknown format");
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<Matroid> load_database(const std::string& path) { return parse_revlex(read_file(path)); }

}  // namespace matroid::io
