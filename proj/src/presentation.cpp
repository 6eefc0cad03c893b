#include "galgrp/presentation.hpp"

#include "galgrp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace galgrp {

namespace {

struct Cursor {
  const std::string &text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  // Skips spaces, tabs and comments but not newlines.
  void skip_inline() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  void skip_all() {
    for (;;) {
      skip_inline();
      if (!eof() && peek() == '\n')
        advance();
      else
        break;
    }
  }

  ParseError error(const std::string &msg) const { return ParseError(line, col, msg); }
};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_identifier(Cursor &cur) {
  if (cur.eof() || !(std::isalpha(static_cast<unsigned char>(cur.peek())) || cur.peek() == '_'))
    throw cur.error("expected identifier");
  std::string name;
  while (!cur.eof() && is_name_char(cur.peek())) {
    name += cur.peek();
    cur.advance();
  }
  return name;
}

long long read_integer(Cursor &cur) {
  bool negative = false;
  if (!cur.eof() && (cur.peek() == '-' || cur.peek() == '+')) {
    negative = cur.peek() == '-';
    cur.advance();
  }
  if (cur.eof() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
    throw cur.error("expected integer");
  long long value = 0;
  while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) {
    value = value * 10 + (cur.peek() - '0');
    cur.advance();
  }
  return negative ? -value : value;
}

class WordParser {
public:
  WordParser(Cursor &cur, const std::vector<std::string> &gens) : cur_(cur), gens_(gens) {}

  // word := factor*   (stops at , ) ] > or end of line)
  Word parse_word() {
    Word w;
    for (;;) {
      cur_.skip_inline();
      if (cur_.eof()) break;
      char c = cur_.peek();
      if (c == ',' || c == ')' || c == ']' || c == '>' || c == '\n') break;
      w = w * parse_factor();
    }
    return w;
  }

private:
  Word parse_factor() {
    Word base = parse_primary();
    cur_.skip_inline();
    if (!cur_.eof() && cur_.peek() == '^') {
      cur_.advance();
      cur_.skip_inline();
      long long k = read_integer(cur_);
      if (k == 0) throw cur_.error("exponent must be nonzero");
      return base.pow(k);
    }
    return base;
  }

  Word parse_primary() {
    char c = cur_.peek();
    if (c == '(') {
      cur_.advance();
      Word inner = parse_word();
      expect(')');
      return inner;
    }
    if (c == '[') {
      cur_.advance();
      Word a = parse_word();
      expect(',');
      Word b = parse_word();
      expect(']');
      return commutator(a, b);
    }
    if (c == '<') {
      cur_.advance();
      Word a = parse_word();
      expect(',');
      Word b = parse_word();
      expect('>');
      return triple_commutator(a, b);
    }
    return parse_generator();
  }

  // Longest declared generator name matching at the cursor.
  Word parse_generator() {
    std::size_t best = 0;
    for (const std::string &g : gens_) {
      if (g.size() <= best) continue;
      if (cur_.text.compare(cur_.pos, g.size(), g) == 0) {
        // must not be a strict prefix of a longer identifier run unless a
        // declared name extends it; handled by taking the longest match.
        best = g.size();
      }
    }
    if (best == 0) {
      if (!cur_.eof() && (std::isalpha(static_cast<unsigned char>(cur_.peek())) || cur_.peek() == '_'))
        throw cur_.error("undeclared generator name");
      throw cur_.error("expected generator");
    }
    std::string name = cur_.text.substr(cur_.pos, best);
    for (std::size_t i = 0; i < best; ++i) cur_.advance();
    return Word::generator(name);
  }

  void expect(char c) {
    cur_.skip_inline();
    if (cur_.eof() || cur_.peek() != c)
      throw cur_.error(std::string("expected '") + c + "'");
    cur_.advance();
  }

  Cursor &cur_;
  const std::vector<std::string> &gens_;
};

void expect_keyword(Cursor &cur, const std::string &kw) {
  cur.skip_all();
  if (cur.text.compare(cur.pos, kw.size(), kw) != 0)
    throw cur.error("expected '" + kw + "'");
  for (std::size_t i = 0; i < kw.size(); ++i) cur.advance();
}

} // namespace

Presentation parse_presentation(const std::string &text) {
  Cursor cur{text};
  Presentation p;

  expect_keyword(cur, "gens:");
  for (;;) {
    cur.skip_inline();
    std::string name = read_identifier(cur);
    if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end())
      throw cur.error("duplicate generator '" + name + "'");
    p.generators.push_back(name);
    cur.skip_inline();
    if (!cur.eof() && cur.peek() == ',')
      cur.advance();
    else
      break;
  }

  cur.skip_all();
  if (cur.eof()) return p; // relator-free presentation

  expect_keyword(cur, "rels:");
  cur.skip_inline();
  while (!cur.eof() && cur.peek() != '\n') {
    WordParser wp(cur, p.generators);
    p.relators.push_back(wp.parse_word());
    cur.skip_inline();
    if (!cur.eof() && cur.peek() == ',') {
      cur.advance();
      // a trailing comma lets the relator list continue on the next line
      cur.skip_all();
    } else {
      break;
    }
  }
  cur.skip_all();
  if (!cur.eof()) throw cur.error("unexpected trailing input");
  return p;
}

Perm evaluate_word(const Word &w, const std::vector<std::string> &names,
                   const std::vector<Perm> &images) {
  if (names.size() != images.size())
    throw std::invalid_argument("assignment size mismatch");
  if (images.empty()) throw std::invalid_argument("empty assignment");
  Perm result(images.front().degree());
  for (const Syllable &s : w.syllables()) {
    auto it = std::find(names.begin(), names.end(), s.gen);
    if (it == names.end()) throw std::invalid_argument("word uses unassigned generator");
    const Perm &base = images[static_cast<std::size_t>(it - names.begin())];
    Perm factor = s.exp > 0 ? base : base.inverse();
    for (long long i = 0; i < std::llabs(s.exp); ++i) result = result * factor;
  }
  return result;
}

} // namespace galgrp
