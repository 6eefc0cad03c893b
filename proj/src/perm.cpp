#include "galgrp/perm.hpp"

#include "galgrp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace galgrp {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Perm Perm::transposition(std::size_t degree, int a, int b) {
  Perm p(degree);
  std::swap(p.images_[static_cast<std::size_t>(a)], p.images_[static_cast<std::size_t>(b)]);
  return p;
}

Perm Perm::full_cycle(std::size_t degree) {
  Perm p(degree);
  if (degree < 2) return p;
  for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<int>((i + 1) % degree);
  return p;
}

Perm Perm::operator*(const Perm &rhs) const {
  if (degree() != rhs.degree()) throw std::invalid_argument("permutation degree mismatch");
  Perm out;
  out.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    out.images_[x] = images_[static_cast<std::size_t>(rhs.images_[x])];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    out.images_[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  return out;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

Perm Perm::extended(std::size_t degree) const {
  if (degree < images_.size()) throw std::invalid_argument("cannot shrink a permutation");
  Perm out(degree);
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[x] = images_[x];
  return out;
}

std::string Perm::str() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    out += '(';
    std::size_t x = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      seen[x] = true;
      x = static_cast<std::size_t>(images_[x]);
      first = false;
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Perm Perm::parse(const std::string &text, std::size_t min_degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0, col = 1;
  auto fail = [&](const std::string &msg) -> ParseError { return ParseError(1, col, msg); };
  int max_point = -1;

  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    if (c != '(') throw fail("expected '('");
    ++i;
    ++col;
    std::vector<int> cycle;
    for (;;) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++col;
      }
      if (i >= text.size()) throw fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        ++col;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw fail("expected point number");
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
        ++col;
      }
      if (value < 1) throw fail("points are 1-based");
      cycle.push_back(value - 1);
      max_point = std::max(max_point, value - 1);
    }
    if (cycle.size() == 1) throw fail("cycles need at least two points");
    cycles.push_back(std::move(cycle));
  }

  std::size_t degree = std::max(min_degree, static_cast<std::size_t>(max_point + 1));
  Perm p(degree);
  for (const auto &cycle : cycles)
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (p.images_[static_cast<std::size_t>(from)] != from)
        throw ParseError(1, col, "point repeated across cycles");
      p.images_[static_cast<std::size_t>(from)] = to;
    }
  // Re-validate: overlapping cycles can still break bijectivity.
  return Perm(std::move(p.images_));
}

} // namespace galgrp
