#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace galgrp {

/// Permutation of {0, ..., degree-1}, stored as the image array.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::size_t degree);                 // identity
  explicit Perm(std::vector<int> images);            // validated bijection

  static Perm identity(std::size_t degree) { return Perm(degree); }
  /// Transposition (a b), 0-based points.
  static Perm transposition(std::size_t degree, int a, int b);
  /// Single cycle (0 1 ... degree-1).
  static Perm full_cycle(std::size_t degree);
  /// Parse 1-based disjoint cycle notation, e.g. "(1 2)(3 4 5)"; "()" is the
  /// identity. Degree is max(point, min_degree).
  static Perm parse(const std::string &text, std::size_t min_degree = 0);

  std::size_t degree() const { return images_.size(); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int> &images() const { return images_; }

  Perm operator*(const Perm &rhs) const; // (p*q)(x) = p(q(x))
  Perm inverse() const;
  bool is_identity() const;
  /// Extends with fixed points to a larger degree.
  Perm extended(std::size_t degree) const;

  /// 1-based disjoint cycle notation; identity prints "()".
  std::string str() const;

  bool operator==(const Perm &) const = default;
  auto operator<=>(const Perm &) const = default;

private:
  std::vector<int> images_;
};

} // namespace galgrp

template <> struct std::hash<galgrp::Perm> {
  std::size_t operator()(const galgrp::Perm &p) const {
    std::size_t h = p.degree();
    for (int x : p.images()) h = h * 1000003u + static_cast<std::size_t>(x) + 1;
    return h;
  }
};
