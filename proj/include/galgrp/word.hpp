#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace galgrp {

struct Syllable {
  std::string gen;
  long long exp = 0;
  bool operator==(const Syllable &) const = default;
};

/// Freely reduced word over named generators. Reduction is a class invariant:
/// adjacent syllables never share a generator and no exponent is zero.
class Word {
public:
  Word() = default; // identity

  static Word generator(const std::string &name, long long exp = 1);
  /// Reduces an arbitrary syllable sequence.
  static Word from_syllables(const std::vector<Syllable> &syllables);

  const std::vector<Syllable> &syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  /// Sum of |exponent| over syllables.
  std::size_t length() const;

  Word operator*(const Word &rhs) const;
  Word inverse() const;
  Word pow(long long k) const;

  std::map<std::string, long long> exponent_sums() const;

  /// "a^2 b^-1"; the identity prints "1".
  std::string str() const;

  bool operator==(const Word &) const = default;

private:
  std::vector<Syllable> syllables_;
};

/// [a, b] = a b a^-1 b^-1
Word commutator(const Word &a, const Word &b);

/// <a, b> = a b a b^-1 a^-1 b^-1
Word triple_commutator(const Word &a, const Word &b);

} // namespace galgrp
