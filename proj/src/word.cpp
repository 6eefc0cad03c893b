#include "galgrp/word.hpp"

#include <cstdlib>
#include <stdexcept>

namespace galgrp {

Word Word::generator(const std::string &name, long long exp) {
  Word w;
  if (exp != 0) w.syllables_.push_back({name, exp});
  return w;
}

Word Word::from_syllables(const std::vector<Syllable> &syllables) {
  Word w;
  for (const Syllable &s : syllables) {
    if (s.exp == 0) continue;
    if (!w.syllables_.empty() && w.syllables_.back().gen == s.gen) {
      w.syllables_.back().exp += s.exp;
      if (w.syllables_.back().exp == 0) w.syllables_.pop_back();
    } else {
      w.syllables_.push_back(s);
    }
  }
  return w;
}

std::size_t Word::length() const {
  std::size_t n = 0;
  for (const Syllable &s : syllables_) n += static_cast<std::size_t>(std::llabs(s.exp));
  return n;
}

Word Word::operator*(const Word &rhs) const {
  std::vector<Syllable> all = syllables_;
  all.insert(all.end(), rhs.syllables_.begin(), rhs.syllables_.end());
  return from_syllables(all);
}

Word Word::inverse() const {
  Word w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
    w.syllables_.push_back({it->gen, -it->exp});
  return w;
}

Word Word::pow(long long k) const {
  if (k == 0) return {};
  Word base = k > 0 ? *this : inverse();
  Word out;
  for (long long i = 0; i < std::llabs(k); ++i) out = out * base;
  return out;
}

std::map<std::string, long long> Word::exponent_sums() const {
  std::map<std::string, long long> sums;
  for (const Syllable &s : syllables_) sums[s.gen] += s.exp;
  return sums;
}

std::string Word::str() const {
  if (syllables_.empty()) return "1";
  std::string out;
  for (const Syllable &s : syllables_) {
    if (!out.empty()) out += ' ';
    out += s.gen;
    if (s.exp != 1) out += '^' + std::to_string(s.exp);
  }
  return out;
}

Word commutator(const Word &a, const Word &b) { return a * b * a.inverse() * b.inverse(); }

Word triple_commutator(const Word &a, const Word &b) {
  return a * b * a * b.inverse() * a.inverse() * b.inverse();
}

} // namespace galgrp
