#include "galgrp/snd_relators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace galgrp {

std::string snd_family_name(SndFamily f) {
  switch (f) {
  case SndFamily::Square: return "square";
  case SndFamily::IdentifyS1: return "identify_s1";
  case SndFamily::CommuteDisjoint: return "commute_disjoint";
  case SndFamily::TripleShared: return "triple_shared";
  case SndFamily::ConjCommuteDisjoint: return "conj_commute_disjoint";
  case SndFamily::ConjTripleShared: return "conj_triple_shared";
  }
  return "?";
}

std::string SndLetter::str() const {
  std::string base = is_generator() ? "s" + std::to_string(gen) : perm.str();
  if (exp != 1) base += "^" + std::to_string(exp);
  return base;
}

std::string SndRelator::str() const {
  std::string out;
  for (const SndLetter &l : letters) {
    if (!out.empty()) out += ' ';
    out += l.str();
  }
  return out;
}

namespace {

std::array<int, 2> moved_points(const Perm &t) {
  std::array<int, 2> pts{-1, -1};
  for (std::size_t x = 0; x < t.degree(); ++x)
    if (t(static_cast<int>(x)) != static_cast<int>(x)) {
      if (pts[0] < 0)
        pts[0] = static_cast<int>(x);
      else
        pts[1] = static_cast<int>(x);
    }
  if (pts[1] < 0) throw std::invalid_argument("not a transposition");
  return pts;
}

SndLetter gen_letter(int i, int exp = 1) { return SndLetter{i, Perm(), exp}; }
SndLetter perm_letter(const Perm &p, int exp = 1) { return SndLetter{0, p, exp}; }

// a b a^-1 b^-1 at the letter level
std::vector<SndLetter> letters_commutator(const std::vector<SndLetter> &a,
                                          const std::vector<SndLetter> &b) {
  auto inv = [](const std::vector<SndLetter> &w) {
    std::vector<SndLetter> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, it->perm, -it->exp});
    return out;
  };
  std::vector<SndLetter> out = a;
  auto append = [&out](const std::vector<SndLetter> &w) {
    out.insert(out.end(), w.begin(), w.end());
  };
  append(b);
  append(inv(a));
  append(inv(b));
  return out;
}

// a b a b^-1 a^-1 b^-1 at the letter level
std::vector<SndLetter> letters_triple(const std::vector<SndLetter> &a,
                                      const std::vector<SndLetter> &b) {
  auto inv = [](const std::vector<SndLetter> &w) {
    std::vector<SndLetter> out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, it->perm, -it->exp});
    return out;
  };
  std::vector<SndLetter> out = a;
  auto append = [&out](const std::vector<SndLetter> &w) {
    out.insert(out.end(), w.begin(), w.end());
  };
  append(b);
  append(a);
  append(inv(b));
  append(inv(a));
  append(inv(b));
  return out;
}

} // namespace

TranspositionRelation classify_transpositions(const Perm &a, const Perm &b) {
  auto pa = moved_points(a);
  auto pb = moved_points(b);
  int shared = 0;
  for (int x : pa)
    for (int y : pb)
      if (x == y) ++shared;
  if (shared == 2) return TranspositionRelation::Equal;
  if (shared == 1) return TranspositionRelation::SharedOne;
  return TranspositionRelation::Disjoint;
}

std::vector<SndRelator> generate_snd_relators(int n, int d, bool allow_large_n) {
  if (n < 3) throw std::invalid_argument("the presentation needs n >= 3");
  if (d < 1) throw std::invalid_argument("the presentation needs d >= 1");
  if (n > 6 && !allow_large_n)
    throw std::invalid_argument(
        "full conjugator enumeration over n! permutations is capped at n = 6; "
        "pass allow_large_n to override");

  std::size_t deg = static_cast<std::size_t>(n);
  Perm swap01 = Perm::transposition(deg, 0, 1);
  std::vector<SndRelator> out;

  for (int i = 1; i <= d; ++i)
    out.push_back({SndFamily::Square, {gen_letter(i, 2)}});

  out.push_back({SndFamily::IdentifyS1, {gen_letter(1), perm_letter(swap01, -1)}});

  // transpositions of the ambient symmetric group, in lexicographic order
  std::vector<Perm> transpositions;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) transpositions.push_back(Perm::transposition(deg, a, b));

  for (int i = 1; i <= d; ++i)
    for (const Perm &t : transpositions) {
      switch (classify_transpositions(swap01, t)) {
      case TranspositionRelation::Disjoint:
        out.push_back({SndFamily::CommuteDisjoint,
                       letters_commutator({gen_letter(i)}, {perm_letter(t)})});
        break;
      case TranspositionRelation::SharedOne:
        out.push_back(
            {SndFamily::TripleShared, letters_triple({gen_letter(i)}, {perm_letter(t)})});
        break;
      case TranspositionRelation::Equal:
        break; // equal transpositions generate no relator
      }
    }

  // Conjugated families: the conjugator matters only through the resulting
  // permutation, so enumerate the n! permutations once each.
  std::vector<int> images(deg);
  std::iota(images.begin(), images.end(), 0);
  do {
    Perm sigma{std::vector<int>(images)};
    Perm conj = sigma * swap01 * sigma.inverse();
    TranspositionRelation rel = classify_transpositions(conj, swap01);
    if (rel == TranspositionRelation::Equal) continue;
    for (int i = 1; i <= d; ++i) {
      std::vector<SndLetter> a;
      if (!sigma.is_identity()) a.push_back(perm_letter(sigma));
      a.push_back(gen_letter(i));
      if (!sigma.is_identity()) a.push_back(perm_letter(sigma, -1));
      for (int j = 1; j <= d; ++j) {
        std::vector<SndLetter> b{gen_letter(j)};
        if (rel == TranspositionRelation::Disjoint)
          out.push_back({SndFamily::ConjCommuteDisjoint, letters_commutator(a, b)});
        else
          out.push_back({SndFamily::ConjTripleShared, letters_triple(a, b)});
      }
    }
  } while (std::next_permutation(images.begin(), images.end()));

  return out;
}

} // namespace galgrp
