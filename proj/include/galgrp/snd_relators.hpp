#pragma once

#include "galgrp/perm.hpp"

#include <string>
#include <vector>

namespace galgrp {

/// Relator families of the layered symmetric-group presentation on
/// generators s_1..s_d together with the symmetric group on n letters.
enum class SndFamily {
  Square,              // s_i^2
  IdentifyS1,          // s_1 (1 2)^-1
  CommuteDisjoint,     // [s_i, t] for transpositions t disjoint from (1 2)
  TripleShared,        // <s_i, t> for transpositions t sharing one index
  ConjCommuteDisjoint, // [g s_i g^-1, s_j] when the conjugated transpositions are disjoint
  ConjTripleShared,    // <g s_i g^-1, s_j> when they share exactly one index
};

std::string snd_family_name(SndFamily f);

/// One letter of a relator: either the layer generator s_{gen} or a
/// permutation of the n letters, raised to a nonzero exponent.
struct SndLetter {
  int gen = 0;  // 1-based s_i index; 0 means permutation letter
  Perm perm;    // degree n, used when gen == 0
  int exp = 1;

  bool is_generator() const { return gen > 0; }
  std::string str() const;
};

struct SndRelator {
  SndFamily family;
  std::vector<SndLetter> letters;
  std::string str() const;
};

/// All relators of the presentation, fully enumerated. The conjugating
/// element ranges over the n! permutations (one word lift per permutation);
/// for n >= 7 this explodes, so it is refused unless allow_large_n is set.
/// Requires n >= 3 and d >= 1.
std::vector<SndRelator> generate_snd_relators(int n, int d, bool allow_large_n = false);

/// How two transpositions sit relative to each other.
enum class TranspositionRelation { Equal, SharedOne, Disjoint };
TranspositionRelation classify_transpositions(const Perm &a, const Perm &b);

} // namespace galgrp
