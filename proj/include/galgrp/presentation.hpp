#pragma once

#include "galgrp/perm.hpp"
#include "galgrp/word.hpp"

#include <string>
#include <vector>

namespace galgrp {

/// Group presentation: named generators plus reduced relator words.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

/// Parses the line-oriented format
///
///   gens: a, b          # '#' starts a comment
///   rels: a^2, b^3, (ab)^2, [a,b], <a,b>
///
/// Words are products of generator names (longest declared match wins),
/// optional ^k exponents, parenthesized subwords, commutators [w1,w2] and
/// triple commutators <w1,w2>. Throws ParseError with line/column.
Presentation parse_presentation(const std::string &text);

/// Evaluates a word under an assignment of permutations to the generator
/// names, in declaration order.
Perm evaluate_word(const Word &w, const std::vector<std::string> &names,
                   const std::vector<Perm> &images);

} // namespace galgrp
