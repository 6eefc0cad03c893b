#include "galgrp/kernel_constructions.hpp"

#include "galgrp/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace galgrp {

namespace {

template <class T, class Mul, class Inv>
EElement<T> e_multiply_impl(const EElement<T> &x, const EElement<T> &y, Mul mul, Inv) {
  if (x.coords.size() != y.coords.size())
    throw std::invalid_argument("semidirect element length mismatch");
  EElement<T> out;
  out.coords.resize(x.coords.size());
  // (x.coords * sigma(y.coords))[j] = x.coords[j] * y.coords[sigma^-1(j)]
  Perm sigma_inv = x.perm.inverse();
  for (std::size_t j = 0; j < x.coords.size(); ++j)
    out.coords[j] =
        mul(x.coords[j], y.coords[static_cast<std::size_t>(sigma_inv(static_cast<int>(j)))]);
  out.perm = x.perm * y.perm;
  return out;
}

template <class T, class Inv> EElement<T> e_inverse_impl(const EElement<T> &x, Inv inv) {
  EElement<T> out;
  out.coords.resize(x.coords.size());
  for (std::size_t j = 0; j < x.coords.size(); ++j)
    out.coords[j] = inv(x.coords[static_cast<std::size_t>(x.perm(static_cast<int>(j)))]);
  out.perm = x.perm.inverse();
  return out;
}

} // namespace

EPermElement e_multiply(const EPermElement &x, const EPermElement &y) {
  return e_multiply_impl(x, y, [](const Perm &a, const Perm &b) { return a * b; },
                         [](const Perm &a) { return a.inverse(); });
}

EWordElement e_multiply(const EWordElement &x, const EWordElement &y) {
  return e_multiply_impl(x, y, [](const Word &a, const Word &b) { return a * b; },
                         [](const Word &a) { return a.inverse(); });
}

EPermElement e_inverse(const EPermElement &x) {
  return e_inverse_impl(x, [](const Perm &a) { return a.inverse(); });
}

EWordElement e_inverse(const EWordElement &x) {
  return e_inverse_impl(x, [](const Word &a) { return a.inverse(); });
}

bool e_is_identity(const EPermElement &x) {
  return x.perm.is_identity() &&
         std::all_of(x.coords.begin(), x.coords.end(), [](const Perm &p) { return p.is_identity(); });
}

bool e_is_identity(const EWordElement &x) {
  return x.perm.is_identity() &&
         std::all_of(x.coords.begin(), x.coords.end(), [](const Word &w) { return w.is_identity(); });
}

std::string e_str(const EWordElement &x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) out += ", ";
    out += x.coords[i].str();
  }
  out += "; " + x.perm.str() + ")";
  return out;
}

std::vector<Int> psi_map(const std::vector<Perm> &coords, const Abelianization &ab) {
  if (coords.empty()) throw std::invalid_argument("empty tuple");
  Perm product(coords.front().degree());
  for (const Perm &p : coords) product = product * p;
  return ab.class_of(product); // class_of rejects elements outside the group
}

std::vector<Int> psi_map(const std::vector<Perm> &coords, const PermGroup &g) {
  for (const Perm &p : coords)
    if (!g.contains(p)) throw std::invalid_argument("tuple coordinate outside the group");
  return psi_map(coords, abelianization_map(g));
}

Perm KGroupRealization::slot(const Perm &p, int coordinate) const {
  Perm out(group.degree());
  std::vector<int> images = out.images();
  std::size_t offset = static_cast<std::size_t>(coordinate) * base_degree;
  for (std::size_t x = 0; x < base_degree; ++x)
    images[offset + x] = static_cast<int>(offset) + p(static_cast<int>(x));
  return Perm(std::move(images));
}

Perm KGroupRealization::coordinate_permutation(const Perm &sigma) const {
  std::vector<int> images(group.degree());
  for (int block = 0; block < n; ++block) {
    std::size_t from = static_cast<std::size_t>(block) * base_degree;
    std::size_t to = static_cast<std::size_t>(sigma(block)) * base_degree;
    for (std::size_t x = 0; x < base_degree; ++x)
      images[from + x] = static_cast<int>(to + x);
  }
  return Perm(std::move(images));
}

KGroupRealization k_group_finite(const PermGroup &g, int n) {
  if (n < 3) throw std::invalid_argument("the kernel construction needs n >= 3");

  Int base_order = static_cast<Int>(g.order());
  FgAbelianGroup gab = abelianization(g);
  Int expected = 1;
  for (int i = 0; i < n; ++i) expected *= base_order;
  expected /= *gab.order();
  if (expected > Int(g.element_cap()))
    throw CapExceededError("kernel group order " + expected.str() + " exceeds cap of " +
                           std::to_string(g.element_cap()));

  KGroupRealization k;
  k.n = n;
  k.base_degree = g.degree();
  k.base_order = base_order;
  k.base_abelianization = gab;
  k.group = PermGroup(static_cast<std::size_t>(n) * g.degree(), {}, g.element_cap());

  std::vector<Perm> gens;
  std::unordered_set<Perm> seen;
  for (const Perm &a : g.generators()) {
    if (a.is_identity()) continue;
    Perm ainv = a.inverse();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        Perm tuple = k.slot(a, i) * k.slot(ainv, j);
        if (seen.insert(tuple).second) gens.push_back(tuple);
      }
  }
  k.group = PermGroup(static_cast<std::size_t>(n) * g.degree(), std::move(gens), g.element_cap());

  if (Int(k.group.order()) != expected)
    throw std::logic_error("kernel realization does not match the order formula");
  return k;
}

FgAbelianGroup k_group_abelian(const FgAbelianGroup &a, int n) {
  if (n < 3) throw std::invalid_argument("the kernel construction needs n >= 3");
  return a.power(static_cast<std::size_t>(n) - 1);
}

PermGroup commutator_with_symmetric(const KGroupRealization &k, bool fix_first) {
  int fixed = fix_first ? 0 : k.n - 1;

  // coordinate permutations fixing the chosen slot
  std::vector<int> movable;
  for (int i = 0; i < k.n; ++i)
    if (i != fixed) movable.push_back(i);

  std::vector<Perm> actions;
  std::vector<int> arrangement = movable;
  std::sort(arrangement.begin(), arrangement.end());
  do {
    std::vector<int> images(static_cast<std::size_t>(k.n));
    images[static_cast<std::size_t>(fixed)] = fixed;
    for (std::size_t idx = 0; idx < movable.size(); ++idx)
      images[static_cast<std::size_t>(movable[idx])] = arrangement[idx];
    Perm sigma{std::move(images)};
    if (!sigma.is_identity()) actions.push_back(k.coordinate_permutation(sigma));
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));

  std::vector<Perm> gens;
  std::unordered_set<Perm> seen;
  for (const Perm &x : k.group.elements())
    for (const Perm &act : actions) {
      Perm c = x * (act * x.inverse() * act.inverse());
      if (!c.is_identity() && seen.insert(c).second) gens.push_back(c);
    }
  return subgroup_generated(k.group, gens);
}

PermGroup recover_quotient(const PermGroup &g, int n) {
  KGroupRealization k = k_group_finite(g, n);
  PermGroup commutators = commutator_with_symmetric(k, true);
  return quotient_group(k.group, commutators);
}

KTildeDescriptor ktilde_structure(const FgAbelianGroup &a, int n) {
  if (n < 3) throw std::invalid_argument("the kernel construction needs n >= 3");
  KTildeDescriptor d;
  d.base_group = a;
  d.n = n;
  d.h2 = exterior_square(a);
  d.k_part = k_group_abelian(a, n);
  d.abelianization = d.k_part;
  if (d.h2.is_finite() && d.k_part.is_finite()) d.order = *d.h2.order() * *d.k_part.order();
  if (a.is_cyclic()) d.exact_iso = d.k_part;
  return d;
}

EWordElement phi_image(const SndRelator &relator, int n) {
  std::size_t deg = static_cast<std::size_t>(n);
  auto identity = [&] {
    EWordElement e;
    e.coords.assign(deg, Word());
    e.perm = Perm(deg);
    return e;
  };

  auto letter_image = [&](const SndLetter &l) {
    EWordElement e = identity();
    if (l.is_generator()) {
      if (l.gen > 1) {
        Word f = Word::generator("f" + std::to_string(l.gen));
        e.coords[0] = f;
        e.coords[1] = f.inverse();
      }
      e.perm = Perm::transposition(deg, 0, 1);
    } else {
      e.perm = l.perm;
    }
    int reps = std::abs(l.exp);
    EWordElement power = identity();
    for (int i = 0; i < reps; ++i) power = e_multiply(power, e);
    return l.exp >= 0 ? power : e_inverse(power);
  };

  EWordElement image = identity();
  for (const SndLetter &l : relator.letters) image = e_multiply(image, letter_image(l));
  return image;
}

VerificationReport verify_phi_relators(int n, int d, bool allow_small_n, bool allow_large_n) {
  if (n < 5 && !allow_small_n)
    throw std::invalid_argument(
        "the presentation is only known to match the semidirect product for n >= 5; "
        "pass allow_small_n to explore smaller n");

  std::vector<SndRelator> relators = generate_snd_relators(n, d, allow_large_n);
  VerificationReport report;
  report.n = n;
  report.d = d;
  report.relator_count = relators.size();
  for (std::size_t i = 0; i < relators.size(); ++i) {
    EWordElement image = phi_image(relators[i], n);
    if (!e_is_identity(image))
      report.failures.push_back({i, relators[i].str(), e_str(image)});
  }
  report.all_identity = report.failures.empty();
  return report;
}

} // namespace galgrp
