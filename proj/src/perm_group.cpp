#include "galgrp/perm_group.hpp"

#include "galgrp/errors.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace galgrp {

struct PermGroup::State {
  std::once_flag once;
  std::vector<Perm> elements;
  std::unordered_map<Perm, std::size_t> index;
  // BFS tree: parent element index and generator index used to reach it.
  std::vector<std::pair<std::size_t, std::size_t>> parent;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::size_t element_cap)
    : degree_(degree), cap_(element_cap), generators_(std::move(generators)),
      state_(std::make_shared<State>()) {
  for (const Perm &p : generators_)
    if (p.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
}

const std::vector<Perm> &PermGroup::elements() const {
  std::call_once(state_->once, [this] {
    State &st = *state_;
    Perm id(degree_);
    st.elements.push_back(id);
    st.index.emplace(id, 0);
    st.parent.emplace_back(0, 0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      std::size_t cur = queue.front();
      queue.pop_front();
      for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
        Perm next = st.elements[cur] * generators_[gi];
        if (st.index.contains(next)) continue;
        if (st.elements.size() >= cap_)
          throw CapExceededError("group enumeration exceeded cap of " + std::to_string(cap_));
        st.index.emplace(next, st.elements.size());
        st.elements.push_back(next);
        st.parent.emplace_back(cur, gi);
        queue.push_back(st.elements.size() - 1);
      }
    }
  });
  return state_->elements;
}

bool PermGroup::contains(const Perm &p) const {
  elements();
  return p.degree() == degree_ && state_->index.contains(p);
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) return false;
  return true;
}

Int PermGroup::exponent() const {
  Int exp = 1;
  for (const Perm &p : elements()) {
    Int ord = 1;
    Perm q = p;
    while (!q.is_identity()) {
      q = q * p;
      ++ord;
    }
    exp = exp / boost::multiprecision::gcd(exp, ord) * ord;
  }
  return exp;
}

std::vector<Int> PermGroup::word_vector(const Perm &p) const {
  elements();
  auto it = state_->index.find(p);
  if (it == state_->index.end()) throw std::invalid_argument("element not in group");
  std::vector<Int> vec(generators_.size());
  std::size_t cur = it->second;
  while (cur != 0) {
    auto [par, gi] = state_->parent[cur];
    vec[gi] += 1;
    cur = par;
  }
  return vec;
}

PermGroup subgroup_generated(const PermGroup &g, const std::vector<Perm> &elems) {
  std::vector<Perm> gens;
  std::unordered_set<Perm> seen;
  for (const Perm &p : elems) {
    if (p.degree() != g.degree()) throw std::invalid_argument("element degree mismatch");
    if (!p.is_identity() && seen.insert(p).second) gens.push_back(p);
  }
  return PermGroup(g.degree(), std::move(gens), g.element_cap());
}

PermGroup derived_subgroup(const PermGroup &g) {
  const auto &gens = g.generators();
  std::unordered_set<Perm> comms;
  for (const Perm &a : gens)
    for (const Perm &b : gens) {
      Perm c = a * b * a.inverse() * b.inverse();
      if (!c.is_identity()) comms.insert(c);
    }

  // Normal closure: conjugate the generating set by the group's generators
  // until membership stabilizes.
  std::vector<Perm> closure(comms.begin(), comms.end());
  std::sort(closure.begin(), closure.end());
  PermGroup h = subgroup_generated(g, closure);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> fresh;
    for (const Perm &s : closure)
      for (const Perm &a : gens) {
        Perm c = a * s * a.inverse();
        if (!h.contains(c)) fresh.push_back(c);
      }
    if (!fresh.empty()) {
      closure.insert(closure.end(), fresh.begin(), fresh.end());
      std::sort(closure.begin(), closure.end());
      closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
      h = subgroup_generated(g, closure);
      grew = true;
    }
  }
  return h;
}

PermGroup quotient_group(const PermGroup &g, const PermGroup &n) {
  if (g.degree() != n.degree()) throw std::invalid_argument("quotient degree mismatch");
  const auto &nelems = n.elements();
  std::unordered_set<Perm> nset(nelems.begin(), nelems.end());
  for (const Perm &p : n.generators())
    if (!g.contains(p)) throw std::invalid_argument("subgroup not contained in group");
  for (const Perm &a : g.generators())
    for (const Perm &s : n.generators())
      if (!nset.contains(a * s * a.inverse()))
        throw std::invalid_argument("subgroup is not normal");

  // Left cosets by BFS; coset k is reps[k] * N.
  std::vector<Perm> reps{Perm(g.degree())};
  auto coset_of = [&](const Perm &p) -> std::size_t {
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (nset.contains(reps[k].inverse() * p)) return k;
    return reps.size();
  };
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (const Perm &a : g.generators()) {
      Perm c = a * reps[k];
      if (coset_of(c) == reps.size()) {
        if (reps.size() >= g.element_cap())
          throw CapExceededError("coset enumeration exceeded cap");
        reps.push_back(c);
      }
    }
  }

  std::vector<Perm> qgens;
  for (const Perm &a : g.generators()) {
    std::vector<int> images(reps.size());
    for (std::size_t k = 0; k < reps.size(); ++k)
      images[k] = static_cast<int>(coset_of(a * reps[k]));
    qgens.emplace_back(std::move(images));
  }
  return PermGroup(reps.size(), std::move(qgens), g.element_cap());
}

std::vector<PermGroup> lower_central_series(const PermGroup &g) {
  std::vector<PermGroup> series{g};
  const auto &all = g.elements();
  for (;;) {
    const PermGroup &current = series.back();
    std::unordered_set<Perm> comms;
    for (const Perm &x : all)
      for (const Perm &y : current.elements()) {
        Perm c = x * y * x.inverse() * y.inverse();
        if (!c.is_identity()) comms.insert(c);
      }
    std::vector<Perm> gens(comms.begin(), comms.end());
    std::sort(gens.begin(), gens.end());
    PermGroup next = subgroup_generated(g, gens);
    if (next.order() == current.order()) break; // stabilized (nontrivial: not nilpotent)
    series.push_back(next);
    if (series.back().is_trivial()) break;
  }
  return series;
}

std::optional<int> nilpotency_class(const PermGroup &g) {
  auto series = lower_central_series(g);
  if (!series.back().is_trivial()) return std::nullopt;
  return static_cast<int>(series.size()) - 1;
}

Abelianization abelianization_map(const PermGroup &g) {
  Abelianization ab;
  ab.group_ = g;
  PermGroup derived = derived_subgroup(g);
  const auto &delems = derived.elements();
  ab.derived_elements_ = std::unordered_set<Perm>(delems.begin(), delems.end());
  ab.quotient_ = quotient_group(g, derived);

  const PermGroup &q = ab.quotient_;
  std::size_t m = q.generators().size();

  // Kernel lattice of Z^m -> Q from the fundamental cycles of the Cayley
  // graph of the (abelian) quotient.
  std::vector<std::vector<Int>> cols;
  for (const Perm &x : q.elements()) {
    std::vector<Int> wx = q.word_vector(x);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Int> col = wx;
      col[i] += 1;
      std::vector<Int> wxi = q.word_vector(x * q.generators()[i]);
      bool zero = true;
      for (std::size_t k = 0; k < m; ++k) {
        col[k] -= wxi[k];
        if (col[k] != 0) zero = false;
      }
      if (!zero) cols.push_back(std::move(col));
    }
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

  IntMatrix rel(m, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) rel.at(i, j) = cols[j][i];

  ab.coker_ = cokernel_with_map(rel);
  ab.type_ = ab.coker_.type;

  // Coset reps in quotient construction order: recover them by matching the
  // quotient's coset action on the original group.
  ab.coset_reps_.assign(ab.quotient_.order(), Perm(g.degree()));
  // reps[k] for k > 0 are reachable products of generators; rebuild by BFS.
  {
    std::vector<bool> have(ab.quotient_.order(), false);
    have[0] = true;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      std::size_t k = queue.front();
      queue.pop_front();
      for (std::size_t gi = 0; gi < g.generators().size(); ++gi) {
        std::size_t kk = static_cast<std::size_t>(q.generators()[gi](static_cast<int>(k)));
        if (!have[kk]) {
          have[kk] = true;
          ab.coset_reps_[kk] = g.generators()[gi] * ab.coset_reps_[k];
          queue.push_back(kk);
        }
      }
    }
  }
  return ab;
}

std::vector<Int> Abelianization::class_of(const Perm &p) const {
  if (!group_.contains(p)) throw std::invalid_argument("element not in group");
  // Image of p in the quotient's coset action.
  std::size_t index = quotient_.order();
  for (std::size_t k = 0; k < coset_reps_.size(); ++k)
    if (derived_elements_.contains(coset_reps_[k].inverse() * p)) {
      index = k;
      break;
    }
  if (index == quotient_.order()) throw std::logic_error("coset lookup failed");

  std::vector<int> images(quotient_.order());
  for (std::size_t k = 0; k < coset_reps_.size(); ++k) {
    Perm moved = p * coset_reps_[k];
    std::size_t kk = quotient_.order();
    for (std::size_t c = 0; c < coset_reps_.size(); ++c)
      if (derived_elements_.contains(coset_reps_[c].inverse() * moved)) {
        kk = c;
        break;
      }
    images[k] = static_cast<int>(kk);
  }
  std::vector<Int> wv = quotient_.word_vector(Perm(std::move(images)));
  return coker_.class_of(wv);
}

FgAbelianGroup abelianization(const PermGroup &g) {
  // Type only: skip the coordinate-map bookkeeping.
  PermGroup derived = derived_subgroup(g);
  PermGroup q = quotient_group(g, derived);
  std::size_t m = q.generators().size();
  std::vector<std::vector<Int>> cols;
  for (const Perm &x : q.elements()) {
    std::vector<Int> wx = q.word_vector(x);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<Int> col = wx;
      col[i] += 1;
      std::vector<Int> wxi = q.word_vector(x * q.generators()[i]);
      bool zero = true;
      for (std::size_t k = 0; k < m; ++k) {
        col[k] -= wxi[k];
        if (col[k] != 0) zero = false;
      }
      if (!zero) cols.push_back(std::move(col));
    }
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  IntMatrix rel(m, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < m; ++i) rel.at(i, j) = cols[j][i];
  return cokernel(rel);
}

PermGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  if (n == 1) return PermGroup(1);
  return PermGroup(n, {Perm::full_cycle(n)});
}

PermGroup symmetric_group(std::size_t n) {
  if (n < 2) return PermGroup(std::max<std::size_t>(n, 1));
  std::vector<Perm> gens{Perm::transposition(n, 0, 1)};
  if (n > 2) gens.push_back(Perm::full_cycle(n));
  return PermGroup(n, std::move(gens));
}

PermGroup dihedral_group(std::size_t n) {
  if (n < 3) throw std::invalid_argument("dihedral group needs n >= 3");
  Perm rotation = Perm::full_cycle(n);
  std::vector<int> reflect(n);
  for (std::size_t i = 0; i < n; ++i) reflect[i] = static_cast<int>((n - i) % n);
  return PermGroup(n, {rotation, Perm(std::move(reflect))});
}

PermGroup klein_four_group() {
  return PermGroup(4, {Perm::parse("(1 2)(3 4)", 4), Perm::parse("(1 3)(2 4)", 4)});
}

PermGroup quaternion_group() {
  // Regular representation on {1,-1,i,-i,j,-j,k,-k}; generators act as left
  // multiplication by i and j.
  // Order of symbols: 1,-1,i,-i,j,-j,k,-k -> indices 0..7.
  // i * (1,-1,i,-i,j,-j,k,-k) = (i,-i,-1,1,k,-k,-j,j)
  Perm mi(std::vector<int>{2, 3, 1, 0, 6, 7, 5, 4});
  // j * (1,-1,i,-i,j,-j,k,-k) = (j,-j,-k,k,-1,1,i,-i)
  Perm mj(std::vector<int>{4, 5, 7, 6, 1, 0, 2, 3});
  return PermGroup(8, {mi, mj});
}

PermGroup direct_product(const PermGroup &a, const PermGroup &b) {
  std::size_t degree = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const Perm &p : a.generators()) gens.push_back(p.extended(degree));
  for (const Perm &p : b.generators()) {
    Perm shifted(degree);
    std::vector<int> images = shifted.images();
    for (std::size_t x = 0; x < b.degree(); ++x)
      images[a.degree() + x] = static_cast<int>(a.degree()) + p(static_cast<int>(x));
    gens.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(gens),
                   std::max(a.element_cap(), b.element_cap()));
}

} // namespace galgrp
