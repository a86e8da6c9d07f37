#pragma once

// Kostant's cascade K(S) of a subset S of simple roots:
//   K(∅) = ∅,
//   K(S) = K(S_1) ∪ ... ∪ K(S_r) over the connected components S_i of S,
//   K(S) = {S} ∪ K({α ∈ S : (ε_S, α) = 0}) for S connected,
// where ε_S is the highest root of R₊^S.

#include <algorithm>
#include <string>
#include <vector>

#include "lieslice/linalg.hpp"
#include "lieslice/root_system.hpp"
#include "lieslice/simple_set.hpp"
#include "lieslice/verdict.hpp"

namespace lieslice {

struct CascadeElement {
  SimpleSet support;  // K
  RootVec eps;        // ε_K
  SimpleSet bullet;   // K• = {α ∈ K : (ε_K, α) ≠ 0}
};

using Cascade = std::vector<CascadeElement>;

/// Rank over Q of a list of integer vectors of length `dim`.
inline std::size_t integer_rank(const std::vector<RootVec>& vectors, int dim) {
  if (vectors.empty()) return 0;
  Matrix<Rational> m(vectors.size(), dim);
  for (std::size_t r = 0; r < vectors.size(); ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = vectors[r][c];
  return rank(m);
}

namespace detail {

inline void cascade_connected(const RootSystem& rs, SimpleSet s, Cascade& out) {
  CascadeElement e;
  e.support = s;
  e.eps = rs.highest_root(s);
  SimpleSet rest;
  for (int i : s.indices()) {
    RootVec a(rs.rank(), 0);
    a[i] = 1;
    if (rs.inner(e.eps, a) == 0)
      rest.insert(i);
    else
      e.bullet.insert(i);
  }
  out.push_back(std::move(e));
  for (SimpleSet comp : rs.connected_components(rest)) cascade_connected(rs, comp, out);
}

}  // namespace detail

/// K(S) in component-major, depth-first order.
inline Cascade cascade(const RootSystem& rs, SimpleSet s) {
  Cascade out;
  for (SimpleSet comp : rs.connected_components(s)) detail::cascade_connected(rs, comp, out);
  return out;
}

inline bool contains_support(const Cascade& c, SimpleSet k) {
  return std::any_of(c.begin(), c.end(), [&](const CascadeElement& e) { return e.support == k; });
}

/// ε_K for K ∈ K(S) ∪ K(T), each distinct support once (K(S) first).
inline std::vector<RootVec> union_eps(const Cascade& ks, const Cascade& kt) {
  std::vector<RootVec> out;
  for (const auto& e : ks) out.push_back(e.eps);
  for (const auto& e : kt)
    if (!contains_support(ks, e.support)) out.push_back(e.eps);
  return out;
}

inline std::string describe(SimpleSet k) { return "{" + k.to_string() + "}"; }

/// Checks the element invariants, nesting, bullet sizes and strong orthogonality
/// on K(S). Returns the first violation with its witness.
inline Verdict check_cascade_properties(const RootSystem& rs, SimpleSet s) {
  const Cascade c = cascade(rs, s);
  const int l = rs.rank();
  auto simple = [&](int i) {
    RootVec a(l, 0);
    a[i] = 1;
    return a;
  };

  for (const auto& e : c) {
    const std::string k = describe(e.support);
    if (!rs.is_connected(e.support)) return Verdict::fails("K = " + k + " is not connected");
    if (e.eps != rs.highest_root(e.support)) return Verdict::fails("eps of " + k + " is not its highest root");
    SimpleSet bullet;
    for (int i : e.support.indices())
      if (rs.inner(e.eps, simple(i)) != 0) bullet.insert(i);
    if (bullet != e.bullet) return Verdict::fails("bullet set of " + k + " is wrong");
    // bullet size: two endpoints in type A, one node otherwise
    const bool type_a = rs.is_type_a(e.support);
    const int expected = (type_a && e.support.size() >= 2) ? 2 : 1;
    if (e.bullet.size() != expected)
      return Verdict::fails("bullet size: |K•| = " + std::to_string(e.bullet.size()) + " for K = " + k);
    if (type_a) {
      SimpleSet ends;
      for (int i : e.support.indices()) {
        int degree = 0;
        for (int j : e.support.indices()) degree += rs.adjacent(i, j) ? 1 : 0;
        if (degree <= 1) ends.insert(i);
      }
      if (ends != e.bullet) return Verdict::fails("bullet size: K• is not the set of endpoints of " + k);
    }
    // components of K \ K• are again cascade elements
    for (SimpleSet comp : rs.connected_components(e.support - e.bullet))
      if (!contains_support(c, comp))
        return Verdict::fails("bullet complement: component " + describe(comp) + " of K \\ K• for K = " + k + " is not in K(S)");
  }

  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      const auto& a = c[i];
      const auto& b = c[j];
      const std::string pair = "(" + describe(a.support) + ", " + describe(b.support) + ")";
      if (a.support == b.support) return Verdict::fails("repeated element " + pair);
      const bool nested = a.support.is_subset_of(b.support) || b.support.is_subset_of(a.support);
      const bool disjoint = (a.support & b.support).empty();
      if (!nested && !disjoint) return Verdict::fails("nesting: neither nested nor disjoint " + pair);
      if (disjoint)
        for (int x : a.support.indices())
          for (int y : b.support.indices())
            if (rs.adjacent(x, y)) return Verdict::fails("nesting: disjoint but not strongly orthogonal " + pair);
      if (rs.inner(a.eps, b.eps) != 0) return Verdict::fails("(eps_K, eps_L) != 0 for " + pair);
      if (rs.is_root(add(a.eps, b.eps)) || rs.is_root(subtract(a.eps, b.eps)))
        return Verdict::fails("eps_K +- eps_L is a root for " + pair);
      if (!(a.bullet & b.bullet).empty()) return Verdict::fails("bullet complement: K• ∩ L• nonempty for " + pair);
    }
  return Verdict::holds();
}

/// For K ∈ K(S) ∩ K(T) and L ∈ K(S) ∪ K(T): ε_K ± ε_L ∉ R.
inline Verdict check_cascade_sum_exclusion(const RootSystem& rs, SimpleSet s, SimpleSet t) {
  const Cascade ks = cascade(rs, s);
  const Cascade kt = cascade(rs, t);
  std::vector<const CascadeElement*> common;
  for (const auto& e : ks)
    if (contains_support(kt, e.support)) common.push_back(&e);
  if (common.empty()) return Verdict::not_applicable("K(S) ∩ K(T) is empty");
  std::vector<const CascadeElement*> all;
  for (const auto& e : ks) all.push_back(&e);
  for (const auto& e : kt) all.push_back(&e);
  for (const auto* k : common)
    for (const auto* l : all)
      if (rs.is_root(add(k->eps, l->eps)) || rs.is_root(subtract(k->eps, l->eps)))
        return Verdict::fails("K = " + describe(k->support) + ", L = " + describe(l->support));
  return Verdict::holds();
}

struct InjectivityConditions {
  bool intersect_nonempty = false;  // S ∩ T ≠ ∅
  bool cascades_disjoint = false;   // K(S) ∩ K(T) = ∅
  bool eps_independent = false;     // {ε_E} linearly independent
  std::size_t eps_count = 0;
  std::size_t eps_rank = 0;

  bool condition_i() const { return intersect_nonempty && cascades_disjoint; }
  bool condition_ii() const { return eps_independent; }
};

inline InjectivityConditions injectivity_conditions(const RootSystem& rs, SimpleSet s, SimpleSet t) {
  const Cascade ks = cascade(rs, s);
  const Cascade kt = cascade(rs, t);
  InjectivityConditions c;
  c.intersect_nonempty = !(s & t).empty();
  c.cascades_disjoint =
      std::none_of(ks.begin(), ks.end(), [&](const CascadeElement& e) { return contains_support(kt, e.support); });
  const auto eps = union_eps(ks, kt);
  c.eps_count = eps.size();
  c.eps_rank = integer_rank(eps, rs.rank());
  c.eps_independent = c.eps_rank == c.eps_count;
  return c;
}

/// Under conditions i) and ii), the map h ↦ (ε_E(h))_E is injective on
/// span{h_α : α ∈ S∩T}, i.e. M[E][α] = (ε_E, α) has rank |S∩T|.
inline Verdict check_cascade_injectivity(const RootSystem& rs, SimpleSet s, SimpleSet t) {
  const auto cond = injectivity_conditions(rs, s, t);
  if (!cond.condition_i()) return Verdict::not_applicable("condition i) fails");
  if (!cond.condition_ii())
    return Verdict::not_applicable("condition ii) fails: " + std::to_string(cond.eps_count) + " vectors of rank " +
                                   std::to_string(cond.eps_rank));
  const auto eps = union_eps(cascade(rs, s), cascade(rs, t));
  const auto common = (s & t).indices();
  Matrix<Rational> m(eps.size(), common.size());
  for (std::size_t e = 0; e < eps.size(); ++e)
    for (std::size_t a = 0; a < common.size(); ++a) {
      RootVec alpha(rs.rank(), 0);
      alpha[common[a]] = 1;
      m(e, a) = rs.inner(eps[e], alpha);
    }
  const std::size_t r = rank(m);
  if (r != common.size())
    return Verdict::fails("evaluation matrix has rank " + std::to_string(r) + " < |S∩T| = " +
                          std::to_string(common.size()));
  return Verdict::holds();
}

/// (ε_E, Σ λ_i α_i) for every E ∈ K(S) ∪ K(T).
inline std::vector<Rational> cascade_pairings(const RootSystem& rs, SimpleSet s, SimpleSet t, const RootVec& lambda) {
  std::vector<Rational> out;
  for (const auto& eps : union_eps(cascade(rs, s), cascade(rs, t))) out.push_back(rs.inner(eps, lambda));
  return out;
}

struct CounterexampleWitness {
  RootVec h;                        // coefficients over h_{α_1}, ..., h_{α_5}
  std::vector<Rational> pairings;   // ε_E(h) for E ∈ K(Π) ∪ K(Π \ {α3})
  InjectivityConditions conditions;
  bool certified = false;           // all pairings vanish, i) holds, ii) fails
};

/// In A5 with S = Π and T = Π \ {α3}: h = h_α1 - h_α2 + h_α4 - h_α5 is
/// killed by every ε_E, so condition ii) of the injectivity statement cannot
/// be dropped.
inline CounterexampleWitness counterexample_witness(const RootSystem& rs) {
  if (!(rs.type_spec() == TypeSpec::parse("A5")))
    throw std::invalid_argument("counterexample_witness requires type A5, got " + rs.type_spec().to_string());
  const SimpleSet s = rs.all_simple();
  SimpleSet t = s;
  t.erase(2);
  CounterexampleWitness w;
  w.h = {1, -1, 0, 1, -1};
  w.pairings = cascade_pairings(rs, s, t, w.h);
  w.conditions = injectivity_conditions(rs, s, t);
  w.certified = std::all_of(w.pairings.begin(), w.pairings.end(), [](const Rational& q) { return q == 0; }) &&
                w.conditions.condition_i() && !w.conditions.condition_ii();
  return w;
}

}  // namespace lieslice
