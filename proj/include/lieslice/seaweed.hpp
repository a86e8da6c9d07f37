#pragma once

// Biparabolic subalgebras q_{S,T} = h ⊕ g^Δ with Δ = R₊^S ∪ R₋^T, and the
// decomposition q = h ⊕ m ⊕ n attached to the two cascades.
//
// Linear forms on q are coordinate vectors over the dual of q's basis.
// Compared with forms built from the Killing form, (X_α)* is a nonzero
// multiple of φ_{X_-α}; every construction downstream is stable under such
// per-coordinate scalings.

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieslice/cascade.hpp"
#include "lieslice/chevalley.hpp"
#include "lieslice/linalg.hpp"
#include "lieslice/verdict.hpp"

namespace lieslice {

/// Coefficients over the dual basis of a seaweed's basis.
using LinearForm = Vec<Rational>;

class Seaweed {
 public:
  Seaweed(std::shared_ptr<const ChevalleyBasis> cb, SimpleSet s, SimpleSet t) : cb_(std::move(cb)), s_(s), t_(t) {
    const RootSystem& rs = cb_->root_system();
    const SimpleSet all = rs.all_simple();
    if (!s.is_subset_of(all) || !t.is_subset_of(all))
      throw std::invalid_argument("seaweed: S or T is not a subset of the simple roots");
    rank_ = rs.rank();
    q_of_g_.assign(cb_->dim(), -1);
    for (int i = 0; i < rank_; ++i) {
      q_of_g_[i] = i;
      g_of_q_.push_back(i);
    }
    for (int r = 0; r < rs.num_roots(); ++r) {
      const RootVec& v = rs.root(r);
      const bool in = rs.is_positive(r) ? rs.supported_in(v, s) : rs.supported_in(v, t);
      if (!in) continue;
      delta_.push_back(r);
      q_of_g_[cb_->root_index(r)] = static_cast<int>(g_of_q_.size());
      g_of_q_.push_back(cb_->root_index(r));
    }
    dim_ = static_cast<int>(g_of_q_.size());

    table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
    for (int a = 0; a < dim_; ++a)
      for (int b = 0; b < dim_; ++b)
        for (const auto& t : cb_->bracket_basis(g_of_q_[a], g_of_q_[b])) {
          const int qi = q_of_g_[t.index];
          if (qi < 0)
            throw std::logic_error("q_{S,T} is not closed under the bracket: [" + cb_->basis_label(g_of_q_[a]) + ", " +
                                   cb_->basis_label(g_of_q_[b]) + "]");
          table_[a * dim_ + b].push_back({qi, t.coeff});
        }
  }

  const ChevalleyBasis& chevalley() const { return *cb_; }
  std::shared_ptr<const ChevalleyBasis> chevalley_ptr() const { return cb_; }
  const RootSystem& root_system() const { return cb_->root_system(); }
  SimpleSet s() const { return s_; }
  SimpleSet t() const { return t_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }

  /// Δ_{S,T} as root indices, in root order.
  const std::vector<int>& delta() const { return delta_; }

  /// Basis of q: H_1..H_l, then X_α for α ∈ Δ.
  int g_index(int q) const { return g_of_q_.at(q); }
  std::optional<int> q_index_of_root(int root) const {
    const int qi = q_of_g_[cb_->root_index(root)];
    if (qi < 0) return std::nullopt;
    return qi;
  }
  bool is_cartan(int q) const { return q < rank_; }
  int root_of(int q) const { return cb_->root_of(g_of_q_.at(q)); }
  std::string basis_label(int q) const { return cb_->basis_label(g_of_q_.at(q)); }

  std::span<const Term> bracket_basis(int a, int b) const { return table_[a * dim_ + b]; }

  LieElement bracket(const LieElement& x, const LieElement& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
      throw std::invalid_argument("bracket: element does not match the basis of q");
    LieElement out(dim_, Rational(0));
    for (int i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (int j = 0; j < dim_; ++j) {
        if (is_zero(y[j])) continue;
        const Rational c = x[i] * y[j];
        for (const auto& t : bracket_basis(i, j)) out[t.index] += c * t.coeff;
      }
    }
    return out;
  }

  /// Coadjoint action (X.f)(Y) = f([Y, X]).
  LinearForm act(const LieElement& x, const LinearForm& f) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(f.size()) != dim_)
      throw std::invalid_argument("act: dimension mismatch");
    LinearForm out(dim_, Rational(0));
    for (int i = 0; i < dim_; ++i) {
      if (is_zero(x[i])) continue;
      for (int j = 0; j < dim_; ++j)
        for (const auto& t : bracket_basis(j, i))
          if (!is_zero(f[t.index])) out[j] += x[i] * f[t.index] * t.coeff;
    }
    return out;
  }

  Vec<Rational> unit(int q) const {
    Vec<Rational> e(dim_, Rational(0));
    e.at(q) = 1;
    return e;
  }

 private:
  std::shared_ptr<const ChevalleyBasis> cb_;
  SimpleSet s_, t_;
  int rank_ = 0;
  int dim_ = 0;
  std::vector<int> delta_;
  std::vector<int> g_of_q_;
  std::vector<int> q_of_g_;
  std::vector<std::vector<Term>> table_;
};

inline Seaweed build_seaweed(std::shared_ptr<const ChevalleyBasis> cb, SimpleSet s, SimpleSet t) {
  return Seaweed(std::move(cb), s, t);
}

struct GammaData {
  std::vector<int> gamma;   // root indices: ε_K (K ∈ K(S)), then -ε_L (L ∈ K(T))
  std::size_t from_s = 0;   // leading entries of `gamma` that come from K(S)
  std::vector<int> gamma0;  // positive roots γ with γ, -γ ∈ Γ
  std::vector<int> gamma1;  // Γ \ (Γ₀ ∪ -Γ₀), in Γ order
  std::vector<int> m_roots; // Δ ∩ span(Γ), root order
  std::vector<int> n_roots; // Δ \ span(Γ), root order
  std::vector<Vec<Rational>> t_basis;            // {H : γ(H) = 0 ∀γ}, over H_1..H_l
  std::vector<Vec<Rational>> hgamma_perp_basis;  // {λ : λ(h_γ) = 0 ∀γ}, over H_1*..H_l*
  std::vector<Vec<Rational>> hgamma_basis;       // span of Γ inside h*, over H_1*..H_l*
  std::size_t gamma_rank = 0;
};

inline GammaData gamma_data(const Seaweed& sw) {
  const RootSystem& rs = sw.root_system();
  const int l = rs.rank();
  GammaData gd;
  for (const auto& e : cascade(rs, sw.s())) gd.gamma.push_back(rs.index_of(e.eps));
  gd.from_s = gd.gamma.size();
  for (const auto& e : cascade(rs, sw.t())) gd.gamma.push_back(rs.index_of(negate(e.eps)));

  auto in_gamma = [&](int r) { return std::find(gd.gamma.begin(), gd.gamma.end(), r) != gd.gamma.end(); };
  for (int r : gd.gamma)
    if (rs.is_positive(r) && in_gamma(rs.negative_of(r)) &&
        std::find(gd.gamma0.begin(), gd.gamma0.end(), r) == gd.gamma0.end())
      gd.gamma0.push_back(r);
  auto in_gamma0_pm = [&](int r) {
    for (int g : gd.gamma0)
      if (r == g || r == rs.negative_of(g)) return true;
    return false;
  };
  for (int r : gd.gamma)
    if (!in_gamma0_pm(r)) gd.gamma1.push_back(r);

  std::vector<Vec<Rational>> gamma_vecs;
  std::vector<Vec<Rational>> pairing_rows;  // γ(H_i)
  std::vector<Vec<Rational>> coroot_rows;   // γ^∨ over H_i
  for (int r : gd.gamma) {
    const RootVec& v = rs.root(r);
    gamma_vecs.emplace_back(v.begin(), v.end());
    Vec<Rational> p(l), c(l);
    const RootVec co = rs.coroot(v);
    for (int i = 0; i < l; ++i) {
      p[i] = rs.pairing(v, i);
      c[i] = co[i];
    }
    pairing_rows.push_back(std::move(p));
    coroot_rows.push_back(std::move(c));
  }
  gd.gamma_rank = span_dimension(gamma_vecs);

  const auto gamma_span = span_basis(gamma_vecs);
  for (int r : sw.delta()) {
    const RootVec& v = rs.root(r);
    if (in_span(gamma_span, Vec<Rational>(v.begin(), v.end())))
      gd.m_roots.push_back(r);
    else
      gd.n_roots.push_back(r);
  }

  gd.t_basis = kernel_basis(Matrix<Rational>::from_rows(pairing_rows, l));
  gd.hgamma_perp_basis = kernel_basis(Matrix<Rational>::from_rows(coroot_rows, l));
  gd.hgamma_basis = span_basis(pairing_rows);
  return gd;
}

struct Hypothesis {
  bool gamma0_empty = false;
  bool independent = false;
  bool qualifies = false;
};

/// Γ = Γ₁ and Γ is linearly independent.
inline Hypothesis hypothesis_check(const GammaData& gd) {
  Hypothesis h;
  h.gamma0_empty = gd.gamma0.empty();
  h.independent = gd.gamma_rank == gd.gamma.size();
  h.qualifies = h.gamma0_empty && h.independent;
  return h;
}

inline Hypothesis hypothesis_check(const Seaweed& sw) { return hypothesis_check(gamma_data(sw)); }

/// Verifies on basis elements:
///   [h, m] ⊂ m,  [h + m, n] ⊂ n,  [m, m] ⊂ m ⊕ span{h_γ : γ ∈ Γ};
///   h.h* = 0, h.m* ⊂ m*, h.n* ⊂ n*, m.h* ⊂ m*, m.m* ⊂ m* ⊕ h_Γ*,
///   m.n* ⊂ n*, n.h* ⊂ n*, n.m* ⊂ n*;
///   m.h_Γ^⊥ = 0 and h* = h_Γ* ⊕ h_Γ^⊥.
inline Verdict check_structure_identities(const Seaweed& sw, const GammaData& gd) {
  const RootSystem& rs = sw.root_system();
  const int l = sw.rank();
  const int dim = sw.dim();
  enum Part { H, M, N };
  std::vector<Part> part(dim, H);
  for (int q = l; q < dim; ++q) {
    const int r = sw.root_of(q);
    part[q] = std::find(gd.m_roots.begin(), gd.m_roots.end(), r) != gd.m_roots.end() ? M : N;
  }
  const char* names[] = {"h", "m", "n"};

  std::vector<Vec<Rational>> coroots_gamma;
  for (int r : gd.gamma) {
    const RootVec co = rs.coroot(rs.root(r));
    coroots_gamma.emplace_back(co.begin(), co.end());
  }
  auto cartan_part = [&](const Vec<Rational>& v) { return Vec<Rational>(v.begin(), v.begin() + l); };
  auto support_within = [&](const Vec<Rational>& v, std::initializer_list<Part> allowed, bool cartan_ok) {
    for (int q = 0; q < dim; ++q) {
      if (is_zero(v[q])) continue;
      if (part[q] == H) {
        if (!cartan_ok) return false;
        continue;
      }
      if (std::find(allowed.begin(), allowed.end(), part[q]) == allowed.end()) return false;
    }
    return true;
  };

  auto unit_bracket = [&](int a, int b) {
    Vec<Rational> v(dim, Rational(0));
    for (const auto& t : sw.bracket_basis(a, b)) v[t.index] += t.coeff;
    return v;
  };
  // X_x . (e_k)* evaluated on Y_j is the e_k-coefficient of [Y_j, X_x]
  auto unit_action = [&](int x, int k) {
    Vec<Rational> v(dim, Rational(0));
    for (int j = 0; j < dim; ++j)
      for (const auto& t : sw.bracket_basis(j, x))
        if (t.index == k) v[j] += t.coeff;
    return v;
  };

  // brackets of the pieces h, m, n
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      const bool hm = part[a] == H && part[b] == M;
      const bool xn = part[a] != N && part[b] == N;
      const bool mm = part[a] == M && part[b] == M;
      if (!hm && !xn && !mm) continue;
      const auto br = unit_bracket(a, b);
      const std::string w = "[" + sw.basis_label(a) + ", " + sw.basis_label(b) + "]";
      if (hm && !support_within(br, {M}, false)) return Verdict::fails("[h,m] ⊄ m at " + w);
      if (xn && !support_within(br, {N}, false)) return Verdict::fails("[h+m,n] ⊄ n at " + w);
      if (mm && (!support_within(br, {M}, true) || !in_span(coroots_gamma, cartan_part(br))))
        return Verdict::fails("[m,m] ⊄ m ⊕ h_Γ at " + w);
    }

  // coadjoint action on dual-basis generators; n.n* is not constrained
  for (int x = 0; x < dim; ++x)
    for (int k = 0; k < dim; ++k) {
      const Part px = part[x], pk = part[k];
      if (px == N && pk == N) continue;
      const auto img = unit_action(x, k);
      bool ok = true;
      if (px == H && pk == H)
        ok = is_zero_vector(img);
      else if (pk == N || px == N)
        ok = support_within(img, {N}, false);
      else if (px == M && pk == M)
        ok = support_within(img, {M}, true) && in_span(gd.hgamma_basis, cartan_part(img));
      else  // h.m* or m.h*
        ok = support_within(img, {M}, false);
      if (!ok)
        return Verdict::fails(std::string(names[px]) + "." + names[pk] + "* inclusion fails at " + sw.basis_label(x) +
                              " . (" + sw.basis_label(k) + ")*");
    }

  // m.h_Γ^⊥ = 0 and h* = h_Γ* ⊕ h_Γ^⊥
  for (const auto& lam : gd.hgamma_perp_basis) {
    LinearForm f(dim, Rational(0));
    for (int i = 0; i < l; ++i) f[i] = lam[i];
    for (int x = 0; x < dim; ++x)
      if (part[x] == M && !is_zero_vector(sw.act(sw.unit(x), f)))
        return Verdict::fails("m.h_Γ^⊥ ≠ 0 at " + sw.basis_label(x));
  }
  auto joint = gd.hgamma_basis;
  joint.insert(joint.end(), gd.hgamma_perp_basis.begin(), gd.hgamma_perp_basis.end());
  if (gd.hgamma_basis.size() + gd.hgamma_perp_basis.size() != static_cast<std::size_t>(l) ||
      span_dimension(joint) != static_cast<std::size_t>(l))
    return Verdict::fails("h* is not the direct sum of h_Γ* and h_Γ^⊥");
  return Verdict::holds();
}

inline Verdict check_structure_identities(const Seaweed& sw) { return check_structure_identities(sw, gamma_data(sw)); }

}  // namespace lieslice
