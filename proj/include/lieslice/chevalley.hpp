#pragma once

// Chevalley basis {H_1..H_l} ∪ {X_α : α ∈ R} with integer structure constants.
//
//   [H_i, X_α] = <α, α_i^∨> X_α
//   [X_α, X_-α] = H_α  (the coroot of α over the H_i)
//   [X_α, X_β]  = N_{α,β} X_{α+β}  when α+β is a root
//
// Signs are fixed by N_{α,β} = +(p+1) on extraspecial pairs; everything else
// follows from the standard relations between structure constants:
//   N_{β,α} = -N_{α,β},   N_{-α,-β} = -N_{α,β},
//   α+β+γ = 0  ⇒  N_{α,β}/(γ,γ) = N_{β,γ}/(α,α) = N_{γ,α}/(β,β),
// and the four-root relation for α+β+γ+δ = 0 with no opposite pair.

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieslice/linalg.hpp"
#include "lieslice/rational.hpp"
#include "lieslice/root_system.hpp"

namespace lieslice {

/// Coefficient vector over a declared basis (of g, or of a subalgebra).
using LieElement = Vec<Rational>;

/// One entry of a sparse bracket result.
struct Term {
  int index;
  int coeff;
};

struct JacobiResult {
  bool holds = true;
  std::uint64_t triples_checked = 0;
  int x = -1, y = -1, z = -1;  // first failing triple
};

class ChevalleyBasis {
 public:
  /// Full Jacobi check for total rank <= this bound, sampled above it.
  static constexpr int kFullJacobiRank = 4;
  static constexpr std::uint64_t kSampledJacobiTriples = 20000;

  explicit ChevalleyBasis(RootSystem rs) : rs_(std::move(rs)) {
    rank_ = rs_.rank();
    nroots_ = rs_.num_roots();
    dim_ = rank_ + nroots_;
    build_structure_constants();
    build_table();
    const auto jac = rank_ <= kFullJacobiRank ? check_jacobi() : check_jacobi_sampled(kSampledJacobiTriples, 0x5eed);
    if (!jac.holds)
      throw std::logic_error("Chevalley basis of " + rs_.type_spec().to_string() + " violates Jacobi at (" +
                             basis_label(jac.x) + ", " + basis_label(jac.y) + ", " + basis_label(jac.z) + ")");
  }

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }

  // Basis layout: H_1..H_l first, then X_α in root order.
  static constexpr int cartan_index(int i) { return i; }
  int root_index(int root) const { return rank_ + root; }
  bool is_cartan(int b) const { return b < rank_; }
  int root_of(int b) const { return b - rank_; }

  std::string basis_label(int b) const {
    if (b < 0) return "?";
    if (is_cartan(b)) return "H" + std::to_string(b + 1);
    return "X[" + root_label(rs_.root(root_of(b))) + "]";
  }

  /// N_{α,β} for root indices; 0 when α+β is not a root.
  int structure_constant(int alpha, int beta) const { return n_[alpha * nroots_ + beta]; }

  /// [b1, b2] for basis indices, as a sparse combination of basis indices.
  std::span<const Term> bracket_basis(int b1, int b2) const { return table_[b1 * dim_ + b2]; }

  LieElement bracket(const LieElement& x, const LieElement& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
      throw std::invalid_argument("bracket: element does not match the basis of g (dim " + std::to_string(dim_) + ")");
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

  LieElement basis_vector(int b) const {
    LieElement e(dim_, Rational(0));
    e.at(b) = 1;
    return e;
  }

  /// Jacobi identity on every ordered basis triple.
  JacobiResult check_jacobi() const {
    JacobiResult res;
    std::vector<long> acc(dim_, 0);
    for (int x = 0; x < dim_; ++x)
      for (int y = 0; y < dim_; ++y)
        for (int z = 0; z < dim_; ++z) {
          ++res.triples_checked;
          if (!jacobi_triple(x, y, z, acc)) {
            res.holds = false;
            res.x = x, res.y = y, res.z = z;
            return res;
          }
        }
    return res;
  }

  JacobiResult check_jacobi_sampled(std::uint64_t samples, std::uint64_t seed) const {
    JacobiResult res;
    std::vector<long> acc(dim_, 0);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, dim_ - 1);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const int x = pick(rng), y = pick(rng), z = pick(rng);
      ++res.triples_checked;
      if (!jacobi_triple(x, y, z, acc)) {
        res.holds = false;
        res.x = x, res.y = y, res.z = z;
        return res;
      }
    }
    return res;
  }

 private:
  // acc must be all zero on entry; it is left all zero.
  bool jacobi_triple(int x, int y, int z, std::vector<long>& acc) const {
    auto nested = [&](int a, int b, int c) {  // acc += [a, [b, c]]
      for (const auto& t : bracket_basis(b, c))
        for (const auto& u : bracket_basis(a, t.index)) acc[u.index] += static_cast<long>(t.coeff) * u.coeff;
    };
    nested(x, y, z);
    nested(y, z, x);
    nested(z, x, y);
    bool ok = true;
    for (auto& v : acc) {
      if (v != 0) ok = false;
      v = 0;
    }
    return ok;
  }

  int& n_at(int a, int b) { return n_[a * nroots_ + b]; }

  // p = max{k : β - kα ∈ R}
  int string_below(int alpha, int beta) const {
    int p = 0;
    RootVec v = rs_.root(beta);
    while (true) {
      v = subtract(v, rs_.root(alpha));
      if (!rs_.is_root(v)) return p;
      ++p;
    }
  }

  // N_{x,-y} for positive x, y, from positive-pair constants of lower height.
  Rational mixed(int x, int y) const {
    const RootVec& rx = rs_.root(x);
    const RootVec& ry = rs_.root(y);
    if (auto z = rs_.find(subtract(rx, ry)); z && rs_.is_positive(*z))
      return -len_[*z] / len_[x] * structure_constant(y, *z);
    if (auto z = rs_.find(subtract(ry, rx)); z && rs_.is_positive(*z))
      return len_[*z] / len_[y] * structure_constant(*z, x);
    return Rational(0);
  }

  void build_structure_constants() {
    n_.assign(static_cast<std::size_t>(nroots_) * nroots_, 0);
    len_.resize(nroots_);
    for (int i = 0; i < nroots_; ++i) len_[i] = rs_.inner(rs_.root(i), rs_.root(i));

    const auto& pos = rs_.positive_indices();  // increasing height
    for (int xi : pos) {
      const RootVec& rxi = rs_.root(xi);
      if (height(rxi) == 1) continue;
      // special pairs (a, b): a ≺ b positive with a + b = ξ; the first is extraspecial
      std::vector<std::pair<int, int>> special;
      for (int a : pos) {
        if (height(rs_.root(a)) >= height(rxi)) break;
        auto b = rs_.find(subtract(rxi, rs_.root(a)));
        if (b && rs_.is_positive(*b) && a < *b) special.emplace_back(a, *b);
      }
      if (special.empty()) throw std::logic_error("no special pair for " + root_label(rxi));
      const auto [a, b] = special.front();
      n_at(a, b) = string_below(a, b) + 1;
      n_at(b, a) = -n_at(a, b);

      for (std::size_t k = 1; k < special.size(); ++k) {
        const auto [g, d] = special[k];
        // four-root relation on (a, b, -g, -d)
        Rational sum = 0;
        if (auto bg = rs_.find(subtract(rs_.root(b), rs_.root(g))))
          sum += mixed(b, g) * mixed(a, d) / len_[*bg];
        if (auto ag = rs_.find(subtract(rs_.root(a), rs_.root(g))))
          sum += -mixed(a, g) * mixed(b, d) / len_[*ag];
        const Rational value = len_[xi] / n_at(a, b) * sum;
        if (!is_integer(value) || abs(value) != string_below(g, d) + 1)
          throw std::logic_error("inconsistent structure constant for " + root_label(rs_.root(g)) + " + " +
                                 root_label(rs_.root(d)));
        n_at(g, d) = static_cast<int>(value.get_num().get_si());
        n_at(d, g) = -n_at(g, d);
      }
    }

    for (int i = 0; i < nroots_; ++i)
      for (int j = 0; j < nroots_; ++j) {
        if (!rs_.is_root(add(rs_.root(i), rs_.root(j)))) continue;
        const bool pi = rs_.is_positive(i), pj = rs_.is_positive(j);
        if (pi && pj) continue;
        Rational value;
        if (!pi && !pj)
          value = -n_at(rs_.negative_of(i), rs_.negative_of(j));
        else if (pi)
          value = mixed(i, rs_.negative_of(j));
        else
          value = -mixed(j, rs_.negative_of(i));
        if (!is_integer(value) || abs(value) != string_below(i, j) + 1)
          throw std::logic_error("inconsistent structure constant for " + root_label(rs_.root(i)) + " + " +
                                 root_label(rs_.root(j)));
        n_at(i, j) = static_cast<int>(value.get_num().get_si());
      }
  }

  void build_table() {
    table_.assign(static_cast<std::size_t>(dim_) * dim_, {});
    for (int a = 0; a < dim_; ++a)
      for (int b = 0; b < dim_; ++b) {
        auto& out = table_[a * dim_ + b];
        if (is_cartan(a) && is_cartan(b)) continue;
        if (is_cartan(a)) {
          const int c = rs_.pairing(rs_.root(root_of(b)), a);
          if (c != 0) out.push_back({b, c});
        } else if (is_cartan(b)) {
          const int c = rs_.pairing(rs_.root(root_of(a)), b);
          if (c != 0) out.push_back({a, -c});
        } else {
          const int ra = root_of(a), rb = root_of(b);
          if (rs_.negative_of(ra) == rb) {
            const RootVec co = rs_.coroot(rs_.root(ra));
            for (int i = 0; i < rank_; ++i)
              if (co[i] != 0) out.push_back({cartan_index(i), co[i]});
          } else if (auto s = rs_.find(add(rs_.root(ra), rs_.root(rb)))) {
            out.push_back({root_index(*s), structure_constant(ra, rb)});
          }
        }
      }
  }

  RootSystem rs_;
  int rank_ = 0;
  int nroots_ = 0;
  int dim_ = 0;
  std::vector<int> n_;
  std::vector<Rational> len_;
  std::vector<std::vector<Term>> table_;
};

inline ChevalleyBasis build_chevalley(const RootSystem& rs) { return ChevalleyBasis(rs); }

}  // namespace lieslice
