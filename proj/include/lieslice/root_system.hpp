#pragma once

// Reduced root systems of semisimple type, built from the invariant form on
// the simple roots. Simple roots follow Bourbaki numbering in every factor:
//
//   A_l  1-2-...-l
//   B_l  1-...-(l-1)=>l        (α_l short)
//   C_l  1-...-(l-1)<=l        (α_l long)
//   D_l  1-...-(l-2)<(l-1, l)
//   E_n  1-3-4-5-...-n, with 2 attached to 4
//   F_4  1-2=>3-4              (α1, α2 long)
//   G_2  1<=2                  (α1 short)
//
// The form is normalized so that long roots have squared length 2 in each
// simple factor. It differs from the Killing form by a positive constant per
// factor, which leaves every vanishing / non-vanishing of pairings unchanged.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lieslice/linalg.hpp"
#include "lieslice/rational.hpp"
#include "lieslice/simple_set.hpp"

namespace lieslice {

inline constexpr int kMaxTotalRank = 16;

struct SimpleFactor {
  char letter = 'A';
  int rank = 1;

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

/// Ordered list of simple factors, e.g. "A2xB3".
class TypeSpec {
 public:
  TypeSpec() = default;
  explicit TypeSpec(std::vector<SimpleFactor> factors) : factors_(std::move(factors)) {
    for (auto& f : factors_) validate_and_canonicalize(f);
    if (rank() > kMaxTotalRank)
      throw std::invalid_argument("total rank " + std::to_string(rank()) + " exceeds the supported maximum " +
                                  std::to_string(kMaxTotalRank));
  }

  /// Factors joined by 'x', letters case-insensitive: "A5", "a2xB3", "G2".
  static TypeSpec parse(const std::string& text) {
    std::vector<SimpleFactor> factors;
    std::size_t pos = 0;
    if (text.empty()) throw std::invalid_argument("empty type specification");
    while (pos <= text.size()) {
      std::size_t next = text.find_first_of("xX", pos);
      // 'x' never starts a factor, so the first x after a digit is a separator.
      std::string token = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (token.size() < 2) throw std::invalid_argument("malformed type factor '" + token + "' in '" + text + "'");
      SimpleFactor f;
      f.letter = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
      const std::string digits = token.substr(1);
      if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) ||
          digits.size() > 3)
        throw std::invalid_argument("malformed rank in type factor '" + token + "'");
      f.rank = std::stoi(digits);
      factors.push_back(f);
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return TypeSpec(std::move(factors));
  }

  const std::vector<SimpleFactor>& factors() const { return factors_; }

  int rank() const {
    int r = 0;
    for (const auto& f : factors_) r += f.rank;
    return r;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& f : factors_) {
      if (!out.empty()) out += 'x';
      out += f.letter;
      out += std::to_string(f.rank);
    }
    return out;
  }

  friend bool operator==(const TypeSpec&, const TypeSpec&) = default;

 private:
  static void validate_and_canonicalize(SimpleFactor& f) {
    auto bad = [&] {
      throw std::invalid_argument(std::string("invalid rank ") + std::to_string(f.rank) + " for type " + f.letter);
    };
    switch (f.letter) {
      case 'A':
        if (f.rank < 1) bad();
        break;
      case 'B':
        if (f.rank < 2) bad();
        break;
      case 'C':
        if (f.rank == 2)
          f.letter = 'B';
        else if (f.rank < 3)
          bad();
        break;
      case 'D':
        if (f.rank < 4) bad();
        break;
      case 'E':
        if (f.rank < 6 || f.rank > 8) bad();
        break;
      case 'F':
        if (f.rank != 4) bad();
        break;
      case 'G':
        if (f.rank != 2) bad();
        break;
      default:
        throw std::invalid_argument(std::string("unknown simple type letter '") + f.letter + "'");
    }
  }

  std::vector<SimpleFactor> factors_;
};

/// Integer coefficient vector over the simple roots.
using RootVec = std::vector<int>;

inline int height(const RootVec& v) {
  int h = 0;
  for (int c : v) h += c;
  return h;
}

inline RootVec negate(RootVec v) {
  for (int& c : v) c = -c;
  return v;
}

inline RootVec add(RootVec a, const RootVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline RootVec subtract(RootVec a, const RootVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

/// Human-readable form such as "a1+2a2" or "-a3"; "0" for the zero vector.
inline std::string root_label(const RootVec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    int c = v[i];
    if (c == 0) continue;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += 'a' + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

class RootSystem {
 public:
  explicit RootSystem(TypeSpec spec) : spec_(std::move(spec)), rank_(spec_.rank()) {
    build_form();
    build_roots();
  }

  const TypeSpec& type_spec() const { return spec_; }
  int rank() const { return rank_; }
  SimpleSet all_simple() const { return SimpleSet::full(rank_); }

  /// All roots, ordered by height; equal heights ordered so that, for
  /// instance, α1 precedes α2 and -α1 precedes -α2.
  const std::vector<RootVec>& roots() const { return roots_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  const RootVec& root(int idx) const { return roots_.at(idx); }

  std::optional<int> find(const RootVec& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool is_root(const RootVec& v) const { return index_.count(v) != 0; }
  int index_of(const RootVec& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw std::invalid_argument("not a root: " + root_label(v));
    return it->second;
  }

  bool is_positive(int idx) const { return height(roots_[idx]) > 0; }
  int negative_of(int idx) const { return negative_[idx]; }
  int simple_root_index(int i) const { return simple_index_[i]; }
  const std::vector<int>& positive_indices() const { return positive_; }

  /// Gram matrix (α_i, α_j) of the normalized invariant form.
  const Matrix<Rational>& gram() const { return gram_; }

  Rational inner(const RootVec& x, const RootVec& y) const {
    check_length(x);
    check_length(y);
    Rational s = 0;
    for (int i = 0; i < rank_; ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < rank_; ++j)
        if (y[j] != 0) s += gram_(i, j) * x[i] * y[j];
    }
    return s;
  }

  Rational inner(const Vec<Rational>& x, const Vec<Rational>& y) const {
    if (static_cast<int>(x.size()) != rank_ || static_cast<int>(y.size()) != rank_)
      throw std::invalid_argument("inner: vector length does not match the rank");
    Rational s = 0;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) s += gram_(i, j) * x[i] * y[j];
    return s;
  }

  /// Cartan integer <α_i, α_j^∨> = 2 (α_i, α_j) / (α_j, α_j).
  int cartan(int i, int j) const { return cartan_[i][j]; }

  /// <v, α_j^∨> for an integer vector v.
  int pairing(const RootVec& v, int j) const {
    int s = 0;
    for (int i = 0; i < rank_; ++i) s += v[i] * cartan_[i][j];
    return s;
  }

  /// Coefficients of the coroot α^∨ = 2α/(α,α) over the simple coroots.
  RootVec coroot(const RootVec& alpha) const {
    const Rational len = inner(alpha, alpha);
    RootVec out(rank_, 0);
    for (int i = 0; i < rank_; ++i) {
      Rational c = Rational(alpha[i]) * gram_(i, i) / len;
      if (!is_integer(c)) throw std::logic_error("non-integral coroot coefficient for " + root_label(alpha));
      out[i] = static_cast<int>(c.get_num().get_si());
    }
    return out;
  }

  /// Simple reflection s_i(v) = v - <v, α_i^∨> α_i.
  RootVec reflect(RootVec v, int i) const {
    v[i] -= pairing(v, i);
    return v;
  }

  bool adjacent(int i, int j) const { return i != j && gram_(i, j) != 0; }
  int factor_of(int i) const { return factor_of_[i]; }
  bool is_long(int i) const { return gram_(i, i) == 2; }

  bool supported_in(const RootVec& v, SimpleSet s) const {
    for (int i = 0; i < rank_; ++i)
      if (v[i] != 0 && !s.contains(i)) return false;
    return true;
  }

  /// Indices of R₊^S.
  std::vector<int> positive_roots_in(SimpleSet s) const {
    std::vector<int> out;
    for (int idx : positive_)
      if (supported_in(roots_[idx], s)) out.push_back(idx);
    return out;
  }

  /// Dynkin-graph components of `s`, each in index order, ordered by least element.
  std::vector<SimpleSet> connected_components(SimpleSet s) const {
    std::vector<SimpleSet> comps;
    SimpleSet seen;
    for (int start : s.indices()) {
      if (seen.contains(start)) continue;
      SimpleSet comp;
      std::vector<int> stack{start};
      seen.insert(start);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.insert(v);
        for (int w : s.indices())
          if (!seen.contains(w) && adjacent(v, w)) {
            seen.insert(w);
            stack.push_back(w);
          }
      }
      comps.push_back(comp);
    }
    return comps;
  }

  bool is_connected(SimpleSet s) const { return connected_components(s).size() == 1; }

  /// The unique root of R₊^S dominating every other one (S connected, nonempty).
  RootVec highest_root(SimpleSet s) const {
    if (s.empty()) throw std::invalid_argument("highest_root: empty subset");
    if (!is_connected(s)) throw std::invalid_argument("highest_root: subset {" + s.to_string() + "} is not connected");
    const auto candidates = positive_roots_in(s);
    // positive roots are sorted by height, so the last one has maximal height
    const RootVec& top = roots_[candidates.back()];
    for (int idx : candidates)
      for (int i = 0; i < rank_; ++i)
        if (roots_[idx][i] > top[i]) throw std::logic_error("highest_root: no dominating root in {" + s.to_string() + "}");
    return top;
  }

  /// Connected `s` whose roots have one length and whose diagram is a path.
  bool is_type_a(SimpleSet s) const {
    const auto idx = s.indices();
    for (int i : idx) {
      if (gram_(i, i) != gram_(idx.front(), idx.front())) return false;
      int degree = 0;
      for (int j : idx) degree += adjacent(i, j) ? 1 : 0;
      if (degree > 2) return false;
    }
    return true;
  }

 private:
  void check_length(const RootVec& v) const {
    if (static_cast<int>(v.size()) != rank_) throw std::invalid_argument("vector length does not match the rank");
  }

  void build_form() {
    gram_ = Matrix<Rational>(rank_, rank_);
    factor_of_.assign(rank_, 0);
    int offset = 0;
    int factor = 0;
    for (const auto& f : spec_.factors()) {
      const int l = f.rank;
      auto set = [&](int i, int j, Rational v) {  // 1-based within the factor
        gram_(offset + i - 1, offset + j - 1) = v;
        gram_(offset + j - 1, offset + i - 1) = v;
      };
      const Rational two(2), neg1(-1);
      switch (f.letter) {
        case 'A':
          for (int i = 1; i <= l; ++i) set(i, i, two);
          for (int i = 1; i < l; ++i) set(i, i + 1, neg1);
          break;
        case 'B':
          for (int i = 1; i < l; ++i) set(i, i, two);
          set(l, l, Rational(1));
          for (int i = 1; i < l; ++i) set(i, i + 1, neg1);
          break;
        case 'C':
          for (int i = 1; i < l; ++i) set(i, i, Rational(1));
          set(l, l, two);
          for (int i = 1; i < l - 1; ++i) set(i, i + 1, make_rational(-1, 2));
          set(l - 1, l, neg1);
          break;
        case 'D':
          for (int i = 1; i <= l; ++i) set(i, i, two);
          for (int i = 1; i < l - 1; ++i) set(i, i + 1, neg1);
          set(l - 2, l, neg1);
          break;
        case 'E':
          for (int i = 1; i <= l; ++i) set(i, i, two);
          set(1, 3, neg1);
          set(2, 4, neg1);
          for (int i = 3; i < l; ++i) set(i, i + 1, neg1);
          break;
        case 'F':
          set(1, 1, two);
          set(2, 2, two);
          set(3, 3, Rational(1));
          set(4, 4, Rational(1));
          set(1, 2, neg1);
          set(2, 3, neg1);
          set(3, 4, make_rational(-1, 2));
          break;
        case 'G':
          set(1, 1, make_rational(2, 3));
          set(2, 2, two);
          set(1, 2, neg1);
          break;
      }
      for (int i = 0; i < l; ++i) factor_of_[offset + i] = factor;
      offset += l;
      ++factor;
    }

    cartan_.assign(rank_, std::vector<int>(rank_, 0));
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) {
        Rational c = 2 * gram_(i, j) / gram_(j, j);
        if (!is_integer(c)) throw std::logic_error("non-integral Cartan matrix entry");
        cartan_[i][j] = static_cast<int>(c.get_num().get_si());
      }
  }

  // Positive roots by height: β + α_i is a root iff q = p - <β, α_i^∨> > 0,
  // where p is the length of the α_i-string below β.
  void build_roots() {
    std::set<RootVec> positive_set;
    std::vector<RootVec> layer;
    for (int i = 0; i < rank_; ++i) {
      RootVec e(rank_, 0);
      e[i] = 1;
      layer.push_back(e);
      positive_set.insert(e);
    }
    while (!layer.empty()) {
      std::set<RootVec> next;
      for (const auto& beta : layer) {
        for (int i = 0; i < rank_; ++i) {
          int p = 0;
          RootVec down = beta;
          while (true) {
            down[i] -= 1;
            if (!positive_set.count(down)) break;
            ++p;
          }
          const int q = p - pairing(beta, i);
          if (q > 0) {
            RootVec up = beta;
            up[i] += 1;
            if (!positive_set.count(up)) next.insert(up);
          }
        }
      }
      layer.assign(next.begin(), next.end());
      positive_set.insert(next.begin(), next.end());
    }

    std::vector<RootVec> all(positive_set.begin(), positive_set.end());
    for (const auto& r : positive_set) all.push_back(negate(r));
    std::sort(all.begin(), all.end(), [](const RootVec& a, const RootVec& b) {
      const int ha = height(a), hb = height(b);
      if (ha != hb) return ha < hb;
      // same height ⇒ same sign; larger |coefficients| lexicographically first
      for (std::size_t i = 0; i < a.size(); ++i) {
        const int x = std::abs(a[i]), y = std::abs(b[i]);
        if (x != y) return x > y;
      }
      return false;
    });
    roots_ = std::move(all);

    for (int idx = 0; idx < num_roots(); ++idx) index_[roots_[idx]] = idx;
    negative_.resize(roots_.size());
    simple_index_.assign(rank_, -1);
    for (int idx = 0; idx < num_roots(); ++idx) {
      negative_[idx] = index_.at(negate(roots_[idx]));
      if (height(roots_[idx]) > 0) positive_.push_back(idx);
      if (height(roots_[idx]) == 1)
        for (int i = 0; i < rank_; ++i)
          if (roots_[idx][i] == 1) simple_index_[i] = idx;
    }
  }

  TypeSpec spec_;
  int rank_ = 0;
  Matrix<Rational> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> factor_of_;
  std::vector<RootVec> roots_;
  std::map<RootVec, int> index_;
  std::vector<int> negative_;
  std::vector<int> positive_;
  std::vector<int> simple_index_;
};

inline RootSystem build_root_system(const TypeSpec& spec) { return RootSystem(spec); }

}  // namespace lieslice
