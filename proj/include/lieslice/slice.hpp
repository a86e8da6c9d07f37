#pragma once

// Candidate affine slice V_a = f_a + W_a for the coadjoint action of q_{S,T}.
//
//   f_a  = Σ_{γ∈Γ} a_γ (X_γ)*
//   W_a  = h_Γ^⊥ ⊕ span{f_a^α : α ∈ Γ₀},   f_a^α = a_α (X_α)* + a_-α (X_-α)*
//   r_a  = t ⊕ span{Z_α : α ∈ Γ₀},         Z_α = a_-α X_α + a_α X_-α
//
// With dual-basis coordinates the coefficient attached to (X_γ)* plays the
// role of the Killing-form coefficient of φ_{X_-γ}; Z_α is the element whose
// Killing dual is f_a^α, hence the crossed coefficients.
//
// All checks are exact. Random points are drawn from seeded generators so a
// run is reproducible from (input, seed).

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieslice/linalg.hpp"
#include "lieslice/seaweed.hpp"
#include "lieslice/verdict.hpp"

namespace lieslice {

inline constexpr int kDefaultBound = 10;
inline constexpr int kDefaultSamples = 20;
inline constexpr int kDefaultRetries = 5;

/// Deterministic generator for one purpose of one run.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t purpose) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(purpose)};
  return std::mt19937_64(seq);
}

inline int random_int(std::mt19937_64& rng, int bound) { return std::uniform_int_distribution<int>(-bound, bound)(rng); }

inline int random_nonzero_int(std::mt19937_64& rng, int bound) {
  const int k = std::uniform_int_distribution<int>(1, 2 * bound)(rng);
  return k <= bound ? -k : k - bound;
}

struct CoefficientChoice {
  enum class Kind { Ones, Random, Explicit };
  Kind kind = Kind::Ones;
  std::uint64_t seed = 0;
  int bound = kDefaultBound;
  std::vector<Rational> values;

  static CoefficientChoice ones() { return {}; }
  static CoefficientChoice random(std::uint64_t seed, int bound = kDefaultBound) {
    return {Kind::Random, seed, bound, {}};
  }
  static CoefficientChoice explicit_values(std::vector<Rational> v) { return {Kind::Explicit, 0, 0, std::move(v)}; }
};

struct SliceData {
  std::shared_ptr<const Seaweed> seaweed;
  GammaData gd;
  std::vector<Rational> a;            // one nonzero entry per element of Γ, in Γ order
  LinearForm f_a;
  std::vector<LinearForm> w_basis;    // h_Γ^⊥ first, then f_a^α for α ∈ Γ₀
  std::vector<LieElement> r_basis;    // t first, then Z_α for α ∈ Γ₀

  const Seaweed& sw() const { return *seaweed; }
};

/// Matrix whose column j is X_j.f, i.e. entry (i, j) = f([Y_i, X_j]).
inline Matrix<Rational> coadjoint_matrix(const Seaweed& sw, const LinearForm& f) {
  const int dim = sw.dim();
  if (static_cast<int>(f.size()) != dim) throw std::invalid_argument("coadjoint_matrix: form has wrong length");
  Matrix<Rational> m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (const auto& t : sw.bracket_basis(i, j))
        if (!is_zero(f[t.index])) m(i, j) += f[t.index] * t.coeff;
  return m;
}

/// Basis of q^f = {X : X.f = 0}.
inline std::vector<LieElement> stabilizer(const Seaweed& sw, const LinearForm& f) {
  return kernel_basis(coadjoint_matrix(sw, f));
}

inline std::size_t orbit_dimension(const Seaweed& sw, const LinearForm& f) { return rank(coadjoint_matrix(sw, f)); }

namespace detail {

inline std::vector<Rational> resolve_coefficients(const GammaData& gd, const CoefficientChoice& choice) {
  std::vector<Rational> a;
  switch (choice.kind) {
    case CoefficientChoice::Kind::Ones:
      a.assign(gd.gamma.size(), Rational(1));
      break;
    case CoefficientChoice::Kind::Random: {
      if (choice.bound < 1) throw std::invalid_argument("random coefficients need bound >= 1");
      auto rng = make_rng(choice.seed, 1);
      for (std::size_t i = 0; i < gd.gamma.size(); ++i) a.emplace_back(random_nonzero_int(rng, choice.bound));
      break;
    }
    case CoefficientChoice::Kind::Explicit:
      if (choice.values.size() != gd.gamma.size())
        throw std::invalid_argument("expected " + std::to_string(gd.gamma.size()) + " coefficients, got " +
                                    std::to_string(choice.values.size()));
      a = choice.values;
      break;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] == 0) throw std::invalid_argument("slice coefficient a[" + std::to_string(i) + "] is zero");
  return a;
}

// position in Γ of the +α (from K(S)) and -α (from K(T)) entries for α ∈ Γ₀
inline std::pair<std::size_t, std::size_t> gamma0_positions(const RootSystem& rs, const GammaData& gd, int alpha) {
  std::size_t plus = gd.gamma.size(), minus = gd.gamma.size();
  for (std::size_t i = 0; i < gd.gamma.size(); ++i) {
    if (gd.gamma[i] == alpha && plus == gd.gamma.size()) plus = i;
    if (gd.gamma[i] == rs.negative_of(alpha) && minus == gd.gamma.size()) minus = i;
  }
  if (plus == gd.gamma.size() || minus == gd.gamma.size()) throw std::logic_error("Γ₀ element without both signs");
  return {plus, minus};
}

}  // namespace detail

inline SliceData build_slice(std::shared_ptr<const Seaweed> sw, const CoefficientChoice& choice) {
  SliceData sd;
  sd.seaweed = std::move(sw);
  const Seaweed& q = *sd.seaweed;
  const RootSystem& rs = q.root_system();
  const int dim = q.dim();
  sd.gd = gamma_data(q);
  sd.a = detail::resolve_coefficients(sd.gd, choice);

  auto qidx = [&](int root) {
    auto qi = q.q_index_of_root(root);
    if (!qi) throw std::logic_error("Γ element outside Δ_{S,T}");
    return *qi;
  };

  sd.f_a.assign(dim, Rational(0));
  for (std::size_t i = 0; i < sd.gd.gamma.size(); ++i) sd.f_a[qidx(sd.gd.gamma[i])] += sd.a[i];

  for (const auto& lam : sd.gd.hgamma_perp_basis) {
    LinearForm w(dim, Rational(0));
    std::copy(lam.begin(), lam.end(), w.begin());
    sd.w_basis.push_back(std::move(w));
  }
  for (const auto& h : sd.gd.t_basis) {
    LieElement x(dim, Rational(0));
    std::copy(h.begin(), h.end(), x.begin());
    sd.r_basis.push_back(std::move(x));
  }
  for (int alpha : sd.gd.gamma0) {
    const auto [plus, minus] = detail::gamma0_positions(rs, sd.gd, alpha);
    const int xp = qidx(alpha), xm = qidx(rs.negative_of(alpha));
    LinearForm fa(dim, Rational(0));
    fa[xp] = sd.a[plus];
    fa[xm] = sd.a[minus];
    sd.w_basis.push_back(std::move(fa));
    LieElement z(dim, Rational(0));
    z[xp] = sd.a[minus];
    z[xm] = sd.a[plus];
    sd.r_basis.push_back(std::move(z));
  }
  return sd;
}

/// f_a + Σ c_k w_k with integer c_k drawn uniformly from [-bound, bound].
inline LinearForm random_point_of_slice(const SliceData& sd, std::mt19937_64& rng, int bound = kDefaultBound) {
  LinearForm f = sd.f_a;
  for (const auto& w : sd.w_basis) {
    const int c = random_int(rng, bound);
    if (c == 0) continue;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += c * w[i];
  }
  return f;
}

inline std::string describe_form(const Seaweed& sw, const LinearForm& f) {
  std::string out;
  for (int q = 0; q < sw.dim(); ++q) {
    if (is_zero(f[q])) continue;
    if (!out.empty()) out += " + ";
    out += to_string(f[q]) + "*(" + sw.basis_label(q) + ")*";
  }
  return out.empty() ? "0" : out;
}

/// q.f ∩ W_a = {0} at f = f_a and at `samples` random points of V_a.
inline Verdict check_transversality(const SliceData& sd, int samples, std::uint64_t seed) {
  const Seaweed& sw = sd.sw();
  auto rng = make_rng(seed, 2);
  for (int s = 0; s <= samples; ++s) {
    const LinearForm f = s == 0 ? sd.f_a : random_point_of_slice(sd, rng);
    const auto m = coadjoint_matrix(sw, f);
    std::vector<Vec<Rational>> tangent;
    for (std::size_t j = 0; j < m.cols(); ++j) tangent.push_back(m.column(j));
    const auto meet = intersect_subspaces(tangent, sd.w_basis);
    if (!meet.empty())
      return Verdict::fails("q.f ∩ W_a has dimension " + std::to_string(meet.size()) + " at f = " + describe_form(sw, f));
  }
  return Verdict::holds();
}

/// r_a.W_a = 0, and r_a ⊂ q^f at f = f_a and at `samples` random points of V_a.
inline Verdict check_stabilizer_containment(const SliceData& sd, int samples, std::uint64_t seed) {
  const Seaweed& sw = sd.sw();
  for (std::size_t i = 0; i < sd.r_basis.size(); ++i)
    for (std::size_t j = 0; j < sd.w_basis.size(); ++j)
      if (!is_zero_vector(sw.act(sd.r_basis[i], sd.w_basis[j])))
        return Verdict::fails("r_a element " + std::to_string(i) + " moves W_a element " + std::to_string(j));
  auto rng = make_rng(seed, 3);
  for (int s = 0; s <= samples; ++s) {
    const LinearForm f = s == 0 ? sd.f_a : random_point_of_slice(sd, rng);
    for (std::size_t i = 0; i < sd.r_basis.size(); ++i)
      if (!is_zero_vector(sw.act(sd.r_basis[i], f)))
        return Verdict::fails("r_a element " + std::to_string(i) + " does not stabilize f = " + describe_form(sw, f));
  }
  return Verdict::holds();
}

/// Upper bound for ind q = min_f dim q^f from `trials` random forms with
/// integer coordinates in [-bound, bound]; exact with high probability.
inline std::size_t index(const Seaweed& sw, int trials, std::uint64_t seed, int bound = kDefaultBound) {
  if (trials < 1) throw std::invalid_argument("index: trials must be >= 1");
  auto rng = make_rng(seed, 4);
  std::size_t best = static_cast<std::size_t>(sw.dim());
  for (int k = 0; k < trials; ++k) {
    LinearForm f(sw.dim());
    for (auto& x : f) x = random_int(rng, bound);
    best = std::min(best, static_cast<std::size_t>(sw.dim()) - orbit_dimension(sw, f));
  }
  return best;
}

/// t ∩ span{h_α : α ∈ S∩T} = {0}; not applicable when S∩T is empty.
inline Verdict check_torus_levi(const Seaweed& sw, const GammaData& gd) {
  const SimpleSet common = sw.s() & sw.t();
  if (common.empty()) return Verdict::not_applicable("S ∩ T is empty");
  std::vector<Vec<Rational>> coroots;
  for (int i : common.indices()) {
    Vec<Rational> e(sw.rank(), Rational(0));
    e[i] = 1;  // h_{α_i} is proportional to H_i
    coroots.push_back(std::move(e));
  }
  const auto meet = intersect_subspaces(gd.t_basis, coroots);
  if (!meet.empty()) return Verdict::fails("t ∩ span{h_α : α ∈ S∩T} has dimension " + std::to_string(meet.size()));
  return Verdict::holds();
}

struct SliceOptions {
  int max_retries = kDefaultRetries;
  std::uint64_t seed = 0;
  int samples = kDefaultSamples;
  int bound = kDefaultBound;
  int index_trials = kDefaultSamples;
  bool start_random = false;  // skip the all-ones attempt
};

struct VerificationReport {
  Status overall = Status::NotApplicable;
  std::string note;
  bool qualifies = false;
  std::vector<Rational> a_used;
  int attempts = 0;
  std::optional<std::size_t> stabilizer_dim_at_fa;
  std::optional<std::size_t> dim_w;
  Status r_equals_stabilizer = Status::NotApplicable;
  int transversality_samples = 0;
  Status transversal = Status::NotApplicable;
  Status stabilizer_containment = Status::NotApplicable;
  std::optional<std::size_t> index_estimate;
  Status dim_count_ok = Status::NotApplicable;
  Status torus_levi_ok = Status::NotApplicable;
};

/// Runs the slice pipeline on q_{S,T}: hypothesis, search for a with
/// q^{f_a} = r_a (ones first, then seeded random retries), then the
/// transversality, stabilizer, dimension-count and torus/Levi checks.
inline VerificationReport verify_slice(std::shared_ptr<const Seaweed> sw, const SliceOptions& opt = {}) {
  VerificationReport rep;
  const GammaData gd = gamma_data(*sw);
  const Hypothesis hyp = hypothesis_check(gd);
  rep.qualifies = hyp.qualifies;
  if (!hyp.qualifies) {
    rep.note = !hyp.gamma0_empty ? "Γ₀ is nonempty" : "Γ is linearly dependent";
    return rep;
  }

  std::optional<SliceData> good;
  std::size_t stab_dim = 0;
  for (int attempt = 0; attempt <= opt.max_retries && !good; ++attempt) {
    rep.attempts = attempt + 1;
    const auto choice = attempt == 0 && !opt.start_random ? CoefficientChoice::ones()
                                     : CoefficientChoice::random(opt.seed * 1000003ULL + attempt, opt.bound);
    SliceData sd = build_slice(sw, choice);
    const auto stab = stabilizer(*sw, sd.f_a);
    stab_dim = stab.size();
    bool contained = true;
    for (const auto& x : sd.r_basis)
      if (!is_zero_vector(sw->act(x, sd.f_a))) contained = false;
    if (contained && stab.size() == sd.r_basis.size()) good = std::move(sd);
  }
  rep.stabilizer_dim_at_fa = stab_dim;
  if (!good) {
    rep.overall = Status::Inconclusive;
    rep.r_equals_stabilizer = Status::Inconclusive;
    rep.note = "no coefficient vector with q^{f_a} = r_a found in " + std::to_string(rep.attempts) + " attempts";
    return rep;
  }
  const SliceData& sd = *good;
  rep.a_used = sd.a;
  rep.r_equals_stabilizer = Status::Holds;
  rep.dim_w = sd.w_basis.size();

  const Verdict transv = check_transversality(sd, opt.samples, opt.seed);
  rep.transversality_samples = opt.samples;
  rep.transversal = transv.status;
  const Verdict contain = check_stabilizer_containment(sd, opt.samples, opt.seed);
  rep.stabilizer_containment = contain.status;
  const std::size_t orbit = orbit_dimension(*sw, sd.f_a);
  rep.dim_count_ok = static_cast<std::size_t>(sw->dim()) == orbit + sd.w_basis.size() ? Status::Holds : Status::Fails;
  const Verdict torus = check_torus_levi(*sw, sd.gd);
  rep.torus_levi_ok = torus.status;
  rep.index_estimate = index(*sw, opt.index_trials, opt.seed, opt.bound);

  Verdict all = combine(combine(transv, contain), torus);
  if (rep.dim_count_ok == Status::Fails) all = combine(all, Verdict::fails("dim q != orbit dim + dim W_a"));
  rep.overall = all.status == Status::NotApplicable ? Status::Holds : all.status;
  rep.note = all.note;
  return rep;
}

}  // namespace lieslice
