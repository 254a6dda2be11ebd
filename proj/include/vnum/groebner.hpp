#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "vnum/polynomial.hpp"

namespace vnum::poly {

/// Permuted lexicographic order <_sigma, optionally with t as the greatest
/// variable (elimination block).
///
/// For sigma given as images sigma(1..n) the variables are ranked
///   [t >] x_{sigma^-1(1)} > ... > x_{sigma^-1(n)} > y_{sigma^-1(1)} > ... > y_{sigma^-1(n)} [> t]
/// Vertices above n keep their natural position after the first n.
class MonomialOrder {
 public:
  using Ranking = std::array<std::uint8_t, kSlots>;

  /// Identity permutation: x_1 > ... > x_15 > y_1 > ... > y_15 > t.
  MonomialOrder();
  /// sigma[k-1] is the image of vertex k; must be a permutation of 1..n.
  static MonomialOrder permuted(std::vector<int> sigma);

  MonomialOrder with_elimination() const;
  bool eliminates_t() const { return elim_; }
  bool is_identity() const;
  const std::vector<int>& sigma() const { return sigma_; }
  /// rank_to_slot()[r] is the slot of the r-th largest variable.
  const Ranking& rank_to_slot() const { return rank_; }

  bool greater(const Monomial& a, const Monomial& b) const;
  const Term& leading_term(const Polynomial& p) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.rank_ == b.rank_;
  }

 private:
  void rebuild();

  std::vector<int> sigma_;
  bool elim_ = false;
  Ranking rank_{};
};

/// Caps for one Buchberger run. Exceeding any of them throws ResourceError.
struct Limits {
  std::size_t max_polys = 20000;
  int max_degree = 40;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct GroebnerBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order;
  bool reduced = false;

  bool is_unit() const;
  bool is_zero_ideal() const { return generators.empty(); }
};

/// lcm/in(f) * f - lcm/in(g) * g with the leading coefficients normalized.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord);

/// Reduced Groebner basis (Gebauer-Moeller pair pruning, normal selection
/// strategy). The empty generator list is the zero ideal.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord = {},
                         const Limits& limits = {});

/// Number of buchberger() calls made by this process so far.
std::uint64_t buchberger_runs();

/// Full multivariate division remainder of f by gb.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Remainder of f under division by an arbitrary generator list, reducing with
/// the first divisor in list order.
Polynomial reduce_by(const Polynomial& f, std::span<const Polynomial> divisors,
                     const MonomialOrder& ord);

/// Every S-pair of `gens` (all pairs, no criteria) reduces to zero modulo
/// `gens` under `ord`.
bool satisfies_buchberger_criterion(std::span<const Polynomial> gens, const MonomialOrder& ord);

/// Monic, leading monomials pairwise non-dividing, and no term of any element
/// divisible by the leading monomial of another.
bool is_reduced_form(std::span<const Polynomial> gens, const MonomialOrder& ord);

}  // namespace vnum::poly
