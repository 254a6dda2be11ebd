#pragma once

#include <array>
#include <compare>
#include <optional>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace vnum::poly {

/// Largest vertex label representable in the polynomial ring.
inline constexpr int kMaxVertices = 15;
inline constexpr int kSlots = 32;
inline constexpr int kSlotT = 2 * kMaxVertices;

using Rational = mpq_class;

enum class VarKind : std::uint8_t { x, y, t };

/// One ring variable: x_i, y_i (1 <= i <= kMaxVertices) or the auxiliary t.
struct Variable {
  VarKind kind = VarKind::x;
  int vertex = 1;

  static Variable x(int i) { return {VarKind::x, i}; }
  static Variable y(int i) { return {VarKind::y, i}; }
  static Variable t() { return {VarKind::t, 0}; }

  int slot() const;
  std::string name() const;
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Dense exponent vector over the fixed variable universe.
///
/// Slot layout is x_1..x_15, y_1..y_15, t. The defaulted comparison is
/// therefore the lexicographic order x_1 > ... > x_n > y_1 > ... > y_n > t,
/// which is also the canonical storage order of Polynomial.
class Monomial {
 public:
  using Exponents = std::array<std::uint8_t, kSlots>;

  Monomial() = default;
  explicit Monomial(const Exponents& e) : e_(e) {}

  static Monomial of(Variable v, int power = 1);

  int operator[](int slot) const { return e_[slot]; }
  int exponent(Variable v) const { return e_[v.slot()]; }
  const Exponents& exponents() const { return e_; }

  int degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  std::uint32_t support_mask() const;

  Monomial lcm(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; the caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  Exponents e_{};
};

std::string to_string(const Monomial& m);

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept sorted by descending Monomial (the identity lex order) with
/// no zero coefficients, so equal polynomials have identical term vectors.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational c);  // NOLINT: constants convert implicitly
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT
  explicit Polynomial(const Monomial& m, Rational c = 1);
  explicit Polynomial(Variable v);

  static Polynomial from_terms(std::vector<Term> terms);

  static Polynomial x(int i) { return Polynomial(Variable::x(i)); }
  static Polynomial y(int i) { return Polynomial(Variable::y(i)); }
  static Polynomial t() { return Polynomial(Variable::t()); }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool uses_t() const;
  int degree() const;
  bool is_homogeneous() const;
  /// Largest vertex index appearing in an x or y variable (0 if none).
  int max_vertex() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial times(const Monomial& m, const Rational& c = 1) const;
  Polynomial pow(int k) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Term> terms_;
};

/// The 2-minor f_{i,j} = x_i y_j - x_j y_i.
Polynomial minor(int i, int j);

/// g_{C,D} = prod_{k in C} x_k * prod_{k in D} y_k.
Monomial xy_monomial(std::span<const int> c, std::span<const int> d);

/// All 2^|vertices| products g_{C,D} over bipartitions C + D = vertices.
std::vector<Monomial> bipartition_monomials(std::span<const int> vertices);

/// f / g if g divides f in the polynomial ring, nullopt otherwise.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Renames x_v, y_v to x_{image[v-1]}, y_{image[v-1]}; image must be injective.
Polynomial relabel(const Polynomial& p, std::span<const int> image);

/// Text form: `3/2*x1^2*y3 - x2*y4`; terms in descending identity lex order.
std::string to_string(const Polynomial& p);
/// Inverse of to_string; accepts optional leading '+' and any whitespace.
Polynomial parse_polynomial(std::string_view text);

}  // namespace vnum::poly
