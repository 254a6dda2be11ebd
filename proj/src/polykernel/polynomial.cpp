#include "vnum/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "vnum/errors.hpp"

namespace vnum::poly {

int Variable::slot() const {
  switch (kind) {
    case VarKind::x: return vertex - 1;
    case VarKind::y: return kMaxVertices + vertex - 1;
    case VarKind::t: return kSlotT;
  }
  return kSlotT;
}

std::string Variable::name() const {
  switch (kind) {
    case VarKind::x: return "x" + std::to_string(vertex);
    case VarKind::y: return "y" + std::to_string(vertex);
    case VarKind::t: return "t";
  }
  return "?";
}

namespace {

Variable variable_at(int slot) {
  if (slot < kMaxVertices) return Variable::x(slot + 1);
  if (slot < kSlotT) return Variable::y(slot - kMaxVertices + 1);
  return Variable::t();
}

void check_vertex(int i) {
  if (i < 1 || i > kMaxVertices)
    throw PreconditionError("vertex index " + std::to_string(i) + " outside 1.." +
                            std::to_string(kMaxVertices));
}

}  // namespace

Monomial Monomial::of(Variable v, int power) {
  if (v.kind != VarKind::t) check_vertex(v.vertex);
  if (power < 0 || power > 255) throw PreconditionError("exponent out of range");
  Monomial m;
  m.e_[v.slot()] = static_cast<std::uint8_t>(power);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : e_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(e_.begin(), e_.end(), [](auto e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](auto e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (int s = 0; s < kSlots; ++s)
    if (e_[s] > other.e_[s]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  return (support_mask() & other.support_mask()) == 0;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (int s = 0; s < kSlots; ++s)
    if (e_[s]) mask |= (1u << s);
  return mask;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (int s = 0; s < kSlots; ++s) r.e_[s] = std::max(e_[s], other.e_[s]);
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int s = 0; s < kSlots; ++s) {
    int e = e_[s] + other.e_[s];
    if (e > 255) throw ResourceError("exponent overflow");
    r.e_[s] = static_cast<std::uint8_t>(e);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (int s = 0; s < kSlots; ++s) r.e_[s] = static_cast<std::uint8_t>(e_[s] - other.e_[s]);
  return r;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (int s = 0; s < kSlots; ++s) {
    if (!m[s]) continue;
    if (!out.empty()) out += '*';
    out += variable_at(s).name();
    if (m[s] > 1) out += '^' + std::to_string(m[s]);
  }
  return out.empty() ? "1" : out;
}

Polynomial::Polynomial(Rational c) {
  if (c != 0) terms_.push_back({Monomial{}, std::move(c)});
}

Polynomial::Polynomial(const Monomial& m, Rational c) {
  if (c != 0) terms_.push_back({m, std::move(c)});
}

Polynomial::Polynomial(Variable v) : Polynomial(Monomial::of(v)) {}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rational, std::greater<>> acc;
  for (auto& t : terms) acc[t.monomial] += t.coeff;
  Polynomial p;
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

bool Polynomial::uses_t() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.monomial[kSlotT] != 0; });
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().monomial.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

int Polynomial::max_vertex() const {
  int v = 0;
  for (const auto& t : terms_)
    for (int s = 0; s < kSlotT; ++s)
      if (t.monomial[s]) v = std::max(v, variable_at(s).vertex);
  return v;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

// Merge two descending term lists, scaling the second by `sign`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial > b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial > a[i].monomial) {
      out.push_back({b[j].monomial, sign > 0 ? b[j].coeff : Rational(-b[j].coeff)});
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(a[i].coeff + b[j].coeff) : Rational(a[i].coeff - b[j].coeff);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  return Polynomial::from_terms(std::move(prod));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
  Polynomial r;
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial r(1);
  for (int i = 0; i < k; ++i) r *= *this;
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

Polynomial minor(int i, int j) {
  check_vertex(i);
  check_vertex(j);
  return Polynomial::x(i) * Polynomial::y(j) - Polynomial::x(j) * Polynomial::y(i);
}

Monomial xy_monomial(std::span<const int> c, std::span<const int> d) {
  Monomial m;
  for (int k : c) m = m * Monomial::of(Variable::x(k));
  for (int k : d) m = m * Monomial::of(Variable::y(k));
  return m;
}

std::vector<Monomial> bipartition_monomials(std::span<const int> vertices) {
  std::vector<Monomial> out;
  const std::size_t k = vertices.size();
  out.reserve(std::size_t{1} << k);
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    Monomial m;
    for (std::size_t b = 0; b < k; ++b) {
      const bool in_c = (mask >> b) & 1u;
      m = m * Monomial::of(in_c ? Variable::x(vertices[b]) : Variable::y(vertices[b]));
    }
    out.push_back(m);
  }
  return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) return std::nullopt;
  const Term& lead = g.terms().front();
  Polynomial rest = f;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& t = rest.terms().front();
    if (!lead.monomial.divides(t.monomial)) return std::nullopt;
    Monomial q = t.monomial / lead.monomial;
    Rational c = t.coeff / lead.coeff;
    quotient.push_back({q, c});
    rest -= g.times(q, c);
  }
  return Polynomial::from_terms(std::move(quotient));
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational mag = abs(c);
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += to_string(m);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  Polynomial parse() {
    if (s_.empty()) throw ParseError("empty polynomial text");
    std::vector<Term> terms;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(term(sign));
    }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
    if (d.empty()) fail("expected digits");
    return d;
  }

  Term term(int sign) {
    Rational coeff = 1;
    Monomial m;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      if (peek() == '/') {
        get();
        den = digits();
      }
      coeff = Rational(mpz_class(num), mpz_class(den));
      if (den == "0" || coeff.get_den() == 0) fail("zero denominator");
      coeff.canonicalize();
      have_factor = true;
      if (peek() != '*') return {m, sign * coeff};
      get();
    }
    for (;;) {
      m = m * factor();
      have_factor = true;
      if (peek() != '*') break;
      get();
    }
    if (!have_factor) fail("empty term");
    return {m, sign * coeff};
  }

  Monomial factor() {
    const char c = peek();
    Variable v;
    if (c == 't') {
      get();
      v = Variable::t();
    } else if (c == 'x' || c == 'y') {
      get();
      const int idx = std::stoi(digits());
      if (idx < 1 || idx > kMaxVertices) fail("variable index out of range");
      v = c == 'x' ? Variable::x(idx) : Variable::y(idx);
    } else {
      fail("expected variable");
    }
    int power = 1;
    if (peek() == '^') {
      get();
      power = std::stoi(digits());
      if (power > 255) fail("exponent too large");
    }
    return Monomial::of(v, power);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace vnum::poly

namespace vnum::poly {

Polynomial relabel(const Polynomial& p, std::span<const int> image) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& term : p.terms()) {
    Monomial::Exponents e{};
    const auto& old = term.monomial.exponents();
    e[kSlotT] = old[kSlotT];
    for (int v = 1; v <= kMaxVertices; ++v) {
      const int ex = old[Variable::x(v).slot()];
      const int ey = old[Variable::y(v).slot()];
      if (ex == 0 && ey == 0) continue;
      if (v > static_cast<int>(image.size())) throw PreconditionError("relabel: vertex outside the map");
      const int w = image[v - 1];
      check_vertex(w);
      e[Variable::x(w).slot()] = static_cast<std::uint8_t>(ex);
      e[Variable::y(w).slot()] = static_cast<std::uint8_t>(ey);
    }
    terms.push_back({Monomial(e), term.coeff});
  }
  return Polynomial::from_terms(std::move(terms));
}

}  // namespace vnum::poly
