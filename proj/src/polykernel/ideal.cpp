#include "vnum/ideal.hpp"

#include <algorithm>

#include "vnum/errors.hpp"

namespace vnum::poly {

namespace {

void require_t_free(const Generators& gens, const char* what) {
  for (const auto& g : gens)
    if (g.uses_t()) throw PreconditionError(std::string(what) + ": generators must not use t");
}

// Order used to pick a deterministic witness: greatest leading monomial under
// identity lex first, then the remaining terms, then coefficients.
bool listed_before(const Polynomial& a, const Polynomial& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (ta[k].monomial != tb[k].monomial) return ta[k].monomial > tb[k].monomial;
    if (ta[k].coeff != tb[k].coeff) return ta[k].coeff > tb[k].coeff;
  }
  return ta.size() > tb.size();
}

}  // namespace

bool ideal_membership(const Polynomial& f, const Generators& gens, const Limits& limits) {
  if (f.is_zero()) return true;
  return normal_form(f, buchberger(gens, {}, limits)).is_zero();
}

bool contains_all(const GroebnerBasis& gb, const Generators& sub) {
  return std::all_of(sub.begin(), sub.end(),
                     [&](const Polynomial& g) { return normal_form(g, gb).is_zero(); });
}

bool same_ideal(const Generators& a, const Generators& b, const Limits& limits) {
  return buchberger(a, {}, limits).generators == buchberger(b, {}, limits).generators;
}

Generators intersect(const Generators& a, const Generators& b, const Limits& limits) {
  require_t_free(a, "intersect");
  require_t_free(b, "intersect");
  const auto nonzero = [](const Generators& g) {
    return std::any_of(g.begin(), g.end(), [](const Polynomial& p) { return !p.is_zero(); });
  };
  if (!nonzero(a) || !nonzero(b)) return {};

  const Polynomial t = Polynomial::t();
  const Polynomial one_minus_t = Polynomial(1) - t;
  Generators mixed;
  mixed.reserve(a.size() + b.size());
  for (const auto& f : a) mixed.push_back(t * f);
  for (const auto& g : b) mixed.push_back(one_minus_t * g);

  const auto gb = buchberger(mixed, MonomialOrder().with_elimination(), limits);
  Generators out;
  for (const auto& g : gb.generators)
    if (!g.uses_t()) out.push_back(g);
  // The t-free part of an elimination basis is already a reduced basis, but
  // under the elimination order; normalize to the identity order.
  return buchberger(out, {}, limits).generators;
}

Generators colon_poly(const Generators& ideal, const Polynomial& f, const Limits& limits) {
  if (f.is_zero()) throw PreconditionError("colon by the zero polynomial");
  if (f.is_constant()) return buchberger(ideal, {}, limits).generators;
  Generators out;
  for (const auto& h : intersect(ideal, {f}, limits)) {
    auto q = divide_exact(h, f);
    if (!q) throw std::logic_error("colon_poly: intersection element not divisible by f");
    out.push_back(std::move(*q));
  }
  return buchberger(out, {}, limits).generators;
}

Generators colon_ideal(const Generators& ideal, const Generators& by, const Limits& limits) {
  if (by.empty()) throw PreconditionError("colon by an empty generator list");
  const auto base = buchberger(ideal, {}, limits);
  std::optional<Generators> acc;
  for (const auto& p : by) {
    if (p.is_zero()) continue;
    // (I : p) is the unit ideal for p in I and drops out of the intersection.
    if (normal_form(p, base).is_zero()) continue;
    Generators piece = colon_poly(ideal, p, limits);
    acc = acc ? intersect(*acc, piece, limits) : std::move(piece);
  }
  if (!acc) return {Polynomial(1)};
  return *acc;
}

bool radical_membership(const Polynomial& f, const Generators& ideal, const Limits& limits) {
  require_t_free(ideal, "radical_membership");
  if (f.uses_t()) throw PreconditionError("radical_membership: f must not use t");
  if (f.is_zero()) return true;
  Generators gens = ideal;
  gens.push_back(Polynomial(1) - Polynomial::t() * f);
  return buchberger(gens, {}, limits).is_unit();
}

InitialIdeal initial_ideal(const GroebnerBasis& gb) {
  InitialIdeal out;
  for (const auto& g : gb.generators) {
    const Monomial& m = gb.order.leading_term(g).monomial;
    out.squarefree = out.squarefree && m.is_squarefree();
    out.monomials.push_back(m);
  }
  return out;
}

bool monomial_ideal_contains(const std::vector<Monomial>& b, const std::vector<Monomial>& a) {
  return std::all_of(a.begin(), a.end(), [&](const Monomial& m) {
    return std::any_of(b.begin(), b.end(), [&](const Monomial& g) { return g.divides(m); });
  });
}

NewDegree min_new_degree(const GroebnerBasis& j, const GroebnerBasis& i) {
  std::optional<NewDegree> best;
  for (const auto& g : j.generators) {
    if (!g.is_homogeneous()) throw PreconditionError("min_new_degree: J is not homogeneous");
    Polynomial r = normal_form(g, i);
    if (r.is_zero()) continue;
    const int d = g.degree();
    if (!best || d < best->degree || (d == best->degree && listed_before(r, best->witness)))
      best = NewDegree{d, std::move(r)};
  }
  if (!best) throw PreconditionError("min_new_degree: J adds no element to I");
  return *best;
}

NewDegree min_new_degree(const Generators& j, const Generators& i, const Limits& limits) {
  return min_new_degree(buchberger(j, {}, limits), buchberger(i, {}, limits));
}

}  // namespace vnum::poly
