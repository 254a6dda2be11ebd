#pragma once

#include <vector>

#include "vnum/groebner.hpp"

namespace vnum::poly {

/// An ideal given by a generator list; the empty list is the zero ideal.
using Generators = std::vector<Polynomial>;

// All operations below work in the ring Q[x, y] (inputs must not contain t;
// t is reserved for elimination) under the identity lex order unless stated.

bool ideal_membership(const Polynomial& f, const Generators& gens, const Limits& limits = {});

/// Every generator of `sub` lies in ideal(gb).
bool contains_all(const GroebnerBasis& gb, const Generators& sub);

/// ideal(a) == ideal(b), decided by comparing reduced Groebner bases.
bool same_ideal(const Generators& a, const Generators& b, const Limits& limits = {});

/// Reduced Groebner basis of ideal(a) ∩ ideal(b), via eliminating t from
/// t*a + (1 - t)*b.
Generators intersect(const Generators& a, const Generators& b, const Limits& limits = {});

/// (I : f) = (I ∩ (f)) / f.
Generators colon_poly(const Generators& ideal, const Polynomial& f, const Limits& limits = {});

/// (I : P) as the intersection of (I : p) over the generators p of P.
Generators colon_ideal(const Generators& ideal, const Generators& by, const Limits& limits = {});

/// f in sqrt(I), decided by 1 in I + (1 - t*f).
bool radical_membership(const Polynomial& f, const Generators& ideal, const Limits& limits = {});

struct InitialIdeal {
  std::vector<Monomial> monomials;
  bool squarefree = true;
};

InitialIdeal initial_ideal(const GroebnerBasis& gb);

/// Every monomial of `a` is divisible by some monomial of `b`.
bool monomial_ideal_contains(const std::vector<Monomial>& b, const std::vector<Monomial>& a);

struct NewDegree {
  int degree = 0;
  Polynomial witness;
};

/// Least degree of a homogeneous element of J not in I, for I ⊆ J both
/// homogeneous. Throws PreconditionError when J == I.
NewDegree min_new_degree(const Generators& j, const Generators& i, const Limits& limits = {});

/// Same as above with the Groebner bases already computed.
NewDegree min_new_degree(const GroebnerBasis& j, const GroebnerBasis& i);

}  // namespace vnum::poly
