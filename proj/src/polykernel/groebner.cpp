#include "vnum/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "vnum/errors.hpp"

namespace vnum::poly {

// ---------------------------------------------------------------- order

MonomialOrder::MonomialOrder() { rebuild(); }

MonomialOrder MonomialOrder::permuted(std::vector<int> sigma) {
  const int n = static_cast<int>(sigma.size());
  if (n > kMaxVertices) throw PreconditionError("permutation longer than the vertex universe");
  std::vector<bool> seen(n + 1, false);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[v]) throw PreconditionError("sigma is not a permutation of 1..n");
    seen[v] = true;
  }
  MonomialOrder o;
  o.sigma_ = std::move(sigma);
  o.rebuild();
  return o;
}

MonomialOrder MonomialOrder::with_elimination() const {
  MonomialOrder o = *this;
  o.elim_ = true;
  o.rebuild();
  return o;
}

bool MonomialOrder::is_identity() const {
  for (int r = 0; r < kSlots; ++r)
    if (rank_[r] != r) return false;
  return true;
}

void MonomialOrder::rebuild() {
  const int n = static_cast<int>(sigma_.size());
  std::vector<int> inverse(n + 1);
  for (int k = 0; k < n; ++k) inverse[sigma_[k]] = k + 1;
  int r = 0;
  if (elim_) rank_[r++] = kSlotT;
  for (int pass = 0; pass < 2; ++pass) {
    const int base = pass == 0 ? 0 : kMaxVertices;
    for (int pos = 1; pos <= n; ++pos) rank_[r++] = static_cast<std::uint8_t>(base + inverse[pos] - 1);
    for (int v = n + 1; v <= kMaxVertices; ++v) rank_[r++] = static_cast<std::uint8_t>(base + v - 1);
  }
  if (!elim_) rank_[r++] = kSlotT;
  rank_[r++] = kSlots - 1;
}

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
  for (int r = 0; r < kSlots; ++r) {
    const int s = rank_[r];
    if (a[s] != b[s]) return a[s] > b[s];
  }
  return false;
}

const Term& MonomialOrder::leading_term(const Polynomial& p) const {
  if (p.is_zero()) throw PreconditionError("leading term of the zero polynomial");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (greater(t.monomial, best->monomial)) best = &t;
  return *best;
}

bool GroebnerBasis::is_unit() const {
  return std::any_of(generators.begin(), generators.end(),
                     [](const Polynomial& g) { return !g.is_zero() && g.is_constant(); });
}

// ---------------------------------------------------------------- engine

namespace {

// Polynomials inside the engine live in "rank coordinates": exponent slot r
// holds the exponent of the r-th largest variable, so the monomial order is
// plain lexicographic comparison of the byte arrays. Terms are stored in
// ascending order, leading term at the back.
using IPoly = std::vector<Term>;

class Engine {
 public:
  explicit Engine(const MonomialOrder& ord) : ord_(ord), identity_(ord.is_identity()) {}

  Monomial to_internal(const Monomial& m) const {
    if (identity_) return m;
    Monomial::Exponents e{};
    const auto& rank = ord_.rank_to_slot();
    for (int r = 0; r < kSlots; ++r) e[r] = static_cast<std::uint8_t>(m[rank[r]]);
    return Monomial(e);
  }

  Monomial from_internal(const Monomial& m) const {
    if (identity_) return m;
    Monomial::Exponents e{};
    const auto& rank = ord_.rank_to_slot();
    for (int r = 0; r < kSlots; ++r) e[rank[r]] = static_cast<std::uint8_t>(m[r]);
    return Monomial(e);
  }

  IPoly to_internal(const Polynomial& p) const {
    IPoly out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) out.push_back({to_internal(t.monomial), t.coeff});
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
    return out;
  }

  Polynomial from_internal(const IPoly& p) const {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p) terms.push_back({from_internal(t.monomial), t.coeff});
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  const MonomialOrder& ord_;
  bool identity_;
};

void make_monic(IPoly& p) {
  if (p.empty() || p.back().coeff == 1) return;
  const Rational inv = 1 / p.back().coeff;
  for (auto& t : p) t.coeff *= inv;
}

int total_degree(const IPoly& p) {
  int d = 0;
  for (const auto& t : p) d = std::max(d, t.monomial.degree());
  return d;
}

// f[0..flen) - c * q * g[0..glen), both ascending.
IPoly sub_scaled(const IPoly& f, std::size_t flen, const Rational& c, const Monomial& q,
                 const IPoly& g, std::size_t glen) {
  IPoly out;
  out.reserve(flen + glen);
  std::size_t i = 0, j = 0;
  Monomial gm;
  if (j < glen) gm = g[j].monomial * q;
  while (i < flen || j < glen) {
    if (j == glen || (i < flen && f[i].monomial < gm)) {
      out.push_back(f[i++]);
      continue;
    }
    if (i == flen || gm < f[i].monomial) {
      out.push_back({gm, -c * g[j].coeff});
    } else {
      Rational v = f[i].coeff - c * g[j].coeff;
      if (v != 0) out.push_back({gm, std::move(v)});
      ++i;
    }
    if (++j < glen) gm = g[j].monomial * q;
  }
  return out;
}

struct Entry {
  IPoly poly;
  Monomial lm;
  std::uint32_t mask = 0;
  bool active = true;
};

Entry make_entry(IPoly p) {
  Entry e;
  e.lm = p.back().monomial;
  e.mask = e.lm.support_mask();
  e.poly = std::move(p);
  return e;
}

// Full reduction of f by the active entries (first divisor in list order).
IPoly reduce_full(IPoly f, const std::vector<Entry>& basis, std::size_t skip = SIZE_MAX) {
  IPoly rem_desc;
  while (!f.empty()) {
    const Monomial& head = f.back().monomial;
    const std::uint32_t mask = head.support_mask();
    const Entry* div = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const Entry& e = basis[k];
      if (!e.active || k == skip) continue;
      if ((e.mask & ~mask) == 0 && e.lm.divides(head)) {
        div = &e;
        break;
      }
    }
    if (!div) {
      rem_desc.push_back(std::move(f.back()));
      f.pop_back();
      continue;
    }
    const Monomial q = head / div->lm;
    const Rational c = f.back().coeff / div->poly.back().coeff;
    f = sub_scaled(f, f.size() - 1, c, q, div->poly, div->poly.size() - 1);
  }
  std::reverse(rem_desc.begin(), rem_desc.end());
  return rem_desc;
}

IPoly spoly_internal(const Entry& a, const Entry& b) {
  const Monomial l = a.lm.lcm(b.lm);
  const Monomial qa = l / a.lm;
  const Monomial qb = l / b.lm;
  IPoly lhs;
  lhs.reserve(a.poly.size());
  const Rational ca = 1 / a.poly.back().coeff;
  for (std::size_t k = 0; k + 1 < a.poly.size(); ++k)
    lhs.push_back({a.poly[k].monomial * qa, a.poly[k].coeff * ca});
  const Rational cb = 1 / b.poly.back().coeff;
  return sub_scaled(lhs, lhs.size(), cb, qb, b.poly, b.poly.size() - 1);
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int degree;
};

bool pair_before(const Pair& a, const Pair& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.lcm != b.lcm) return a.lcm < b.lcm;
  if (a.i != b.i) return a.i < b.i;
  return a.j < b.j;
}

class Buchberger {
 public:
  Buchberger(const Limits& limits) : limits_(limits) {}

  // Returns false when the ideal turned out to be the unit ideal.
  bool run(std::vector<IPoly> input) {
    std::sort(input.begin(), input.end(),
              [](const IPoly& a, const IPoly& b) { return a.back().monomial < b.back().monomial; });
    for (auto& p : input) {
      if (p.empty()) continue;
      make_monic(p);
      if (p.back().monomial.is_one()) return false;
      insert(std::move(p));
    }
    while (!pairs_.empty()) {
      check_deadline();
      auto it = std::min_element(pairs_.begin(), pairs_.end(), pair_before);
      const Pair p = *it;
      *it = pairs_.back();
      pairs_.pop_back();
      IPoly h = reduce_full(spoly_internal(basis_[p.i], basis_[p.j]), basis_);
      if (h.empty()) continue;
      make_monic(h);
      if (h.back().monomial.is_one()) return false;
      if (total_degree(h) > limits_.max_degree)
        throw ResourceError("Buchberger exceeded the degree cap of " +
                            std::to_string(limits_.max_degree));
      insert(std::move(h));
      if (basis_.size() > limits_.max_polys)
        throw ResourceError("Buchberger exceeded the cap of " + std::to_string(limits_.max_polys) +
                            " basis polynomials");
    }
    return true;
  }

  std::vector<IPoly> reduced_basis() {
    // Input generators enter unreduced, so drop the ones made redundant later.
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!basis_[k].active) continue;
      for (std::size_t o = 0; o < basis_.size(); ++o) {
        if (o == k || !basis_[o].active || !basis_[o].lm.divides(basis_[k].lm)) continue;
        if (basis_[o].lm != basis_[k].lm || o < k) {
          basis_[k].active = false;
          break;
        }
      }
    }
    std::vector<IPoly> out;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!basis_[k].active) continue;
      IPoly tail(basis_[k].poly.begin(), basis_[k].poly.end() - 1);
      IPoly reduced = reduce_full(std::move(tail), basis_, k);
      reduced.push_back(basis_[k].poly.back());
      out.push_back(std::move(reduced));
    }
    std::sort(out.begin(), out.end(),
              [](const IPoly& a, const IPoly& b) { return a.back().monomial < b.back().monomial; });
    return out;
  }

 private:
  void check_deadline() const {
    if (limits_.deadline && std::chrono::steady_clock::now() > *limits_.deadline)
      throw ResourceError("Buchberger exceeded its time budget");
  }

  // Gebauer-Moeller update for the new element h.
  void insert(IPoly p) {
    const std::size_t h = basis_.size();
    basis_.push_back(make_entry(std::move(p)));
    const Monomial lh = basis_[h].lm;

    std::vector<Pair> candidates;
    for (std::size_t g = 0; g < h; ++g) {
      if (!basis_[g].active) continue;
      const Monomial l = basis_[g].lm.lcm(lh);
      candidates.push_back({g, h, l, l.degree()});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& c = candidates[a];
      bool keep = basis_[c.i].lm.coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
          if (candidates[b].lcm.divides(c.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (kept[b].lcm.divides(c.lcm)) keep = false;
      }
      if (keep) kept.push_back(c);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (const Pair& q : pairs_) {
      const bool chain = lh.divides(q.lcm) && basis_[q.i].lm.lcm(lh) != q.lcm &&
                         basis_[q.j].lm.lcm(lh) != q.lcm;
      if (!chain) next.push_back(q);
    }
    for (const Pair& c : kept)
      if (!basis_[c.i].lm.coprime(lh)) next.push_back(c);
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < h; ++g)
      if (basis_[g].active && lh.divides(basis_[g].lm)) basis_[g].active = false;
  }

  const Limits& limits_;
  std::vector<Entry> basis_;
  std::vector<Pair> pairs_;
};

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw PreconditionError("S-polynomial of a zero polynomial");
  const Term& lf = ord.leading_term(f);
  const Term& lg = ord.leading_term(g);
  const Monomial l = lf.monomial.lcm(lg.monomial);
  return f.times(l / lf.monomial, 1 / lf.coeff) - g.times(l / lg.monomial, 1 / lg.coeff);
}

namespace {
std::atomic<std::uint64_t> g_runs{0};
}  // namespace

std::uint64_t buchberger_runs() { return g_runs.load(std::memory_order_relaxed); }

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& ord,
                         const Limits& limits) {
  g_runs.fetch_add(1, std::memory_order_relaxed);
  Engine eng(ord);
  std::vector<IPoly> input;
  for (const auto& g : gens)
    if (!g.is_zero()) input.push_back(eng.to_internal(g));

  GroebnerBasis gb{.generators = {}, .order = ord, .reduced = true};
  Buchberger bb(limits);
  if (!bb.run(std::move(input))) {
    gb.generators.push_back(Polynomial(1));
    return gb;
  }
  for (const auto& p : bb.reduced_basis()) gb.generators.push_back(eng.from_internal(p));
  return gb;
}

namespace {

std::vector<Entry> entries_for(std::span<const Polynomial> gens, const Engine& eng, bool monic) {
  std::vector<Entry> out;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    IPoly p = eng.to_internal(g);
    if (monic) make_monic(p);
    out.push_back(make_entry(std::move(p)));
  }
  return out;
}

}  // namespace

Polynomial reduce_by(const Polynomial& f, std::span<const Polynomial> divisors,
                     const MonomialOrder& ord) {
  Engine eng(ord);
  const auto basis = entries_for(divisors, eng, false);
  return eng.from_internal(reduce_full(eng.to_internal(f), basis));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  return reduce_by(f, gb.generators, gb.order);
}

bool satisfies_buchberger_criterion(std::span<const Polynomial> gens, const MonomialOrder& ord) {
  Engine eng(ord);
  const auto basis = entries_for(gens, eng, true);
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (!reduce_full(spoly_internal(basis[a], basis[b]), basis).empty()) return false;
  return true;
}

bool is_reduced_form(std::span<const Polynomial> gens, const MonomialOrder& ord) {
  Engine eng(ord);
  const auto basis = entries_for(gens, eng, false);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    if (basis[a].poly.back().coeff != 1) return false;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (a == b) continue;
      for (const auto& t : basis[a].poly)
        if (basis[b].lm.divides(t.monomial)) return false;
    }
  }
  return true;
}

}  // namespace vnum::poly
