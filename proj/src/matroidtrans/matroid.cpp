#include "vnum/matroid.hpp"

#include <algorithm>
#include <climits>
#include <functional>

#include "vnum/errors.hpp"

namespace vnum::matroid {

using poly::Polynomial;

RankTwoMatroid::RankTwoMatroid(int n, VertexSet loops, std::vector<VertexSet> classes)
    : n_(n), loops_(loops), classes_(std::move(classes)) {
  VertexSet seen = loops_;
  for (VertexSet c : classes_) {
    if (c.intersects(seen)) throw PreconditionError("matroid: loops and classes overlap");
    seen = seen | c;
  }
  if (seen != VertexSet::range(n_)) throw PreconditionError("matroid: loops and classes must cover 1..n");
}

bool RankTwoMatroid::dependent(VertexSet b) const {
  if (b.intersects(loops_)) return true;
  if (b.size() >= 3) return true;
  return std::any_of(classes_.begin(), classes_.end(),
                     [b](VertexSet c) { return (b & c).size() >= 2; });
}

namespace {

void require_min_prime(const Graph& g, VertexSet s, const char* op) {
  if (!graph::is_connected(g)) throw PreconditionError(std::string(op) + ": graph is not connected");
  if (s.empty()) return;
  if (!s.subset_of(g.vertices()) || s == g.vertices() || !graph::is_minimal_kcut(g, s).minimal)
    throw PreconditionError(std::string(op) + ": " + graph::to_string(s) + " is not in min(G)");
}

}  // namespace

RankTwoMatroid matroid_of_cut(const Graph& g, VertexSet s) {
  require_min_prime(g, s, "matroid_of_cut");
  return RankTwoMatroid(g.n(), s, graph::components_within(g, g.vertices() - s));
}

std::vector<VertexSet> small_dependent_diff(const RankTwoMatroid& m1, const RankTwoMatroid& m2) {
  if (m1.n() != m2.n()) throw PreconditionError("small_dependent_diff: ground sets differ");
  std::vector<VertexSet> out;
  for (int i = 1; i <= m1.n(); ++i) {
    const auto single = VertexSet::of({i});
    if (m1.dependent(single) && !m2.dependent(single)) out.push_back(single);
    for (int j = i + 1; j <= m1.n(); ++j) {
      const auto pair = VertexSet::of({i, j});
      if (m1.dependent(pair) && !m2.dependent(pair)) out.push_back(pair);
    }
  }
  std::sort(out.begin(), out.end(), graph::lex_less);
  return out;
}

TransversalFamily delta_family(const Graph& g, VertexSet s) {
  require_min_prime(g, s, "delta_family");
  const RankTwoMatroid base = matroid_of_cut(g, s);
  TransversalFamily f{s, {}};
  for (const auto& cut : graph::enumerate_min_cuts(g)) {
    if (cut.s == s) continue;
    f.members.push_back({cut.s, small_dependent_diff(matroid_of_cut(g, cut.s), base)});
  }
  return f;
}

int Transversal::weight() const {
  int w = 0;
  for (VertexSet e : elements) w += e.size();
  return w;
}

std::vector<int> Transversal::singles() const {
  std::vector<int> out;
  for (VertexSet e : elements)
    if (e.size() == 1) out.push_back(e.min());
  return out;
}

std::vector<VertexSet> Transversal::pairs() const {
  std::vector<VertexSet> out;
  for (VertexSet e : elements)
    if (e.size() == 2) out.push_back(e);
  return out;
}

bool Transversal::hits(const TransversalFamily& f) const {
  return std::all_of(f.members.begin(), f.members.end(), [&](const FamilyMember& m) {
    return std::any_of(m.elements.begin(), m.elements.end(), [&](VertexSet e) {
      return std::find(elements.begin(), elements.end(), e) != elements.end();
    });
  });
}

bool lex_less(const Transversal& a, const Transversal& b) {
  return std::lexicographical_compare(a.elements.begin(), a.elements.end(), b.elements.begin(),
                                      b.elements.end(), graph::lex_less);
}

namespace {

// Family re-indexed over the union of its elements.
struct Indexed {
  std::vector<VertexSet> universe;            // sorted lexicographically
  std::vector<std::vector<int>> members;      // element indices
  std::vector<std::vector<int>> containing;   // element -> member indices
  bool has_empty_member = false;
};

Indexed index_family(const TransversalFamily& f) {
  Indexed ix;
  for (const auto& m : f.members)
    for (VertexSet e : m.elements) ix.universe.push_back(e);
  std::sort(ix.universe.begin(), ix.universe.end(), graph::lex_less);
  ix.universe.erase(std::unique(ix.universe.begin(), ix.universe.end()), ix.universe.end());
  ix.containing.resize(ix.universe.size());
  for (const auto& m : f.members) {
    if (m.elements.empty()) ix.has_empty_member = true;
    std::vector<int> ids;
    for (VertexSet e : m.elements) {
      const auto it = std::lower_bound(ix.universe.begin(), ix.universe.end(), e, graph::lex_less);
      ids.push_back(static_cast<int>(it - ix.universe.begin()));
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (int id : ids) ix.containing[id].push_back(static_cast<int>(ix.members.size()));
    ix.members.push_back(std::move(ids));
  }
  return ix;
}

Transversal to_transversal(const Indexed& ix, std::vector<int> chosen) {
  std::sort(chosen.begin(), chosen.end());
  Transversal t;
  for (int id : chosen) t.elements.push_back(ix.universe[id]);
  return t;
}

class HittingSetSearch {
 public:
  explicit HittingSetSearch(const Indexed& ix)
      : ix_(ix), cover_(ix.members.size(), 0), forbidden_(ix.universe.size(), 0) {}

  std::optional<WeightedTransversal> solve() {
    if (ix_.has_empty_member) return std::nullopt;
    recurse(0);
    return best_;
  }

 private:
  int cost(int id) const { return ix_.universe[id].size(); }

  int lower_bound() const {
    std::vector<char> used(ix_.universe.size(), 0);
    int lb = 0;
    for (std::size_t m = 0; m < ix_.members.size(); ++m) {
      if (cover_[m]) continue;
      bool disjoint = true;
      int cheapest = INT_MAX;
      for (int id : ix_.members[m]) {
        if (forbidden_[id]) continue;
        if (used[id]) disjoint = false;
        cheapest = std::min(cheapest, cost(id));
      }
      if (cheapest == INT_MAX) return INT_MAX / 2;  // member can no longer be hit
      if (!disjoint) continue;
      for (int id : ix_.members[m]) used[id] = 1;
      lb += cheapest;
    }
    return lb;
  }

  void recurse(int spent) {
    int pick = -1;
    std::size_t pick_size = SIZE_MAX;
    for (std::size_t m = 0; m < ix_.members.size(); ++m) {
      if (cover_[m]) continue;
      std::size_t avail = 0;
      for (int id : ix_.members[m]) avail += forbidden_[id] ? 0 : 1;
      if (avail < pick_size) {
        pick_size = avail;
        pick = static_cast<int>(m);
      }
    }
    if (pick < 0) {
      WeightedTransversal cand{spent, to_transversal(ix_, chosen_)};
      if (!best_ || spent < best_->weight ||
          (spent == best_->weight && lex_less(cand.witness, best_->witness)))
        best_ = cand;
      return;
    }
    if (pick_size == 0) return;
    if (best_ && spent + lower_bound() > best_->weight) return;

    // Branch on the picked member's elements, most-covering first.
    std::vector<int> order;
    for (int id : ix_.members[pick])
      if (!forbidden_[id]) order.push_back(id);
    auto coverage = [&](int id) {
      int c = 0;
      for (int m : ix_.containing[id]) c += cover_[m] ? 0 : 1;
      return c;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return coverage(a) > coverage(b); });

    std::vector<int> excluded;
    for (int id : order) {
      chosen_.push_back(id);
      for (int m : ix_.containing[id]) ++cover_[m];
      recurse(spent + cost(id));
      for (int m : ix_.containing[id]) --cover_[m];
      chosen_.pop_back();
      forbidden_[id] = 1;
      excluded.push_back(id);
    }
    for (int id : excluded) forbidden_[id] = 0;
  }

  const Indexed& ix_;
  std::vector<int> cover_;
  std::vector<char> forbidden_;
  std::vector<int> chosen_;
  std::optional<WeightedTransversal> best_;
};

}  // namespace

std::optional<WeightedTransversal> min_transversal_weight(const TransversalFamily& f) {
  const Indexed ix = index_family(f);
  return HittingSetSearch(ix).solve();
}

std::optional<WeightedTransversal> min_transversal_weight_brute(const TransversalFamily& f) {
  const Indexed ix = index_family(f);
  if (ix.has_empty_member) return std::nullopt;
  const std::size_t u = ix.universe.size();
  if (u > 20) throw PreconditionError("brute-force transversal search limited to 20 elements");
  std::optional<WeightedTransversal> best;
  for (std::uint32_t mask = 0; mask < (1u << u); ++mask) {
    bool ok = true;
    for (const auto& m : ix.members) {
      ok = std::any_of(m.begin(), m.end(), [mask](int id) { return (mask >> id) & 1u; });
      if (!ok) break;
    }
    if (!ok) continue;
    std::vector<int> chosen;
    int w = 0;
    for (std::size_t id = 0; id < u; ++id)
      if ((mask >> id) & 1u) {
        chosen.push_back(static_cast<int>(id));
        w += ix.universe[id].size();
      }
    WeightedTransversal cand{w, to_transversal(ix, chosen)};
    if (!best || w < best->weight || (w == best->weight && lex_less(cand.witness, best->witness)))
      best = cand;
  }
  return best;
}

std::vector<Transversal> minimal_transversals(const TransversalFamily& f) {
  const Indexed ix = index_family(f);
  std::vector<Transversal> out;
  if (ix.has_empty_member) return out;

  std::vector<int> cover(ix.members.size(), 0);
  std::vector<char> forbidden(ix.universe.size(), 0);
  std::vector<int> chosen;

  // Every chosen element must keep a member that only it hits.
  auto all_have_private = [&] {
    for (int id : chosen) {
      const bool priv = std::any_of(ix.containing[id].begin(), ix.containing[id].end(),
                                    [&](int m) { return cover[m] == 1; });
      if (!priv) return false;
    }
    return true;
  };

  std::function<void()> rec = [&] {
    if (!all_have_private()) return;
    int pick = -1;
    for (std::size_t m = 0; m < ix.members.size(); ++m)
      if (!cover[m]) {
        pick = static_cast<int>(m);
        break;
      }
    if (pick < 0) {
      out.push_back(to_transversal(ix, chosen));
      return;
    }
    std::vector<int> excluded;
    for (int id : ix.members[pick]) {
      if (forbidden[id]) continue;
      chosen.push_back(id);
      for (int m : ix.containing[id]) ++cover[m];
      rec();
      for (int m : ix.containing[id]) --cover[m];
      chosen.pop_back();
      forbidden[id] = 1;
      excluded.push_back(id);
    }
    for (int id : excluded) forbidden[id] = 0;
  };
  rec();
  std::sort(out.begin(), out.end(),
            [](const Transversal& a, const Transversal& b) { return lex_less(a, b); });
  return out;
}

namespace {

void push_unique(std::vector<Polynomial>& out, Polynomial p) {
  if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
}

}  // namespace

std::vector<Polynomial> transversal_generators(const Transversal& a) {
  Polynomial pair_product(1);
  for (VertexSet e : a.pairs()) pair_product *= poly::minor(e.min(), e.max());
  const auto singles = a.singles();
  std::vector<Polynomial> out;
  for (const auto& m : poly::bipartition_monomials(singles)) out.push_back(pair_product.times(m));
  return out;
}

std::vector<Polynomial> transversal_ideal_generic(const Graph& g, VertexSet s) {
  // Every transversal contains a minimal one whose generators divide its own,
  // so the minimal transversals generate the same ideal.
  std::vector<Polynomial> out;
  for (const auto& t : minimal_transversals(delta_family(g, s)))
    for (auto& p : transversal_generators(t)) push_unique(out, std::move(p));
  return out;
}

std::vector<Polynomial> concise_cut_generators(const Graph& g, VertexSet s, bool minimal_only) {
  const auto members = graph::pair_dominating_sets(g, s, minimal_only);
  const auto comps = graph::components_within(g, g.vertices() - s);
  std::vector<Polynomial> out;
  for (VertexSet a : members) {
    for (int i : a & comps[0]) {
      for (int j : a & comps[1]) {
        VertexSet rest = a;
        rest.erase(i).erase(j);
        const Polynomial f = poly::minor(std::min(i, j), std::max(i, j));
        for (const auto& m : poly::bipartition_monomials(rest.to_vector()))
          push_unique(out, f.times(m));
      }
    }
  }
  return out;
}

}  // namespace vnum::matroid
