#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pfr/error.hpp"
#include "pfr/frame.hpp"

namespace pfr {

/// Finite partial order on named elements.
struct FinitePoset {
  std::vector<std::string> names;
  std::vector<std::uint8_t> order;  // n x n, order[a*n+b] ⟺ a ≤ b

  std::size_t size() const { return names.size(); }
  bool leq(Elem a, Elem b) const { return order[a * size() + b] != 0; }
};

/// Builds a poset from a relation (covers or full); checks antisymmetry.
inline FinitePoset make_poset(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& rel) {
  std::unordered_map<std::string, Elem> index;
  for (Elem i = 0; i < names.size(); ++i)
    if (!index.emplace(names[i], i).second)
      throw Error(ErrorKind::DuplicateElement, "element '" + names[i] + "' listed twice", {names[i]});
  const std::size_t n = names.size();
  std::vector<std::uint8_t> order(n * n, 0);
  for (const auto& [lo, hi] : rel) {
    auto a = index.find(lo), b = index.find(hi);
    if (a == index.end() || b == index.end())
      throw Error(ErrorKind::UnknownElement, "relation mentions unknown element", {a == index.end() ? lo : hi});
    order[a->second * n + b->second] = 1;
  }
  order = detail::reflexive_transitive_closure(n, std::move(order));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (order[a * n + b] && order[b * n + a])
        throw Error(ErrorKind::NotAPoset, "cycle through '" + names[a] + "' and '" + names[b] + "'", {names[a], names[b]});
  return {std::move(names), std::move(order)};
}

inline FinitePoset as_poset(const FiniteFrame& F) { return {F.names(), F.tables().leq}; }

/// A finite lattice (not necessarily distributive).
struct FiniteLattice {
  FinitePoset poset;
  std::vector<Elem> meet, join;
  Elem bottom = 0, top = 0;

  std::size_t size() const { return poset.size(); }
  bool leq(Elem a, Elem b) const { return poset.leq(a, b); }
  Elem m(Elem a, Elem b) const { return meet[a * size() + b]; }
  Elem j(Elem a, Elem b) const { return join[a * size() + b]; }
};

/// Lattice structure of a finite poset, if it has all binary meets and joins and bounds.
inline std::optional<FiniteLattice> as_lattice(const FinitePoset& P) {
  const auto n = static_cast<Elem>(P.size());
  if (n == 0) return std::nullopt;
  FiniteLattice L{P, std::vector<Elem>(std::size_t(n) * n), std::vector<Elem>(std::size_t(n) * n), 0, 0};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      std::optional<Elem> glb, lub;
      for (Elem x = 0; x < n; ++x) {
        if (P.leq(x, a) && P.leq(x, b) && (!glb || P.leq(*glb, x))) glb = x;
        if (P.leq(a, x) && P.leq(b, x) && (!lub || P.leq(x, *lub))) lub = x;
      }
      // The candidate found is maximal among lower bounds only if every lower bound is below it.
      for (Elem y = 0; y < n && glb; ++y)
        if (P.leq(y, a) && P.leq(y, b) && !P.leq(y, *glb)) glb.reset();
      for (Elem y = 0; y < n && lub; ++y)
        if (P.leq(a, y) && P.leq(b, y) && !P.leq(*lub, y)) lub.reset();
      if (!glb || !lub) return std::nullopt;
      L.meet[a * n + b] = *glb;
      L.join[a * n + b] = *lub;
    }
  Elem bot = 0, top = 0;
  for (Elem a = 1; a < n; ++a) {
    bot = L.meet[bot * n + a];
    top = L.join[top * n + a];
  }
  L.bottom = bot;
  L.top = top;
  return L;
}

/// Every element is the join of the members of `sub` below it.
inline bool is_join_dense(const std::vector<Elem>& sub, const FiniteLattice& K) {
  for (Elem k = 0; k < K.size(); ++k) {
    Elem acc = K.bottom;
    for (Elem s : sub)
      if (K.leq(s, k)) acc = K.j(acc, s);
    if (acc != k) return false;
  }
  return true;
}

/// Every element is the meet of the members of `sub` above it.
inline bool is_meet_dense(const std::vector<Elem>& sub, const FiniteLattice& K) {
  for (Elem k = 0; k < K.size(); ++k) {
    Elem acc = K.top;
    for (Elem s : sub)
      if (K.leq(k, s)) acc = K.m(acc, s);
    if (acc != k) return false;
  }
  return true;
}

struct Completion {
  FinitePoset source;
  FiniteLattice lattice;
  std::vector<Elem> embed;                // source element -> lattice element
  std::vector<std::uint64_t> cuts;        // lower set of each lattice element
};

/// Completion by cuts. Cuts are the lower sets A^{ul}; over a finite poset
/// these are exactly P and the intersections of principal ideals.
inline Completion macneille(const FinitePoset& P) {
  const std::size_t n = P.size();
  if (n > 63) throw Error(ErrorKind::LimitExceeded, "poset too large for cut enumeration");
  const std::uint64_t all = n == 0 ? 0 : (std::uint64_t(1) << n) - 1;
  std::vector<std::uint64_t> principal(n, 0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t x = 0; x < n; ++x)
      if (P.leq(x, p)) principal[p] |= std::uint64_t(1) << x;

  std::vector<std::uint64_t> cuts{all};
  for (std::size_t i = 0; i < cuts.size(); ++i)
    for (std::uint64_t d : principal) {
      const std::uint64_t c = cuts[i] & d;
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
  std::sort(cuts.begin(), cuts.end(), [](std::uint64_t a, std::uint64_t b) {
    return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
  });

  const std::size_t m = cuts.size();
  Completion out;
  out.source = P;
  out.cuts = cuts;
  FinitePoset K;
  K.order.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) K.order[a * m + b] = (cuts[a] & ~cuts[b]) == 0;
  for (std::size_t p = 0; p < n; ++p)
    out.embed.push_back(static_cast<Elem>(std::find(cuts.begin(), cuts.end(), principal[p]) - cuts.begin()));
  for (std::size_t c = 0; c < m; ++c) {
    auto it = std::find(out.embed.begin(), out.embed.end(), Elem(c));
    if (it != out.embed.end()) {
      K.names.push_back(P.names[it - out.embed.begin()]);
    } else {
      std::string s = "cut{";
      bool first = true;
      for (std::size_t x = 0; x < n; ++x)
        if (cuts[c] >> x & 1) {
          s += (first ? "" : ",") + P.names[x];
          first = false;
        }
      K.names.push_back(s + "}");
    }
  }
  auto lattice = as_lattice(K);
  if (!lattice) throw Error(ErrorKind::NotALattice, "cut system is not a lattice");
  out.lattice = std::move(*lattice);
  if (!is_join_dense(out.embed, out.lattice) || !is_meet_dense(out.embed, out.lattice))
    throw Error(ErrorKind::NotALattice, "principal cuts are not dense");
  return out;
}

/// Removes the bounds of the cut lattice that are not images of P.
inline FinitePoset dedekind_trim(const Completion& c) {
  if (c.source.size() == 0) throw Error(ErrorKind::NotDirected, "the empty poset is not directed");
  const FiniteLattice& K = c.lattice;
  auto principal = [&](Elem e) { return std::find(c.embed.begin(), c.embed.end(), e) != c.embed.end(); };
  std::vector<Elem> keep;
  for (Elem e = 0; e < K.size(); ++e)
    if ((e != K.bottom || principal(e)) && (e != K.top || principal(e))) keep.push_back(e);
  FinitePoset out;
  const std::size_t m = keep.size();
  out.order.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    out.names.push_back(K.poset.names[keep[a]]);
    for (std::size_t b = 0; b < m; ++b) out.order[a * m + b] = K.leq(keep[a], keep[b]);
  }
  return out;
}

/// Order embeddings P → K (injective, order preserving and reflecting).
inline void for_each_order_embedding(const FinitePoset& P, const FiniteLattice& K,
                                     const std::function<void(const std::vector<Elem>&)>& fn) {
  const std::size_t n = P.size();
  std::vector<Elem> e(n);
  std::vector<std::uint8_t> used(K.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      fn(e);
      return;
    }
    for (Elem k = 0; k < K.size(); ++k) {
      if (used[k]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = P.leq(Elem(j), Elem(i)) == K.leq(e[j], k) && P.leq(Elem(i), Elem(j)) == K.leq(k, e[j]);
      if (!ok) continue;
      e[i] = k;
      used[k] = 1;
      rec(i + 1);
      used[k] = 0;
    }
  };
  rec(0);
}

/// Whether an isomorphism K1 → K2 commutes with the two embeddings of P.
/// For dense embeddings the only candidate is k ↦ ⋁{e2(p) : e1(p) ≤ k}.
inline bool isomorphic_over(const FiniteLattice& K1, const std::vector<Elem>& e1, const FiniteLattice& K2,
                            const std::vector<Elem>& e2) {
  if (K1.size() != K2.size()) return false;
  std::vector<Elem> phi(K1.size());
  for (Elem k = 0; k < K1.size(); ++k) {
    Elem acc = K2.bottom;
    for (std::size_t p = 0; p < e1.size(); ++p)
      if (K1.leq(e1[p], k)) acc = K2.j(acc, e2[p]);
    phi[k] = acc;
  }
  for (std::size_t p = 0; p < e1.size(); ++p)
    if (phi[e1[p]] != e2[p]) return false;
  for (Elem a = 0; a < K1.size(); ++a)
    for (Elem b = 0; b < K1.size(); ++b)
      if (K1.leq(a, b) != K2.leq(phi[a], phi[b])) return false;
  return true;
}

}  // namespace pfr
