// Centralizers, quasi-centralizers and double centralizers of standard
// parabolic subgroups, with finite ball oracles used to check them.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "atk/coxeter.hpp"
#include "atk/error.hpp"
#include "atk/garside.hpp"
#include "atk/ribbons.hpp"
#include "atk/words.hpp"

namespace atk {

inline constexpr std::size_t kDefaultEnumerationBudget = 5'000'000;

/// Subsets Y with x <= Y <= universe, in increasing mask order.
inline std::vector<GenSet> supersets(GenSet x, GenSet universe) {
  std::vector<GenSet> out;
  const std::uint64_t free = (universe - x).mask();
  std::uint64_t sub = 0;
  do {
    out.push_back(x | GenSet(sub));
    sub = (sub - free) & free;
  } while (sub != 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Centers
// ---------------------------------------------------------------------------

struct CenterGen {
  GenSet set;
  PositiveWord word;  // Delta_S^exponent
  int exponent = 1;
};

/// Generator Delta_S^e of Z(A_S) for S irreducible spherical, e = 1 iff
/// tau is trivial.
inline CenterGen center_gen(const ArtinGroup& grp, GenSet s) {
  const auto& p = grp.presentation();
  if (!is_spherical(p, s)) fail(ErrorCode::NotSpherical, "S is not of spherical type");
  if (components(p, s).size() != 1) fail(ErrorCode::NotIrreducible, "S is not irreducible");
  const Garside& g = grp.garside(s);
  auto tau = g.tau_map();
  bool trivial = true;
  for (int t : s.indices()) trivial = trivial && tau[t] == t;
  CenterGen out;
  out.set = s;
  out.exponent = trivial ? 1 : 2;
  out.word = g.positive_word(g.delta(out.exponent));
  return out;
}

/// Delta_Y^e as an element of the spherical ambient group.
inline CanonicalForm delta_power_of(const Garside& a, GenSet y, std::int64_t e = 1) {
  return a.power(a.simple(a.parabolic_delta(y)), e);
}

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

inline bool centralizes(const Garside& a, const CanonicalForm& g, GenSet x) {
  for (int s : x.indices())
    if (!a.commute(g, a.letter(s))) return false;
  return true;
}

/// g^-1 A_X g = A_X.
inline bool normalizes(const Garside& a, const CanonicalForm& g, GenSet x) {
  auto gi = a.inverse(g);
  for (int s : x.indices()) {
    auto l = a.letter(s);
    if (!a.in_parabolic(a.multiply({gi, l, g}), x)) return false;
    if (!a.in_parabolic(a.multiply({g, l, gi}), x)) return false;
  }
  return true;
}

/// g^-1 X g = X as sets of generators.
inline bool in_quasi_centralizer(const Garside& a, const CanonicalForm& g, GenSet x) {
  auto gi = a.inverse(g);
  GenSet img;
  for (int s : x.indices()) {
    auto c = detail::as_generator(a, a.multiply({gi, a.letter(s), g}));
    if (!c) return false;
    img.insert(*c);
  }
  return img == x;
}

/// g commutes with every element of `zs`.
inline bool commutes_with_all(const Garside& a, const CanonicalForm& g, const std::vector<CanonicalForm>& zs) {
  for (const auto& z : zs)
    if (!a.commute(g, z)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Upsilon(X): generators of Z_{A_S}(A_X) in types A, B, D
// ---------------------------------------------------------------------------

struct UpsilonSet {
  GenSet singles;
  std::vector<GenSet> delta_gens;
  std::vector<std::pair<GenSet, GenSet>> pair_gens;
};

inline UpsilonSet upsilon_gens(const ArtinGroup& grp, GenSet x) {
  const auto& p = grp.presentation();
  auto comps = classify_spherical(p, p.all());
  if (comps.size() != 1) fail(ErrorCode::UnsupportedType, "ambient group is not irreducible");
  auto fam = comps.front().type.family;
  if (fam != Family::A && fam != Family::B && fam != Family::D)
    fail(ErrorCode::UnsupportedType, "generating set is only available in types A, B and D");
  if (x.empty() || !is_connected(p, x)) fail(ErrorCode::XNotConnected, "X must be non-empty and connected");

  const Garside& a = grp.ambient();
  UpsilonSet out;
  out.singles = perp(p, x);
  std::vector<GenSet> lonely;
  std::vector<CanonicalForm> seen;
  for (GenSet y : supersets(x, p.all())) {
    auto d = delta_power_of(a, y);
    if (centralizes(a, d, x)) {
      out.delta_gens.push_back(y);
      seen.push_back(d);
    } else {
      lonely.push_back(y);
    }
  }
  for (GenSet y : lonely)
    for (GenSet y2 : lonely) {
      auto d = a.multiply(delta_power_of(a, y), delta_power_of(a, y2));
      if (!centralizes(a, d, x) || std::find(seen.begin(), seen.end(), d) != seen.end()) continue;
      out.pair_gens.emplace_back(y, y2);
      seen.push_back(d);
    }
  return out;
}

/// The elements listed by an UpsilonSet, in listing order.
inline std::vector<CanonicalForm> upsilon_elements(const ArtinGroup& grp, const UpsilonSet& u) {
  const Garside& a = grp.ambient();
  std::vector<CanonicalForm> out;
  for (int s : u.singles.indices()) out.push_back(a.letter(s));
  for (GenSet y : u.delta_gens) out.push_back(delta_power_of(a, y));
  for (auto [y, y2] : u.pair_gens) out.push_back(a.multiply(delta_power_of(a, y), delta_power_of(a, y2)));
  return out;
}

// ---------------------------------------------------------------------------
// Double centralizers
// ---------------------------------------------------------------------------

enum class DZTag { SphericalProduct, CentralizerOfPerp, RecurseIntoT, JustAX };

inline std::string_view to_string(DZTag t) {
  switch (t) {
    case DZTag::SphericalProduct: return "SphericalProduct";
    case DZTag::CentralizerOfPerp: return "CentralizerOfPerp";
    case DZTag::RecurseIntoT: return "RecurseIntoT";
    case DZTag::JustAX: return "JustAX";
  }
  return "?";
}

struct CyclicFactor {
  GenSet set;
  int exponent = 1;  // the factor is generated by Delta_set^exponent
  bool quasi = false;  // QZ(A_set) rather than Z(A_set)
  bool operator==(const CyclicFactor&) const = default;
};

struct DZDescription {
  GenSet parabolic;
  std::vector<CyclicFactor> cyclic_factors;
  DZTag symbolic = DZTag::SphericalProduct;
  std::vector<GroupWord> generators;
  bool exact = true;
  std::optional<GenSet> t;     // the subset T, for non-spherical ambient groups
  std::optional<GenSet> perp;  // X^perp, for CentralizerOfPerp
};

/// DZ_{A_S}(A_X) = A_X x QZ(A_{S_I}) x Z(A_{S_J}) for S spherical, the
/// components S_i with Delta_{S_i} in DZ but not central forming S_I.
inline DZDescription double_centralizer_spherical(const ArtinGroup& grp, GenSet s, GenSet x) {
  const auto& p = grp.presentation();
  if (!x.subset_of(s)) fail(ErrorCode::XNotProper, "X must be a subset of S");
  if (!is_spherical(p, s)) fail(ErrorCode::NotSpherical, "S is not of spherical type");
  DZDescription out;
  out.parabolic = x;
  for (int g : x.indices()) out.generators.push_back(GroupWord(PositiveWord{{g}}));
  for (GenSet si : components(p, s)) {
    GenSet xi = x & si;
    if (xi == si) continue;
    auto sub = p.restrict(si);
    GenSet local;
    auto idx = si.indices();
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (xi.contains(idx[k])) local.insert(static_cast<int>(k));
    CyclicFactor f;
    f.set = si;
    if (delta_in_dz_condition(sub, local)) {
      f.quasi = true;
      f.exponent = 1;
    } else {
      f.exponent = center_gen(grp, si).exponent;
    }
    const Garside& g = grp.garside(si);
    out.generators.push_back(g.word(g.delta(f.exponent)));
    out.cyclic_factors.push_back(f);
  }
  return out;
}

/// Whether g lies in the group described by a SphericalProduct description,
/// searching exponents of the cyclic factors in [-kmax, kmax].
inline bool in_described_group(const ArtinGroup& grp, const DZDescription& d, const CanonicalForm& g, int kmax) {
  const Garside& a = grp.ambient();
  std::vector<CanonicalForm> gens;
  for (const auto& f : d.cyclic_factors) gens.push_back(delta_power_of(a, f.set, f.exponent));
  std::function<bool(std::size_t, const CanonicalForm&)> rec = [&](std::size_t i, const CanonicalForm& h) {
    if (i == gens.size()) return a.in_parabolic(h, d.parabolic);
    auto gi = a.inverse(gens[i]);
    CanonicalForm up = h, down = h;
    if (rec(i + 1, h)) return true;
    for (int k = 1; k <= kmax; ++k) {
      up = a.multiply(up, gi);
      down = a.multiply(down, gens[i]);
      if (rec(i + 1, up) || rec(i + 1, down)) return true;
    }
    return false;
  };
  return rec(0, g);
}

// ---------------------------------------------------------------------------
// Normalizer factorization
// ---------------------------------------------------------------------------

struct QzAxFactor {
  CanonicalForm r;  // r X = X r
  CanonicalForm x;  // x in A_X
};

/// g = r x with r in QZ(A_X) and x in A_X, for g normalizing A_X.
inline QzAxFactor qz_ax_factor(const ArtinGroup& grp, const CanonicalForm& g, GenSet x) {
  const Garside& a = grp.ambient();
  if (!normalizes(a, g, x)) fail(ErrorCode::NotInNormalizer, "element does not normalize A_X");
  if (a.in_parabolic(g, x)) return {a.one(), g};
  if (in_quasi_centralizer(a, g, x)) return {g, a.one()};
  std::int64_t m = g.delta_power < 0 ? (-g.delta_power + 1) / 2 : 0;
  auto h = a.multiply(a.delta(2 * m), g);
  auto st = a.strip(h, x);
  auto y = is_positive_ribbon(grp, st.b, x);
  if (!y || *y != x) fail(ErrorCode::Internal, "X-reduced part of a normalizing element is not an X-ribbon-X");
  QzAxFactor out;
  out.r = a.multiply(a.delta(-2 * m), st.b);
  out.x = a.multiply({a.inverse(st.b), st.a, st.b, st.c});
  if (!a.in_parabolic(out.x, x) || a.multiply(out.r, out.x) != g)
    fail(ErrorCode::Internal, "normalizer factorization failed to reconstruct");
  return out;
}

// ---------------------------------------------------------------------------
// Non-spherical ambient groups
// ---------------------------------------------------------------------------

struct TResult {
  GenSet t;
  bool exact = false;
  bool assumes_property = false;  // ambient is FC, large or 2-dimensional
};

namespace detail {

/// Union of X, the spherical supersets of X inside `universe`, the letters
/// of universe commuting with X, and the supports of elementary ribbons in
/// the ribbon-graph component of X inside `universe`.
inline GenSet ribbon_closure(const ArtinGroup& grp, GenSet x, GenSet universe) {
  const auto& p = grp.presentation();
  GenSet t = x | (perp(p, x) & universe);
  for (GenSet y : supersets(x, universe))
    if (is_spherical(p, y)) t |= y;
  std::set<GenSet> seen{x};
  std::vector<GenSet> todo{x};
  while (!todo.empty()) {
    GenSet z = todo.back();
    todo.pop_back();
    for (int s : universe.indices()) {
      GenSet zs = component_of(p, z, s);
      if (!is_spherical(p, zs)) continue;
      auto mv = elementary_ribbon(grp, z, s);
      t |= support(mv.word);
      if (seen.insert(mv.target).second) todo.push_back(mv.target);
    }
  }
  return t;
}

}  // namespace detail

/// Upper approximation of the smallest standard parabolic subgroup A_T
/// containing Z_{A_S}(A_X). Exact when X has no spherical component.
inline TResult smallest_parabolic_T(const ArtinGroup& grp, GenSet x) {
  const auto& p = grp.presentation();
  TResult out;
  if (p.rank() <= kDefaultFcRankBound) {
    auto f = classify_family(p);
    out.assumes_property = f.fc || f.large || f.two_dimensional;
  }
  auto [xs, xas] = spherical_split(p, x);
  if (xs.empty()) {
    out.t = perp(p, x);
    out.exact = true;
    return out;
  }
  GenSet universe = xas.empty() ? p.all() : perp(p, xas);
  out.t = detail::ribbon_closure(grp, xs, universe);
  out.exact = false;
  return out;
}

/// Symbolic double centralizer for an irreducible non-spherical ambient
/// group with property (*) (FC, large or 2-dimensional).
inline DZDescription double_centralizer_general(const ArtinGroup& grp, GenSet x,
                                                std::optional<GenSet> t_override = std::nullopt) {
  const auto& p = grp.presentation();
  if (p.rank() > kDefaultFcRankBound)
    fail(ErrorCode::NotApplicable, "rank too large to establish the ambient family");
  auto f = classify_family(p);
  if (f.spherical) fail(ErrorCode::NotApplicable, "ambient group is spherical; use the spherical description");
  if (!f.irreducible) fail(ErrorCode::NotApplicable, "ambient group is not irreducible");
  if (!(f.fc || f.large || f.two_dimensional))
    fail(ErrorCode::NotApplicable, "ambient group is not FC, large or 2-dimensional");
  auto [xs, xas] = spherical_split(p, x);
  DZDescription out;
  out.parabolic = x;
  if (xs.empty()) {
    out.symbolic = DZTag::CentralizerOfPerp;
    out.perp = perp(p, x);
    out.exact = true;
    return out;
  }
  if (!xas.empty())
    fail(ErrorCode::NotApplicable, "X has both spherical and non-spherical components");
  GenSet t;
  if (t_override) {
    if (!x.subset_of(*t_override)) fail(ErrorCode::Parse, "T must contain X");
    t = *t_override;
    out.exact = true;
  } else {
    auto tr = smallest_parabolic_T(grp, x);
    t = tr.t;
    out.exact = tr.exact;
  }
  out.t = t;
  if (t != x && is_spherical(p, t)) {
    auto inner = double_centralizer_spherical(grp, t, x);
    out.cyclic_factors = inner.cyclic_factors;
    out.generators = inner.generators;
    out.symbolic = DZTag::RecurseIntoT;
    return out;
  }
  out.symbolic = DZTag::JustAX;
  for (int g : x.indices()) out.generators.push_back(GroupWord(PositiveWord{{g}}));
  return out;
}

// ---------------------------------------------------------------------------
// Ball oracle
// ---------------------------------------------------------------------------

struct BallBounds {
  int radius = 2;
  std::int64_t delta_lo = -2;
  std::int64_t delta_hi = 2;
  std::size_t budget = kDefaultEnumerationBudget;
};

/// Number of (delta power, simple sequence) pairs the bounds allow before
/// the left-weighted filter, saturating.
inline std::size_t ball_sequence_bound(const Garside& a, const BallBounds& b) {
  const std::size_t n = a.lattice().size() >= 2 ? a.lattice().size() - 2 : 0;
  std::size_t total = 0, layer = 1;
  for (int k = 0; k <= b.radius; ++k) {
    total += layer;
    if (n != 0 && layer > SIZE_MAX / n) return SIZE_MAX;
    layer *= n;
  }
  auto width = static_cast<std::size_t>(std::max<std::int64_t>(0, b.delta_hi - b.delta_lo + 1));
  if (width != 0 && total > SIZE_MAX / width) return SIZE_MAX;
  return total * width;
}

namespace detail {

/// Left-weighted sequences of proper simples of length at most `radius`,
/// failing once more than `cap` have been produced.
inline std::vector<std::vector<SimpleId>> left_weighted(const Garside& a, int radius, std::size_t cap) {
  const auto& l = a.lattice();
  std::vector<SimpleId> proper;
  for (SimpleId f = 0; f < l.size(); ++f)
    if (f != l.identity() && f != l.delta()) proper.push_back(f);
  std::vector<std::vector<SimpleId>> seqs{{}};
  std::size_t begin = 0;
  for (int k = 1; k <= radius; ++k) {
    std::size_t end = seqs.size();
    for (std::size_t i = begin; i < end; ++i)
      for (SimpleId f : proper) {
        if (!seqs[i].empty() && (l.left_descents(f) & ~l.right_descents(seqs[i].back())) != 0) continue;
        if (seqs.size() >= cap)
          fail(ErrorCode::EnumerationBudgetExceeded,
               "more than " + std::to_string(cap) + " left-weighted sequences of length " + std::to_string(radius));
        auto next = seqs[i];
        next.push_back(f);
        seqs.push_back(std::move(next));
      }
    begin = end;
  }
  return seqs;
}

inline std::vector<CanonicalForm> with_delta_powers(const std::vector<std::vector<SimpleId>>& seqs, std::int64_t lo,
                                                    std::int64_t hi) {
  std::vector<CanonicalForm> out;
  out.reserve(seqs.size() * static_cast<std::size_t>(std::max<std::int64_t>(0, hi - lo + 1)));
  for (std::int64_t d = lo; d <= hi; ++d)
    for (const auto& s : seqs) out.push_back(CanonicalForm{d, s});
  return out;
}

}  // namespace detail

/// Every canonical form with delta power in [lo, hi] and at most `radius`
/// factors, without duplicates.
inline std::vector<CanonicalForm> ball(const Garside& a, const BallBounds& b) {
  auto bound = ball_sequence_bound(a, b);
  if (bound > b.budget)
    fail(ErrorCode::EnumerationBudgetExceeded,
         "ball needs " + (bound == SIZE_MAX ? std::string("too many") : std::to_string(bound)) +
             " candidates, budget is " + std::to_string(b.budget));
  return detail::with_delta_powers(detail::left_weighted(a, b.radius, SIZE_MAX), b.delta_lo, b.delta_hi);
}

}  // namespace atk
