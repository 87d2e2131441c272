// Positive ribbons: elements g with Y g = g X for generator subsets X, Y.

#pragma once

#include <optional>
#include <vector>

#include "atk/coxeter.hpp"
#include "atk/error.hpp"
#include "atk/garside.hpp"
#include "atk/words.hpp"

namespace atk {

/// The elementary ribbon d_{X,t}, a positive target-ribbon-source.
struct RibbonMove {
  GenSet source;
  int letter = 0;
  PositiveWord word;
  GenSet target;
  int moved_letter = 0;

  bool operator==(const RibbonMove&) const = default;
};

namespace detail {

/// If f is a single generator, that generator.
inline std::optional<int> as_generator(const Garside& g, const CanonicalForm& f) {
  // In a rank one structure the generator is Delta itself.
  if (!f.positive() || g.length(f) != 1) return std::nullopt;
  return g.positive_word(f).letters.front();
}

}  // namespace detail

/// d_{X,t} = Delta_{X(t)} Delta_{X(t)-t}^-1, or Delta_{X(t)} when t is in X.
/// Only the component X(t) of X u {t} containing t needs to be spherical,
/// so this also works inside non-spherical ambient groups.
inline RibbonMove elementary_ribbon(const ArtinGroup& grp, GenSet x, int t) {
  const auto& p = grp.presentation();
  if (t < 0 || t >= p.rank()) fail(ErrorCode::Parse, "letter outside the presentation");
  GenSet xt = component_of(p, x, t);
  if (!is_spherical(p, xt)) fail(ErrorCode::NotSpherical, "X(t) is not of spherical type; d_{X,t} is undefined");
  const Garside& g = grp.garside(xt);
  CanonicalForm d = g.delta();
  if (!x.contains(t)) d = g.multiply(d, g.inverse(g.simple(g.parabolic_delta(xt - GenSet::single(t)))));

  RibbonMove mv;
  mv.source = x;
  mv.letter = t;
  mv.word = g.positive_word(d);
  auto di = g.inverse(d);
  for (int s : x.indices()) {
    if (!xt.contains(s)) {
      mv.target.insert(s);
      continue;
    }
    auto y = detail::as_generator(g, g.multiply({d, g.letter(s), di}));
    if (!y) fail(ErrorCode::Internal, "conjugate of a source letter is not a generator");
    mv.target.insert(*y);
  }
  if (x.contains(t)) {
    mv.moved_letter = g.tau_map()[t];
  } else {
    GenSet moved = (x | GenSet::single(t)) - mv.target;
    if (moved.size() != 1) fail(ErrorCode::Internal, "ribbon target does not miss exactly one letter");
    mv.moved_letter = moved.front();
  }
  return mv;
}

/// The unique Y with g X g^-1 = Y, if g is a positive ribbon-X.
inline std::optional<GenSet> is_positive_ribbon(const ArtinGroup& grp, const CanonicalForm& g, GenSet x) {
  const Garside& a = grp.ambient();
  if (!g.positive()) return std::nullopt;
  auto gi = a.inverse(g);
  GenSet y;
  for (int s : x.indices()) {
    auto c = detail::as_generator(a, a.multiply({g, a.letter(s), gi}));
    if (!c) return std::nullopt;
    y.insert(*c);
  }
  return y;
}

/// Writes the positive ribbon-X g as d_n ... d_1 with d_1 having source X.
/// Moves are peeled from the right: if g is divisible on the right by t,
/// it is divisible on the right by d_{X,t}. The list is ordered d_1 first.
inline std::vector<RibbonMove> ribbon_factorization(const ArtinGroup& grp, const CanonicalForm& g, GenSet x) {
  const Garside& a = grp.ambient();
  if (!is_positive_ribbon(grp, g, x)) fail(ErrorCode::NotARibbon, "element is not a positive ribbon of X");
  std::vector<RibbonMove> out;
  CanonicalForm u = g;
  GenSet cur = x;
  while (!u.is_identity()) {
    int t = -1;
    for (int s : a.generators().indices())
      if (a.right_divides(u, a.letter(s))) {
        t = s;
        break;
      }
    if (t < 0) fail(ErrorCode::Internal, "non-trivial positive element without a right divisor");
    auto mv = elementary_ribbon(grp, cur, t);
    auto q = a.right_quotient(u, a.normal_form(mv.word));
    if (!q) fail(ErrorCode::Internal, "ribbon is divisible by t but not by d_{X,t}");
    u = *q;
    cur = mv.target;
    out.push_back(std::move(mv));
  }
  return out;
}

/// Product d_n ... d_1 of a factorization.
inline CanonicalForm ribbon_product(const ArtinGroup& grp, const std::vector<RibbonMove>& moves) {
  const Garside& a = grp.ambient();
  CanonicalForm out;
  for (const auto& mv : moves) out = a.multiply(a.normal_form(mv.word), out);
  return out;
}

struct LetterSplit {
  CanonicalForm u1, u2;
  int s1 = 0;
};

/// For positive u and a generator s: u = u1 u2 where the Charney split of
/// u^-1 s u is (u2, s1 u2), and s u1 = u1 s1.
inline LetterSplit conj_letter_split(const ArtinGroup& grp, const CanonicalForm& u, int s) {
  const Garside& a = grp.ambient();
  if (!u.positive()) fail(ErrorCode::Parse, "conj_letter_split needs a positive element");
  auto [u2, v1] = a.charney_left_split(a.conjugate(a.letter(s), u));
  LetterSplit out;
  out.u2 = u2;
  out.u1 = a.multiply(u, a.inverse(u2));
  auto s1 = detail::as_generator(a, a.multiply(v1, a.inverse(u2)));
  if (!s1 || !out.u1.positive()) fail(ErrorCode::Internal, "letter split did not produce a generator");
  out.s1 = *s1;
  return out;
}

/// Delta^n Delta_X^-n, a positive element for X a proper subset.
inline CanonicalForm prp53_witness(const ArtinGroup& grp, GenSet x, int n) {
  const Garside& a = grp.ambient();
  if (!x.subset_of(a.generators()) || x == a.generators()) fail(ErrorCode::XNotProper, "X must be a proper subset of S");
  if (n < 1) fail(ErrorCode::Parse, "n must be positive");
  return a.multiply(a.delta(n), a.power(a.simple(a.parabolic_delta(x)), -n));
}

}  // namespace atk
