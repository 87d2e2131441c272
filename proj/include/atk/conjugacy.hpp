// Simultaneous conjugacy by bounded search, and subgroup conjugacy for
// standard parabolic subgroups through the double-centralizer reduction.

#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "atk/centralizers.hpp"
#include "atk/coxeter.hpp"
#include "atk/error.hpp"
#include "atk/garside.hpp"

namespace atk {

enum class SearchStatus { Found, Absent, Inconclusive };

inline std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct SearchBounds {
  int max_factors = 4;  // canonical length of candidate conjugators
  std::size_t budget = kDefaultEnumerationBudget;
};

/// Conjugators searched: canonical forms with delta power 0 or 1 and at most
/// max_factors factors. Delta^2 is central, so this is a transversal of the
/// bounded conjugators modulo Delta^2.
struct Coverage {
  int max_factors = 0;
  std::int64_t delta_lo = 0;
  std::int64_t delta_hi = 1;
  std::size_t candidates = 0;
};

struct ConjugacyResult {
  SearchStatus status = SearchStatus::Inconclusive;
  std::optional<CanonicalForm> conjugator;
  Coverage coverage;
  std::string reason;  // certificate for Absent
};

/// z^-1 x z as a normal form.
inline CanonicalForm conjugate_by(const Garside& a, const CanonicalForm& x, const CanonicalForm& z) {
  return a.conjugate(x, z);
}

/// Searches z with z^-1 x_i z = y_i for all i. Solution sets of the pairs
/// with x_i = y_i are memoized per solver.
class ConjugacySolver {
 public:
  explicit ConjugacySolver(const ArtinGroup& grp, SearchBounds bounds = {}) : grp_(grp), bounds_(bounds) {}

  const SearchBounds& bounds() const { return bounds_; }

  ConjugacyResult solve(const std::vector<std::pair<CanonicalForm, CanonicalForm>>& pairs) const {
    const Garside& a = grp_.ambient();
    ConjugacyResult out;
    out.coverage.max_factors = bounds_.max_factors;
    if (auto why = obstruction(pairs)) {
      out.status = SearchStatus::Absent;
      out.reason = *why;
      return out;
    }
    std::vector<CanonicalForm> fixed;
    std::vector<std::pair<CanonicalForm, CanonicalForm>> moving;
    for (const auto& [x, y] : pairs) {
      if (x == y) {
        if (std::find(fixed.begin(), fixed.end(), x) == fixed.end()) fixed.push_back(x);
      } else {
        moving.emplace_back(x, y);
      }
    }
    std::sort(fixed.begin(), fixed.end());
    const auto& cands = candidates(fixed);
    out.coverage.candidates = candidates_total();
    for (const auto& z : cands) {
      bool ok = true;
      auto zi = a.inverse(z);
      for (const auto& [x, y] : moving) {
        if (a.multiply({zi, x, z}) != y) {
          ok = false;
          break;
        }
      }
      if (ok) {
        out.status = SearchStatus::Found;
        out.conjugator = z;
        return out;
      }
    }
    out.status = SearchStatus::Inconclusive;
    out.reason = "no conjugator within the searched bound";
    return out;
  }

 private:
  // Conjugacy invariants: exponent sums, consistency of repeated x_i, and
  // commutation between pairs.
  std::optional<std::string> obstruction(const std::vector<std::pair<CanonicalForm, CanonicalForm>>& pairs) const {
    const Garside& a = grp_.ambient();
    const auto& p = grp_.presentation();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (abelianization(p, a.word(pairs[i].first)) != abelianization(p, a.word(pairs[i].second)))
        return "pair " + std::to_string(i) + " has different exponent sums";
      for (std::size_t j = 0; j < i; ++j) {
        if ((pairs[i].first == pairs[j].first) != (pairs[i].second == pairs[j].second))
          return "pairs " + std::to_string(j) + " and " + std::to_string(i) + " are inconsistent";
        if (a.commute(pairs[i].first, pairs[j].first) != a.commute(pairs[i].second, pairs[j].second))
          return "pairs " + std::to_string(j) + " and " + std::to_string(i) + " differ in commutation";
      }
    }
    return std::nullopt;
  }

  const std::vector<CanonicalForm>& all_candidates() const {
    std::lock_guard lock(mu_);
    if (!ball_) {
      auto seqs = detail::left_weighted(grp_.ambient(), bounds_.max_factors, bounds_.budget / 2);
      ball_ = detail::with_delta_powers(seqs, 0, 1);
    }
    return *ball_;
  }
  std::size_t candidates_total() const { return all_candidates().size(); }

  const std::vector<CanonicalForm>& candidates(const std::vector<CanonicalForm>& fixed) const {
    const auto& all = all_candidates();
    std::lock_guard lock(mu_);
    auto it = memo_.find(fixed);
    if (it != memo_.end()) return it->second;
    const Garside& a = grp_.ambient();
    std::vector<CanonicalForm> keep;
    for (const auto& z : all)
      if (commutes_with_all(a, z, fixed)) keep.push_back(z);
    return memo_.emplace(fixed, std::move(keep)).first->second;
  }

  const ArtinGroup& grp_;
  SearchBounds bounds_;
  mutable std::mutex mu_;
  mutable std::optional<std::vector<CanonicalForm>> ball_;
  mutable std::map<std::vector<CanonicalForm>, std::vector<CanonicalForm>> memo_;
};

inline ConjugacyResult simultaneous_conjugacy(const ArtinGroup& grp,
                                              const std::vector<std::pair<CanonicalForm, CanonicalForm>>& pairs,
                                              SearchBounds bounds = {}) {
  return ConjugacySolver(grp, bounds).solve(pairs);
}

/// Whether the double-centralizer reduction applies: irreducible ambient of
/// type A, B or D, X connected, and Delta not in DZ(A_X) \ Z(A_S).
inline bool reduction_applicable(const CoxeterPresentation& p, GenSet x) {
  auto comps = classify_spherical(p, p.all());
  if (comps.size() != 1) return false;
  auto fam = comps.front().type.family;
  if (fam != Family::A && fam != Family::B && fam != Family::D) return false;
  if (x.empty() || !is_connected(p, x)) return false;
  if (x == p.all()) return true;
  return !delta_in_dz_condition(p, x);
}

struct SubgroupConjugacyResult {
  SearchStatus status = SearchStatus::Inconclusive;
  std::optional<CanonicalForm> conjugator;  // c in A_X with y = c^-1 x c
  GenSet target;
  bool verified = false;
  Coverage coverage;
  std::string reason;
};

/// Decides whether y = c^-1 x c for some c in A_X. The simultaneous system
/// (x, y) together with (g, g) for g in Upsilon(X) has a solution z exactly
/// when such c exists; z then lies in A_X x Z(A_S) and its A_X part is c.
class SubgroupConjugacySolver {
 public:
  SubgroupConjugacySolver(const ArtinGroup& grp, GenSet x, SearchBounds bounds = {})
      : grp_(grp), x_(x), solver_(grp, bounds) {
    if (!reduction_applicable(grp.presentation(), x))
      fail(ErrorCode::ReductionNotApplicable, "double-centralizer reduction does not apply to this X");
    fixed_ = upsilon_elements(grp, upsilon_gens(grp, x));
    center_ = grp.ambient().normal_form(center_gen(grp, grp.presentation().all()).word);
  }

  SubgroupConjugacyResult solve(const CanonicalForm& x, const CanonicalForm& y) const {
    const Garside& a = grp_.ambient();
    std::vector<std::pair<CanonicalForm, CanonicalForm>> pairs{{x, y}};
    for (const auto& g : fixed_) pairs.emplace_back(g, g);
    auto r = solver_.solve(pairs);
    SubgroupConjugacyResult out;
    out.target = x_;
    out.status = r.status;
    out.coverage = r.coverage;
    out.reason = r.reason;
    if (r.status != SearchStatus::Found) return out;
    auto c = project(*r.conjugator);
    if (a.conjugate(x, c) != y || !a.in_parabolic(c, x_))
      fail(ErrorCode::Internal, "projected conjugator does not verify");
    out.conjugator = c;
    out.verified = true;
    return out;
  }

 private:
  // z = c C^m with C the central generator: find m with z C^-m in A_X.
  CanonicalForm project(const CanonicalForm& z) const {
    const Garside& a = grp_.ambient();
    if (a.in_parabolic(z, x_)) return z;
    auto ci = a.inverse(center_);
    CanonicalForm up = z, down = z;
    const int limit = 2 * (solver_.bounds().max_factors + 2);
    for (int m = 1; m <= limit; ++m) {
      up = a.multiply(up, ci);
      down = a.multiply(down, center_);
      if (a.in_parabolic(up, x_)) return up;
      if (a.in_parabolic(down, x_)) return down;
    }
    fail(ErrorCode::Internal, "conjugator fixing Upsilon(X) is not in A_X x Z(A_S)");
  }

  const ArtinGroup& grp_;
  GenSet x_;
  ConjugacySolver solver_;
  std::vector<CanonicalForm> fixed_;
  CanonicalForm center_;
};

inline SubgroupConjugacyResult subgroup_conjugacy(const ArtinGroup& grp, const CanonicalForm& x,
                                                  const CanonicalForm& y, GenSet target, SearchBounds bounds = {}) {
  return SubgroupConjugacySolver(grp, target, bounds).solve(x, y);
}

}  // namespace atk
