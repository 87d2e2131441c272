// Garside structure of a spherical type Artin-Tits group: left-greedy
// normal forms, divisibility, gcd/lcm, Charney splittings and parabolic
// stripping. A Garside object lives on a generator subset X of a
// presentation; all words it accepts and returns use the presentation's
// global generator indices.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "atk/coxeter.hpp"
#include "atk/error.hpp"
#include "atk/lattice.hpp"
#include "atk/words.hpp"

namespace atk {

/// Delta^delta_power * factors[0] * ... with factors left-weighted, none
/// equal to 1 or Delta. Equal elements have equal forms.
struct CanonicalForm {
  std::int64_t delta_power = 0;
  std::vector<SimpleId> factors;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;

  /// Positive elements are exactly those with non-negative infimum.
  bool positive() const { return delta_power >= 0; }
  bool is_identity() const { return delta_power == 0 && factors.empty(); }
  std::int64_t sup() const { return delta_power + static_cast<std::int64_t>(factors.size()); }
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(f.delta_power);
    for (auto s : f.factors) h = h * 1000003ULL ^ s;
    return h;
  }
};

class Garside {
 public:
  Garside(const CoxeterPresentation& p, GenSet x, std::size_t budget = kDefaultLatticeBudget)
      : presentation_(p), gens_(checked(p, x)), lattice_(p.restrict(x), budget) {
    local_.assign(p.rank(), -1);
    for (int g : x.indices()) {
      local_[g] = static_cast<int>(global_.size());
      global_.push_back(g);
    }
  }

  const CoxeterPresentation& presentation() const { return presentation_; }
  GenSet generators() const { return gens_; }
  const SimpleLattice& lattice() const { return lattice_; }

  int to_local(int g) const {
    int l = g >= 0 && g < static_cast<int>(local_.size()) ? local_[g] : -1;
    if (l < 0) fail(ErrorCode::Parse, "generator outside the parabolic subgroup");
    return l;
  }
  int to_global(int l) const { return global_[l]; }
  std::uint64_t local_mask(GenSet y) const {
    std::uint64_t m = 0;
    for (int g : (y & gens_).indices()) m |= std::uint64_t{1} << local_[g];
    return m;
  }
  GenSet global_set(std::uint64_t local) const {
    GenSet out;
    for (int l = 0; l < lattice_.rank(); ++l)
      if ((local >> l) & 1U) out.insert(global_[l]);
    return out;
  }

  // -- simples ------------------------------------------------------------

  PositiveWord simple_word(SimpleId f) const {
    PositiveWord w;
    for (int l : lattice_.word(f)) w.letters.push_back(global_[l]);
    return w;
  }
  GenSet simple_support(SimpleId f) const { return global_set(lattice_.support(f)); }
  std::optional<SimpleId> simple_of(const PositiveWord& w) const {
    std::vector<int> loc;
    for (int g : w.letters) loc.push_back(to_local(g));
    return lattice_.from_word(loc);
  }
  /// Delta_Y for Y a subset of X, as a simple.
  SimpleId parabolic_delta(GenSet y) const {
    if (!y.subset_of(gens_)) fail(ErrorCode::Parse, "subset outside the parabolic subgroup");
    return lattice_.parabolic_delta(local_mask(y));
  }
  PositiveWord delta_word() const { return simple_word(lattice_.delta()); }

  /// tau as a map on global generators (entries outside X are -1).
  std::vector<int> tau_map() const {
    std::vector<int> out(presentation_.rank(), -1);
    for (int l = 0; l < lattice_.rank(); ++l) out[global_[l]] = global_[lattice_.tau_letter(l)];
    return out;
  }

  // -- elements -----------------------------------------------------------

  CanonicalForm one() const { return {}; }
  CanonicalForm delta(std::int64_t k = 1) const { return {k, {}}; }
  CanonicalForm simple(SimpleId f) const {
    CanonicalForm out;
    mul_simple(out, f);
    return out;
  }
  CanonicalForm letter(int g, int sign = 1) const {
    CanonicalForm out;
    if (sign > 0) mul_simple(out, lattice_.generator(to_local(g)));
    else mul_inverse_simple(out, lattice_.generator(to_local(g)));
    return out;
  }

  CanonicalForm normal_form(const GroupWord& w) const {
    CanonicalForm out;
    for (const auto& l : w.letters) {
      SimpleId s = lattice_.generator(to_local(l.gen));
      if (l.sign > 0) mul_simple(out, s);
      else mul_inverse_simple(out, s);
    }
    return out;
  }
  CanonicalForm normal_form(const PositiveWord& w) const { return normal_form(GroupWord(w)); }
  bool equals(const GroupWord& u, const GroupWord& v) const { return normal_form(u) == normal_form(v); }

  CanonicalForm multiply(CanonicalForm a, const CanonicalForm& b) const {
    mul_delta(a, b.delta_power);
    for (auto f : b.factors) mul_simple(a, f);
    return a;
  }
  CanonicalForm multiply(std::initializer_list<CanonicalForm> xs) const {
    CanonicalForm out;
    for (const auto& x : xs) out = multiply(std::move(out), x);
    return out;
  }
  CanonicalForm inverse(const CanonicalForm& a) const {
    CanonicalForm out;
    for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it) mul_inverse_simple(out, *it);
    mul_delta(out, -a.delta_power);
    return out;
  }
  CanonicalForm power(const CanonicalForm& a, std::int64_t k) const {
    CanonicalForm base = k < 0 ? inverse(a) : a;
    CanonicalForm out;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = multiply(std::move(out), base);
    return out;
  }
  /// z^-1 x z.
  CanonicalForm conjugate(const CanonicalForm& x, const CanonicalForm& z) const {
    return multiply(multiply(inverse(z), x), z);
  }
  bool commute(const CanonicalForm& a, const CanonicalForm& b) const {
    return multiply(a, b) == multiply(b, a);
  }
  /// tau^k(g) = Delta^k g Delta^-k.
  CanonicalForm apply_tau(CanonicalForm g, std::int64_t k = 1) const {
    if (k % 2 != 0)
      for (auto& f : g.factors) f = lattice_.tau(f);
    return g;
  }

  GroupWord word(const CanonicalForm& a) const {
    GroupWord out;
    auto dw = delta_word();
    for (std::int64_t i = 0; i < (a.delta_power < 0 ? -a.delta_power : a.delta_power); ++i) {
      if (a.delta_power > 0)
        for (int g : dw.letters) out.letters.push_back({g, 1});
      else
        for (auto it = dw.letters.rbegin(); it != dw.letters.rend(); ++it) out.letters.push_back({*it, -1});
    }
    for (auto f : a.factors)
      for (int g : simple_word(f).letters) out.letters.push_back({g, 1});
    return out;
  }
  PositiveWord positive_word(const CanonicalForm& a) const {
    require_positive(a);
    PositiveWord out;
    for (const auto& l : word(a).letters) out.letters.push_back(l.gen);
    return out;
  }
  /// Support of a positive element.
  GenSet support(const CanonicalForm& a) const {
    require_positive(a);
    GenSet out = a.delta_power > 0 ? gens_ : GenSet{};
    for (auto f : a.factors) out |= simple_support(f);
    return out;
  }
  /// Word length of a positive element.
  std::int64_t length(const CanonicalForm& a) const {
    require_positive(a);
    std::int64_t n = a.delta_power * lattice_.length(lattice_.delta());
    for (auto f : a.factors) n += lattice_.length(f);
    return n;
  }

  // -- divisibility and lattice operations on positive elements -----------

  /// If a left-divides b, the quotient a^-1 b.
  std::optional<CanonicalForm> left_quotient(const CanonicalForm& a, const CanonicalForm& b) const {
    auto q = multiply(inverse(a), b);
    if (!q.positive()) return std::nullopt;
    return q;
  }
  /// If t right-divides u, the quotient u t^-1.
  std::optional<CanonicalForm> right_quotient(const CanonicalForm& u, const CanonicalForm& t) const {
    auto q = multiply(u, inverse(t));
    if (!q.positive()) return std::nullopt;
    return q;
  }
  bool left_divides(const CanonicalForm& a, const CanonicalForm& b) const { return left_quotient(a, b).has_value(); }
  bool right_divides(const CanonicalForm& u, const CanonicalForm& t) const { return right_quotient(u, t).has_value(); }

  /// Image under the anti-automorphism reversing words.
  CanonicalForm reverse(const CanonicalForm& a) const {
    require_positive(a);
    CanonicalForm out;
    for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it) mul_simple(out, lattice_.inverse(*it));
    mul_delta(out, a.delta_power);
    return out;
  }

  CanonicalForm left_gcd(CanonicalForm a, CanonicalForm b) const {
    require_positive(a);
    require_positive(b);
    std::int64_t m = std::min(a.delta_power, b.delta_power);
    a.delta_power -= m;
    b.delta_power -= m;
    CanonicalForm out = delta(m);
    while (true) {
      SimpleId g = meet(head(a), head(b));
      if (g == lattice_.identity()) break;
      mul_simple(out, g);
      a = left_divide_simple(a, g);
      b = left_divide_simple(b, g);
    }
    return out;
  }
  CanonicalForm right_gcd(const CanonicalForm& a, const CanonicalForm& b) const {
    return reverse(left_gcd(reverse(a), reverse(b)));
  }
  /// Least common multiple for left divisibility.
  CanonicalForm left_lcm(const CanonicalForm& a, const CanonicalForm& b) const {
    require_positive(a);
    require_positive(b);
    std::int64_t k = std::max(a.sup(), b.sup());
    auto ak = multiply(inverse(a), delta(k));
    auto bk = multiply(inverse(b), delta(k));
    return multiply(delta(k), inverse(right_gcd(ak, bk)));
  }
  /// Least common multiple for right divisibility.
  CanonicalForm right_lcm(const CanonicalForm& a, const CanonicalForm& b) const {
    return reverse(left_lcm(reverse(a), reverse(b)));
  }

  // -- splittings ---------------------------------------------------------

  /// g = a^-1 b with a, b positive and left-coprime.
  std::pair<CanonicalForm, CanonicalForm> charney_left_split(const CanonicalForm& g) const {
    if (g.positive()) return {one(), g};
    CanonicalForm a0 = delta(-g.delta_power);
    CanonicalForm b0{0, g.factors};
    auto d = left_gcd(a0, b0);
    auto di = inverse(d);
    return {multiply(di, a0), multiply(di, b0)};
  }
  /// g = a b^-1 with a, b positive and right-coprime.
  std::pair<CanonicalForm, CanonicalForm> charney_right_split(const CanonicalForm& g) const {
    if (g.positive()) return {g, one()};
    std::int64_t r = -g.delta_power;
    CanonicalForm a0 = apply_tau(CanonicalForm{0, g.factors}, r);
    CanonicalForm b0 = delta(r);
    auto d = right_gcd(a0, b0);
    auto di = inverse(d);
    return {multiply(a0, di), multiply(b0, di)};
  }
  /// g = a Delta^-n, a positive, n >= 0 minimal.
  std::pair<CanonicalForm, std::int64_t> delta_power_form(const CanonicalForm& g) const {
    if (g.positive()) return {g, 0};
    std::int64_t n = -g.delta_power;
    return {apply_tau(CanonicalForm{0, g.factors}, n), n};
  }

  // -- parabolic subsets Y of X --------------------------------------------

  /// Maximal left divisor of the positive element h lying in A_Y^+, and the
  /// quotient.
  std::pair<CanonicalForm, CanonicalForm> max_left_divisor_in(CanonicalForm h, GenSet y) const {
    SimpleId dy = parabolic_delta(y & gens_);
    CanonicalForm acc;
    while (true) {
      SimpleId g = meet(head(h), dy);
      if (g == lattice_.identity()) break;
      mul_simple(acc, g);
      h = left_divide_simple(h, g);
    }
    return {acc, h};
  }
  /// Maximal right divisor of the positive element h lying in A_Y^+, and
  /// the quotient (returned first).
  std::pair<CanonicalForm, CanonicalForm> max_right_divisor_in(const CanonicalForm& h, GenSet y) const {
    auto [c, rest] = max_left_divisor_in(reverse(h), y);
    return {reverse(rest), reverse(c)};
  }

  struct Strip {
    CanonicalForm a, b, c;
  };
  /// h = a b c with a maximal in A_Y^+ on the left, then c maximal on the
  /// right; b is Y-reduced-Y.
  Strip strip(const CanonicalForm& h, GenSet y) const {
    auto [a, rest] = max_left_divisor_in(h, y);
    auto [b, c] = max_right_divisor_in(rest, y);
    return {a, b, c};
  }
  bool is_reduced_left(const CanonicalForm& h, GenSet y) const {
    return max_left_divisor_in(h, y).first.is_identity();
  }
  bool is_reduced_right(const CanonicalForm& h, GenSet y) const {
    return max_right_divisor_in(h, y).second.is_identity();
  }

  /// Membership of g in the standard parabolic subgroup A_Y.
  bool in_parabolic(const CanonicalForm& g, GenSet y) const {
    auto [a, b] = charney_left_split(g);
    return support(a).subset_of(y) && support(b).subset_of(y);
  }

 private:
  static GenSet checked(const CoxeterPresentation& p, GenSet x) {
    if (!x.subset_of(p.all())) fail(ErrorCode::Parse, "generator subset outside the presentation");
    return x;
  }

  static void require_positive(const CanonicalForm& a) {
    if (!a.positive()) fail(ErrorCode::Internal, "operation needs a positive element");
  }

  SimpleId head(const CanonicalForm& a) const {
    if (a.delta_power > 0) return lattice_.delta();
    if (a.delta_power == 0 && !a.factors.empty()) return a.factors.front();
    return lattice_.identity();
  }

  /// Meet of two simples for left divisibility.
  SimpleId meet(SimpleId x, SimpleId y) const {
    SimpleId g = lattice_.identity();
    while (true) {
      std::uint64_t c = lattice_.left_descents(x) & lattice_.left_descents(y);
      if (c == 0) return g;
      int s = std::countr_zero(c);
      g = lattice_.rmul(g, s);
      x = lattice_.lmul(x, s);
      y = lattice_.lmul(y, s);
    }
  }

  CanonicalForm left_divide_simple(const CanonicalForm& a, SimpleId g) const {
    CanonicalForm gi;
    mul_inverse_simple(gi, g);
    return multiply(std::move(gi), a);
  }

  void mul_delta(CanonicalForm& a, std::int64_t k) const {
    a.delta_power += k;
    if (k % 2 != 0)
      for (auto& f : a.factors) f = lattice_.tau(f);
  }

  // Moves letters from the front of b to the back of a until the pair is
  // left-weighted. Returns whether anything moved.
  bool normalize_pair(SimpleId& a, SimpleId& b) const {
    bool changed = false;
    while (true) {
      std::uint64_t m = lattice_.left_descents(b) & ~lattice_.right_descents(a);
      if (m == 0) return changed;
      int s = std::countr_zero(m);
      a = lattice_.rmul(a, s);
      b = lattice_.lmul(b, s);
      changed = true;
    }
  }

  void mul_simple(CanonicalForm& a, SimpleId f) const {
    if (f == lattice_.identity()) return;
    if (f == lattice_.delta()) {
      mul_delta(a, 1);
      return;
    }
    auto& fs = a.factors;
    fs.push_back(f);
    for (std::size_t i = fs.size() - 1; i > 0; --i)
      if (!normalize_pair(fs[i - 1], fs[i])) break;
    std::size_t lead = 0;
    while (lead < fs.size() && fs[lead] == lattice_.delta()) ++lead;
    if (lead > 0) {
      fs.erase(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(lead));
      a.delta_power += static_cast<std::int64_t>(lead);
    }
    while (!fs.empty() && fs.back() == lattice_.identity()) fs.pop_back();
  }

  // f^-1 = (f^-1 Delta) Delta^-1 = Delta^-1 tau(f^-1 Delta).
  void mul_inverse_simple(CanonicalForm& a, SimpleId f) const {
    SimpleId c = lattice_.group_product(lattice_.inverse(f), lattice_.delta());
    mul_delta(a, -1);
    mul_simple(a, lattice_.tau(c));
  }

  CoxeterPresentation presentation_;
  GenSet gens_;
  SimpleLattice lattice_;
  std::vector<int> local_;
  std::vector<int> global_;
};

// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultClosureBudget = 14;

/// Word problem in the positive monoid of any Artin-Tits presentation by
/// exhaustive application of the braid relations. Relations preserve length,
/// so the closure of u is finite.
inline bool monoid_equals_general(const CoxeterPresentation& p, const PositiveWord& u, const PositiveWord& v,
                                  std::size_t budget = kDefaultClosureBudget) {
  if (u.size() > budget || v.size() > budget)
    fail(ErrorCode::ClosureBudgetExceeded,
         "word length " + std::to_string(std::max(u.size(), v.size())) + " exceeds closure budget " +
             std::to_string(budget));
  if (u.size() != v.size() || support(u) != support(v)) return false;
  auto encode = [](const PositiveWord& w) {
    std::string s;
    for (int g : w.letters) s.push_back(static_cast<char>(g));
    return s;
  };
  struct Rel {
    std::string lhs, rhs;
  };
  std::vector<Rel> rels;
  for (int s = 0; s < p.rank(); ++s)
    for (int t = 0; t < p.rank(); ++t) {
      if (s == t || p.m(s, t) == kInfinity) continue;
      Rel r;
      for (int k = 0; k < p.m(s, t); ++k) {
        r.lhs.push_back(static_cast<char>(k % 2 == 0 ? s : t));
        r.rhs.push_back(static_cast<char>(k % 2 == 0 ? t : s));
      }
      rels.push_back(std::move(r));
    }
  const std::string target = encode(v);
  std::unordered_set<std::string> seen{encode(u)};
  std::vector<std::string> frontier{encode(u)};
  constexpr std::size_t kMaxClosure = 4'000'000;
  while (!frontier.empty()) {
    std::string w = std::move(frontier.back());
    frontier.pop_back();
    if (w == target) return true;
    for (const auto& r : rels) {
      if (r.lhs.size() > w.size()) continue;
      for (std::size_t i = 0; i + r.lhs.size() <= w.size(); ++i) {
        if (w.compare(i, r.lhs.size(), r.lhs) != 0) continue;
        std::string next = w;
        next.replace(i, r.rhs.size(), r.rhs);
        if (seen.insert(next).second) {
          if (seen.size() > kMaxClosure) fail(ErrorCode::ClosureBudgetExceeded, "rewriting closure too large");
          frontier.push_back(std::move(next));
        }
      }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------

/// A presentation together with memoized Garside structures of its
/// spherical standard parabolic subgroups. Each structure is built at most
/// once; concurrent callers share it.
class ArtinGroup {
 public:
  explicit ArtinGroup(CoxeterPresentation p, std::size_t lattice_budget = kDefaultLatticeBudget)
      : p_(std::move(p)), budget_(lattice_budget) {}

  ArtinGroup(const ArtinGroup&) = delete;
  ArtinGroup& operator=(const ArtinGroup&) = delete;

  const CoxeterPresentation& presentation() const { return p_; }
  std::size_t lattice_budget() const { return budget_; }

  const Garside& garside(GenSet x) const {
    std::shared_ptr<Entry> e;
    {
      std::lock_guard lock(mu_);
      auto& slot = cache_[x.mask()];
      if (!slot) slot = std::make_shared<Entry>();
      e = slot;
    }
    std::lock_guard lock(e->mu);
    if (!e->g) e->g = std::make_unique<const Garside>(p_, x, budget_);
    return *e->g;
  }
  const Garside& ambient() const { return garside(p_.all()); }

 private:
  struct Entry {
    std::mutex mu;
    std::unique_ptr<const Garside> g;
  };

  CoxeterPresentation p_;
  std::size_t budget_;
  mutable std::mutex mu_;
  mutable std::map<std::uint64_t, std::shared_ptr<Entry>> cache_;
};

}  // namespace atk
