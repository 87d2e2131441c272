// Coxeter presentations, generator subsets and diagram classification.
//
// A presentation is an ordered list of generator names together with a
// symmetric Coxeter matrix. Infinite entries are stored as 0, matching the
// JSON encoding. Subsets of generators are bitsets (rank <= 64).

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "atk/error.hpp"

namespace atk {

inline constexpr int kInfinity = 0;
inline constexpr int kMaxRank = 64;

/// Set of generators of a fixed presentation, stored as a bitset over
/// generator indices. Iteration is in increasing index order.
class GenSet {
 public:
  constexpr GenSet() = default;
  constexpr explicit GenSet(std::uint64_t mask) : mask_(mask) {}

  static constexpr GenSet single(int i) { return GenSet(std::uint64_t{1} << i); }
  static constexpr GenSet first_n(int n) {
    return GenSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  template <typename Range>
  static GenSet of(const Range& indices) {
    GenSet s;
    for (int i : indices) s.insert(i);
    return s;
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }
  constexpr bool contains(int i) const { return (mask_ >> i) & 1U; }
  constexpr void insert(int i) { mask_ |= std::uint64_t{1} << i; }
  constexpr void erase(int i) { mask_ &= ~(std::uint64_t{1} << i); }
  int front() const { return std::countr_zero(mask_); }

  constexpr bool subset_of(GenSet o) const { return (mask_ & ~o.mask_) == 0; }
  constexpr bool intersects(GenSet o) const { return (mask_ & o.mask_) != 0; }

  constexpr GenSet operator|(GenSet o) const { return GenSet(mask_ | o.mask_); }
  constexpr GenSet operator&(GenSet o) const { return GenSet(mask_ & o.mask_); }
  constexpr GenSet operator-(GenSet o) const { return GenSet(mask_ & ~o.mask_); }
  constexpr GenSet& operator|=(GenSet o) { mask_ |= o.mask_; return *this; }
  constexpr GenSet& operator&=(GenSet o) { mask_ &= o.mask_; return *this; }
  constexpr GenSet& operator-=(GenSet o) { mask_ &= ~o.mask_; return *this; }
  constexpr auto operator<=>(const GenSet&) const = default;

  std::vector<int> indices() const {
    std::vector<int> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

 private:
  std::uint64_t mask_ = 0;
};

inline bool valid_generator_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin(), name.end(), [&](char c) { return alpha(c) || digit(c); });
}

class CoxeterPresentation {
 public:
  CoxeterPresentation() = default;

  CoxeterPresentation(std::vector<std::string> generators, std::vector<std::vector<int>> matrix)
      : names_(std::move(generators)), matrix_(std::move(matrix)) {
    validate();
    for (int i = 0; i < rank(); ++i) index_.emplace(names_[i], i);
  }

  int rank() const { return static_cast<int>(names_.size()); }
  GenSet all() const { return GenSet::first_n(rank()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::vector<int>>& matrix() const { return matrix_; }

  /// Coxeter matrix entry; kInfinity (0) encodes m = infinity.
  int m(int i, int j) const { return matrix_[i][j]; }
  bool commute(int i, int j) const { return i == j || matrix_[i][j] == 2; }
  bool adjacent(int i, int j) const { return i != j && matrix_[i][j] != 2; }

  std::optional<int> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int index(std::string_view name) const {
    auto i = find(name);
    if (!i) fail(ErrorCode::Parse, "unknown generator '" + std::string(name) + "'");
    return *i;
  }

  /// Parse a comma separated list of generator names ("s1,s2p").
  GenSet parse_set(std::string_view text) const {
    GenSet out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      auto tok = text.substr(pos, comma - pos);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      if (!tok.empty()) out.insert(index(tok));
      pos = comma + 1;
    }
    return out;
  }

  std::vector<std::string> set_names(GenSet x) const {
    std::vector<std::string> out;
    for (int i : x.indices()) out.push_back(names_[i]);
    return out;
  }

  /// The presentation generated by X, generators listed in index order.
  CoxeterPresentation restrict(GenSet x) const {
    auto idx = x.indices();
    std::vector<std::string> names;
    std::vector<std::vector<int>> mat(idx.size(), std::vector<int>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      names.push_back(names_[idx[a]]);
      for (std::size_t b = 0; b < idx.size(); ++b) mat[a][b] = matrix_[idx[a]][idx[b]];
    }
    return CoxeterPresentation(std::move(names), std::move(mat));
  }

  bool operator==(const CoxeterPresentation& o) const {
    return names_ == o.names_ && matrix_ == o.matrix_;
  }

 private:
  void validate() const {
    const int n = rank();
    if (n > kMaxRank) fail(ErrorCode::InvalidPresentation, "rank above 64 is not supported");
    if (static_cast<int>(matrix_.size()) != n)
      fail(ErrorCode::InvalidPresentation, "matrix side does not match generator count");
    std::unordered_map<std::string, int> seen;
    for (const auto& nm : names_) {
      if (!valid_generator_name(nm))
        fail(ErrorCode::InvalidPresentation, "generator name '" + nm + "' is not a valid token");
      if (!seen.emplace(nm, 0).second)
        fail(ErrorCode::InvalidPresentation, "duplicate generator '" + nm + "'");
    }
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(matrix_[i].size()) != n)
        fail(ErrorCode::InvalidPresentation, "matrix is not square");
      if (matrix_[i][i] != 1) fail(ErrorCode::InvalidPresentation, "diagonal entries must be 1");
      for (int j = 0; j < n; ++j) {
        if (matrix_[i][j] != matrix_[j][i])
          fail(ErrorCode::InvalidPresentation, "matrix is not symmetric");
        if (i != j && matrix_[i][j] != kInfinity && matrix_[i][j] < 2)
          fail(ErrorCode::InvalidPresentation, "off-diagonal entries must be >= 2 or 0 (infinity)");
      }
    }
  }

  std::vector<std::string> names_;
  std::vector<std::vector<int>> matrix_;
  std::unordered_map<std::string, int> index_;
};

// ---------------------------------------------------------------------------
// Subset combinatorics
// ---------------------------------------------------------------------------

/// Connected components of the Coxeter graph restricted to X, ordered by
/// smallest generator index.
inline std::vector<GenSet> components(const CoxeterPresentation& p, GenSet x) {
  std::vector<GenSet> out;
  GenSet left = x;
  while (!left.empty()) {
    GenSet comp = GenSet::single(left.front());
    GenSet frontier = comp;
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.erase(v);
      for (int w : left.indices()) {
        if (!comp.contains(w) && p.adjacent(v, w)) {
          comp.insert(w);
          frontier.insert(w);
        }
      }
    }
    out.push_back(comp);
    left -= comp;
  }
  return out;
}

inline bool is_connected(const CoxeterPresentation& p, GenSet x) {
  return components(p, x).size() == 1;
}

/// X^perp: generators outside X commuting with every element of X.
inline GenSet perp(const CoxeterPresentation& p, GenSet x) {
  GenSet out;
  for (int s : (p.all() - x).indices()) {
    bool ok = true;
    for (int t : x.indices()) ok = ok && p.m(s, t) == 2;
    if (ok) out.insert(s);
  }
  return out;
}

/// Boundary of X: generators outside X adjacent to some element of X.
inline GenSet boundary(const CoxeterPresentation& p, GenSet x) {
  return p.all() - x - perp(p, x);
}

/// Component of X u {t} that contains t.
inline GenSet component_of(const CoxeterPresentation& p, GenSet x, int t) {
  for (GenSet c : components(p, x | GenSet::single(t)))
    if (c.contains(t)) return c;
  return GenSet::single(t);
}

// ---------------------------------------------------------------------------
// Diagram recognition
// ---------------------------------------------------------------------------

enum class Family { A, B, D, E, F, H, I, NotSpherical };

struct SphericalType {
  Family family = Family::NotSpherical;
  int rank = 0;
  int label = 0;  // dihedral label for I2(m)

  bool spherical() const { return family != Family::NotSpherical; }
  bool operator==(const SphericalType&) const = default;

  std::string str() const {
    auto n = std::to_string(rank);
    switch (family) {
      case Family::A: return "A(" + n + ")";
      case Family::B: return "B(" + n + ")";
      case Family::D: return "D(" + n + ")";
      case Family::E: return "E" + n;
      case Family::F: return "F" + n;
      case Family::H: return "H" + n;
      case Family::I: return "I2(" + std::to_string(label) + ")";
      case Family::NotSpherical: return "NotSpherical";
    }
    return "?";
  }

  /// Order of the Coxeter group, saturated at UINT64_MAX.
  std::uint64_t group_order() const {
    auto fact = [](int k) {
      std::uint64_t r = 1;
      for (int i = 2; i <= k; ++i) r *= static_cast<std::uint64_t>(i);
      return r;
    };
    switch (family) {
      case Family::A: return fact(rank + 1);
      case Family::B: return (std::uint64_t{1} << rank) * fact(rank);
      case Family::D: return (std::uint64_t{1} << (rank - 1)) * fact(rank);
      case Family::E:
        return rank == 6 ? 51840ULL : rank == 7 ? 2903040ULL : 696729600ULL;
      case Family::F: return 1152;
      case Family::H: return rank == 3 ? 120 : 14400;
      case Family::I: return 2ULL * static_cast<std::uint64_t>(label);
      case Family::NotSpherical: return UINT64_MAX;
    }
    return UINT64_MAX;
  }
};

/// One connected component with its diagram type. `labelling` lists the
/// component's generators in the standard order of the diagram: for D(n)
/// the order is s2, s2', s3, ..., sn (fork at s3); for E(n) it is s1 (the
/// short arm), then the chain s2 ... sn with the branch point at s4; for
/// B(n), F4, H(n) the chain order starts at the end carrying the label.
struct ComponentType {
  GenSet component;
  SphericalType type;
  std::vector<int> labelling;
};

namespace detail {

// Walk a path starting from an endpoint; assumes the induced graph is a path.
inline std::vector<int> walk_path(const CoxeterPresentation& p, GenSet x, int start) {
  std::vector<int> order{start};
  GenSet seen = GenSet::single(start);
  int cur = start;
  while (true) {
    int next = -1;
    for (int w : x.indices())
      if (!seen.contains(w) && p.adjacent(cur, w)) { next = w; break; }
    if (next < 0) break;
    order.push_back(next);
    seen.insert(next);
    cur = next;
  }
  return order;
}

inline ComponentType classify_connected(const CoxeterPresentation& p, GenSet x) {
  ComponentType out{x, {}, {}};
  auto verts = x.indices();
  const int n = static_cast<int>(verts.size());
  if (n == 1) {
    out.type = {Family::A, 1, 0};
    out.labelling = verts;
    return out;
  }
  int edges = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (p.adjacent(verts[a], verts[b])) {
        if (p.m(verts[a], verts[b]) == kInfinity) return out;
        ++edges;
      }
  if (n == 2) {
    int m = p.m(verts[0], verts[1]);
    out.labelling = verts;
    if (m == 3) out.type = {Family::A, 2, 0};
    else if (m == 4) out.type = {Family::B, 2, 0};
    else out.type = {Family::I, 2, m};
    return out;
  }
  if (edges != n - 1) return out;  // contains a cycle
  auto degree = [&](int v) {
    int d = 0;
    for (int w : verts) d += p.adjacent(v, w) ? 1 : 0;
    return d;
  };
  std::vector<int> branch;
  std::vector<int> leaves;
  for (int v : verts) {
    int d = degree(v);
    if (d > 3) return out;
    if (d == 3) branch.push_back(v);
    if (d == 1) leaves.push_back(v);
  }
  if (branch.size() > 1) return out;

  if (branch.empty()) {
    auto path = walk_path(p, x, leaves.front());
    std::vector<int> labels;
    for (int i = 0; i + 1 < n; ++i) labels.push_back(p.m(path[i], path[i + 1]));
    std::vector<int> odd;
    for (int i = 0; i + 1 < n; ++i)
      if (labels[i] != 3) odd.push_back(i);
    if (odd.empty()) {
      out.type = {Family::A, n, 0};
      out.labelling = path;
      return out;
    }
    if (odd.size() != 1) return out;
    int pos = odd.front();
    int lab = labels[pos];
    bool at_end = pos == 0 || pos == n - 2;
    if (pos == n - 2) std::reverse(path.begin(), path.end());
    if (lab == 4 && at_end) {
      out.type = {Family::B, n, 0};
      out.labelling = path;
    } else if (lab == 4 && n == 4 && pos == 1) {
      out.type = {Family::F, 4, 0};
      out.labelling = path;
    } else if (lab == 5 && at_end && (n == 3 || n == 4)) {
      out.type = {Family::H, n, 0};
      out.labelling = path;
    }
    return out;
  }

  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (p.adjacent(verts[a], verts[b]) && p.m(verts[a], verts[b]) != 3) return out;

  int centre = branch.front();
  // Arms: walk from each neighbour of the centre away from it.
  std::vector<std::vector<int>> arms;
  for (int w : verts) {
    if (!p.adjacent(centre, w)) continue;
    std::vector<int> arm{w};
    GenSet seen = GenSet::single(centre) | GenSet::single(w);
    int cur = w;
    while (true) {
      int next = -1;
      for (int v : verts)
        if (!seen.contains(v) && p.adjacent(cur, v)) { next = v; break; }
      if (next < 0) break;
      arm.push_back(next);
      seen.insert(next);
      cur = next;
    }
    arms.push_back(arm);
  }
  std::stable_sort(arms.begin(), arms.end(), [](const auto& l, const auto& r) {
    if (l.size() != r.size()) return l.size() < r.size();
    return l.back() < r.back();
  });
  const auto a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
  if (a0 != 1) return out;
  if (a1 == 1) {
    out.type = {Family::D, n, 0};
    out.labelling = {arms[0][0], arms[1][0], centre};
    for (int v : arms[2]) out.labelling.push_back(v);
    return out;
  }
  if (a1 == 2 && a2 >= 2 && a2 <= 4) {
    out.type = {Family::E, n, 0};
    out.labelling = {arms[0][0], arms[1][1], arms[1][0], centre};
    for (int v : arms[2]) out.labelling.push_back(v);
    return out;
  }
  return out;
}

}  // namespace detail

/// Diagram type of every connected component of X.
inline std::vector<ComponentType> classify_spherical(const CoxeterPresentation& p, GenSet x) {
  std::vector<ComponentType> out;
  for (GenSet c : components(p, x)) out.push_back(detail::classify_connected(p, c));
  return out;
}

inline bool is_spherical(const CoxeterPresentation& p, GenSet x) {
  for (const auto& c : classify_spherical(p, x))
    if (!c.type.spherical()) return false;
  return true;
}

/// Order of W_X, saturated at UINT64_MAX; UINT64_MAX for non-spherical X.
inline std::uint64_t coxeter_group_order(const CoxeterPresentation& p, GenSet x) {
  std::uint64_t total = 1;
  for (const auto& c : classify_spherical(p, x)) {
    auto o = c.type.group_order();
    if (o == UINT64_MAX || total > UINT64_MAX / o) return UINT64_MAX;
    total *= o;
  }
  return total;
}

struct FamilyFlags {
  bool spherical = false;
  bool fc = false;
  bool two_dimensional = false;
  bool large = false;
  bool irreducible = false;
};

inline constexpr int kDefaultFcRankBound = 12;

inline FamilyFlags classify_family(const CoxeterPresentation& p, int fc_rank_bound = kDefaultFcRankBound) {
  const int n = p.rank();
  if (n > fc_rank_bound)
    fail(ErrorCode::RankBudgetExceeded,
         "FC check enumerates subsets; rank " + std::to_string(n) + " exceeds bound " +
             std::to_string(fc_rank_bound));
  FamilyFlags f;
  f.irreducible = is_connected(p, p.all());
  f.spherical = is_spherical(p, p.all());
  f.large = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.m(i, j) == 2) f.large = false;
  f.two_dimensional = true;
  for (int i = 0; i < n && f.two_dimensional; ++i)
    for (int j = i + 1; j < n && f.two_dimensional; ++j)
      for (int k = j + 1; k < n && f.two_dimensional; ++k) {
        GenSet t = GenSet::single(i) | GenSet::single(j) | GenSet::single(k);
        if (is_spherical(p, t)) f.two_dimensional = false;
      }
  f.fc = true;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit && f.fc; ++mask) {
    GenSet s(mask);
    bool inf_free = true;
    auto idx = s.indices();
    for (std::size_t a = 0; a < idx.size() && inf_free; ++a)
      for (std::size_t b = a + 1; b < idx.size() && inf_free; ++b)
        if (p.m(idx[a], idx[b]) == kInfinity) inf_free = false;
    if (inf_free && !is_spherical(p, s)) f.fc = false;
  }
  return f;
}

/// Split X into the union of its spherical components and the rest.
inline std::pair<GenSet, GenSet> spherical_split(const CoxeterPresentation& p, GenSet x) {
  GenSet sph, asph;
  for (const auto& c : classify_spherical(p, x)) (c.type.spherical() ? sph : asph) |= c.component;
  return {sph, asph};
}

/// True exactly when Delta_S is not central but lies in the double
/// centralizer of A_X: type D(2k+1) with {s2, s2', s3} in X, or type E6
/// with X the five chain vertices.
inline bool delta_in_dz_condition(const CoxeterPresentation& p, GenSet x) {
  auto comps = classify_spherical(p, p.all());
  if (comps.size() != 1) fail(ErrorCode::NotIrreducible, "ambient Coxeter graph is not connected");
  const auto& c = comps.front();
  if (!c.type.spherical()) fail(ErrorCode::NotSpherical, "ambient group is not of spherical type");
  if (!x.subset_of(p.all()) || x == p.all()) fail(ErrorCode::XNotProper, "X must be a proper subset of S");
  if (c.type.family == Family::D && c.type.rank % 2 == 1) {
    GenSet fork = GenSet::single(c.labelling[0]) | GenSet::single(c.labelling[1]) |
                  GenSet::single(c.labelling[2]);
    return fork.subset_of(x);
  }
  if (c.type.family == Family::E && c.type.rank == 6) {
    return x == p.all() - GenSet::single(c.labelling[0]);
  }
  return false;
}

}  // namespace atk
