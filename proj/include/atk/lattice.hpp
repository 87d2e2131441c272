// The lattice of simple elements of a spherical Artin-Tits monoid.
//
// Simples are in bijection with the elements of the finite Coxeter group W,
// a simple lifting its reduced words. W is realised as a permutation group
// on its root system: the roots are generated once in floating point from
// the geometric representation, after which every computation is integer
// permutation arithmetic. The permutation action is checked against the
// Coxeter relations and the classified group order before use.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "atk/coxeter.hpp"
#include "atk/error.hpp"
#include "atk/words.hpp"

namespace atk {

inline constexpr std::size_t kDefaultLatticeBudget = 200000;

using SimpleId = std::uint32_t;

class SimpleLattice {
 public:
  /// Builds the lattice for a spherical presentation `p`. Generator indices
  /// of `p` are the local letters 0 .. rank-1.
  explicit SimpleLattice(const CoxeterPresentation& p, std::size_t budget = kDefaultLatticeBudget)
      : rank_(p.rank()) {
    if (!is_spherical(p, p.all())) fail(ErrorCode::NotSpherical, "presentation is not of spherical type");
    auto order = coxeter_group_order(p, p.all());
    if (order > budget)
      fail(ErrorCode::LatticeBudgetExceeded,
           "|W| = " + (order == UINT64_MAX ? std::string("huge") : std::to_string(order)) +
               " exceeds lattice budget " + std::to_string(budget));
    build_roots(p);
    check_relations(p);
    enumerate(budget);
    if (size() != order)
      fail(ErrorCode::Internal, "enumerated " + std::to_string(size()) + " simples, expected " + std::to_string(order));
    finish();
  }

  int rank() const { return rank_; }
  std::size_t size() const { return length_.size(); }
  SimpleId identity() const { return 0; }
  SimpleId delta() const { return delta_; }
  SimpleId generator(int s) const { return gen_[s]; }

  int length(SimpleId w) const { return length_[w]; }
  /// Letters s with w.s shorter than w (s right-divides the simple w).
  std::uint64_t right_descents(SimpleId w) const { return rdes_[w]; }
  /// Letters s with s.w shorter than w (s left-divides the simple w).
  std::uint64_t left_descents(SimpleId w) const { return ldes_[w]; }
  /// Coxeter group products w.s and s.w.
  SimpleId rmul(SimpleId w, int s) const { return rmul_[w * rank_ + s]; }
  SimpleId lmul(SimpleId w, int s) const { return lmul_[w * rank_ + s]; }
  SimpleId inverse(SimpleId w) const { return inv_[w]; }
  /// Delta w Delta^-1.
  SimpleId tau(SimpleId w) const { return tau_[w]; }
  int tau_letter(int s) const { return tau_letter_[s]; }

  /// Product in W of two elements (not the monoid product).
  SimpleId group_product(SimpleId a, SimpleId b) const {
    for (int s : word(b)) a = rmul(a, s);
    return a;
  }

  /// Lexicographically least reduced word (by local letter index).
  std::vector<int> word(SimpleId w) const {
    std::vector<int> out;
    out.reserve(length_[w]);
    while (ldes_[w] != 0) {
      int s = std::countr_zero(ldes_[w]);
      out.push_back(s);
      w = lmul(w, s);
    }
    return out;
  }

  /// Simple represented by a word; nullopt if the word is not reduced.
  std::optional<SimpleId> from_word(const std::vector<int>& letters) const {
    SimpleId w = identity();
    for (int s : letters) {
      if ((rdes_[w] >> s) & 1U) return std::nullopt;
      w = rmul(w, s);
    }
    return w;
  }

  /// Longest element of the parabolic subgroup generated by the local
  /// letters in `mask`.
  SimpleId parabolic_delta(std::uint64_t mask) const {
    SimpleId w = identity();
    while (true) {
      std::uint64_t m = mask & ~rdes_[w];
      if (m == 0) return w;
      w = rmul(w, std::countr_zero(m));
    }
  }

  std::uint64_t support(SimpleId w) const {
    std::uint64_t s = 0;
    for (int l : word(w)) s |= std::uint64_t{1} << l;
    return s;
  }

 private:
  using Perm = std::vector<std::uint16_t>;

  void build_roots(const CoxeterPresentation& p) {
    const int n = rank_;
    std::vector<std::vector<double>> form(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        form[i][j] = i == j ? 1.0 : -std::cos(std::numbers::pi / p.m(i, j));
    auto reflect = [&](int i, const std::vector<double>& v) {
      double b = 0;
      for (int j = 0; j < n; ++j) b += form[i][j] * v[j];
      auto out = v;
      out[i] -= 2 * b;
      return out;
    };
    auto same = [](const std::vector<double>& a, const std::vector<double>& b) {
      for (std::size_t k = 0; k < a.size(); ++k)
        if (std::abs(a[k] - b[k]) > 1e-7) return false;
      return true;
    };
    for (int i = 0; i < n; ++i) {
      std::vector<double> v(n, 0.0);
      v[i] = 1.0;
      roots_.push_back(v);
    }
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      for (int i = 0; i < n; ++i) {
        auto r = reflect(i, roots_[k]);
        bool known = false;
        for (const auto& q : roots_)
          if (same(q, r)) { known = true; break; }
        if (!known) roots_.push_back(r);
      }
      if (roots_.size() > 4096) fail(ErrorCode::Internal, "root system did not close");
    }
    const std::size_t nr = roots_.size();
    positive_.assign(nr, false);
    for (std::size_t k = 0; k < nr; ++k) {
      double sum = 0;
      for (double c : roots_[k]) sum += c;
      positive_[k] = sum > 0;
    }
    gen_perm_.assign(n, Perm(nr));
    for (int i = 0; i < n; ++i)
      for (std::size_t k = 0; k < nr; ++k) {
        auto r = reflect(i, roots_[k]);
        for (std::size_t q = 0; q < nr; ++q)
          if (same(roots_[q], r)) { gen_perm_[i][k] = static_cast<std::uint16_t>(q); break; }
      }
  }

  // The generator permutations must satisfy the Coxeter relations with the
  // exact orders m_ij; together with the order check this certifies the
  // permutation group is W.
  void check_relations(const CoxeterPresentation& p) const {
    const int n = rank_;
    const std::size_t nr = roots_.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Perm cur(nr), prod(nr);
        for (std::size_t k = 0; k < nr; ++k) {
          cur[k] = static_cast<std::uint16_t>(k);
          prod[k] = gen_perm_[i][gen_perm_[j][k]];
        }
        int order = 0;
        do {
          Perm next(nr);
          for (std::size_t k = 0; k < nr; ++k) next[k] = prod[cur[k]];
          cur = std::move(next);
          ++order;
          bool id = true;
          for (std::size_t k = 0; k < nr && id; ++k) id = cur[k] == k;
          if (id) break;
        } while (order <= 1000);
        if (order != p.m(i, j)) fail(ErrorCode::Internal, "root permutation does not satisfy Coxeter relations");
      }
  }

  std::vector<std::uint16_t> key_of(const Perm& w) const {
    std::vector<std::uint16_t> key(rank_);
    for (int i = 0; i < rank_; ++i) key[i] = w[i];  // images of the simple roots
    return key;
  }

  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint16_t>& k) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (auto v : k) h = (h ^ v) * 1099511628211ULL;
      return h;
    }
  };

  void enumerate(std::size_t budget) {
    const std::size_t nr = roots_.size();
    std::unordered_map<std::vector<std::uint16_t>, SimpleId, KeyHash> index;
    std::vector<Perm> perms;
    Perm id(nr);
    for (std::size_t k = 0; k < nr; ++k) id[k] = static_cast<std::uint16_t>(k);
    perms.push_back(id);
    length_.push_back(0);
    index.emplace(key_of(id), 0);
    rmul_.clear();
    for (std::size_t w = 0; w < perms.size(); ++w) {
      for (int s = 0; s < rank_; ++s) {
        Perm ws(nr);
        for (std::size_t k = 0; k < nr; ++k) ws[k] = perms[w][gen_perm_[s][k]];
        auto key = key_of(ws);
        auto it = index.find(key);
        SimpleId target;
        if (it == index.end()) {
          if (perms.size() >= budget) fail(ErrorCode::LatticeBudgetExceeded, "lattice budget exhausted");
          target = static_cast<SimpleId>(perms.size());
          index.emplace(std::move(key), target);
          perms.push_back(std::move(ws));
          length_.push_back(length_[w] + 1);
        } else {
          target = it->second;
        }
        rmul_.push_back(target);
      }
    }
    const std::size_t n = perms.size();
    rdes_.assign(n, 0);
    for (std::size_t w = 0; w < n; ++w)
      for (int s = 0; s < rank_; ++s)
        if (!positive_[perms[w][s]]) rdes_[w] |= std::uint64_t{1} << s;
    lmul_.assign(n * rank_, 0);
    for (std::size_t w = 0; w < n; ++w)
      for (int s = 0; s < rank_; ++s) {
        Perm sw(nr);
        for (std::size_t k = 0; k < nr; ++k) sw[k] = gen_perm_[s][perms[w][k]];
        lmul_[w * rank_ + s] = index.at(key_of(sw));
      }
  }

  void finish() {
    const std::size_t n = size();
    ldes_.assign(n, 0);
    for (std::size_t w = 0; w < n; ++w)
      for (int s = 0; s < rank_; ++s)
        if (length_[lmul(static_cast<SimpleId>(w), s)] < length_[w]) ldes_[w] |= std::uint64_t{1} << s;
    delta_ = 0;
    for (std::size_t w = 0; w < n; ++w)
      if (length_[w] > length_[delta_]) delta_ = static_cast<SimpleId>(w);
    gen_.resize(rank_);
    for (int s = 0; s < rank_; ++s) gen_[s] = rmul(identity(), s);
    inv_.assign(n, 0);
    for (std::size_t w = 0; w < n; ++w) {
      auto wd = word(static_cast<SimpleId>(w));
      SimpleId v = identity();
      for (auto it = wd.rbegin(); it != wd.rend(); ++it) v = rmul(v, *it);
      inv_[w] = v;
    }
    tau_letter_.resize(rank_);
    for (int s = 0; s < rank_; ++s) {
      // Delta s = tau(s) Delta, so tau(s) = w0 s w0 in W.
      SimpleId conj = rmul(delta_, s);
      for (int l : word(delta_)) conj = rmul(conj, l);
      tau_letter_[s] = std::countr_zero(static_cast<std::uint64_t>(ldes_[conj]));
    }
    tau_.assign(n, 0);
    for (std::size_t w = 0; w < n; ++w) {
      SimpleId v = identity();
      for (int l : word(static_cast<SimpleId>(w))) v = rmul(v, tau_letter_[l]);
      tau_[w] = v;
    }
  }

  int rank_ = 0;
  std::vector<std::vector<double>> roots_;
  std::vector<bool> positive_;
  std::vector<Perm> gen_perm_;
  std::vector<int> length_;
  std::vector<std::uint64_t> rdes_, ldes_;
  std::vector<SimpleId> rmul_, lmul_, inv_, tau_, gen_;
  std::vector<int> tau_letter_;
  SimpleId delta_ = 0;
};

}  // namespace atk
