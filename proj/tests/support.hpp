// Shared helpers for the test suites: presentation loading and small
// independent oracles.

#pragma once

#include <cstdlib>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "atk/atk.hpp"

namespace atk::test {

inline CoxeterPresentation load(const std::string& name) {
  return load_presentation(std::string(ATK_PRESENTATIONS_DIR) + "/" + name + ".json");
}

/// One ArtinGroup per presentation name, shared across tests in a binary.
inline const ArtinGroup& group(const std::string& name) {
  static std::map<std::string, std::unique_ptr<ArtinGroup>> cache;
  auto& slot = cache[name];
  if (!slot) slot = std::make_unique<ArtinGroup>(load(name));
  return *slot;
}

inline GenSet set(const CoxeterPresentation& p, const std::string& text) { return p.parse_set(text); }

inline GroupWord random_word(std::mt19937& rng, int rank, int len, bool positive = false) {
  std::uniform_int_distribution<int> gen(0, rank - 1), sign(0, 1);
  GroupWord w;
  for (int i = 0; i < len; ++i) w.letters.push_back({gen(rng), positive || sign(rng) ? 1 : -1});
  return w;
}

inline PositiveWord random_positive(std::mt19937& rng, int rank, int len, GenSet allowed = GenSet(~0ULL)) {
  auto letters = (allowed & GenSet::first_n(rank)).indices();
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  PositiveWord w;
  for (int i = 0; i < len; ++i) w.letters.push_back(letters[pick(rng)]);
  return w;
}

/// Proper subsets of S.
inline std::vector<GenSet> proper_subsets(const CoxeterPresentation& p) {
  std::vector<GenSet> out;
  for (std::uint64_t m = 0; m + 1 < (std::uint64_t{1} << p.rank()); ++m) out.push_back(GenSet(m));
  return out;
}

/// Every element of word length at most `len`, deduplicated by normal form.
inline std::vector<CanonicalForm> word_ball(const Garside& a, int len) {
  std::set<CanonicalForm> seen{a.one()};
  std::vector<CanonicalForm> layer{a.one()}, out{a.one()};
  for (int k = 0; k < len; ++k) {
    std::vector<CanonicalForm> next;
    for (const auto& g : layer)
      for (int s : a.generators().indices())
        for (int e : {1, -1}) {
          auto h = a.multiply(g, a.letter(s, e));
          if (seen.insert(h).second) {
            next.push_back(h);
            out.push_back(h);
          }
        }
    layer = std::move(next);
  }
  return out;
}

}  // namespace atk::test
