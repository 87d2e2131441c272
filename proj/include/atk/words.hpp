// Syntactic words over a presentation's generators.
//
// Text grammar: whitespace separated tokens, each "g" or "g^-1".

#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "atk/coxeter.hpp"
#include "atk/error.hpp"

namespace atk {

struct Letter {
  int gen = 0;
  int sign = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};

/// Word in the positive monoid; the empty word is the identity.
struct PositiveWord {
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const PositiveWord&) const = default;
  auto operator<=>(const PositiveWord&) const = default;
};

/// Word in the group: letters carry an exponent sign.
struct GroupWord {
  std::vector<Letter> letters;

  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> l) : letters(std::move(l)) {}
  GroupWord(const PositiveWord& w) {  // NOLINT: positive words embed
    for (int g : w.letters) letters.push_back({g, 1});
  }

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const GroupWord&) const = default;

  GroupWord inverse() const {
    GroupWord out;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) out.letters.push_back({it->gen, -it->sign});
    return out;
  }
  GroupWord operator*(const GroupWord& o) const {
    GroupWord out = *this;
    out.letters.insert(out.letters.end(), o.letters.begin(), o.letters.end());
    return out;
  }
};

inline PositiveWord operator*(const PositiveWord& a, const PositiveWord& b) {
  PositiveWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

inline PositiveWord reversed(PositiveWord w) {
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

/// Set of letters occurring in w. Braid relations preserve it, so it is an
/// invariant of the monoid element.
inline GenSet support(const PositiveWord& w) {
  GenSet s;
  for (int g : w.letters) s.insert(g);
  return s;
}

inline GenSet support(const GroupWord& w) {
  GenSet s;
  for (const auto& l : w.letters) s.insert(l.gen);
  return s;
}

/// Sum of exponents per generator class of the abelianization (generators
/// joined by an odd label are identified).
inline std::vector<long> abelianization(const CoxeterPresentation& p, const GroupWord& w) {
  const int n = p.rank();
  std::vector<int> cls(n);
  for (int i = 0; i < n; ++i) cls[i] = i;
  auto find = [&](int i) {
    while (cls[i] != i) i = cls[i] = cls[cls[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.m(i, j) != kInfinity && p.m(i, j) % 2 == 1) cls[find(i)] = find(j);
  std::vector<long> out(n, 0);
  for (const auto& l : w.letters) out[find(l.gen)] += l.sign;
  return out;
}

inline GroupWord parse_word(const CoxeterPresentation& p, std::string_view text) {
  GroupWord w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n') ++j;
    std::string_view tok = text.substr(i, j - i);
    int sign = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      if (tok.substr(caret) != "^-1") fail(ErrorCode::Parse, "bad exponent in token '" + std::string(tok) + "'");
      sign = -1;
      tok = tok.substr(0, caret);
    }
    w.letters.push_back({p.index(tok), sign});
    i = j;
  }
  return w;
}

inline PositiveWord parse_positive_word(const CoxeterPresentation& p, std::string_view text) {
  PositiveWord out;
  for (const auto& l : parse_word(p, text).letters) {
    if (l.sign < 0) fail(ErrorCode::Parse, "expected a positive word: '" + std::string(text) + "'");
    out.letters.push_back(l.gen);
  }
  return out;
}

inline std::string format_word(const CoxeterPresentation& p, const GroupWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += p.name(l.gen);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

inline std::string format_word(const CoxeterPresentation& p, const PositiveWord& w) {
  std::string out;
  for (int g : w.letters) {
    if (!out.empty()) out += ' ';
    out += p.name(g);
  }
  return out;
}

}  // namespace atk
