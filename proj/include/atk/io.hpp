// JSON encoding of presentations and results. Sets are listed in generator
// index order; objects use sorted keys so output is byte-stable.

#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "atk/centralizers.hpp"
#include "atk/conjugacy.hpp"
#include "atk/coxeter.hpp"
#include "atk/error.hpp"
#include "atk/garside.hpp"
#include "atk/ribbons.hpp"
#include "atk/words.hpp"

namespace atk {

using json = nlohmann::json;

/// {"generators": [...], "matrix": [[...]]}, infinity encoded as 0.
inline CoxeterPresentation presentation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generators") || !j.contains("matrix"))
    fail(ErrorCode::InvalidPresentation, "expected an object with 'generators' and 'matrix'");
  std::vector<std::string> gens;
  std::vector<std::vector<int>> mat;
  try {
    gens = j.at("generators").get<std::vector<std::string>>();
    mat = j.at("matrix").get<std::vector<std::vector<int>>>();
  } catch (const json::exception& e) {
    fail(ErrorCode::InvalidPresentation, e.what());
  }
  if (gens.empty()) fail(ErrorCode::InvalidPresentation, "presentation needs at least one generator");
  return CoxeterPresentation(std::move(gens), std::move(mat));
}

inline json presentation_to_json(const CoxeterPresentation& p) {
  return json{{"generators", p.names()}, {"matrix", p.matrix()}};
}

inline CoxeterPresentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Parse, "cannot open presentation file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, "presentation file '" + path + "': " + e.what());
  }
  return presentation_from_json(j);
}

inline json set_to_json(const CoxeterPresentation& p, GenSet x) { return p.set_names(x); }

inline json form_to_json(const Garside& g, const CanonicalForm& f) {
  json factors = json::array();
  for (auto s : f.factors) factors.push_back(format_word(g.presentation(), g.simple_word(s)));
  return json{{"delta_power", f.delta_power}, {"factors", factors}};
}

inline json ribbon_to_json(const CoxeterPresentation& p, const RibbonMove& m) {
  return json{{"source", set_to_json(p, m.source)},
              {"letter", p.name(m.letter)},
              {"word", format_word(p, m.word)},
              {"target", set_to_json(p, m.target)},
              {"moved_letter", p.name(m.moved_letter)}};
}

inline json dz_to_json(const CoxeterPresentation& p, const DZDescription& d) {
  json j;
  j["symbolic"] = std::string(to_string(d.symbolic));
  j["parabolic"] = set_to_json(p, d.parabolic);
  json factors = json::array();
  for (const auto& f : d.cyclic_factors)
    factors.push_back(json{{"set", set_to_json(p, f.set)},
                           {"exponent", f.exponent},
                           {"kind", f.quasi ? "quasi_center" : "center"}});
  j["cyclic_factors"] = factors;
  json gens = json::array();
  for (const auto& w : d.generators) gens.push_back(format_word(p, w));
  j["generators"] = gens;
  j["exact"] = d.exact;
  if (d.t) j["T"] = set_to_json(p, *d.t);
  if (d.perp) j["perp"] = set_to_json(p, *d.perp);
  return j;
}

inline json upsilon_to_json(const ArtinGroup& grp, const UpsilonSet& u) {
  const auto& p = grp.presentation();
  json j;
  j["singles"] = set_to_json(p, u.singles);
  json deltas = json::array();
  for (GenSet y : u.delta_gens) deltas.push_back(set_to_json(p, y));
  j["delta_gens"] = deltas;
  json pairs = json::array();
  for (auto [y, y2] : u.pair_gens) pairs.push_back(json::array({set_to_json(p, y), set_to_json(p, y2)}));
  j["pair_gens"] = pairs;
  json elems = json::array();
  for (const auto& e : upsilon_elements(grp, u)) elems.push_back(form_to_json(grp.ambient(), e));
  j["elements"] = elems;
  return j;
}

inline json coverage_to_json(const Coverage& c) {
  return json{{"max_factors", c.max_factors},
              {"delta_powers", json::array({c.delta_lo, c.delta_hi})},
              {"candidates", c.candidates}};
}

inline json conjugacy_to_json(const Garside& g, const ConjugacyResult& r) {
  json j{{"status", std::string(to_string(r.status))}, {"coverage", coverage_to_json(r.coverage)}};
  j["witness"] = r.conjugator ? json(format_word(g.presentation(), g.word(*r.conjugator))) : json(nullptr);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

inline json subgroup_conjugacy_to_json(const Garside& g, const SubgroupConjugacyResult& r) {
  json j{{"status", std::string(to_string(r.status))},
         {"coverage", coverage_to_json(r.coverage)},
         {"target_subgroup", set_to_json(g.presentation(), r.target)},
         {"verified", r.verified}};
  j["witness"] = r.conjugator ? json(format_word(g.presentation(), g.word(*r.conjugator))) : json(nullptr);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

inline json error_to_json(const Error& e) {
  return json{{"error", std::string(to_string(e.code()))}, {"detail", e.detail()}};
}

}  // namespace atk
