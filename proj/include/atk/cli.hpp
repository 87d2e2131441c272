// The atk command line: one verb per group of module operations, JSON on
// standard output. Exit codes: 0 success, 1 usage error, 2 domain error.

#pragma once

#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "atk/atk.hpp"

namespace atk::cli {

struct Options {
  std::string presentation;
  std::string x, s, t_set;
  std::string word, u, v, z, letter;
  std::string side = "left";
  std::string mode = "elementary";
  std::string as = "canonical";
  std::vector<std::string> pairs;
  int n = 1;
  int k = 1;
  std::size_t lattice_budget = kDefaultLatticeBudget;
  int ball_radius = 2;
  std::string delta_range = "-2:2";
  int search_len = 4;
  bool human = false;
  bool monoid = false;
};

class Context {
 public:
  explicit Context(const Options& o) : opt(o) {}

  const Options& opt;

  const CoxeterPresentation& presentation() {
    if (!p_) p_ = load_presentation(opt.presentation);
    return *p_;
  }
  const ArtinGroup& group() {
    if (!grp_) grp_ = std::make_unique<ArtinGroup>(presentation(), opt.lattice_budget);
    return *grp_;
  }
  const Garside& ambient() { return group().ambient(); }

  GenSet set_or_all(const std::string& text) {
    return text.empty() ? presentation().all() : presentation().parse_set(text);
  }
  CanonicalForm form(const std::string& text) { return ambient().normal_form(parse_word(presentation(), text)); }
  CanonicalForm positive(const std::string& text) {
    return ambient().normal_form(parse_positive_word(presentation(), text));
  }
  int letter(const std::string& name) {
    if (name.empty()) fail(ErrorCode::Parse, "a letter is required (-t)");
    return presentation().index(name);
  }
  json fmt(const CanonicalForm& f) { return form_to_json(ambient(), f); }
  std::string pword(const CanonicalForm& f) { return format_word(presentation(), ambient().positive_word(f)); }
  std::string gword(const CanonicalForm& f) { return format_word(presentation(), ambient().word(f)); }
  json names(GenSet x) { return set_to_json(presentation(), x); }

 private:
  std::optional<CoxeterPresentation> p_;
  std::unique_ptr<ArtinGroup> grp_;
};

struct Verb {
  std::string name;
  std::string help;
  std::vector<std::string> operations;
  std::function<void(CLI::App&, Options&)> options;
  std::function<json(Context&)> run;
};

namespace detail {

inline void add_x(CLI::App& a, Options& o, bool required = false) {
  auto* opt = a.add_option("-X,--subset", o.x, "generator subset, comma separated");
  if (required) opt->required();
}
inline void add_w(CLI::App& a, Options& o, bool required = true) {
  auto* opt = a.add_option("-w,--word", o.word, "word, tokens 'g' or 'g^-1'");
  if (required) opt->required();
}
inline void add_uv(CLI::App& a, Options& o) {
  a.add_option("-u", o.u, "first word")->required();
  a.add_option("-v", o.v, "second word")->required();
}
inline void add_side(CLI::App& a, Options& o) {
  a.add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));
}

inline std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      auto v = std::stoll(text);
      return {v, v};
    }
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    fail(ErrorCode::Parse, "delta range must look like 'lo:hi'");
  }
}

inline json family_json(const FamilyFlags& f) {
  return json{{"spherical", f.spherical},
              {"fc", f.fc},
              {"two_dimensional", f.two_dimensional},
              {"large", f.large},
              {"irreducible", f.irreducible}};
}

inline json classify(Context& c) {
  const auto& p = c.presentation();
  GenSet x = c.set_or_all(c.opt.x);
  json j;
  json comps = json::array();
  for (const auto& ct : classify_spherical(p, x))
    comps.push_back(json{{"generators", c.names(ct.component)}, {"type", ct.type.str()}});
  j["components"] = comps;
  j["family"] = family_json(classify_family(p));
  auto [xs, xas] = spherical_split(p, x);
  j["spherical_split"] = json{{"spherical", c.names(xs)}, {"aspherical", c.names(xas)}};
  if (is_spherical(p, p.all())) {
    auto order = coxeter_group_order(p, p.all());
    j["coxeter_order"] = order;
    j["lattice_size"] = order <= c.opt.lattice_budget ? json(c.ambient().lattice().size()) : json(nullptr);
    if (!c.opt.x.empty() && x != p.all() && is_connected(p, p.all()))
      j["delta_in_dz_condition"] = delta_in_dz_condition(p, x);
  }
  return j;
}

inline json nf(Context& c) {
  const auto& p = c.presentation();
  if (c.opt.as == "support") return json{{"support", c.names(support(parse_positive_word(p, c.opt.word)))}};
  auto f = c.form(c.opt.word);
  if (c.opt.as == "delta-power") {
    auto [a, n] = c.ambient().delta_power_form(f);
    return json{{"a", c.pword(a)}, {"n", n}};
  }
  return c.fmt(f);
}

inline json equals(Context& c) {
  const auto& p = c.presentation();
  if (c.opt.monoid)
    return json{{"equal", monoid_equals_general(p, parse_positive_word(p, c.opt.u), parse_positive_word(p, c.opt.v))}};
  return json{{"equal", c.form(c.opt.u) == c.form(c.opt.v)}};
}

inline json divides(Context& c) {
  const auto& a = c.ambient();
  auto u = c.positive(c.opt.u), v = c.positive(c.opt.v);
  auto q = c.opt.side == "left" ? a.left_quotient(u, v) : a.right_quotient(v, u);
  return json{{"divides", q.has_value()}, {"quotient", q ? json(c.pword(*q)) : json(nullptr)}};
}

inline json gcd(Context& c) {
  const auto& a = c.ambient();
  auto u = c.positive(c.opt.u), v = c.positive(c.opt.v);
  return json{{"word", c.pword(c.opt.side == "left" ? a.left_gcd(u, v) : a.right_gcd(u, v))}};
}

inline json lcm(Context& c) {
  const auto& a = c.ambient();
  auto u = c.positive(c.opt.u), v = c.positive(c.opt.v);
  return json{{"word", c.pword(c.opt.side == "left" ? a.left_lcm(u, v) : a.right_lcm(u, v))}};
}

inline json tau(Context& c) {
  const auto& p = c.presentation();
  GenSet x = c.set_or_all(c.opt.x);
  if (!is_spherical(p, x)) fail(ErrorCode::NotSpherical, "X is not of spherical type");
  auto map = c.group().garside(x).tau_map();
  json j;
  json m = json::object();
  for (int g : x.indices()) m[p.name(g)] = p.name(map[g]);
  j["tau"] = m;
  if (!c.opt.word.empty()) {
    auto w = parse_word(p, c.opt.word);
    if (c.opt.k % 2 != 0)
      for (auto& l : w.letters) {
        if (!x.contains(l.gen)) fail(ErrorCode::Parse, "word uses a letter outside X");
        l.gen = map[l.gen];
      }
    j["image"] = format_word(p, w);
  }
  return j;
}

inline json charney(Context& c) {
  const auto& a = c.ambient();
  auto g = c.form(c.opt.word);
  auto [la, lb] = a.charney_left_split(g);
  auto [ra, rb] = a.charney_right_split(g);
  json j{{"left", json{{"a", c.pword(la)}, {"b", c.pword(lb)}}},
         {"right", json{{"a", c.pword(ra)}, {"b", c.pword(rb)}}}};
  if (!c.opt.x.empty()) {
    if (!g.positive()) fail(ErrorCode::Parse, "stripping needs a positive word");
    GenSet x = c.presentation().parse_set(c.opt.x);
    auto st = a.strip(g, x);
    j["strip"] = json{{"a", c.pword(st.a)},
                      {"b", c.pword(st.b)},
                      {"c", c.pword(st.c)},
                      {"b_reduced_left", a.is_reduced_left(st.b, x)},
                      {"b_reduced_right", a.is_reduced_right(st.b, x)}};
  }
  return j;
}

inline json ribbon(Context& c) {
  const auto& p = c.presentation();
  GenSet x = p.parse_set(c.opt.x);
  const auto& m = c.opt.mode;
  if (m == "elementary") return ribbon_to_json(p, elementary_ribbon(c.group(), x, c.letter(c.opt.letter)));
  if (m == "recognize") {
    auto y = is_positive_ribbon(c.group(), c.positive(c.opt.word), x);
    return json{{"target", y ? c.names(*y) : json(nullptr)}};
  }
  if (m == "witness") return json{{"word", c.pword(prp53_witness(c.group(), x, c.opt.n))}};
  auto sp = conj_letter_split(c.group(), c.positive(c.opt.word), c.letter(c.opt.letter));
  return json{{"u1", c.pword(sp.u1)}, {"u2", c.pword(sp.u2)}, {"s1", p.name(sp.s1)}};
}

inline json ribbon_factor(Context& c) {
  const auto& p = c.presentation();
  GenSet x = p.parse_set(c.opt.x);
  auto moves = ribbon_factorization(c.group(), c.positive(c.opt.word), x);
  json arr = json::array();
  for (const auto& mv : moves) arr.push_back(ribbon_to_json(p, mv));
  return json{{"moves", arr}};
}

inline json upsilon(Context& c) {
  return upsilon_to_json(c.group(), upsilon_gens(c.group(), c.presentation().parse_set(c.opt.x)));
}

inline json center(Context& c) {
  auto cg = center_gen(c.group(), c.set_or_all(c.opt.s));
  return json{{"set", c.names(cg.set)},
              {"word", format_word(c.presentation(), cg.word)},
              {"exponent", cg.exponent}};
}

inline json dz(Context& c) {
  return dz_to_json(c.presentation(), double_centralizer_spherical(c.group(), c.set_or_all(c.opt.s),
                                                                   c.presentation().parse_set(c.opt.x)));
}

inline json dz_general(Context& c) {
  std::optional<GenSet> t;
  if (!c.opt.t_set.empty()) t = c.presentation().parse_set(c.opt.t_set);
  return dz_to_json(c.presentation(), double_centralizer_general(c.group(), c.presentation().parse_set(c.opt.x), t));
}

inline json smallest_t(Context& c) {
  auto r = smallest_parabolic_T(c.group(), c.presentation().parse_set(c.opt.x));
  return json{{"T", c.names(r.t)}, {"exact", r.exact}, {"assumes_property", r.assumes_property}};
}

inline json normalize_factor(Context& c) {
  auto f = qz_ax_factor(c.group(), c.form(c.opt.word), c.presentation().parse_set(c.opt.x));
  return json{{"r", c.fmt(f.r)}, {"x", c.fmt(f.x)}};
}

inline json conjugate(Context& c) {
  if (!c.opt.pairs.empty()) {
    std::vector<std::pair<CanonicalForm, CanonicalForm>> pairs;
    for (const auto& s : c.opt.pairs) {
      auto semi = s.find(';');
      if (semi == std::string::npos) fail(ErrorCode::Parse, "pair must look like 'x;y'");
      pairs.emplace_back(c.form(s.substr(0, semi)), c.form(s.substr(semi + 1)));
    }
    SearchBounds b;
    b.max_factors = c.opt.search_len;
    return conjugacy_to_json(c.ambient(), simultaneous_conjugacy(c.group(), pairs, b));
  }
  if (c.opt.word.empty()) fail(ErrorCode::Parse, "conjugate needs -w and -z, or --pair");
  return json{{"result", c.fmt(conjugate_by(c.ambient(), c.form(c.opt.word), c.form(c.opt.z)))}};
}

inline json subgroup_conj(Context& c) {
  GenSet x = c.presentation().parse_set(c.opt.x);
  bool ok = reduction_applicable(c.presentation(), x);
  if (c.opt.u.empty() && c.opt.v.empty()) return json{{"reduction_applicable", ok}};
  SearchBounds b;
  b.max_factors = c.opt.search_len;
  auto j = subgroup_conjugacy_to_json(c.ambient(), subgroup_conjugacy(c.group(), c.form(c.opt.u), c.form(c.opt.v), x, b));
  j["reduction_applicable"] = ok;
  return j;
}

inline json ball_check(Context& c) {
  const auto& p = c.presentation();
  const auto& grp = c.group();
  const auto& a = c.ambient();
  GenSet x = p.parse_set(c.opt.x);
  BallBounds bb;
  bb.radius = c.opt.ball_radius;
  std::tie(bb.delta_lo, bb.delta_hi) = parse_range(c.opt.delta_range);
  auto elems = ball(a, bb);
  std::vector<CanonicalForm> cent;
  std::size_t norm = 0, qz = 0, factored = 0;
  for (const auto& g : elems) {
    if (centralizes(a, g, x)) cent.push_back(g);
    if (in_quasi_centralizer(a, g, x)) ++qz;
    if (normalizes(a, g, x)) {
      ++norm;
      auto f = qz_ax_factor(grp, g, x);
      if (a.multiply(f.r, f.x) == g) ++factored;
    }
  }
  std::vector<CanonicalForm> zs = cent;
  try {
    for (auto& e : upsilon_elements(grp, upsilon_gens(grp, x))) zs.push_back(std::move(e));
  } catch (const Error&) {
    // no explicit generating set for this X; the ball centralizer stands in
  }
  auto desc = double_centralizer_spherical(grp, p.all(), x);
  int kmax = static_cast<int>(std::max(-bb.delta_lo, bb.delta_hi)) + bb.radius + 2;
  std::size_t in_dz = 0, in_desc = 0, agree = 0;
  for (const auto& g : elems) {
    bool d1 = commutes_with_all(a, g, zs);
    bool d2 = in_described_group(grp, desc, g, kmax);
    in_dz += d1;
    in_desc += d2;
    agree += d1 == d2;
  }
  return json{{"ball", elems.size()},
              {"centralizer", cent.size()},
              {"normalizer", norm},
              {"quasi_centralizer", qz},
              {"factorized", factored},
              {"double_centralizer", in_dz},
              {"described", in_desc},
              {"agree", agree == elems.size()}};
}

}  // namespace detail

inline const std::vector<Verb>& verb_table() {
  using namespace detail;
  static const std::vector<Verb> verbs = {
      {"classify", "diagram types, family flags, spherical split",
       {"classify_spherical", "classify_family", "spherical_split", "delta_in_dz_condition", "build_lattice"},
       [](CLI::App& a, Options& o) { add_x(a, o); }, classify},
      {"components", "connected components of X", {"components"},
       [](CLI::App& a, Options& o) { add_x(a, o); },
       [](Context& c) {
         json arr = json::array();
         for (GenSet g : components(c.presentation(), c.set_or_all(c.opt.x))) arr.push_back(c.names(g));
         return json{{"components", arr}};
       }},
      {"perp", "generators commuting with all of X", {"perp"},
       [](CLI::App& a, Options& o) { add_x(a, o, true); },
       [](Context& c) { return json{{"perp", c.names(perp(c.presentation(), c.presentation().parse_set(c.opt.x)))}}; }},
      {"boundary", "generators adjacent to X", {"boundary"},
       [](CLI::App& a, Options& o) { add_x(a, o, true); },
       [](Context& c) {
         return json{{"boundary", c.names(boundary(c.presentation(), c.presentation().parse_set(c.opt.x)))}};
       }},
      {"delta", "the Garside element of X", {"delta_word"},
       [](CLI::App& a, Options& o) { add_x(a, o); },
       [](Context& c) {
         GenSet x = c.set_or_all(c.opt.x);
         if (!is_spherical(c.presentation(), x)) fail(ErrorCode::NotSpherical, "X is not of spherical type");
         return json{{"word", format_word(c.presentation(), c.group().garside(x).delta_word())}};
       }},
      {"nf", "normal form, delta power form or support", {"normal_form", "delta_power_form", "support"},
       [](CLI::App& a, Options& o) {
         add_w(a, o);
         a.add_option("--as", o.as, "canonical, delta-power or support")
             ->check(CLI::IsMember({"canonical", "delta-power", "support"}));
       },
       nf},
      {"equals", "equality of two words", {"equals", "monoid_equals_general"},
       [](CLI::App& a, Options& o) {
         add_uv(a, o);
         a.add_flag("--monoid", o.monoid, "decide in the positive monoid by rewriting");
       },
       equals},
      {"divides", "whether u divides v on the given side", {"left_divides", "right_divides"},
       [](CLI::App& a, Options& o) {
         add_uv(a, o);
         add_side(a, o);
       },
       divides},
      {"gcd", "greatest common divisor", {"left_gcd", "right_gcd"},
       [](CLI::App& a, Options& o) {
         add_uv(a, o);
         add_side(a, o);
       },
       gcd},
      {"lcm", "least common multiple", {"left_lcm", "right_lcm"},
       [](CLI::App& a, Options& o) {
         add_uv(a, o);
         add_side(a, o);
       },
       lcm},
      {"tau", "diagram involution of X and its action on a word", {"tau", "tau_apply"},
       [](CLI::App& a, Options& o) {
         add_x(a, o);
         add_w(a, o, false);
         a.add_option("-k", o.k, "power of tau");
       },
       tau},
      {"charney", "Charney splittings and X-stripping", {"charney_left_split", "charney_right_split", "strip_X"},
       [](CLI::App& a, Options& o) {
         add_w(a, o);
         add_x(a, o);
       },
       charney},
      {"ribbon", "elementary ribbons, recognition, witnesses, letter splits",
       {"elementary_ribbon", "is_positive_ribbon", "prp53_witness", "conj_letter_split"},
       [](CLI::App& a, Options& o) {
         add_x(a, o);
         add_w(a, o, false);
         a.add_option("-t,--letter", o.letter, "generator");
         a.add_option("-n", o.n, "power for the witness");
         a.add_option("--mode", o.mode, "elementary, recognize, witness or letter-split")
             ->check(CLI::IsMember({"elementary", "recognize", "witness", "letter-split"}));
       },
       ribbon},
      {"ribbon-factor", "factor a positive ribbon into elementary ribbons", {"ribbon_factorization"},
       [](CLI::App& a, Options& o) {
         add_w(a, o);
         add_x(a, o, true);
       },
       ribbon_factor},
      {"upsilon", "generators of the centralizer of A_X", {"upsilon_gens"},
       [](CLI::App& a, Options& o) { add_x(a, o, true); }, upsilon},
      {"center", "generator of the center", {"center_gen"},
       [](CLI::App& a, Options& o) { a.add_option("-S", o.s, "ambient subset"); }, center},
      {"dz", "double centralizer, spherical ambient", {"double_centralizer_spherical"},
       [](CLI::App& a, Options& o) {
         add_x(a, o, true);
         a.add_option("-S", o.s, "ambient subset");
       },
       dz},
      {"dz-general", "double centralizer, non-spherical ambient", {"double_centralizer_general"},
       [](CLI::App& a, Options& o) {
         add_x(a, o, true);
         a.add_option("--T", o.t_set, "override the subset T");
       },
       dz_general},
      {"T", "smallest parabolic containing the centralizer (approximation)", {"smallest_parabolic_T"},
       [](CLI::App& a, Options& o) { add_x(a, o, true); }, smallest_t},
      {"normalize-factor", "factor a normalizing element as r x", {"qz_ax_factor"},
       [](CLI::App& a, Options& o) {
         add_w(a, o);
         add_x(a, o, true);
       },
       normalize_factor},
      {"conjugate", "conjugation, or simultaneous conjugacy search", {"conjugate_by", "simultaneous_conjugacy"},
       [](CLI::App& a, Options& o) {
         add_w(a, o, false);
         a.add_option("-z", o.z, "conjugator");
         a.add_option("--pair", o.pairs, "pair 'x;y', repeatable");
         a.add_option("--search-len", o.search_len, "maximal canonical length of conjugators");
       },
       conjugate},
      {"subgroup-conjugacy", "conjugacy by an element of A_X", {"subgroup_conjugacy", "reduction_applicable"},
       [](CLI::App& a, Options& o) {
         add_x(a, o, true);
         a.add_option("-u", o.u, "x");
         a.add_option("-v", o.v, "y");
         a.add_option("--search-len", o.search_len, "maximal canonical length of conjugators");
       },
       subgroup_conj},
      {"ball-check", "ball oracle statistics for X", {"ball_oracle"},
       [](CLI::App& a, Options& o) {
         add_x(a, o, true);
         a.add_option("--ball-radius", o.ball_radius, "maximal canonical length");
         a.add_option("--delta-range", o.delta_range, "delta powers 'lo:hi'");
       },
       ball_check},
  };
  return verbs;
}

inline void render_human(std::ostream& out, const json& j) {
  if (!j.is_object()) {
    out << j.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

/// Runs the command line `args` (args[0] is the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"atk: exact computations in Artin-Tits groups"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-p,--presentation", opt.presentation, "presentation JSON file");
  app.add_option("--lattice-budget", opt.lattice_budget, "maximal number of simple elements");
  app.add_flag("--human", opt.human, "plain text output");
  std::vector<std::pair<CLI::App*, const Verb*>> subs;
  for (const auto& v : verb_table()) {
    auto* sub = app.add_subcommand(v.name, v.help);
    v.options(*sub, opt);
    subs.emplace_back(sub, &v);
  }
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }
  const Verb* verb = nullptr;
  for (auto [sub, v] : subs)
    if (sub->parsed()) verb = v;
  if (opt.presentation.empty()) {
    err << "--presentation is required\n";
    return 1;
  }
  try {
    Context ctx(opt);
    json result = verb->run(ctx);
    if (opt.human) render_human(out, result);
    else out << result.dump() << "\n";
    return 0;
  } catch (const Error& e) {
    out << error_to_json(e).dump() << "\n";
    return 2;
  }
}

}  // namespace atk::cli
