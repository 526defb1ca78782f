#include "cli.hpp"

#include <nashkit/counting.hpp>
#include <nashkit/eqsystem.hpp>
#include <nashkit/errors.hpp>
#include <nashkit/game_json.hpp>
#include <nashkit/homotopy.hpp>
#include <nashkit/random_game.hpp>
#include <nashkit/resultant.hpp>
#include <nashkit/section222.hpp>
#include <nashkit/strata.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace nashkit::cli {

using nlohmann::json;

namespace {

// Requested analysis does not apply to this format.
struct Unsupported : Error {
  using Error::Error;
};

json exact(const Integer& z) {
  static const Integer limit = Integer(1) << 53;
  if (abs(z) < limit) return json(z.get_si());
  return json(z.get_str());
}

json exact(const Rational& q) { return json(to_string(q)); }

json format_json(const Format& f) { return json(f.dims()); }

Game read_game(const std::string& path) {
  if (path == "-") {
    std::string text(std::istreambuf_iterator<char>(std::cin), {});
    return parse_game(text);
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_game(ss.str());
}

json complex_vector(const Eigen::VectorXcd& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back({v[k].real(), v[k].imag()});
  return out;
}

json solution_json(const Solution& s) {
  json point = json::array();
  for (const auto& g : s.point) point.push_back(complex_vector(g));
  json j{{"point", point},
         {"residual", s.residual},
         {"multiplicity", s.multiplicity},
         {"is_real", s.is_real},
         {"totally_mixed", s.totally_mixed()},
         {"borderline", s.borderline},
         {"condition", s.condition},
         {"jacobian_rank", s.jacobian_rank},
         {"non_isolated_suspected", s.non_isolated_suspected},
         {"deflated", s.deflated},
         {"paths", s.paths}};
  j["simplex_rep"] = s.simplex_rep ? json(*s.simplex_rep) : json(nullptr);
  return j;
}

// ---- count -----------------------------------------------------------------

json cmd_count(const Format& f, const std::string& method, std::uint64_t limit) {
  json out{{"format", format_json(f)}, {"classification", to_string(f.classify())}};
  std::vector<Integer> values;
  if (method == "chow" || method == "all") {
    values.push_back(c_chow(f));
    out["chow"] = exact(values.back());
  }
  if (method == "derange" || method == "all") {
    try {
      values.push_back(c_derangements(f, limit));
      out["derange"] = exact(values.back());
    } catch (const CountLimitExceeded&) {
      out["derange"] = nullptr;
      out["derange_note"] = "enumeration limit " + std::to_string(limit) + " exceeded";
    }
  }
  if (method == "genfun" || method == "all") {
    values.push_back(c_genfun(f));
    out["genfun"] = exact(values.back());
  }
  if (method == "all")
    out["agree"] = std::all_of(values.begin(), values.end(), [&](const Integer& v) { return v == values.front(); });
  return out;
}

// ---- system ----------------------------------------------------------------

json cmd_system(const Game& g, bool print) {
  EquilibriumSystem sys = build_system(g);
  json eqs = json::array();
  for (int e = 0; e < sys.size(); ++e) {
    json item{{"player", sys.labels[e].player + 1}, {"k", sys.labels[e].k + 1}};
    if (print) {
      item["text"] = sys.equations[e].to_string();
    } else {
      json terms = json::array();
      for (const auto& [ex, c] : sys.equations[e].poly().terms()) terms.push_back({{"coef", exact(c)}, {"exponent", ex}});
      item["terms"] = terms;
    }
    eqs.push_back(item);
  }
  return json{{"format", format_json(g.format())}, {"equations", eqs}};
}

// ---- solve -----------------------------------------------------------------

json cmd_solve(const Game& g, std::uint64_t seed, int threads, int& code) {
  if (g.format().classify() == FormatClass::Beyond)
    throw Unsupported("format " + g.format().to_string() + " is beyond the boundary: no equilibria for generic games");
  TrackerConfig cfg;
  cfg.threads = threads;
  SolveResult r = solve(g, cfg, seed);
  json sols = json::array();
  int real = 0, mixed = 0;
  for (const auto& s : r.solutions) {
    sols.push_back(solution_json(s));
    real += s.is_real ? 1 : 0;
    mixed += s.totally_mixed() ? 1 : 0;
  }
  json failures = json::array();
  for (const auto& f : r.report.failures) failures.push_back({{"path", f.path}, {"reason", f.reason}, {"t", f.t}});
  code = r.report.failed > 0 ? kFailedPaths : kOk;
  return json{{"format", format_json(g.format())},
              {"seed", r.report.seed},
              {"gamma", {r.report.gamma.real(), r.report.gamma.imag()}},
              {"paths", r.report.paths},
              {"failed", r.report.failed},
              {"steps", r.report.steps},
              {"failures", failures},
              {"solutions", sols},
              {"counts", {{"solutions", r.solutions.size()}, {"real", real}, {"totally_mixed", mixed}}}};
}

// ---- classify222 -----------------------------------------------------------

const char* form_kind(FormKind k) {
  switch (k) {
    case FormKind::Zero: return "zero";
    case FormKind::Irreducible: return "irreducible";
    case FormKind::Reducible: return "reducible";
  }
  return "?";
}

json section_json(const Section222& s) {
  json out = json::array();
  for (int i = 0; i < 3; ++i) {
    json m = json::array();
    for (int r = 0; r < 2; ++r) m.push_back(json::array({exact(s.a[i](r, 0)), exact(s.a[i](r, 1))}));
    out.push_back(m);
  }
  return out;
}

void require_222(const Format& f) {
  if (!(f == Format{2, 2, 2})) throw Unsupported("classify222 needs format 2,2,2, got " + f.to_string());
}

json cmd_classify222(const Game& g) {
  require_222(g.format());
  Section222 s = Section222::from_game(g);
  Classification c = classify(s);
  json forms = json::array();
  for (auto k : c.forms) forms.push_back(form_kind(k));
  json shared = json::array();
  for (auto [a, b] : c.shared) shared.push_back({a + 1, b + 1});
  json witnesses{{"section", section_json(s)}, {"forms", forms}, {"shared_factors", shared}, {"note", c.note}};
  witnesses["distinguished"] = c.distinguished ? json(*c.distinguished + 1) : json(nullptr);
  if (c.type == SchemeType::CON && c.distinguished) {
    json minors = json::array();
    for (const auto& m : conic_stratum_minors(s, *c.distinguished)) minors.push_back(exact(m));
    witnesses["conic_minors"] = minors;
  }
  if ((c.type == SchemeType::LIN || c.type == SchemeType::FINITE) && c.distinguished) {
    LineStratum ls = line_stratum_equations(s, *c.distinguished);
    json F = json::array();
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) F.push_back(ls.defined[a][b] ? exact(ls.F[a][b]) : json(nullptr));
    witnesses["line_equations"] = {{"Q1", exact(ls.Q1)}, {"Q2", exact(ls.Q2)}, {"F", F}};
  }
  return json{{"type", to_string(c.type)},
              {"phi_rank", c.phi_rank},
              {"theta_det", exact(c.theta_det)},
              {"witnesses", witnesses}};
}

// ---- discriminant ----------------------------------------------------------

json cmd_discriminant(const Game& g) {
  const Format& f = g.format();
  json out{{"format", format_json(f)}, {"classification", to_string(f.classify())}};
  if (f == Format{2, 2, 2}) {
    Rational t = theta_det(Section222::from_game(g));
    out["kind"] = "theta";
    out["theta_det"] = exact(t);
    out["member"] = sgn(t) == 0;
    return out;
  }
  if (f.n() == 2 && f[0] == f[1]) {
    TwoPlayerRanks a = two_player_discriminant(g);
    TwoPlayerRanks b = two_player_discriminant_ones_row(g);
    out["kind"] = "two_player";
    out["ranks"] = {a.rank1, a.rank2};
    out["ones_row_ranks"] = {b.rank1, b.rank2};
    out["member"] = a.member;
    out["agree"] = a.member == b.member;
    return out;
  }
  if (f.classify() == FormatClass::Boundary) {
    out["d1_degree"] = exact(d1_degree(f));
    int m = f.max_index();
    if (f.n() == 3 && f[m] == 3) {
      Rational v = bilinear_pair_discriminant(bilinear_coefficients(g, m, 1), bilinear_coefficients(g, m, 2));
      out["kind"] = "bilinear_pair";
      out["value"] = exact(v);
      out["member"] = sgn(v) == 0;
      return out;
    }
    throw Unsupported("D1 membership for format " + f.to_string() + " is not implemented");
  }
  throw Unsupported("no discriminant test for format " + f.to_string());
}

// ---- resultant -------------------------------------------------------------

json cmd_resultant(const Format& f, const Game* g, bool expand) {
  if (f.classify() != FormatClass::Beyond)
    throw Unsupported("resultant needs a beyond-boundary format, " + f.to_string() + " is " + to_string(f.classify()));
  ResultantProfile p = resultant_profile(f);
  json out{{"format", format_json(f)},
           {"codim", p.codim},
           {"degree", exact(p.degree)},
           {"distinguished", p.distinguished + 1}};
  if (expand) {
    if (p.codim != 1) throw Unsupported("expansion needs codimension one");
    ResultantExpansion e = nash_resultant_expand(f);
    out["expansion"] = {{"order", e.order}, {"terms", e.terms}, {"degree", e.degree}};
  }
  if (g) {
    if (f.n() == 2) {
      TwoPlayerResultant t = two_player_resultant_tests(*g);
      out["two_player"] = {{"difference_rank", t.difference_rank},
                           {"ones_row_rank", t.ones_row_rank},
                           {"agree", t.difference_member == t.ones_row_member}};
      out["member"] = t.difference_member;
    } else if (p.codim == 1) {
      Rational d = partial_x_det(*g);
      out["partial_x_det"] = exact(d);
      out["member"] = sgn(d) == 0;
    } else {
      throw Unsupported("membership in codimension " + std::to_string(p.codim) + " is only available for two players");
    }
  }
  return out;
}

void emit(std::ostream& out, const json& j) { out << j.dump() << "\n"; }

int fail(std::ostream& out, std::ostream& err, int code, const std::string& kind, const std::string& msg) {
  err << "nashkit: " << msg << "\n";
  emit(out, json{{"error", {{"kind", kind}, {"message", msg}}}});
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Totally mixed Nash equilibria of normal form games", "nashkit"};
  app.require_subcommand(1);

  std::string format_text, game_path, method = "all", json_path;
  std::uint64_t seed = 1, limit = kDefaultCountLimit;
  int height = 10, threads = 0;
  bool print = false, expand = false;

  auto* count = app.add_subcommand("count", "Expected number of totally mixed equilibria");
  count->add_option("--format", format_text, "Format d1,...,dn")->required();
  count->add_option("--method", method, "chow | derange | genfun | all")
      ->check(CLI::IsMember({"chow", "derange", "genfun", "all"}));
  count->add_option("--limit", limit, "Enumeration limit for derange");

  auto* system = app.add_subcommand("system", "Equilibrium equations of a game");
  system->add_option("--game", game_path, "Game JSON file, - for stdin")->required();
  system->add_flag("--print", print, "Equations as canonical text");

  auto* solve_cmd = app.add_subcommand("solve", "All isolated equilibrium points by homotopy continuation");
  solve_cmd->add_option("--game", game_path, "Game JSON file, - for stdin")->required();
  solve_cmd->add_option("--seed", seed, "Random seed");
  solve_cmd->add_option("--json", json_path, "Also write the report to this file");
  solve_cmd->add_option("--threads", threads, "Worker threads (default NASHKIT_THREADS or 1)");

  auto* classify_cmd = app.add_subcommand("classify222", "Scheme type of a (2,2,2) game");
  classify_cmd->add_option("--game", game_path, "Game JSON file, - for stdin")->required();

  auto* disc = app.add_subcommand("discriminant", "Nash discriminant membership");
  disc->add_option("--game", game_path, "Game JSON file, - for stdin")->required();

  auto* res = app.add_subcommand("resultant", "Nash resultant profile and membership");
  auto* res_format = res->add_option("--format", format_text, "Format d1,...,dn");
  auto* res_game = res->add_option("--game", game_path, "Game JSON file, - for stdin");
  res_format->excludes(res_game);
  res_game->excludes(res_format);
  res->add_flag("--expand", expand, "Expand det of the partial_X matrix symbolically");

  auto* rg = app.add_subcommand("random-game", "Game with uniform integer payoffs");
  rg->add_option("--format", format_text, "Format d1,...,dn")->required();
  rg->add_option("--seed", seed, "Random seed");
  rg->add_option("--height", height, "Payoffs in [-height, height]");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(out, err, kUsage, "usage", e.what());
  }

  try {
    int code = kOk;
    json result;
    if (*count) {
      result = cmd_count(Format::parse(format_text), method, limit);
    } else if (*system) {
      result = cmd_system(read_game(game_path), print);
    } else if (*solve_cmd) {
      result = cmd_solve(read_game(game_path), seed, threads, code);
      if (!json_path.empty()) {
        std::ofstream f(json_path);
        if (!f) throw ParseError("cannot write " + json_path);
        emit(f, result);
      }
    } else if (*classify_cmd) {
      result = cmd_classify222(read_game(game_path));
    } else if (*disc) {
      result = cmd_discriminant(read_game(game_path));
    } else if (*res) {
      if (format_text.empty() && game_path.empty()) throw ParseError("resultant needs --format or --game");
      if (!game_path.empty()) {
        Game g = read_game(game_path);
        result = cmd_resultant(g.format(), &g, expand);
      } else {
        result = cmd_resultant(Format::parse(format_text), nullptr, expand);
      }
    } else if (*rg) {
      if (height < 1) throw ParseError("--height must be at least 1");
      out << serialize_game(random_game(Format::parse(format_text), seed, height));
      return kOk;
    }
    emit(out, result);
    return code;
  } catch (const Unsupported& e) {
    return fail(out, err, kUnsupported, "unsupported", e.what());
  } catch (const ParseError& e) {
    return fail(out, err, kUsage, "parse", e.what());
  } catch (const SchemaError& e) {
    return fail(out, err, kUsage, "schema", e.what());
  } catch (const FormatError& e) {
    return fail(out, err, kUsage, "format", e.what());
  } catch (const SolveError& e) {
    return fail(out, err, kFailedPaths, "solve", e.what());
  } catch (const Error& e) {
    return fail(out, err, kUsage, "error", e.what());
  }
}

}  // namespace nashkit::cli
