#include "propmod/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "propmod/frob.hpp"
#include "propmod/gen2.hpp"
#include "propmod/json_io.hpp"
#include "propmod/oracle.hpp"
#include "propmod/ring.hpp"

namespace propmod::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  try {
    for (const auto& s : split(text, ',')) out.push_back(narrow(parse_int(s)));
  } catch (const std::exception& e) {
    throw UsageError("malformed integer list '" + text + "'");
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

LinearForm form_of(const std::string& text) { return LinearForm(parse_int_list(text)); }

std::string points_text(const std::vector<Point>& pts) {
  std::ostringstream os;
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? " " : "") << p[i];
    os << '\n';
  }
  return os.str();
}

std::string point_text(const Point& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? " " : "") << p[i];
  return os.str();
}

const ModularInequality& need_ineq(const Command& cmd) {
  if (!cmd.ineq) throw UsageError("an inequality is required (--f/--g/--b or --input)");
  return *cmd.ineq;
}

oracle::Window window_for(const Command& cmd, std::size_t p) {
  if (cmd.window.empty()) throw UsageError("--window is required");
  if (cmd.window.size() == 1) return oracle::Window::cube(p, cmd.window[0]);
  if (cmd.window.size() != p) throw UsageError("--window has the wrong number of bounds");
  return {cmd.window};
}

std::string render(const json& j, const Command& cmd, const std::string& text) {
  if (cmd.format == Format::Json) return j.dump() + "\n";
  return text;
}

std::string run_gens(const Command& cmd) {
  const auto& ineq = need_ineq(cmd);
  json j;
  GeneratorSet gens;
  if (cmd.method == Method::Geometric) {
    gens = min_gens_n2(ineq);
    j = to_json(gens);
  } else if (cmd.trace) {
    auto t = construction_trace(ineq, cmd.cap);
    gens = t.generators;
    j = to_json(gens);
    j["trace"] = to_json(t);
  } else {
    gens = min_gens_np(ineq, cmd.cap);
    j = to_json(gens);
  }
  std::ostringstream os;
  os << "trivial: " << (gens.trivial ? "true" : "false") << '\n';
  os << "generators: " << gens.points.size() << '\n' << points_text(gens.points);
  if (cmd.trace && cmd.format == Format::Text) os << "trace: " << j["trace"].dump() << '\n';
  return render(j, cmd, os.str());
}

std::string run_membership(const Command& cmd) {
  const auto& ineq = need_ineq(cmd);
  if (!cmd.point) throw UsageError("--point is required");
  if (cmd.point->dim() != ineq.dim()) throw UsageError("--point has the wrong dimension");
  bool in = member(ineq, *cmd.point);
  json j{{"point", to_json(*cmd.point)}, {"member", in}};
  return render(j, cmd, std::string(in ? "true" : "false") + "\n");
}

std::string run_frobenius(const Command& cmd) {
  const auto& ineq = need_ineq(cmd);
  auto rep = frobenius_vectors(ineq);
  json j = to_json(rep);
  if (rep.kind == PlanarCase::Strip) j["geometry"] = to_json(strip_geometry(ineq));
  std::ostringstream os;
  os << "delta_size: " << rep.delta.size() << '\n';
  os << "frobenius_vectors_in_delta: " << rep.frobenius_vectors.size() << '\n'
     << points_text(rep.frobenius_vectors);
  if (rep.kind == PlanarCase::Strip)
    os << "below_cone: " << rep.below_cone.size() << '\n' << points_text(rep.below_cone);
  os << "minimal: " << rep.minimal.size() << '\n' << points_text(rep.minimal);
  return render(j, cmd, os.str());
}

std::string run_apery(const Command& cmd) {
  auto ap = apery_intersection(need_ineq(cmd));
  std::ostringstream os;
  os << "u: " << point_text(ap.s1) << "\nu_tilde: " << point_text(ap.s2) << '\n';
  os << "apery_intersection: " << ap.apery_restricted.size() << '\n' << points_text(ap.apery_restricted);
  os << "maximal_elements: " << ap.maximal_elements.size() << '\n' << points_text(ap.maximal_elements);
  return render(to_json(ap), cmd, os.str());
}

std::string run_properties(const Command& cmd) {
  auto rep = properties(need_ineq(cmd));
  std::ostringstream os;
  os << "cohen_macaulay: " << (rep.cohen_macaulay ? "true" : "false") << '\n';
  os << "gorenstein: " << (rep.gorenstein ? "true" : "false") << '\n';
  os << "buchsbaum: " << (rep.buchsbaum ? (*rep.buchsbaum ? "true" : "false") : "undetermined") << '\n';
  os << "closure_equals_S: " << (rep.closure_equals_S ? "true" : "false") << '\n';
  os << "apery_maximal: " << rep.apery_maximal.size() << '\n' << points_text(rep.apery_maximal);
  os << "notes: " << rep.notes << '\n';
  return render(to_json(rep), cmd, os.str());
}

std::string run_solve(const Command& cmd) {
  MinimalSolutionSet sols;
  if (cmd.cone)
    sols = cone_hilbert_basis(*cmd.cone, cmd.cone->dim());
  else if (cmd.system)
    sols = minimal_solutions(*cmd.system);
  else
    throw UsageError("solve needs --eq/--cong/--ge constraints or --cone");
  std::ostringstream os;
  os << "solutions: " << sols.points.size() << '\n' << points_text(sols.points);
  os << "certified_bound: " << to_string(sols.certified_bound) << '\n';
  return render(to_json(sols), cmd, os.str());
}

std::string run_oracle(const Command& cmd) {
  const auto& ineq = need_ineq(cmd);
  const auto& v = cmd.oracle_verb;
  if (v == "membership") {
    if (!cmd.point) throw UsageError("--point is required");
    if (cmd.point->dim() != ineq.dim()) throw UsageError("--point has the wrong dimension");
    bool in = oracle::definition_member(ineq, *cmd.point);
    return render(json{{"point", to_json(*cmd.point)}, {"member", in}}, cmd, std::string(in ? "true" : "false") + "\n");
  }
  auto window = window_for(cmd, ineq.dim());
  if (v == "members") {
    auto pts = oracle::brute_members(ineq, window);
    return render(json{{"members", to_json(pts)}}, cmd, points_text(pts));
  }
  if (v == "gens") {
    auto pts = oracle::brute_min_gens(ineq, window);
    return render(json{{"trivial", pts.empty()}, {"generators", to_json(pts)}}, cmd,
                  "generators: " + std::to_string(pts.size()) + "\n" + points_text(pts));
  }
  if (v == "frobenius") {
    std::int64_t margin = cmd.margin >= 0 ? cmd.margin : oracle::required_frobenius_margin(ineq);
    auto res = oracle::brute_min_frobenius(ineq, window, margin);
    return render(json{{"minimal", to_json(res.minimal)}, {"passing", to_json(res.passing)}}, cmd,
                  "minimal: " + std::to_string(res.minimal.size()) + "\n" + points_text(res.minimal));
  }
  throw UsageError("unknown oracle subcommand '" + v + "'");
}

}  // namespace

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  try {
    for (const auto& s : split(text, ',')) out.push_back(Rational::parse(s));
  } catch (const std::exception&) {
    throw UsageError("malformed vector '" + text + "'");
  }
  if (out.empty()) throw UsageError("empty vector");
  return out;
}

Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Proportionally modular affine semigroups", "propmod"};
  app.require_subcommand(1);

  std::string f, g, b, input, method = "geometric", format = "text", point, window;
  std::vector<std::string> eqs, congs, ges;
  std::string cone, oracle_verb;
  std::int64_t margin = -1;
  bool trace = false;

  auto add_ineq = [&](CLI::App* sub) {
    sub->add_option("--f", f, "coefficients of f, e.g. 3,-2 (rationals as p/q)");
    sub->add_option("--g", g, "coefficients of g");
    sub->add_option("--b", b, "modulus b (integer or p/q)");
    sub->add_option("--input", input, "JSON file {\"f\":[...],\"g\":[...],\"b\":...}");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* gens = app.add_subcommand("gens", "minimal generating set");
  add_ineq(gens);
  gens->add_option("--method", method, "geometric (p = 2) or general")->check(CLI::IsMember({"geometric", "general"}));
  gens->add_flag("--trace", trace, "include the construction trace (general method)");
  auto* membership = app.add_subcommand("membership", "membership test");
  add_ineq(membership);
  membership->add_option("--point", point, "comma-separated point")->required();
  auto* frobenius = app.add_subcommand("frobenius", "Frobenius vectors (p = 2)");
  add_ineq(frobenius);
  auto* apery = app.add_subcommand("apery", "Apery set intersection (strip case)");
  add_ineq(apery);
  auto* props = app.add_subcommand("properties", "Cohen-Macaulay / Gorenstein / Buchsbaum");
  add_ineq(props);
  auto* solve = app.add_subcommand("solve", "minimal solutions of a Diophantine system");
  solve->add_option("--eq", eqs, "equality coeffs:target, e.g. 1,-3:0");
  solve->add_option("--cong", congs, "congruence coeffs:residue:modulus, e.g. 3,-2:0:11");
  solve->add_option("--ge", ges, "lower bound coeffs:bound, e.g. 1,1:2");
  solve->add_option("--cone", cone, "Hilbert basis of {g(x) >= 0}");
  solve->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* orc = app.add_subcommand("oracle", "brute-force references");
  orc->add_option("subcommand", oracle_verb, "members | gens | membership | frobenius")
      ->required()
      ->check(CLI::IsMember({"members", "gens", "membership", "frobenius"}));
  add_ineq(orc);
  orc->add_option("--window", window, "inclusive bounds, one per coordinate or one for all");
  orc->add_option("--point", point, "comma-separated point");
  orc->add_option("--margin", margin, "certification margin for oracle frobenius");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    for (auto* sub : app.get_subcommands({}))
      if (sub->parsed()) throw HelpRequested(sub->help());
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command cmd;
  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  if (name == "gens") cmd.verb = Verb::Gens;
  else if (name == "membership") cmd.verb = Verb::Membership;
  else if (name == "frobenius") cmd.verb = Verb::Frobenius;
  else if (name == "apery") cmd.verb = Verb::Apery;
  else if (name == "properties") cmd.verb = Verb::Properties;
  else if (name == "solve") cmd.verb = Verb::Solve;
  else cmd.verb = Verb::Oracle;

  cmd.format = format == "json" ? Format::Json : Format::Text;
  cmd.method = method == "general" ? Method::General : Method::Geometric;
  cmd.trace = trace;
  cmd.oracle_verb = oracle_verb;
  cmd.margin = margin;

  if (cmd.verb != Verb::Solve) {
    try {
      if (!input.empty()) {
        if (!f.empty() || !g.empty() || !b.empty()) throw UsageError("use either --input or --f/--g/--b");
        std::ifstream in(input);
        if (!in) throw UsageError("cannot read '" + input + "'");
        cmd.ineq = inequality_from_json(json::parse(in));
      } else if (!f.empty() || !g.empty() || !b.empty()) {
        if (f.empty() || g.empty() || b.empty()) throw UsageError("--f, --g and --b go together");
        auto fv = parse_rational_list(f);
        auto gv = parse_rational_list(g);
        Rational bv;
        try {
          bv = Rational::parse(b);
        } catch (const std::exception&) {
          throw UsageError("malformed modulus '" + b + "'");
        }
        cmd.ineq = normalize(fv, gv, bv);
      }
    } catch (const UsageError&) {
      throw;
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
    if (!cmd.ineq) throw UsageError("an inequality is required (--f/--g/--b or --input)");
    if (cmd.verb == Verb::Gens && cmd.method == Method::Geometric && cmd.ineq->dim() != 2)
      throw UsageError("--method geometric needs p = 2; use --method general");
    if (cmd.trace && cmd.method != Method::General) throw UsageError("--trace needs --method general");
  }
  if (!point.empty()) {
    auto c = parse_int_list(point);
    if (c.size() > kMaxDim) throw UsageError("point dimension out of range");
    cmd.point = Point(std::span<const std::int64_t>(c));
  }
  if (!window.empty()) {
    cmd.window = parse_int_list(window);
    if (std::any_of(cmd.window.begin(), cmd.window.end(), [](auto v) { return v < 0; }))
      throw UsageError("window bounds must be non-negative");
  }

  if (cmd.verb == Verb::Solve) {
    if (!cone.empty()) {
      if (!eqs.empty() || !congs.empty() || !ges.empty()) throw UsageError("--cone excludes other constraints");
      cmd.cone = form_of(cone);
    } else {
      DiophSystem sys;
      auto note_dim = [&](const LinearForm& l) {
        if (sys.dim == 0) sys.dim = l.dim();
        if (l.dim() != sys.dim) throw UsageError("constraints have different lengths");
      };
      for (const auto& e : eqs) {
        auto parts = split(e, ':');
        if (parts.size() != 2) throw UsageError("--eq expects coeffs:target");
        sys.equalities.push_back({form_of(parts[0]), parse_int_list(parts[1]).at(0)});
        note_dim(sys.equalities.back().form);
      }
      for (const auto& c : congs) {
        auto parts = split(c, ':');
        if (parts.size() != 3) throw UsageError("--cong expects coeffs:residue:modulus");
        sys.congruences.push_back({form_of(parts[0]), parse_int_list(parts[1]).at(0), parse_int_list(parts[2]).at(0)});
        note_dim(sys.congruences.back().form);
      }
      for (const auto& l : ges) {
        auto parts = split(l, ':');
        if (parts.size() != 2) throw UsageError("--ge expects coeffs:bound");
        sys.lower_bounds.push_back({form_of(parts[0]), parse_int_list(parts[1]).at(0)});
        note_dim(sys.lower_bounds.back().form);
      }
      try {
        sys.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      cmd.system = std::move(sys);
    }
  }
  return cmd;
}

RunResult run(const Command& cmd) {
  RunResult r;
  try {
    switch (cmd.verb) {
      case Verb::Gens: r.out = run_gens(cmd); break;
      case Verb::Membership: r.out = run_membership(cmd); break;
      case Verb::Frobenius: r.out = run_frobenius(cmd); break;
      case Verb::Apery: r.out = run_apery(cmd); break;
      case Verb::Properties: r.out = run_properties(cmd); break;
      case Verb::Solve: r.out = run_solve(cmd); break;
      case Verb::Oracle: r.out = run_oracle(cmd); break;
    }
  } catch (const UsageError& e) {
    r.status = 2;
    r.err = std::string("usage error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    r.status = 1;
    r.err = std::string("error: ") + e.what() + "\n";
  }
  return r;
}

RunResult execute(const std::vector<std::string>& args) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const HelpRequested& e) {
    return {0, e.what(), ""};
  } catch (const UsageError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  }
  if (const char* cap = std::getenv("PROPMOD_CAP")) {
    try {
      auto v = parse_int(cap);
      if (v <= 0) throw std::invalid_argument("non-positive");
      cmd.cap = static_cast<std::size_t>(narrow(v));
    } catch (const std::exception&) {
      return {2, "", "PROPMOD_CAP must be a positive integer\n"};
    }
  }
  return run(cmd);
}

}  // namespace propmod::cli
