#include "job.hpp"

#include "tate/fan.hpp"
#include "tate/ideals.hpp"
#include "tate/mora.hpp"
#include "tate/overconv.hpp"
#include "tate/poly_io.hpp"
#include "tate/systems.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <new>
#include <sstream>

namespace tatecli {

using tate::Polynomial;
using Json = nlohmann::ordered_json;

namespace {

// Errors of the computation itself map to exit code 1.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(item);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Everything a command needs: variables, one or two generator lists and the order.
struct Context {
  std::vector<std::string> variables;
  std::vector<Polynomial> first;
  std::vector<Polynomial> second;
  bool has_second = false;
  std::vector<std::string> warnings;
  tate::TateOrder order{tate::LogRadii{}, tate::MonomialOrder::grevlex(), tate::PrimeContext(2)};

  std::size_t index_of(const std::string& name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) throw ConfigError("unknown variable '" + name + "'");
    return std::size_t(it - variables.begin());
  }
  Polynomial parse(const std::string& text) const { return tate::parse_polynomial(text, variables); }
  std::string show(const Polynomial& f) const { return tate::format_polynomial(f, variables, &order); }
  Json show_all(const std::vector<Polynomial>& G) const {
    Json a = Json::array();
    for (const auto& g : G) a.push_back(show(g));
    return a;
  }
};

std::optional<std::string> source_text(const std::optional<std::string>& file, const std::optional<std::string>& inline_text) {
  if (file) return read_file(*file);
  return inline_text;
}

tate::TateOrder make_order(const JobConfig& job, std::size_t nvars) {
  tate::PrimeContext p(job.prime);
  tate::LogRadii r = job.radii ? tate::parse_log_radii(*job.radii) : tate::zero_radii(nvars);
  if (r.size() != nvars) {
    throw ConfigError("radii has " + std::to_string(r.size()) + " entries for " + std::to_string(nvars) +
                      " variables");
  }
  return tate::TateOrder(std::move(r), tate::MonomialOrder::parse(job.order), p);
}

Context load(const JobConfig& job) {
  Context ctx;
  std::optional<std::vector<std::string>> declared;
  if (job.vars) declared = split_list(*job.vars);

  if (job.system) {
    tate::PolynomialSystem sys = tate::system_by_name(*job.system);
    ctx.variables = sys.variables;
    ctx.first = sys.equations;
  } else {
    auto a = source_text(job.input_file, job.gens);
    if (!a) throw ConfigError("no generators: use --input, --gens or --system");
    auto b = source_text(job.input_file2, job.gens2);
    if (!declared) {
      // Parse everything once so both ideals and --f share one variable list.
      std::string all = *a;
      if (b) all += "\n" + *b;
      if (job.f) all += "\n" + *job.f;
      declared = tate::parse_input(all).variables;
    }
    tate::ParsedInput pa = tate::parse_input(*a, declared);
    ctx.variables = pa.variables;
    ctx.first = std::move(pa.polynomials);
    ctx.warnings = pa.warnings;
    if (b) {
      tate::ParsedInput pb = tate::parse_input(*b, declared);
      ctx.second = std::move(pb.polynomials);
      ctx.has_second = true;
      ctx.warnings.insert(ctx.warnings.end(), pb.warnings.begin(), pb.warnings.end());
    }
  }
  ctx.order = make_order(job, ctx.variables.size());
  return ctx;
}

tate::GroebnerOptions gb_options(const JobConfig& job, const tate::Deadline* deadline) {
  tate::GroebnerOptions o;
  o.deadline = deadline;
  o.step_limit = job.step_limit;
  return o;
}

tate::IdealOptions ideal_options(const JobConfig& job, const tate::Deadline* deadline) {
  tate::IdealOptions o;
  o.gb = gb_options(job, deadline);
  if (job.r0) o.mode = tate::EliminationMode::finite(tate::Rational::parse(*job.r0));
  return o;
}

std::optional<tate::OverconvParams> overconv_params(const JobConfig& job, const Context& ctx) {
  if (!job.s_radii) return std::nullopt;
  tate::OverconvParams P(ctx.order, tate::parse_log_radii(*job.s_radii));
  if (job.budget) P.budget = tate::Rational::parse(*job.budget);
  P.validate();
  return P;
}

Json gb_stats(const tate::GroebnerStats& s) {
  return Json{{"pairs", s.pairs},
              {"zero_reductions", s.zero_reductions},
              {"budget_zero_reductions", s.budget_zero_reductions},
              {"additions", s.additions},
              {"wnf_calls", s.wnf.calls},
              {"reduction_steps", s.wnf.steps},
              {"max_t_size", s.wnf.max_t_size}};
}

Json lt_set_json(const tate::LtSet& lts, const Context& ctx) {
  Json a = Json::array();
  for (const auto& c : lts) {
    a.push_back(Json{{"monomial", tate::format_term(tate::Term{tate::Rational(1), c.mono}, ctx.variables)},
                     {"valuation", c.valuation}});
  }
  return a;
}

struct Outcome {
  Json report;
  Json stats = Json::object();
  int exit_code = 0;
};

Outcome cmd_gb(const JobConfig& job, const Context& ctx, const tate::Deadline* dl) {
  Outcome out;
  tate::GroebnerBasis gb(ctx.order);
  if (auto P = overconv_params(job, ctx)) {
    gb = tate::groebner_overconv(ctx.first, *P, gb_options(job, dl));
  } else {
    gb = tate::groebner(ctx.first, ctx.order, gb_options(job, dl));
  }
  const tate::GroebnerStats stats = gb.stats;
  tate::GroebnerBasis minimal = tate::minimalize(gb);
  std::vector<Polynomial> lts;
  for (const auto& g : minimal.elements) lts.push_back(Polynomial::from_term(g.nvars(), tate::leading_term(g, ctx.order)));
  out.report["basis"] = ctx.show_all(minimal.elements);
  out.report["leading_terms"] = ctx.show_all(lts);
  out.stats = gb_stats(stats);
  return out;
}

Outcome cmd_wnf(const JobConfig& job, const Context& ctx, const tate::Deadline* dl) {
  if (!job.f) throw ConfigError("wnf needs --f");
  const Polynomial f = ctx.parse(*job.f);
  Outcome out;
  tate::WnfStats ws;
  tate::WnfResult res;
  if (auto P = overconv_params(job, ctx)) {
    tate::OverconvOptions oo;
    oo.deadline = dl;
    oo.stats = &ws;
    oo.trace = false;
    tate::OverconvOutcome oc = tate::wnf_overconv(f, ctx.first, *P, oo);
    out.report["outcome"] = oc.kind == tate::OverconvOutcome::Kind::Remainder ? "remainder" : "reduced_to_zero_at_budget";
    res = std::move(oc.result);
  } else {
    tate::WnfOptions wo;
    wo.deadline = dl;
    wo.step_limit = job.step_limit;
    wo.stats = &ws;
    res = tate::wnf_with_cofactors(f, ctx.first, ctx.order, wo);
    out.report["certificate_ok"] = tate::check_certificate(f, ctx.first, res, ctx.order).ok();
  }
  out.report["remainder"] = ctx.show(res.remainder);
  out.report["unit"] = ctx.show(res.unit);
  out.report["cofactors"] = ctx.show_all(res.cofactors);
  out.stats = Json{{"reduction_steps", ws.steps}, {"max_t_size", ws.max_t_size}};
  return out;
}

Json ideal_report(const tate::IdealPresentation& I, const std::vector<std::string>& variables) {
  Json a = Json::array();
  for (const auto& g : I.generators) a.push_back(tate::format_polynomial(g, variables, &I.order));
  return Json{{"variables", variables}, {"generators", a}};
}

Outcome cmd_eliminate(const JobConfig& job, const Context& ctx, const tate::Deadline* dl) {
  if (!job.variable) throw ConfigError("eliminate needs --var");
  const std::size_t v = ctx.index_of(*job.variable);
  tate::IdealPresentation I(ctx.order, ctx.first);
  tate::IdealPresentation E = tate::eliminate(I, v, ideal_options(job, dl));
  std::vector<std::string> rest = ctx.variables;
  rest.erase(rest.begin() + std::ptrdiff_t(v));
  Outcome out;
  out.report["result"] = ideal_report(E, rest);
  return out;
}

Outcome cmd_intersect(const JobConfig& job, const Context& ctx, const tate::Deadline* dl) {
  if (!ctx.has_second) throw ConfigError("intersect needs a second ideal (--gens2 or --input2)");
  tate::IdealPresentation I(ctx.order, ctx.first), J(ctx.order, ctx.second);
  Outcome out;
  out.report["result"] = ideal_report(tate::intersect(I, J, ideal_options(job, dl)), ctx.variables);
  return out;
}

Outcome cmd_colon(const JobConfig& job, const Context& ctx, const tate::Deadline* dl) {
  tate::IdealPresentation I(ctx.order, ctx.first);
  Outcome out;
  if (job.f) {
    out.report["result"] = ideal_report(tate::colon(I, ctx.parse(*job.f), ideal_options(job, dl)), ctx.variables);
  } else if (ctx.has_second) {
    tate::IdealPresentation J(ctx.order, ctx.second);
    out.report["result"] = ideal_report(tate::colon(I, J, ideal_options(job, dl)), ctx.variables);
  } else {
    throw ConfigError("colon needs --f or a second ideal");
  }
  return out;
}

Outcome cmd_saturate(const JobConfig& job, const Context& ctx, const tate::Deadline* dl) {
  if (!job.f) throw ConfigError("saturate needs --f");
  tate::IdealPresentation I(ctx.order, ctx.first);
  Outcome out;
  out.report["result"] = ideal_report(tate::saturate(I, ctx.parse(*job.f), ideal_options(job, dl)), ctx.variables);
  return out;
}

std::vector<tate::Rational> rationals(const std::string& text, std::size_t n, const char* what) {
  std::vector<tate::Rational> out;
  for (const auto& s : split_list(text)) out.push_back(tate::Rational::parse(s));
  if (out.size() == 1 && n > 1) out.assign(n, out.front());
  if (out.size() != n) throw ConfigError(std::string(what) + " needs 1 or " + std::to_string(n) + " entries");
  return out;
}

std::vector<tate::LogRadii> grid(const JobConfig& job, std::size_t n, const std::optional<std::string>& step) {
  if (!job.grid_lo || !job.grid_hi || !step) throw ConfigError("fan needs --lo, --hi and --step");
  auto steps = rationals(*step, n, "--step");
  for (const auto& s : steps) {
    if (s <= tate::Rational(0)) throw ConfigError("grid steps must be positive");
  }
  return tate::grid_samples(rationals(*job.grid_lo, n, "--lo"), rationals(*job.grid_hi, n, "--hi"), steps);
}

Outcome cmd_fan(const JobConfig& job, const Context& ctx, const tate::Deadline* dl) {
  const std::size_t n = ctx.variables.size();
  const auto samples = grid(job, n, job.grid_step);
  tate::IdealPresentation I(ctx.order, ctx.first);
  const tate::GroebnerOptions go = gb_options(job, dl);
  tate::FanReport fan = tate::sample_initial_ideals(I, samples, go);

  Outcome out;
  Json entries = Json::array();
  for (const auto& e : fan.entries) {
    Json reps = Json::array();
    for (const auto& r : e.representatives) reps.push_back(tate::to_string(r));
    entries.push_back(Json{{"lt_set", lt_set_json(e.lt_set, ctx)}, {"radii", reps}});
  }
  out.report["samples"] = samples.size();
  out.report["distinct_lt_sets"] = fan.entries.size();
  out.report["entries"] = entries;

  if (job.check_step) {
    auto G = tate::candidate_universal_gb(I, samples, go);
    auto refined = grid(job, n, job.check_step);
    auto check = tate::check_universal(G, refined, ctx.order.tiebreak(), ctx.order.prime());
    Json u{{"candidate", ctx.show_all(G)}, {"refined_samples", refined.size()}, {"passes", check.ok}};
    if (check.failing) u["failing_radii"] = tate::to_string(*check.failing);
    out.report["universal"] = u;
  }
  return out;
}

Outcome cmd_bench(const JobConfig& job) {
  Outcome out;
  std::vector<std::string> systems = job.bench_systems;
  if (systems.empty()) systems = {"katsura:3", "cyclic:5"};
  Json rows = Json::array();
  for (const auto& name : systems) {
    tate::PolynomialSystem sys = tate::system_by_name(name);
    const tate::TateOrder order = make_order(job, sys.variables.size());
    const bool expected = std::find(job.expect_timeout.begin(), job.expect_timeout.end(), name) != job.expect_timeout.end();
    std::optional<tate::Deadline> dl;
    if (job.timeout_seconds > 0) dl.emplace(std::chrono::duration_cast<tate::Deadline::Clock::duration>(
        std::chrono::duration<double>(job.timeout_seconds)));
    tate::GroebnerOptions go;
    go.deadline = dl ? &*dl : nullptr;
    go.step_limit = job.step_limit;

    Json row{{"system", name}};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      tate::GroebnerBasis gb = tate::groebner(sys.equations, order, go);
      row["status"] = "ok";
      row["basis_size"] = tate::minimalize(gb).elements.size();
      row["stats"] = gb_stats(gb.stats);
    } catch (const tate::TimeoutError&) {
      row["status"] = expected ? "timeout (expected)" : "timeout";
      if (!expected) out.exit_code = 1;
    } catch (const tate::StepLimitExceeded& e) {
      row["status"] = "step limit";
      row["detail"] = e.what();
      out.exit_code = 1;
    }
    row["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rows.push_back(row);
  }
  out.report["timeout_s"] = job.timeout_seconds;
  out.report["runs"] = rows;
  return out;
}

void print_text(std::ostream& os, const Json& j, const std::string& indent) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_string(); })) {
      os << indent << it.key() << " (" << v.size() << "):\n";
      for (const auto& x : v) os << indent << "  " << x.get<std::string>() << "\n";
    } else if (v.is_array()) {
      os << indent << it.key() << " (" << v.size() << "):\n";
      for (const auto& x : v) {
        os << indent << "  -\n";
        print_text(os, x, indent + "    ");
      }
    } else if (v.is_object()) {
      os << indent << it.key() << ":\n";
      print_text(os, v, indent + "  ");
    } else if (v.is_string()) {
      os << indent << it.key() << ": " << v.get<std::string>() << "\n";
    } else {
      os << indent << it.key() << ": " << v.dump() << "\n";
    }
  }
}

Outcome dispatch(const JobConfig& job, const Context& ctx, const tate::Deadline* dl) {
  const std::string& c = job.subcommand;
  if (c == "gb") return cmd_gb(job, ctx, dl);
  if (c == "wnf") return cmd_wnf(job, ctx, dl);
  if (c == "eliminate") return cmd_eliminate(job, ctx, dl);
  if (c == "intersect") return cmd_intersect(job, ctx, dl);
  if (c == "colon") return cmd_colon(job, ctx, dl);
  if (c == "saturate") return cmd_saturate(job, ctx, dl);
  if (c == "fan") return cmd_fan(job, ctx, dl);
  throw ConfigError("unknown subcommand " + c);
}

}  // namespace

int run(const JobConfig& job) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  Json head{{"command", job.subcommand}};

  if (job.subcommand == "bench") {
    try {
      out = cmd_bench(job);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  } else {
    Context ctx;
    try {
      ctx = load(job);
      overconv_params(job, ctx);
    } catch (const tate::ParseError& e) {
      std::cerr << "input error: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "configuration error: " << e.what() << "\n";
      return 2;
    }
    for (const auto& w : ctx.warnings) std::cerr << "warning: " << w << "\n";
    head["order"] = ctx.order.describe();
    head["variables"] = ctx.variables;
    head["generators"] = ctx.show_all(ctx.first);

    std::optional<tate::Deadline> dl;
    if (job.timeout_seconds > 0) dl.emplace(std::chrono::duration_cast<tate::Deadline::Clock::duration>(
        std::chrono::duration<double>(job.timeout_seconds)));
    try {
      out = dispatch(job, ctx, dl ? &*dl : nullptr);
    } catch (const ConfigError& e) {
      std::cerr << "configuration error: " << e.what() << "\n";
      return 2;
    } catch (const tate::ParseError& e) {
      std::cerr << "input error: " << e.what() << "\n";
      return 2;
    } catch (const std::bad_alloc&) {
      std::cerr << "error: out of memory\n";
      return 1;
    } catch (const std::exception& e) {
      std::cerr << "computation failed: " << e.what() << "\n";
      return 1;
    }
  }

  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Json report = head;
  for (auto it = out.report.begin(); it != out.report.end(); ++it) report[it.key()] = it.value();
  if (!out.stats.empty()) report["stats"] = out.stats;
  if (job.timings) report["wall_time_s"] = wall;

  if (job.format == OutputFormat::Json) {
    std::cout << report.dump(2) << "\n";
  } else {
    print_text(std::cout, report, "");
  }

  if (job.stats_file) {
    Json s = out.stats;
    s["command"] = job.subcommand;
    s["wall_time_s"] = wall;
    s["exit_code"] = out.exit_code;
    std::ofstream f(*job.stats_file);
    if (!f) {
      std::cerr << "cannot write " << *job.stats_file << "\n";
      return 2;
    }
    f << s.dump(2) << "\n";
  }
  return out.exit_code;
}

}  // namespace tatecli
