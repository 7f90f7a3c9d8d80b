#include "job.hpp"

#include <CLI11.hpp>

#include <sys/resource.h>

#include <cstdlib>
#include <iostream>

namespace {

// TATE_MEMORY_LIMIT_MB caps the address space; allocation failures then exit with 1.
bool apply_memory_limit() {
  const char* env = std::getenv("TATE_MEMORY_LIMIT_MB");
  if (!env || !*env) return true;
  char* end = nullptr;
  const unsigned long long mb = std::strtoull(env, &end, 10);
  if (*end != '\0' || mb == 0) {
    std::cerr << "configuration error: TATE_MEMORY_LIMIT_MB must be a positive integer\n";
    return false;
  }
  rlimit lim{};
  lim.rlim_cur = lim.rlim_max = rlim_t(mb) * 1024 * 1024;
  if (setrlimit(RLIMIT_AS, &lim) != 0) std::cerr << "warning: could not apply memory limit\n";
  return true;
}

void add_common(CLI::App* c, tatecli::JobConfig& job) {
  c->add_option("--prime,-p", job.prime, "prime p of the valuation")->default_val(2);
  c->add_option("--radii,-r", job.radii, "log-radii, comma separated (inf allowed); zeros by default");
  c->add_option("--order", job.order, "tie-break monomial order: lex, grevlex, block(k;A;B)")->default_val("grevlex");
  c->add_option("--vars", job.vars, "variable names, comma separated");
  c->add_option("--input,-i", job.input_file, "generator file")->check(CLI::ExistingFile);
  c->add_option("--system", job.system, "built-in system, e.g. katsura:3 or cyclic:5");
  c->add_option("--gens,-g", job.gens, "inline generators separated by ';'");
  c->add_option("--timeout", job.timeout_seconds, "wall-clock limit in seconds (0 = none)");
  c->add_option("--step-limit", job.step_limit, "reduction step limit per weak normal form (0 = none)");
}

}  // namespace

int main(int argc, char** argv) {
  if (!apply_memory_limit()) return 2;

  tatecli::JobConfig job;
  std::string format = "text";

  CLI::App app{"Groebner bases over Tate algebras with Mora's weak normal form"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}))->default_val("text");
  app.add_option("--stats-file", job.stats_file, "write JSON statistics here");
  app.add_flag("--timings", job.timings, "include wall time in the report");

  auto* gb = app.add_subcommand("gb", "Groebner basis of the generators");
  add_common(gb, job);
  gb->add_option("--s-radii", job.s_radii, "reduce overconvergently with these radii (s >= r)");
  gb->add_option("--budget", job.budget, "valuation budget of overconvergent reductions");

  auto* wnf = app.add_subcommand("wnf", "weak normal form of --f modulo the generators");
  add_common(wnf, job);
  wnf->add_option("--f", job.f, "dividend")->required();
  wnf->add_option("--s-radii", job.s_radii, "reduce overconvergently with these radii (s >= r)");
  wnf->add_option("--budget", job.budget, "valuation budget of overconvergent reductions");

  auto* elim = app.add_subcommand("eliminate", "intersect the ideal with the algebra without --var");
  add_common(elim, job);
  elim->add_option("--var", job.variable, "variable to eliminate")->required();
  elim->add_option("--r0", job.r0, "finite log-radius for the eliminated variable (default +inf)");

  auto* inter = app.add_subcommand("intersect", "intersection of two ideals");
  add_common(inter, job);
  inter->add_option("--input2", job.input_file2, "second generator file")->check(CLI::ExistingFile);
  inter->add_option("--gens2", job.gens2, "second ideal, inline");
  inter->add_option("--r0", job.r0, "finite log-radius for the auxiliary variable");

  auto* colon = app.add_subcommand("colon", "ideal quotient by --f or by a second ideal");
  add_common(colon, job);
  colon->add_option("--f", job.f, "polynomial divisor");
  colon->add_option("--input2", job.input_file2, "second generator file")->check(CLI::ExistingFile);
  colon->add_option("--gens2", job.gens2, "second ideal, inline");
  colon->add_option("--r0", job.r0, "finite log-radius for the auxiliary variable");

  auto* sat = app.add_subcommand("saturate", "saturation by --f");
  add_common(sat, job);
  sat->add_option("--f", job.f, "polynomial")->required();
  sat->add_option("--r0", job.r0, "finite log-radius for the auxiliary variable");

  auto* fan = app.add_subcommand("fan", "sample initial ideals over a grid of radii");
  add_common(fan, job);
  fan->add_option("--lo", job.grid_lo, "lower corner, one value or one per variable")->required();
  fan->add_option("--hi", job.grid_hi, "upper corner")->required();
  fan->add_option("--step", job.grid_step, "grid step")->required();
  fan->add_option("--check-step", job.check_step, "also check the candidate universal basis on this finer grid");

  auto* bench = app.add_subcommand("bench", "time Groebner bases of built-in systems");
  bench->add_option("--prime,-p", job.prime, "prime p")->default_val(2);
  bench->add_option("--order", job.order, "tie-break monomial order")->default_val("grevlex");
  bench->add_option("--radii,-r", job.radii, "log-radii (zeros by default)");
  bench->add_option("--system", job.bench_systems, "systems to run (default katsura:3 cyclic:5)");
  bench->add_option("--expect-timeout", job.expect_timeout, "systems whose timeout is the expected outcome")
      ->default_str("cyclic:5");
  bench->add_option("--timeout", job.timeout_seconds, "seconds per system")->default_val(60.0);
  bench->add_option("--step-limit", job.step_limit, "reduction step limit per weak normal form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  job.subcommand = app.get_subcommands().front()->get_name();
  job.format = format == "json" ? tatecli::OutputFormat::Json : tatecli::OutputFormat::Text;
  if (job.subcommand == "bench" && bench->count("--expect-timeout") == 0) job.expect_timeout = {"cyclic:5"};
  return tatecli::run(job);
}
