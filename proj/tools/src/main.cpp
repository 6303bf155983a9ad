#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "io.hpp"
#include "rigidify/errors.hpp"
#include "rigidify/verify.hpp"

namespace {

using namespace rigidify;
using namespace rigidify::cli;

constexpr int kOk = 0;
constexpr int kCheckFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Loaded load(RunConfig const& cfg) {
  if (cfg.fixture.has_value() == cfg.input.has_value()) {
    throw UsageError("give exactly one of --fixture or --input");
  }
  return cfg.fixture ? load_fixture(*cfg.fixture) : load_file(*cfg.input);
}

std::pair<VertexId, VertexId> endpoints(RunConfig const& cfg, Complex const& c) {
  if (!cfg.from || !cfg.to) {
    throw UsageError("--from and --to are required");
  }
  std::size_t const n = c.vertex_count();
  if (*cfg.from >= n || *cfg.to >= n) {
    throw UsageError("endpoint out of range: the complex has " + std::to_string(n) +
                     " vertices");
  }
  return {*cfg.from, *cfg.to};
}

MappingSpace space_for(RunConfig const& cfg, Loaded const& in) {
  auto const [a, b] = endpoints(cfg, in.get());
  if (cfg.bound) {
    return mapping_space_bounded(in.get(), a, b, *cfg.bound);
  }
  auto const verdict = is_ordered(in.get());
  if (!verdict) {
    throw NotOrdered(describe_not_ordered(in.get()) +
                         "; pass --bound to enumerate necklaces up to a size",
                     verdict.cycle);
  }
  return mapping_space(in.ordered(), a, b);
}

Json run_verify(RunConfig const& cfg, bool& ok) {
  auto const known = verify::suites();
  if (cfg.only && !cfg.only->empty()) {
    bool const numeric = cfg.only->find_first_not_of("0123456789") == std::string::npos;
    if (!numeric && std::find(known.begin(), known.end(), *cfg.only) == known.end()) {
      std::string names;
      for (auto const& s : known) {
        names += " " + s;
      }
      throw UsageError("unknown suite '" + *cfg.only + "'; known:" + names);
    }
  }
  auto const results = verify::run_checks(cfg.only.value_or(""));
  if (results.empty()) {
    throw UsageError("no check matches '" + cfg.only.value_or("") + "'");
  }
  Json out;
  out["command"] = "verify";
  Json checks = Json::array();
  std::size_t passed = 0;
  for (auto const& r : results) {
    Json entry;
    entry["id"] = r.id;
    entry["suite"] = r.suite;
    entry["title"] = r.title;
    entry["passed"] = r.passed;
    entry["detail"] = r.detail;
    entry["seconds"] = r.seconds;
    entry["line"] = verify::format_line(r);
    checks.push_back(std::move(entry));
    passed += r.passed ? 1 : 0;
  }
  out["checks"] = std::move(checks);
  out["passed"] = passed;
  out["total"] = results.size();
  ok = passed == results.size();
  return out;
}

Json run(RunConfig const& cfg, bool& ok) {
  ok = true;
  if (cfg.command == "verify") {
    return run_verify(cfg, ok);
  }
  if (cfg.command == "oracle") {
    if (cfg.n < 0 || cfg.n > 4 || cfg.levels < 0 || cfg.levels > 3) {
      throw UsageError("--n must be in [0,4] and --levels in [0,3]");
    }
    return oracle_report(cfg.n, cfg.levels, ok);
  }
  Loaded const in = load(cfg);
  if (cfg.command == "mapping-space") {
    return mapping_space_report(in.name, space_for(cfg, in));
  }
  if (cfg.command == "homology") {
    auto const space = space_for(cfg, in);
    std::string const target = "C(" + std::to_string(space.from) + "," +
                               std::to_string(space.to) + ")";
    auto report = homology_report(in.name, target, space.complex, cfg.dmax.value_or(-1));
    report["truncated"] = space.truncated;
    return report;
  }
  if (cfg.command == "categorify") {
    auto const cat = categorify(in.ordered());
    std::optional<CoherentNerve> nerve;
    std::optional<HornReport> horns;
    if (cfg.nmax) {
      nerve = coherent_nerve_truncated(cat, *cfg.nmax);
      int const dmax = cfg.dmax.value_or(std::min(*cfg.nmax, 3));
      if (dmax >= 2) {
        horns = inner_horn_check(nerve->as_levels(), dmax);
      }
    }
    return categorify_report(in.name, cat, nerve, horns);
  }
  throw UsageError("unknown command " + cfg.command);
}

void emit(RunConfig const& cfg, Json const& report) {
  std::string const text =
      cfg.format == Format::table ? render_table(report) : report.dump(2) + "\n";
  if (cfg.output) {
    std::ofstream out(*cfg.output, std::ios::binary);
    if (!out) {
      throw UsageError("cannot write " + cfg.output->string());
    }
    out << text;
  } else {
    std::cout << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigidification of finite simplicial sets via necklaces"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format;

  std::map<std::string, Format> const formats{{"json", Format::json},
                                              {"table", Format::table}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--output", cfg.output, "write the report to a file");
  };
  auto complex_input = [&](CLI::App* sub) {
    auto* fx = sub->add_option("--fixture", cfg.fixture,
                               "standard complex, e.g. simplex:3, boundary:3, horn:3:1, "
                               "two_triangles, simplex:1*simplex:1");
    auto* in = sub->add_option("--input", cfg.input, "JSON complex file")
                   ->check(CLI::ExistingFile);
    fx->excludes(in);
  };
  auto endpoints_opts = [&](CLI::App* sub) {
    sub->add_option("--from", cfg.from, "source vertex");
    sub->add_option("--to", cfg.to, "target vertex");
    sub->add_option("--bound", cfg.bound, "largest necklace vertex count (non-ordered input)")
        ->check(CLI::PositiveNumber);
  };

  auto* ms = app.add_subcommand("mapping-space", "enumerate the mapping space C(a,b)");
  complex_input(ms);
  endpoints_opts(ms);
  common(ms);

  auto* hom = app.add_subcommand("homology", "integral homology of C(a,b)");
  complex_input(hom);
  endpoints_opts(hom);
  hom->add_option("--dmax", cfg.dmax, "highest degree")->check(CLI::NonNegativeNumber);
  common(hom);

  auto* cat = app.add_subcommand("categorify", "hom spaces and composition of C(S)");
  complex_input(cat);
  cat->add_option("--nmax", cfg.nmax, "also build the coherent nerve up to this level")
      ->check(CLI::Range(0, 3));
  cat->add_option("--dmax", cfg.dmax, "inner horn check up to this dimension")
      ->check(CLI::Range(2, 4));
  common(cat);

  auto* ver = app.add_subcommand("verify", "run the acceptance checks");
  ver->add_option("--only", cfg.only, "suite name or check number");
  common(ver);

  auto* orc = app.add_subcommand("oracle", "comonad levels against chain counts");
  orc->add_option("--n", cfg.n, "size of [n]");
  orc->add_option("--levels", cfg.levels, "highest comonad level");
  common(orc);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (format.empty()) {
    format = cfg.command == "verify" ? "table" : "json";
  }
  cfg.format = formats.at(format);

  try {
    bool ok = true;
    Json const report = run(cfg, ok);
    emit(cfg, report);
    return ok ? kOk : kCheckFailure;
  } catch (NotOrdered const& e) {
    std::cerr << "error: complex is not ordered: " << e.what();
    if (!e.cycle().empty()) {
      std::cerr << "; witness cycle";
      for (auto v : e.cycle()) {
        std::cerr << " " << v;
      }
    }
    std::cerr << "\n";
    return kUsage;
  } catch (UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (InvalidInput const& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (ContractViolation const& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  }
}
