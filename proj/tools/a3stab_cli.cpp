#include "a3stab/atlas.hpp"
#include "a3stab/checks.hpp"
#include "a3stab/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace a3stab;

namespace {

struct Run {
  double tol = 1e-9;
  std::uint64_t seed = 1;
  int samples = 100;
  std::string format;
  std::string out;
};

void emit(const Run& run, const std::string& text) {
  if (run.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(run.out);
  if (!f) throw InputError("cannot write " + run.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string fmt(const Run& run, const std::string& dflt) { return run.format.empty() ? dflt : run.format; }

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw InputError("format '" + f + "' not supported here");
}

json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

PhaseWindow parse_window(const std::string& s) {
  PhaseWindow w;
  char comma = 0;
  std::istringstream in(s);
  if (!(in >> w.lo >> comma >> w.hi) || comma != ',' || !(w.lo < w.hi))
    throw InputError("window must be lo,hi with lo < hi: '" + s + "'");
  in >> std::ws;
  if (!in.eof()) throw InputError("trailing characters in window '" + s + "'");
  return w;
}

std::string mismatches(const std::vector<std::string>& d) {
  std::string s;
  for (const auto& x : d) s += "MISMATCH " + x + "\n";
  return s;
}

int cmd_tables(const Run& run, const std::string& which, bool diff) {
  if (diff) {
    std::vector<std::string> d;
    if (which == "exc") d = diff_exc(load_reference("table1.json"));
    else if (which == "alpha" || which == "ineq") d = diff_alpha_ineq(load_reference("table2.json"));
    else d = diff_facets(load_reference("table3.json"), std::max(10, run.samples / 10), run.seed);
    emit(run, d.empty() ? "tables " + which + ": matches reference\n" : mismatches(d));
    return d.empty() ? 0 : 1;
  }
  json t;
  if (which == "exc") t = table_exc();
  else if (which == "alpha") t = table_alpha();
  else if (which == "ineq") t = table_ineq();
  else t = table_facets(std::max(10, run.samples / 10), run.seed);
  const std::string f = fmt(run, "json");
  require_format(f, {"json", "csv"});
  emit(run, f == "csv" ? table_csv(t) : t.dump(2));
  return 0;
}

int cmd_graph(const Run& run) {
  const std::string f = fmt(run, "dot");
  require_format(f, {"dot", "json"});
  emit(run, f == "dot" ? mutation_graph_dot() : mutation_graph_json().dump(2));
  return 0;
}

int cmd_lift(const Run& run, const std::string& charge, int max_sum) {
  const CentralCharge z = parse_charge(charge);
  const auto lifts = all_lifts(z, max_sum, run.tol);
  if (lifts.empty()) {
    std::cerr << "no lift found with |n| <= " << max_sum << "\n";
    return 1;
  }
  const std::string f = fmt(run, "json");
  require_format(f, {"json", "csv"});
  if (f == "csv") {
    std::ostringstream o;
    o.precision(12);
    o << "chart,p1,p2,p3,phi1,phi2,phi3,m1,m2,m3\n";
    for (const auto& l : lifts) {
      o << l.point.chart;
      for (int i = 0; i < 3; ++i) o << ',' << l.pvec(i);
      for (int i = 0; i < 3; ++i) o << ',' << l.point.phi(i);
      for (int i = 0; i < 3; ++i) o << ',' << l.point.m(i);
      o << '\n';
    }
    emit(run, o.str());
    return 0;
  }
  json j = json::array();
  for (const auto& l : lifts) j.push_back(to_json(l));
  emit(run, json{{"charge", charge}, {"hyperplanes", hyperplane_id(z, run.tol)}, {"lifts", j}}.dump(2));
  return 0;
}

StabPoint start_point(const ChargePath& path, const std::string& start_file, double tol) {
  if (!start_file.empty()) return point_from_json(read_json_file(start_file));
  return surjectivity_lift(path.at(0), tol).point;
}

int cmd_path(const Run& run, const std::string& file, const std::string& start_file) {
  const ChargePath path = path_from_json(read_json_file(file));
  const StabPoint start = start_point(path, start_file, run.tol);
  LiftOptions opt;
  opt.tol = run.tol;
  const LiftTrace tr = lift_path(path, start, opt);
  const std::string f = fmt(run, "json");
  require_format(f, {"json", "csv", "svg"});
  if (f == "csv") emit(run, trace_csv(tr));
  else if (f == "svg") emit(run, svg_timeline(tr));
  else emit(run, to_json(tr).dump(2));
  return tr.status == TraceStatus::Ambiguous ? 1 : 0;
}

int cmd_fiber(const Run& run, const std::string& charge, const std::string& window) {
  const CentralCharge z = parse_charge(charge);
  const PhaseWindow w = parse_window(window);
  const auto pts = fiber(z, w, run.tol);
  const std::string f = fmt(run, "json");
  require_format(f, {"json", "csv"});
  if (f == "csv") {
    std::ostringstream o;
    o.precision(12);
    o << "chart,phi1,phi2,phi3,m1,m2,m3\n";
    for (const auto& p : pts) {
      o << p.chart;
      for (int i = 0; i < 3; ++i) o << ',' << p.phi(i);
      for (int i = 0; i < 3; ++i) o << ',' << p.m(i);
      o << '\n';
    }
    emit(run, o.str());
    return 0;
  }
  json j = json::array();
  for (const auto& p : pts) j.push_back(to_json(p));
  emit(run, json{{"charge", charge}, {"window", {w.lo, w.hi}}, {"size", pts.size()}, {"points", j}}.dump(2));
  return 0;
}

int cmd_monodromy(const Run& run, const std::string& file, const std::string& window) {
  const ChargePath loop = path_from_json(read_json_file(file));
  if ((loop.vertices.front() - loop.vertices.back()).norm() > 1e-12)
    throw InputError("monodromy needs a closed path (first point equal to last)");
  if (auto h = first_hyperplane_hit(loop, run.tol))
    throw InputError("loop meets L" + std::to_string(h->index) + " at t=" + std::to_string(h->t));
  const PhaseWindow w = parse_window(window);
  const auto fib = fiber(loop.vertices.front(), w, run.tol);
  LiftOptions opt;
  opt.tol = run.tol;
  const auto perm = monodromy_permutation(loop, fib, opt);
  require_format(fmt(run, "json"), {"json"});
  json pts = json::array();
  for (const auto& p : fib) pts.push_back(to_json(p));
  int fixed = 0, left = 0;
  for (size_t k = 0; k < perm.size(); ++k) {
    fixed += perm[k] == int(k);
    left += perm[k] < 0;
  }
  emit(run, json{{"window", {w.lo, w.hi}},
                 {"fiber", pts},
                 {"permutation", perm},
                 {"fixed", fixed},
                 {"left_window", left}}
                .dump(2));
  return 0;
}

int cmd_plot(const Run& run, const std::string& charge, const std::string& file, const std::string& start,
             const std::string& trace) {
  require_format(fmt(run, "svg"), {"svg"});
  if (charge.empty() + file.empty() + trace.empty() != 2)
    throw InputError("plot needs exactly one of --charge, --file, --trace");
  if (!trace.empty()) {
    emit(run, svg_timeline(trace_from_json(read_json_file(trace))));
    return 0;
  }
  if (!charge.empty()) {
    emit(run, svg_rays(parse_charge(charge)));
    return 0;
  }
  const ChargePath path = path_from_json(read_json_file(file));
  LiftOptions opt;
  opt.tol = run.tol;
  emit(run, svg_timeline(lift_path(path, start_point(path, start, run.tol), opt)));
  return 0;
}

int cmd_check(const Run& run, const std::string& suite) {
  SuiteOptions opt;
  opt.samples = run.samples;
  opt.seed = run.seed;
  opt.tol = run.tol;
  const auto results = run_suite(suite, opt);
  std::ostringstream o;
  bool all = true;
  for (const auto& r : results) {
    all = all && r.ok;
    o << (r.ok ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) o << " (" << r.detail << ")";
    o << '\n';
  }
  emit(run, o.str());
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Charts, lifts and checks for stability conditions on D^b(A3)"};
  app.require_subcommand(1);
  Run run;
  app.add_option("--tol", run.tol, "numerical tolerance")->check(CLI::PositiveNumber);
  app.add_option("--seed", run.seed, "RNG seed for sampled computations");
  app.add_option("--samples", run.samples, "sample count for suites and census")->check(CLI::PositiveNumber);
  app.add_option("--format", run.format, "json|csv|svg|dot")
      ->check(CLI::IsMember({"json", "csv", "svg", "dot"}));
  app.add_option("--out", run.out, "output file (default stdout)");

  std::string which, charge, file, start, trace, window = "-1,2", suite = "all";
  bool diff = false;
  int max_sum = 6;

  auto* tables = app.add_subcommand("tables", "computed tables, optionally diffed against the bundled ones");
  tables->add_option("which", which)->required()->check(CLI::IsMember({"exc", "alpha", "ineq", "facets"}));
  tables->add_flag("--diff", diff, "compare with data/reference, exit 1 on mismatch");

  auto* graph = app.add_subcommand("graph", "mutation graph");

  auto* lift = app.add_subcommand("lift", "all lifts of a central charge");
  lift->add_option("--charge", charge, "Z(S1),Z(S2),Z(S3)")->required();
  lift->add_option("--max-sum", max_sum, "bound on |n| for even shifts")->check(CLI::NonNegativeNumber);

  auto* path = app.add_subcommand("path", "lift a charge path");
  path->add_option("--file", file, "path json")->required();
  path->add_option("--start", start, "start point json (default: surjectivity lift)");

  auto* fib = app.add_subcommand("fiber", "windowed fiber over a charge");
  fib->add_option("--charge", charge)->required();
  fib->add_option("--window", window, "lo,hi phase window");

  auto* mono = app.add_subcommand("monodromy", "permutation of a windowed fiber around a loop");
  mono->add_option("--file", file, "closed path json")->required();
  mono->add_option("--window", window, "lo,hi phase window");

  auto* plot = app.add_subcommand("plot", "svg of charge rays or of a lifted path");
  plot->add_option("--charge", charge);
  plot->add_option("--file", file, "path json to lift");
  plot->add_option("--start", start, "start point json for --file");
  plot->add_option("--trace", trace, "trace json written by path");

  auto* check = app.add_subcommand("check", "run invariant suites");
  check->add_option("--suite", suite)->check(CLI::IsMember({"all", "repcore", "exccol", "charts", "engine", "atlas"}));

  // options after the subcommand name are accepted too
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*tables) return cmd_tables(run, which, diff);
    if (*graph) return cmd_graph(run);
    if (*lift) return cmd_lift(run, charge, max_sum);
    if (*path) return cmd_path(run, file, start);
    if (*fib) return cmd_fiber(run, charge, window);
    if (*mono) return cmd_monodromy(run, file, window);
    if (*plot) return cmd_plot(run, charge, file, start, trace);
    if (*check) return cmd_check(run, suite);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ZeroCharge& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const NonGenericCharge& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const LiftFailed& e) {
    std::cerr << "lift failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
