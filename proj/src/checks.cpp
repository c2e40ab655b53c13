#include "a3stab/checks.hpp"

#include "a3stab/atlas.hpp"
#include "a3stab/io.hpp"

#include <random>
#include <sstream>

namespace a3stab {

namespace {

// Hom between thin interval modules of 1 -> 2 -> 3: nonzero iff c <= a <= d <= b.
int hom_oracle(const Interval& m, const Interval& n) {
  return (n.lo <= m.lo && m.lo <= n.hi && n.hi <= m.hi) ? 1 : 0;
}

// Auslander-Reiten: Ext^1(M, N) = Hom(N, tau M); projectives end at vertex 3.
int ext_oracle(const Interval& m, const Interval& n) {
  if (m.hi == 3) return 0;
  return hom_oracle(n, {m.lo + 1, m.hi + 1});
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

void add(std::vector<CheckResult>& out, const std::string& name, bool ok, const std::string& detail = "") {
  out.push_back({name, ok, detail});
}

std::vector<CheckResult> repcore_suite() {
  std::vector<CheckResult> out;
  int bad_hom = 0, bad_ext = 0, bad_euler = 0;
  for (const auto& m : kIntervals)
    for (const auto& n : kIntervals) {
      const auto he = hom_ext(m, n);
      bad_hom += he.hom != hom_oracle(m, n);
      bad_ext += he.ext != ext_oracle(m, n);
      bad_euler += he.hom - he.ext != euler_form(m.dimvec(), n.dimvec());
    }
  add(out, "hom matches interval oracle on 36 pairs", !bad_hom, std::to_string(bad_hom) + " mismatches");
  add(out, "ext matches AR oracle on 36 pairs", !bad_ext, std::to_string(bad_ext) + " mismatches");
  add(out, "euler identity on 36 pairs", !bad_euler, std::to_string(bad_euler) + " failures");
  const Interval s12{1, 2}, s23{2, 3};
  add(out, "Hom^1(S12,S23) = 1", derived_hom_dim({s12, 0}, {s23, 0}, 1) == 1);
  add(out, "Hom^0(S23,S12) = 1", derived_hom_dim({s23, 0}, {s12, 0}, 0) == 1);
  int multi = 0;
  for (const auto& m : kIntervals)
    for (const auto& n : kIntervals) multi += derived_hom({m, 0}, {n, 0}).size() > 1;
  add(out, "Hom^* concentrated in one degree", !multi);
  return out;
}

std::vector<CheckResult> exccol_suite() {
  std::vector<CheckResult> out;
  const auto seqs = enumerate_sequences();
  const auto classes = araya_classes(seqs);
  std::ostringstream d;
  d << seqs.size() << " sequences / " << classes.size() << " classes";
  add(out, "sequence census", seqs.size() == 16 && classes.size() == 12, d.str());
  const auto diff = diff_graph(load_reference("mutation_graph.json"));
  add(out, "mutation graph equals reference", diff.empty(), join(diff));
  add(out, "mutation graph connected", mutation_graph().connected());
  int braid = 0, inverse = 0;
  for (const auto& s : seqs) {
    braid += !braid_relation_holds(s.objects);
    inverse += !left_right_inverse(s.objects, 1) + !left_right_inverse(s.objects, 2);
  }
  add(out, "braid relation on 16 sequences", !braid, std::to_string(braid) + " failures");
  add(out, "L_i R_i = id on 16 sequences", !inverse, std::to_string(inverse) + " failures");
  return out;
}

std::vector<CheckResult> charts_suite() {
  std::vector<CheckResult> out;
  const auto d1 = diff_exc(load_reference("table1.json"));
  add(out, "least Hom degrees and types equal reference", d1.empty(), join(d1));
  const auto d2 = diff_alpha_ineq(load_reference("table2.json"));
  add(out, "inequalities equal reference", d2.empty(), join(d2));
  int ext = 0;
  for (const auto& c : all_charts())
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        ext += !derived_hom({c.objects[j], 0}, {c.objects[i], 0}).empty();
  add(out, "chart collections have no backward Hom", !ext);
  return out;
}

std::vector<CheckResult> engine_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(opt.seed);
  int unstable = 0, not_identity = 0, bad_hn = 0;
  for (const auto& c : all_charts())
    for (int k = 0; k < opt.samples; ++k) {
      const StabPoint p = random_interior_point(c.label, rng);
      const Slicing s(p);
      for (int i = 0; i < 3; ++i) {
        const auto d = s.semistable_phase(c.objects[i]);
        if (!d || !d->stable || std::abs(d->phase - p.phi(i)) > 1e-9) ++unstable;
      }
      const auto q = membership_and_coords(p, c.label, opt.tol);
      if (!q || (q->phi - p.phi).cwiseAbs().maxCoeff() > 1e-9 || (q->m - p.m).cwiseAbs().maxCoeff() > 1e-9 * p.m.maxCoeff())
        ++not_identity;
      for (const auto& x : kIntervals) {
        const auto h = s.hn_filtration({x, 0});
        DimVector sum = DimVector::Zero();
        for (size_t r = 0; r < h.factors.size(); ++r) {
          sum += h.factors[r].klass;
          if (r && h.factors[r].phase >= h.factors[r - 1].phase) ++bad_hn;
        }
        if (sum != x.dimvec()) ++bad_hn;
      }
    }
  const std::string n = std::to_string(12 * opt.samples);
  add(out, "chart objects stable on " + n + " points", !unstable, std::to_string(unstable) + " failures");
  add(out, "own-chart coordinates are the identity", !not_identity, std::to_string(not_identity) + " failures");
  add(out, "HN phases decrease and classes add up", !bad_hn, std::to_string(bad_hn) + " failures");

  int metric = 0;
  for (int k = 0; k < opt.samples; ++k) {
    const StabPoint a = random_interior_point(class_label(int(rng() % 12)), rng);
    const StabPoint b = random_interior_point(class_label(int(rng() % 12)), rng);
    const StabPoint c = random_interior_point(class_label(int(rng() % 12)), rng);
    const double ab = distance(a, b), ba = distance(b, a), bc = distance(b, c), ac = distance(a, c);
    if (distance(a, a) > 1e-9 || std::abs(ab - ba) > 1e-9 || ac > ab + bc + 1e-9) ++metric;
    if (std::abs(distance(shift_point(a, 2), shift_point(b, 2)) - ab) > 1e-9) ++metric;
  }
  add(out, "metric axioms and even-shift invariance", !metric, std::to_string(metric) + " failures");
  return out;
}

std::vector<CheckResult> atlas_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  const int cell_samples = std::max(10, opt.samples / 10);
  const auto d = diff_facets(load_reference("table3.json"), cell_samples, opt.seed);
  add(out, "boundary census equals reference table", d.empty(), join(d));

  std::mt19937_64 rng(opt.seed);
  int surj = 0;
  for (int k = 0; k < opt.samples; ++k) {
    CentralCharge z = random_charge(rng);
    if (k % 2) {
      const int i = 1 + int(rng() % 6);
      const Eigen::Vector3cd c = kIntervals[i - 1].dimvec().cast<double>().cast<std::complex<double>>();
      z -= functional(z, i) * c / c.squaredNorm();
    }
    try {
      const auto l = surjectivity_lift(z);
      if ((to_central_charge(l.point) - z).norm() > 1e-9 * std::max(1.0, z.norm())) ++surj;
    } catch (const std::exception&) {
      ++surj;
    }
  }
  add(out, "surjectivity lift on " + std::to_string(opt.samples) + " charges", !surj,
      std::to_string(surj) + " failures");

  int loops = 0;
  const int nloops = std::max(5, opt.samples / 10);
  for (int k = 0; k < nloops; ++k) {
    const CentralCharge z0 = random_charge(rng);
    ChargePath loop{{z0}};
    for (int v = 0; v < 4; ++v) loop.vertices.push_back(z0 + 0.8 * random_charge(rng));
    loop.vertices.push_back(z0);
    if (first_hyperplane_hit(loop, 1e-3) || !generic_charge(z0)) {
      --k;
      continue;
    }
    const StabPoint base = surjectivity_lift(z0).point;
    const auto tr = lift_path(loop, base);
    if (tr.status != TraceStatus::Complete) {
      ++loops;
      continue;
    }
    const auto back = lift_path(loop.reversed(), tr.end());
    if (back.status != TraceStatus::Complete || distance(back.end(), base) > 1e-6) ++loops;
  }
  add(out, "loop lifts complete and reverse to the start", !loops, std::to_string(loops) + " failures");
  return out;
}

}  // namespace

std::vector<std::string> suite_names() { return {"repcore", "exccol", "charts", "engine", "atlas"}; }

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "all") {
    std::vector<CheckResult> all;
    for (const auto& s : suite_names()) {
      auto r = run_suite(s, opt);
      for (auto& x : r) x.name = s + ": " + x.name;
      all.insert(all.end(), r.begin(), r.end());
    }
    return all;
  }
  if (name == "repcore") return repcore_suite();
  if (name == "exccol") return exccol_suite();
  if (name == "charts") return charts_suite();
  if (name == "engine") return engine_suite(opt);
  if (name == "atlas") return atlas_suite(opt);
  throw InputError("unknown suite '" + name + "'");
}

}  // namespace a3stab
