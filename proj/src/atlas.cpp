#include "a3stab/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace a3stab {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::Vector3cd as_complex(const DimVector& v) { return v.cast<double>().cast<std::complex<double>>(); }

}  // namespace

std::complex<double> functional(const CentralCharge& z, int i) {
  if (i < 1 || i > 6) throw std::out_of_range("hyperplane index must be 1..6");
  return charge_of(z, kIntervals[i - 1].dimvec());
}

std::vector<int> hyperplane_id(const CentralCharge& z, double tol) {
  std::vector<int> out;
  for (int i = 1; i <= 6; ++i)
    if (std::abs(functional(z, i)) <= tol) out.push_back(i);
  if (out.size() == 6) throw ZeroCharge("central charge vanishes");
  return out;
}

// ---- lifts over a single charge ----

std::vector<Lift> all_lifts(const CentralCharge& z, int max_sum, double tol) {
  if (z.norm() <= tol) throw ZeroCharge("central charge vanishes");
  std::vector<Lift> out;
  for (int sum = 0; sum <= max_sum; ++sum)
    for (const auto& c : all_charts()) {
      Eigen::Vector3d base;
      Eigen::Vector3d m;
      bool ok = true;
      for (int i = 0; i < 3; ++i) {
        const auto w = charge_of(z, c.classes.col(i));
        if (std::abs(w) <= tol) { ok = false; break; }
        m(i) = std::abs(w);
        base(i) = phase_in(w, 0);
      }
      if (!ok) continue;
      for (int a = sum; a >= 0; --a)
        for (int b = sum - a; b >= 0; --b) {
          const Eigen::Vector3i n(a, b, sum - a - b);
          StabPoint p{c.label, m, base + 2 * n.cast<double>()};
          if (chart_contains(p, tol).region != Region::Interior) continue;
          out.push_back({p, canonical_heart(p).pvec});
        }
    }
  return out;
}

Lift surjectivity_lift(const CentralCharge& z, double tol) {
  auto l = all_lifts(z, 6, tol);
  if (l.empty()) throw std::runtime_error("no chart contains a lift of this charge");
  return l.front();
}

// ---- paths ----

CentralCharge ChargePath::at(double t) const {
  const int n = segments();
  if (n <= 0) return vertices.front();
  const double s = std::clamp(t, 0.0, 1.0) * n;
  const int k = std::min(int(std::floor(s)), n - 1);
  const double u = s - k;
  return (1 - u) * vertices[k] + u * vertices[k + 1];
}

ChargePath ChargePath::line(const CentralCharge& a, const CentralCharge& b) { return {{a, b}}; }

ChargePath ChargePath::circle(const CentralCharge& center, const CentralCharge& dir, double r, int n,
                              int turns) {
  ChargePath p;
  for (int k = 0; k <= n * turns; ++k) {
    const double th = 2 * kPi * k / n;
    p.vertices.push_back(center + r * std::polar(1.0, th) * dir);
  }
  p.vertices.back() = p.vertices.front();
  return p;
}

ChargePath ChargePath::reversed() const {
  ChargePath p = *this;
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

ChargePath ChargePath::then(const ChargePath& next) const {
  ChargePath p = *this;
  p.vertices.insert(p.vertices.end(), next.vertices.begin() + 1, next.vertices.end());
  p.resolution = std::max(resolution, next.resolution) * 2;
  return p;
}

std::optional<HyperplaneHit> first_hyperplane_hit(const ChargePath& path, double tol) {
  double scale = 1;
  for (const auto& v : path.vertices) scale = std::max(scale, v.cwiseAbs().maxCoeff());
  const int n = path.segments();
  if (n <= 0) {
    for (int i = 1; i <= 6; ++i)
      if (std::abs(functional(path.vertices[0], i)) <= tol * scale) return HyperplaneHit{i, 0};
    return std::nullopt;
  }
  for (int k = 0; k < n; ++k) {
    std::optional<HyperplaneHit> best;
    for (int i = 1; i <= 6; ++i) {
      const auto a = functional(path.vertices[k], i);
      const auto b = functional(path.vertices[k + 1], i) - a;
      double s = 0;
      if (std::norm(b) > 0) s = std::clamp(-std::real(a * std::conj(b)) / std::norm(b), 0.0, 1.0);
      if (std::abs(a + s * b) > tol * scale) continue;
      const double t = (k + s) / n;
      if (!best || t < best->t) best = HyperplaneHit{i, t};
    }
    if (best) return best;
  }
  return std::nullopt;
}

double phase_drift(const ChargePath& path) {
  constexpr int sub = 64;
  double total = 0;
  for (int k = 0; k < path.segments(); ++k)
    for (int r = 0; r < sub; ++r) {
      const auto z0 = path.vertices[k] + (double(r) / sub) * (path.vertices[k + 1] - path.vertices[k]);
      const auto z1 = path.vertices[k] + (double(r + 1) / sub) * (path.vertices[k + 1] - path.vertices[k]);
      double step = 0;
      for (int i = 1; i <= 6; ++i) {
        const auto w0 = functional(z0, i), w1 = functional(z1, i);
        if (std::abs(w0) == 0 || std::abs(w1) == 0) continue;
        step = std::max(step, std::abs(std::arg(w1 / w0)) / kPi);
      }
      total += step;
    }
  return total;
}

const char* status_name(TraceStatus s) {
  switch (s) {
    case TraceStatus::Complete: return "Complete";
    case TraceStatus::HitHyperplane: return "HitHyperplane";
    case TraceStatus::Ambiguous: return "Ambiguous";
  }
  return "?";
}

int LiftTrace::crossings() const {
  return int(std::count_if(events.begin(), events.end(), [](const TraceEvent& e) { return e.crossed.has_value(); }));
}

namespace {

// Chart coordinates carried from z0 to z1 along the chord (no zero on it).
StabPoint advance(const StabPoint& p, const CentralCharge& z0, const CentralCharge& z1) {
  const ChartSpec& c = chart(p.chart);
  StabPoint q = p;
  for (int i = 0; i < 3; ++i) {
    const auto w0 = charge_of(z0, c.classes.col(i));
    const auto w1 = charge_of(z1, c.classes.col(i));
    q.m(i) = std::abs(w1);
    q.phi(i) = p.phi(i) + std::arg(w1 / w0) / kPi;
  }
  return q;
}

double min_slack(const StabPoint& p, Facet* which = nullptr) {
  const ChartSpec& c = chart(p.chart);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& f : finite_facets(c)) {
    const double s = facet_slack(c, p.phi, f);
    if (s < best) {
      best = s;
      if (which) *which = f;
    }
  }
  return best;
}

std::optional<StabPoint> best_chart(const StabPoint& p, double tol, char exclude = 0) {
  std::optional<StabPoint> best;
  double margin = -1;
  for (const auto& q : covering_coords(p, tol)) {
    if (q.chart == exclude) continue;
    const double mq = chart_contains(q, tol).margin;
    if (mq > margin) { margin = mq; best = q; }
  }
  return best;
}

}  // namespace

LiftTrace lift_path(const ChargePath& path, const StabPoint& start, const LiftOptions& opt) {
  const CentralCharge z0 = path.at(0);
  if ((to_central_charge(start) - z0).norm() > 1e-6 * std::max(1.0, z0.norm()))
    throw std::invalid_argument("start point does not lie over the start of the path");

  LiftTrace tr;
  StabPoint cur = start;
  if (chart_contains(cur, opt.tol).region != Region::Interior) {
    auto b = best_chart(cur, opt.tol);
    if (!b) {
      tr.status = TraceStatus::Ambiguous;
      tr.t_stop = 0;
      tr.events.push_back({0, cur, std::nullopt});
      return tr;
    }
    cur = *b;
  }
  tr.events.push_back({0, cur, std::nullopt});

  const auto hit = first_hyperplane_hit(path, opt.tol);
  const double limit = hit ? hit->t : 1.0;
  const int n = std::max(path.segments(), 1);
  const double dt_max = 1.0 / std::max(path.resolution, n);
  double t = 0;
  int stuck = 0;
  double last_cross = -1;

  for (int k = 0; k < n && t < limit; ++k) {
    const double tb = std::min(double(k + 1) / n, limit);
    // z values on segment k only; at() would switch segment at the right end
    auto zk = [&](double s) {
      if (path.segments() <= 0) return path.vertices[0];
      const double u = std::clamp(s * n - k, 0.0, 1.0);
      return CentralCharge((1 - u) * path.vertices[k] + u * path.vertices[k + 1]);
    };
    while (t < tb) {
      double dt = std::min(dt_max, tb - t);
      if (hit && t + dt >= limit - 1e-12) {
        dt = limit - 1e-12 - t;
        if (dt < 1e-15) {  // arrived at the hyperplane
          t = limit;
          break;
        }
      }
      if (dt <= 0) { t = tb; break; }
      StabPoint q = advance(cur, zk(t), zk(t + dt));
      while ((q.phi - cur.phi).cwiseAbs().maxCoeff() > opt.max_dphi && dt > 1e-14) {
        dt *= 0.5;
        q = advance(cur, zk(t), zk(t + dt));
      }
      if (t + dt == t) {
        tr.status = TraceStatus::Ambiguous;
        tr.t_stop = t;
        tr.events.push_back({t, cur, std::nullopt});
        return tr;
      }
      if (min_slack(q) > 0) {
        cur = q;
        t += dt;
        continue;
      }
      // localize the exit
      double lo = t, hi = t + dt;
      Facet facet{0, 1};
      min_slack(q, &facet);
      StabPoint pin = cur;
      for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
        const double mid = 0.5 * (lo + hi);
        const StabPoint pm = advance(cur, zk(t), zk(mid));
        if (min_slack(pm) > 0) { lo = mid; pin = pm; } else hi = mid;
        if (min_slack(pin) <= opt.tol) break;
      }
      if (std::abs(lo - last_cross) < 1e-12) {
        if (++stuck > 8) {
          tr.status = TraceStatus::Ambiguous;
          tr.t_stop = lo;
          return tr;
        }
      } else {
        stuck = 0;
      }
      last_cross = lo;
      auto next = best_chart(pin, opt.tol, pin.chart);
      if (!next || chart_contains(*next, opt.tol).margin <= opt.tol) {
        tr.status = TraceStatus::Ambiguous;
        tr.t_stop = lo;
        return tr;
      }
      cur = *next;
      t = lo;
      tr.events.push_back({t, cur, facet});
    }
  }
  if (hit) {
    tr.status = TraceStatus::HitHyperplane;
    tr.hyperplane = hit->index;
    tr.t_stop = hit->t;
  }
  tr.events.push_back({t, cur, std::nullopt});
  return tr;
}

StabPoint monodromy(const ChargePath& loop, const StabPoint& base, const LiftOptions& opt) {
  const auto tr = lift_path(loop, base, opt);
  if (tr.status != TraceStatus::Complete)
    throw LiftFailed(std::string("loop lift stopped: ") + status_name(tr.status));
  return tr.end();
}

// ---- fibers ----

bool generic_charge(const CentralCharge& z, double tol) {
  std::array<std::complex<double>, 6> w;
  for (int i = 0; i < 6; ++i) {
    w[i] = functional(z, i + 1);
    if (std::abs(w[i]) <= tol) return false;
  }
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      if (std::abs(std::imag(w[a] * std::conj(w[b]))) <= tol * std::abs(w[a]) * std::abs(w[b])) return false;
  return true;
}

bool in_window(const Signature& g, const PhaseWindow& w, double tol) {
  for (const auto& h : g.hn)
    if (h.phi_plus() > w.hi + tol || h.phi_minus() < w.lo - tol) return false;
  return true;
}

namespace {

Signature signature_of(const StabPoint& p) {
  if (chart_contains(p).region == Region::Interior) return signature(Slicing(p));
  const auto c = covering_coords(p);
  if (c.empty()) throw UncoveredFacetPoint("point lies in no chart interior");
  return signature(Slicing(c.front()));
}

}  // namespace

std::vector<StabPoint> fiber(const CentralCharge& z, const PhaseWindow& w, double tol) {
  if (!generic_charge(z, 1e-9)) throw NonGenericCharge("charge lies on a hyperplane or has proportional interval charges");
  std::vector<StabPoint> pts;
  std::vector<Signature> sigs;
  std::vector<double> margins;
  for (const auto& c : all_charts()) {
    Eigen::Vector3d a, m;
    for (int i = 0; i < 3; ++i) {
      const auto wi = charge_of(z, c.classes.col(i));
      a(i) = std::arg(wi) / kPi;
      m(i) = std::abs(wi);
    }
    std::array<int, 3> blo, bhi;
    for (int i = 0; i < 3; ++i) {
      blo[i] = int(std::ceil((w.lo - tol - a(i)) / 2));
      bhi[i] = int(std::floor((w.hi + tol - a(i)) / 2));
    }
    for (int b0 = blo[0]; b0 <= bhi[0]; ++b0)
      for (int b1 = blo[1]; b1 <= bhi[1]; ++b1)
        for (int b2 = blo[2]; b2 <= bhi[2]; ++b2) {
          StabPoint p{c.label, m, a + 2 * Eigen::Vector3d(b0, b1, b2)};
          const auto cont = chart_contains(p, tol);
          if (cont.region != Region::Interior) continue;
          const Signature g = signature(Slicing(p));
          if (!in_window(g, w, tol)) continue;
          bool dup = false;
          for (size_t r = 0; r < pts.size(); ++r)
            if (same_point(sigs[r], g)) {
              dup = true;
              if (cont.margin > margins[r]) { pts[r] = p; margins[r] = cont.margin; }
              break;
            }
          if (!dup) {
            pts.push_back(p);
            sigs.push_back(g);
            margins.push_back(cont.margin);
          }
        }
  }
  return pts;
}

int find_point(const std::vector<StabPoint>& pts, const StabPoint& p) {
  const Signature g = signature_of(p);
  for (size_t r = 0; r < pts.size(); ++r)
    if (same_point(signature_of(pts[r]), g)) return int(r);
  return -1;
}

int even_shift_normalizer(const Signature& g) {
  // phi+(S1) + n in [-1, 1)
  return -2 * int(std::floor((g.hn[0].phi_plus() + 1) / 2));
}

StabPoint even_shift_normal_form(const StabPoint& p) {
  return shift_point(p, even_shift_normalizer(signature_of(p)));
}

std::optional<int> even_shift_between(const StabPoint& a, const StabPoint& b) {
  const Signature ga = signature_of(a), gb = signature_of(b);
  const int n = int(std::lround(gb.hn[0].phi_plus() - ga.hn[0].phi_plus()));
  if (n % 2) return std::nullopt;
  if (!same_point(signature_of(shift_point(a, n)), gb)) return std::nullopt;
  return n;
}

std::vector<int> monodromy_permutation(const ChargePath& loop, const std::vector<StabPoint>& fib,
                                       const LiftOptions& opt) {
  std::vector<int> out;
  for (const auto& p : fib) out.push_back(find_point(fib, monodromy(loop, p, opt)));
  return out;
}

// ---- sampling ----

StabPoint random_interior_point(char label, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uphi(-1.5, 1.5), ulog(std::log(0.2), std::log(5.0));
  while (true) {
    StabPoint p{label, {}, {}};
    for (int i = 0; i < 3; ++i) {
      p.phi(i) = uphi(rng);
      p.m(i) = std::exp(ulog(rng));
    }
    const auto c = chart_contains(p);
    if (c.region == Region::Interior && c.margin > 1e-6) return p;
  }
}

CentralCharge random_charge(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  CentralCharge z;
  for (int i = 0; i < 3; ++i) z(i) = {n(rng), n(rng)};
  return z;
}

// ---- boundary census ----

std::string covering_labels(const StabPoint& p, double tol) {
  std::string s;
  for (const auto& q : covering_coords(p, tol)) s += q.chart;
  return s;
}

bool on_boundary_of(const StabPoint& p, char partner, double tol) {
  // exact slicing at p, read in a chart that has p inside
  const auto cover = covering_coords(p);
  if (cover.empty()) return false;
  const Slicing s(cover.front());
  const ChartSpec& c = chart(partner);
  StabPoint q{partner, {}, {}};
  for (int i = 0; i < 3; ++i) {
    const auto d = s.semistable_phase(c.objects[i]);
    if (!d) return false;
    q.m(i) = d->mass;
    q.phi(i) = d->phase;
  }
  return chart_contains(q, tol).region == Region::Boundary;
}

ConfigResult check_facet_config(const FacetConfig& cfg, int samples, std::mt19937_64& rng, double tol) {
  ConfigResult r{cfg, samples, 0, 0, 0, 0, {}};
  std::uniform_real_distribution<double> u(0, 1);
  for (int k = 0; k < samples; ++k) {
    StabPoint p{cfg.chart, cfg.masses, cfg.phases};
    for (int i = 0; i < 3; ++i) {
      if (i == cfg.free) continue;
      p.m(i) *= 1 + cfg.jitter * (2 * u(rng) - 1);
    }
    p.phi(cfg.free) = cfg.phase_lo + (cfg.phase_hi - cfg.phase_lo) * u(rng);
    p.m(cfg.free) = cfg.mass_lo + (cfg.mass_hi - cfg.mass_lo) * u(rng);
    if (chart_contains(p, tol).region != Region::Boundary) {
      ++r.off_facet;
      continue;
    }
    const std::string labels = covering_labels(p, tol);
    ++r.covers[labels.empty() ? "-" : labels];
    if (labels.empty()) ++r.uncovered;
    if (labels.find(cfg.covering) != std::string::npos) ++r.matched;
    for (char y : cfg.partners)
      if (!on_boundary_of(p, y)) {
        ++r.partner_miss;
        break;
      }
  }
  return r;
}

namespace {

void tighten(Eigen::Vector3d& phi, const ChartSpec& c, const Facet& f) {
  phi(f.i) = phi(f.j) + *c.alpha[f.i][f.j];
}

// Second equality without undoing the first: move the index f does not touch.
void tighten_also(Eigen::Vector3d& phi, const ChartSpec& c, const Facet& f, const Facet& g) {
  const double a = *c.alpha[g.i][g.j];
  if (g.i != f.i && g.i != f.j) phi(g.i) = phi(g.j) + a;
  else phi(g.j) = phi(g.i) - a;
}

}  // namespace

std::vector<CensusCell> closedness_census(int samples, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uphi(-1.5, 1.5), umass(0.2, 3.0);
  std::vector<CensusCell> out;
  for (const auto& c : all_charts()) {
    const auto facets = finite_facets(c);
    for (size_t a = 0; a < facets.size(); ++a)
      for (size_t b = a; b < facets.size(); ++b) {
        CensusCell cell{c.label, facets[a], a != b, 0, 0, {}};
        int attempts = 0;
        while (cell.samples < samples && attempts < 200 * samples) {
          ++attempts;
          Eigen::Vector3d phi(uphi(rng), uphi(rng), uphi(rng));
          tighten(phi, c, facets[a]);
          if (a != b) tighten_also(phi, c, facets[a], facets[b]);
          StabPoint p{c.label, Eigen::Vector3d(umass(rng), umass(rng), umass(rng)), phi};
          const auto cont = chart_contains(p, tol);
          if (cont.region != Region::Boundary) continue;
          // other facets strictly inside
          bool clean = true;
          for (const auto& f : facets) {
            const bool tight = f == facets[a] || f == facets[b];
            if (!tight && facet_slack(c, phi, f) < 0.01) clean = false;
          }
          if (!clean) continue;
          if (!hyperplane_id(to_central_charge(p), 1e-6).empty()) continue;
          ++cell.samples;
          const std::string labels = covering_labels(p, tol);
          ++cell.covers[labels.empty() ? "-" : labels];
          if (labels.empty()) ++cell.uncovered;
        }
        if (cell.samples) out.push_back(cell);
      }
  }
  return out;
}

// ---- non-covering near a hyperplane ----

bool WitnessResult::detected() const {
  if (!control_closed || open_lifts.empty()) return false;
  return std::all_of(open_lifts.begin(), open_lifts.end(), [](int n) { return n > 0; });
}

WitnessResult non_covering_witness(int i, const CentralCharge& z, const PhaseWindow& w,
                                   const LiftOptions& opt) {
  WitnessResult res;
  res.hyperplane = i;
  const Eigen::Vector3cd c = as_complex(kIntervals[i - 1].dimvec());
  const double cc = c.squaredNorm();
  const Eigen::Vector3cd dir = c / cc;  // functional(dir, i) == 1
  res.base = z - functional(z, i) * dir;

  auto open_count = [&](const CentralCharge& center, double r) {
    const ChargePath loop = ChargePath::circle(center, dir, r, 128);
    const auto fib = fiber(loop.at(0), w);
    int open = 0;
    for (const auto& p : fib) {
      const auto tr = lift_path(loop, p, opt);
      if (tr.status != TraceStatus::Complete) throw LiftFailed("witness loop lift did not complete");
      if (!same_point(signature_of(tr.end()), signature_of(p))) ++open;
    }
    return std::pair{open, int(fib.size())};
  };

  for (double r : {0.1, 0.01, 0.001}) {
    const auto [open, size] = open_count(res.base, r);
    res.radii.push_back(r);
    res.open_lifts.push_back(open);
    res.fiber_sizes.push_back(size);
    // same loop translated off L_i
    const auto [ctrl, csize] = open_count(res.base + 2.0 * dir, r);
    (void)csize;
    if (ctrl) res.control_closed = false;
  }
  return res;
}

}  // namespace a3stab
