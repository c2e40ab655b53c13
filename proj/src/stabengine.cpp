#include "a3stab/stabengine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace a3stab {

namespace {

constexpr double kPhaseEq = 1e-12;

bool is_unit(const DimVector& c, int& which) {
  int nz = 0;
  for (int i = 0; i < 3; ++i)
    if (c(i) != 0) { ++nz; which = i; }
  return nz == 1 && c(which) == 1;
}

}  // namespace

double HNFiltration::mass() const {
  double m = 0;
  for (const auto& f : factors) m += f.mass;
  return m;
}

Slicing::Slicing(const StabPoint& p) : point_(p), heart_(canonical_heart(p)), z_(to_central_charge(p)) {
  build();
}

void Slicing::build() {
  const ChartSpec& c = chart(point_.chart);
  for (int i = 0; i < 3; ++i) {
    simples_[i] = {c.objects[i], heart_.pvec(i)};
    simple_charge_[i] = std::polar(point_.m(i), std::numbers::pi * heart_.psi(i));
  }
  center_ = 0.5 * (heart_.psi.minCoeff() + heart_.psi.maxCoeff());

  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && derived_hom_dim(simples_[i], simples_[j], 1)) arrows_.push_back({i, j});
  for (const auto& [a, b] : arrows_)
    for (const auto& [b2, l] : arrows_)
      if (b2 == b && l != a && derived_hom_dim(simples_[a], simples_[l], 2)) relations_.push_back({a, b, l});
  if (arrows_.size() > 2) throw std::logic_error("heart quiver with three arrows");

  // P_j with Hom^*(P_j, T_i) = delta_ij in degree 0 represents the multiplicity of T_j;
  // it need not lie in the heart
  for (int j = 0; j < 3; ++j) {
    int found = 0;
    for (const auto& v : kIntervals) {
      bool ok = true;
      int deg = 0;
      for (int i = 0; i < 3 && ok; ++i) {
        const auto h = derived_hom({v, 0}, simples_[i]);
        if (i != j) ok = h.empty();
        else if (h.size() == 1 && h.begin()->second == 1) deg = h.begin()->first;
        else ok = false;
      }
      if (ok) {
        projectives_[j] = {v, -deg};
        ++found;
      }
    }
    if (found != 1) throw std::logic_error("heart without a unique projective cover");
  }

  for (int x = 0; x < 6; ++x) {
    const DerivedInterval v{kIntervals[x], 0};
    auto& coh = cohomology_[x];
    for (int j = 0; j < 3; ++j)
      for (const auto& [deg, dim] : derived_hom(projectives_[j], v)) {
        auto [it, fresh] = coh.try_emplace(deg, DimVector::Zero());
        it->second(j) += dim;
      }
    if (coh.size() == 1) {
      const auto& [k, coords] = *coh.begin();
      if ((coords.array() > 1).any()) throw std::logic_error("heart object is not thin");
      indecomposables_.push_back({v.shifted(k), coords});
    }
  }

  for (int x = 0; x < 6; ++x) {
    const auto& coh = cohomology_[x];
    HNFiltration out;
    const int kmin = coh.begin()->first, kmax = coh.rbegin()->first;
    for (const auto& [k, coords] : coh) {
      std::vector<HNFactor> block;
      std::vector<int> parts;
      if (coh.size() == 1) {
        for (int r = 0; r < int(indecomposables_.size()); ++r)
          if (indecomposables_[r].object.interval == kIntervals[x]) parts.push_back(r);
      } else {
        parts = decompose(kIntervals[x], k, k == kmax, k == kmin);
      }
      for (int r : parts)
        for (const auto& f : hn_of_indecomposable(indecomposables_[r].coords).factors) {
          auto same = std::find_if(block.begin(), block.end(),
                                   [&](const HNFactor& g) { return std::abs(g.phase - f.phase) < kPhaseEq; });
          if (same == block.end()) block.push_back(f);
          else { same->klass += f.klass; same->mass += f.mass; }
        }
      std::sort(block.begin(), block.end(), [](auto& a, auto& b) { return a.phase > b.phase; });
      for (auto f : block) {
        // the block is H^k(X)[-k]; factor classes above are heart classes
        f.phase -= k;
        if (k % 2) f.klass = -f.klass;
        out.factors.push_back(f);
      }
    }
    // blocks from neighbouring degrees can meet at one phase on a chart wall
    std::vector<HNFactor> merged;
    for (const auto& f : out.factors) {
      if (!merged.empty() && std::abs(merged.back().phase - f.phase) < kPhaseEq)
        merged.back().klass += f.klass;
      else
        merged.push_back(f);
    }
    out.factors = merged;
    for (auto& f : out.factors) f.mass = std::abs(charge_of(z_, f.klass));
    hn_[x] = out;

    stable_[x] = false;
    if (coh.size() == 1 && out.semistable()) {
      const DimVector coords = coh.begin()->second;
      const double ph = heart_phase(coords);
      const auto subs = subobject_supports(coords);
      stable_[x] = std::none_of(subs.begin(), subs.end(),
                                [&](const DimVector& s) { return heart_phase(s) >= ph - kPhaseEq; });
    }
  }
}

std::complex<double> Slicing::heart_charge(const DimVector& coords) const {
  std::complex<double> w = 0;
  for (int i = 0; i < 3; ++i) w += double(coords(i)) * simple_charge_[i];
  return w;
}

double Slicing::heart_phase(const DimVector& coords) const {
  int which = 0;
  if (is_unit(coords, which)) return heart_.psi(which);
  const auto w = heart_charge(coords);
  if (std::abs(w) == 0) throw MassVanishes("zero charge on a heart object");
  return phase_in(w, center_ - 0.5);
}

DimVector Slicing::heart_to_class(const DimVector& coords) const {
  DimVector v = DimVector::Zero();
  for (int i = 0; i < 3; ++i) v += coords(i) * simples_[i].klass();
  return v;
}

Placement Slicing::place_in_heart(const Interval& x) const {
  const auto& coh = cohomology_[interval_index(x)];
  if (coh.size() != 1) throw NotPlaceable(x.name() + " has cohomology in several degrees");
  return {coh.begin()->second, coh.begin()->first};
}

const std::map<int, DimVector>& Slicing::cohomology(const Interval& x) const {
  return cohomology_[interval_index(x)];
}

std::vector<DimVector> Slicing::subobject_supports(const DimVector& coords) const {
  std::vector<DimVector> out;
  for (int mask = 1; mask < 7; ++mask) {
    DimVector s;
    bool inside = true;
    for (int i = 0; i < 3; ++i) {
      s(i) = (mask >> i) & 1;
      if (s(i) && !coords(i)) inside = false;
    }
    if (!inside || s == coords) continue;
    bool closed = true;
    for (const auto& [a, b] : arrows_)
      if (s(a) && coords(b) && !s(b)) closed = false;
    if (closed) out.push_back(s);
  }
  return out;
}

HNFiltration Slicing::hn_of_indecomposable(const DimVector& coords) const {
  // greedy over the lattice of successor-closed subsets
  std::vector<DimVector> closed = subobject_supports(coords);
  closed.push_back(coords);
  HNFiltration out;
  DimVector cur = DimVector::Zero();
  while (cur != coords) {
    const DimVector* best = nullptr;
    double best_phase = -1e300;
    for (const auto& c : closed) {
      if (c == cur || ((c - cur).array() < 0).any()) continue;
      const double ph = heart_phase(c - cur);
      if (!best || ph > best_phase + kPhaseEq ||
          (std::abs(ph - best_phase) <= kPhaseEq && c.sum() > best->sum())) {
        best = &c;
        best_phase = ph;
      }
    }
    const DimVector f = *best - cur;
    out.factors.push_back({heart_to_class(f), best_phase, std::abs(heart_charge(f))});
    cur = *best;
  }
  return out;
}

std::vector<int> Slicing::decompose(const Interval& x, int k, bool top, bool bottom) const {
  const DimVector target = cohomology_[interval_index(x)].at(k);
  const DerivedInterval v{x, 0};
  std::vector<std::vector<int>> matches;
  std::vector<int> pick;
  const int n = int(indecomposables_.size());
  std::function<void(int, DimVector)> rec = [&](int from, DimVector rest) {
    if (rest.isZero()) {
      bool ok = true;
      for (int r = 0; r < n && ok; ++r) {
        const auto& m = indecomposables_[r].object;
        if (top) {
          int pred = 0;
          for (int q : pick) pred += derived_hom_dim(indecomposables_[q].object, m, 0);
          ok = pred == derived_hom_dim(v, m, -k);
        }
        if (ok && bottom) {
          int pred = 0;
          for (int q : pick) pred += derived_hom_dim(m, indecomposables_[q].object, 0);
          ok = pred == derived_hom_dim(m, v, k);
        }
      }
      if (ok) matches.push_back(pick);
      return;
    }
    for (int r = from; r < n; ++r) {
      const DimVector left = rest - indecomposables_[r].coords;
      if ((left.array() < 0).any()) continue;
      pick.push_back(r);
      rec(r, left);
      pick.pop_back();
    }
  };
  rec(0, target);
  if (matches.size() != 1)
    throw std::logic_error("cannot identify heart cohomology of " + x.name());
  return matches.front();
}

HNFiltration Slicing::hn_filtration(const DerivedInterval& x) const {
  HNFiltration h = hn(x.interval);
  for (auto& f : h.factors) {
    f.phase += x.shift;
    if (x.shift % 2) f.klass = -f.klass;
  }
  return h;
}

std::optional<SemistableData> Slicing::semistable_phase(const Interval& x) const {
  if (std::abs(charge_of(z_, x.dimvec())) < 1e-12) throw MassVanishes(x.name() + " has zero charge");
  const auto& h = hn(x);
  if (!h.semistable()) return std::nullopt;
  return SemistableData{h.factors[0].phase, h.factors[0].mass, stable_[interval_index(x)]};
}

StabPoint nudge_inside(const StabPoint& p, double eps) {
  StabPoint q = p;
  q.phi += eps * Eigen::Vector3d(-1, 0, 1);
  return q;
}

namespace {

// Coordinates in target from slicing s, with phases carried to the charge z0
// by continuity of arguments (z0 equals s.charge() unless s sits at a nudged point).
std::optional<StabPoint> carried(const Slicing& s, const CentralCharge& z0, char target, double tol) {
  const ChartSpec& c = chart(target);
  StabPoint out{target, {}, {}};
  for (int i = 0; i < 3; ++i) {
    const auto d = s.semistable_phase(c.objects[i]);
    if (!d) return std::nullopt;
    const auto w0 = charge_of(z0, c.objects[i].dimvec());
    const auto w1 = charge_of(s.charge(), c.objects[i].dimvec());
    out.m(i) = std::abs(w0);
    out.phi(i) = d->phase + std::arg(w0 / w1) / std::numbers::pi;
  }
  if (chart_contains(out, tol).region != Region::Interior) return std::nullopt;
  return out;
}

Slicing slicing_near(const StabPoint& p, double tol) {
  const Containment own = chart_contains(p, tol);
  if (own.region == Region::Outside) throw std::invalid_argument("point is outside its chart");
  if (own.region == Region::Interior) return Slicing(p);
  return Slicing(nudge_inside(p, 1e-7));
}

}  // namespace

std::optional<StabPoint> coords_in(const Slicing& s, char target, double tol) {
  return carried(s, s.charge(), target, tol);
}

std::optional<StabPoint> membership_and_coords(const StabPoint& p, char target, double tol) {
  return carried(slicing_near(p, tol), to_central_charge(p), target, tol);
}

std::vector<StabPoint> covering_coords(const StabPoint& p, double tol) {
  const Slicing s = slicing_near(p, tol);
  const CentralCharge z0 = to_central_charge(p);
  std::vector<StabPoint> out;
  for (const auto& c : all_charts())
    if (auto q = carried(s, z0, c.label, tol)) out.push_back(*q);
  return out;
}

Signature signature(const Slicing& s) {
  Signature g;
  for (int x = 0; x < 6; ++x) g.hn[x] = s.hn(kIntervals[x]);
  return g;
}

bool same_point(const Signature& a, const Signature& b, double tol) {
  for (int x = 0; x < 6; ++x) {
    const auto& fa = a.hn[x].factors;
    const auto& fb = b.hn[x].factors;
    if (fa.size() != fb.size()) return false;
    for (size_t r = 0; r < fa.size(); ++r)
      if (fa[r].klass != fb[r].klass || std::abs(fa[r].phase - fb[r].phase) > tol ||
          std::abs(fa[r].mass - fb[r].mass) > tol * std::max(1.0, fa[r].mass))
        return false;
  }
  return true;
}

double distance(const Signature& a, const Signature& b) {
  double d = 0;
  for (int x = 0; x < 6; ++x) {
    d = std::max(d, std::abs(a.hn[x].phi_plus() - b.hn[x].phi_plus()));
    d = std::max(d, std::abs(a.hn[x].phi_minus() - b.hn[x].phi_minus()));
    d = std::max(d, std::abs(std::log(b.hn[x].mass() / a.hn[x].mass())));
  }
  return d;
}

double distance(const StabPoint& a, const StabPoint& b) {
  return distance(signature(Slicing(a)), signature(Slicing(b)));
}

double distance_direct_sums(const Signature& a, const Signature& b) {
  // summands X_r[s_r], r up to three, shifts in {-1,0,1}
  struct Data { double pp, pm, m; };
  auto of = [](const Signature& g, int x, int s) {
    return Data{g.hn[x].phi_plus() + s, g.hn[x].phi_minus() + s, g.hn[x].mass()};
  };
  double d = 0;
  std::vector<std::pair<int, int>> items;
  for (int x = 0; x < 6; ++x)
    for (int s = -1; s <= 1; ++s) items.push_back({x, s});
  const int n = int(items.size());
  auto eval = [&](const std::vector<int>& pick) {
    Data da{-1e300, 1e300, 0}, db{-1e300, 1e300, 0};
    for (int r : pick) {
      const auto u = of(a, items[r].first, items[r].second);
      const auto v = of(b, items[r].first, items[r].second);
      da = {std::max(da.pp, u.pp), std::min(da.pm, u.pm), da.m + u.m};
      db = {std::max(db.pp, v.pp), std::min(db.pm, v.pm), db.m + v.m};
    }
    d = std::max({d, std::abs(da.pp - db.pp), std::abs(da.pm - db.pm), std::abs(std::log(db.m / da.m))});
  };
  for (int i = 0; i < n; ++i) {
    eval({i});
    for (int j = i; j < n; ++j) {
      eval({i, j});
      for (int k = j; k < n; ++k) eval({i, j, k});
    }
  }
  return d;
}

StabPoint shift_point(const StabPoint& p, int n) {
  StabPoint q = p;
  q.phi.array() += n;
  return q;
}

}  // namespace a3stab
