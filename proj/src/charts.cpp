#include "a3stab/charts.hpp"

#include <cmath>
#include <numbers>

namespace a3stab {

const char* type_name(ChartType t) {
  switch (t) {
    case ChartType::I: return "I";
    case ChartType::II: return "II";
    case ChartType::III: return "III";
    case ChartType::IV: return "IV";
  }
  return "?";
}

DegreeMatrix k_matrix(const Triple& e) {
  DegreeMatrix k{};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const auto h = derived_hom({e[i], 0}, {e[j], 0});
      if (!h.empty()) k[i][j] = h.begin()->first;
    }
  return k;
}

namespace {

Degree add(Degree a, Degree b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

Degree min(Degree a, Degree b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

}  // namespace

AlphaResult alpha_matrix(const Triple& e) {
  const DegreeMatrix k = k_matrix(e);
  DegreeMatrix a{};
  a[0][1] = k[0][1];
  a[1][2] = k[1][2];
  a[0][2] = min(k[0][2], add(add(k[0][1], k[1][2]), -1));
  ChartType t = ChartType::II;
  if (!k[0][2]) t = ChartType::I;
  if (!k[1][2]) t = ChartType::III;
  if (!k[0][1]) t = ChartType::IV;
  return {a, t};
}

ChartSpec make_chart(const Triple& e) {
  const auto [alpha, type] = alpha_matrix(e);
  return {classify(e), e, k_matrix(e), alpha, type, class_matrix(e)};
}

const std::array<ChartSpec, 12>& all_charts() {
  static const std::array<ChartSpec, 12> charts = [] {
    std::array<ChartSpec, 12> c;
    for (int i = 0; i < 12; ++i) c[i] = make_chart(class_representatives()[i]);
    return c;
  }();
  return charts;
}

const ChartSpec& chart(char label) { return all_charts()[class_index(label)]; }

std::vector<Facet> finite_facets(const ChartSpec& c) {
  std::vector<Facet> f;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (c.alpha[i][j]) f.push_back({i, j});
  return f;
}

double facet_slack(const ChartSpec& c, const Eigen::Vector3d& phi, const Facet& f) {
  return phi(f.j) + *c.alpha[f.i][f.j] - phi(f.i);
}

Containment chart_contains(const ChartSpec& c, const Eigen::Vector3d& m,
                           const Eigen::Vector3d& phi, double tol) {
  Containment out{Region::Interior, {}, std::numeric_limits<double>::infinity()};
  if ((m.array() <= 0).any()) return {Region::Outside, {}, -1};
  for (const auto& f : finite_facets(c)) {
    const double s = facet_slack(c, phi, f);
    out.margin = std::min(out.margin, s);
    if (s < -tol) out.region = Region::Outside;
    if (s <= tol) out.active.push_back(f);
  }
  if (out.region == Region::Interior && !out.active.empty()) out.region = Region::Boundary;
  return out;
}

Containment chart_contains(const StabPoint& p, double tol) {
  return chart_contains(chart(p.chart), p.m, p.phi, tol);
}

std::complex<double> charge_of(const CentralCharge& z, const DimVector& v) {
  return double(v(0)) * z(0) + double(v(1)) * z(1) + double(v(2)) * z(2);
}

CentralCharge to_central_charge(const StabPoint& p) {
  const ChartSpec& c = chart(p.chart);
  Eigen::Vector3cd w;
  for (int i = 0; i < 3; ++i) w(i) = std::polar(p.m(i), std::numbers::pi * p.phi(i));
  // w = C^T z where C has the chart classes as columns
  const Eigen::Matrix3d ct = c.classes.transpose().cast<double>();
  const Eigen::Matrix3cd ctc = ct.cast<std::complex<double>>();
  return ctc.inverse() * w;
}

double phase_in(std::complex<double> z, double lo) {
  double a = std::arg(z) / std::numbers::pi;  // (-1, 1]
  while (a <= lo) a += 2;
  while (a > lo + 2) a -= 2;
  return a;
}

StabPoint from_central_charge(char label, const CentralCharge& z, const Eigen::Vector3i& branch) {
  const ChartSpec& c = chart(label);
  StabPoint p{label, {}, {}};
  for (int i = 0; i < 3; ++i) {
    const auto w = charge_of(z, c.classes.col(i));
    if (std::abs(w) == 0) throw ZeroMass(c.objects[i].name() + " has zero charge");
    p.m(i) = std::abs(w);
    p.phi(i) = std::arg(w) / std::numbers::pi + 2 * branch(i);
  }
  return p;
}

bool ext_exceptional(const Triple& e, const Eigen::Vector3i& pvec) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (const auto& [deg, dim] : derived_hom({e[i], pvec(i)}, {e[j], pvec(j)}))
        if (deg <= 0 && dim) return false;
    }
  return true;
}

Heart canonical_heart(const StabPoint& p) {
  const ChartSpec& c = chart(p.chart);
  std::vector<Eigen::Vector3i> candidates;
  Eigen::Vector3i std_p;
  for (int i = 0; i < 3; ++i) std_p(i) = 1 - int(std::ceil(p.phi(i)));
  candidates.push_back(std_p);
  for (int j = 0; j < 3; ++j) {
    Eigen::Vector3i q;
    for (int i = 0; i < 3; ++i) q(i) = int(std::floor(p.phi(j) - p.phi(i)));
    candidates.push_back(q);
  }
  for (const auto& q : candidates) {
    const Eigen::Vector3d psi = p.phi + q.cast<double>();
    if (psi.maxCoeff() - psi.minCoeff() >= 1) continue;
    if (ext_exceptional(c.objects, q)) return {q, psi};
  }
  throw NotExtExceptional(std::string("no Ext-exceptional shift in chart ") + p.chart);
}

}  // namespace a3stab
