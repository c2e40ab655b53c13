#pragma once

#include "a3stab/exccol.hpp"

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace a3stab {

/// Integer or +infinity (nullopt).  Only entries with i < j are meaningful.
using Degree = std::optional<int>;
using DegreeMatrix = std::array<std::array<Degree, 3>, 3>;

enum class ChartType { I, II, III, IV };
const char* type_name(ChartType t);

/// k_{ij}: least degree with Hom^k(E_i, E_j) != 0, for i < j.
DegreeMatrix k_matrix(const Triple& e);

struct AlphaResult {
  DegreeMatrix alpha;
  ChartType type;
};
/// alpha_12 = k_12, alpha_23 = k_23, alpha_13 = min(k_13, k_12 + k_23 - 1).
AlphaResult alpha_matrix(const Triple& e);

struct ChartSpec {
  char label;
  Triple objects;
  DegreeMatrix k;
  DegreeMatrix alpha;
  ChartType type;
  Eigen::Matrix3i classes;  // columns: dimension vectors of E_1, E_2, E_3
};

ChartSpec make_chart(const Triple& e);
const std::array<ChartSpec, 12>& all_charts();
const ChartSpec& chart(char label);

using CentralCharge = Eigen::Vector3cd;  // values on S1, S2, S3

/// A point of a Macri chart: masses and phases of the chart objects.
struct StabPoint {
  char chart = 'A';
  Eigen::Vector3d m = Eigen::Vector3d::Ones();
  Eigen::Vector3d phi = Eigen::Vector3d::Zero();
};

struct Facet {
  int i;  // 0-based, i < j
  int j;
  auto operator<=>(const Facet&) const = default;
};
std::vector<Facet> finite_facets(const ChartSpec& c);

/// phi_j + alpha_ij - phi_i; positive inside.
double facet_slack(const ChartSpec& c, const Eigen::Vector3d& phi, const Facet& f);

enum class Region { Interior, Boundary, Outside };

struct Containment {
  Region region;
  std::vector<Facet> active;  // facets within tol (or violated)
  double margin;              // least slack over finite facets
};

Containment chart_contains(const ChartSpec& c, const Eigen::Vector3d& m,
                           const Eigen::Vector3d& phi, double tol = 1e-9);
Containment chart_contains(const StabPoint& p, double tol = 1e-9);

std::complex<double> charge_of(const CentralCharge& z, const DimVector& v);
CentralCharge to_central_charge(const StabPoint& p);

/// arg(z)/pi lifted to (lo, lo + 2].
double phase_in(std::complex<double> z, double lo);

struct ZeroMass : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Phases arg/pi in (-1,1] plus 2*branch.
StabPoint from_central_charge(char chart, const CentralCharge& z, const Eigen::Vector3i& branch);

struct NotExtExceptional : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Heart generated by E_i[p_i]; psi = phi + p are the phases of its simples,
/// all inside a half-open window of length one.
struct Heart {
  Eigen::Vector3i pvec;
  Eigen::Vector3d psi;
};

/// Standard window (0,1] when it gives an Ext-exceptional triple, otherwise the
/// window topped by one of the phases.
Heart canonical_heart(const StabPoint& p);
bool ext_exceptional(const Triple& e, const Eigen::Vector3i& pvec);

}  // namespace a3stab
