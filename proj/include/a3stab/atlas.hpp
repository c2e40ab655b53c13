#pragma once

#include "a3stab/stabengine.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace a3stab {

struct ZeroCharge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonGenericCharge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// L_i is the zero set of Z(kIntervals[i-1]); i runs over 1..6.
std::complex<double> functional(const CentralCharge& z, int i);
std::vector<int> hyperplane_id(const CentralCharge& z, double tol = 1e-9);

struct Lift {
  StabPoint point;
  Eigen::Vector3i pvec;  // heart shift of the chart objects
};

/// Lifts with phases arg/pi in (0,2] plus 2n, n >= 0 with |n| <= max_sum, in
/// search order: total |n|, then chart label, then n lexicographically.
std::vector<Lift> all_lifts(const CentralCharge& z, int max_sum = 6, double tol = 1e-9);
Lift surjectivity_lift(const CentralCharge& z, double tol = 1e-9);

/// Polyline in C^3 parametrized by [0,1], vertices equally spaced in t.
struct ChargePath {
  std::vector<CentralCharge> vertices;
  int resolution = 1000;  // steps per unit t, at least

  int segments() const { return int(vertices.size()) - 1; }
  CentralCharge at(double t) const;
  double vertex_time(int k) const { return double(k) / segments(); }

  static ChargePath line(const CentralCharge& a, const CentralCharge& b);
  /// center + r*exp(i*theta)*dir, theta from 0 to 2pi*turns, n samples per turn.
  static ChargePath circle(const CentralCharge& center, const CentralCharge& dir, double r,
                           int n = 256, int turns = 1);
  ChargePath reversed() const;
  ChargePath then(const ChargePath& next) const;  // concatenation, reparametrized
};

struct HyperplaneHit {
  int index;  // 1..6
  double t;
};
/// Earliest parameter at which some interval charge comes within tol of zero.
std::optional<HyperplaneHit> first_hyperplane_hit(const ChargePath& path, double tol = 1e-9);

/// Largest total variation of the six interval arguments along the path, in
/// units of pi.  Bounds how far any HN phase can drift.
double phase_drift(const ChargePath& path);

enum class TraceStatus { Complete, HitHyperplane, Ambiguous };
const char* status_name(TraceStatus s);

struct TraceEvent {
  double t;
  StabPoint point;
  std::optional<Facet> crossed;  // facet of the previous chart
};

struct LiftTrace {
  std::vector<TraceEvent> events;
  TraceStatus status = TraceStatus::Complete;
  int hyperplane = 0;  // for HitHyperplane
  double t_stop = 1;

  int crossings() const;
  const StabPoint& end() const { return events.back().point; }
};

struct LiftOptions {
  double tol = 1e-9;
  double max_dphi = 0.01;  // phase change per step
};

LiftTrace lift_path(const ChargePath& path, const StabPoint& start, const LiftOptions& opt = {});

struct LiftFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Endpoint of the lift of a closed path.
StabPoint monodromy(const ChargePath& loop, const StabPoint& base, const LiftOptions& opt = {});

struct PhaseWindow {
  double lo = -1;
  double hi = 2;
};

bool generic_charge(const CentralCharge& z, double tol = 1e-9);
bool in_window(const Signature& g, const PhaseWindow& w, double tol = 1e-9);

/// Stability conditions over z whose six interval HN phases all lie in w, one
/// chart representative each (largest margin).  Throws NonGenericCharge.
std::vector<StabPoint> fiber(const CentralCharge& z, const PhaseWindow& w, double tol = 1e-9);

/// Index of p in pts up to same_point, or -1.
int find_point(const std::vector<StabPoint>& pts, const StabPoint& p);

/// 2k such that shifting by it puts phi+(S1) in [-1,1).
int even_shift_normalizer(const Signature& g);
StabPoint even_shift_normal_form(const StabPoint& p);
/// n with b = a[n], n even, if one exists.
std::optional<int> even_shift_between(const StabPoint& a, const StabPoint& b);

/// Image index in fib of each element transported around the loop (-1 if the
/// endpoint left the window).
std::vector<int> monodromy_permutation(const ChargePath& loop, const std::vector<StabPoint>& fib,
                                       const LiftOptions& opt = {});

// ---- sampling ----

/// Uniform phases in [-1.5, 1.5], log-uniform masses in [0.2, 5], rejected until
/// strictly inside the chart.
StabPoint random_interior_point(char chart, std::mt19937_64& rng);
/// Independent standard normal real and imaginary parts.
CentralCharge random_charge(std::mt19937_64& rng);

// ---- boundary census ----

struct UncoveredFacetPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Labels of the charts containing p in their interior.
std::string covering_labels(const StabPoint& p, double tol = 1e-9);

/// A family of boundary points of one chart: phases and masses of its objects
/// with object `free` drawn from ranges, the rest fixed up to mass jitter.
struct FacetConfig {
  std::string id;
  std::string label;
  char chart = 'A';
  Eigen::Vector3d phases = Eigen::Vector3d::Zero();
  Eigen::Vector3d masses = Eigen::Vector3d::Ones();
  int free = 0;
  double phase_lo = 0, phase_hi = 0;
  double mass_lo = 1, mass_hi = 1;
  double jitter = 0;  // relative mass jitter on the fixed objects
  char covering = 'A';
  std::string partners;
  bool erratum = false;
};

struct ConfigResult {
  FacetConfig config;
  int samples = 0;
  int matched = 0;       // covering chart present
  int uncovered = 0;     // no chart interior at all
  int off_facet = 0;     // sample not on the boundary of config.chart
  int partner_miss = 0;  // some partner does not have the point on its boundary
  std::map<std::string, int> covers;

  bool ok() const { return matched == samples && !uncovered && !off_facet && !partner_miss; }
};

/// Boundary point of `partner`: all its objects semistable and its coordinates
/// satisfy the inequalities with at least one equality.
bool on_boundary_of(const StabPoint& p, char partner, double tol = 1e-7);

ConfigResult check_facet_config(const FacetConfig& cfg, int samples, std::mt19937_64& rng,
                                double tol = 1e-9);

struct CensusCell {
  char chart;
  Facet facet;
  bool corner = false;  // second facet also tight
  int samples = 0;
  int uncovered = 0;
  std::map<std::string, int> covers;
};

/// Random boundary points of every finite facet of every chart, plus codimension
/// two corners; records the covering charts.
std::vector<CensusCell> closedness_census(int samples, std::uint64_t seed, double tol = 1e-9);

// ---- non-covering near a hyperplane ----

struct WitnessResult {
  int hyperplane = 0;
  CentralCharge base;               // point on L_i
  std::vector<double> radii;        // loop radii tried
  std::vector<int> open_lifts;      // fiber elements whose loop lift does not close
  std::vector<int> fiber_sizes;
  bool control_closed = true;       // same loops away from L_i close up
  bool detected() const;
};

/// Loops of shrinking radius around the L_i-point nearest z.
WitnessResult non_covering_witness(int i, const CentralCharge& z, const PhaseWindow& w,
                                   const LiftOptions& opt = {});

}  // namespace a3stab
