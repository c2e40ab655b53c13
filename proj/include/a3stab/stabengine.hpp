#pragma once

#include "a3stab/charts.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace a3stab {

struct HNFactor {
  DimVector klass;  // K_0 class of the factor
  double phase;
  double mass;
};

struct HNFiltration {
  std::vector<HNFactor> factors;  // strictly decreasing phases

  bool semistable() const { return factors.size() == 1; }
  double phi_plus() const { return factors.front().phase; }
  double phi_minus() const { return factors.back().phase; }
  double mass() const;
};

struct NotPlaceable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MassVanishes : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Placement {
  DimVector coords;  // multiplicities of the heart simples, 0/1
  int shift;         // X[shift] lies in the heart
};

struct SemistableData {
  double phase;
  double mass;
  bool stable;
};

/// Slicing of the stability condition at a chart point, read off from the
/// finite-length heart generated by the shifted chart objects.
class Slicing {
 public:
  explicit Slicing(const StabPoint& p);

  const StabPoint& point() const { return point_; }
  const Heart& heart() const { return heart_; }
  const CentralCharge& charge() const { return z_; }

  DerivedInterval simple(int i) const { return simples_[i]; }
  DerivedInterval projective(int i) const { return projectives_[i]; }
  /// Ext-quiver of the heart: (i,j) when Hom^1(T_i, T_j) != 0.
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  /// Paths i -> j -> l with Hom^2(T_i, T_l) != 0.
  const std::vector<std::array<int, 3>>& relations() const { return relations_; }

  /// Phase of a nonzero heart class, in the window around the simples.
  double heart_phase(const DimVector& coords) const;
  std::complex<double> heart_charge(const DimVector& coords) const;
  DimVector heart_to_class(const DimVector& coords) const;

  Placement place_in_heart(const Interval& x) const;  // throws NotPlaceable
  /// Proper nonempty subobjects of a thin indecomposable heart object, as
  /// 0/1 coordinate vectors: successor-closed subsets of its support.
  std::vector<DimVector> subobject_supports(const DimVector& coords) const;

  /// Heart cohomology multiplicities: degree k -> [H^k(X)] in heart coordinates.
  const std::map<int, DimVector>& cohomology(const Interval& x) const;

  const HNFiltration& hn(const Interval& x) const { return hn_[interval_index(x)]; }
  HNFiltration hn_filtration(const DerivedInterval& x) const;
  std::optional<SemistableData> semistable_phase(const Interval& x) const;

 private:
  struct HeartIndecomposable {
    DerivedInterval object;
    DimVector coords;
  };

  HNFiltration hn_of_indecomposable(const DimVector& coords) const;
  std::vector<int> decompose(const Interval& x, int degree, bool top, bool bottom) const;
  void build();

  StabPoint point_;
  Heart heart_;
  CentralCharge z_;
  std::array<DerivedInterval, 3> simples_;
  std::array<std::complex<double>, 3> simple_charge_;
  std::array<DerivedInterval, 3> projectives_;
  std::vector<std::pair<int, int>> arrows_;
  std::vector<std::array<int, 3>> relations_;
  std::vector<HeartIndecomposable> indecomposables_;
  std::array<std::map<int, DimVector>, 6> cohomology_;
  std::array<HNFiltration, 6> hn_;
  std::array<bool, 6> stable_{};
  double center_ = 0;
};

/// Chart point after pushing it off its facets by eps (phi + eps*(-1,0,1)).
StabPoint nudge_inside(const StabPoint& p, double eps);

/// Coordinates of p in the target chart when p lies in its interior.
/// Boundary points of p's own chart are evaluated at a nudged interior point and
/// carried back by continuity of arguments.
std::optional<StabPoint> membership_and_coords(const StabPoint& p, char target, double tol = 1e-9);

/// Coordinates of p in every chart containing it in the interior, labels ascending.
std::vector<StabPoint> covering_coords(const StabPoint& p, double tol = 1e-9);

/// Same, computed from an existing slicing (p must be interior to its chart).
std::optional<StabPoint> coords_in(const Slicing& s, char target, double tol = 1e-9);

/// Semistable data of the six intervals, used to decide equality of points.
struct Signature {
  std::array<HNFiltration, 6> hn;
};
Signature signature(const Slicing& s);
bool same_point(const Signature& a, const Signature& b, double tol = 1e-7);

/// Generalized metric: sup over the six intervals of |dphi+|, |dphi-|, |log m ratio|.
double distance(const Signature& a, const Signature& b);
double distance(const StabPoint& a, const StabPoint& b);
/// The same sup taken over direct sums of up to three shifted intervals.
double distance_direct_sums(const Signature& a, const Signature& b);

/// Shift every phase by n (the autoequivalence [n] acts on charts this way).
StabPoint shift_point(const StabPoint& p, int n);

}  // namespace a3stab
