#pragma once

#include <Eigen/Dense>
#include <boost/rational.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace a3stab {

using Rational = boost::rational<long long>;

}  // namespace a3stab

namespace Eigen {
template <>
struct NumTraits<a3stab::Rational> : GenericNumTraits<a3stab::Rational> {
  enum { IsInteger = 0, IsSigned = 1, IsComplex = 0, RequireInitialization = 1,
         ReadCost = 2, AddCost = 8, MulCost = 8 };
  using Real = a3stab::Rational;
  using NonInteger = a3stab::Rational;
  using Literal = a3stab::Rational;
  using Nested = a3stab::Rational;
};
}  // namespace Eigen

namespace a3stab {

/// Classes in K_0 of A_3, written in the basis of simples S1, S2, S3.
using DimVector = Eigen::Matrix<int, 3, 1>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Quiver is 1 -> 2 -> 3.  An interval [lo,hi] is the thin indecomposable
// supported there; downstream vertices span its submodules.
struct Interval {
  int lo = 1;
  int hi = 1;

  DimVector dimvec() const;
  std::string name() const;  // "S12" etc.
  bool contains(int v) const { return lo <= v && v <= hi; }
  auto operator<=>(const Interval&) const = default;
};

// S1, S2, S3, S12, S23, S123 (this order is used for the L_i numbering too).
inline constexpr std::array<Interval, 6> kIntervals{
    Interval{1, 1}, Interval{2, 2}, Interval{3, 3},
    Interval{1, 2}, Interval{2, 3}, Interval{1, 3}};

int interval_index(const Interval& x);
std::optional<Interval> parse_interval(const std::string& name);

struct DerivedInterval {
  Interval interval;
  int shift = 0;

  DimVector klass() const;  // (-1)^shift * dimvec
  DerivedInterval shifted(int n) const { return {interval, shift + n}; }
  std::string name() const;
  auto operator<=>(const DerivedInterval&) const = default;
};

/// Finite-dimensional representation of 1 -> 2 -> 3 over Scalar.
template <typename Scalar>
struct Representation {
  std::array<int, 3> dims{0, 0, 0};
  std::array<MatrixX<Scalar>, 2> maps;  // maps[a] : V_{a+1} -> V_{a+2}
};

Representation<Rational> representation(const Interval& x);
Representation<Rational> direct_sum(const Representation<Rational>& a,
                                    const Representation<Rational>& b);

/// Exact row reduction; returns the rank and leaves m in reduced row echelon form.
template <typename Scalar>
Eigen::Index row_reduce(MatrixX<Scalar>& m) {
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < m.cols() && rank < m.rows(); ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = rank; r < m.rows(); ++r)
      if (m(r, c) != Scalar(0)) { piv = r; break; }
    if (piv < 0) continue;
    m.row(piv).swap(m.row(rank));
    const Scalar lead = m(rank, c);
    for (Eigen::Index k = 0; k < m.cols(); ++k) m(rank, k) /= lead;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c) == Scalar(0)) continue;
      const Scalar f = m(r, c);
      for (Eigen::Index k = 0; k < m.cols(); ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

template <typename Scalar>
Eigen::Index exact_rank(MatrixX<Scalar> m) {
  return row_reduce(m);
}

/// Columns span the kernel of m.
template <typename Scalar>
MatrixX<Scalar> kernel_basis(MatrixX<Scalar> m) {
  const Eigen::Index n = m.cols();
  const Eigen::Index rank = row_reduce(m);
  std::vector<Eigen::Index> pivot_of_row;
  std::vector<bool> is_pivot(n, false);
  for (Eigen::Index r = 0; r < rank; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      if (m(r, c) != Scalar(0)) { pivot_of_row.push_back(c); is_pivot[c] = true; break; }
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(n, n - rank);
  Eigen::Index col = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(f, col) = Scalar(1);
    for (Eigen::Index r = 0; r < rank; ++r) basis(pivot_of_row[r], col) = -m(r, f);
    ++col;
  }
  return basis;
}

/// Linear system whose kernel is Hom(M, N) (unknowns: the three vertex maps).
MatrixX<Rational> hom_system(const Representation<Rational>& m,
                             const Representation<Rational>& n);
int hom_dimension(const Representation<Rational>& m, const Representation<Rational>& n);
/// True if a generic element of Hom(M,N) is injective at every vertex.
bool embeds(const Representation<Rational>& m, const Representation<Rational>& n);

int euler_form(const DimVector& u, const DimVector& v);
Eigen::Matrix3i euler_matrix();

struct HomExt {
  int hom = 0;
  int ext = 0;
  auto operator<=>(const HomExt&) const = default;
};

/// dim Hom and dim Ext^1 between interval modules, from the linear system.
HomExt hom_ext(const Interval& m, const Interval& n);

/// Nonzero graded pieces of Hom^*(X, Y): degree -> dimension.
std::map<int, int> derived_hom(const DerivedInterval& x, const DerivedInterval& y);
int derived_hom_dim(const DerivedInterval& x, const DerivedInterval& y, int degree);

struct ClassMatch {
  Interval interval;
  bool odd = false;  // class is minus the dimension vector
};

/// Which interval (up to shift parity) has class v, if any.
std::optional<ClassMatch> identify_class(const DimVector& v);

}  // namespace a3stab
