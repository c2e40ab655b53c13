#include "a3stab/repcore.hpp"

#include <stdexcept>

namespace a3stab {

DimVector Interval::dimvec() const {
  DimVector v = DimVector::Zero();
  for (int k = lo; k <= hi; ++k) v(k - 1) = 1;
  return v;
}

std::string Interval::name() const {
  std::string s = "S";
  for (int k = lo; k <= hi; ++k) s += char('0' + k);
  return s;
}

int interval_index(const Interval& x) {
  for (int i = 0; i < 6; ++i)
    if (kIntervals[i] == x) return i;
  throw std::invalid_argument("not an interval of A3");
}

std::optional<Interval> parse_interval(const std::string& name) {
  for (const auto& x : kIntervals)
    if (x.name() == name) return x;
  return std::nullopt;
}

DimVector DerivedInterval::klass() const {
  return (shift % 2 == 0 ? 1 : -1) * interval.dimvec();
}

std::string DerivedInterval::name() const {
  if (shift == 0) return interval.name();
  return interval.name() + "[" + std::to_string(shift) + "]";
}

Representation<Rational> representation(const Interval& x) {
  Representation<Rational> r;
  for (int v = 1; v <= 3; ++v) r.dims[v - 1] = x.contains(v) ? 1 : 0;
  for (int a = 0; a < 2; ++a) {
    r.maps[a] = MatrixX<Rational>::Zero(r.dims[a + 1], r.dims[a]);
    if (r.dims[a] && r.dims[a + 1]) r.maps[a](0, 0) = Rational(1);
  }
  return r;
}

Representation<Rational> direct_sum(const Representation<Rational>& a,
                                    const Representation<Rational>& b) {
  Representation<Rational> r;
  for (int v = 0; v < 3; ++v) r.dims[v] = a.dims[v] + b.dims[v];
  for (int k = 0; k < 2; ++k) {
    r.maps[k] = MatrixX<Rational>::Zero(r.dims[k + 1], r.dims[k]);
    r.maps[k].topLeftCorner(a.dims[k + 1], a.dims[k]) = a.maps[k];
    r.maps[k].bottomRightCorner(b.dims[k + 1], b.dims[k]) = b.maps[k];
  }
  return r;
}

MatrixX<Rational> hom_system(const Representation<Rational>& m,
                             const Representation<Rational>& n) {
  // f_v is n.dims[v] x m.dims[v], stored row-major after offset[v]
  std::array<int, 4> off{0, 0, 0, 0};
  for (int v = 0; v < 3; ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
  int rows = 0;
  for (int a = 0; a < 2; ++a) rows += n.dims[a + 1] * m.dims[a];
  MatrixX<Rational> sys = MatrixX<Rational>::Zero(rows, off[3]);

  int row = 0;
  for (int a = 0; a < 2; ++a) {
    const auto& nm = n.maps[a];  // n.dims[a+1] x n.dims[a]
    const auto& mm = m.maps[a];  // m.dims[a+1] x m.dims[a]
    for (int r = 0; r < n.dims[a + 1]; ++r)
      for (int c = 0; c < m.dims[a]; ++c, ++row) {
        // (nm * f_a)(r,c) - (f_{a+1} * mm)(r,c)
        for (int k = 0; k < n.dims[a]; ++k)
          sys(row, off[a] + k * m.dims[a] + c) += nm(r, k);
        for (int k = 0; k < m.dims[a + 1]; ++k)
          sys(row, off[a + 1] + r * m.dims[a + 1] + k) -= mm(k, c);
      }
  }
  return sys;
}

int hom_dimension(const Representation<Rational>& m, const Representation<Rational>& n) {
  MatrixX<Rational> sys = hom_system(m, n);
  return int(sys.cols() - exact_rank(sys));
}

bool embeds(const Representation<Rational>& m, const Representation<Rational>& n) {
  MatrixX<Rational> basis = kernel_basis(hom_system(m, n));
  if (basis.cols() == 0) return m.dims == std::array<int, 3>{0, 0, 0};
  // a fixed "generic" combination; coefficients are distinct primes
  static constexpr long long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  MatrixX<Rational> f = MatrixX<Rational>::Zero(basis.rows(), 1);
  for (Eigen::Index c = 0; c < basis.cols(); ++c)
    f += Rational(primes[c % 12] + 41 * (c / 12)) * basis.col(c);
  int off = 0;
  for (int v = 0; v < 3; ++v) {
    MatrixX<Rational> fv(n.dims[v], m.dims[v]);
    for (int r = 0; r < n.dims[v]; ++r)
      for (int c = 0; c < m.dims[v]; ++c) fv(r, c) = f(off + r * m.dims[v] + c, 0);
    off += n.dims[v] * m.dims[v];
    if (exact_rank(fv) != m.dims[v]) return false;
  }
  return true;
}

Eigen::Matrix3i euler_matrix() {
  Eigen::Matrix3i e = Eigen::Matrix3i::Identity();
  e(0, 1) = -1;
  e(1, 2) = -1;
  return e;
}

int euler_form(const DimVector& u, const DimVector& v) {
  return u.dot(euler_matrix() * v);
}

namespace {

struct HomTable {
  std::array<std::array<HomExt, 6>, 6> t;
  HomTable() {
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        const int h = hom_dimension(representation(kIntervals[i]), representation(kIntervals[j]));
        const int chi = euler_form(kIntervals[i].dimvec(), kIntervals[j].dimvec());
        t[i][j] = {h, h - chi};
      }
  }
};

const HomTable& hom_table() {
  static const HomTable table;
  return table;
}

}  // namespace

HomExt hom_ext(const Interval& m, const Interval& n) {
  return hom_table().t[interval_index(m)][interval_index(n)];
}

std::map<int, int> derived_hom(const DerivedInterval& x, const DerivedInterval& y) {
  // Hom^k(M[p], N[q]) = Hom^{k+q-p}(M, N); hereditary, so only degrees 0, 1 survive
  const HomExt he = hom_ext(x.interval, y.interval);
  std::map<int, int> out;
  const int off = x.shift - y.shift;
  if (he.hom) out[off] = he.hom;
  if (he.ext) out[1 + off] = he.ext;
  return out;
}

int derived_hom_dim(const DerivedInterval& x, const DerivedInterval& y, int degree) {
  const HomExt he = hom_ext(x.interval, y.interval);
  const int d = degree - (x.shift - y.shift);
  return d == 0 ? he.hom : d == 1 ? he.ext : 0;
}

std::optional<ClassMatch> identify_class(const DimVector& v) {
  for (const auto& x : kIntervals) {
    if (v == x.dimvec()) return ClassMatch{x, false};
    if (v == -x.dimvec()) return ClassMatch{x, true};
  }
  return std::nullopt;
}

}  // namespace a3stab
