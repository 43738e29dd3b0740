#include "elliptica/matrix.hpp"

#include <array>
#include <limits>

#include "elliptica/errors.hpp"

namespace elliptica {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

ComplexMatrix identity(int dim) { return ComplexMatrix::Identity(dim, dim); }

ComplexMatrix permutation(int n) {
  ComplexMatrix p = ComplexMatrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(i * n + j, j * n + i) = 1.0;
  return p;
}

namespace {

template <class F>
ComplexMatrix reindex(const ComplexMatrix& m, int n, F map) {
  ComplexMatrix r(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          auto [ra, rb, rc, rd] = map(a, b, c, d);
          r(ra * n + rb, rc * n + rd) = m(a * n + b, c * n + d);
        }
  return r;
}

}  // namespace

ComplexMatrix transpose_first(const ComplexMatrix& m, int n) {
  return reindex(m, n, [](int a, int b, int c, int d) { return std::array<int, 4>{c, b, a, d}; });
}

ComplexMatrix transpose_second(const ComplexMatrix& m, int n) {
  return reindex(m, n, [](int a, int b, int c, int d) { return std::array<int, 4>{a, d, c, b}; });
}

ComplexMatrix embed12(const ComplexMatrix& m, int n) { return kron(m, identity(n)); }
ComplexMatrix embed23(const ComplexMatrix& m, int n) { return kron(identity(n), m); }

ComplexMatrix embed13(const ComplexMatrix& m, int n) {
  ComplexMatrix p23 = kron(identity(n), permutation(n));
  return p23 * embed12(m, n) * p23;
}

double condition_number(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& sv = svd.singularValues();
  double lo = sv(sv.size() - 1);
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / lo;
}

ComplexMatrix inverse_guarded(const ComplexMatrix& m, double max_cond) {
  double k = condition_number(m);
  if (!(k <= max_cond)) throw Error(ErrorKind::IllConditioned, "matrix condition number too large", k);
  return m.partialPivLu().inverse();
}

double rel_residual(const ComplexMatrix& a, const ComplexMatrix& b) {
  double nb = b.norm();
  double d = (a - b).norm();
  return nb > 0.0 ? d / nb : d;
}

double rel_residual(cplx a, cplx b) {
  double nb = std::abs(b);
  double d = std::abs(a - b);
  return nb > 0.0 ? d / nb : d;
}

const ComplexMatrix& sigma_x() {
  static const ComplexMatrix m = [] {
    ComplexMatrix r(2, 2);
    r << 0.0, 1.0, 1.0, 0.0;
    return r;
  }();
  return m;
}

const ComplexMatrix& sigma_z() {
  static const ComplexMatrix m = [] {
    ComplexMatrix r(2, 2);
    r << 1.0, 0.0, 0.0, -1.0;
    return r;
  }();
  return m;
}

}  // namespace elliptica
