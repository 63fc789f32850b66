#include "lfball/num_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lfball/errors.hpp"

namespace lfball {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_square(const ComplexMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw DimensionError(std::string(what) + ": matrix is " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
}

}  // namespace

// ---------------------------------------------------------------- vectors

ComplexVector ComplexVector::unit(std::size_t n, std::size_t k) {
  ComplexVector v(n);
  v[k] = 1.0;
  return v;
}

double ComplexVector::squared_norm() const {
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x);
  return s;
}

double ComplexVector::norm() const {
  // scaled 2-norm
  double scale = 0.0;
  for (const auto& x : data_) scale = std::max({scale, std::abs(x.real()), std::abs(x.imag())});
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x / scale);
  return scale * std::sqrt(s);
}

bool ComplexVector::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  });
}

ComplexVector& ComplexVector::operator+=(const ComplexVector& other) {
  if (other.size() != size()) throw DimensionError("vector sum: length mismatch");
  for (std::size_t i = 0; i < size(); ++i) data_[i] += other[i];
  return *this;
}

ComplexVector& ComplexVector::operator-=(const ComplexVector& other) {
  if (other.size() != size()) throw DimensionError("vector difference: length mismatch");
  for (std::size_t i = 0; i < size(); ++i) data_[i] -= other[i];
  return *this;
}

ComplexVector& ComplexVector::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ComplexVector operator+(ComplexVector a, const ComplexVector& b) { return a += b; }
ComplexVector operator-(ComplexVector a, const ComplexVector& b) { return a -= b; }
ComplexVector operator*(cplx s, ComplexVector v) { return v *= s; }

cplx inner(const ComplexVector& z, const ComplexVector& w) {
  if (z.size() != w.size()) {
    throw DimensionError("inner product: lengths " + std::to_string(z.size()) +
                         " and " + std::to_string(w.size()));
  }
  cplx s = 0.0;
  for (std::size_t k = 0; k < z.size(); ++k) s += z[k] * std::conj(w[k]);
  return s;
}

// ---------------------------------------------------------------- matrices

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::hermitian_part() const {
  if (!is_square()) throw DimensionError("hermitian_part: matrix not square");
  ComplexMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
  return r;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                   std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  ComplexMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw DimensionError("set_block out of range");
  }
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
  ComplexVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

ComplexVector ComplexMatrix::row(std::size_t i) const {
  ComplexVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& x : data_) s += std::norm(x);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& x) {
    return std::isfinite(x.real()) && std::isfinite(x.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.rows_ != rows_ || other.cols_ != cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (auto& x : data_) x *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  ComplexMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector product: length mismatch");
  ComplexVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

// ------------------------------------------------- Hermitian eigenvalues

namespace {

// Implicit QL with Wilkinson-type shifts on a real symmetric tridiagonal
// matrix (diag d, off-diagonal e with e[i] coupling i and i+1).
void tridiagonal_ql(std::vector<double>& d, std::vector<double> e) {
  const std::size_t n = d.size();
  if (n < 2) return;
  e.push_back(0.0);
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (++iter > 60) throw InconclusiveError("tridiagonal QL did not converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigenvalues");
  const std::size_t n = m.rows();
  ComplexMatrix a = m.hermitian_part();
  if (n == 0) return {};

  // Householder reduction to Hermitian tridiagonal form.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t len = n - k - 1;
    ComplexVector x(len);
    for (std::size_t i = 0; i < len; ++i) x[i] = a(k + 1 + i, k);
    const double xnorm = x.norm();
    if (xnorm == 0.0) continue;
    const cplx phase = std::abs(x[0]) > 0.0 ? x[0] / std::abs(x[0]) : cplx{1.0};
    const cplx alpha = -phase * xnorm;
    ComplexVector v = x;
    v[0] -= alpha;
    const double vnorm = v.norm();
    if (vnorm == 0.0) continue;
    v *= 1.0 / vnorm;

    // p = A_sub v, K = v* p, q = p - K v, A_sub -= 2 (v q* + q v*)
    ComplexVector p(len);
    for (std::size_t i = 0; i < len; ++i) {
      cplx s = 0.0;
      for (std::size_t j = 0; j < len; ++j) s += a(k + 1 + i, k + 1 + j) * v[j];
      p[i] = s;
    }
    const double kk = inner(p, v).real();
    ComplexVector q = p;
    for (std::size_t i = 0; i < len; ++i) q[i] -= kk * v[i];
    for (std::size_t i = 0; i < len; ++i)
      for (std::size_t j = 0; j < len; ++j)
        a(k + 1 + i, k + 1 + j) -=
            2.0 * (v[i] * std::conj(q[j]) + q[i] * std::conj(v[j]));

    a(k + 1, k) = alpha;
    a(k, k + 1) = std::conj(alpha);
    for (std::size_t i = 1; i < len; ++i) {
      a(k + 1 + i, k) = 0.0;
      a(k, k + 1 + i) = 0.0;
    }
  }

  std::vector<double> d(n), e(n - 1);
  for (std::size_t i = 0; i < n; ++i) d[i] = a(i, i).real();
  // A unitary diagonal similarity makes the off-diagonal real and nonnegative.
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = std::abs(a(i + 1, i));
  tridiagonal_ql(d, std::move(e));
  std::sort(d.begin(), d.end());
  return d;
}

double hermitian_min_eig(const ComplexMatrix& m) {
  require_square(m, "hermitian_min_eig");
  if (m.rows() == 0) throw DimensionError("hermitian_min_eig: empty matrix");
  return hermitian_eigenvalues(m).front();
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  require_square(m, "hermitian_eigen");
  const std::size_t n = m.rows();
  ComplexMatrix a = m.hermitian_part();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(a.frobenius_norm(), std::numeric_limits<double>::min());

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 0.1 * kEps * scale) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= std::numeric_limits<double>::min()) continue;
        const cplx phase = a(p, q) / mag;
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        // U = diag(1, conj(phase)) * [[c, s], [-s, c]]
        const cplx upp = c, upq = s, uqp = -s * std::conj(phase), uqq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {  // A <- A U
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- U* A
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {  // V <- V U
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

ComplexMatrix psd_factor(const ComplexMatrix& m, double tol) {
  require_square(m, "psd_factor");
  const std::size_t n = m.rows();
  const HermitianEigen eig = hermitian_eigen(m);
  if (n > 0 && eig.values.front() < -tol) {
    throw NotPsdError("psd_factor: matrix has eigenvalue " +
                          std::to_string(eig.values.front()) + " below -" +
                          std::to_string(tol),
                      eig.values.front());
  }
  ComplexMatrix x(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double root = std::sqrt(std::max(eig.values[k], 0.0));
    for (std::size_t j = 0; j < n; ++j) x(k, j) = root * std::conj(eig.vectors(j, k));
  }
  return x;
}

ComplexMatrix cholesky(const ComplexMatrix& m) {
  require_square(m, "cholesky");
  const std::size_t n = m.rows();
  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = m(j, j).real();
    for (std::size_t k = 0; k < j; ++k) diag -= std::norm(l(j, k));
    if (!(diag > 0.0)) {
      throw IllConditionedError("cholesky: non-positive pivot at index " + std::to_string(j));
    }
    const double root = std::sqrt(diag);
    l(j, j) = root;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / root;
    }
  }
  return l;
}

double generalized_max_eig(const ComplexMatrix& anum, const ComplexMatrix& bden) {
  require_square(anum, "generalized_max_eig");
  require_square(bden, "generalized_max_eig");
  if (anum.rows() != bden.rows()) throw DimensionError("generalized_max_eig: size mismatch");
  const std::size_t n = anum.rows();
  const ComplexMatrix b = bden.hermitian_part();
  const double bmin = hermitian_min_eig(b);
  if (!(bmin > 1e-12)) {
    throw IllConditionedError("generalized_max_eig: denominator not positive definite (min eig " +
                              std::to_string(bmin) + ")");
  }
  const ComplexMatrix l = cholesky(b);
  const ComplexMatrix a = anum.hermitian_part();

  // Y = L^{-1} A, then C = Y L^{-*} = (L^{-1} Y*)*
  auto forward = [&](ComplexMatrix rhs) {
    for (std::size_t c = 0; c < rhs.cols(); ++c)
      for (std::size_t i = 0; i < n; ++i) {
        cplx s = rhs(i, c);
        for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * rhs(k, c);
        rhs(i, c) = s / l(i, i);
      }
    return rhs;
  };
  const ComplexMatrix y = forward(a);
  const ComplexMatrix c = forward(y.adjoint()).adjoint();
  return hermitian_eigenvalues(c).back();
}

ComplexMatrix mat_poly_eval(std::span<const cplx> coeffs, const ComplexMatrix& a) {
  require_square(a, "mat_poly_eval");
  const std::size_t n = a.rows();
  ComplexMatrix r(n, n);
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    r = r * a;
    for (std::size_t i = 0; i < n; ++i) r(i, i) += coeffs[k];
  }
  return r;
}

// --------------------------------------------------- general eigenvalues

namespace {

struct Givens {
  double c;
  cplx s;
};

// Rotation G with G (x, y)^T = (r, 0)^T, G = [[c, s], [-conj(s), c]].
Givens make_givens(cplx x, cplx y) {
  const double ax = std::abs(x), ay = std::abs(y);
  if (ay == 0.0) return {1.0, 0.0};
  if (ax == 0.0) return {0.0, std::conj(y) / ay};
  const double r = std::hypot(ax, ay);
  return {ax / r, (x / ax) * std::conj(y) / r};
}

}  // namespace

std::vector<cplx> eigenvalues(const ComplexMatrix& m) {
  require_square(m, "eigenvalues");
  const std::size_t n = m.rows();
  ComplexMatrix h = m;
  if (n == 0) return {};

  // Householder reduction to upper Hessenberg form.
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t len = n - k - 1;
    ComplexVector x(len);
    for (std::size_t i = 0; i < len; ++i) x[i] = h(k + 1 + i, k);
    const double xnorm = x.norm();
    if (xnorm == 0.0) continue;
    const cplx phase = std::abs(x[0]) > 0.0 ? x[0] / std::abs(x[0]) : cplx{1.0};
    ComplexVector v = x;
    v[0] += phase * xnorm;
    const double vnorm = v.norm();
    if (vnorm == 0.0) continue;
    v *= 1.0 / vnorm;
    for (std::size_t j = 0; j < n; ++j) {  // H <- (I - 2vv*) H
      cplx s = 0.0;
      for (std::size_t i = 0; i < len; ++i) s += std::conj(v[i]) * h(k + 1 + i, j);
      for (std::size_t i = 0; i < len; ++i) h(k + 1 + i, j) -= 2.0 * v[i] * s;
    }
    for (std::size_t i = 0; i < n; ++i) {  // H <- H (I - 2vv*)
      cplx s = 0.0;
      for (std::size_t j = 0; j < len; ++j) s += h(i, k + 1 + j) * v[j];
      for (std::size_t j = 0; j < len; ++j) h(i, k + 1 + j) -= 2.0 * s * std::conj(v[j]);
    }
    for (std::size_t i = 2; i < len + 1; ++i) h(k + i, k) = 0.0;
  }

  std::vector<cplx> out(n);
  std::size_t hi = n - 1;
  int iter = 0, total = 0;
  while (true) {
    if (hi == 0) {
      out[0] = h(0, 0);
      break;
    }
    std::size_t l = hi;
    while (l > 0) {
      const double scale = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
      if (std::abs(h(l, l - 1)) <= kEps * (scale > 0.0 ? scale : 1.0)) {
        h(l, l - 1) = 0.0;
        break;
      }
      --l;
    }
    if (l == hi) {
      out[hi] = h(hi, hi);
      --hi;
      iter = 0;
      continue;
    }
    if (++total > 200 * static_cast<int>(n)) {
      throw InconclusiveError("eigenvalues: QR iteration did not converge");
    }
    ++iter;

    cplx shift;
    if (iter % 11 == 0) {
      shift = h(hi, hi) + std::abs(h(hi, hi - 1)) * cplx(0.75, 0.4);  // exceptional shift
    } else {
      const cplx a = h(hi - 1, hi - 1), b = h(hi - 1, hi), c = h(hi, hi - 1), d = h(hi, hi);
      const cplx half = 0.5 * (a - d);
      const cplx disc = std::sqrt(half * half + b * c);
      const cplx mu1 = 0.5 * (a + d) + disc, mu2 = 0.5 * (a + d) - disc;
      shift = std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
    }

    for (std::size_t k = l; k <= hi; ++k) h(k, k) -= shift;
    std::vector<Givens> rot(hi - l);
    for (std::size_t k = l; k < hi; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      rot[k - l] = g;
      for (std::size_t j = k; j <= hi; ++j) {
        const cplx x = h(k, j), y = h(k + 1, j);
        h(k, j) = g.c * x + g.s * y;
        h(k + 1, j) = -std::conj(g.s) * x + g.c * y;
      }
    }
    for (std::size_t k = l; k < hi; ++k) {
      const Givens& g = rot[k - l];
      const std::size_t top = std::min(k + 2, hi);
      for (std::size_t i = l; i <= top; ++i) {  // H <- H G*
        const cplx x = h(i, k), y = h(i, k + 1);
        h(i, k) = g.c * x + std::conj(g.s) * y;
        h(i, k + 1) = -g.s * x + g.c * y;
      }
    }
    for (std::size_t k = l; k <= hi; ++k) h(k, k) += shift;
  }
  return out;
}

ComplexVector solve(const ComplexMatrix& a, const ComplexVector& b) {
  require_square(a, "solve");
  const std::size_t n = a.rows();
  if (b.size() != n) throw DimensionError("solve: right-hand side length mismatch");
  ComplexMatrix lu = a;
  ComplexVector x = b;
  const double scale = std::max(a.frobenius_norm(), std::numeric_limits<double>::min());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
    if (std::abs(lu(piv, k)) <= 1e2 * kEps * scale) {
      throw IllConditionedError("solve: matrix numerically singular");
    }
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      std::swap(x[k], x[piv]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx f = lu(i, k) / lu(k, k);
      for (std::size_t j = k; j < n; ++j) lu(i, j) -= f * lu(k, j);
      x[i] -= f * x[k];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    cplx s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= lu(i, j) * x[j];
    x[i] = s / lu(i, i);
  }
  return x;
}

double spectral_norm(const ComplexMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  const ComplexMatrix gram = a.adjoint() * a;
  return std::sqrt(std::max(0.0, -hermitian_min_eig(-1.0 * gram)));
}

ComplexMatrix null_space(const ComplexMatrix& m, double tol) {
  const std::size_t n = m.cols();
  const HermitianEigen eig = hermitian_eigen(m.adjoint() * m);
  std::size_t k = 0;
  while (k < n && eig.values[k] <= tol * tol) ++k;
  return eig.vectors.block(0, 0, n, k);
}

}  // namespace lfball
