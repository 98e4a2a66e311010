#include "pinosp/geometry.hpp"

#include <stdexcept>

namespace pinosp {

Matrix identity_matrix(int n) {
  Matrix m(n, std::vector<BaseNumber>(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix c(n, std::vector<BaseNumber>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), std::vector<BaseNumber>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Matrix invert(const Matrix& a) {
  int n = static_cast<int>(a.size());
  Matrix m = a;
  Matrix inv = identity_matrix(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::domain_error("matrix is singular");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    BaseNumber p = m[col][col].inverse();
    for (int j = 0; j < n; ++j) {
      m[col][j] *= p;
      inv[col][j] *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      BaseNumber f = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

bool CoordVector::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

CoordVector& CoordVector::operator+=(const CoordVector& o) {
  if (o.space != space || o.coords.size() != coords.size())
    throw std::invalid_argument("adding coordinate vectors of different spaces");
  for (std::size_t p = 0; p < coords.size(); ++p) coords[p] += o.coords[p];
  return *this;
}

CoordVector& CoordVector::operator-=(const CoordVector& o) { return *this += -o; }

CoordVector operator*(const Scalar& c, CoordVector v) {
  for (auto& x : v.coords) x = c * x;
  return v;
}

CoordVector CoordVector::operator-() const {
  CoordVector v = *this;
  for (auto& x : v.coords) x = -x;
  return v;
}

Covector basis_covector(int dim, int p) {
  Covector u{Space::dual, std::vector<Scalar>(dim)};
  u.coords.at(p) = 1;
  return u;
}

Vector basis_vector(int dim, int p) {
  Vector v{Space::primal, std::vector<Scalar>(dim)};
  v.coords.at(p) = 1;
  return v;
}

Scalar pairing(const CoordVector& a, const CoordVector& b) {
  if (a.space == b.space) throw std::invalid_argument("pairing needs a vector and a covector");
  Scalar s;
  for (std::size_t p = 0; p < a.coords.size(); ++p) s += a.coords[p] * b.coords.at(p);
  return s;
}

QuadraticSpace::QuadraticSpace(int dim) : QuadraticSpace(dim, identity_matrix(dim)) {}

QuadraticSpace::QuadraticSpace(int dim, Matrix gram) : dim_(dim), gram_(std::move(gram)) {
  if (dim < 1 || dim > kMaxDim)
    throw std::invalid_argument("dimension must lie in 1.." + std::to_string(kMaxDim));
  if (static_cast<int>(gram_.size()) != dim) throw std::invalid_argument("Gram matrix has wrong size");
  for (const auto& row : gram_)
    if (static_cast<int>(row.size()) != dim) throw std::invalid_argument("Gram matrix has wrong size");
  for (int p = 0; p < dim; ++p)
    for (int q = 0; q < dim; ++q) {
      if (!(gram_[p][q] == gram_[q][p])) throw std::invalid_argument("Gram matrix is not symmetric");
      if (!(gram_[p][q] == BaseNumber(p == q ? 1 : 0))) orthonormal_ = false;
    }
  inverse_ = invert(gram_);
}

CoordVector QuadraticSpace::beta(const CoordVector& v) const {
  // beta(u) = sum_p B(u, x_p) y_p for covectors; beta(v) = sum_p B(v, y_p) x_p for vectors.
  const Matrix& g = v.space == Space::dual ? gram_ : inverse_;
  CoordVector out{v.space == Space::dual ? Space::primal : Space::dual, std::vector<Scalar>(dim_)};
  for (int p = 0; p < dim_; ++p)
    for (int q = 0; q < dim_; ++q)
      if (!g[p][q].is_zero()) out.coords[p] += v.coords.at(q).scaled(g[p][q]);
  return out;
}

Scalar QuadraticSpace::bilinear(const CoordVector& u, const CoordVector& v) const {
  if (u.space != v.space) throw std::invalid_argument("bilinear form needs arguments from the same space");
  return pairing(beta(u), v);
}

WittBasis witt_basis(const QuadraticSpace& space, int sector) {
  if (!space.is_orthonormal())
    throw std::invalid_argument("Witt basis construction needs an orthonormal basis (identity Gram)");
  if (sector != 1 && sector != -1) throw std::invalid_argument("sector must be +1 or -1");
  int d = space.dim();
  WittBasis w;
  w.ell = d / 2;
  w.sector = sector;
  Scalar half = Scalar(Rational(1, 2));
  Scalar ihalf = Scalar(BaseNumber(0, Rational(1, 2), 0, 0));
  for (int j = 0; j < w.ell; ++j) {
    Covector a = basis_covector(d, 2 * j), b = basis_covector(d, 2 * j + 1);
    w.plus.push_back(half * a + ihalf * b);
    w.minus.push_back(half * a - ihalf * b);
  }
  if (d % 2 == 1) {
    w.has_zero = true;
    w.zero = basis_covector(d, d - 1);
  }
  return w;
}

}  // namespace pinosp
