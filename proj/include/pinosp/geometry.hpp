#pragma once

#include <vector>

#include "pinosp/scalar.hpp"

namespace pinosp {

/// Largest supported dimension of V (monomial keys pack 8 coordinates).
inline constexpr int kMaxDim = 8;

using Matrix = std::vector<std::vector<BaseNumber>>;

Matrix identity_matrix(int n);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
/// Gauss-Jordan inverse over Q(i, sqrt2); throws std::domain_error if singular.
Matrix invert(const Matrix& a);

enum class Space { dual, primal };  // V* (covectors) or V (vectors)

/// Coordinates of a covector (in the basis x_p of V*) or a vector (in the
/// dual basis y_p of V, with <x_j, y_k> = delta_jk).
struct CoordVector {
  Space space = Space::dual;
  std::vector<Scalar> coords;

  int dim() const { return static_cast<int>(coords.size()); }
  bool is_zero() const;

  CoordVector& operator+=(const CoordVector& o);
  CoordVector& operator-=(const CoordVector& o);
  friend CoordVector operator+(CoordVector a, const CoordVector& b) { return a += b; }
  friend CoordVector operator-(CoordVector a, const CoordVector& b) { return a -= b; }
  friend CoordVector operator*(const Scalar& c, CoordVector v);
  CoordVector operator-() const;
  friend bool operator==(const CoordVector&, const CoordVector&) = default;
};

using Covector = CoordVector;
using Vector = CoordVector;

Covector basis_covector(int dim, int p);  // x_{p+1}
Vector basis_vector(int dim, int p);      // y_{p+1}

/// Natural pairing <v, u> between V and V*.
Scalar pairing(const CoordVector& a, const CoordVector& b);

/// Symmetric non-degenerate bilinear form B, stored by its Gram matrix on
/// V* (entries B(x_p, x_q)); the form on V is the inverse matrix.
class QuadraticSpace {
 public:
  explicit QuadraticSpace(int dim);
  QuadraticSpace(int dim, Matrix gram);

  int dim() const { return dim_; }
  const Matrix& gram() const { return gram_; }        // B(x_p, x_q)
  const Matrix& gram_dual() const { return inverse_; }  // B(y_p, y_q)
  bool is_orthonormal() const { return orthonormal_; }

  /// The isomorphism V <-> V* with <beta(u1), u2> = B(u1, u2); an involution.
  CoordVector beta(const CoordVector& v) const;
  /// B(u, v) for two covectors or two vectors; throws on mixed spaces.
  Scalar bilinear(const CoordVector& u, const CoordVector& v) const;

 private:
  int dim_;
  Matrix gram_;
  Matrix inverse_;
  bool orthonormal_ = true;
};

/// Maximal isotropic basis z_j^+-, with z_0 for odd dimension.
struct WittBasis {
  int ell = 0;
  std::vector<Covector> plus, minus;  // z_j^+ and z_j^-, j = 1..ell
  bool has_zero = false;
  Covector zero;                      // z_0 when has_zero
  int sector = 1;                     // spinor sector sign for odd d
};

/// z_j^+- = (x_{2j-1} +- i x_{2j}) / 2 and z_0 = x_d; needs an orthonormal basis.
WittBasis witt_basis(const QuadraticSpace& space, int sector = 1);

}  // namespace pinosp
