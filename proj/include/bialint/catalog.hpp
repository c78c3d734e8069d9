#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bialint/presentation.hpp"

namespace bialint {

struct CatalogParams {
  /// Deformation parameter for quantum_plane and quantum_laurent.
  Scalar q = Scalar(2);
  /// Matrix size for matrix_bialgebra.
  int n = 2;
  /// Dimension of the algebra A = k^dim in a_times_k.
  int dim = 2;
};

/// k[X] with X group-like.
Presentation poly_grouplike();
/// k[X, X^-1] as a Hopf algebra; Xi stands for X^-1.
Presentation laurent();
/// k_q[x, y] with yx = q xy, x group-like, Delta(y) = x (x) y + y (x) 1.
Presentation quantum_plane(const Scalar& q);
/// k_q[x, x^-1, y]; xi stands for x^-1.
Presentation quantum_laurent(const Scalar& q);
/// Commutative matrix bialgebra M(n) on generators x11 ... xnn.
Presentation matrix_bialgebra(int n);
/// Six-dimensional quotient of the quantum plane at q = -1 with x^3 = x, y^2 = 0.
Presentation sixdim();
/// Sweedler's four-dimensional Hopf algebra.
Presentation sweedler_h4();
/// Group algebra of the cyclic group of order two.
Presentation group_c2();
/// A x k with A = k^dim, generators e1 ... e_dim the primitive idempotents.
Presentation a_times_k(int dim);
/// The ground field.
Presentation trivial_bialgebra();

std::vector<std::string> catalog_names();
/// Throws MalformedInput for an unknown name.
Presentation catalog_load(std::string_view name, const CatalogParams& params = {});

}  // namespace bialint
