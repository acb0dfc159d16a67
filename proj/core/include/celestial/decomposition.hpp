#pragma once

// Standard decomposition of a proper orthochronous Lorentz matrix as
// rotation * standard boost along x1 * rotation.

#include "celestial/linalg.hpp"
#include "celestial/minkowski.hpp"

namespace celestial {

struct StandardDecomposition {
  Matrix3 r1 = identity<3>();
  Rapidity chi;  // always >= 0
  Matrix3 r2 = identity<3>();
};

/// Lambda = diag(1, r1) * boost_x(chi) * diag(1, r2). The factorization is not
/// unique; only the recomposed product is meaningful. Throws WrongComponent.
StandardDecomposition standard_decompose(const LorentzMatrix& lambda);

LorentzMatrix recompose(const StandardDecomposition& d);

/// arccosh(L00), evaluated as asinh of the norm of the boost column (the same
/// number for a Lorentz matrix, but well conditioned near the identity).
/// Throws WrongComponent.
Rapidity rapidity_of(const LorentzMatrix& lambda);

}  // namespace celestial
