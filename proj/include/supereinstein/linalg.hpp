#ifndef SUPEREINSTEIN_LINALG_HPP
#define SUPEREINSTEIN_LINALG_HPP

#include <functional>
#include <optional>
#include <vector>

#include "supereinstein/scalar.hpp"

namespace supereinstein {

struct DegenerateForm : ArithmeticError {
    explicit DegenerateForm(const std::string& what) : ArithmeticError(what) {}
};

using ScalarMatrix = std::vector<std::vector<Scalar>>;
using ScalarVector = std::vector<Scalar>;
using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

/// Exact inverse by Gauss-Jordan elimination; throws DegenerateForm if singular.
ScalarMatrix invert(const ScalarMatrix& a);
RationalMatrix invert(const RationalMatrix& a);

/// Solves a x = b for square a; throws DegenerateForm if singular.
ScalarVector solve(const ScalarMatrix& a, const ScalarVector& b);

/// Basis of the right nullspace of a (rows x cols), as column coefficient vectors.
std::vector<ScalarVector> nullspace(const ScalarMatrix& a);

Scalar determinant(const ScalarMatrix& a);

}  // namespace supereinstein

#endif
