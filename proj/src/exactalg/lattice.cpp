#include "towercalc/exactalg/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace towercalc::exactalg {

LinearSystem::LinearSystem(IntegerMatrix b) : b_(std::move(b)), snf_(smith_normal_form(b_)) {}

std::optional<IntegerVector> LinearSystem::solve(const IntegerVector& y) const {
  if (y.size() != b_.rows()) throw std::invalid_argument("LinearSystem::solve: wrong length");
  const IntegerVector c = snf_.left * y;
  const std::size_t r = snf_.rank();
  IntegerVector z(b_.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), snf_.diagonal[i].get_mpz_t())) return std::nullopt;
      mpz_divexact(z[i].get_mpz_t(), c[i].get_mpz_t(), snf_.diagonal[i].get_mpz_t());
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  return snf_.right * z;
}

IntegerMatrix LinearSystem::solve_columns(const IntegerMatrix& y) const {
  if (y.rows() != b_.rows() && y.cols() != 0)
    throw std::invalid_argument("LinearSystem::solve_columns: wrong row count");
  IntegerMatrix x(b_.cols(), y.cols());
  for (std::size_t c = 0; c < y.cols(); ++c) {
    auto col = solve(y.column(c));
    if (!col) throw std::invalid_argument("LinearSystem::solve_columns: no integer solution");
    for (std::size_t r = 0; r < x.rows(); ++r) x(r, c) = (*col)[r];
  }
  return x;
}

IntegerMatrix LinearSystem::kernel_basis() const {
  return snf_.right.column_range(snf_.rank(), b_.cols());
}

IntegerMatrix column_basis(const IntegerMatrix& generators) {
  if (generators.cols() == 0 || generators.rows() == 0) return IntegerMatrix(generators.rows(), 0);
  const SnfDecomposition snf = smith_normal_form(generators);
  const std::size_t r = snf.rank();
  IntegerMatrix basis(generators.rows(), r);
  // G V = U^-1 D, so the scaled leading columns of U^-1 span the same lattice.
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t row = 0; row < generators.rows(); ++row)
      basis(row, c) = snf.left_inverse(row, c) * snf.diagonal[c];
  return basis;
}

IntegerMatrix preimage_lattice(const IntegerMatrix& a, const IntegerMatrix& lattice) {
  if (a.rows() != lattice.rows()) throw std::invalid_argument("preimage_lattice: shape mismatch");
  if (a.rows() == 0) return IntegerMatrix::identity(a.cols());
  const LinearSystem system(hstack(a, -lattice));
  return system.kernel_basis().row_range(0, a.cols());
}

bool lattice_contains(const IntegerMatrix& big, const IntegerMatrix& small) {
  if (small.cols() == 0 || small.is_zero()) return true;
  const LinearSystem system(big);
  for (std::size_t c = 0; c < small.cols(); ++c)
    if (!system.contains(small.column(c))) return false;
  return true;
}

bool lattice_equal(const IntegerMatrix& a, const IntegerMatrix& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

}  // namespace towercalc::exactalg
