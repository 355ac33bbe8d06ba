#include "towercalc/exactalg/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace towercalc::exactalg {

namespace {

// Working state: every operation on `a` is mirrored on U/V and their inverses.
class Reducer {
 public:
  explicit Reducer(const IntegerMatrix& m)
      : a_(m),
        u_(IntegerMatrix::identity(m.rows())),
        u_inv_(IntegerMatrix::identity(m.rows())),
        v_(IntegerMatrix::identity(m.cols())),
        v_inv_(IntegerMatrix::identity(m.cols())) {}

  void row_add(std::size_t target, std::size_t source, const Integer& f) {
    a_.add_row_multiple(target, source, f);
    u_.add_row_multiple(target, source, f);
    u_inv_.add_col_multiple(source, target, -f);
  }
  void row_swap(std::size_t i, std::size_t j) {
    a_.swap_rows(i, j);
    u_.swap_rows(i, j);
    u_inv_.swap_cols(i, j);
  }
  void row_negate(std::size_t i) {
    a_.negate_row(i);
    u_.negate_row(i);
    u_inv_.negate_col(i);
  }
  void col_add(std::size_t target, std::size_t source, const Integer& f) {
    a_.add_col_multiple(target, source, f);
    v_.add_col_multiple(target, source, f);
    v_inv_.add_row_multiple(source, target, -f);
  }
  void col_swap(std::size_t i, std::size_t j) {
    a_.swap_cols(i, j);
    v_.swap_cols(i, j);
    v_inv_.swap_rows(i, j);
  }

  // Smallest nonzero magnitude in the trailing block starting at (t, t).
  std::optional<std::pair<std::size_t, std::size_t>> smallest_in_block(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        const Integer& e = a_(i, j);
        if (sgn(e) == 0) continue;
        Integer mag = abs(e);
        if (!best || mag < best_abs) {
          best = {i, j};
          best_abs = std::move(mag);
          if (best_abs == 1) return best;
        }
      }
    }
    return best;
  }

  // Clears row and column t below/right of the pivot. Returns false if some
  // remainder survived, in which case a smaller pivot exists.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (sgn(a_(i, t)) == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
      row_add(i, t, -q);
      if (sgn(a_(i, t)) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (sgn(a_(t, j)) == 0) continue;
      Integer q;
      mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
      col_add(j, t, -q);
      if (sgn(a_(t, j)) != 0) clean = false;
    }
    return clean;
  }

  // Row index of an entry in the trailing block not divisible by the pivot.
  std::optional<std::size_t> non_divisible_row(std::size_t t) const {
    const Integer& p = a_(t, t);
    for (std::size_t i = t + 1; i < a_.rows(); ++i)
      for (std::size_t j = t + 1; j < a_.cols(); ++j)
        if (sgn(a_(i, j)) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), p.get_mpz_t())) return i;
    return std::nullopt;
  }

  SnfDecomposition run() {
    const std::size_t n = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < n; ++t) {
      auto pivot = smallest_in_block(t);
      if (!pivot) break;
      row_swap(t, pivot->first);
      col_swap(t, pivot->second);
      while (true) {
        if (!clear_cross(t)) {
          auto smaller = smallest_in_block(t);
          row_swap(t, smaller->first);
          col_swap(t, smaller->second);
          continue;
        }
        auto bad = non_divisible_row(t);
        if (!bad) break;
        row_add(t, *bad, Integer(1));
      }
      if (sgn(a_(t, t)) < 0) row_negate(t);
    }
    SnfDecomposition out;
    out.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = a_(i, i);
    out.left = std::move(u_);
    out.right = std::move(v_);
    out.left_inverse = std::move(u_inv_);
    out.right_inverse = std::move(v_inv_);
    return out;
  }

 private:
  IntegerMatrix a_, u_, u_inv_, v_, v_inv_;
};

}  // namespace

std::size_t SnfDecomposition::rank() const {
  std::size_t r = 0;
  while (r < diagonal.size() && sgn(diagonal[r]) != 0) ++r;
  return r;
}

SnfDecomposition smith_normal_form(const IntegerMatrix& m) { return Reducer(m).run(); }

}  // namespace towercalc::exactalg
