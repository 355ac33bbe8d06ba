#include "towercalc/exactalg/abelian_group.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace towercalc::exactalg {

Presentation::Presentation(std::size_t g, IntegerMatrix r) : generators(g), relations(std::move(r)) {
  if (relations.cols() != generators && !(relations.rows() == 0)) {
    throw std::invalid_argument("Presentation: relation width does not match generator count");
  }
  if (relations.rows() == 0) relations = IntegerMatrix(0, generators);
}

FpAbelianGroup::FpAbelianGroup(std::size_t rank, std::vector<Integer> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw std::invalid_argument("FpAbelianGroup: torsion factor below 2");
    if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
      throw std::invalid_argument("FpAbelianGroup: torsion factors violate divisibility chain");
  }
}

FpAbelianGroup FpAbelianGroup::cyclic(const Integer& order) {
  return from_cyclic_orders({order});
}

FpAbelianGroup FpAbelianGroup::from_cyclic_orders(const std::vector<Integer>& orders) {
  std::size_t rank = 0;
  std::vector<Integer> finite;
  for (const auto& o : orders) {
    if (sgn(o) == 0) {
      ++rank;
    } else {
      Integer a = abs(o);
      if (a != 1) finite.push_back(std::move(a));
    }
  }
  // Pairwise (gcd, lcm) replacement leaves a divisibility chain.
  for (std::size_t i = 0; i < finite.size(); ++i) {
    for (std::size_t j = i + 1; j < finite.size(); ++j) {
      Integer g = gcd(finite[i], finite[j]);
      Integer l = finite[i] / g * finite[j];
      finite[i] = std::move(g);
      finite[j] = std::move(l);
    }
  }
  std::vector<Integer> torsion;
  for (auto& t : finite)
    if (t != 1) torsion.push_back(std::move(t));
  return {rank, std::move(torsion)};
}

Integer FpAbelianGroup::order() const {
  if (rank_ != 0) throw std::logic_error("FpAbelianGroup::order on an infinite group");
  return torsion_order();
}

Integer FpAbelianGroup::torsion_order() const {
  Integer o = 1;
  for (const auto& t : torsion_) o *= t;
  return o;
}

Presentation FpAbelianGroup::presentation() const {
  const std::size_t g = generator_count();
  IntegerMatrix rel(torsion_.size(), g);
  for (std::size_t i = 0; i < torsion_.size(); ++i) rel(i, i) = torsion_[i];
  return {g, std::move(rel)};
}

std::vector<Integer> FpAbelianGroup::cyclic_orders() const {
  std::vector<Integer> out = torsion_;
  out.insert(out.end(), rank_, Integer(0));
  return out;
}

std::string FpAbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  if (rank_ > 0) {
    if (!first) os << " + ";
    os << "Z";
    if (rank_ > 1) os << '^' << rank_;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FpAbelianGroup& g) { return os << g.to_string(); }

FpAbelianGroup direct_sum(const FpAbelianGroup& a, const FpAbelianGroup& b) {
  std::vector<Integer> orders = a.cyclic_orders();
  const auto more = b.cyclic_orders();
  orders.insert(orders.end(), more.begin(), more.end());
  return FpAbelianGroup::from_cyclic_orders(orders);
}

FpAbelianGroup group_from_presentation(std::size_t generators, const IntegerMatrix& relations) {
  if (relations.rows() != 0 && relations.cols() != generators)
    throw std::invalid_argument("group_from_presentation: relation width mismatch");
  if (relations.rows() == 0) return FpAbelianGroup::free(generators);
  const SnfDecomposition snf = smith_normal_form(relations);
  std::vector<Integer> orders;
  const std::size_t r = snf.rank();
  for (std::size_t i = 0; i < r; ++i) orders.push_back(snf.diagonal[i]);
  const std::size_t free_rank = generators - r;
  std::vector<Integer> torsion;
  for (auto& d : orders)
    if (d != 1) torsion.push_back(d);
  return {free_rank, std::move(torsion)};
}

FpAbelianGroup group_from_presentation(const Presentation& p) {
  return group_from_presentation(p.generators, p.relations);
}

namespace {

// Pairwise closed forms on cyclic summands; order 0 stands for Z.
Integer hom_cyclic(const Integer& a, const Integer& b) {
  if (sgn(a) == 0) return b;           // Hom(Z, B) = B
  if (sgn(b) == 0) return Integer(1);  // Hom(Z/a, Z) = 0
  return gcd(a, b);
}

Integer ext_cyclic(const Integer& a, const Integer& b) {
  if (sgn(a) == 0) return Integer(1);  // Ext(Z, -) = 0
  if (sgn(b) == 0) return a;           // Ext(Z/a, Z) = Z/a
  return gcd(a, b);
}

Integer tensor_cyclic(const Integer& a, const Integer& b) {
  if (sgn(a) == 0) return b;
  if (sgn(b) == 0) return a;
  return gcd(a, b);
}

template <typename Pairwise>
FpAbelianGroup additive_extension(const FpAbelianGroup& a, const FpAbelianGroup& b, Pairwise f) {
  std::vector<Integer> orders;
  for (const auto& x : a.cyclic_orders())
    for (const auto& y : b.cyclic_orders()) orders.push_back(f(x, y));
  return FpAbelianGroup::from_cyclic_orders(orders);
}

}  // namespace

FpAbelianGroup hom_group(const FpAbelianGroup& a, const FpAbelianGroup& b) {
  return additive_extension(a, b, hom_cyclic);
}

FpAbelianGroup ext_group(const FpAbelianGroup& a, const FpAbelianGroup& b) {
  return additive_extension(a, b, ext_cyclic);
}

FpAbelianGroup tensor_group(const FpAbelianGroup& a, const FpAbelianGroup& b) {
  return additive_extension(a, b, tensor_cyclic);
}

// ---------------------------------------------------------------------------

Subquotient::Subquotient(const IntegerMatrix& numerator, const IntegerMatrix& denominator)
    : basis_(column_basis(numerator)), basis_solver_(basis_) {
  if (denominator.rows() != basis_.rows() && denominator.cols() != 0)
    throw std::invalid_argument("Subquotient: ambient dimension mismatch");
  const std::size_t k = basis_.cols();
  relation_coordinates_ = IntegerMatrix(k, denominator.cols());
  for (std::size_t c = 0; c < denominator.cols(); ++c) {
    auto coords = basis_solver_.solve(denominator.column(c));
    if (!coords) throw std::invalid_argument("Subquotient: denominator not contained in numerator");
    for (std::size_t r = 0; r < k; ++r) relation_coordinates_(r, c) = (*coords)[r];
  }
  snf_ = smith_normal_form(relation_coordinates_);
  const std::size_t s = snf_.rank();
  std::vector<Integer> torsion;
  for (std::size_t i = 0; i < s; ++i) {
    if (snf_.diagonal[i] != 1) {
      kept_.push_back(i);
      torsion.push_back(snf_.diagonal[i]);
    }
  }
  for (std::size_t i = s; i < k; ++i) kept_.push_back(i);
  group_ = FpAbelianGroup(k - s, std::move(torsion));
}

bool Subquotient::contains(const IntegerVector& ambient) const {
  return basis_solver_.contains(ambient);
}

IntegerVector Subquotient::basis_coordinates(const IntegerVector& ambient) const {
  auto c = basis_solver_.solve(ambient);
  if (!c) throw std::invalid_argument("Subquotient: element outside the numerator lattice");
  return *c;
}

IntegerVector Subquotient::coordinates(const IntegerVector& ambient) const {
  const IntegerVector y = snf_.left * basis_coordinates(ambient);
  const std::size_t s = snf_.rank();
  IntegerVector out;
  out.reserve(kept_.size());
  for (std::size_t i : kept_) {
    if (i < s) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), snf_.diagonal[i].get_mpz_t());
      out.push_back(std::move(r));
    } else {
      out.push_back(y[i]);
    }
  }
  return out;
}

IntegerVector Subquotient::generator(std::size_t i) const {
  return basis_ * snf_.left_inverse.column(kept_.at(i));
}

IntegerMatrix Subquotient::generator_matrix() const {
  std::vector<IntegerVector> cols;
  cols.reserve(kept_.size());
  for (std::size_t i = 0; i < kept_.size(); ++i) cols.push_back(generator(i));
  return IntegerMatrix::from_columns(basis_.rows(), cols);
}

Presentation Subquotient::presentation_on_basis() const {
  return {basis_.cols(), relation_coordinates_.transpose()};
}

}  // namespace towercalc::exactalg
