#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sphere_lam/error.hpp"

namespace sphere_lam {

// Exact rational with 64-bit parts, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t n, std::int64_t d);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  std::string to_string() const;

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const;
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row major
using RationalVector = std::vector<Rational>;

IntMatrix transpose(const IntMatrix& m);

// Rank by fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);

std::int64_t determinant(const IntMatrix& square);

// Solves columns * x = target, where columns[j] is the j-th column of the system. Returns the
// unique solution when the columns are independent and the system is consistent, nullopt when it
// is inconsistent. Throws RankDeficient when the columns are dependent.
std::optional<RationalVector> solve_unique(const std::vector<IntVector>& columns, const IntVector& target);

// Integer basis of the right kernel of m, each vector primitive.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

// Whether A x = b has a solution with x >= 0, decided by an exact two-phase simplex.
bool nonnegative_feasible(const IntMatrix& a, const IntVector& b);

// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(const IntVector& v);

}  // namespace sphere_lam
