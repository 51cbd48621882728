#include "sphere_lam/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>

#include "sphere_lam/checked.hpp"

namespace sphere_lam {

using checked::int128;

namespace {

using Wide = int128;

Wide gcd_wide(Wide x, Wide y) {
  if (x < 0) x = -x;
  if (y < 0) y = -y;
  while (y != 0) {
    const Wide r = x % y;
    x = y;
    y = r;
  }
  return x;
}

Wide mul_wide(Wide x, Wide y) {
  Wide r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "128-bit multiplication overflow");
  return r;
}

Wide sub_wide(Wide x, Wide y) {
  Wide r;
  if (__builtin_sub_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "128-bit subtraction overflow");
  return r;
}

Rational make_rational(Wide n, Wide d) {
  if (d == 0) throw Error(ErrorKind::InvalidParameters, "rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const Wide g = gcd_wide(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Rational(checked::narrow(n), checked::narrow(d));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw Error(ErrorKind::InvalidParameters, "rational with zero denominator");
  Wide wn = n, wd = d;
  if (wd < 0) {
    wn = -wn;
    wd = -wd;
  }
  const Wide g = gcd_wide(wn, wd);
  if (g > 1) {
    wn /= g;
    wd /= g;
  }
  num_ = checked::narrow(wn);
  den_ = checked::narrow(wd);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& x, const Rational& y) {
  return make_rational(Wide(x.num_) * y.den_ + Wide(y.num_) * x.den_, Wide(x.den_) * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) {
  return make_rational(Wide(x.num_) * y.den_ - Wide(y.num_) * x.den_, Wide(x.den_) * y.den_);
}

Rational operator*(const Rational& x, const Rational& y) {
  return make_rational(Wide(x.num_) * y.num_, Wide(x.den_) * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw Error(ErrorKind::InvalidParameters, "division by zero");
  return make_rational(Wide(x.num_) * y.den_, Wide(x.den_) * y.num_);
}

Rational Rational::operator-() const { return Rational(checked::neg(num_), den_); }

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  return Wide(x.num_) * y.den_ <=> Wide(y.num_) * x.den_;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

namespace {

struct Echelon {
  std::vector<std::vector<Wide>> rows;
  std::vector<std::size_t> pivot_cols;  // pivot column of row r
  int swaps = 0;
};

// Fraction-free row echelon form. Every entry stays an exact minor of the input.
Echelon bareiss(const IntMatrix& m) {
  Echelon e;
  for (const auto& row : m) e.rows.emplace_back(row.begin(), row.end());
  const std::size_t nrows = e.rows.size();
  const std::size_t ncols = nrows == 0 ? 0 : e.rows[0].size();
  Wide prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && e.rows[p][c] == 0) ++p;
    if (p == nrows) continue;
    if (p != r) {
      std::swap(e.rows[p], e.rows[r]);
      ++e.swaps;
    }
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        const Wide num = sub_wide(mul_wide(e.rows[r][c], e.rows[i][j]), mul_wide(e.rows[i][c], e.rows[r][j]));
        if (num % prev != 0) throw Error(ErrorKind::Inconsistent, "inexact Bareiss division");
        e.rows[i][j] = num / prev;
      }
      e.rows[i][c] = 0;
    }
    prev = e.rows[r][c];
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

// Rational solution of the echelon system for the given values of the free columns.
std::vector<Rational> back_substitute(const Echelon& e, std::size_t ncols, std::vector<Rational> x,
                                      std::optional<std::size_t> rhs_col) {
  for (std::size_t r = e.pivot_cols.size(); r-- > 0;) {
    const std::size_t pc = e.pivot_cols[r];
    Rational acc = rhs_col ? Rational(checked::narrow(e.rows[r][*rhs_col])) : Rational(0);
    for (std::size_t j = pc + 1; j < ncols; ++j) {
      if (e.rows[r][j] != 0) acc = acc - Rational(checked::narrow(e.rows[r][j])) * x[j];
    }
    x[pc] = acc / Rational(checked::narrow(e.rows[r][pc]));
  }
  return x;
}

}  // namespace

std::size_t rank(const IntMatrix& m) { return bareiss(m).pivot_cols.size(); }

std::int64_t determinant(const IntMatrix& square) {
  if (square.empty()) return 1;
  const Echelon e = bareiss(square);
  if (e.pivot_cols.size() < square.size()) return 0;
  const Wide d = e.rows.back().back();
  return checked::narrow(e.swaps % 2 == 0 ? d : -d);
}

std::optional<RationalVector> solve_unique(const std::vector<IntVector>& columns, const IntVector& target) {
  const std::size_t n = columns.size();
  const std::size_t dim = target.size();
  IntMatrix aug(dim, IntVector(n + 1));
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j].size() != dim) throw Error(ErrorKind::InvalidParameters, "column dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) aug[i][j] = columns[j][i];
  }
  for (std::size_t i = 0; i < dim; ++i) aug[i][n] = target[i];
  const Echelon e = bareiss(aug);
  std::size_t coefficient_rank = 0;
  for (const auto pc : e.pivot_cols) {
    if (pc == n) return std::nullopt;
    ++coefficient_rank;
  }
  if (coefficient_rank != n) throw Error(ErrorKind::RankDeficient, "dependent columns in solve_unique");
  auto x = back_substitute(e, n, RationalVector(n), n);
  return x;
}

IntVector primitive(const IntVector& v) {
  std::int64_t g = 0;
  for (const auto x : v) g = std::gcd(g, x);
  if (g <= 1) return v;
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  if (m.empty()) return {};
  const std::size_t ncols = m[0].size();
  const Echelon e = bareiss(m);
  std::vector<bool> is_pivot(ncols, false);
  for (const auto pc : e.pivot_cols) is_pivot[pc] = true;
  std::vector<IntVector> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(ncols);
    x[f] = Rational(1);
    x = back_substitute(e, ncols, x, std::nullopt);
    std::int64_t l = 1;
    for (const auto& q : x) l = checked::narrow(Wide(l) / std::gcd(l, q.den()) * q.den());
    IntVector v(ncols);
    for (std::size_t i = 0; i < ncols; ++i) v[i] = checked::narrow(Wide(x[i].num()) * (l / x[i].den()));
    basis.push_back(primitive(v));
  }
  return basis;
}

bool nonnegative_feasible(const IntMatrix& a, const IntVector& b) {
  using Q = boost::multiprecision::cpp_rational;
  const std::size_t m = a.size();
  if (m == 0) return true;
  const std::size_t n = a[0].size();
  // Tableau columns: n originals, m artificials, then the right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Q>> t(m, std::vector<Q>(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const int s = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = Q(s * a[i][j]);
    t[i][n + i] = 1;
    t[i][n + m] = Q(s * b[i]);
    basis[i] = n + i;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Q> cost(width);
  for (std::size_t j = 0; j < width; ++j) {
    if (j >= n && j < n + m) continue;
    for (std::size_t i = 0; i < m; ++i) cost[j] -= t[i][j];
  }
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Q best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Q ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw Error(ErrorKind::Inconsistent, "unbounded phase-one simplex");
    const Q pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Q f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    const Q f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  // -cost[rhs] is the optimal sum of artificials.
  return cost[n + m] == 0;
}

}  // namespace sphere_lam
