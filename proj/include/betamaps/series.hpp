#ifndef BETAMAPS_SERIES_HPP_
#define BETAMAPS_SERIES_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "betamaps/fixed_points.hpp"

namespace betamaps {

class OrderMismatchError : public std::invalid_argument {
 public:
  OrderMismatchError(std::size_t a, std::size_t b);
};

/// Exact bivariate power series sum c[n][k] x^n y^k, truncated after x^N.
/// Every coefficient is a polynomial in y; univariate series simply keep
/// k = 0. Arithmetic requires both operands to share the same N.
class TruncatedBiSeries {
 public:
  explicit TruncatedBiSeries(std::size_t max_x_degree);

  static TruncatedBiSeries monomial(std::size_t max_x_degree, std::size_t n, std::size_t k,
                                    const BigInt& coeff = 1);
  static TruncatedBiSeries constant(std::size_t max_x_degree, const BigInt& c);

  std::size_t max_x_degree() const { return max_x_degree_; }

  /// Zero for absent terms; terms beyond x^N are never stored.
  BigInt coeff(std::size_t n, std::size_t k) const;
  void add_to(std::size_t n, std::size_t k, const BigInt& value);
  /// Highest y-power with a nonzero coefficient at x^n, or nullopt.
  std::optional<std::size_t> y_degree(std::size_t n) const;

  TruncatedBiSeries operator+(const TruncatedBiSeries& o) const;
  TruncatedBiSeries operator-(const TruncatedBiSeries& o) const;
  TruncatedBiSeries operator*(const TruncatedBiSeries& o) const;
  TruncatedBiSeries operator-() const;
  TruncatedBiSeries scale(const BigInt& c) const;
  TruncatedBiSeries pow(unsigned e) const;

  /// Multiplicative inverse; the x^0 coefficient must be the constant 1 or -1.
  TruncatedBiSeries inverse() const;

  /// Sets y = 1.
  TruncatedBiSeries substitute_y1() const;

  /// sum c[n][k] x^n (1 + y + ... + y^(k-1)), i.e. (S(x,y) - S(x,1)) / (y - 1)
  /// expanded as a geometric sum, with no division.
  TruncatedBiSeries divided_difference_y1() const;

  bool is_zero() const;

  struct Term {
    std::size_t n = 0;
    std::size_t k = 0;
    BigInt value;
  };
  std::optional<Term> first_nonzero() const;
  /// Nonzero terms ordered by (n, k).
  std::vector<Term> terms() const;

  friend bool operator==(const TruncatedBiSeries& a, const TruncatedBiSeries& b);

 private:
  using Poly = std::vector<BigInt>;  // coefficients in y
  static void trim(Poly& p);
  void check_order(const TruncatedBiSeries& o) const;

  std::size_t max_x_degree_;
  std::vector<Poly> slices_;  // slices_[n] is the y-polynomial at x^n
};

/// Bookkeeping applied when turning the tree census into B(x,y): the single
/// node tree is recorded with root label 0 instead of 1.
struct SeriesConvention {
  bool single_node_at_k0 = true;  // b_{1,0} = 1
  bool drop_single_node_at_k1 = true;  // b_{1,1} = 0
};

/// x^n y^k counts beta(1,0)-trees on n nodes with root label k.
TruncatedBiSeries census_B(std::size_t order, SeriesConvention convention = {});
/// x^n y^k counts fixed points of h on 2n nodes with root label k.
TruncatedBiSeries census_A(std::size_t order);

/// u(x) with coefficients (1/n) C(3n-2, n-1), solving x = u (1 - u)^2.
TruncatedBiSeries lagrange_u(std::size_t order);
/// The same series obtained by iterating u <- x / (1 - u)^2.
TruncatedBiSeries iterate_u(std::size_t order);
/// T(x) from T <- 1 + x T^3 (ternary trees by internal nodes).
TruncatedBiSeries ternary_T(std::size_t order);
/// u^2 (1 - 2u).
TruncatedBiSeries btilde_x(std::size_t order);

struct CheckResult {
  std::string name;
  bool pass = true;
  /// First nonzero coefficient of the residual that should vanish.
  std::string failing_identity;
  std::optional<TruncatedBiSeries::Term> first_failure;

  explicit operator bool() const { return pass; }
  void require_zero(const std::string& identity, const TruncatedBiSeries& residual);
};

CheckResult verify_eq1(std::size_t order);
CheckResult verify_eq2(std::size_t order);
CheckResult verify_theorem4(std::size_t order);
CheckResult verify_kernel(std::size_t order);
CheckResult verify_ternary_link(std::size_t order);

}  // namespace betamaps

#endif  // BETAMAPS_SERIES_HPP_
