#include "betamaps/series.hpp"

#include <algorithm>

namespace betamaps {

OrderMismatchError::OrderMismatchError(std::size_t a, std::size_t b)
    : std::invalid_argument("series truncation orders differ: " + std::to_string(a) + " vs " +
                            std::to_string(b)) {}

TruncatedBiSeries::TruncatedBiSeries(std::size_t max_x_degree)
    : max_x_degree_(max_x_degree), slices_(max_x_degree + 1) {}

TruncatedBiSeries TruncatedBiSeries::monomial(std::size_t max_x_degree, std::size_t n,
                                              std::size_t k, const BigInt& coeff) {
  TruncatedBiSeries s(max_x_degree);
  s.add_to(n, k, coeff);
  return s;
}

TruncatedBiSeries TruncatedBiSeries::constant(std::size_t max_x_degree, const BigInt& c) {
  return monomial(max_x_degree, 0, 0, c);
}

void TruncatedBiSeries::trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void TruncatedBiSeries::check_order(const TruncatedBiSeries& o) const {
  if (o.max_x_degree_ != max_x_degree_) throw OrderMismatchError(max_x_degree_, o.max_x_degree_);
}

BigInt TruncatedBiSeries::coeff(std::size_t n, std::size_t k) const {
  if (n > max_x_degree_ || k >= slices_[n].size()) return 0;
  return slices_[n][k];
}

void TruncatedBiSeries::add_to(std::size_t n, std::size_t k, const BigInt& value) {
  if (n > max_x_degree_ || value == 0) return;
  Poly& p = slices_[n];
  if (p.size() <= k) p.resize(k + 1);
  p[k] += value;
  trim(p);
}

std::optional<std::size_t> TruncatedBiSeries::y_degree(std::size_t n) const {
  if (n > max_x_degree_ || slices_[n].empty()) return std::nullopt;
  return slices_[n].size() - 1;
}

TruncatedBiSeries TruncatedBiSeries::operator+(const TruncatedBiSeries& o) const {
  check_order(o);
  TruncatedBiSeries r = *this;
  for (std::size_t n = 0; n <= max_x_degree_; ++n) {
    Poly& p = r.slices_[n];
    const Poly& q = o.slices_[n];
    if (p.size() < q.size()) p.resize(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) p[k] += q[k];
    trim(p);
  }
  return r;
}

TruncatedBiSeries TruncatedBiSeries::operator-() const { return scale(-1); }

TruncatedBiSeries TruncatedBiSeries::operator-(const TruncatedBiSeries& o) const {
  return *this + (-o);
}

TruncatedBiSeries TruncatedBiSeries::operator*(const TruncatedBiSeries& o) const {
  check_order(o);
  TruncatedBiSeries r(max_x_degree_);
  for (std::size_t i = 0; i <= max_x_degree_; ++i) {
    const Poly& p = slices_[i];
    if (p.empty()) continue;
    for (std::size_t j = 0; i + j <= max_x_degree_; ++j) {
      const Poly& q = o.slices_[j];
      if (q.empty()) continue;
      Poly& out = r.slices_[i + j];
      if (out.size() < p.size() + q.size() - 1) out.resize(p.size() + q.size() - 1);
      for (std::size_t a = 0; a < p.size(); ++a) {
        if (p[a] == 0) continue;
        for (std::size_t b = 0; b < q.size(); ++b) out[a + b] += p[a] * q[b];
      }
    }
  }
  for (auto& p : r.slices_) trim(p);
  return r;
}

TruncatedBiSeries TruncatedBiSeries::scale(const BigInt& c) const {
  TruncatedBiSeries r = *this;
  for (auto& p : r.slices_) {
    for (auto& v : p) v *= c;
    trim(p);
  }
  return r;
}

TruncatedBiSeries TruncatedBiSeries::pow(unsigned e) const {
  TruncatedBiSeries result = constant(max_x_degree_, 1);
  TruncatedBiSeries base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

TruncatedBiSeries TruncatedBiSeries::inverse() const {
  const Poly& head = slices_[0];
  if (head.size() != 1 || (head[0] != 1 && head[0] != -1)) {
    throw std::domain_error("series inverse needs x^0 coefficient +1 or -1");
  }
  const BigInt unit = head[0];  // its own inverse
  TruncatedBiSeries g(max_x_degree_);
  g.slices_[0] = {unit};
  for (std::size_t n = 1; n <= max_x_degree_; ++n) {
    // g_n = -unit * sum_{i=1..n} f_i g_{n-i}
    Poly acc;
    for (std::size_t i = 1; i <= n; ++i) {
      const Poly& f = slices_[i];
      const Poly& q = g.slices_[n - i];
      if (f.empty() || q.empty()) continue;
      if (acc.size() < f.size() + q.size() - 1) acc.resize(f.size() + q.size() - 1);
      for (std::size_t a = 0; a < f.size(); ++a) {
        for (std::size_t b = 0; b < q.size(); ++b) acc[a + b] += f[a] * q[b];
      }
    }
    for (auto& v : acc) v *= -unit;
    trim(acc);
    g.slices_[n] = std::move(acc);
  }
  return g;
}

TruncatedBiSeries TruncatedBiSeries::substitute_y1() const {
  TruncatedBiSeries r(max_x_degree_);
  for (std::size_t n = 0; n <= max_x_degree_; ++n) {
    BigInt sum = 0;
    for (const auto& v : slices_[n]) sum += v;
    r.add_to(n, 0, sum);
  }
  return r;
}

TruncatedBiSeries TruncatedBiSeries::divided_difference_y1() const {
  TruncatedBiSeries r(max_x_degree_);
  for (std::size_t n = 0; n <= max_x_degree_; ++n) {
    const Poly& p = slices_[n];
    if (p.size() < 2) continue;
    Poly& out = r.slices_[n];
    out.assign(p.size() - 1, 0);
    for (std::size_t k = 1; k < p.size(); ++k) {
      for (std::size_t j = 0; j < k; ++j) out[j] += p[k];
    }
    trim(out);
  }
  return r;
}

bool TruncatedBiSeries::is_zero() const {
  return std::all_of(slices_.begin(), slices_.end(), [](const Poly& p) { return p.empty(); });
}

std::optional<TruncatedBiSeries::Term> TruncatedBiSeries::first_nonzero() const {
  for (std::size_t n = 0; n <= max_x_degree_; ++n) {
    for (std::size_t k = 0; k < slices_[n].size(); ++k) {
      if (slices_[n][k] != 0) return Term{n, k, slices_[n][k]};
    }
  }
  return std::nullopt;
}

std::vector<TruncatedBiSeries::Term> TruncatedBiSeries::terms() const {
  std::vector<Term> out;
  for (std::size_t n = 0; n <= max_x_degree_; ++n) {
    for (std::size_t k = 0; k < slices_[n].size(); ++k) {
      if (slices_[n][k] != 0) out.push_back({n, k, slices_[n][k]});
    }
  }
  return out;
}

bool operator==(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
  return a.max_x_degree_ == b.max_x_degree_ && a.slices_ == b.slices_;
}

// ---------------------------------------------------------------------------
// Censuses and closed forms.

TruncatedBiSeries census_B(std::size_t order, SeriesConvention convention) {
  TruncatedBiSeries s(order);
  for (std::size_t n = 1; n <= order; ++n) {
    std::vector<BigInt> by_label(n + 1, 0);
    generate_all(n, [&](const BetaTree& t) { by_label[static_cast<std::size_t>(t.label)] += 1; });
    if (n == 1) {
      if (convention.drop_single_node_at_k1) by_label[1] = 0;
      if (convention.single_node_at_k0) by_label[0] = 1;
    }
    for (std::size_t k = 0; k <= n; ++k) s.add_to(n, k, by_label[k]);
  }
  return s;
}

TruncatedBiSeries census_A(std::size_t order) {
  TruncatedBiSeries s(order);
  for (std::size_t n = 1; n <= order; ++n) {
    std::vector<BigInt> by_label(2 * n + 1, 0);
    enumerate_fixed(2 * n,
                    [&](const BetaTree& t) { by_label[static_cast<std::size_t>(t.label)] += 1; });
    for (std::size_t k = 0; k < by_label.size(); ++k) s.add_to(n, k, by_label[k]);
  }
  return s;
}

TruncatedBiSeries lagrange_u(std::size_t order) {
  TruncatedBiSeries u(order);
  for (std::size_t n = 1; n <= order; ++n) u.add_to(n, 0, count_fixed(n));
  return u;
}

TruncatedBiSeries iterate_u(std::size_t order) {
  const auto one = TruncatedBiSeries::constant(order, 1);
  const auto x = TruncatedBiSeries::monomial(order, 1, 0);
  TruncatedBiSeries u(order);
  // Each pass fixes at least one more coefficient.
  for (std::size_t i = 0; i < order; ++i) u = x * (one - u).pow(2).inverse();
  return u;
}

TruncatedBiSeries ternary_T(std::size_t order) {
  const auto one = TruncatedBiSeries::constant(order, 1);
  const auto x = TruncatedBiSeries::monomial(order, 1, 0);
  TruncatedBiSeries t = one;
  for (std::size_t i = 0; i < order; ++i) t = one + x * t.pow(3);
  return t;
}

TruncatedBiSeries btilde_x(std::size_t order) {
  const auto u = lagrange_u(order);
  return u * u * (TruncatedBiSeries::constant(order, 1) - u.scale(2));
}

// ---------------------------------------------------------------------------
// Identity checks.

void CheckResult::require_zero(const std::string& identity, const TruncatedBiSeries& residual) {
  if (!pass) return;
  if (auto t = residual.first_nonzero()) {
    pass = false;
    failing_identity = identity;
    first_failure = *t;
  }
}

CheckResult verify_eq1(std::size_t order) {
  CheckResult r;
  r.name = "eq1";
  const auto one = TruncatedBiSeries::constant(order, 1);
  const auto x = TruncatedBiSeries::monomial(order, 1, 0);
  const auto y = TruncatedBiSeries::monomial(order, 0, 1);
  const auto B = census_B(order);
  const auto Bt_x = btilde_x(order);
  const auto Bt_xy = (B - x) * y;

  r.require_zero("Btilde(x) = B(x) - x", Bt_x - (B.substitute_y1() - x));
  const auto lhs = Bt_xy * Bt_xy + (one - y + x * y * y - y * Bt_x) * Bt_xy -
                   x * y * y * (Bt_x + x * (one - y));
  r.require_zero("Btilde(x,y)^2 + [1-y+xy^2-yBtilde(x)]Btilde(x,y) - xy^2(Btilde(x)+x(1-y))",
                 lhs);
  return r;
}

CheckResult verify_eq2(std::size_t order) {
  CheckResult r;
  r.name = "eq2";
  const auto y = TruncatedBiSeries::monomial(order, 0, 1);
  const auto A = census_A(order);
  const auto B = census_B(order);
  const auto rhs = y * B + y * y * B * A.divided_difference_y1();
  r.require_zero("A(x,y) = yB(x,y) + y^2 B(x,y) (A(x,y)-A(x,1))/(y-1)", A - rhs);
  return r;
}

CheckResult verify_kernel(std::size_t order) {
  CheckResult r;
  r.name = "kernel";
  const auto one = TruncatedBiSeries::constant(order, 1);
  const auto u = lagrange_u(order);
  const auto y_star = (one - u).inverse();
  r.require_zero("(y*-1)/y* = u with y* = 1/(1-u)", (y_star - one) * y_star.inverse() - u);
  return r;
}

CheckResult verify_theorem4(std::size_t order) {
  CheckResult r;
  r.name = "thm4";
  const auto one = TruncatedBiSeries::constant(order, 1);
  const auto x = TruncatedBiSeries::monomial(order, 1, 0);
  const auto y = TruncatedBiSeries::monomial(order, 0, 1);
  const auto Axy = census_A(order);
  const auto A = Axy.substitute_y1();

  r.require_zero("A(x) = u(x)", A - lagrange_u(order));
  r.require_zero("A(x)(1-A(x))^2 = x", A * (one - A).pow(2) - x);
  const auto quad = (y.scale(2) * A - one) * Axy * Axy -
                    (y.scale(3) * A * A - y.scale(3) * A + one) * Axy + y * A.pow(3) -
                    y.scale(2) * A * A + A * y;
  r.require_zero("[2yA-1]A(x,y)^2 - [3yA^2-3yA+1]A(x,y) + yA^3 - 2yA^2 + Ay = 0", quad);
  const auto kernel = verify_kernel(order);
  if (r.pass && !kernel.pass) {
    r.pass = false;
    r.failing_identity = kernel.failing_identity;
    r.first_failure = kernel.first_failure;
  }
  return r;
}

CheckResult verify_ternary_link(std::size_t order) {
  CheckResult r;
  r.name = "ternary";
  const auto x = TruncatedBiSeries::monomial(order, 1, 0);
  const auto T = ternary_T(order);
  r.require_zero("T(x) = 1 + xT(x)^3", T - TruncatedBiSeries::constant(order, 1) - x * T.pow(3));
  r.require_zero("u(x) = xT(x)^2", lagrange_u(order) - x * T * T);
  return r;
}

}  // namespace betamaps
