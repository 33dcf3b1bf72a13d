#pragma once

// Exact arithmetic in Z[q]: dense integer-coefficient polynomials in the
// indeterminate q, with arbitrary-precision coefficients.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "qschur/errors.hpp"

namespace qschur {

using Int = boost::multiprecision::cpp_int;

class PolyQ {
 public:
  PolyQ() = default;
  PolyQ(long long c) { if (c != 0) c_ = {Int(c)}; }           // NOLINT: implicit
  explicit PolyQ(const Int& c) { if (c != 0) c_ = {c}; }
  explicit PolyQ(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

  // q^k
  static PolyQ q_power(int k);
  // Gaussian integer [[m]] = 1 + q + ... + q^{m-1}; zero for m = 0.
  static PolyQ gauss(int m);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int i) const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { a += b; return a; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { a -= b; return a; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  PolyQ operator-() const;
  bool operator==(const PolyQ& o) const { return c_ == o.c_; }
  bool operator!=(const PolyQ& o) const { return c_ != o.c_; }
  bool operator<(const PolyQ& o) const { return c_ < o.c_; }

  Int eval_at(const Int& q0) const;
  // Exact division by 2; NotDivisible if any coefficient is odd.
  PolyQ halved() const;
  bool all_coeffs_nonneg() const;

  std::string str() const;

 private:
  void normalize();
  std::vector<Int> c_;  // c_[i] = coefficient of q^i; invariant: back() != 0
};

inline PolyQ gauss(int m) { return PolyQ::gauss(m); }
inline Int eval_at(const PolyQ& p, const Int& q0) { return p.eval_at(q0); }
inline PolyQ halve(const PolyQ& p) { return p.halved(); }

}  // namespace qschur
