#pragma once

// Exact arithmetic in Z[i][x,y]: bivariate polynomials whose coefficients are
// Gaussian integers with arbitrary-precision parts. Every weight used by the
// gadgets (naturals, integers, i, powers of x, colors in Z[y]) lives here.

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace combspec {

using BigInt = boost::multiprecision::cpp_int;

class GaussInt {
 public:
  GaussInt() = default;
  GaussInt(BigInt re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussInt(long long re) : re_(re) {}          // NOLINT(google-explicit-constructor)
  GaussInt(BigInt re, BigInt im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussInt i() { return GaussInt(0, 1); }

  const BigInt& re() const { return re_; }
  const BigInt& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const { return re_ == 1 && im_.is_zero(); }

  GaussInt conj() const { return {re_, -im_}; }
  BigInt norm() const { return re_ * re_ + im_ * im_; }

  GaussInt& operator+=(const GaussInt& o);
  GaussInt& operator-=(const GaussInt& o);
  GaussInt& operator*=(const GaussInt& o);

  friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
  friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
  friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
  friend GaussInt operator-(const GaussInt& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussInt& a, const GaussInt& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Quotient q with q * d == *this, or nullopt when d does not divide.
  std::optional<GaussInt> divide_exact(const GaussInt& d) const;

  /// Lexicographic on (re, im); only used to canonicalize output order.
  friend std::strong_ordering compare(const GaussInt& a, const GaussInt& b);

  std::size_t hash() const;
  std::string to_string() const;

 private:
  BigInt re_{0};
  BigInt im_{0};
};

struct Monomial {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct Term {
  Monomial mono;
  GaussInt coef;
  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coef == b.coef;
  }
};

struct Classification {
  bool is_zero = false;
  bool is_constant = false;
  bool is_nonzero_pure_imaginary = false;
  bool is_in_minus_i_plus_Z = false;
};

/// Sparse polynomial kept in canonical form: terms sorted by (deg_x, deg_y),
/// no zero coefficients. Equal values have equal term lists and equal hashes.
class RingElem {
 public:
  using TermList = boost::container::small_vector<Term, 1>;

  RingElem() = default;
  RingElem(long long c);  // NOLINT(google-explicit-constructor)
  RingElem(GaussInt c);   // NOLINT(google-explicit-constructor)

  static RingElem monomial(GaussInt c, std::uint32_t deg_x, std::uint32_t deg_y = 0);
  static RingElem x(std::uint32_t power = 1) { return monomial(1, power, 0); }
  static RingElem y(std::uint32_t power = 1) { return monomial(1, 0, power); }
  static RingElem i() { return RingElem(GaussInt::i()); }
  /// Canonicalizes: sorts, merges equal monomials, drops zeros.
  static RingElem from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return {terms_.data(), terms_.size()}; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// The constant value when is_constant(), including zero.
  std::optional<GaussInt> constant() const;
  std::uint32_t degree_x() const;

  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a);
  friend bool operator==(const RingElem& a, const RingElem& b) { return a.terms_ == b.terms_; }

  /// Total order used for canonical output; not related to any ring order.
  friend std::strong_ordering compare(const RingElem& a, const RingElem& b);
  friend bool operator<(const RingElem& a, const RingElem& b) { return compare(a, b) < 0; }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  friend class RingAccumulator;
  TermList terms_;
};

/// Collects many products and sums, canonicalizing once at the end.
class RingAccumulator {
 public:
  void add(const RingElem& a);
  void add_product(const RingElem& a, const RingElem& b);
  void add_term(Monomial m, GaussInt c);
  RingElem take();

 private:
  std::vector<Term> pending_;
};

GaussInt eval(const RingElem& p, const GaussInt& x_val, const GaussInt& y_val);
/// Substitutes x only; the result is a polynomial in y.
RingElem eval_x(const RingElem& p, const GaussInt& x_val);
/// Coefficient of x^j as a polynomial in y (every term has deg_x = 0).
RingElem coef_x(const RingElem& p, std::uint32_t j);
/// Throws Error{not_divisible} if some coefficient is not a multiple of d.
RingElem exact_div(const RingElem& p, const GaussInt& d);
Classification classify(const RingElem& c);

struct RingElemHash {
  std::size_t operator()(const RingElem& r) const { return r.hash(); }
};

}  // namespace combspec
