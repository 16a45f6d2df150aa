#include "combspec/ring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "combspec/error.hpp"

namespace combspec {

namespace {

void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::strong_ordering compare_big(const BigInt& a, const BigInt& b) {
  const int c = a.compare(b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool divides(const BigInt& d, const BigInt& v) { return BigInt(v % d).is_zero(); }

// Sorts and merges in place; drops zero coefficients.
template <class Container>
void canonicalize(Container& terms) {
  if (terms.size() > 1) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
  }
  std::size_t out = 0;
  for (std::size_t in = 0; in < terms.size(); ++in) {
    if (out > 0 && terms[out - 1].mono == terms[in].mono) {
      terms[out - 1].coef += terms[in].coef;
      continue;
    }
    if (out > 0 && terms[out - 1].coef.is_zero()) --out;
    if (out != in) terms[out] = std::move(terms[in]);
    ++out;
  }
  if (out > 0 && terms[out - 1].coef.is_zero()) --out;
  terms.erase(terms.begin() + static_cast<std::ptrdiff_t>(out), terms.end());
}

std::string monomial_string(const Monomial& m) {
  std::string s;
  if (m.x > 0) s += m.x == 1 ? "x" : "x^" + std::to_string(m.x);
  if (m.y > 0) s += m.y == 1 ? "y" : "y^" + std::to_string(m.y);
  return s;
}

GaussInt power(const GaussInt& base, std::uint32_t e) {
  GaussInt r(1);
  GaussInt b = base;
  while (e > 0) {
    if (e & 1U) r *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return r;
}

}  // namespace

// --- GaussInt -------------------------------------------------------------

GaussInt& GaussInt::operator+=(const GaussInt& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussInt& GaussInt::operator-=(const GaussInt& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussInt& GaussInt::operator*=(const GaussInt& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  BigInt re = re_ * o.re_ - im_ * o.im_;
  BigInt im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::optional<GaussInt> GaussInt::divide_exact(const GaussInt& d) const {
  if (d.is_zero()) return std::nullopt;
  const BigInt n = d.norm();
  const GaussInt num = *this * d.conj();
  if (!divides(n, num.re_) || !divides(n, num.im_)) return std::nullopt;
  return GaussInt(num.re_ / n, num.im_ / n);
}

std::strong_ordering compare(const GaussInt& a, const GaussInt& b) {
  if (auto c = compare_big(a.re_, b.re_); c != 0) return c;
  return compare_big(a.im_, b.im_);
}

std::size_t GaussInt::hash() const {
  std::size_t seed = boost::multiprecision::hash_value(re_);
  hash_combine(seed, boost::multiprecision::hash_value(im_));
  return seed;
}

std::string GaussInt::to_string() const {
  auto imag = [](const BigInt& v) -> std::string {
    if (v == 1) return "i";
    if (v == -1) return "-i";
    return v.str() + "i";
  };
  if (im_.is_zero()) return re_.str();
  if (re_.is_zero()) return imag(im_);
  std::string s = re_.str();
  if (im_ > 0) s += "+";
  return s + imag(im_);
}

// --- RingElem -------------------------------------------------------------

RingElem::RingElem(long long c) : RingElem(GaussInt(c)) {}

RingElem::RingElem(GaussInt c) {
  if (!c.is_zero()) terms_.push_back(Term{Monomial{}, std::move(c)});
}

RingElem RingElem::monomial(GaussInt c, std::uint32_t deg_x, std::uint32_t deg_y) {
  RingElem r;
  if (!c.is_zero()) r.terms_.push_back(Term{Monomial{deg_x, deg_y}, std::move(c)});
  return r;
}

RingElem RingElem::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  RingElem r;
  r.terms_.assign(std::make_move_iterator(terms.begin()), std::make_move_iterator(terms.end()));
  return r;
}

bool RingElem::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{});
}

bool RingElem::is_one() const {
  return terms_.size() == 1 && terms_[0].mono == Monomial{} && terms_[0].coef.is_one();
}

std::optional<GaussInt> RingElem::constant() const {
  if (terms_.empty()) return GaussInt{};
  if (is_constant()) return terms_[0].coef;
  return std::nullopt;
}

std::uint32_t RingElem::degree_x() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.x);
  return d;
}

RingElem& RingElem::operator+=(const RingElem& o) {
  *this = *this + o;
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  *this = *this - o;
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& o) {
  *this = *this * o;
  return *this;
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  RingElem r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->mono < ib->mono)) {
      r.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->mono < ia->mono) {
      r.terms_.push_back(*ib++);
    } else {
      GaussInt c = ia->coef + ib->coef;
      if (!c.is_zero()) r.terms_.push_back(Term{ia->mono, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return r;
}

RingElem operator-(const RingElem& a) {
  RingElem r = a;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

RingElem operator-(const RingElem& a, const RingElem& b) { return a + (-b); }

RingElem operator*(const RingElem& a, const RingElem& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  RingElem r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Single-term factor: the product stays sorted, only degrees shift.
    const bool a_single = a.terms_.size() == 1;
    const Term& s = a_single ? a.terms_[0] : b.terms_[0];
    const auto& many = a_single ? b.terms_ : a.terms_;
    r.terms_.reserve(many.size());
    for (const auto& t : many) {
      r.terms_.push_back(Term{Monomial{t.mono.x + s.mono.x, t.mono.y + s.mono.y},
                              a_single ? s.coef * t.coef : t.coef * s.coef});
    }
    return r;
  }
  RingAccumulator acc;
  acc.add_product(a, b);
  return acc.take();
}

std::strong_ordering compare(const RingElem& a, const RingElem& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t k = 0; k < n; ++k) {
    const Term& ta = a.terms_[k];
    const Term& tb = b.terms_[k];
    if (auto c = ta.mono <=> tb.mono; c != 0) return c;
    if (auto c = compare(ta.coef, tb.coef); c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::size_t RingElem::hash() const {
  std::size_t seed = terms_.size();
  for (const auto& t : terms_) {
    hash_combine(seed, (static_cast<std::size_t>(t.mono.x) << 32U) | t.mono.y);
    hash_combine(seed, t.coef.hash());
  }
  return seed;
}

std::string RingElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    const std::string mono = monomial_string(t.mono);
    std::string coef;
    const bool compound = !t.coef.re().is_zero() && !t.coef.im().is_zero();
    if (mono.empty()) {
      coef = t.coef.to_string();
    } else if (compound) {
      coef = "(" + t.coef.to_string() + ")";
    } else if (t.coef.is_one()) {
      coef = "";
    } else if (t.coef == GaussInt(-1)) {
      coef = "-";
    } else {
      coef = t.coef.to_string();
    }
    std::string piece = coef + mono;
    if (!s.empty() && piece.front() != '-') s += "+";
    s += piece;
  }
  return s;
}

// --- RingAccumulator ------------------------------------------------------

void RingAccumulator::add(const RingElem& a) {
  pending_.insert(pending_.end(), a.terms_.begin(), a.terms_.end());
}

void RingAccumulator::add_product(const RingElem& a, const RingElem& b) {
  if (a.is_zero() || b.is_zero()) return;
  if (a.is_one()) return add(b);
  if (b.is_one()) return add(a);
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      pending_.push_back(Term{Monomial{ta.mono.x + tb.mono.x, ta.mono.y + tb.mono.y},
                              ta.coef * tb.coef});
    }
  }
}

void RingAccumulator::add_term(Monomial m, GaussInt c) {
  if (!c.is_zero()) pending_.push_back(Term{m, std::move(c)});
}

RingElem RingAccumulator::take() {
  canonicalize(pending_);
  RingElem r;
  r.terms_.assign(std::make_move_iterator(pending_.begin()),
                  std::make_move_iterator(pending_.end()));
  pending_.clear();
  return r;
}

// --- free operations -----------------------------------------------------

GaussInt eval(const RingElem& p, const GaussInt& x_val, const GaussInt& y_val) {
  GaussInt sum;
  for (const auto& t : p.terms()) {
    sum += t.coef * power(x_val, t.mono.x) * power(y_val, t.mono.y);
  }
  return sum;
}

RingElem eval_x(const RingElem& p, const GaussInt& x_val) {
  RingAccumulator acc;
  for (const auto& t : p.terms()) {
    acc.add_term(Monomial{0, t.mono.y}, t.coef * power(x_val, t.mono.x));
  }
  return acc.take();
}

RingElem coef_x(const RingElem& p, std::uint32_t j) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono.x == j) out.push_back(Term{Monomial{0, t.mono.y}, t.coef});
  }
  return RingElem::from_terms(std::move(out));
}

RingElem exact_div(const RingElem& p, const GaussInt& d) {
  if (d.is_zero()) throw Error(ErrorCode::invalid_argument, "exact_div: division by zero");
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    auto q = t.coef.divide_exact(d);
    if (!q) {
      throw Error(ErrorCode::not_divisible, "exact_div: " + p.to_string() +
                                                " is not divisible by " + d.to_string());
    }
    out.push_back(Term{t.mono, std::move(*q)});
  }
  return RingElem::from_terms(std::move(out));
}

Classification classify(const RingElem& c) {
  Classification k;
  k.is_zero = c.is_zero();
  k.is_constant = c.is_constant();
  if (k.is_constant && !k.is_zero) {
    const GaussInt& v = c.terms()[0].coef;
    k.is_nonzero_pure_imaginary = v.re().is_zero() && !v.im().is_zero();
    k.is_in_minus_i_plus_Z = v.im() == -1;
  }
  return k;
}

}  // namespace combspec
