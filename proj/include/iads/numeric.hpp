#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace iads {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct BackendMismatch : std::domain_error {
  explicit BackendMismatch(const std::string& what) : std::domain_error(what) {}
};

struct InfiniteIndex : std::domain_error {
  explicit InfiniteIndex(const std::string& what) : std::domain_error(what) {}
};

struct NeedsUnitP : std::domain_error {
  explicit NeedsUnitP(const std::string& what) : std::domain_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Floor division (round towards -inf), exact for any sign of a.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Nonnegative remainder of a mod b (b > 0).
inline Int pos_mod(const Int& a, const Int& b) {
  Int r = a % b;
  if (r < 0) r += boost::multiprecision::abs(b);
  return r;
}

inline std::string to_string(const Int& v) { return v.str(); }

inline std::string to_string(const Rat& v) {
  if (boost::multiprecision::denominator(v) == 1)
    return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" +
         boost::multiprecision::denominator(v).str();
}

/// Exact complex rational a + b*i; the coefficient field of every formal sum
/// in this library.
struct GaussianRat {
  Rat re{0};
  Rat im{0};

  GaussianRat() = default;
  GaussianRat(Rat r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRat(long r) : re(r) {}            // NOLINT(google-explicit-constructor)
  GaussianRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] bool is_real() const { return im == 0; }
  [[nodiscard]] GaussianRat conj() const { return {re, -im}; }
  [[nodiscard]] Rat norm_sq() const { return re * re + im * im; }

  GaussianRat& operator+=(const GaussianRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRat& operator-=(const GaussianRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }

  friend GaussianRat operator+(GaussianRat a, const GaussianRat& b) { return a += b; }
  friend GaussianRat operator-(GaussianRat a, const GaussianRat& b) { return a -= b; }
  friend GaussianRat operator-(const GaussianRat& a) { return {-a.re, -a.im}; }
  friend GaussianRat operator*(const GaussianRat& a, const GaussianRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRat& a, const GaussianRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRat& a, const GaussianRat& b) { return !(a == b); }

  [[nodiscard]] std::string str() const {
    if (im == 0) return to_string(re);
    std::string s = "(" + to_string(re);
    s += (im < 0) ? "-" : "+";
    Rat ai = boost::multiprecision::abs(im);
    s += (ai == 1) ? "i" : to_string(ai) + "i";
    return s + ")";
  }
};

}  // namespace iads
