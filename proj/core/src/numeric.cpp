#include "hermitia/numeric.hpp"

#include <functional>
#include <stdexcept>

namespace hermitia {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational: " + text);
  }
  if (q.get_den() == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  return Rational(std::move(q));
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

std::string Rational::to_string() const {
  if (is_integer()) {
    return numerator_string();
  }
  return numerator_string() + "/" + denominator_string();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

std::size_t Rational::hash() const {
  const std::size_t num = mpz_get_ui(value_.get_num_mpz_t());
  const std::size_t den = mpz_get_ui(value_.get_den_mpz_t());
  const std::size_t sgn = static_cast<std::size_t>(sign() + 1);
  return (num * 0x9E3779B97F4A7C15ULL) ^ (den + 0x7F4A7C15ULL + (num << 6) + (num >> 2)) ^ sgn;
}

int GaussianRational::sign_of_real() const {
  if (!is_real()) {
    throw std::domain_error("sign_of_real on non-real value " + to_string());
  }
  return re_.sign();
}

std::string GaussianRational::to_string() const {
  if (is_real()) {
    return re_.to_string();
  }
  return "(" + re_.to_string() + ")+(" + im_.to_string() + ")i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  // Real operands are the overwhelmingly common case in congruence reduction.
  if (im_.is_zero() && rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("division by zero");
  }
  if (rhs.im_.is_zero()) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  const Rational denom = rhs.norm_sq();
  *this *= rhs.conj();
  re_ /= denom;
  im_ /= denom;
  return *this;
}

std::size_t GaussianRational::hash() const {
  const std::size_t h = re_.hash();
  return h ^ (im_.hash() + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2));
}

}  // namespace hermitia
