#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace whqram {

using bigint = boost::multiprecision::cpp_int;

// Exact dyadic rational num / 2^exp2. All spectrum arithmetic runs on these;
// no floating point is involved until a value reaches the simulator.
class Dyadic {
 public:
  Dyadic() : num_(0), exp2_(0) {}
  Dyadic(bigint num, int exp2) : num_(std::move(num)), exp2_(exp2) { normalize(); }
  Dyadic(long long v) : num_(v), exp2_(0) {}  // NOLINT(google-explicit-constructor)

  const bigint& num() const { return num_; }
  int exp2() const { return exp2_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp2_ == 0; }
  bool is_negative() const { return num_ < 0; }

  // Exact conversion from a double (every finite double is dyadic).
  static Dyadic from_double(double v);
  double to_double() const;

  // Integer value; throws if there is a fractional part.
  bigint to_integer() const {
    if (exp2_ != 0) throw std::invalid_argument("dyadic is not an integer");
    return num_;
  }

  // Largest integer <= value.
  bigint floor() const {
    if (exp2_ == 0) return num_;
    bigint q = num_ >> exp2_;  // arithmetic shift floors for negatives
    return q;
  }

  Dyadic operator-() const { return Dyadic(-num_, exp2_); }
  Dyadic operator+(const Dyadic& o) const {
    int e = std::max(exp2_, o.exp2_);
    return Dyadic((num_ << (e - exp2_)) + (o.num_ << (e - o.exp2_)), e);
  }
  Dyadic operator-(const Dyadic& o) const { return *this + (-o); }
  Dyadic operator*(const Dyadic& o) const { return Dyadic(num_ * o.num_, exp2_ + o.exp2_); }

  // Exact division by 2^k.
  Dyadic div_pow2(int k) const { return Dyadic(num_, exp2_ + k); }
  Dyadic mul_pow2(int k) const { return div_pow2(-k); }

  bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp2_ == o.exp2_; }
  std::strong_ordering operator<=>(const Dyadic& o) const {
    int e = std::max(exp2_, o.exp2_);
    bigint a = num_ << (e - exp2_), b = o.num_ << (e - o.exp2_);
    return a < b ? std::strong_ordering::less
         : a > b ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  // Drops fractional bits below 2^-frac_bits (floor in two's complement).
  Dyadic truncate_fraction(int frac_bits) const {
    if (exp2_ <= frac_bits) return *this;
    return Dyadic(num_ >> (exp2_ - frac_bits), frac_bits);
  }

  std::string to_string() const;  // "p" or "p/2^k", lowest terms

 private:
  void normalize() {
    if (num_ == 0) {
      exp2_ = 0;
      return;
    }
    while (exp2_ > 0 && (num_ & 1) == 0) {
      num_ >>= 1;
      --exp2_;
    }
    if (exp2_ < 0) {
      num_ <<= -exp2_;
      exp2_ = 0;
    }
  }

  bigint num_;
  int exp2_;  // >= 0 after normalization
};

}  // namespace whqram
