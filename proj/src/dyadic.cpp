#include "whqram/dyadic.hpp"

#include <cmath>
#include <limits>

namespace whqram {

Dyadic Dyadic::from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  if (v == 0.0) return Dyadic();
  int e = 0;
  double m = std::frexp(v, &e);  // v = m * 2^e, |m| in [0.5, 1)
  auto mant = static_cast<long long>(std::ldexp(m, 53));
  int exp2 = 53 - e;
  if (exp2 < 0) return Dyadic(bigint(mant) << (-exp2), 0);
  return Dyadic(bigint(mant), exp2);
}

double Dyadic::to_double() const {
  // Good enough for reporting; exact when the value fits a double.
  return static_cast<double>(num_) * std::ldexp(1.0, -exp2_);
}

std::string Dyadic::to_string() const {
  std::string s = num_.str();
  if (exp2_ == 0) return s;
  return s + "/2^" + std::to_string(exp2_);
}

}  // namespace whqram
