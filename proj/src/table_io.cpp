#include "whqram/table_io.hpp"

#include <random>
#include <stdexcept>

#include "json.hpp"

namespace whqram {

namespace {

Dyadic parse_value_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    bigint num(s.substr(0, slash));
    bigint den(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("value denominator must be positive");
    int exp2 = 0;
    while ((den & 1) == 0) {
      den >>= 1;
      ++exp2;
    }
    if (den != 1)
      throw std::invalid_argument("value denominator must be a power of two: " + s);
    return {num, exp2};
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return {bigint(s), 0};
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  int frac = static_cast<int>(s.size() - dot - 1);
  bigint num(digits);
  bigint den = 1;
  for (int i = 0; i < frac; ++i) den *= 10;
  // num / den must reduce to a dyadic.
  bigint g = boost::multiprecision::gcd(num < 0 ? bigint(-num) : num, den);
  if (g != 0) {
    num /= g;
    den /= g;
  }
  int exp2 = 0;
  while ((den & 1) == 0) {
    den >>= 1;
    ++exp2;
  }
  if (den != 1) throw std::invalid_argument("decimal value is not dyadic: " + s);
  return {num, exp2};
}

}  // namespace

FunctionTable parse_table_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("values"))
    throw std::invalid_argument("table needs n, d and values fields");
  FunctionTable t;
  t.n = j.at("n").get<int>();
  t.d = j.at("d").get<int>();
  std::string mode = j.value("mode", "binary");
  if (mode == "binary")
    t.mode = TableMode::binary;
  else if (mode == "real")
    t.mode = TableMode::real;
  else
    throw std::invalid_argument("mode must be \"binary\" or \"real\"");
  for (const auto& v : j.at("values")) {
    if (v.is_string())
      t.values.push_back(parse_value_string(v.get<std::string>()));
    else if (v.is_number_integer())
      t.values.push_back(Dyadic(bigint(v.get<long long>()), 0));
    else if (v.is_number_float())
      t.values.push_back(Dyadic::from_double(v.get<double>()));
    else
      throw std::invalid_argument("values must be numbers or strings");
  }
  t.validate();
  return t;
}

std::string table_to_json(const FunctionTable& table) {
  nlohmann::ordered_json j;
  j["n"] = table.n;
  j["d"] = table.d;
  j["mode"] = table.mode == TableMode::binary ? "binary" : "real";
  auto& vals = j["values"] = nlohmann::json::array();
  for (const auto& v : table.values) {
    if (v.is_integer() && v.num() >= std::numeric_limits<long long>::min() &&
        v.num() <= std::numeric_limits<long long>::max())
      vals.push_back(static_cast<long long>(v.num()));
    else
      vals.push_back(v.num().str() + "/" + (bigint(1) << v.exp2()).str());
  }
  return j.dump(2);
}

FunctionTable random_binary_table(int n, int d, int nonzero, std::uint64_t seed) {
  if (n < 1 || d < 1) throw std::invalid_argument("bad table shape");
  long long size = 1ll << n;
  if (nonzero < 0 || nonzero > size) throw std::invalid_argument("nonzero count out of range");
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](std::uint64_t bound) {  // unbiased, implementation-pinned
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
      v = rng();
    } while (v >= limit);
    return v % bound;
  };
  std::vector<long long> vals(size, 0);
  // Choose `nonzero` positions by partial Fisher-Yates over the index list.
  std::vector<long long> idx(size);
  for (long long i = 0; i < size; ++i) idx[i] = i;
  for (int i = 0; i < nonzero; ++i) {
    long long j = i + static_cast<long long>(uniform(size - i));
    std::swap(idx[i], idx[j]);
    std::uint64_t hi = (std::uint64_t{1} << d) - 1;
    vals[idx[i]] = hi ? 1 + static_cast<long long>(uniform(hi)) : 0;
  }
  return FunctionTable::binary(n, d, std::move(vals));
}

}  // namespace whqram
