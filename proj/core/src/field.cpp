#include "svdim/field.hpp"

#include <string>

#include "svdim/error.hpp"

namespace svdim {

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::modular:
      return "modular";
    case Backend::exact_rational:
      return "exact";
  }
  return "modular";
}

Backend backend_from_string(std::string_view name) {
  if (name == "modular") return Backend::modular;
  if (name == "exact" || name == "exact-rational") return Backend::exact_rational;
  throw InvalidParameters("unknown backend '" + std::string(name) + "'");
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t f = 3; f * f <= value; f += 2) {
    if (value % f == 0) return false;
  }
  return true;
}

void FieldConfig::validate(int max_degree) const {
  if (modulus >= (1u << 31)) {
    throw InvalidParameters("modulus " + std::to_string(modulus) + " must be below 2^31");
  }
  if (!is_prime(modulus)) {
    throw InvalidParameters("modulus " + std::to_string(modulus) + " is not prime");
  }
  if (static_cast<std::int64_t>(modulus) <= static_cast<std::int64_t>(max_degree) + 1) {
    throw InvalidParameters("modulus " + std::to_string(modulus) + " must exceed d+1 = " +
                            std::to_string(max_degree + 1));
  }
}

PrimeField::PrimeField(std::uint32_t modulus) : p_(modulus) {
  if (modulus < 2 || modulus >= (1u << 31)) {
    throw InvalidParameters("prime field modulus out of range");
  }
}

PrimeField::value_type PrimeField::pow(value_type base, std::uint64_t exp) const {
  value_type result = 1;
  while (exp > 0) {
    if (exp & 1u) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1u;
  }
  return result;
}

}  // namespace svdim
