#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

namespace svdim {

enum class Backend { modular, exact_rational };

/// Largest prime below 2^30.
inline constexpr std::uint32_t kDefaultModulus = 1073741789u;

std::string_view to_string(Backend backend);
Backend backend_from_string(std::string_view name);

bool is_prime(std::uint64_t value);

/// Choice of base field. The modulus is also the sampling range for random
/// points when the exact backend is selected.
struct FieldConfig {
  std::uint32_t modulus = kDefaultModulus;
  Backend backend = Backend::modular;

  /// Throws InvalidParameters unless the modulus is a prime below 2^31 that
  /// exceeds max_degree + 1 (so every Euler factor is invertible).
  void validate(int max_degree) const;
};

// clang-format off
template <class F>
concept Field = requires(const F& f, const typename F::value_type& a,
                         const typename F::value_type& b, std::int64_t k) {
  typename F::value_type;
  { f.zero() } -> std::convertible_to<typename F::value_type>;
  { f.one() } -> std::convertible_to<typename F::value_type>;
  { f.from_int(k) } -> std::convertible_to<typename F::value_type>;
  { f.add(a, b) } -> std::convertible_to<typename F::value_type>;
  { f.sub(a, b) } -> std::convertible_to<typename F::value_type>;
  { f.mul(a, b) } -> std::convertible_to<typename F::value_type>;
  { f.is_zero(a) } -> std::same_as<bool>;
};
// clang-format on

/// GF(p) with p < 2^31; elements are canonical residues in [0, p).
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t modulus);

  std::uint32_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type pow(value_type base, std::uint64_t exp) const;
  /// a must be nonzero.
  value_type inv(value_type a) const { return pow(a, p_ - 2); }
  bool is_zero(value_type a) const { return a == 0; }

 private:
  std::uint32_t p_;
};

/// The rationals, backed by GMP. Values are kept in lowest terms by gmpxx.
class RationalField {
 public:
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(std::int64_t v) const { return mpq_class(static_cast<long>(v)); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
};

static_assert(Field<PrimeField>);
static_assert(Field<RationalField>);

}  // namespace svdim
