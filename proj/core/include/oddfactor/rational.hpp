#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace oddfactor {

/// Exact non-negative-or-signed fraction in lowest terms, or +infinity.
///
/// Graph invariants are ratios of small vertex counts, so 64-bit numerators
/// and denominators are plenty; comparisons cross-multiply in 128 bits.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  static constexpr Rational infinity() {
    Rational r;
    r.infinite_ = true;
    r.num_ = 1;
    r.den_ = 0;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  /// "p/q", "p" when q == 1, or "inf".
  std::string str() const;
  /// Accepts the output of str(): "p/q", "p", "inf".
  static std::optional<Rational> parse(std::string_view text);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace oddfactor
