#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace sumfree {

__extension__ using u128 = unsigned __int128;

/// Element of F_{2^n}: bit j of `bits` is the coefficient of X^j. Trivial
/// type; `Fe{}` is zero.
struct Fe {
  std::uint64_t bits;

  constexpr bool is_zero() const noexcept { return bits == 0; }
  constexpr friend Fe operator+(Fe a, Fe b) noexcept { return Fe{a.bits ^ b.bits}; }
  constexpr Fe& operator+=(Fe o) noexcept {
    bits ^= o.bits;
    return *this;
  }
  constexpr friend bool operator==(Fe, Fe) noexcept = default;
  constexpr friend auto operator<=>(Fe, Fe) noexcept = default;
};

/// Carryless product of two 64-bit words.
u128 clmul(std::uint64_t a, std::uint64_t b) noexcept;

/// Degree of a bit-vector polynomial over F_2 (-1 for the zero polynomial).
inline int poly_degree(u128 p) noexcept {
  const auto hi = static_cast<std::uint64_t>(p >> 64);
  if (hi != 0) return 127 - std::countl_zero(hi);
  const auto lo = static_cast<std::uint64_t>(p);
  return lo == 0 ? -1 : 63 - std::countl_zero(lo);
}

u128 poly_mod(u128 a, u128 m);
u128 poly_gcd(u128 a, u128 b);
/// a * b mod m for deg m <= 64 and deg a, deg b < deg m.
u128 poly_mulmod(u128 a, u128 b, u128 m);
/// Full product; the caller guarantees deg a + deg b <= 127.
u128 poly_mul(u128 a, u128 b);
/// Quotient and remainder of a / b over F_2.
std::pair<u128, u128> poly_divmod(u128 a, u128 b);

/// Decides irreducibility over F_2 of the polynomial with coefficient bits
/// `bits` (degree up to 127); Rabin's test.
bool is_irreducible(u128 bits);

/// Lowest-weight irreducible modulus of degree n: the trinomial X^n+X^a+1 with
/// least a, else the pentanomial X^n+X^a+X^b+X^c+1 with least (a, b, c), else
/// the numerically least irreducible. Throws NoModulusFound (unreachable for n <= 64).
u128 default_modulus(int n);

/// F_{2^n} = F_2[X]/(modulus), 1 <= n <= 64. Immutable and cheap to copy;
/// fields with n <= kTableMaxDegree share log/antilog tables.
class Field {
 public:
  static constexpr int kMaxDegree = 64;
  static constexpr int kTableMaxDegree = 16;

  /// Validates that `modulus` is monic of degree n, has constant term 1 and
  /// is irreducible; throws InvalidModulus otherwise.
  Field(int n, u128 modulus);

  /// The field built on default_modulus(n).
  static Field standard(int n);

  int n() const noexcept { return n_; }
  u128 modulus() const noexcept { return (u128{1} << n_) | tail_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(Fe a) const noexcept { return (a.bits & ~mask_) == 0; }
  bool has_tables() const noexcept { return log_ != nullptr; }

  /// Truncates raw bits to a valid element.
  Fe element(std::uint64_t raw) const noexcept { return Fe{raw & mask_}; }
  /// The basis element X^j, 0 <= j < n.
  Fe x_pow(int j) const noexcept { return Fe{std::uint64_t{1} << j}; }

  Fe mul(Fe a, Fe b) const noexcept {
    if (log_ != nullptr) {
      if (a.bits == 0 || b.bits == 0) return Fe{};
      return Fe{exp_[log_[a.bits] + log_[b.bits]]};
    }
    return mul_portable(a, b);
  }
  /// Shift-XOR product with modular reduction; the normative multiply.
  Fe mul_portable(Fe a, Fe b) const noexcept { return reduce(clmul(a.bits, b.bits)); }
  Fe square(Fe a) const noexcept { return mul(a, a); }

  /// Multiplicative inverse; throws ZeroInverse for 0.
  Fe inv(Fe a) const;
  /// Extended Euclid over F_2[X].
  Fe inv_euclid(Fe a) const;
  /// a^(2^n - 2) by square-and-multiply.
  Fe inv_pow(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, std::uint64_t e) const noexcept;
  Fe pow(Fe a, u128 e) const noexcept;
  /// a^(2^i) by i squarings.
  Fe frob_pow(Fe a, int i) const noexcept;

  /// Absolute trace Tr_{2^n/2}(a), via the precomputed trace of each X^j.
  bool trace(Fe a) const noexcept { return (std::popcount(a.bits & trace_mask_) & 1) != 0; }
  /// Sum of the n conjugates, computed literally.
  bool trace_by_definition(Fe a) const noexcept;

  /// Reduces a polynomial of degree < 2n modulo the field modulus.
  Fe reduce(u128 wide) const noexcept {
    while (const u128 hi = wide >> n_) {
      wide &= mask_;
      for (std::uint64_t t = tail_; t != 0; t &= t - 1) wide ^= hi << std::countr_zero(t);
    }
    return Fe{static_cast<std::uint64_t>(wide)};
  }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.n_ == b.n_ && a.tail_ == b.tail_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> exp;
  };

  void build_tables();

  int n_ = 0;
  std::uint64_t tail_ = 0;  // modulus minus X^n
  std::uint64_t mask_ = 0;
  std::uint64_t trace_mask_ = 0;
  std::shared_ptr<const Tables> tables_;
  const std::uint32_t* log_ = nullptr;
  const std::uint32_t* exp_ = nullptr;
};

/// Lowercase hex without prefix.
std::string to_hex(std::uint64_t word);
std::string to_hex(u128 word);
inline std::string to_hex(Fe a) { return to_hex(a.bits); }
/// Decimal digits of a 128-bit count.
std::string to_decimal(u128 v);
/// Parses hex with optional 0x prefix; throws ParseError.
u128 parse_hex(std::string_view text);
/// Parses an element and checks it lies in the field.
Fe parse_element(std::string_view text, const Field& f);

}  // namespace sumfree
