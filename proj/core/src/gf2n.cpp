#include "sumfree/gf2n.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "sumfree/error.hpp"

namespace sumfree {

u128 clmul(std::uint64_t a, std::uint64_t b) noexcept {
  std::array<u128, 16> table{};
  table[1] = a;
  for (int i = 2; i < 16; ++i) table[i] = (i & 1) ? (table[i - 1] ^ a) : (table[i / 2] << 1);
  u128 r = 0;
  const int top = b == 0 ? 0 : (63 - std::countl_zero(b)) / 4 * 4;
  for (int s = top; s >= 0; s -= 4) r = (r << 4) ^ table[(b >> s) & 15];
  return r;
}

u128 poly_mod(u128 a, u128 m) {
  const int dm = poly_degree(m);
  if (dm < 0) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
  return a;
}

std::pair<u128, u128> poly_divmod(u128 a, u128 b) {
  const int db = poly_degree(b);
  if (db < 0) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  u128 q = 0;
  for (int d = poly_degree(a); d >= db; d = poly_degree(a)) {
    q |= u128{1} << (d - db);
    a ^= b << (d - db);
  }
  return {q, a};
}

u128 poly_gcd(u128 a, u128 b) {
  while (b != 0) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

u128 poly_mul(u128 a, u128 b) {
  u128 r = 0;
  for (; b != 0; b >>= 1, a <<= 1)
    if (b & 1) r ^= a;
  return r;
}

u128 poly_mulmod(u128 a, u128 b, u128 m) {
  return poly_mod(clmul(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)), m);
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p != 0) continue;
    out.push_back(p);
    while (v % p == 0) v /= p;
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

bool is_irreducible(u128 bits) {
  const int d = poly_degree(bits);
  if (d <= 0) return false;
  if (d == 1) return true;
  if ((bits & 1) == 0) return false;
  if (d > 64) throw Error(ErrorCode::LimitExceeded, "irreducibility test supports degree <= 64");
  // x^(2^i) mod f for i = 0..d.
  std::vector<u128> frob(static_cast<std::size_t>(d) + 1);
  frob[0] = poly_mod(2, bits);
  for (int i = 1; i <= d; ++i) frob[i] = poly_mulmod(frob[i - 1], frob[i - 1], bits);
  if (frob[d] != frob[0]) return false;
  for (std::uint64_t p : prime_factors(static_cast<std::uint64_t>(d))) {
    const u128 h = frob[d / p] ^ frob[0];
    if (poly_degree(poly_gcd(bits, h)) != 0) return false;
  }
  return true;
}

u128 default_modulus(int n) {
  if (n < 1 || n > Field::kMaxDegree)
    throw Error(ErrorCode::InvalidArgument, "field degree must be in 1..64");
  const u128 top = u128{1} << n;
  if (n == 1) return top | 1;
  for (int a = 1; a < n; ++a) {
    const u128 m = top | (u128{1} << a) | 1;
    if (is_irreducible(m)) return m;
  }
  for (int a = 3; a < n; ++a)
    for (int b = 2; b < a; ++b)
      for (int c = 1; c < b; ++c) {
        const u128 m = top | (u128{1} << a) | (u128{1} << b) | (u128{1} << c) | 1;
        if (is_irreducible(m)) return m;
      }
  for (u128 tail = 1; tail < top; tail += 2)
    if (is_irreducible(top | tail)) return top | tail;
  throw Error(ErrorCode::NoModulusFound, "no irreducible of degree " + std::to_string(n));
}

Field::Field(int n, u128 modulus) : n_(n) {
  if (n < 1 || n > kMaxDegree)
    throw Error(ErrorCode::InvalidModulus, "field degree must be in 1..64, got " + std::to_string(n));
  if (poly_degree(modulus) != n)
    throw Error(ErrorCode::InvalidModulus, "modulus " + to_hex(modulus) + " is not of degree " + std::to_string(n));
  if ((modulus & 1) == 0)
    throw Error(ErrorCode::InvalidModulus, "modulus " + to_hex(modulus) + " has zero constant term");
  if (!is_irreducible(modulus))
    throw Error(ErrorCode::InvalidModulus, "modulus " + to_hex(modulus) + " is reducible");
  tail_ = static_cast<std::uint64_t>(modulus ^ (u128{1} << n));
  mask_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int j = 0; j < n; ++j)
    if (trace_by_definition(x_pow(j))) trace_mask_ |= std::uint64_t{1} << j;
  if (n <= kTableMaxDegree) build_tables();
}

Field Field::standard(int n) { return Field(n, default_modulus(n)); }

void Field::build_tables() {
  const std::uint64_t order = mask_;  // 2^n - 1
  const auto primes = prime_factors(order);
  std::uint64_t g = n_ == 1 ? 1 : 2;
  for (;; ++g) {
    bool primitive = true;
    for (std::uint64_t p : primes)
      if (pow(Fe{g}, order / p) == Fe{1}) {
        primitive = false;
        break;
      }
    if (primitive) break;
  }
  auto t = std::make_shared<Tables>();
  t->log.assign(order + 1, 0);
  t->exp.assign(2 * order + 1, 0);
  Fe x{1};
  for (std::uint64_t i = 0; i < order; ++i) {
    t->exp[i] = static_cast<std::uint32_t>(x.bits);
    t->exp[i + order] = static_cast<std::uint32_t>(x.bits);
    t->log[x.bits] = static_cast<std::uint32_t>(i);
    x = mul_portable(x, Fe{g});
  }
  t->exp[2 * order] = 1;
  log_ = t->log.data();
  exp_ = t->exp.data();
  tables_ = std::move(t);
}

Fe Field::pow(Fe a, std::uint64_t e) const noexcept { return pow(a, u128{e}); }

Fe Field::pow(Fe a, u128 e) const noexcept {
  Fe r{1};
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Fe Field::frob_pow(Fe a, int i) const noexcept {
  for (int s = 0; s < i % n_; ++s) a = mul(a, a);
  return a;
}

bool Field::trace_by_definition(Fe a) const noexcept {
  Fe sum{};
  Fe c = a;
  for (int i = 0; i < n_; ++i) {
    sum += c;
    c = mul_portable(c, c);
  }
  return sum.bits == 1;
}

Fe Field::inv(Fe a) const {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of 0");
  if (log_ != nullptr) return Fe{exp_[mask_ - log_[a.bits]]};
  return inv_euclid(a);
}

Fe Field::inv_euclid(Fe a) const {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of 0");
  // Invariants: g1*a = u and g2*a = v modulo the field polynomial.
  u128 u = a.bits;
  u128 v = modulus();
  u128 g1 = 1;
  u128 g2 = 0;
  while (u != 1) {
    int j = poly_degree(u) - poly_degree(v);
    if (j < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      j = -j;
    }
    u ^= v << j;
    g1 ^= g2 << j;
  }
  return Fe{static_cast<std::uint64_t>(poly_mod(g1, modulus()))};
}

Fe Field::inv_pow(Fe a) const {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of 0");
  const u128 e = (u128{1} << n_) - 2;
  return pow(a, e);
}

std::string to_hex(std::uint64_t word) { return to_hex(u128{word}); }

std::string to_hex(u128 word) {
  if (word == 0) return "0";
  std::string s;
  while (word != 0) {
    s.insert(s.begin(), "0123456789abcdef"[static_cast<int>(word & 15)]);
    word >>= 4;
  }
  return s;
}

u128 parse_hex(std::string_view text) {
  if (text.starts_with("0x") || text.starts_with("0X")) text.remove_prefix(2);
  if (text.empty() || text.size() > 32)
    throw Error(ErrorCode::ParseError, "bad hex literal '" + std::string(text) + "'");
  u128 v = 0;
  for (char c : text) {
    const int lc = std::tolower(static_cast<unsigned char>(c));
    int d;
    if (lc >= '0' && lc <= '9')
      d = lc - '0';
    else if (lc >= 'a' && lc <= 'f')
      d = lc - 'a' + 10;
    else
      throw Error(ErrorCode::ParseError, "bad hex literal '" + std::string(text) + "'");
    v = (v << 4) | static_cast<unsigned>(d);
  }
  return v;
}

Fe parse_element(std::string_view text, const Field& f) {
  const u128 v = parse_hex(text);
  if ((v >> 64) != 0 || !f.contains(Fe{static_cast<std::uint64_t>(v)}))
    throw Error(ErrorCode::ParseError, "element " + std::string(text) + " does not fit F_2^" + std::to_string(f.n()));
  return Fe{static_cast<std::uint64_t>(v)};
}

std::string to_decimal(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace sumfree
