#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace grstab {

// Error taxonomy shared across the library.
struct window_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct certification_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct saturation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Which exact coefficient field a computation runs over.
struct FieldSpec {
  enum class Kind { rationals, prime_field };
  Kind kind = Kind::rationals;
  std::uint64_t p = 0;  // prime modulus, meaningful iff kind == prime_field

  static FieldSpec rationals() { return {Kind::rationals, 0}; }
  static FieldSpec prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("modulus is not prime: " + std::to_string(p));
    return {Kind::prime_field, p};
  }
  bool operator==(const FieldSpec&) const = default;
};

/// Arbitrary-precision rational scalar. All arithmetic is exact.
class Rat {
 public:
  using rep = boost::multiprecision::cpp_rational;

  Rat() = default;
  Rat(long long n) : v_(n) {}
  Rat(long long n, long long d) : v_(rep(n) / d) {
    if (d == 0) throw std::domain_error("zero denominator");
  }
  explicit Rat(rep v) : v_(std::move(v)) {}

  bool is_zero() const { return v_.is_zero(); }
  bool operator==(const Rat&) const = default;

  Rat operator-() const { return Rat(-v_); }
  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v_ + b.v_); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v_ - b.v_); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v_ * b.v_); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    return Rat(a.v_ / b.v_);
  }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

  Rat inv() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rat(1 / v_);
  }
  Rat pow(long long e) const {
    Rat base = e < 0 ? inv() : *this;
    unsigned long long n = e < 0 ? -(unsigned long long)e : (unsigned long long)e;
    Rat r(1);
    while (n) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }

  std::string num_str() const { return boost::multiprecision::numerator(v_).str(); }
  std::string den_str() const { return boost::multiprecision::denominator(v_).str(); }
  std::string str() const {
    return den_str() == "1" ? num_str() : num_str() + "/" + den_str();
  }
  static Rat parse(const std::string& num, const std::string& den) {
    using boost::multiprecision::cpp_int;
    cpp_int n(num), d(den);
    if (d == 0) throw parse_error("zero denominator");
    return Rat(rep(n) / rep(d));
  }

  static FieldSpec field_of(const Rat&) { return FieldSpec::rationals(); }

 private:
  rep v_;
};

/// Prime-field scalar carrying its modulus. Modulus 0 marks an integer
/// literal that has not met a concrete field yet; it is lifted on the first
/// mixed operation. Mixing two distinct concrete moduli is a logic error.
class Fp {
 public:
  Fp() = default;
  Fp(long long n) : v_(n) {}
  Fp(long long n, std::uint64_t p) : v_(norm(n, p)), p_(p) {}

  std::uint64_t modulus() const { return p_; }
  long long residue() const { return v_; }

  bool is_zero() const { return v_ == 0; }

  friend Fp join2(Fp a, Fp b) {
    if (a.p_ == b.p_) return a;
    if (a.p_ == 0) return Fp(a.v_, b.p_);
    if (b.p_ != 0) throw std::logic_error("mixed prime moduli");
    return a;
  }
  bool operator==(const Fp& o) const {
    std::uint64_t p = p_ ? p_ : o.p_;
    if (p == 0) return v_ == o.v_;
    return norm(v_, p) == norm(o.v_, p);
  }

  Fp operator-() const { return p_ ? Fp(p_ - (std::uint64_t)v_, p_) : Fp(-v_); }
  friend Fp operator+(Fp a, Fp b) { return apply(a, b, [](long long x, long long y) { return x + y; }); }
  friend Fp operator-(Fp a, Fp b) { return apply(a, b, [](long long x, long long y) { return x - y; }); }
  friend Fp operator*(Fp a, Fp b) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return Fp(a.v_ * b.v_);
    auto x = (unsigned __int128)norm(a.v_, p) * (unsigned __int128)norm(b.v_, p);
    return Fp((long long)(x % p), p);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  Fp inv() const {
    if (p_ == 0) {
      if (v_ == 1 || v_ == -1) return *this;
      throw std::logic_error("inverse of unattached literal");
    }
    if (v_ == 0) throw std::domain_error("inverse of zero");
    // extended Euclid on (v, p)
    long long t = 0, nt = 1, r = (long long)p_, nr = v_;
    while (nr != 0) {
      long long q = r / nr;
      t = std::exchange(nt, t - q * nt);
      r = std::exchange(nr, r - q * nr);
    }
    return Fp(t, p_);
  }
  Fp pow(long long e) const {
    Fp base = e < 0 ? inv() : *this;
    unsigned long long n = e < 0 ? -(unsigned long long)e : (unsigned long long)e;
    Fp r(1, p_);
    if (p_ == 0) r = Fp(1);
    while (n) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }

  std::string str() const { return std::to_string(v_); }

  static FieldSpec field_of(const Fp& x) { return FieldSpec::prime(x.p_); }

 private:
  static long long norm(long long v, std::uint64_t p) {
    if (p == 0) return v;
    long long r = v % (long long)p;
    return r < 0 ? r + (long long)p : r;
  }
  template <class F>
  static Fp apply(Fp a, Fp b, F f) {
    std::uint64_t p = a.p_ ? a.p_ : b.p_;
    return p ? Fp(f(norm(a.v_, p), norm(b.v_, p)), p) : Fp(f(a.v_, b.v_));
  }

  long long v_ = 0;
  std::uint64_t p_ = 0;
};

template <class K>
concept ScalarField = requires(K a, K b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a.inv() } -> std::convertible_to<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
};

}  // namespace grstab
