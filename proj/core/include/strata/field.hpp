#pragma once

// Exact coefficient fields.  Everything downstream is parametrized over a
// field K supporting +, -, *, /, ==, construction from small integers and
// string (de)serialization.  Two instances are provided:
//
//   Rat  -- arbitrary-precision rationals (GMP mpq), the default field
//   Fp   -- a prime field with runtime modulus
//
// No floating point appears anywhere in the engine.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace strata {

// Thrown on malformed input or violated operation preconditions.  The CLI
// maps this to exit code 2.
struct invalid_input : std::runtime_error {
  explicit invalid_input(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Rat: exact rationals

class Rat {
 public:
  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}            // NOLINT: implicit by design
  Rat(long n) : v_(static_cast<signed long>(n)) {}
  Rat(long long n) : v_(static_cast<signed long>(n)) {}
  Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rat from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw invalid_input("bad rational literal: " + s);
    if (q.get_den() == 0) throw invalid_input("zero denominator: " + s);
    q.canonicalize();
    return Rat(q);
  }

  std::string str() const { return v_.get_str(); }
  // Canonical form used in JSON: always "num/den" with positive denominator.
  std::string str_canonical() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  bool is_zero() const { return sgn(v_) == 0; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw invalid_input("division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

  static const char* field_name() { return "Q"; }

 private:
  mpq_class v_;
};

// ---------------------------------------------------------------------------
// Fp: prime field with runtime modulus.
//
// Elements carry their modulus.  Values built from bare integer literals
// (e.g. K(1) inside generic code) bind to the ambient modulus installed by
// FpScope when one is active, otherwise they stay "unbound" and adopt the
// modulus of the first bound operand they meet.  Field-generic code thus
// never threads a modulus around explicitly.

class Fp {
 public:
  Fp() : raw_(0), mod_(ambient()) { if (mod_) *this = reduce(raw_, mod_); }
  Fp(int n) : Fp((long long)n) {}    // NOLINT: implicit by design
  Fp(long n) : Fp((long long)n) {}   // NOLINT: implicit by design
  Fp(long long n) : raw_(n), mod_(ambient()) {
    if (mod_) *this = reduce(raw_, mod_);
  }
  Fp(long long n, std::uint64_t p) : raw_(n), mod_(0) { bind(p); *this = reduce(raw_, p); }

  static std::uint64_t& ambient() {
    thread_local std::uint64_t mod = 0;
    return mod;
  }

  static Fp bound(long long n, std::uint64_t p) { return Fp(n, p); }

  static Fp from_string(const std::string& s) {
    // Unbound integer, reduced when first combined with a bound element.
    return Fp(static_cast<long long>(std::stoll(s)));
  }

  std::uint64_t modulus() const { return mod_; }
  bool is_bound() const { return mod_ != 0; }
  std::int64_t raw() const { return raw_; }

  bool is_zero() const { return raw_ == 0; }

  std::string str() const { return std::to_string(raw_); }
  std::string str_canonical() const { return std::to_string(raw_); }

  Fp operator-() const {
    if (!is_bound()) return unbound(-raw_);
    return reduce(-raw_, mod_);
  }
  friend Fp operator+(const Fp& a, const Fp& b) { return combine(a, b, '+'); }
  friend Fp operator-(const Fp& a, const Fp& b) { return combine(a, b, '-'); }
  friend Fp operator*(const Fp& a, const Fp& b) { return combine(a, b, '*'); }
  friend Fp operator/(const Fp& a, const Fp& b) {
    if (b.is_zero()) throw invalid_input("division by zero in F_p");
    if (!a.is_bound() && !b.is_bound()) {
      if (b.raw_ == 1) return a;
      if (b.raw_ == -1) return unbound(-a.raw_);
      throw invalid_input("unbound F_p division");
    }
    std::uint64_t p = a.is_bound() ? a.mod_ : b.mod_;
    Fp bb = b.is_bound() ? b : reduce(b.raw_, p);
    Fp aa = a.is_bound() ? a : reduce(a.raw_, p);
    return aa * inverse(bb);
  }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    if (a.is_bound() == b.is_bound()) {
      if (a.is_bound() && a.mod_ != b.mod_)
        throw invalid_input("mixed moduli in F_p comparison");
      return a.raw_ == b.raw_;
    }
    std::uint64_t p = a.is_bound() ? a.mod_ : b.mod_;
    return reduce(a.raw_, p).raw_ == reduce(b.raw_, p).raw_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  static const char* field_name() { return "F_p"; }

 private:
  struct raw_tag {};
  Fp(raw_tag, std::int64_t raw, std::uint64_t mod) : raw_(raw), mod_(mod) {}

  static Fp unbound(std::int64_t n) { return Fp(raw_tag{}, n, 0); }
  static Fp reduce(std::int64_t n, std::uint64_t p) {
    std::int64_t m = n % static_cast<std::int64_t>(p);
    if (m < 0) m += static_cast<std::int64_t>(p);
    return Fp(raw_tag{}, m, p);
  }
  void bind(std::uint64_t p) {
    if (p < 2) throw invalid_input("F_p modulus must be >= 2");
    mod_ = p;
  }
  static Fp inverse(const Fp& a) {
    // extended Euclid; modulus is prime so every nonzero element inverts
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(a.mod_), nr = a.raw_;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (r != 1) throw invalid_input("non-invertible element in F_p (modulus not prime?)");
    if (t < 0) t += static_cast<std::int64_t>(a.mod_);
    return reduce(t, a.mod_);
  }
  static Fp combine(const Fp& a, const Fp& b, char op) {
    if (a.is_bound() || b.is_bound()) {
      std::uint64_t p = a.is_bound() ? a.mod_ : b.mod_;
      if (a.is_bound() && b.is_bound() && a.mod_ != b.mod_)
        throw invalid_input("mixed moduli in F_p arithmetic");
      std::int64_t x = a.is_bound() ? a.raw_ : reduce(a.raw_, p).raw_;
      std::int64_t y = b.is_bound() ? b.raw_ : reduce(b.raw_, p).raw_;
      switch (op) {
        case '+': return reduce(x + y, p);
        case '-': return reduce(x - y, p);
        default: {
          using I = __int128;
          I prod = static_cast<I>(x) * static_cast<I>(y);
          return reduce(static_cast<std::int64_t>(prod % static_cast<I>(p)), p);
        }
      }
    }
    switch (op) {
      case '+': return unbound(a.raw_ + b.raw_);
      case '-': return unbound(a.raw_ - b.raw_);
      default: return unbound(a.raw_ * b.raw_);
    }
  }

  std::int64_t raw_;
  std::uint64_t mod_;  // 0 = unbound literal
};

// RAII installer for the ambient F_p modulus.
class FpScope {
 public:
  explicit FpScope(std::uint64_t p) : prev_(Fp::ambient()) {
    if (p < 2) throw invalid_input("F_p modulus must be >= 2");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw invalid_input("F_p modulus must be prime");
    Fp::ambient() = p;
  }
  ~FpScope() { Fp::ambient() = prev_; }
  FpScope(const FpScope&) = delete;
  FpScope& operator=(const FpScope&) = delete;

 private:
  std::uint64_t prev_;
};

}  // namespace strata
