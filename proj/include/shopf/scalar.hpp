// Exact scalar arithmetic over Q (arbitrary precision) and prime fields F_p,
// p an odd prime. No floating point anywhere.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace shopf {

enum class ErrKind {
  schema,                    // malformed input / schema violation
  unsupported_characteristic, // char 2, composite p, p too small for a method
  invalid_input,             // semantic precondition violated
  not_hopf,                  // antipode does not exist / axioms unmet where required
  internal,                  // should-not-happen (restriction failure etc.)
};

class error : public std::runtime_error {
public:
  error(ErrKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
  ErrKind kind;
};

enum class FieldKind { rational, prime };

struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  long p = 0; // characteristic; 0 for Q

  static FieldSpec Q() { return FieldSpec{FieldKind::rational, 0}; }

  static FieldSpec Fp(long p) {
    if (p == 2)
      throw error(ErrKind::unsupported_characteristic, "characteristic 2 is not supported");
    if (p < 3 || !is_prime(p))
      throw error(ErrKind::unsupported_characteristic,
                  "prime-field characteristic must be an odd prime, got " + std::to_string(p));
    if (p > (1L << 30))
      throw error(ErrKind::unsupported_characteristic, "prime too large");
    return FieldSpec{FieldKind::prime, p};
  }

  static bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

  long characteristic() const { return p; }

  std::string str() const {
    return kind == FieldKind::rational ? "Q" : "F" + std::to_string(p);
  }

  // "Q", "F5", "Fp:5" all accepted.
  static FieldSpec parse(const std::string& s) {
    if (s == "Q" || s == "q") return Q();
    std::string t = s;
    if (t.rfind("Fp:", 0) == 0) t = t.substr(3);
    else if (!t.empty() && (t[0] == 'F' || t[0] == 'f')) t = t.substr(1);
    else
      throw error(ErrKind::schema, "cannot parse field '" + s + "'");
    try {
      size_t pos = 0;
      long p = std::stol(t, &pos);
      if (pos != t.size()) throw std::invalid_argument("");
      return Fp(p);
    } catch (const std::invalid_argument&) {
      throw error(ErrKind::schema, "cannot parse field '" + s + "'");
    } catch (const std::out_of_range&) {
      throw error(ErrKind::schema, "cannot parse field '" + s + "'");
    }
  }
};

class Scalar {
public:
  Scalar() : f_(FieldSpec::Q()), q_(0), r_(0) {}

  static Scalar zero(const FieldSpec& f) { return Scalar(f); }
  static Scalar one(const FieldSpec& f) { return of_long(f, 1); }

  static Scalar of_long(const FieldSpec& f, long n) {
    Scalar s(f);
    if (f.kind == FieldKind::rational) s.q_ = n;
    else s.r_ = mod(n, f.p);
    return s;
  }

  static Scalar of_mpq(const FieldSpec& f, const mpq_class& q) {
    if (f.kind == FieldKind::rational) {
      Scalar s(f);
      s.q_ = q;
      s.q_.canonicalize();
      return s;
    }
    return of_mpq_mod_p(f, q);
  }

  // Reduce a rational mod p; denominator must be a unit mod p.
  static Scalar of_mpq_mod_p(const FieldSpec& f, const mpq_class& q) {
    Scalar s(f);
    mpz_class num = q.get_num(), den = q.get_den();
    long n = mpz_class(num % f.p).get_si();
    long d = mpz_class(den % f.p).get_si();
    if (mod(d, f.p) == 0)
      throw error(ErrKind::invalid_input, "denominator divisible by " + std::to_string(f.p));
    s.r_ = mulmod(mod(n, f.p), inv_mod(mod(d, f.p), f.p), f.p);
    return s;
  }

  const FieldSpec& field() const { return f_; }
  bool is_zero() const { return f_.kind == FieldKind::rational ? q_ == 0 : r_ == 0; }
  bool is_one() const { return f_.kind == FieldKind::rational ? q_ == 1 : r_ == 1; }

  const mpq_class& rat() const { return q_; }
  long residue() const { return r_; }

  Scalar operator-() const {
    Scalar s(*this);
    if (f_.kind == FieldKind::rational) s.q_ = -s.q_;
    else s.r_ = s.r_ == 0 ? 0 : f_.p - s.r_;
    return s;
  }

  Scalar& operator+=(const Scalar& o) {
    match(o);
    if (f_.kind == FieldKind::rational) q_ += o.q_;
    else r_ = mod(r_ + o.r_, f_.p);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }
  Scalar& operator*=(const Scalar& o) {
    match(o);
    if (f_.kind == FieldKind::rational) q_ *= o.q_;
    else r_ = mulmod(r_, o.r_, f_.p);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const {
    if (is_zero()) throw error(ErrKind::invalid_input, "division by zero");
    Scalar s(f_);
    if (f_.kind == FieldKind::rational) s.q_ = 1 / q_;
    else s.r_ = inv_mod(r_, f_.p);
    return s;
  }

  bool operator==(const Scalar& o) const {
    if (f_ != o.f_) return false;
    return f_.kind == FieldKind::rational ? q_ == o.q_ : r_ == o.r_;
  }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Total order usable as a map key tie-break; not a field order.
  bool operator<(const Scalar& o) const {
    if (f_.kind == FieldKind::rational) return q_ < o.q_;
    return r_ < o.r_;
  }

  std::string str() const {
    if (f_.kind == FieldKind::rational) return q_.get_str();
    return std::to_string(r_);
  }

  // Accepts "3/4", "-1", "2"; reduces into the field.
  static Scalar parse(const FieldSpec& f, const std::string& s) {
    if (s.empty()) throw error(ErrKind::schema, "empty scalar literal");
    for (char c : s)
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
        throw error(ErrKind::schema, "bad scalar literal '" + s + "'");
    mpq_class q;
    if (q.set_str(s, 10) != 0)
      throw error(ErrKind::schema, "bad scalar literal '" + s + "'");
    if (q.get_den() == 0)
      throw error(ErrKind::schema, "zero denominator in '" + s + "'");
    q.canonicalize();
    return of_mpq(f, q);
  }

  // Q -> F_p reduction (fails if a denominator is divisible by p).
  Scalar reduce_mod(const FieldSpec& fp) const {
    if (f_.kind != FieldKind::rational)
      throw error(ErrKind::invalid_input, "reduce_mod expects a rational scalar");
    return of_mpq_mod_p(fp, q_);
  }

private:
  explicit Scalar(const FieldSpec& f) : f_(f), q_(0), r_(0) {}

  void match(const Scalar& o) const {
    if (f_ != o.f_) throw error(ErrKind::invalid_input, "scalar field mismatch");
  }

  static long mod(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
  }
  static long mulmod(long a, long b, long p) {
    return static_cast<long>((static_cast<__int128>(a) * b) % p);
  }
  static long inv_mod(long a, long p) {
    long t = 0, nt = 1, r = p, nr = mod(a, p);
    while (nr != 0) {
      long q = r / nr;
      t -= q * nt; std::swap(t, nt);
      r -= q * nr; std::swap(r, nr);
    }
    if (r != 1) throw error(ErrKind::invalid_input, "not invertible mod p");
    return mod(t, p);
  }

  FieldSpec f_;
  mpq_class q_;
  long r_;
};

inline Scalar half(const FieldSpec& f) {
  // char != 2 is enforced at FieldSpec construction, so 2 is a unit
  return Scalar::one(f) / Scalar::of_long(f, 2);
}

} // namespace shopf
