#pragma once

// Scalar back ends for the integer linear algebra engine. Every algorithm in
// engine.hpp is written once against the free functions below and instantiated
// for Small (overflow-checked int64) and mpz_class. Callers run the Small
// instantiation first and redo the work with mpz_class when Overflow escapes.

#include <gmpxx.h>

#include <cstdint>
#include <utility>

namespace rrat::detail {

struct Overflow {};

class Small {
 public:
  constexpr Small() = default;
  constexpr Small(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  constexpr std::int64_t value() const { return v_; }
  friend constexpr bool operator==(Small a, Small b) { return a.v_ == b.v_; }

 private:
  std::int64_t v_ = 0;
};

// Values outside this window are refused on entry so that negation and abs are
// always representable.
inline constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

inline Small checked(__int128 v) {
  if (v >= kSmallLimit || v <= -kSmallLimit) throw Overflow{};
  return Small(static_cast<std::int64_t>(v));
}

// ---- Small --------------------------------------------------------------

inline bool is_zero(Small a) { return a.value() == 0; }
inline int sgn(Small a) { return (a.value() > 0) - (a.value() < 0); }
inline Small neg(Small a) { return Small(-a.value()); }
inline bool abs_less(Small a, Small b) {
  auto x = a.value() < 0 ? -a.value() : a.value();
  auto y = b.value() < 0 ? -b.value() : b.value();
  return x < y;
}
inline Small add(Small a, Small b) { return checked(static_cast<__int128>(a.value()) + b.value()); }
inline Small sub(Small a, Small b) { return checked(static_cast<__int128>(a.value()) - b.value()); }
inline Small mul(Small a, Small b) { return checked(static_cast<__int128>(a.value()) * b.value()); }
inline void sub_mul(Small& dst, Small q, Small src) {
  dst = checked(static_cast<__int128>(dst.value()) - static_cast<__int128>(q.value()) * src.value());
}
inline void add_mul(Small& dst, Small q, Small src) {
  dst = checked(static_cast<__int128>(dst.value()) + static_cast<__int128>(q.value()) * src.value());
}
inline Small tdiv(Small a, Small b) { return Small(a.value() / b.value()); }
inline Small fdiv(Small a, Small b) {
  auto q = a.value() / b.value();
  if ((a.value() % b.value() != 0) && ((a.value() < 0) != (b.value() < 0))) --q;
  return Small(q);
}
inline bool divides(Small d, Small a) { return a.value() % d.value() == 0; }

// g = s*a + t*b with g = gcd(a, b) > 0; a, b not both zero.
inline void xgcd(Small& g, Small& s, Small& t, Small a, Small b) {
  std::int64_t r0 = a.value(), r1 = b.value();
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = Small(r0);
  s = Small(s0);
  t = Small(t0);
}

// ---- mpz_class ----------------------------------------------------------

inline bool is_zero(const mpz_class& a) { return mpz_sgn(a.get_mpz_t()) == 0; }
inline int sgn(const mpz_class& a) { return mpz_sgn(a.get_mpz_t()); }
inline mpz_class neg(const mpz_class& a) { return -a; }
inline bool abs_less(const mpz_class& a, const mpz_class& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}
inline mpz_class add(const mpz_class& a, const mpz_class& b) { return a + b; }
inline mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline void sub_mul(mpz_class& dst, const mpz_class& q, const mpz_class& src) {
  mpz_submul(dst.get_mpz_t(), q.get_mpz_t(), src.get_mpz_t());
}
inline void add_mul(mpz_class& dst, const mpz_class& q, const mpz_class& src) {
  mpz_addmul(dst.get_mpz_t(), q.get_mpz_t(), src.get_mpz_t());
}
inline mpz_class tdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline bool divides(const mpz_class& d, const mpz_class& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}
inline void xgcd(mpz_class& g, mpz_class& s, mpz_class& t, const mpz_class& a, const mpz_class& b) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// ---- conversions --------------------------------------------------------

template <class T>
T from_integer(const mpz_class& v);

template <>
inline mpz_class from_integer<mpz_class>(const mpz_class& v) {
  return v;
}

template <>
inline Small from_integer<Small>(const mpz_class& v) {
  if (!v.fits_slong_p()) throw Overflow{};
  long x = v.get_si();
  if (x >= kSmallLimit || x <= -kSmallLimit) throw Overflow{};
  return Small(x);
}

inline mpz_class to_integer(const mpz_class& v) { return v; }
inline mpz_class to_integer(Small v) { return mpz_class(static_cast<long>(v.value())); }

}  // namespace rrat::detail
