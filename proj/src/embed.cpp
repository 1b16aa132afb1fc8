#include "concordia/embed.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <string>
#include <vector>

namespace concordia {

namespace {

constexpr mpfr_prec_t kStartPrec = 128;
constexpr mpfr_prec_t kMaxPrec = 1 << 20;

struct Mp {
  mpfr_t x;
  explicit Mp(mpfr_prec_t prec) { mpfr_init2(x, prec); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
  ~Mp() { mpfr_clear(x); }
};

struct Mq {
  mpq_t q;
  explicit Mq(const Rat& r) {
    mpq_init(q);
    std::string num = boost::multiprecision::numerator(r).str();
    std::string den = boost::multiprecision::denominator(r).str();
    std::string both = num + "/" + den;
    if (mpq_set_str(q, both.c_str(), 10) != 0) throw InternalError("rational conversion failed");
    mpq_canonicalize(q);
  }
  Mq(Mq&& o) noexcept {
    mpq_init(q);
    mpq_swap(q, o.q);
  }
  Mq(const Mq&) = delete;
  Mq& operator=(const Mq&) = delete;
  ~Mq() { mpq_clear(q); }
};

Rat mpfr_to_rat(const mpfr_t x) {
  if (mpfr_zero_p(x)) return Rat(0);
  if (!mpfr_number_p(x)) throw InternalError("non-finite value in enclosure");
  mpz_t z;
  mpz_init(z);
  mpfr_exp_t e = mpfr_get_z_2exp(z, x);
  std::vector<char> buf(mpz_sizeinbase(z, 10) + 2);
  mpz_get_str(buf.data(), 10, z);
  Int mant(buf.data());
  mpz_clear(z);
  if (e >= 0) return Rat(mant << static_cast<unsigned>(e));
  return Rat(mant, Int(1) << static_cast<unsigned>(-e));
}

// enclosure of cos over the mpfr interval [xl, xh]: cos at the (rounded)
// midpoint, padded by the certified distance from that stored midpoint to
// either endpoint (|cos'| <= 1)
void cos_interval(const mpfr_t xl, const mpfr_t xh, mpfr_t out_lo, mpfr_t out_hi, mpfr_prec_t prec) {
  Mp mid(prec), d1(prec), d2(prec), cm_lo(prec), cm_hi(prec);
  mpfr_add(mid.x, xl, xh, MPFR_RNDN);
  mpfr_div_ui(mid.x, mid.x, 2, MPFR_RNDN);
  mpfr_sub(d1.x, xh, mid.x, MPFR_RNDU);
  mpfr_sub(d2.x, mid.x, xl, MPFR_RNDU);
  mpfr_max(d1.x, d1.x, d2.x, MPFR_RNDU);
  mpfr_cos(cm_lo.x, mid.x, MPFR_RNDD);
  mpfr_cos(cm_hi.x, mid.x, MPFR_RNDU);
  mpfr_sub(out_lo, cm_lo.x, d1.x, MPFR_RNDD);
  mpfr_add(out_hi, cm_hi.x, d1.x, MPFR_RNDU);
}

// directed enclosure of 2*pi*a/b
void angle_interval(long a, long b, mpfr_t out_lo, mpfr_t out_hi, mpfr_prec_t prec) {
  Mp pi_lo(prec), pi_hi(prec);
  mpfr_const_pi(pi_lo.x, MPFR_RNDD);
  mpfr_const_pi(pi_hi.x, MPFR_RNDU);
  mpfr_mul_si(out_lo, pi_lo.x, 2 * a, MPFR_RNDD);
  mpfr_mul_si(out_hi, pi_hi.x, 2 * a, MPFR_RNDU);
  mpfr_div_si(out_lo, out_lo, b, MPFR_RNDD);
  mpfr_div_si(out_hi, out_hi, b, MPFR_RNDU);
}

} // namespace

int sign_of_cos_combination(const std::vector<Rat>& c, int b) {
  if (b <= 0) throw PreconditionError("cosine order must be positive");
  std::vector<Mq> coeffs;
  coeffs.reserve(c.size());
  for (const Rat& v : c) coeffs.emplace_back(v);

  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    Mp acc_lo(prec), acc_hi(prec);
    mpfr_set_ui(acc_lo.x, 0, MPFR_RNDD);
    mpfr_set_ui(acc_hi.x, 0, MPFR_RNDU);
    for (size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      Mp xl(prec), xh(prec), cl(prec), ch(prec), tl(prec), th(prec);
      angle_interval(static_cast<long>(k), b, xl.x, xh.x, prec);
      cos_interval(xl.x, xh.x, cl.x, ch.x, prec);
      if (c[k] > 0) {
        mpfr_mul_q(tl.x, cl.x, coeffs[k].q, MPFR_RNDD);
        mpfr_mul_q(th.x, ch.x, coeffs[k].q, MPFR_RNDU);
      } else {
        mpfr_mul_q(tl.x, ch.x, coeffs[k].q, MPFR_RNDD);
        mpfr_mul_q(th.x, cl.x, coeffs[k].q, MPFR_RNDU);
      }
      mpfr_add(acc_lo.x, acc_lo.x, tl.x, MPFR_RNDD);
      mpfr_add(acc_hi.x, acc_hi.x, th.x, MPFR_RNDU);
    }
    if (mpfr_sgn(acc_lo.x) > 0) return 1;
    if (mpfr_sgn(acc_hi.x) < 0) return -1;
  }
  throw InternalError("sign enclosure did not separate from zero; value may be zero");
}

std::pair<Rat, Rat> cos2_enclosure(int a, int b, const Rat& eps) {
  if (b <= 0) throw PreconditionError("cosine order must be positive");
  if (eps <= 0) throw PreconditionError("enclosure width must be positive");
  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    Mp xl(prec), xh(prec), cl(prec), ch(prec);
    angle_interval(a, b, xl.x, xh.x, prec);
    cos_interval(xl.x, xh.x, cl.x, ch.x, prec);
    Rat lo = mpfr_to_rat(cl.x) * 2;
    Rat hi = mpfr_to_rat(ch.x) * 2;
    if (hi - lo <= eps) return {lo, hi};
  }
  throw InternalError("cosine enclosure failed to reach requested width");
}

std::pair<Rat, Rat> acos_fraction_enclosure(const Rat& y, const Rat& eps) {
  if (y <= -2 || y >= 2) throw PreconditionError("acos argument must lie in (-2, 2)");
  if (eps <= 0) throw PreconditionError("enclosure width must be positive");
  Mq t(y / 2);
  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    Mp t_lo(prec), t_hi(prec), a_lo(prec), a_hi(prec), pi_lo(prec), pi_hi(prec), f_lo(prec),
      f_hi(prec);
    mpfr_set_q(t_lo.x, t.q, MPFR_RNDD);
    mpfr_set_q(t_hi.x, t.q, MPFR_RNDU);
    mpfr_acos(a_lo.x, t_hi.x, MPFR_RNDD);
    mpfr_acos(a_hi.x, t_lo.x, MPFR_RNDU);
    mpfr_const_pi(pi_lo.x, MPFR_RNDD);
    mpfr_const_pi(pi_hi.x, MPFR_RNDU);
    mpfr_div(f_lo.x, a_lo.x, pi_hi.x, MPFR_RNDD);
    mpfr_div(f_hi.x, a_hi.x, pi_lo.x, MPFR_RNDU);
    Rat lo = mpfr_to_rat(f_lo.x);
    Rat hi = mpfr_to_rat(f_hi.x);
    if (hi - lo <= eps) return {lo, hi};
  }
  throw InternalError("angle enclosure failed to reach requested width");
}

} // namespace concordia
