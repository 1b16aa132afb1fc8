#include "concordia/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "concordia/embed.hpp"

namespace concordia {

namespace {

struct CycloCtx {
  int b;
  int d;
  RatPoly phi;
};

const CycloCtx& context(int b) {
  static std::mutex mu;
  static std::map<int, CycloCtx> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(b);
  if (it == cache.end()) {
    if (b <= 0) throw PreconditionError("cyclotomic order must be positive");
    CycloCtx ctx{b, euler_phi(b), RatPoly::from_int(cyclotomic(b))};
    it = cache.emplace(b, std::move(ctx)).first;
  }
  return it->second;
}

} // namespace

CycloNum::CycloNum(int b) : b_(b) {
  const CycloCtx& ctx = context(b);
  c_.assign(ctx.d, Rat(0));
}

CycloNum CycloNum::rational(int b, const Rat& q) {
  CycloNum r(b);
  r.c_[0] = q;
  return r;
}

CycloNum CycloNum::root_power(int b, long long k) {
  CycloNum r(b);
  long long e = ((k % b) + b) % b;
  std::vector<Rat> raw(static_cast<size_t>(e) + 1, Rat(0));
  raw.back() = 1;
  r.reduce_from(std::move(raw));
  return r;
}

void CycloNum::reduce_from(std::vector<Rat> raw) {
  const CycloCtx& ctx = context(b_);
  RatPoly rem = RatPoly::from(std::move(raw)).divmod(ctx.phi).second;
  c_.assign(ctx.d, Rat(0));
  for (size_t i = 0; i < rem.c.size(); ++i) c_[i] = rem.c[i];
}

bool CycloNum::is_zero() const {
  for (const Rat& v : c_)
    if (v != 0) return false;
  return true;
}

bool CycloNum::operator==(const CycloNum& o) const {
  if (b_ != o.b_) throw PreconditionError("mixed cyclotomic orders");
  return c_ == o.c_;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  if (b_ != o.b_) throw PreconditionError("mixed cyclotomic orders");
  CycloNum r(b_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
  if (b_ != o.b_) throw PreconditionError("mixed cyclotomic orders");
  CycloNum r(b_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
  if (b_ != o.b_) throw PreconditionError("mixed cyclotomic orders");
  std::vector<Rat> raw(2 * c_.size() - (c_.empty() ? 0 : 1), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) raw[i + j] += c_[i] * o.c_[j];
  }
  CycloNum r(b_);
  r.reduce_from(std::move(raw));
  return r;
}

CycloNum CycloNum::operator-() const {
  CycloNum r(b_);
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  const CycloCtx& ctx = context(b_);
  RatPoly r0 = ctx.phi;
  RatPoly r1 = RatPoly::from(std::vector<Rat>(c_));
  RatPoly s0 = RatPoly{};
  RatPoly s1 = RatPoly::from({Rat(1)});
  while (!r1.is_zero()) {
    auto [q, rem] = r0.divmod(r1);
    RatPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.deg() != 0) throw InternalError("cyclotomic modulus not coprime to element");
  CycloNum out(b_);
  out.reduce_from(s0.scale(Rat(1) / r0.c[0]).c);
  return out;
}

CycloNum CycloNum::conj() const {
  std::vector<Rat> raw(static_cast<size_t>(b_), Rat(0));
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    size_t e = k == 0 ? 0 : static_cast<size_t>(b_) - k;
    raw[e] += c_[k];
  }
  CycloNum r(b_);
  r.reduce_from(std::move(raw));
  return r;
}

int CycloNum::real_sign() const {
  if (is_zero()) return 0;
  if (!is_real()) throw InternalError("real_sign on a non-real cyclotomic element");
  return sign_of_cos_combination(c_, b_);
}

std::string CycloNum::str() const {
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) out << " + ";
    out << rat_str(c_[k]);
    if (k > 0) out << "*z^" << k;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

} // namespace concordia
