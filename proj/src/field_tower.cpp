#include "maxscat/field_tower.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace maxscat {
namespace {

constexpr std::uint64_t kMaxFieldSize = 1ull << 31;

// Small dense polynomials over F_p, little-endian coefficients, used only
// for modulus selection and generator search (not performance critical).
using Poly = std::vector<std::uint8_t>;

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += a[i] * b[j];
  }
  for (auto& v : acc) v %= p;
  // long division by monic f
  const int df = poly_deg(f);
  for (int k = static_cast<int>(acc.size()) - 1; k >= df; --k) {
    std::uint32_t c = acc[k];
    if (!c) continue;
    acc[k] = 0;
    for (int i = 0; i < df; ++i)
      acc[k - df + i] = (acc[k - df + i] + c * (p - f[i])) % p;
  }
  Poly r(acc.begin(), acc.begin() + std::min<std::size_t>(acc.size(), df));
  Poly out(r.begin(), r.end());
  poly_trim(out);
  return out;
}

Poly poly_pow_mod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly r = {1};
  while (e) {
    if (e & 1) r = poly_mul_mod(r, base, f, p);
    base = poly_mul_mod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t inv_mod(std::uint32_t v, std::uint32_t p) {
  // p prime, v != 0
  std::uint64_t r = 1, b = v % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    // a mod b
    std::uint32_t lead_inv = inv_mod(b.back(), p);
    while (poly_deg(a) >= poly_deg(b)) {
      std::uint32_t c = static_cast<std::uint32_t>(a.back()) * lead_inv % p;
      int shift = poly_deg(a) - poly_deg(b);
      for (int i = 0; i <= poly_deg(b); ++i) {
        std::uint32_t t = a[shift + i] + c * (p - b[i]) % p;
        a[shift + i] = static_cast<std::uint8_t>(t % p);
      }
      poly_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a;
}

bool poly_irreducible(const Poly& f, std::uint32_t p) {
  const int d = poly_deg(f);
  if (d < 1) return false;
  if (d == 1) return true;
  // x^{p^j} mod f for j = 1..d; f irreducible iff x^{p^d} = x and
  // gcd(x^{p^{d/r}} - x, f) = 1 for every prime r | d.
  std::vector<Poly> pw(d + 1);
  pw[0] = {0, 1};
  for (int j = 1; j <= d; ++j) pw[j] = poly_pow_mod(pw[j - 1], p, f, p);
  if (pw[d] != pw[0]) return false;
  int dd = d;
  for (int r = 2; r * r <= dd; ++r) {
    if (dd % r) continue;
    while (dd % r == 0) dd /= r;
    Poly diff = pw[d / r];
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = static_cast<std::uint8_t>((diff[1] + p - 1) % p);
    poly_trim(diff);
    Poly g = poly_gcd(diff, f, p);
    if (poly_deg(g) != 0) return false;
  }
  if (dd > 1) {
    Poly diff = pw[d / dd];
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = static_cast<std::uint8_t>((diff[1] + p - 1) % p);
    poly_trim(diff);
    Poly g = poly_gcd(diff, f, p);
    if (poly_deg(g) != 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; d += (d == 2 ? 1 : 2)) {
    if (v % d) continue;
    out.push_back(d);
    while (v % d == 0) v /= d;
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------- PolyCore

PolyCore::PolyCore(std::uint32_t p, std::vector<std::uint8_t> modulus_digits)
    : p_(p), mod_(std::move(modulus_digits)) {
  deg_ = static_cast<std::uint32_t>(mod_.size()) - 1;
  if (mod_.back() != 1) throw std::invalid_argument("modulus must be monic");
  inv_p_.resize(p_);
  for (std::uint32_t v = 1; v < p_; ++v) inv_p_[v] = static_cast<std::uint8_t>(inv_mod(v, p_));
  // red_[k] = digits of x^{deg+k} reduced, k = 0..deg-2
  red_.assign(static_cast<std::size_t>(deg_ - 1) * deg_, 0);
  std::vector<std::uint8_t> row(deg_);
  for (std::uint32_t i = 0; i < deg_; ++i) row[i] = static_cast<std::uint8_t>((p_ - mod_[i]) % p_);
  std::copy(row.begin(), row.end(), red_.begin());
  for (std::uint32_t k = 1; k + 1 < deg_; ++k) {
    std::uint8_t carry = row[deg_ - 1];
    for (std::uint32_t i = deg_ - 1; i > 0; --i) row[i] = row[i - 1];
    row[0] = 0;
    if (carry) {
      const std::uint8_t* r0 = red_.data();
      for (std::uint32_t i = 0; i < deg_; ++i)
        row[i] = static_cast<std::uint8_t>((row[i] + carry * r0[i]) % p_);
    }
    std::copy(row.begin(), row.end(), red_.begin() + static_cast<std::size_t>(k) * deg_);
  }
}

void PolyCore::decode(Element x, std::uint8_t* out) const {
  for (std::uint32_t i = 0; i < deg_; ++i) {
    out[i] = static_cast<std::uint8_t>(x % p_);
    x /= p_;
  }
}

Element PolyCore::encode(const std::uint8_t* digits) const {
  Element v = 0;
  for (std::uint32_t i = deg_; i-- > 0;) v = v * p_ + digits[i];
  return v;
}

void PolyCore::add(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const {
  for (std::uint32_t i = 0; i < deg_; ++i) {
    std::uint32_t t = a[i] + b[i];
    out[i] = static_cast<std::uint8_t>(t >= p_ ? t - p_ : t);
  }
}

void PolyCore::sub(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const {
  for (std::uint32_t i = 0; i < deg_; ++i) {
    std::uint32_t t = a[i] + p_ - b[i];
    out[i] = static_cast<std::uint8_t>(t >= p_ ? t - p_ : t);
  }
}

void PolyCore::neg(const std::uint8_t* a, std::uint8_t* out) const {
  for (std::uint32_t i = 0; i < deg_; ++i)
    out[i] = static_cast<std::uint8_t>(a[i] ? p_ - a[i] : 0);
}

void PolyCore::mul(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const {
  std::uint32_t acc[128] = {0};
  for (std::uint32_t i = 0; i < deg_; ++i) {
    if (!a[i]) continue;
    const std::uint32_t ai = a[i];
    for (std::uint32_t j = 0; j < deg_; ++j) acc[i + j] += ai * b[j];
  }
  for (std::uint32_t k = 2 * deg_ - 2; k >= deg_; --k) {
    std::uint32_t c = acc[k] % p_;
    if (c) {
      const std::uint8_t* row = red_.data() + static_cast<std::size_t>(k - deg_) * deg_;
      for (std::uint32_t i = 0; i < deg_; ++i) acc[i] += c * row[i];
    }
    if (k == deg_) break;
  }
  for (std::uint32_t i = 0; i < deg_; ++i) out[i] = static_cast<std::uint8_t>(acc[i] % p_);
}

void PolyCore::pow(const std::uint8_t* a, std::uint64_t e, std::uint8_t* out) const {
  std::uint8_t base[64], r[64];
  std::copy(a, a + deg_, base);
  std::fill(r, r + deg_, 0);
  r[0] = 1;
  while (e) {
    if (e & 1) mul(r, base, r);
    mul(base, base, base);
    e >>= 1;
  }
  std::copy(r, r + deg_, out);
}

// ---------------------------------------------------------------- FieldCtx

FieldCtx::FieldCtx(FieldSpec spec) : spec_(std::move(spec)) {
  if (!is_prime(spec_.p)) throw std::invalid_argument("p must be prime");
  if (spec_.h < 1) throw std::invalid_argument("h must be >= 1");
  if (spec_.n < 2) throw std::invalid_argument("n must be >= 2");
  deg_ = 2 * spec_.n * spec_.h;
  std::uint64_t sz = 1;
  for (std::uint32_t i = 0; i < deg_; ++i) {
    sz *= spec_.p;
    if (sz > kMaxFieldSize) throw std::invalid_argument("field larger than 2^31 elements");
  }
  size_ = sz;
  std::uint64_t qq = 1;
  for (std::uint32_t i = 0; i < spec_.h; ++i) qq *= spec_.p;
  q_ = static_cast<std::uint32_t>(qq);

  if (spec_.modulus.empty()) {
    select_modulus();
  } else {
    if (spec_.modulus.size() != deg_ + 1)
      throw std::invalid_argument("modulus degree must be 2*n*h");
    for (auto c : spec_.modulus)
      if (c >= spec_.p) throw std::invalid_argument("modulus coefficient out of range");
    if (spec_.modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    Poly f(spec_.modulus.begin(), spec_.modulus.end());
    if (!poly_irreducible(f, spec_.p)) throw std::invalid_argument("modulus is reducible");
    modulus_ = spec_.modulus;
  }
  core_ = PolyCore(spec_.p, std::vector<std::uint8_t>(modulus_.begin(), modulus_.end()));

  ord_primes_ = prime_factors(size_ - 1);
  find_generator();
  if (size_ <= spec_.element_cap) build_tables();

  // w = g^{(N-1)/(q-1)} generates F_q^*; its powers give an F_p-basis of F_q.
  Element w = pow(gen_, (size_ - 1) / (q_ - 1));
  fq_mult_.resize(spec_.h);
  fq_mult_[0] = 1;
  for (std::uint32_t j = 1; j < spec_.h; ++j) fq_mult_[j] = mul(fq_mult_[j - 1], w);
  fq_basis_.resize(m());
  fq_basis_[0] = 1;
  for (std::uint32_t i = 1; i < m(); ++i) fq_basis_[i] = mul(fq_basis_[i - 1], gen_);
}

void FieldCtx::select_modulus() {
  // Smallest monic irreducible of degree deg_, ordered by the integer
  // encoding of (c_0..c_{deg-1}).
  Poly f(deg_ + 1, 0);
  f[deg_] = 1;
  for (std::uint64_t enc = 1;; ++enc) {
    if (enc >= size_) throw std::runtime_error("no irreducible modulus found");
    std::uint64_t v = enc;
    for (std::uint32_t i = 0; i < deg_; ++i) {
      f[i] = static_cast<std::uint8_t>(v % spec_.p);
      v /= spec_.p;
    }
    if (f[0] == 0) continue;  // divisible by x
    if (poly_irreducible(f, spec_.p)) break;
  }
  modulus_.assign(f.begin(), f.end());
}

void FieldCtx::find_generator() {
  const std::uint64_t M = size_ - 1;
  std::uint8_t buf[64], r[64];
  for (Element cand = 2;; ++cand) {
    if (cand >= size_) throw std::runtime_error("no generator found");
    core_.decode(cand, buf);
    bool ok = true;
    for (auto pr : ord_primes_) {
      core_.pow(buf, M / pr, r);
      if (core_.encode(r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_ = cand;
      return;
    }
  }
}

void FieldCtx::build_tables() {
  const std::uint64_t M = size_ - 1;
  exp_.resize(M);
  log_.assign(size_, kNoLog);
  std::uint8_t cur[64], g[64];
  core_.decode(1, cur);
  core_.decode(gen_, g);
  for (std::uint64_t k = 0; k < M; ++k) {
    Element e = core_.encode(cur);
    exp_[k] = e;
    log_[e] = static_cast<std::uint32_t>(k);
    core_.mul(cur, g, cur);
  }
  if (core_.encode(cur) != 1) throw std::runtime_error("generator order mismatch");

  zech_.resize(M);
  const std::uint32_t p = spec_.p;
  for (std::uint64_t k = 0; k < M; ++k) {
    Element y = exp_[k];
    Element low = y % p;
    Element y1 = y - low + ((low + 1) % p);
    zech_[k] = (y1 == 0) ? kNoLog : log_[y1];
  }
  half_ = (p == 2) ? 0 : log_[p - 1];
  if (p != 2 && half_ != M / 2) throw std::runtime_error("log(-1) inconsistent");
  has_tables_ = true;
}

std::uint64_t FieldCtx::q_pow(std::uint32_t k) const {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < k; ++i) r *= q_;
  return r;
}

Element FieldCtx::from_uint(std::uint64_t v) const {
  if (v >= size_) throw std::invalid_argument("element encoding out of range");
  return static_cast<Element>(v);
}

Element FieldCtx::add(Element a, Element b) const {
  if (has_tables_) {
    if (a == 0) return b;
    if (b == 0) return a;
    const std::uint32_t M = static_cast<std::uint32_t>(size_ - 1);
    std::uint32_t la = log_[a], lb = log_[b];
    std::uint32_t u = la >= lb ? la - lb : la + M - lb;
    std::uint32_t z = zech_[u];
    if (z == kNoLog) return 0;
    std::uint64_t s = static_cast<std::uint64_t>(lb) + z;
    if (s >= M) s -= M;
    return exp_[s];
  }
  std::uint8_t x[64], y[64];
  core_.decode(a, x);
  core_.decode(b, y);
  core_.add(x, y, x);
  return core_.encode(x);
}

Element FieldCtx::neg(Element a) const {
  if (spec_.p == 2 || a == 0) return a;
  if (has_tables_) {
    const std::uint32_t M = static_cast<std::uint32_t>(size_ - 1);
    std::uint32_t l = log_[a] + half_;
    if (l >= M) l -= M;
    return exp_[l];
  }
  std::uint8_t x[64];
  core_.decode(a, x);
  core_.neg(x, x);
  return core_.encode(x);
}

Element FieldCtx::sub(Element a, Element b) const { return add(a, neg(b)); }

Element FieldCtx::mul(Element a, Element b) const {
  if (has_tables_) {
    if (a == 0 || b == 0) return 0;
    const std::uint32_t M = static_cast<std::uint32_t>(size_ - 1);
    std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
    if (s >= M) s -= M;
    return exp_[s];
  }
  std::uint8_t x[64], y[64];
  core_.decode(a, x);
  core_.decode(b, y);
  core_.mul(x, y, x);
  return core_.encode(x);
}

Element FieldCtx::inv(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (has_tables_) {
    const std::uint64_t M = size_ - 1;
    return exp_[(M - log_[a]) % M];
  }
  return pow_poly(a, size_ - 2);
}

Element FieldCtx::div(Element a, Element b) const { return mul(a, inv(b)); }

Element FieldCtx::pow(Element a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  const std::uint64_t M = size_ - 1;
  if (has_tables_) {
    std::uint64_t s = static_cast<std::uint64_t>(log_[a]) * (e % M) % M;
    return exp_[s];
  }
  return pow_poly(a, e % M);
}

Element FieldCtx::pow_poly(Element a, std::uint64_t e) const {
  std::uint8_t x[64];
  core_.decode(a, x);
  core_.pow(x, e, x);
  return core_.encode(x);
}

const std::vector<std::uint8_t>& FieldCtx::frob_matrix(std::uint32_t k) const {
  auto& mat = frob_mats_[k];
  if (!mat.empty()) return mat;
  if (k == 1) {
    mat.assign(static_cast<std::size_t>(deg_) * deg_, 0);
    std::uint8_t e[64], r[64];
    for (std::uint32_t i = 0; i < deg_; ++i) {
      std::fill(e, e + deg_, 0);
      e[i] = 1;
      core_.pow(e, q_, r);
      for (std::uint32_t row = 0; row < deg_; ++row)
        mat[static_cast<std::size_t>(row) * deg_ + i] = r[row];
    }
    return mat;
  }
  if (k == 0) {
    mat.assign(static_cast<std::size_t>(deg_) * deg_, 0);
    for (std::uint32_t i = 0; i < deg_; ++i) mat[static_cast<std::size_t>(i) * deg_ + i] = 1;
    return mat;
  }
  const auto& a = frob_matrix(k - 1);
  const auto& b = frob_matrix(1);
  mat.assign(static_cast<std::size_t>(deg_) * deg_, 0);
  for (std::uint32_t r = 0; r < deg_; ++r)
    for (std::uint32_t t = 0; t < deg_; ++t) {
      std::uint32_t brt = b[static_cast<std::size_t>(r) * deg_ + t];
      if (!brt) continue;
      for (std::uint32_t c = 0; c < deg_; ++c)
        mat[static_cast<std::size_t>(r) * deg_ + c] = static_cast<std::uint8_t>(
            (mat[static_cast<std::size_t>(r) * deg_ + c] +
             brt * a[static_cast<std::size_t>(t) * deg_ + c]) %
            spec_.p);
    }
  return mat;
}

Element FieldCtx::frobenius_q(Element x, std::int64_t k) const {
  const std::int64_t mm = m();
  std::uint32_t kk = static_cast<std::uint32_t>(((k % mm) + mm) % mm);
  if (x <= 1 || kk == 0) return x;
  const std::uint64_t M = size_ - 1;
  if (has_tables_) {
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < kk; ++i) e = e * q_ % M;
    return exp_[static_cast<std::uint64_t>(log_[x]) * e % M];
  }
  const auto& mat = frob_matrix(kk);
  std::uint8_t in[64], out[64];
  core_.decode(x, in);
  for (std::uint32_t r = 0; r < deg_; ++r) {
    std::uint32_t acc = 0;
    const std::uint8_t* row = mat.data() + static_cast<std::size_t>(r) * deg_;
    for (std::uint32_t c = 0; c < deg_; ++c) acc += row[c] * in[c];
    out[r] = static_cast<std::uint8_t>(acc % spec_.p);
  }
  return core_.encode(out);
}

Element FieldCtx::norm_rel(Element x, std::uint32_t from, std::uint32_t to) const {
  if (from == 0 || to == 0 || from % to || m() % from)
    throw std::invalid_argument("norm degrees must satisfy to | from | 2n");
  if (!in_subfield(x, from)) throw std::domain_error("norm argument outside source field");
  Element r = 1;
  for (std::uint32_t i = 0; i < from / to; ++i) r = mul(r, frobenius_q(x, static_cast<std::int64_t>(to) * i));
  return r;
}

Element FieldCtx::trace_rel(Element x, std::uint32_t from, std::uint32_t to) const {
  if (from == 0 || to == 0 || from % to || m() % from)
    throw std::invalid_argument("trace degrees must satisfy to | from | 2n");
  if (!in_subfield(x, from)) throw std::domain_error("trace argument outside source field");
  Element r = 0;
  for (std::uint32_t i = 0; i < from / to; ++i) r = add(r, frobenius_q(x, static_cast<std::int64_t>(to) * i));
  return r;
}

Element FieldCtx::abs_trace(Element x) const {
  Element r = 0, y = x;
  for (std::uint32_t i = 0; i < deg_; ++i) {
    r = add(r, y);
    y = pow(y, spec_.p);
  }
  return r;
}

bool FieldCtx::in_subfield(Element x, std::uint32_t deg) const {
  if (deg == 0 || m() % deg) throw std::invalid_argument("subfield degree must divide 2n");
  return frobenius_q(x, deg) == x;
}

std::optional<Element> FieldCtx::sqrt_of_minus_one() const {
  if (spec_.p == 2) return std::nullopt;
  Element b = pow(gen_, (size_ - 1) / 4);
  if (mul(b, b) != neg(1)) throw std::runtime_error("sqrt(-1) sanity check failed");
  return b;
}

std::vector<Element> FieldCtx::subfield_elements(std::uint32_t deg) const {
  if (deg == 0 || m() % deg) throw std::invalid_argument("subfield degree must divide 2n");
  std::uint64_t sub = q_pow(deg);
  std::vector<Element> out;
  out.reserve(sub);
  out.push_back(0);
  Element step = pow(gen_, (size_ - 1) / (sub - 1));
  Element cur = 1;
  for (std::uint64_t i = 0; i + 1 < sub; ++i) {
    out.push_back(cur);
    cur = mul(cur, step);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t FieldCtx::zech_add_log(std::uint32_t la, std::uint32_t lb) const {
  if (la == kNoLog) return lb;
  if (lb == kNoLog) return la;
  const std::uint32_t M = static_cast<std::uint32_t>(size_ - 1);
  std::uint32_t u = la >= lb ? la - lb : la + M - lb;
  std::uint32_t z = zech_[u];
  if (z == kNoLog) return kNoLog;
  std::uint32_t s = lb + z;
  if (s >= M) s -= M;
  return s;
}

}  // namespace maxscat
