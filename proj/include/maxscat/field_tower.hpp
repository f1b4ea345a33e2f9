#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace maxscat {

// Canonical element encoding: the integer sum d_i * p^i of the base-p digit
// vector (d_0, ..., d_{deg-1}) of the residue-class representative. Total
// order, hashing and serialization all use this integer.
using Element = std::uint32_t;

inline constexpr char kVersion[] = "0.1.0";

// Sentinel meaning "no discrete log" (the zero element) in log-domain code.
inline constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

bool is_prime(std::uint64_t v);

// Description of the tower F_p < F_q < F_{q^n} < F_{q^{2n}}, q = p^h.
// The whole tower lives in one field F_p[x]/(modulus) of degree 2*n*h;
// subfields are cut out by Frobenius fixed-point tests.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t h = 1;
  std::uint32_t n = 2;
  // Monic irreducible over F_p of degree 2*n*h, coefficients c_0..c_d low
  // degree first. Empty = pick the smallest one (by the integer encoding of
  // (c_0..c_{d-1})), which makes runs reproducible by default.
  std::vector<std::uint32_t> modulus;
  // Discrete-log (Zech) tables are built when the field has at most this
  // many elements; above it arithmetic falls back to digit vectors.
  std::uint64_t element_cap = 1ull << 22;
};

// Dense polynomial arithmetic over F_p modulo the field polynomial.
// This is the ground-truth representation; the log tables are built from it
// and checked against it. Digit vectors are little-endian, length deg.
class PolyCore {
 public:
  PolyCore() = default;
  PolyCore(std::uint32_t p, std::vector<std::uint8_t> modulus_digits);

  std::uint32_t p() const { return p_; }
  std::uint32_t deg() const { return deg_; }

  void decode(Element x, std::uint8_t* out) const;
  Element encode(const std::uint8_t* digits) const;

  void add(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const;
  void sub(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const;
  void neg(const std::uint8_t* a, std::uint8_t* out) const;
  void mul(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) const;
  void pow(const std::uint8_t* a, std::uint64_t e, std::uint8_t* out) const;

  std::uint8_t inv_mod_p(std::uint8_t v) const { return inv_p_[v]; }

 private:
  std::uint32_t p_ = 0;
  std::uint32_t deg_ = 0;
  std::vector<std::uint8_t> mod_;        // c_0..c_{deg} of the field polynomial
  std::vector<std::uint8_t> red_;        // red_[k*deg+i]: digits of x^{deg+k}
  std::vector<std::uint8_t> inv_p_;      // inverses mod p, inv_p_[0] unused
};

class FieldCtx {
 public:
  explicit FieldCtx(FieldSpec spec);

  // --- parameters -----------------------------------------------------
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t h() const { return spec_.h; }
  std::uint32_t n() const { return spec_.n; }
  std::uint32_t m() const { return 2 * spec_.n; }           // degree over F_q
  std::uint32_t degree() const { return deg_; }             // degree over F_p
  std::uint32_t q() const { return q_; }
  std::uint64_t size() const { return size_; }              // q^{2n}
  std::uint64_t mult_order() const { return size_ - 1; }
  std::uint64_t q_pow(std::uint32_t k) const;               // q^k as integer
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  const FieldSpec& spec() const { return spec_; }
  bool uses_log_tables() const { return has_tables_; }

  // --- arithmetic -----------------------------------------------------
  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_uint(std::uint64_t v) const;                 // validated
  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;                             // a != 0
  Element div(Element a, Element b) const;
  Element pow(Element a, std::uint64_t e) const;

  // --- tower structure ------------------------------------------------
  // x^{q^k}; k may be any integer, reduced mod 2n.
  Element frobenius_q(Element x, std::int64_t k) const;
  // Relative norm/trace F_{q^from} -> F_{q^to}; degrees measured in q-powers.
  // Requires to | from, from | 2n and x in F_{q^from}.
  Element norm_rel(Element x, std::uint32_t from, std::uint32_t to) const;
  Element trace_rel(Element x, std::uint32_t from, std::uint32_t to) const;
  // Absolute trace down to F_p (returned as an element of the prime field).
  Element abs_trace(Element x) const;
  bool in_subfield(Element x, std::uint32_t deg) const;     // deg | 2n required
  std::optional<Element> sqrt_of_minus_one() const;         // none when p = 2

  Element generator() const { return gen_; }
  // All elements of F_{q^deg} (deg | 2n), sorted by canonical encoding.
  std::vector<Element> subfield_elements(std::uint32_t deg) const;
  // 1, w, ..., w^{h-1}: an F_p-basis of F_q (w generates F_q^*).
  const std::vector<Element>& fq_multipliers() const { return fq_mult_; }
  // g^0..g^{2n-1}: an F_q-basis of F_{q^{2n}} (g = generator()).
  const std::vector<Element>& fq_basis() const { return fq_basis_; }

  // --- digit/log access for kernels ----------------------------------
  const PolyCore& core() const { return core_; }
  std::uint32_t log_of(Element x) const { return log_[x]; }  // tables only
  Element exp_of(std::uint64_t k) const { return exp_[k % (size_ - 1)]; }
  const std::uint32_t* zech_table() const { return zech_.data(); }
  const std::uint32_t* log_table() const { return log_.data(); }
  const Element* exp_table() const { return exp_.data(); }
  // log of -1 (0 when p = 2); lets log-domain code negate by adding.
  std::uint32_t log_minus_one() const { return half_; }

  // Sum in log domain: takes/returns logs, kNoLog encodes 0.
  std::uint32_t zech_add_log(std::uint32_t la, std::uint32_t lb) const;

  const std::vector<std::uint64_t>& order_prime_factors() const { return ord_primes_; }

 private:
  void select_modulus();
  void build_tables();
  void find_generator();
  Element pow_poly(Element a, std::uint64_t e) const;
  const std::vector<std::uint8_t>& frob_matrix(std::uint32_t k) const;

  FieldSpec spec_;
  std::uint32_t deg_ = 0;
  std::uint32_t q_ = 0;
  std::uint64_t size_ = 0;
  std::vector<std::uint32_t> modulus_;
  PolyCore core_;
  Element gen_ = 0;
  std::vector<std::uint64_t> ord_primes_;

  bool has_tables_ = false;
  std::vector<Element> exp_;            // size N-1
  std::vector<std::uint32_t> log_;      // size N, log_[0] = kNoLog
  std::vector<std::uint32_t> zech_;     // zech_[k] = log(g^k + 1)
  std::uint32_t half_ = 0;              // log(-1)

  std::vector<Element> fq_mult_;
  std::vector<Element> fq_basis_;
  // Frobenius x -> x^{q^k} as F_p-matrices (columns = images of basis),
  // built on demand for the digit-vector path.
  mutable std::array<std::vector<std::uint8_t>, 64> frob_mats_;
};

}  // namespace maxscat
