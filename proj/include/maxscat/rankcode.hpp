#pragma once

#include "maxscat/linset.hpp"
#include "maxscat/qpoly.hpp"

#include <cstdint>
#include <vector>

namespace maxscat {

struct CodeParams {
  std::uint32_t m = 0;
  std::uint32_t n_cols = 0;
  std::uint32_t q = 0;
  std::uint32_t d = 0;
  bool operator==(const CodeParams&) const = default;
};

// A rank-metric code of F_q-linear maps on the top field, stored either as a
// free left span of q-polynomial generators over the top field, or as the
// three-term twisted family {a0 x + a1 x^{q^s} + mu a0^{q^h} x^{q^{2s}}}.
// Codewords are q-polynomials; their matrices appear only at rank time.
class RankCode {
 public:
  enum class Kind : std::uint8_t { Span, Twisted };

  static RankCode span(const FieldCtx& F, std::vector<QPoly> gens);
  // mu = 0 degenerates to the two-generator span {a0 x + a1 x^{q^s}}.
  // mu != 0 requires N(mu) != 1 (absolute norm: the relative norm over the
  // composite extension collapses to it when gcd(s, m) = 1).  At q = 2 that
  // leaves no admissible mu, so allow_any_mu lets experiments build the shape
  // for any nonzero mu regardless.
  static RankCode twisted_gabidulin(const FieldCtx& F, Element mu, std::uint32_t h_exp,
                                    std::uint32_t s, bool allow_any_mu = false);

  const FieldCtx& field() const { return *F_; }
  Kind kind() const { return kind_; }
  std::uint32_t m() const { return F_->m(); }
  const std::vector<QPoly>& generators() const { return gens_; }
  std::uint32_t dim_fq() const { return dim_fq_; }
  Element mu() const;
  std::uint32_t twist_h() const;
  std::uint32_t twist_s() const;

  bool contains(const QPoly& w) const;
  // Span only: the reduced echelon basis of the generators over F_{q^m}.
  std::vector<QPoly> basis_rows() const;
  // Every codeword, zero included; throws when the code exceeds cap.
  std::vector<QPoly> enumerate_words(std::uint64_t cap = 1u << 20) const;

 private:
  RankCode(const FieldCtx& F, Kind k) : F_(&F), kind_(k) {}

  const FieldCtx* F_;
  Kind kind_;
  std::vector<QPoly> gens_;                 // Span only, as given
  std::vector<std::vector<Element>> ech_;   // reduced echelon of gens over F_{q^m}
  std::uint32_t dim_fq_ = 0;
  Element mu_ = 0;
  std::uint32_t h_ = 0, s_ = 0;
  bool lax_ = false;
};

// The two-generator code {a f + c id} attached to a graph-shaped subspace.
// Rejects basis-form inputs and scalar slope maps (those collapse the span).
RankCode code_from_subspace(const SubspaceU& U);

// Minimum rank over nonzero codewords.  Two-generator spans need only the
// q^m + 1 projective coefficient pairs: left scaling by the top field is an
// invertible composition and cannot change rank.
std::uint32_t min_distance(const RankCode& C);

CodeParams code_params(const RankCode& C);

// Equality in the Singleton-like bound |C| <= q^{m(m - d + 1)}.
bool is_mrd(const RankCode& C);

// Span: the span of the generators' adjoints.  Twisted: the exact image of
// the code under the adjoint, which is again twisted with transported
// parameters (s' = m - s, and mu, h shifted by the support reflection).
RankCode adjoint_code(const RankCode& C);

enum class NucleusStrategy : std::uint8_t { Closed, BruteForce };

struct NucleusReport {
  NucleusStrategy strategy{};
  std::uint64_t size = 0;
  bool scalars_only = false;
  // BruteForce: every left-composition stabilizer matrix, packed row-major
  // base p.  Closed: empty.
  std::vector<std::uint64_t> packed_elements;
};

// Left-composition stabilizer {Z : Z o w in C for all w}.  Closed strategy:
// scalar maps always sit inside a left span, and for a span of distance m - 1
// meeting the bound the stabilizer is itself bounded by q^m, pinning it to
// exactly the scalar maps.  BruteForce enumerates all m x m matrices over
// F_p (requires h = 1 and p^{m^2} <= 2^24).
NucleusReport middle_nucleus(const RankCode& C, NucleusStrategy strategy);

}  // namespace maxscat
