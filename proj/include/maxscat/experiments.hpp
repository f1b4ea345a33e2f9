#pragma once

#include "maxscat/linset.hpp"

#include <string>
#include <vector>

namespace maxscat {

enum class BFilter : std::uint8_t {
  AllValid,      // every b with relative norm != 1
  InFq2,         // additionally b in the degree-2 subfield over F_q
  SqrtMinusOne,  // additionally b^2 = -1
  NormMinusOne,  // additionally relative norm exactly -1
  Explicit,      // a user-supplied list, each entry checked for validity
};

struct SearchJob {
  FieldSpec field;
  std::uint32_t s = 1;
  BFilter filter = BFilter::AllValid;
  std::vector<Element> explicit_bs;
  std::uint32_t shard_index = 0;
  std::uint32_t shard_count = 1;
  std::uint32_t threads = 1;
  // re-derive every scattered verdict through the Dickson-rank path
  bool certify = true;
};

struct BVerdict {
  Element b = 0;
  bool scattered = false;
  // a slope whose point carries weight >= 2; meaningful when !scattered
  Element witness_slope = 0;
  // relative norm of b to the middle field
  Element norm = 0;
};

struct SearchResult {
  FieldSpec field;
  std::vector<std::uint32_t> modulus;
  std::uint32_t s = 1;
  BFilter filter = BFilter::AllValid;
  std::uint32_t shard_index = 0;
  std::uint32_t shard_count = 1;
  std::vector<BVerdict> verdicts;        // ascending by b
  std::uint64_t num_tested = 0;
  std::uint64_t num_scattered = 0;
  std::vector<Element> scattered_norms;  // sorted, deduplicated
  double elapsed_seconds = 0.0;
};

// Exhaustive scatteredness verdicts over the filtered b-domain.  Output is
// deterministic and independent of shard decomposition and thread count.
// Scattered verdicts are double-certified (slope-count and Dickson-rank paths
// must agree); verdicts with equal norm must agree with each other.  Either
// violation throws: it would mean the two computation paths disagree.
SearchResult search_scattered(const SearchJob& job);

struct NormCensus {
  SearchResult search;
  std::uint64_t count = 0;     // distinct norms over scattered b
  std::uint64_t expected = 0;  // floor((q^2 + q + 1)(q - 2) / 2)
  bool match = false;
};

// Census of scattered norm classes for the degree-6 tower (n = 3, s = 1).
NormCensus scattered_norm_census(std::uint32_t p, std::uint32_t h);

struct WitnessReport {
  FieldSpec field;
  Element b = 0;
  bool from_quadratic_subfield = false;
  // the z = 1 - b^{q+1} value whose square/trace condition admitted b; only
  // set when the quadratic-subfield scan found the witness
  Element z = 0;
};

// A b with U_{b,1} scattered in the degree-6 tower.  For q > 4 the witness is
// found inside F_{q^2} by scanning z = 1 - b^{q+1} for the solvability
// condition (square discriminant for odd q, zero half-trace for even q); for
// q in {3, 4} the whole field is scanned.  Throws when no witness exists.
WitnessReport find_scattered_witness_fq2(std::uint32_t p, std::uint32_t h);

struct SqrtWitnessReport {
  FieldSpec field;
  Element b = 0;  // b^2 = -1
  bool scattered = false;
};

// Tests the canonical square-root-of-minus-one witness in the degree-8 tower
// (n = 4, s = 1).  Odd q only.
SqrtWitnessReport verify_sqrt_witness(std::uint32_t p, std::uint32_t h);

struct MinorMismatch {
  Element mval = 0;
  Element b = 0;
  std::string which;
};

struct MinorIdentityReport {
  FieldSpec field;
  std::uint32_t samples = 0;
  std::uint32_t checks = 0;   // identities evaluated (samples x identity count)
  std::uint32_t matches = 0;
  std::vector<MinorMismatch> mismatches;
};

// Compares the transcribed closed-form minors of the slope-map Dickson matrix
// against direct determinants on random (m-value, b) samples.  n = 3 checks
// the two 5x5 minors; n = 4 checks the 7x7 minor and the central 6x6 block.
MinorIdentityReport minor_identity_report(std::uint32_t p, std::uint32_t h, std::uint32_t n,
                                          std::uint32_t samples, std::uint64_t seed = 1);

}  // namespace maxscat
