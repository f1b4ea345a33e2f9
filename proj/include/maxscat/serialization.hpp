#pragma once

#include "maxscat/experiments.hpp"
#include "maxscat/linset.hpp"
#include "maxscat/rankcode.hpp"

#include <string>
#include <vector>

namespace maxscat {

// Structured-text (JSON) encodings of the report types.  Every document
// carries a schema tag, the library version, and enough provenance (field
// parameters plus the resolved modulus) to reproduce the run: witness
// elements are representation-dependent, counts and existence are not.

// {"p":..,"h":..,"n":..,"modulus":[c0..cd]?,"element_cap":..?} — modulus is
// the coefficient list low degree first; both optional keys may be omitted.
std::string field_spec_to_json(const FieldSpec& spec, int indent = 2);
FieldSpec field_spec_from_json(const std::string& text);

// Canonical element encoding as base-p little-endian digit list of length
// degree(F); the integer form is the dot product with powers of p.
std::vector<std::uint32_t> element_digits(const FieldCtx& F, Element x);
Element element_from_digits(const FieldCtx& F, const std::vector<std::uint32_t>& digits);

const char* bfilter_name(BFilter f);
BFilter bfilter_from_name(const std::string& name);

// include_verdicts=false drops the per-b verdict array (used when a result is
// embedded inside a larger report); counts and norms are always present.
std::string search_result_to_json(const SearchResult& r, int indent = 2,
                                  bool include_verdicts = true);
std::string norm_census_to_json(const NormCensus& c, int indent = 2);
std::string witness_report_to_json(const WitnessReport& w, int indent = 2);
std::string sqrt_witness_report_to_json(const SqrtWitnessReport& w, int indent = 2);
std::string minor_report_to_json(const MinorIdentityReport& r, int indent = 2);

// One row of the summary table: q,n,s,num_scattered,num_norm_classes,expected
// (expected = floor((q^2+q+1)(q-2)/2), filled only for the n=3, s=1 family).
std::string search_csv_header();
std::string search_csv_row(const SearchResult& r);

// "weight W: COUNT" per line, ascending, then "size: S".
std::string format_weight_distribution(const WeightDistribution& wd);

// Norm classes of the scattered b in a search: one line per class with the
// norm value, the smallest representative and the class size.
std::string equivalence_class_report(const SearchResult& r);

// Parameters (m, n, q; d), the bound check, nucleus size and strategy, and
// the generator coefficients (canonical integer encoding, index i = the
// coefficient of x^{q^i}).
std::string code_report(const RankCode& C);

// List of m canonical element encodings, index i = coefficient of x^{q^i}.
std::string qpoly_to_json(const QPoly& f);

}  // namespace maxscat
