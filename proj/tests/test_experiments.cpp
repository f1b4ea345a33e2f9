#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maxscat/experiments.hpp"
#include "maxscat/qpoly.hpp"

#include <algorithm>
#include <set>
#include <tuple>

using namespace maxscat;

namespace {

SearchJob job_for(std::uint32_t p, std::uint32_t h, std::uint32_t n, std::uint32_t s = 1) {
  SearchJob j;
  j.field.p = p;
  j.field.h = h;
  j.field.n = n;
  j.s = s;
  return j;
}

using VerdictKey = std::tuple<Element, bool, Element, Element>;

std::vector<VerdictKey> keys(const SearchResult& R) {
  std::vector<VerdictKey> out;
  for (const BVerdict& v : R.verdicts)
    out.push_back({v.b, v.scattered, v.witness_slope, v.norm});
  return out;
}

std::set<Element> scattered_set(const SearchResult& R) {
  std::set<Element> out;
  for (const BVerdict& v : R.verdicts)
    if (v.scattered) out.insert(v.b);
  return out;
}

}  // namespace

TEST_CASE("verdicts are shard- and thread-invariant") {
  SearchResult whole = search_scattered(job_for(3, 1, 3));
  CHECK(whole.num_tested == whole.verdicts.size());

  std::vector<VerdictKey> merged;
  for (std::uint32_t i = 0; i < 3; ++i) {
    SearchJob j = job_for(3, 1, 3);
    j.shard_index = i;
    j.shard_count = 3;
    auto part = keys(search_scattered(j));
    merged.insert(merged.end(), part.begin(), part.end());
  }
  std::sort(merged.begin(), merged.end());
  CHECK(merged == keys(whole));  // whole result is already ascending in b

  SearchJob jt = job_for(3, 1, 3);
  jt.threads = 2;
  CHECK(keys(search_scattered(jt)) == keys(whole));

  SearchJob bad = job_for(3, 1, 3);
  bad.shard_index = 2;
  bad.shard_count = 2;
  CHECK_THROWS_AS(search_scattered(bad), std::invalid_argument);
}

TEST_CASE("negative and positive existence results in the degree-6 tower") {
  SearchResult q2 = search_scattered(job_for(2, 1, 3));
  CHECK(q2.num_scattered == 0);
  CHECK(q2.num_tested == 54);  // 63 nonzero b minus the 9 of relative norm 1

  SearchResult q3 = search_scattered(job_for(3, 1, 3));
  CHECK(q3.num_scattered > 0);
  // equal-norm fibers have size q^3 + 1 and verdict is a norm invariant
  CHECK(q3.num_scattered % 28 == 0);
  CHECK(q3.num_scattered == 28 * q3.scattered_norms.size());

  SearchResult q4 = search_scattered(job_for(2, 2, 3));
  CHECK(q4.num_scattered > 0);
}

TEST_CASE("every negative verdict carries a weight-two witness slope") {
  SearchResult R = search_scattered(job_for(3, 1, 3));
  FieldCtx F(R.field);
  int checked = 0;
  for (const BVerdict& v : R.verdicts) {
    if (v.scattered) continue;
    if (++checked > 40) break;
    SubspaceU U = SubspaceU::parametric(F, v.b, 1);
    CHECK(point_weight(U, ProjPoint::slope(v.witness_slope)) == 2);
  }
  CHECK(checked > 40);
}

TEST_CASE("norm census for small q") {
  NormCensus c3 = scattered_norm_census(3, 1);
  CHECK(c3.count == 6);
  CHECK(c3.expected == 6);
  CHECK(c3.match);

  NormCensus c4 = scattered_norm_census(2, 2);
  CHECK(c4.count == 21);
  CHECK(c4.expected == 21);
  CHECK(c4.match);

  NormCensus c2 = scattered_norm_census(2, 1);
  CHECK(c2.count == 0);
  CHECK(c2.expected == 0);
  CHECK(c2.match);
}

TEST_CASE("the degree-8 tower criterion: scattered iff norm is minus one") {
  SearchResult R = search_scattered(job_for(3, 1, 4));
  FieldCtx F(R.field);
  std::set<Element> expected;
  Element neg1 = F.neg(1);
  for (Element b = 1; b < F.size(); ++b)
    if (F.pow(b, 82) == neg1) expected.insert(b);
  CHECK(expected.size() == 82);
  CHECK(scattered_set(R) == expected);
  CHECK(R.scattered_norms == std::vector<Element>{neg1});

  // the norm filter carves out exactly that fiber, all scattered
  SearchJob jf = job_for(3, 1, 4);
  jf.filter = BFilter::NormMinusOne;
  SearchResult RF = search_scattered(jf);
  CHECK(RF.num_tested == 82);
  CHECK(RF.num_scattered == 82);
  CHECK(scattered_set(RF) == expected);

  // square roots of -1 form a two-element subset of it
  SearchJob js = job_for(3, 1, 4);
  js.filter = BFilter::SqrtMinusOne;
  SearchResult RS = search_scattered(js);
  CHECK(RS.num_tested == 2);
  CHECK(RS.num_scattered == 2);
  for (const BVerdict& v : RS.verdicts) {
    CHECK(F.mul(v.b, v.b) == neg1);
    CHECK(expected.count(v.b) == 1);
  }
}

TEST_CASE("explicit and subfield filters") {
  FieldCtx F(FieldSpec{3, 1, 3, {}, 1ull << 22});
  Element good = 0;
  for (Element b = 1; b < F.size(); ++b)
    if (F.norm_rel(b, 6, 3) != 1) {
      good = b;
      break;
    }
  SearchJob je = job_for(3, 1, 3);
  je.filter = BFilter::Explicit;
  je.explicit_bs = {good, good};
  SearchResult RE = search_scattered(je);
  CHECK(RE.num_tested == 1);  // deduplicated
  CHECK(RE.verdicts[0].b == good);

  Element flat = 0;
  for (Element b = 1; b < F.size(); ++b)
    if (F.norm_rel(b, 6, 3) == 1) {
      flat = b;
      break;
    }
  je.explicit_bs = {flat};
  CHECK_THROWS_AS(search_scattered(je), std::invalid_argument);

  SearchJob jq = job_for(3, 1, 3);
  jq.filter = BFilter::InFq2;
  SearchResult RQ = search_scattered(jq);
  for (const BVerdict& v : RQ.verdicts) CHECK(F.in_subfield(v.b, 2));
  CHECK(RQ.num_tested > 0);
}

TEST_CASE("quadratic-subfield witness scan") {
  WitnessReport w5 = find_scattered_witness_fq2(5, 1);
  CHECK(w5.from_quadratic_subfield);
  {
    FieldCtx F(w5.field);
    CHECK(F.in_subfield(w5.b, 2));
    CHECK(w5.b != 0);
    CHECK(F.sub(1, F.pow(w5.b, 6)) == w5.z);  // z = 1 - b^{q+1}
    CHECK(is_scattered(SubspaceU::parametric(F, w5.b, 1)));
  }

  WitnessReport w7 = find_scattered_witness_fq2(7, 1);
  CHECK(w7.from_quadratic_subfield);

  WitnessReport w3 = find_scattered_witness_fq2(3, 1);
  {
    FieldCtx F(w3.field);
    CHECK(is_scattered(SubspaceU::parametric(F, w3.b, 1)));
  }

  CHECK_THROWS_AS(find_scattered_witness_fq2(2, 1), std::runtime_error);
}

TEST_CASE("square-root-of-minus-one witness in the degree-8 tower") {
  SqrtWitnessReport r3 = verify_sqrt_witness(3, 1);
  CHECK(r3.scattered);
  {
    FieldCtx F(r3.field);
    CHECK(F.mul(r3.b, r3.b) == F.neg(1));
  }
  SqrtWitnessReport r5 = verify_sqrt_witness(5, 1);
  CHECK(r5.scattered);

  CHECK_THROWS_AS(verify_sqrt_witness(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_sqrt_witness(2, 2), std::invalid_argument);
}

TEST_CASE("transcribed minors match direct determinants on random samples") {
  MinorIdentityReport r33 = minor_identity_report(3, 1, 3, 100);
  CHECK(r33.checks == 200);
  CHECK(r33.matches == 200);
  CHECK(r33.mismatches.empty());

  MinorIdentityReport r34 = minor_identity_report(3, 1, 4, 100);
  CHECK(r34.checks == 200);
  CHECK(r34.matches == 200);

  MinorIdentityReport r23 = minor_identity_report(2, 1, 3, 50, 7);
  CHECK(r23.matches == r23.checks);
  MinorIdentityReport r24 = minor_identity_report(2, 2, 4, 25, 9);
  CHECK(r24.matches == r24.checks);

  CHECK_THROWS_AS(minor_identity_report(3, 1, 2, 10), std::invalid_argument);
}
