#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "maxscat/equivalence.hpp"
#include "maxscat/serialization.hpp"

#include "json.hpp"

#include <stdexcept>

using namespace maxscat;
using json = nlohmann::json;

namespace {

FieldSpec fs(std::uint32_t p, std::uint32_t h, std::uint32_t n) {
  FieldSpec s;
  s.p = p;
  s.h = h;
  s.n = n;
  return s;
}

// A hand-built result exercising every emitter without running a search.
SearchResult synthetic_result() {
  SearchResult r;
  r.field = fs(3, 1, 3);
  r.modulus = {1, 2, 0, 0, 0, 0, 1};  // any coefficient list; emitters copy it
  r.s = 1;
  r.filter = BFilter::AllValid;
  r.verdicts = {
      {2, true, 0, 5},
      {3, true, 0, 5},
      {4, true, 0, 7},
      {5, false, 11, 9},
  };
  r.num_tested = 4;
  r.num_scattered = 3;
  r.scattered_norms = {5, 7};
  r.elapsed_seconds = 0.25;
  return r;
}

}  // namespace

TEST_CASE("field spec json round-trips") {
  FieldSpec s = fs(3, 2, 4);
  s.modulus = {2, 1, 0, 1, 0, 0, 1};
  s.element_cap = 1234;
  FieldSpec back = field_spec_from_json(field_spec_to_json(s));
  CHECK(back.p == s.p);
  CHECK(back.h == s.h);
  CHECK(back.n == s.n);
  CHECK(back.modulus == s.modulus);
  CHECK(back.element_cap == s.element_cap);

  // default modulus is omitted, not emitted as an empty list
  FieldSpec d = fs(2, 1, 2);
  json j = json::parse(field_spec_to_json(d));
  CHECK(!j.contains("modulus"));
  FieldSpec dback = field_spec_from_json(j.dump());
  CHECK(dback.modulus.empty());
  CHECK(dback.element_cap == d.element_cap);

  CHECK_THROWS_AS(field_spec_from_json("{\"p\": 3, \"h\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(field_spec_from_json("{\"p\": -3, \"h\": 1, \"n\": 2}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(field_spec_from_json("{\"p\": 3, \"h\": 1, \"n\": 2, \"modulus\": 7}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(field_spec_from_json("[1, 2]"), std::invalid_argument);
}

TEST_CASE("element digit lists invert the canonical encoding") {
  FieldCtx F(fs(3, 1, 2));  // degree 6 over F_3
  for (Element x : {Element(0), Element(1), Element(7), Element(80),
                    Element(F.size() - 1)}) {
    auto d = element_digits(F, x);
    CHECK(d.size() == F.degree());
    CHECK(element_from_digits(F, d) == x);
  }
  CHECK(element_from_digits(F, {1, 2}) == 7);  // short lists are zero-padded
  CHECK_THROWS_AS(element_digits(F, static_cast<Element>(F.size())), std::invalid_argument);
  CHECK_THROWS_AS(element_from_digits(F, {3}), std::invalid_argument);
  CHECK_THROWS_AS(element_from_digits(F, std::vector<std::uint32_t>(7, 0)),
                  std::invalid_argument);
}

TEST_CASE("b-filter names round-trip") {
  for (BFilter f : {BFilter::AllValid, BFilter::InFq2, BFilter::SqrtMinusOne,
                    BFilter::NormMinusOne, BFilter::Explicit})
    CHECK(bfilter_from_name(bfilter_name(f)) == f);
  CHECK_THROWS_AS(bfilter_from_name("everything"), std::invalid_argument);
}

TEST_CASE("search result json carries verdicts, counts and provenance") {
  SearchResult r = synthetic_result();
  json j = json::parse(search_result_to_json(r));
  CHECK(j["schema"] == "maxscat.search-result/1");
  CHECK(j["version"] == kVersion);
  CHECK(j["field"]["p"] == 3);
  CHECK(j["field"]["modulus"] == json(r.modulus));
  CHECK(j["q"] == 3);
  CHECK(j["s"] == 1);
  CHECK(j["b_filter"] == "all-valid");
  CHECK(j["shard"]["index"] == 0);
  CHECK(j["shard"]["count"] == 1);
  CHECK(j["num_tested"] == 4);
  CHECK(j["num_scattered"] == 3);
  CHECK(j["scattered_norms"] == json({5, 7}));
  CHECK(j["verdicts"].size() == 4);
  CHECK(j["verdicts"][0] == json({{"b", 2}, {"scattered", true}, {"norm", 5}}));
  CHECK(j["verdicts"][3]["witness_slope"] == 11);
  CHECK(!j["verdicts"][0].contains("witness_slope"));

  json summary = json::parse(search_result_to_json(r, 2, /*include_verdicts=*/false));
  CHECK(!summary.contains("verdicts"));
  CHECK(summary["num_scattered"] == 3);
}

TEST_CASE("search result json from a real run parses and matches the struct") {
  SearchJob job;
  job.field = fs(2, 1, 2);
  SearchResult r = search_scattered(job);
  json j = json::parse(search_result_to_json(r));
  CHECK(j["num_tested"] == r.num_tested);
  CHECK(j["num_scattered"] == 0);  // this family is never scattered at q=2, n=2
  CHECK(j["verdicts"].size() == r.verdicts.size());
  for (const auto& v : j["verdicts"]) {
    CHECK(v["scattered"] == false);
    CHECK(v.contains("witness_slope"));
  }
  CHECK(j["field"]["modulus"].size() == 5);  // resolved even though auto-picked
}

TEST_CASE("census, witness and minor reports serialize") {
  NormCensus c;
  c.search = synthetic_result();
  c.count = 2;
  c.expected = 6;
  c.match = false;
  json j = json::parse(norm_census_to_json(c));
  CHECK(j["schema"] == "maxscat.norm-census/1");
  CHECK(j["q"] == 3);
  CHECK(j["count"] == 2);
  CHECK(j["expected"] == 6);
  CHECK(j["match"] == false);
  CHECK(!j["search"].contains("verdicts"));
  CHECK(j["search"]["num_scattered"] == 3);

  WitnessReport w;
  w.field = fs(3, 1, 3);
  w.b = 7;
  w.from_quadratic_subfield = true;
  w.z = 2;
  json wj = json::parse(witness_report_to_json(w));
  CHECK(wj["schema"] == "maxscat.quadratic-witness/1");
  CHECK(wj["b"] == 7);
  CHECK(wj["b_digits"] == json({1, 2, 0, 0, 0, 0}));
  CHECK(wj["z"] == 2);
  CHECK(wj["scattered"] == true);

  SqrtWitnessReport sw;
  sw.field = fs(3, 1, 4);
  sw.b = 5;
  sw.scattered = true;
  json sj = json::parse(sqrt_witness_report_to_json(sw));
  CHECK(sj["schema"] == "maxscat.sqrt-witness/1");
  CHECK(sj["b_digits"].size() == 8);
  CHECK(sj["scattered"] == true);

  MinorIdentityReport m;
  m.field = fs(3, 1, 3);
  m.samples = 10;
  m.checks = 20;
  m.matches = 19;
  m.mismatches = {{4, 9, "left-column"}};
  json mj = json::parse(minor_report_to_json(m));
  CHECK(mj["schema"] == "maxscat.minor-identities/1");
  CHECK(mj["matches"] == 19);
  CHECK(mj["mismatches"][0]["m_value"] == 4);
  CHECK(mj["mismatches"][0]["which"] == "left-column");
}

TEST_CASE("csv rows fill the prediction column only for the degree-6 family") {
  CHECK(search_csv_header() == "q,n,s,num_scattered,num_norm_classes,expected");
  CHECK(search_csv_row(synthetic_result()) == "3,3,1,3,2,6");

  SearchResult r2;
  r2.field = fs(2, 1, 2);
  r2.s = 1;
  CHECK(search_csv_row(r2) == "2,2,1,0,0,");
}

TEST_CASE("weight distribution text lists sorted pairs plus size") {
  FieldCtx F(fs(3, 1, 2));
  WeightDistribution wd = weight_distribution(monomial_subspace(F, 1));
  CHECK(format_weight_distribution(wd) == "weight 1: 40\nsize: 40\n");

  WeightDistribution two;
  two.counts = {{1, 350}, {2, 7}};
  CHECK(format_weight_distribution(two) == "weight 1: 350\nweight 2: 7\nsize: 357\n");
}

TEST_CASE("equivalence class report groups scattered b by norm") {
  std::string rep = equivalence_class_report(synthetic_result());
  CHECK(rep ==
        "norm classes of scattered subspaces: q=3 n=3 s=1\n"
        "  norm 5: representative b=2, size 2\n"
        "  norm 7: representative b=4, size 1\n"
        "scattered: 3, classes: 2\n");
}

TEST_CASE("code report covers parameters, nucleus strategy and generators") {
  FieldCtx F(fs(3, 1, 2));
  std::string rep = code_report(code_from_subspace(monomial_subspace(F, 1)));
  CHECK(rep.find("rank-metric code: q=3, matrices 4x4") != std::string::npos);
  CHECK(rep.find("kind: left span, 2 generators") != std::string::npos);
  CHECK(rep.find("dim_fq: 8") != std::string::npos);
  CHECK(rep.find("parameters: (4, 4, 3; 3)") != std::string::npos);
  CHECK(rep.find("mrd: yes") != std::string::npos);
  CHECK(rep.find("nucleus: 81 elements (closed strategy, scalar maps only)") !=
        std::string::npos);
  CHECK(rep.find("g0: 0 1 0 0") != std::string::npos);  // x^q
  CHECK(rep.find("g1: 1 0 0 0") != std::string::npos);  // x

  // not MRD at q=2, n=2: the closed form refuses, brute force takes over
  FieldCtx F2(fs(2, 1, 2));
  Element b = 0;
  for (Element c = 1; c < F2.size(); ++c)
    if (F2.norm_rel(c, 4, 2) != 1) {
      b = c;
      break;
    }
  std::string fam = code_report(code_from_subspace(SubspaceU::parametric(F2, b, 1)));
  CHECK(fam.find("mrd: no") != std::string::npos);
  CHECK(fam.find("brute-force strategy") != std::string::npos);

  // twisted kind prints its parameters instead of a generator list
  Element mu = 0;
  for (Element c = 1; c < F.size(); ++c)
    if (F.norm_rel(c, 4, 1) != 1) {
      mu = c;
      break;
    }
  std::string tw = code_report(RankCode::twisted_gabidulin(F, mu, /*h_exp=*/1, /*s=*/1));
  CHECK(tw.find("kind: twisted three-term family (mu=") != std::string::npos);
  CHECK(tw.find(", h=1, s=1)") != std::string::npos);
  CHECK(tw.find("family shape: a0*x + a1*x^(q^s) + mu*a0^(q^h)*x^(q^(2s))") !=
        std::string::npos);
}

TEST_CASE("qpoly serializes as its coefficient list") {
  FieldCtx F(fs(3, 1, 2));
  CHECK(qpoly_to_json(QPoly::identity(F)) == "[1,0,0,0]");
  CHECK(qpoly_to_json(QPoly::monomial(F, 5, 2)) == "[0,0,5,0]");
}
