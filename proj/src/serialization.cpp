#include "maxscat/serialization.hpp"

#include "json.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace maxscat {
namespace {

using json = nlohmann::ordered_json;

std::uint64_t q_of(const FieldSpec& s) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s.h; ++i) q *= s.p;
  return q;
}

std::vector<std::uint32_t> digits_of(std::uint32_t p, std::uint32_t deg, Element x) {
  std::vector<std::uint32_t> d(deg, 0);
  std::uint64_t v = x;
  for (std::uint32_t i = 0; i < deg && v; ++i) {
    d[i] = static_cast<std::uint32_t>(v % p);
    v /= p;
  }
  return d;
}

json field_json(const FieldSpec& s) {
  json j{{"p", s.p}, {"h", s.h}, {"n", s.n}, {"element_cap", s.element_cap}};
  if (!s.modulus.empty())
    j["modulus"] = s.modulus;
  else
    j["modulus_policy"] = "smallest-irreducible";  // deterministic default
  return j;
}

json header(const char* schema) { return json{{"schema", schema}, {"version", kVersion}}; }

json search_result_json(const SearchResult& r, bool include_verdicts) {
  json j = header("maxscat.search-result/1");
  json fj = field_json(r.field);
  if (!r.modulus.empty()) {
    fj["modulus"] = r.modulus;  // the resolved polynomial, even when auto-picked
    fj.erase("modulus_policy");
  }
  j["field"] = std::move(fj);
  j["q"] = q_of(r.field);
  j["s"] = r.s;
  j["b_filter"] = bfilter_name(r.filter);
  j["shard"] = json{{"index", r.shard_index}, {"count", r.shard_count}};
  j["num_tested"] = r.num_tested;
  j["num_scattered"] = r.num_scattered;
  j["scattered_norms"] = r.scattered_norms;
  j["elapsed_seconds"] = r.elapsed_seconds;
  if (include_verdicts) {
    json arr = json::array();
    for (const auto& v : r.verdicts) {
      json e{{"b", v.b}, {"scattered", v.scattered}, {"norm", v.norm}};
      if (!v.scattered) e["witness_slope"] = v.witness_slope;
      arr.push_back(std::move(e));
    }
    j["verdicts"] = std::move(arr);
  }
  return j;
}

}  // namespace

std::string field_spec_to_json(const FieldSpec& spec, int indent) {
  json j{{"p", spec.p}, {"h", spec.h}, {"n", spec.n}};
  if (!spec.modulus.empty()) j["modulus"] = spec.modulus;
  j["element_cap"] = spec.element_cap;
  return j.dump(indent);
}

FieldSpec field_spec_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("field spec: expected a JSON object");
  auto need = [&](const char* k) -> const json& {
    if (!j.contains(k)) throw std::invalid_argument(std::string("field spec: missing key ") + k);
    if (!j[k].is_number_unsigned())
      throw std::invalid_argument(std::string("field spec: nonnegative integer required for ") + k);
    return j[k];
  };
  FieldSpec s;
  s.p = need("p").get<std::uint32_t>();
  s.h = need("h").get<std::uint32_t>();
  s.n = need("n").get<std::uint32_t>();
  if (j.contains("modulus")) {
    if (!j["modulus"].is_array())
      throw std::invalid_argument("field spec: modulus must be a coefficient array");
    s.modulus = j["modulus"].get<std::vector<std::uint32_t>>();
  }
  if (j.contains("element_cap")) {
    if (!j["element_cap"].is_number_unsigned())
      throw std::invalid_argument("field spec: nonnegative integer required for element_cap");
    s.element_cap = j["element_cap"].get<std::uint64_t>();
  }
  return s;
}

std::vector<std::uint32_t> element_digits(const FieldCtx& F, Element x) {
  if (x >= F.size()) throw std::invalid_argument("element out of range");
  return digits_of(F.p(), F.degree(), x);
}

Element element_from_digits(const FieldCtx& F, const std::vector<std::uint32_t>& digits) {
  if (digits.size() > F.degree())
    throw std::invalid_argument("digit list longer than the field degree");
  std::uint64_t v = 0, pw = 1;
  for (std::uint32_t d : digits) {
    if (d >= F.p()) throw std::invalid_argument("digit out of range");
    v += static_cast<std::uint64_t>(d) * pw;
    pw *= F.p();
  }
  return static_cast<Element>(v);
}

const char* bfilter_name(BFilter f) {
  switch (f) {
    case BFilter::AllValid: return "all-valid";
    case BFilter::InFq2: return "in-fq2";
    case BFilter::SqrtMinusOne: return "sqrt-minus-one";
    case BFilter::NormMinusOne: return "norm-minus-one";
    case BFilter::Explicit: return "explicit";
  }
  throw std::invalid_argument("unknown b-filter");
}

BFilter bfilter_from_name(const std::string& name) {
  if (name == "all-valid") return BFilter::AllValid;
  if (name == "in-fq2") return BFilter::InFq2;
  if (name == "sqrt-minus-one") return BFilter::SqrtMinusOne;
  if (name == "norm-minus-one") return BFilter::NormMinusOne;
  if (name == "explicit") return BFilter::Explicit;
  throw std::invalid_argument(
      "unknown b-filter '" + name +
      "' (expected all-valid, in-fq2, sqrt-minus-one, norm-minus-one or explicit)");
}

std::string search_result_to_json(const SearchResult& r, int indent, bool include_verdicts) {
  return search_result_json(r, include_verdicts).dump(indent);
}

std::string norm_census_to_json(const NormCensus& c, int indent) {
  json j = header("maxscat.norm-census/1");
  j["q"] = q_of(c.search.field);
  j["count"] = c.count;
  j["expected"] = c.expected;
  j["match"] = c.match;
  j["search"] = search_result_json(c.search, /*include_verdicts=*/false);
  return j.dump(indent);
}

std::string witness_report_to_json(const WitnessReport& w, int indent) {
  json j = header("maxscat.quadratic-witness/1");
  j["field"] = field_json(w.field);
  j["s"] = 1;
  j["b"] = w.b;
  j["b_digits"] = digits_of(w.field.p, 2 * w.field.n * w.field.h, w.b);
  j["from_quadratic_subfield"] = w.from_quadratic_subfield;
  if (w.from_quadratic_subfield) j["z"] = w.z;
  j["scattered"] = true;  // the finder certifies before returning
  return j.dump(indent);
}

std::string sqrt_witness_report_to_json(const SqrtWitnessReport& w, int indent) {
  json j = header("maxscat.sqrt-witness/1");
  j["field"] = field_json(w.field);
  j["s"] = 1;
  j["b"] = w.b;
  j["b_digits"] = digits_of(w.field.p, 2 * w.field.n * w.field.h, w.b);
  j["scattered"] = w.scattered;
  return j.dump(indent);
}

std::string minor_report_to_json(const MinorIdentityReport& r, int indent) {
  json j = header("maxscat.minor-identities/1");
  j["field"] = field_json(r.field);
  j["samples"] = r.samples;
  j["checks"] = r.checks;
  j["matches"] = r.matches;
  json arr = json::array();
  for (const auto& mm : r.mismatches)
    arr.push_back(json{{"m_value", mm.mval}, {"b", mm.b}, {"which", mm.which}});
  j["mismatches"] = std::move(arr);
  return j.dump(indent);
}

std::string search_csv_header() { return "q,n,s,num_scattered,num_norm_classes,expected"; }

std::string search_csv_row(const SearchResult& r) {
  std::ostringstream os;
  const std::uint64_t q = q_of(r.field);
  os << q << ',' << r.field.n << ',' << r.s << ',' << r.num_scattered << ','
     << r.scattered_norms.size() << ',';
  // The norm-count prediction applies to the degree-6 family only.
  if (r.field.n == 3 && r.s == 1 && q >= 2) os << (q * q + q + 1) * (q - 2) / 2;
  return os.str();
}

std::string format_weight_distribution(const WeightDistribution& wd) {
  std::ostringstream os;
  for (const auto& [w, c] : wd.counts) os << "weight " << w << ": " << c << '\n';
  os << "size: " << wd.size() << '\n';
  return os.str();
}

std::string equivalence_class_report(const SearchResult& r) {
  // verdicts are ascending by b, so the first member seen is the class
  // representative (smallest canonical encoding)
  std::map<Element, std::pair<Element, std::uint64_t>> cls;
  for (const auto& v : r.verdicts) {
    if (!v.scattered) continue;
    auto [it, fresh] = cls.try_emplace(v.norm, v.b, 0);
    ++it->second.second;
    (void)fresh;
  }
  std::ostringstream os;
  os << "norm classes of scattered subspaces: q=" << q_of(r.field) << " n=" << r.field.n
     << " s=" << r.s << '\n';
  for (const auto& [norm, rep] : cls)
    os << "  norm " << norm << ": representative b=" << rep.first << ", size " << rep.second
       << '\n';
  os << "scattered: " << r.num_scattered << ", classes: " << cls.size() << '\n';
  return os.str();
}

std::string code_report(const RankCode& C) {
  const CodeParams P = code_params(C);
  std::ostringstream os;
  os << "rank-metric code: q=" << P.q << ", matrices " << P.m << "x" << P.n_cols << '\n';
  if (C.kind() == RankCode::Kind::Span) {
    os << "kind: left span, " << C.generators().size() << " generators\n";
  } else {
    os << "kind: twisted three-term family (mu=" << C.mu() << ", h=" << C.twist_h()
       << ", s=" << C.twist_s() << ")\n";
  }
  os << "dim_fq: " << C.dim_fq() << '\n';
  os << "parameters: (" << P.m << ", " << P.n_cols << ", " << P.q << "; " << P.d << ")\n";
  os << "mrd: " << (is_mrd(C) ? "yes" : "no") << '\n';
  try {
    NucleusReport N = middle_nucleus(C, NucleusStrategy::Closed);
    os << "nucleus: " << N.size << " elements (closed strategy"
       << (N.scalars_only ? ", scalar maps only" : "") << ")\n";
  } catch (const std::invalid_argument&) {
    try {
      NucleusReport N = middle_nucleus(C, NucleusStrategy::BruteForce);
      os << "nucleus: " << N.size << " elements (brute-force strategy"
         << (N.scalars_only ? ", scalar maps only" : "") << ")\n";
    } catch (const std::invalid_argument& e) {
      os << "nucleus: not computed (" << e.what() << ")\n";
    }
  }
  if (C.kind() == RankCode::Kind::Span) {
    os << "generators:\n";
    std::size_t i = 0;
    for (const QPoly& g : C.generators()) {
      os << "  g" << i++ << ":";
      for (Element c : g.coeffs()) os << ' ' << c;
      os << '\n';
    }
  } else {
    os << "family shape: a0*x + a1*x^(q^s) + mu*a0^(q^h)*x^(q^(2s))\n";
  }
  return os.str();
}

std::string qpoly_to_json(const QPoly& f) { return json(f.coeffs()).dump(); }

}  // namespace maxscat
