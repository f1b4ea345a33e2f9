#include "maxscat/experiments.hpp"

#include "maxscat/qpoly.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace maxscat {

namespace {

constexpr std::uint64_t kSearchFieldCap = 1ull << 24;

// Multiplicity count of each slope f(x)/x; any slope hit more than q - 1
// times certifies a point of weight >= 2 and ends the scan.
BVerdict slope_count_verdict(const FieldCtx& F, Element b, std::uint32_t s,
                             std::vector<std::uint16_t>& cnt) {
  const std::uint64_t N = F.size();
  std::fill(cnt.begin(), cnt.end(), 0);
  const std::uint16_t limit = static_cast<std::uint16_t>(F.q() - 1);
  BVerdict v;
  v.b = b;
  v.scattered = true;
  v.norm = F.norm_rel(b, F.m(), F.n());
  const std::uint32_t s2 = s + F.n();
  for (Element x = 1; x < N; ++x) {
    Element fx = F.add(F.mul(b, F.frobenius_q(x, s)), F.frobenius_q(x, s2));
    Element t = F.div(fx, x);
    if (++cnt[t] > limit) {
      v.scattered = false;
      v.witness_slope = t;
      break;
    }
  }
  return v;
}

std::vector<Element> filtered_domain(const FieldCtx& F, const SearchJob& job) {
  const std::uint64_t N = F.size();
  std::vector<Element> out;
  auto valid = [&](Element b) { return b != 0 && F.norm_rel(b, F.m(), F.n()) != 1; };
  switch (job.filter) {
    case BFilter::AllValid:
      for (Element b = 1; b < N; ++b)
        if (valid(b)) out.push_back(b);
      break;
    case BFilter::InFq2:
      for (Element b : F.subfield_elements(2))
        if (valid(b)) out.push_back(b);
      break;
    case BFilter::SqrtMinusOne: {
      Element neg1 = F.neg(1);
      for (Element b : F.subfield_elements(2))  // an order-4 element lies there
        if (valid(b) && F.mul(b, b) == neg1) out.push_back(b);
      break;
    }
    case BFilter::NormMinusOne: {
      Element neg1 = F.neg(1);
      for (Element b = 1; b < N; ++b)
        if (valid(b) && F.norm_rel(b, F.m(), F.n()) == neg1) out.push_back(b);
      break;
    }
    case BFilter::Explicit:
      for (Element b : job.explicit_bs) {
        if (!valid(b)) throw std::invalid_argument("search: explicit b outside the valid domain");
        out.push_back(b);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      break;
  }
  return out;
}

// F_q -> F_2 trace for even q (the tower's absolute trace always passes
// through an even extension degree and cannot express this one).
Element trace_to_f2(const FieldCtx& F, Element u) {
  Element acc = 0, t = u;
  for (std::uint32_t i = 0; i < F.h(); ++i) {
    acc = F.add(acc, t);
    t = F.mul(t, t);
  }
  return acc;
}

void certify_or_throw(const FieldCtx& F, const BVerdict& v, std::uint32_t s) {
  SubspaceU U = SubspaceU::parametric(F, v.b, s);
  if (v.scattered) {
    if (!is_scattered_dickson(U))
      throw std::logic_error("search: slope-count and Dickson-rank paths disagree");
  } else {
    if (point_weight(U, ProjPoint::slope(v.witness_slope)) < 2)
      throw std::logic_error("search: witness slope does not carry weight 2");
  }
}

}  // namespace

SearchResult search_scattered(const SearchJob& job) {
  auto t0 = std::chrono::steady_clock::now();
  if (job.shard_count == 0 || job.shard_index >= job.shard_count)
    throw std::invalid_argument("search: shard index must be below shard count");
  FieldCtx F(job.field);
  if (F.size() > kSearchFieldCap)
    throw std::invalid_argument("search: field too large for an exhaustive b-domain");
  // the parametric constructor enforces the s-side preconditions
  {
    Element probe = 0;
    for (Element b = 1; b < F.size(); ++b)
      if (F.norm_rel(b, F.m(), F.n()) != 1) {
        probe = b;
        break;
      }
    if (probe) SubspaceU::parametric(F, probe, job.s);
  }

  std::vector<Element> domain = filtered_domain(F, job);
  std::vector<Element> mine;
  for (std::size_t i = job.shard_index; i < domain.size(); i += job.shard_count)
    mine.push_back(domain[i]);

  SearchResult R;
  R.field = F.spec();
  R.modulus = F.modulus();
  R.s = job.s;
  R.filter = job.filter;
  R.shard_index = job.shard_index;
  R.shard_count = job.shard_count;
  R.verdicts.resize(mine.size());

  const std::uint32_t T = std::max<std::uint32_t>(1, job.threads);
  auto worker = [&](std::uint32_t tid) {
    std::vector<std::uint16_t> cnt(F.size());
    for (std::size_t i = tid; i < mine.size(); i += T) {
      BVerdict v = slope_count_verdict(F, mine[i], job.s, cnt);
      if (job.certify) certify_or_throw(F, v, job.s);
      R.verdicts[i] = v;
    }
  };
  if (T == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(T);
    for (std::uint32_t t = 0; t < T; ++t)
      pool.emplace_back([&, t] {
        try {
          worker(t);
        } catch (...) {
          errs[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }

  std::unordered_map<Element, bool> norm_verdict;
  for (const BVerdict& v : R.verdicts) {
    ++R.num_tested;
    if (v.scattered) {
      ++R.num_scattered;
      R.scattered_norms.push_back(v.norm);
    }
    auto [it, fresh] = norm_verdict.emplace(v.norm, v.scattered);
    if (!fresh && it->second != v.scattered)
      throw std::logic_error("search: equal-norm b received different verdicts");
  }
  std::sort(R.scattered_norms.begin(), R.scattered_norms.end());
  R.scattered_norms.erase(std::unique(R.scattered_norms.begin(), R.scattered_norms.end()),
                          R.scattered_norms.end());
  R.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return R;
}

NormCensus scattered_norm_census(std::uint32_t p, std::uint32_t h) {
  SearchJob job;
  job.field.p = p;
  job.field.h = h;
  job.field.n = 3;
  NormCensus C;
  C.search = search_scattered(job);
  C.count = C.search.scattered_norms.size();
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) q *= p;
  C.expected = (q * q + q + 1) * (q - 2) / 2;
  C.match = C.count == C.expected;
  return C;
}

WitnessReport find_scattered_witness_fq2(std::uint32_t p, std::uint32_t h) {
  FieldSpec spec;
  spec.p = p;
  spec.h = h;
  spec.n = 3;
  FieldCtx F(spec);
  const std::uint64_t q = F.q();
  std::vector<std::uint16_t> cnt(F.size());

  auto verified = [&](Element b) {
    if (b == 0 || F.norm_rel(b, 6, 3) == 1) return false;
    BVerdict v = slope_count_verdict(F, b, 1, cnt);
    if (!v.scattered) return false;
    certify_or_throw(F, v, 1);
    return true;
  };

  WitnessReport W;
  W.field = F.spec();
  W.field.modulus = F.modulus();  // witnesses are representation-dependent
  if (q > 4) {
    const bool odd = p != 2;
    const Element four = F.add(F.add(1, 1), F.add(1, 1));
    for (Element z : F.subfield_elements(1)) {
      if (z == 0 || z == 1) continue;
      if (odd) {
        if (z == four) continue;
        Element disc = F.mul(z, F.sub(z, four));
        if (F.pow(disc, (q - 1) / 2) != 1) continue;  // need a square
      } else {
        if (trace_to_f2(F, F.inv(z)) != 0) continue;
      }
      Element target = F.sub(1, z);
      for (Element b : F.subfield_elements(2)) {
        if (b == 0 || F.pow(b, q + 1) != target) continue;
        if (verified(b)) {
          W.b = b;
          W.from_quadratic_subfield = true;
          W.z = z;
          return W;
        }
      }
    }
    throw std::runtime_error("witness scan: no quadratic-subfield witness found");
  }
  for (Element b = 1; b < F.size(); ++b)
    if (verified(b)) {
      W.b = b;
      return W;
    }
  throw std::runtime_error("witness scan: no scattered b in the whole field");
}

SqrtWitnessReport verify_sqrt_witness(std::uint32_t p, std::uint32_t h) {
  if (p == 2) throw std::invalid_argument("sqrt witness: q must be odd");
  FieldSpec spec;
  spec.p = p;
  spec.h = h;
  spec.n = 4;
  spec.element_cap = std::max<std::uint64_t>(spec.element_cap, 1ull << 23);
  FieldCtx F(spec);

  SqrtWitnessReport R;
  R.field = F.spec();
  R.field.modulus = F.modulus();
  Element neg1 = F.neg(1);
  for (Element b : F.subfield_elements(2))
    if (b != 0 && F.mul(b, b) == neg1) {
      R.b = b;
      break;
    }
  if (R.b == 0) throw std::logic_error("sqrt witness: no square root of -1 found");

  std::vector<std::uint16_t> cnt(F.size());
  BVerdict v = slope_count_verdict(F, R.b, 1, cnt);
  certify_or_throw(F, v, 1);
  R.scattered = v.scattered;
  return R;
}

MinorIdentityReport minor_identity_report(std::uint32_t p, std::uint32_t h, std::uint32_t n,
                                          std::uint32_t samples, std::uint64_t seed) {
  if (n != 3 && n != 4)
    throw std::invalid_argument("minor identities are transcribed for n in {3, 4}");
  FieldSpec spec;
  spec.p = p;
  spec.h = h;
  spec.n = n;
  FieldCtx F(spec);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> any(0, static_cast<Element>(F.size() - 1));

  MinorIdentityReport R;
  R.field = F.spec();
  R.field.modulus = F.modulus();
  R.samples = samples;
  auto record = [&](Element mval, Element b, bool ok, const char* which) {
    ++R.checks;
    if (ok)
      ++R.matches;
    else
      R.mismatches.push_back({mval, b, which});
  };
  for (std::uint32_t i = 0; i < samples; ++i) {
    Element mval = any(rng), b = any(rng);
    DicksonMatrix D = dickson_matrix(slope_poly(F, mval, b, 1));
    if (n == 3) {
      record(mval, b, dickson_minor(F, D, 6, 1) == minor_m6_r6c1(F, mval, b), "minor(6,1)");
      record(mval, b, dickson_minor(F, D, 6, 5) == minor_m6_r6c5(F, mval, b), "minor(6,5)");
    } else {
      record(mval, b, dickson_minor(F, D, 8, 2) == minor_m8_r8c2(F, mval, b), "minor(8,2)");
      std::vector<Element> sub;
      for (std::uint32_t r = 0; r < 6; ++r)
        for (std::uint32_t c = 2; c < 8; ++c) sub.push_back(D.at(r, c));
      record(mval, b, field_det(F, std::move(sub), 6) == central_det_m8(F, mval, b),
             "central 6x6");
    }
  }
  return R;
}

}  // namespace maxscat
