#include "maxscat/linset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace maxscat {

namespace {

// q^w - 1 = mu, or throw: vector multiplicities over a point are always of
// this shape because the vectors over a point form a punctured F_q-subspace.
std::uint32_t weight_from_multiplicity(std::uint64_t q, std::uint64_t mu) {
  std::uint64_t pw = q;
  std::uint32_t w = 1;
  while (pw - 1 < mu) {
    pw *= q;
    ++w;
  }
  if (pw - 1 != mu) throw std::runtime_error("point multiplicity is not q^w - 1");
  return w;
}

void decode_pair(const FieldCtx& F, Element u, Element v, std::uint8_t* out) {
  F.core().decode(u, out);
  F.core().decode(v, out + F.degree());
}

// F_p row basis of the F_q-span of the given vectors of V: one row per
// (multiplier, vector) pair, 2*degree columns.
FpMat fq_span_rows(const FieldCtx& F, const std::vector<std::pair<Element, Element>>& vecs) {
  const std::uint32_t D = F.degree();
  const auto& mult = F.fq_multipliers();
  FpMat M(F.p(), static_cast<std::uint32_t>(vecs.size() * mult.size()), 2 * D);
  std::uint32_t r = 0;
  for (auto [u, v] : vecs)
    for (Element w : mult) {
      decode_pair(F, F.mul(w, u), F.mul(w, v), &M.a[static_cast<std::size_t>(r) * M.cols]);
      ++r;
    }
  return M;
}

// Elements encoding the F_p digit basis x^0, x^1, ..., x^{D-1}.
std::vector<Element> digit_basis(const FieldCtx& F) {
  std::vector<Element> e(F.degree());
  Element b = 1;
  for (auto& x : e) {
    x = b;
    b = static_cast<Element>(static_cast<std::uint64_t>(b) * F.p());
  }
  return e;
}

const QPoly& require_slope_map(const SubspaceU& U, const char* what) {
  if (U.form() == SubspaceU::Form::Basis)
    throw std::invalid_argument(std::string(what) + " requires a graph or parametric form");
  return U.slope_map();
}

}  // namespace

SubspaceU SubspaceU::parametric(const FieldCtx& F, Element b, std::uint32_t s,
                                bool allow_degenerate) {
  if (s < 1 || s > F.m() - 1) throw std::invalid_argument("s must lie in [1, 2n-1]");
  if (std::gcd(s, F.n()) != 1) throw std::invalid_argument("gcd(s, n) must be 1");
  if (!allow_degenerate) {
    if (b == 0) throw std::invalid_argument("b must be nonzero");
    if (F.norm_rel(b, F.m(), F.n()) == 1)
      throw std::invalid_argument("relative norm of b must differ from 1");
  }
  std::vector<Element> c(F.m(), 0);
  c[s] = b;
  c[(s + F.n()) % F.m()] = 1;
  SubspaceU U(F);
  U.form_ = Form::Parametric;
  U.b_ = b;
  U.s_ = s;
  U.f_ = QPoly(F, std::move(c));
  return U;
}

SubspaceU SubspaceU::graph(QPoly f) {
  SubspaceU U(f.field());
  U.form_ = Form::Graph;
  U.f_ = std::move(f);
  return U;
}

SubspaceU SubspaceU::from_basis(const FieldCtx& F,
                                std::vector<std::pair<Element, Element>> vecs) {
  if (vecs.size() != F.m()) throw std::invalid_argument("basis must have exactly 2n vectors");
  FpMat rows = fq_span_rows(F, vecs);
  if (fp_rank(rows) != F.m() * F.h())
    throw std::invalid_argument("basis vectors are not F_q-independent");
  SubspaceU U(F);
  U.form_ = Form::Basis;
  U.vecs_ = std::move(vecs);
  return U;
}

Element SubspaceU::b() const {
  if (form_ != Form::Parametric) throw std::logic_error("not a parametric subspace");
  return b_;
}

std::uint32_t SubspaceU::s() const {
  if (form_ != Form::Parametric) throw std::logic_error("not a parametric subspace");
  return s_;
}

const QPoly& SubspaceU::slope_map() const {
  if (!f_) throw std::logic_error("basis-form subspace has no slope map");
  return *f_;
}

std::vector<std::pair<Element, Element>> SubspaceU::basis_vectors() const {
  if (form_ == Form::Basis) return vecs_;
  std::vector<std::pair<Element, Element>> v;
  v.reserve(F_->m());
  for (Element e : F_->fq_basis()) v.emplace_back(e, f_->eval(e));
  return v;
}

std::uint32_t point_weight(const SubspaceU& U, const ProjPoint& P) {
  const FieldCtx& F = U.field();
  if (U.form() != SubspaceU::Form::Basis) {
    if (P.infinity) return 0;  // graphs miss <(0,1)>
    std::vector<Element> c = U.slope_map().coeffs();
    c[0] = F.sub(c[0], P.v);
    return QPoly(F, std::move(c)).kernel_dim();
  }
  // dim(U + W) via a stacked row matrix, W the F_{q^{2n}}-line of P
  const std::uint32_t D = F.degree();
  FpMat rows = fq_span_rows(F, U.basis_vectors());
  const std::uint32_t ur = rows.rows;
  FpMat M(F.p(), ur + D, 2 * D);
  std::copy(rows.a.begin(), rows.a.end(), M.a.begin());
  auto basis = digit_basis(F);
  for (std::uint32_t k = 0; k < D; ++k) {
    Element e = basis[k];
    Element u = P.infinity ? 0 : e;
    Element v = P.infinity ? e : F.mul(e, P.v);
    decode_pair(F, u, v, &M.a[static_cast<std::size_t>(ur + k) * M.cols]);
  }
  std::uint32_t inter = ur + D - fp_rank(std::move(M));
  if (inter % F.h()) throw std::runtime_error("intersection is not F_q-closed");
  return inter / F.h();
}

WeightDistribution weight_distribution(const SubspaceU& U) {
  const FieldCtx& F = U.field();
  const std::uint64_t N = F.size();
  WeightDistribution wd;
  std::vector<std::uint32_t> cnt;
  std::vector<Element> seen;
  if (U.form() != SubspaceU::Form::Basis) {
    const QPoly& f = U.slope_map();
    cnt.assign(N, 0);
    seen.reserve((N - 1) / (F.q() - 1));
    for (Element x = 1; x < N; ++x) {
      Element t = F.div(f.eval(x), x);
      if (cnt[t]++ == 0) seen.push_back(t);
    }
  } else {
    // walk every F_q-combination of the basis vectors; key N is <(0,1)>
    auto vecs = U.basis_vectors();
    auto fq = F.subfield_elements(1);
    const std::uint32_t m = F.m();
    cnt.assign(N + 1, 0);
    std::vector<std::uint32_t> idx(m, 0);
    for (;;) {
      std::uint32_t i = 0;
      while (i < m && idx[i] + 1 == fq.size()) idx[i++] = 0;
      if (i == m) break;
      ++idx[i];
      Element a = 0, b = 0;
      for (std::uint32_t j = 0; j < m; ++j) {
        Element c = fq[idx[j]];
        if (!c) continue;
        a = F.add(a, F.mul(c, vecs[j].first));
        b = F.add(b, F.mul(c, vecs[j].second));
      }
      Element key = a ? F.div(b, a) : static_cast<Element>(N);
      if (cnt[key]++ == 0) seen.push_back(key);
    }
  }
  for (Element t : seen) ++wd.counts[weight_from_multiplicity(F.q(), cnt[t])];
  return wd;
}

bool is_scattered(const SubspaceU& U) {
  const FieldCtx& F = U.field();
  if (U.form() == SubspaceU::Form::Basis) return weight_distribution(U).max_weight() <= 1;
  const QPoly& f = U.slope_map();
  const std::uint64_t N = F.size();
  const std::uint32_t qm1 = F.q() - 1;
  // each slope owns q^w - 1 vectors, so any count above q - 1 means weight >= 2
  std::vector<std::uint32_t> cnt(N, 0);
  for (Element x = 1; x < N; ++x) {
    Element t = F.div(f.eval(x), x);
    if (++cnt[t] > qm1) return false;
  }
  return true;
}

bool is_scattered_dickson(const SubspaceU& U) {
  const FieldCtx& F = U.field();
  const QPoly& f = require_slope_map(U, "is_scattered_dickson");
  const std::uint32_t m = F.m();
  for (Element v = 0; v < F.size(); ++v) {
    std::vector<Element> c = f.coeffs();
    c[0] = F.sub(c[0], v);
    if (dickson_rank(F, dickson_matrix(QPoly(F, std::move(c)))) < m - 1) return false;
  }
  return true;
}

SubspaceU dual_subspace(const SubspaceU& U) {
  const FieldCtx& F = U.field();
  const std::uint32_t D = F.degree();
  const auto& mult = F.fq_multipliers();
  auto vecs = U.basis_vectors();
  auto basis = digit_basis(F);
  // rows: the F_p basis of U; columns: the ambient digit basis of V paired
  // through ((x,y),(u,v)) -> abs_trace(xv - yu)
  FpMat M(F.p(), static_cast<std::uint32_t>(vecs.size() * mult.size()), 2 * D);
  std::uint32_t r = 0;
  for (auto [u0, v0] : vecs)
    for (Element w : mult) {
      Element x = F.mul(w, u0), y = F.mul(w, v0);
      for (std::uint32_t j = 0; j < D; ++j) {
        M.at(r, j) = static_cast<std::uint8_t>(F.abs_trace(F.neg(F.mul(y, basis[j]))));
        M.at(r, D + j) = static_cast<std::uint8_t>(F.abs_trace(F.mul(x, basis[j])));
      }
      ++r;
    }
  auto null_basis = fp_nullspace(std::move(M));
  // pick an F_q-basis out of the F_p solution space
  FpSpan span(F.p(), 2 * D);
  std::vector<std::pair<Element, Element>> out;
  std::vector<std::uint8_t> dig(2 * D);
  for (auto& nv : null_basis) {
    if (out.size() == F.m()) break;
    if (span.contains(nv)) continue;
    Element u = F.core().encode(nv.data());
    Element v = F.core().encode(nv.data() + D);
    out.emplace_back(u, v);
    for (Element w : mult) {
      decode_pair(F, F.mul(w, u), F.mul(w, v), dig.data());
      span.insert(dig);
    }
  }
  if (out.size() != F.m()) throw std::runtime_error("orthogonal complement has wrong rank");
  return SubspaceU::from_basis(F, std::move(out));
}

std::pair<Element, std::uint32_t> dual_parametric(const FieldCtx& F, Element b, std::uint32_t s) {
  return {F.frobenius_q(b, F.m() - s), F.m() - s};
}

bool same_vector_set(const SubspaceU& A, const SubspaceU& B) {
  if (&A.field() != &B.field())
    throw std::invalid_argument("subspaces live over different field contexts");
  FpMat Ma = fq_span_rows(A.field(), A.basis_vectors());
  FpMat Mb = fq_span_rows(B.field(), B.basis_vectors());
  std::uint32_t ra = fp_row_reduce(Ma), rb = fp_row_reduce(Mb);
  if (ra != rb) return false;
  std::size_t len = static_cast<std::size_t>(ra) * Ma.cols;
  return std::equal(Ma.a.begin(), Ma.a.begin() + len, Mb.a.begin());
}

std::vector<PointOrbit> orbit_decomposition(const SubspaceU& U) {
  if (U.form() != SubspaceU::Form::Parametric)
    throw std::invalid_argument("orbit decomposition requires a parametric subspace");
  const FieldCtx& F = U.field();
  const QPoly& f = U.slope_map();
  const std::uint64_t N = F.size();

  std::vector<std::uint32_t> cnt(N, 0);
  std::vector<Element> slopes;
  for (Element x = 1; x < N; ++x) {
    Element t = F.div(f.eval(x), x);
    if (cnt[t]++ == 0) slopes.push_back(t);
  }
  std::sort(slopes.begin(), slopes.end());

  // distinct values of l^{q^s - 1}, l in F_{q^n}^*
  std::vector<Element> mults;
  {
    std::vector<std::uint8_t> mark(N, 0);
    for (Element l : F.subfield_elements(F.n())) {
      if (!l) continue;
      Element mu = F.div(F.frobenius_q(l, U.s()), l);
      if (!mark[mu]) {
        mark[mu] = 1;
        mults.push_back(mu);
      }
    }
  }

  std::vector<std::uint8_t> visited(N, 0);
  std::vector<PointOrbit> orbits;
  for (Element t : slopes) {
    if (visited[t]) continue;
    PointOrbit orb;
    orb.weight = weight_from_multiplicity(F.q(), cnt[t]);
    for (Element mu : mults) {
      Element v = F.mul(t, mu);
      if (visited[v]) continue;
      visited[v] = 1;
      if (cnt[v] == 0 || cnt[v] != cnt[t])
        throw std::runtime_error("orbit is not weight-homogeneous inside the linear set");
      orb.points.push_back(ProjPoint::slope(v));
    }
    std::sort(orb.points.begin(), orb.points.end());
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

}  // namespace maxscat
