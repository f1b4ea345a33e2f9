#include "maxscat/rankcode.hpp"

#include "maxscat/fp_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace maxscat {

namespace {

// Reduced row echelon over F_{q^m} of coefficient vectors, unit pivots.
std::vector<std::vector<Element>> echelonize(const FieldCtx& F,
                                             const std::vector<QPoly>& gens) {
  std::vector<std::vector<Element>> rows;
  for (const QPoly& g : gens) rows.push_back(g.coeffs());
  const std::uint32_t mm = F.m();
  std::vector<std::vector<Element>> ech;
  for (auto& row : rows) {
    for (const auto& e : ech) {
      std::uint32_t piv = 0;
      while (e[piv] == 0) ++piv;
      if (row[piv] == 0) continue;
      Element c = row[piv];
      for (std::uint32_t j = 0; j < mm; ++j) row[j] = F.sub(row[j], F.mul(c, e[j]));
    }
    std::uint32_t piv = 0;
    while (piv < mm && row[piv] == 0) ++piv;
    if (piv == mm) continue;
    Element inv = F.inv(row[piv]);
    for (std::uint32_t j = 0; j < mm; ++j) row[j] = F.mul(inv, row[j]);
    for (auto& e : ech) {
      if (e[piv] == 0) continue;
      Element c = e[piv];
      for (std::uint32_t j = 0; j < mm; ++j) e[j] = F.sub(e[j], F.mul(c, row[j]));
    }
    ech.push_back(row);
  }
  // order rows by pivot column
  std::sort(ech.begin(), ech.end(), [](const auto& x, const auto& y) {
    std::uint32_t px = 0, py = 0;
    while (x[px] == 0) ++px;
    while (y[py] == 0) ++py;
    return px < py;
  });
  return ech;
}

QPoly twisted_word(const FieldCtx& F, Element mu, std::uint32_t h, std::uint32_t s,
                   Element a0, Element a1) {
  const std::uint32_t mm = F.m();
  std::vector<Element> c(mm, 0);
  c[0] = F.add(c[0], a0);
  c[s % mm] = F.add(c[s % mm], a1);
  std::uint32_t t = (2 * s) % mm;
  c[t] = F.add(c[t], F.mul(mu, F.frobenius_q(a0, h)));
  return QPoly(F, std::move(c));
}

std::uint64_t upow_checked(std::uint64_t b, std::uint32_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (r > cap / b) return cap + 1;
    r *= b;
  }
  return r;
}

std::uint64_t pack_matrix(const FpMat& M) {
  std::uint64_t key = 0, mult = 1;
  for (std::uint8_t v : M.a) {
    key += static_cast<std::uint64_t>(v) * mult;
    mult *= M.p;
  }
  return key;
}

FpMat unpack_matrix(std::uint64_t key, std::uint32_t p, std::uint32_t d) {
  FpMat M(p, d, d);
  for (auto& v : M.a) {
    v = static_cast<std::uint8_t>(key % p);
    key /= p;
  }
  return M;
}

FpMat mat_mul(const FpMat& A, const FpMat& B) {
  FpMat C(A.p, A.rows, B.cols);
  for (std::uint32_t i = 0; i < A.rows; ++i)
    for (std::uint32_t k = 0; k < A.cols; ++k) {
      std::uint8_t aik = A.at(i, k);
      if (!aik) continue;
      for (std::uint32_t j = 0; j < B.cols; ++j)
        C.at(i, j) = static_cast<std::uint8_t>((C.at(i, j) + aik * B.at(k, j)) % A.p);
    }
  return C;
}

}  // namespace

RankCode RankCode::span(const FieldCtx& F, std::vector<QPoly> gens) {
  if (gens.empty()) throw std::invalid_argument("span: no generators");
  for (const QPoly& g : gens)
    if (&g.field() != &F) throw std::invalid_argument("span: generator from another field");
  RankCode C(F, Kind::Span);
  C.gens_ = std::move(gens);
  C.ech_ = echelonize(F, C.gens_);
  C.dim_fq_ = F.m() * static_cast<std::uint32_t>(C.ech_.size());
  return C;
}

RankCode RankCode::twisted_gabidulin(const FieldCtx& F, Element mu, std::uint32_t h_exp,
                                     std::uint32_t s, bool allow_any_mu) {
  const std::uint32_t mm = F.m();
  if (mm < 3 || s == 0 || s >= mm || std::gcd(s, mm) != 1)
    throw std::invalid_argument("twisted_gabidulin: need 1 <= s < m with gcd(s, m) = 1");
  if (mu == 0)
    return span(F, {QPoly::identity(F), QPoly::monomial(F, 1, s)});
  if (!allow_any_mu && F.norm_rel(mu, mm, 1) == 1)
    throw std::invalid_argument("twisted_gabidulin: norm of mu must differ from 1");
  RankCode C(F, Kind::Twisted);
  C.mu_ = mu;
  C.h_ = h_exp % mm;
  C.s_ = s;
  C.lax_ = allow_any_mu;
  C.dim_fq_ = 2 * mm;
  return C;
}

Element RankCode::mu() const {
  if (kind_ != Kind::Twisted) throw std::logic_error("mu: not a twisted code");
  return mu_;
}

std::uint32_t RankCode::twist_h() const {
  if (kind_ != Kind::Twisted) throw std::logic_error("twist_h: not a twisted code");
  return h_;
}

std::uint32_t RankCode::twist_s() const {
  if (kind_ != Kind::Twisted) throw std::logic_error("twist_s: not a twisted code");
  return s_;
}

bool RankCode::contains(const QPoly& w) const {
  const FieldCtx& F = *F_;
  const std::uint32_t mm = F.m();
  if (w.m() != mm) return false;
  if (kind_ == Kind::Twisted) {
    Element a0 = w.coeff(0);
    Element a1 = w.coeff(s_);
    return twisted_word(F, mu_, h_, s_, a0, a1) == w;
  }
  std::vector<Element> row = w.coeffs();
  for (const auto& e : ech_) {
    std::uint32_t piv = 0;
    while (e[piv] == 0) ++piv;
    if (row[piv] == 0) continue;
    Element c = row[piv];
    for (std::uint32_t j = 0; j < mm; ++j) row[j] = F.sub(row[j], F.mul(c, e[j]));
  }
  for (Element v : row)
    if (v != 0) return false;
  return true;
}

std::vector<QPoly> RankCode::basis_rows() const {
  if (kind_ != Kind::Span) throw std::logic_error("basis_rows: not a span code");
  std::vector<QPoly> rows;
  for (const auto& e : ech_) rows.emplace_back(*F_, e);
  return rows;
}

std::vector<QPoly> RankCode::enumerate_words(std::uint64_t cap) const {
  const FieldCtx& F = *F_;
  const std::uint64_t N = F.size();
  std::vector<QPoly> words;
  if (kind_ == Kind::Twisted) {
    if (upow_checked(N, 2, cap) > cap)
      throw std::invalid_argument("enumerate_words: code larger than cap");
    words.reserve(N * N);
    for (Element a0 = 0; a0 < N; ++a0)
      for (Element a1 = 0; a1 < N; ++a1)
        words.push_back(twisted_word(F, mu_, h_, s_, a0, a1));
    return words;
  }
  const std::uint32_t r = static_cast<std::uint32_t>(ech_.size());
  if (upow_checked(N, r, cap) > cap)
    throw std::invalid_argument("enumerate_words: code larger than cap");
  std::vector<Element> coef(r, 0);
  const std::uint32_t mm = F.m();
  for (;;) {
    std::vector<Element> c(mm, 0);
    for (std::uint32_t i = 0; i < r; ++i) {
      if (coef[i] == 0) continue;
      for (std::uint32_t j = 0; j < mm; ++j)
        c[j] = F.add(c[j], F.mul(coef[i], ech_[i][j]));
    }
    words.emplace_back(F, std::move(c));
    std::uint32_t k = 0;
    while (k < r && ++coef[k] == N) coef[k++] = 0;
    if (k == r) break;
  }
  return words;
}

RankCode code_from_subspace(const SubspaceU& U) {
  if (U.form() == SubspaceU::Form::Basis)
    throw std::invalid_argument("code_from_subspace: basis form has no canonical slope map");
  QPoly f = U.slope_map();
  if (f.is_scalar())
    throw std::invalid_argument("code_from_subspace: scalar slope map collapses the span");
  return RankCode::span(U.field(), {f, QPoly::identity(U.field())});
}

std::uint32_t min_distance(const RankCode& C) {
  const FieldCtx& F = C.field();
  std::uint32_t best = F.m() + 1;
  if (C.kind() == RankCode::Kind::Span) {
    std::vector<QPoly> basis = C.basis_rows();
    if (basis.empty()) throw std::invalid_argument("min_distance: empty code");
    if (basis.size() == 1) return basis[0].rank();
    if (basis.size() == 2) {
      for (Element c = 0; c < F.size(); ++c) {
        std::uint32_t rk = basis[0].add(basis[1].scale(c)).rank();
        if (rk < best) best = rk;
        if (best == 1) return best;
      }
      std::uint32_t rk = basis[1].rank();
      return rk < best ? rk : best;
    }
  }
  for (const QPoly& w : C.enumerate_words()) {
    if (w.is_zero()) continue;
    std::uint32_t rk = w.rank();
    if (rk < best) best = rk;
    if (best == 1) break;
  }
  return best;
}

CodeParams code_params(const RankCode& C) {
  return CodeParams{C.m(), C.m(), C.field().q(), min_distance(C)};
}

bool is_mrd(const RankCode& C) {
  std::uint32_t d = min_distance(C);
  return C.dim_fq() == C.m() * (C.m() - d + 1);
}

RankCode adjoint_code(const RankCode& C) {
  const FieldCtx& F = C.field();
  if (C.kind() == RankCode::Kind::Span) {
    std::vector<QPoly> gens;
    for (const QPoly& g : C.generators()) gens.push_back(g.adjoint());
    return RankCode::span(F, std::move(gens));
  }
  const std::uint32_t mm = F.m();
  std::uint32_t t = (2 * C.twist_s()) % mm;
  std::uint32_t shift = (mm - t) % mm;
  Element mu2 = F.frobenius_q(C.mu(), shift);
  std::uint32_t h2 = (C.twist_h() + shift) % mm;
  return RankCode::twisted_gabidulin(F, mu2, h2, mm - C.twist_s(), true);
}

NucleusReport middle_nucleus(const RankCode& C, NucleusStrategy strategy) {
  const FieldCtx& F = C.field();
  const std::uint32_t mm = F.m();
  NucleusReport R;
  R.strategy = strategy;
  if (strategy == NucleusStrategy::Closed) {
    if (C.kind() != RankCode::Kind::Span)
      throw std::invalid_argument("middle_nucleus: closed form needs a span code");
    for (const QPoly& g : C.generators())
      for (Element beta : F.fq_basis())
        if (!C.contains(g.scale(beta)))
          throw std::logic_error("middle_nucleus: span not closed under scalars");
    std::uint32_t d = min_distance(C);
    if (d != mm - 1 || !is_mrd(C))
      throw std::invalid_argument(
          "middle_nucleus: closed form needs a bound-meeting code of distance m - 1");
    // scalar maps sit inside; a distance-m stabilizer is bounded above by q^m
    R.size = F.size();
    R.scalars_only = true;
    return R;
  }
  if (F.h() != 1)
    throw std::invalid_argument("middle_nucleus: bruteforce needs a prime base field");
  const std::uint32_t p = F.p();
  std::uint64_t total = upow_checked(p, mm * mm, 1u << 24);
  if (total > (1u << 24))
    throw std::invalid_argument("middle_nucleus: bruteforce cap exceeded");

  std::unordered_set<std::uint64_t> code_keys;
  for (const QPoly& w : C.enumerate_words()) code_keys.insert(pack_matrix(w.fp_matrix()));

  std::vector<FpMat> basis;
  if (C.kind() == RankCode::Kind::Span) {
    for (const QPoly& g : C.generators())
      for (Element beta : F.fq_basis()) basis.push_back(g.scale(beta).fp_matrix());
  } else {
    for (Element beta : F.fq_basis()) {
      basis.push_back(twisted_word(F, C.mu(), C.twist_h(), C.twist_s(), beta, 0).fp_matrix());
      basis.push_back(twisted_word(F, C.mu(), C.twist_h(), C.twist_s(), 0, beta).fp_matrix());
    }
  }

  for (std::uint64_t key = 0; key < total; ++key) {
    FpMat Z = unpack_matrix(key, p, mm);
    bool ok = true;
    for (const FpMat& B : basis)
      if (!code_keys.count(pack_matrix(mat_mul(Z, B)))) {
        ok = false;
        break;
      }
    if (ok) R.packed_elements.push_back(key);
  }
  R.size = R.packed_elements.size();

  std::unordered_set<std::uint64_t> scalars;
  for (Element c = 0; c < F.size(); ++c)
    scalars.insert(pack_matrix(QPoly::identity(F).scale(c).fp_matrix()));
  R.scalars_only =
      R.packed_elements.size() == scalars.size() &&
      std::all_of(R.packed_elements.begin(), R.packed_elements.end(),
                  [&](std::uint64_t k) { return scalars.count(k) != 0; });
  return R;
}

}  // namespace maxscat
