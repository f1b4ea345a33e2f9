#include "maxscat/equivalence.hpp"

#include <numeric>
#include <stdexcept>

namespace maxscat {

namespace {

constexpr std::uint64_t kBruteCap = 256;

// p^e as an integer; e is reduced mod the F_p-degree, so the result indexes a
// genuine automorphism.
std::uint64_t p_power(const FieldCtx& F, std::uint32_t e) {
  e %= F.degree();
  std::uint64_t r = 1;
  while (e--) r *= F.p();
  return r;
}

void check_family_s(const FieldCtx& F, std::uint32_t s) {
  if (s < 1 || s > F.m() - 1) throw std::invalid_argument("s must lie in [1, 2n-1]");
  if (std::gcd(s, F.n()) != 1) throw std::invalid_argument("gcd(s, n) must be 1");
}

// some t with N_{q^{2n}/q^n}(t) = target
Element solve_relative_norm(const FieldCtx& F, Element target) {
  const std::uint64_t qn = F.q_pow(F.n());
  if (F.uses_log_tables()) {
    // logs of F_{q^n}^* elements are multiples of q^n + 1
    Element t = F.exp_of(F.log_of(target) / (qn + 1));
    if (F.norm_rel(t, F.m(), F.n()) != target) throw std::runtime_error("norm solve failed");
    return t;
  }
  for (Element t = 1; t < F.size(); ++t)
    if (F.norm_rel(t, F.m(), F.n()) == target) return t;
  throw std::domain_error("target is not a relative norm");
}

// some c with c^{q^n - 1} = w; w must have relative norm 1
Element solve_power_qn_minus_1(const FieldCtx& F, Element w) {
  const std::uint64_t qn = F.q_pow(F.n());
  if (F.uses_log_tables()) {
    Element c = F.exp_of(F.log_of(w) / (qn - 1));
    if (F.pow(c, qn - 1) != w) throw std::runtime_error("subgroup root solve failed");
    return c;
  }
  for (Element c = 1; c < F.size(); ++c)
    if (F.pow(c, qn - 1) == w) return c;
  throw std::domain_error("no solution of c^{q^n-1} = w");
}

// O(1) membership in U: table of the slope map for graph forms, F_p row space
// for basis forms.
class Membership {
 public:
  explicit Membership(const SubspaceU& U)
      : F_(U.field()), span_(U.field().p(), 2 * U.field().degree()) {
    if (U.form() != SubspaceU::Form::Basis) {
      const QPoly& f = U.slope_map();
      img_.resize(F_.size());
      for (Element x = 0; x < F_.size(); ++x) img_[x] = f.eval(x);
    } else {
      const std::uint32_t D = F_.degree();
      std::vector<std::uint8_t> dig(2 * D);
      for (auto [u, v] : U.basis_vectors())
        for (Element w : F_.fq_multipliers()) {
          F_.core().decode(F_.mul(w, u), dig.data());
          F_.core().decode(F_.mul(w, v), dig.data() + D);
          span_.insert(dig);
        }
      scratch_.resize(2 * D);
    }
  }

  bool contains(Element x, Element y) const {
    if (!img_.empty()) return img_[x] == y;
    F_.core().decode(x, scratch_.data());
    F_.core().decode(y, scratch_.data() + F_.degree());
    return span_.contains(scratch_);
  }

 private:
  const FieldCtx& F_;
  std::vector<Element> img_;
  FpSpan span_;
  mutable std::vector<std::uint8_t> scratch_;
};

}  // namespace

std::pair<Element, Element> apply_map(const FieldCtx& F, const SemilinearMap2& phi, Element x,
                                      Element y) {
  if (phi.frob_exp) {
    std::uint64_t pe = p_power(F, phi.frob_exp);
    x = F.pow(x, pe);
    y = F.pow(y, pe);
  }
  return {F.add(F.mul(phi.a, x), F.mul(phi.b, y)), F.add(F.mul(phi.c, x), F.mul(phi.d, y))};
}

SubspaceU apply_map(const FieldCtx& F, const SemilinearMap2& phi, const SubspaceU& U) {
  if (F.sub(F.mul(phi.a, phi.d), F.mul(phi.b, phi.c)) == 0)
    throw std::invalid_argument("map matrix is singular");
  std::vector<std::pair<Element, Element>> out;
  for (auto [u, v] : U.basis_vectors()) out.push_back(apply_map(F, phi, u, v));
  return SubspaceU::from_basis(F, std::move(out));
}

Normalization normalize_to_parametric(const FieldCtx& F, Element alpha, Element beta,
                                      std::uint32_t s) {
  check_family_s(F, s);
  if (alpha == 0 || beta == 0)
    throw std::invalid_argument("monomial shapes cannot be normalized (alpha*beta = 0)");
  Element na = F.norm_rel(alpha, F.m(), F.n());
  Element nb = F.norm_rel(beta, F.m(), F.n());
  if (na == nb) throw std::invalid_argument("equal relative norms define no family member");

  Normalization R;
  R.s = s;
  if (beta == 1) {  // already in family form
    R.b = alpha;
    R.phi = SemilinearMap2{};
    return R;
  }
  R.b = solve_relative_norm(F, F.div(na, nb));
  // beta * b = alpha * a^{q^s (q^n - 1)}; pick a = c^{q^{2n-s}} so a^{q^s} = c
  Element w = F.div(F.mul(beta, R.b), alpha);
  Element c = solve_power_qn_minus_1(F, w);
  Element a = F.frobenius_q(c, F.m() - s);
  R.phi = SemilinearMap2{a, 0, 0, F.div(F.mul(R.b, c), alpha), 0};

  // the image of the graph of f must be the graph of the family map
  QPoly g = SubspaceU::parametric(F, R.b, s).slope_map();
  QPoly f = QPoly::monomial(F, alpha, s).add(QPoly::monomial(F, beta, (s + F.n()) % F.m()));
  for (Element e : F.fq_basis()) {
    auto [x2, y2] = apply_map(F, R.phi, e, f.eval(e));
    if (g.eval(x2) != y2) throw std::runtime_error("normalization image check failed");
  }
  return R;
}

bool norm_orbit_equivalent(const FieldCtx& F, Element b, std::uint32_t s, Element b2,
                           std::uint32_t s2) {
  const std::uint32_t n = F.n();
  for (std::uint32_t sv : {s, s2})
    if (sv < 1 || sv >= n || std::gcd(sv, n) != 1)
      throw std::invalid_argument("s must lie in [1, n) with gcd(s, n) = 1");
  for (Element bv : {b, b2})
    if (bv == 0 || F.norm_rel(bv, F.m(), n) == 1)
      throw std::invalid_argument("b outside the admissible family range");

  Element nb = F.norm_rel(b, F.m(), n);
  Element nb2 = F.norm_rel(b2, F.m(), n);
  const std::uint32_t aut = n * F.h();  // automorphisms of F_{q^n} are p-powers
  Element cur = nb;
  for (std::uint32_t i = 0; i < aut; ++i) {
    if (s == s2 && nb2 == cur) return true;
    if (s + s2 == n && F.mul(nb2, cur) == 1) return true;
    cur = F.pow(cur, F.p());
  }
  return false;
}

bool family_equivalent(const FieldCtx& F, Element b, std::uint32_t s, Element b2,
                       std::uint32_t s2) {
  check_family_s(F, s);
  check_family_s(F, s2);
  if (s > F.n()) std::tie(b, s) = dual_parametric(F, b, s);
  if (s2 > F.n()) std::tie(b2, s2) = dual_parametric(F, b2, s2);
  return norm_orbit_equivalent(F, b, s, b2, s2);
}

Element norm_class_label(const FieldCtx& F, Element b) {
  Element cur = F.norm_rel(b, F.m(), F.n());
  Element best = cur;
  for (std::uint32_t i = 1; i < F.n() * F.h(); ++i) {
    cur = F.pow(cur, F.p());
    best = std::min(best, cur);
  }
  return best;
}

SemilinearMap2 duality_equivalence_map(const FieldCtx& F, Element b, std::uint32_t s) {
  check_family_s(F, s);
  if (b == 0 || F.norm_rel(b, F.m(), F.n()) == 1)
    throw std::invalid_argument("b outside the admissible family range");
  // alpha^{q^n - 1} = -1 / b^{q^n - 1}
  Element bq = F.div(F.frobenius_q(b, F.n()), b);
  Element alpha = solve_power_qn_minus_1(F, F.neg(F.inv(bq)));
  // beta = (b^{2 q^n} alpha^{q^n} + alpha)^{q^{n-s}}
  Element t = F.add(F.mul(F.frobenius_q(F.mul(b, b), F.n()), F.frobenius_q(alpha, F.n())), alpha);
  Element beta = F.frobenius_q(t, static_cast<std::int64_t>(F.n()) - static_cast<std::int64_t>(s));
  SemilinearMap2 phi{0, alpha, beta, 0, 0};

  auto [bd, sd] = dual_parametric(F, b, s);
  QPoly f = SubspaceU::parametric(F, b, s).slope_map();
  QPoly g = SubspaceU::parametric(F, bd, sd).slope_map();
  for (Element e : F.fq_basis()) {
    auto [x2, y2] = apply_map(F, phi, e, f.eval(e));
    if (g.eval(x2) != y2) throw std::runtime_error("duality map image check failed");
  }
  return phi;
}

SubspaceU monomial_subspace(const FieldCtx& F, std::uint32_t s) {
  if (s < 1 || s >= F.m() || std::gcd(s, F.m()) != 1)
    throw std::invalid_argument("monomial exponent needs gcd(s, 2n) = 1");
  return SubspaceU::graph(QPoly::monomial(F, 1, s));
}

SubspaceU twisted_monomial_subspace(const FieldCtx& F, Element delta, std::uint32_t s,
                                    bool allow_any_delta) {
  if (s < 1 || s >= F.m() || std::gcd(s, F.m()) != 1)
    throw std::invalid_argument("twisted exponent needs gcd(s, 2n) = 1");
  if (delta == 0) throw std::invalid_argument("delta must be nonzero");
  if (!allow_any_delta && F.norm_rel(delta, F.m(), 1) == 1)
    throw std::invalid_argument("absolute norm of delta must differ from 1");
  return SubspaceU::graph(
      QPoly::monomial(F, delta, s).add(QPoly::monomial(F, 1, F.m() - s)));
}

std::vector<SemilinearMap2> automorphism_group(const SubspaceU& U) {
  if (U.form() != SubspaceU::Form::Parametric)
    throw std::invalid_argument("closed-form automorphism group needs a parametric subspace");
  const FieldCtx& F = U.field();
  const QPoly& f = U.slope_map();
  std::vector<SemilinearMap2> G;
  for (Element a : F.subfield_elements(F.n())) {
    if (!a) continue;
    SemilinearMap2 phi{a, 0, 0, F.frobenius_q(a, U.s()), 0};
    for (Element e : F.fq_basis())
      if (f.eval(F.mul(a, e)) != F.mul(phi.d, f.eval(e)))
        throw std::runtime_error("stabilizer element fails the image check");
    G.push_back(phi);
  }
  return G;
}

std::vector<SemilinearMap2> automorphism_group_bruteforce(const SubspaceU& U) {
  const FieldCtx& F = U.field();
  const Element N = static_cast<Element>(F.size());
  if (N > kBruteCap) throw std::invalid_argument("field too large for exhaustive stabilizer scan");
  Membership in(U);
  auto vecs = U.basis_vectors();
  std::vector<SemilinearMap2> G;
  for (Element a = 0; a < N; ++a)
    for (Element b = 0; b < N; ++b)
      for (Element c = 0; c < N; ++c)
        for (Element d = 0; d < N; ++d) {
          if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) continue;
          bool ok = true;
          for (auto [u, v] : vecs) {
            if (!in.contains(F.add(F.mul(a, u), F.mul(b, v)),
                             F.add(F.mul(c, u), F.mul(d, v)))) {
              ok = false;
              break;
            }
          }
          if (ok) G.push_back(SemilinearMap2{a, b, c, d, 0});
        }
  return G;
}

GroupOrderReport distinguish_by_group_order(const SubspaceU& U) {
  if (U.form() != SubspaceU::Form::Parametric)
    throw std::invalid_argument("distinguisher needs a parametric subspace");
  const FieldCtx& F = U.field();
  if (F.n() <= 2)
    throw std::invalid_argument("group orders coincide with the twisted shape when n = 2");
  GroupOrderReport R;
  R.order_monomial = F.size() - 1;
  R.order_twisted = static_cast<std::uint64_t>(F.q()) * F.q() - 1;
  R.order_family = automorphism_group(U).size();
  if (R.order_family != F.q_pow(F.n()) - 1)
    throw std::runtime_error("family stabilizer has unexpected order");
  R.family_is_new =
      R.order_family != R.order_monomial && R.order_family != R.order_twisted;
  return R;
}

bool semilinear_equivalent_bruteforce(const SubspaceU& U, const SubspaceU& W) {
  const FieldCtx& F = U.field();
  if (&F != &W.field()) throw std::invalid_argument("subspaces over different field contexts");
  const Element N = static_cast<Element>(F.size());
  if (N > kBruteCap) throw std::invalid_argument("field too large for exhaustive equivalence scan");
  Membership in(W);
  auto vecs = U.basis_vectors();
  const std::uint32_t D = F.degree();
  std::vector<std::pair<Element, Element>> tv(vecs.size());
  for (std::uint32_t e = 0; e < D; ++e) {
    const std::uint64_t pe = p_power(F, e);
    for (std::size_t i = 0; i < vecs.size(); ++i)
      tv[i] = {F.pow(vecs[i].first, pe), F.pow(vecs[i].second, pe)};
    for (Element a = 0; a < N; ++a)
      for (Element b = 0; b < N; ++b)
        for (Element c = 0; c < N; ++c)
          for (Element d = 0; d < N; ++d) {
            if (F.sub(F.mul(a, d), F.mul(b, c)) == 0) continue;
            bool ok = true;
            for (auto [u, v] : tv) {
              if (!in.contains(F.add(F.mul(a, u), F.mul(b, v)),
                               F.add(F.mul(c, u), F.mul(d, v)))) {
                ok = false;
                break;
              }
            }
            if (ok) return true;
          }
  }
  return false;
}

}  // namespace maxscat
