#pragma once

#include "maxscat/linset.hpp"

namespace maxscat {

// Invertible semilinear map of V = F_{q^{2n}}^2: (x, y) -> M * (x^{p^e}, y^{p^e}),
// matrix M = [[a, b], [c, d]] applied after the entrywise Frobenius.
struct SemilinearMap2 {
  Element a = 1, b = 0, c = 0, d = 1;
  std::uint32_t frob_exp = 0;  // e in x -> x^{p^e}
};

std::pair<Element, Element> apply_map(const FieldCtx& F, const SemilinearMap2& phi, Element x,
                                      Element y);
// Image subspace, returned in Basis form.  Requires an invertible matrix.
SubspaceU apply_map(const FieldCtx& F, const SemilinearMap2& phi, const SubspaceU& U);

struct Normalization {
  Element b = 0;
  std::uint32_t s = 0;
  SemilinearMap2 phi;  // phi(U_f) = U_{b,s}
};

// Rewrites U_f with f = alpha x^{q^s} + beta x^{q^{s+n}} in the one-parameter
// form U_{b,s}, where N_{q^{2n}/q^n}(b) = N(alpha)/N(beta), via an explicit
// diagonal map (verified internally on a spanning set).  Requires
// alpha*beta != 0 and N(alpha) != N(beta).
Normalization normalize_to_parametric(const FieldCtx& F, Element alpha, Element beta,
                                      std::uint32_t s);

// Norm-orbit criterion for GammaL(2, q^{2n})-equivalence of U_{b,s} and
// U_{b2,s2}: equivalent iff s = s2 and N(b2) = N(b)^sigma, or s + s2 = n and
// N(b2) N(b)^sigma = 1, with sigma ranging over the p-power automorphisms of
// F_{q^n}.  Requires 1 <= s, s2 < n (reduce larger s through duality first).
bool norm_orbit_equivalent(const FieldCtx& F, Element b, std::uint32_t s, Element b2,
                           std::uint32_t s2);
// Same criterion for any admissible s: arguments with s > n are first replaced
// by the dual parameters (b^{q^{2n-s}}, 2n-s).
bool family_equivalent(const FieldCtx& F, Element b, std::uint32_t s, Element b2,
                       std::uint32_t s2);

// Smallest element of {N_{q^{2n}/q^n}(b)^{p^i}}: a canonical label for the
// equivalence class of U_{b,s} at fixed s.
Element norm_class_label(const FieldCtx& F, Element b);

// The explicit map phi(x, y) = (alpha y, beta x) carrying U_{b,s} onto its
// orthogonal complement U_{b^{q^{2n-s}}, 2n-s} (verified internally).
SemilinearMap2 duality_equivalence_map(const FieldCtx& F, Element b, std::uint32_t s);

// The two known maximum scattered shapes on PG(1, q^{2n}):
//   {(x, x^{q^s})} with gcd(s, 2n) = 1
SubspaceU monomial_subspace(const FieldCtx& F, std::uint32_t s);
//   {(x, delta x^{q^s} + x^{q^{2n-s}})} with gcd(s, 2n) = 1, delta != 0 and
//   N_{q^{2n}/q}(delta) != 1; allow_any_delta relaxes the norm condition
//   (the subspace and its stabilizer exist for every nonzero delta).
SubspaceU twisted_monomial_subspace(const FieldCtx& F, Element delta, std::uint32_t s,
                                    bool allow_any_delta = false);

// Closed-form linear automorphism group of a parametric subspace:
// diag(a, a^{q^s}) for a in F_{q^n}^*, each element verified to stabilize U.
std::vector<SemilinearMap2> automorphism_group(const SubspaceU& U);
// Exhaustive GL(2, q^{2n}) stabilizer scan; requires q^{2n} <= 256.
std::vector<SemilinearMap2> automorphism_group_bruteforce(const SubspaceU& U);

struct GroupOrderReport {
  std::uint64_t order_monomial = 0;  // q^{2n} - 1
  std::uint64_t order_twisted = 0;   // q^2 - 1
  std::uint64_t order_family = 0;    // q^n - 1, confirmed by explicit count
  bool family_is_new = false;        // family order differs from both others
};

// Group-order distinguisher for a parametric subspace; requires n > 2 (at
// n = 2 the family collapses into the twisted shape and orders coincide).
GroupOrderReport distinguish_by_group_order(const SubspaceU& U);

// True iff some invertible semilinear map sends U onto W.  Enumerates all of
// GammaL(2, q^{2n}); requires q^{2n} <= 256 and a shared field context.
bool semilinear_equivalent_bruteforce(const SubspaceU& U, const SubspaceU& W);

}  // namespace maxscat
