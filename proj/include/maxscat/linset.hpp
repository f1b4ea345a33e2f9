#pragma once

#include "maxscat/qpoly.hpp"

#include <map>
#include <optional>
#include <utility>

namespace maxscat {

// A point of the projective line PG(1, q^{2n}): <(0,1)> or <(1, v)>.
struct ProjPoint {
  bool infinity = false;
  Element v = 0;  // slope, meaningful only when !infinity

  static ProjPoint at_infinity() { return {true, 0}; }
  static ProjPoint slope(Element v) { return {false, v}; }

  bool operator==(const ProjPoint& o) const {
    return infinity == o.infinity && (infinity || v == o.v);
  }
  bool operator<(const ProjPoint& o) const {
    if (infinity != o.infinity) return o.infinity;  // finite slopes first
    return !infinity && v < o.v;
  }
};

// An F_q-subspace of V = F_{q^{2n}} x F_{q^{2n}} of rank 2n, held in one of
// three forms:
//   Parametric(b, s):  U_{b,s} = {(x, b x^{q^s} + x^{q^{s+n}})}
//   Graph(f):          U_f = {(x, f(x))} for a q-polynomial f
//   Basis:             2n explicit F_q-independent vectors of V
class SubspaceU {
 public:
  enum class Form { Parametric, Graph, Basis };

  // Requires b != 0, N_{q^{2n}/q^n}(b) != 1, 1 <= s <= 2n-1, gcd(s, n) = 1.
  // allow_degenerate skips the two conditions on b (for diagnostics); the
  // conditions on s always hold.
  static SubspaceU parametric(const FieldCtx& F, Element b, std::uint32_t s,
                              bool allow_degenerate = false);
  static SubspaceU graph(QPoly f);
  static SubspaceU from_basis(const FieldCtx& F, std::vector<std::pair<Element, Element>> vecs);

  Form form() const { return form_; }
  const FieldCtx& field() const { return *F_; }
  Element b() const;        // Parametric only
  std::uint32_t s() const;  // Parametric only
  // The q-polynomial whose graph this is (Parametric or Graph form).
  const QPoly& slope_map() const;
  // An F_q-basis of U as 2n vectors of V (computed for non-Basis forms).
  std::vector<std::pair<Element, Element>> basis_vectors() const;

 private:
  explicit SubspaceU(const FieldCtx& F) : F_(&F) {}

  Form form_ = Form::Basis;
  const FieldCtx* F_;
  Element b_ = 0;
  std::uint32_t s_ = 0;
  std::optional<QPoly> f_;
  std::vector<std::pair<Element, Element>> vecs_;
};

// weight -> number of points of the linear set L_U with that weight.
struct WeightDistribution {
  std::map<std::uint32_t, std::uint64_t> counts;

  std::uint64_t size() const {  // |L_U|
    std::uint64_t s = 0;
    for (auto& [w, c] : counts) s += c;
    return s;
  }
  std::uint32_t max_weight() const { return counts.empty() ? 0 : counts.rbegin()->first; }
};

// dim_{F_q}(U intersect <(1,v)> or <(0,1)>).  Kernel computation for graph
// forms, F_p linear algebra for Basis forms.
std::uint32_t point_weight(const SubspaceU& U, const ProjPoint& P);

WeightDistribution weight_distribution(const SubspaceU& U);

// True iff every point of L_U has weight 1, i.e. |L_U| = (q^{2n}-1)/(q-1).
bool is_scattered(const SubspaceU& U);
// Independent slow path for graph forms: rank of the slope matrix is >= 2n-1
// for every slope value.
bool is_scattered_dickson(const SubspaceU& U);

// Orthogonal complement under the non-degenerate alternating form
// ((x,y),(u,v)) -> Tr_{q^{2n}/q}(xv - yu).  Result is in Basis form.
SubspaceU dual_subspace(const SubspaceU& U);
// Parameters of the dual of U_{b,s}: (b^{q^{2n-s}}, 2n-s).
std::pair<Element, std::uint32_t> dual_parametric(const FieldCtx& F, Element b, std::uint32_t s);

// Equality of underlying vector sets (F_p row-space comparison).
bool same_vector_set(const SubspaceU& A, const SubspaceU& B);

struct PointOrbit {
  std::vector<ProjPoint> points;  // sorted by slope
  std::uint32_t weight = 0;
};

// Orbits of the points of L_{b,s} under the projectivities induced by
// diag(l, l^{q^s}), l in F_{q^n}^*; slope v maps to v * l^{q^s - 1}.
// Parametric form required.  Orbits are returned sorted by smallest slope.
std::vector<PointOrbit> orbit_decomposition(const SubspaceU& U);

}  // namespace maxscat
