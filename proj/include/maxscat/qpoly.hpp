#pragma once

#include "maxscat/field_tower.hpp"
#include "maxscat/fp_linalg.hpp"

namespace maxscat {

// Linearized polynomial f(x) = sum_{i<m} a_i x^{q^i} over F_{q^{2n}}, m = 2n.
// These are exactly the F_q-linear maps of the big field.
class QPoly {
 public:
  QPoly(const FieldCtx& F, std::vector<Element> coeffs);

  static QPoly zero(const FieldCtx& F);
  static QPoly identity(const FieldCtx& F);
  static QPoly monomial(const FieldCtx& F, Element c, std::uint32_t k);  // c x^{q^k}

  const FieldCtx& field() const { return *F_; }
  std::uint32_t m() const { return static_cast<std::uint32_t>(a_.size()); }
  const std::vector<Element>& coeffs() const { return a_; }
  Element coeff(std::uint32_t i) const { return a_[i]; }

  Element eval(Element x) const;
  QPoly add(const QPoly& g) const;
  QPoly sub(const QPoly& g) const;
  QPoly scale(Element c) const;              // x -> c * f(x)
  QPoly compose(const QPoly& g) const;       // x -> f(g(x))
  // Adjoint w.r.t. the bilinear form Tr(xy): coefficients
  // a-hat_i = a_{(m-i) mod m}^{q^i}.  Tr(f(x) y) = Tr(x fhat(y)).
  QPoly adjoint() const;

  bool is_zero() const;
  bool is_scalar() const;  // a_i = 0 for all i >= 1

  // dim_{F_q} ker f, computed from the F_p matrix of f (never by root listing).
  std::uint32_t kernel_dim() const;
  std::uint32_t rank() const { return m() - kernel_dim(); }
  // F_p matrix of f on the digit basis (degree x degree).
  FpMat fp_matrix() const;

  bool operator==(const QPoly& g) const { return a_ == g.a_; }

 private:
  const FieldCtx* F_;
  std::vector<Element> a_;
};

// m x m matrix over F_{q^m} with entry (i,j) = a_{(j-i) mod m}^{q^i}.
// Its rank over F_{q^m} equals the F_q-rank of f.
struct DicksonMatrix {
  std::uint32_t m = 0;
  std::vector<Element> e;  // row-major
  Element at(std::uint32_t i, std::uint32_t j) const { return e[static_cast<std::size_t>(i) * m + j]; }
};

DicksonMatrix dickson_matrix(const QPoly& f);

// Determinant / rank of a square matrix over the big field (Gaussian
// elimination with exact division).
Element field_det(const FieldCtx& F, std::vector<Element> mat, std::uint32_t dim);
std::uint32_t field_rank(const FieldCtx& F, std::vector<Element> mat, std::uint32_t dim);

std::uint32_t dickson_rank(const FieldCtx& F, const DicksonMatrix& D);
// Minor: determinant after deleting row i and column j (1-indexed).
Element dickson_minor(const FieldCtx& F, const DicksonMatrix& D, std::uint32_t i, std::uint32_t j);

// Closed forms for minors of the Dickson matrix of the slope polynomial
// r(x) = mval*x + b*x^q + x^{q^{n+1}} (the s = 1 family).
// m = 6 (n = 3): minors (6,1) and (6,5); m = 8 (n = 4): minor (8,2) and the
// determinant of the submatrix keeping rows 1..6 and columns 3..8.
Element minor_m6_r6c1(const FieldCtx& F, Element mval, Element b);
Element minor_m6_r6c5(const FieldCtx& F, Element mval, Element b);
Element minor_m8_r8c2(const FieldCtx& F, Element mval, Element b);
Element central_det_m8(const FieldCtx& F, Element mval, Element b);

// The slope polynomial itself: mval*x + b*x^{q^s} + x^{q^{s+n}}.
QPoly slope_poly(const FieldCtx& F, Element mval, Element b, std::uint32_t s);

}  // namespace maxscat
