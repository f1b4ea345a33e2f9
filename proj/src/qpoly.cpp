#include "maxscat/qpoly.hpp"

#include <stdexcept>

namespace maxscat {

QPoly::QPoly(const FieldCtx& F, std::vector<Element> coeffs) : F_(&F), a_(std::move(coeffs)) {
  if (a_.size() != F.m()) throw std::invalid_argument("coefficient count must equal 2n");
  for (Element c : a_)
    if (c >= F.size()) throw std::invalid_argument("coefficient out of range");
}

QPoly QPoly::zero(const FieldCtx& F) { return QPoly(F, std::vector<Element>(F.m(), 0)); }

QPoly QPoly::identity(const FieldCtx& F) {
  std::vector<Element> c(F.m(), 0);
  c[0] = 1;
  return QPoly(F, std::move(c));
}

QPoly QPoly::monomial(const FieldCtx& F, Element c, std::uint32_t k) {
  if (k >= F.m()) throw std::invalid_argument("q-degree out of range");
  std::vector<Element> v(F.m(), 0);
  v[k] = c;
  return QPoly(F, std::move(v));
}

Element QPoly::eval(Element x) const {
  Element acc = 0, xi = x;
  for (std::uint32_t i = 0; i < m(); ++i) {
    if (a_[i]) acc = F_->add(acc, F_->mul(a_[i], xi));
    xi = F_->frobenius_q(xi, 1);
  }
  return acc;
}

QPoly QPoly::add(const QPoly& g) const {
  std::vector<Element> c(m());
  for (std::uint32_t i = 0; i < m(); ++i) c[i] = F_->add(a_[i], g.a_[i]);
  return QPoly(*F_, std::move(c));
}

QPoly QPoly::sub(const QPoly& g) const {
  std::vector<Element> c(m());
  for (std::uint32_t i = 0; i < m(); ++i) c[i] = F_->sub(a_[i], g.a_[i]);
  return QPoly(*F_, std::move(c));
}

QPoly QPoly::scale(Element c) const {
  std::vector<Element> v(m());
  for (std::uint32_t i = 0; i < m(); ++i) v[i] = F_->mul(c, a_[i]);
  return QPoly(*F_, std::move(v));
}

QPoly QPoly::compose(const QPoly& g) const {
  const std::uint32_t mm = m();
  std::vector<Element> c(mm, 0);
  for (std::uint32_t i = 0; i < mm; ++i) {
    if (!a_[i]) continue;
    for (std::uint32_t j = 0; j < mm; ++j) {
      if (!g.a_[j]) continue;
      std::uint32_t k = (i + j) % mm;
      c[k] = F_->add(c[k], F_->mul(a_[i], F_->frobenius_q(g.a_[j], i)));
    }
  }
  return QPoly(*F_, std::move(c));
}

QPoly QPoly::adjoint() const {
  const std::uint32_t mm = m();
  std::vector<Element> c(mm);
  for (std::uint32_t i = 0; i < mm; ++i) c[i] = F_->frobenius_q(a_[(mm - i) % mm], i);
  return QPoly(*F_, std::move(c));
}

bool QPoly::is_zero() const {
  for (Element c : a_)
    if (c) return false;
  return true;
}

bool QPoly::is_scalar() const {
  for (std::uint32_t i = 1; i < m(); ++i)
    if (a_[i]) return false;
  return true;
}

FpMat QPoly::fp_matrix() const {
  const std::uint32_t d = F_->degree();
  FpMat M(F_->p(), d, d);
  std::vector<std::uint8_t> digits(d);
  Element basis = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    // i-th digit basis vector is the element with encoding p^i
    Element img = eval(basis);
    F_->core().decode(img, digits.data());
    for (std::uint32_t r = 0; r < d; ++r) M.at(r, i) = digits[r];
    basis = static_cast<Element>(static_cast<std::uint64_t>(basis) * F_->p());
  }
  return M;
}

std::uint32_t QPoly::kernel_dim() const {
  std::uint32_t r = fp_rank(fp_matrix());
  std::uint32_t k = F_->degree() - r;
  if (k % F_->h()) throw std::runtime_error("kernel is not F_q-closed");
  return k / F_->h();
}

DicksonMatrix dickson_matrix(const QPoly& f) {
  const FieldCtx& F = f.field();
  const std::uint32_t mm = f.m();
  DicksonMatrix D;
  D.m = mm;
  D.e.resize(static_cast<std::size_t>(mm) * mm);
  for (std::uint32_t i = 0; i < mm; ++i)
    for (std::uint32_t j = 0; j < mm; ++j)
      D.e[static_cast<std::size_t>(i) * mm + j] = F.frobenius_q(f.coeff((j + mm - i) % mm), i);
  return D;
}

Element field_det(const FieldCtx& F, std::vector<Element> a, std::uint32_t dim) {
  auto at = [&](std::uint32_t r, std::uint32_t c) -> Element& {
    return a[static_cast<std::size_t>(r) * dim + c];
  };
  Element det = 1;
  bool negate = false;
  for (std::uint32_t col = 0; col < dim; ++col) {
    std::uint32_t piv = col;
    while (piv < dim && at(piv, col) == 0) ++piv;
    if (piv == dim) return 0;
    if (piv != col) {
      for (std::uint32_t c = col; c < dim; ++c) std::swap(at(piv, c), at(col, c));
      negate = !negate;
    }
    Element pv = at(col, col);
    det = F.mul(det, pv);
    Element pvinv = F.inv(pv);
    for (std::uint32_t r = col + 1; r < dim; ++r) {
      Element f = at(r, col);
      if (!f) continue;
      Element ratio = F.mul(f, pvinv);
      for (std::uint32_t c = col; c < dim; ++c)
        at(r, c) = F.sub(at(r, c), F.mul(ratio, at(col, c)));
    }
  }
  return negate ? F.neg(det) : det;
}

std::uint32_t field_rank(const FieldCtx& F, std::vector<Element> a, std::uint32_t dim) {
  auto at = [&](std::uint32_t r, std::uint32_t c) -> Element& {
    return a[static_cast<std::size_t>(r) * dim + c];
  };
  std::uint32_t rank = 0;
  for (std::uint32_t col = 0; col < dim && rank < dim; ++col) {
    std::uint32_t piv = rank;
    while (piv < dim && at(piv, col) == 0) ++piv;
    if (piv == dim) continue;
    if (piv != rank)
      for (std::uint32_t c = col; c < dim; ++c) std::swap(at(piv, c), at(rank, c));
    Element pvinv = F.inv(at(rank, col));
    for (std::uint32_t r = rank + 1; r < dim; ++r) {
      Element f = at(r, col);
      if (!f) continue;
      Element ratio = F.mul(f, pvinv);
      for (std::uint32_t c = col; c < dim; ++c)
        at(r, c) = F.sub(at(r, c), F.mul(ratio, at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

std::uint32_t dickson_rank(const FieldCtx& F, const DicksonMatrix& D) {
  return field_rank(F, D.e, D.m);
}

Element dickson_minor(const FieldCtx& F, const DicksonMatrix& D, std::uint32_t i, std::uint32_t j) {
  if (i < 1 || i > D.m || j < 1 || j > D.m) throw std::invalid_argument("minor index out of range");
  const std::uint32_t mm = D.m - 1;
  std::vector<Element> sub(static_cast<std::size_t>(mm) * mm);
  std::uint32_t rr = 0;
  for (std::uint32_t r = 0; r < D.m; ++r) {
    if (r == i - 1) continue;
    std::uint32_t cc = 0;
    for (std::uint32_t c = 0; c < D.m; ++c) {
      if (c == j - 1) continue;
      sub[static_cast<std::size_t>(rr) * mm + cc] = D.at(r, c);
      ++cc;
    }
    ++rr;
  }
  return field_det(F, std::move(sub), mm);
}

QPoly slope_poly(const FieldCtx& F, Element mval, Element b, std::uint32_t s) {
  std::vector<Element> c(F.m(), 0);
  c[0] = F.add(c[0], mval);
  c[s % F.m()] = F.add(c[s % F.m()], b);
  c[(s + F.n()) % F.m()] = F.add(c[(s + F.n()) % F.m()], 1);
  return QPoly(F, std::move(c));
}

namespace {

// prod over es of x^{q^e}
Element qprod(const FieldCtx& F, Element x, std::initializer_list<int> es) {
  Element r = 1;
  for (int e : es) r = F.mul(r, F.frobenius_q(x, e));
  return r;
}

}  // namespace

Element minor_m6_r6c1(const FieldCtx& F, Element mval, Element b) {
  Element t = qprod(F, b, {2});
  t = F.sub(t, qprod(F, b, {0, 2, 3}));
  t = F.sub(t, qprod(F, b, {1, 2, 4}));
  t = F.add(t, qprod(F, b, {0, 1, 2, 3, 4}));
  t = F.sub(t, F.mul(qprod(F, b, {4}), qprod(F, mval, {1, 2, 3})));
  t = F.sub(t, F.mul(b, qprod(F, mval, {2, 3, 4})));
  return t;
}

Element minor_m6_r6c5(const FieldCtx& F, Element mval, Element b) {
  Element t = F.neg(F.mul(qprod(F, b, {2}), mval));
  t = F.add(t, F.mul(qprod(F, b, {1, 2, 4}), mval));
  t = F.sub(t, F.mul(b, qprod(F, mval, {3})));
  t = F.add(t, F.mul(qprod(F, b, {0, 1, 4}), qprod(F, mval, {3})));
  t = F.add(t, F.mul(qprod(F, b, {4}), qprod(F, mval, {0, 1, 2, 3})));
  return t;
}

Element minor_m8_r8c2(const FieldCtx& F, Element mval, Element b) {
  Element u = F.sub(qprod(F, b, {0, 4}), 1);
  Element t1 = F.mul(qprod(F, u, {1, 2}),
                     F.add(F.mul(qprod(F, b, {3, 4}), mval), F.frobenius_q(mval, 4)));
  Element t2 = F.mul(qprod(F, mval, {0, 3, 4, 5}),
                     F.add(F.mul(qprod(F, b, {6}), F.frobenius_q(mval, 2)),
                           F.mul(qprod(F, b, {1}), F.frobenius_q(mval, 6))));
  return F.add(t1, t2);
}

Element central_det_m8(const FieldCtx& F, Element mval, Element b) {
  return F.mul(F.sub(qprod(F, b, {1, 5}), 1), qprod(F, mval, {3, 4}));
}

}  // namespace maxscat
