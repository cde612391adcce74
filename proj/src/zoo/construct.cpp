#include "picky/zoo/construct.hpp"

#include <unordered_map>

#include "picky/errors.hpp"
#include "picky/util.hpp"

namespace picky::zoo {

std::string matrix_group_name(Family f, unsigned n, std::uint64_t q) {
  if (f == Family::Sz)
    return "Sz" + std::to_string(q);
  return family_name(f) + std::to_string(n) + "_" + std::to_string(q);
}

namespace {

std::vector<Vector> all_vectors(const FiniteField& f, unsigned n) {
  std::vector<Vector> out;
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i)
    total = checked_mul(total, f.order());
  for (std::uint64_t k = 1; k < total; ++k) {
    Vector v(n);
    std::uint64_t r = k;
    for (unsigned i = 0; i < n; ++i, r /= f.order())
      v[i] = static_cast<Elt>(r % f.order());
    out.push_back(std::move(v));
  }
  return out;
}

bool leading_one(const Vector& v) {
  for (Elt x : v)
    if (x != 0)
      return x == 1;
  return false;
}

// v F w^T, with w replaced by its entrywise r-th power when r > 1.
Elt form_value(const FiniteField& f, const Matrix& form, const Vector& v, const Vector& w,
               std::uint64_t r = 1) {
  Elt s = 0;
  for (unsigned i = 0; i < form.n; ++i)
    for (unsigned j = 0; j < form.n; ++j)
      if (form.at(i, j) && v[i] && w[j])
        s = f.add(s, f.mul(f.mul(v[i], form.at(i, j)), r > 1 ? f.pow(w[j], r) : w[j]));
  return s;
}

// I + a (F c^T) u, where c is u or its conjugate.
Matrix rank_one_update(const FiniteField& f, const Matrix& form, const Vector& c,
                       const Vector& u, Elt a) {
  const unsigned n = form.n;
  Matrix m = Matrix::identity(n);
  for (unsigned i = 0; i < n; ++i) {
    Elt col = 0;
    for (unsigned j = 0; j < n; ++j)
      col = f.add(col, f.mul(form.at(i, j), c[j]));
    col = f.mul(col, a);
    if (col == 0)
      continue;
    for (unsigned j = 0; j < n; ++j)
      m.at(i, j) = f.add(m.at(i, j), f.mul(col, u[j]));
  }
  return m;
}

Matrix antidiagonal(unsigned n, const std::vector<Elt>& entries) {
  Matrix m{n, std::vector<Elt>(n * n, 0)};
  for (unsigned i = 0; i < n; ++i)
    m.at(i, n - 1 - i) = entries[i];
  return m;
}

// Greedy selection over a fixed permutation domain.
class Selector {
public:
  Selector(const FiniteField& f, std::vector<Vector> domain, std::uint64_t target)
      : f_(f), domain_(std::move(domain)), target_(target), builder_(domain_.size()) {
    for (std::size_t i = 0; i < domain_.size(); ++i)
      index_[key(domain_[i])] = i;
  }
  bool done() const { return builder_.order() == target_; }
  void offer(const Matrix& m) {
    if (done())
      return;
    std::vector<Point> img(domain_.size());
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      auto it = index_.find(key(apply(f_, domain_[i], m)));
      if (it == index_.end())
        throw InternalInconsistency("construction: candidate leaves the domain");
      img[i] = static_cast<Point>(it->second);
    }
    if (builder_.add(Perm(std::move(img))))
      chosen_.push_back(m);
  }
  const std::vector<Matrix>& chosen() const { return chosen_; }
  std::uint64_t order() const { return builder_.order(); }

private:
  std::uint64_t key(const Vector& v) const {
    std::uint64_t k = 0;
    for (Elt x : v)
      k = k * f_.order() + x;
    return k;
  }
  const FiniteField& f_;
  std::vector<Vector> domain_;
  std::uint64_t target_;
  SubgroupBuilder builder_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<Matrix> chosen_;
};

} // namespace

MatrixGroup construct_classical(Family fam, unsigned n, std::uint64_t q) {
  MatrixGroup mg;
  mg.family = fam;
  mg.n = n;
  mg.q = q;
  mg.name = matrix_group_name(fam, n, q);
  mg.field = FiniteField(family_field_order(fam, q));
  mg.expected_order = classical_order(fam, n, q);
  const FiniteField& f = mg.field;
  const Elt minus1 = f.neg(1);

  switch (fam) {
  case Family::GL:
  case Family::SL:
    mg.form_kind = FormKind::none;
    break;
  case Family::Sp: {
    std::vector<Elt> d(n);
    for (unsigned i = 0; i < n; ++i)
      d[i] = i < n / 2 ? 1 : minus1;
    mg.form_kind = FormKind::alternating;
    mg.form = antidiagonal(n, d);
    break;
  }
  case Family::SU:
  case Family::SO:
  case Family::SOplus:
    mg.form_kind = fam == Family::SU ? FormKind::hermitian : FormKind::symmetric;
    mg.form = antidiagonal(n, std::vector<Elt>(n, 1));
    break;
  case Family::SOminus: {
    // hyperbolic pairs around an anisotropic plane x^2 - nu y^2
    Elt nu = 0;
    for (Elt c = 2; c < f.order() && nu == 0; ++c)
      if (f.pow(c, (f.order() - 1) / 2) != 1)
        nu = c;
    mg.form_kind = FormKind::symmetric;
    mg.form = Matrix{n, std::vector<Elt>(n * n, 0)};
    const unsigned m = n / 2;
    for (unsigned i = 0; i < n; ++i)
      if (i != m - 1 && i != m)
        mg.form.at(i, n - 1 - i) = 1;
    mg.form.at(m - 1, m - 1) = 1;
    mg.form.at(m, m) = f.neg(nu);
    break;
  }
  case Family::Sz:
    mg.form_kind = FormKind::alternating;
    mg.form = antidiagonal(4, {1, 1, 1, 1});
    break;
  }

  std::vector<Vector> domain = all_vectors(f, n);
  if (fam == Family::SU || fam == Family::SO || fam == Family::SOplus ||
      fam == Family::SOminus) {
    std::vector<Vector> iso;
    for (auto& v : domain)
      if (form_value(f, mg.form, v, v, fam == Family::SU ? q : 1) == 0)
        iso.push_back(std::move(v));
    domain = std::move(iso);
  }
  Selector sel(f, domain, mg.expected_order);

  switch (fam) {
  case Family::GL:
  case Family::SL: {
    std::vector<Elt> basis;
    for (unsigned t = 0; t < f.degree(); ++t)
      basis.push_back(f.pow(f.generator(), t));
    if (fam == Family::GL) {
      Matrix d = Matrix::identity(n);
      d.at(0, 0) = f.generator();
      sel.offer(d);
    }
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j)
        if (i != j)
          for (Elt a : basis) {
            Matrix m = Matrix::identity(n);
            m.at(i, j) = a;
            sel.offer(m);
          }
    mg.provenance = "elementary transvections I + a E_ij with a in an F_p-basis of F_q";
    break;
  }
  case Family::Sp:
    for (const Vector& u : all_vectors(f, n))
      if (leading_one(u))
        for (Elt a = 1; a < f.order() && !sel.done(); ++a)
          sel.offer(rank_one_update(f, mg.form, u, u, a));
    mg.provenance = "symplectic transvections v -> v + a B(v,u) u, u in lexicographic order";
    break;
  case Family::SU: {
    std::vector<Elt> trace_zero;
    for (Elt a = 1; a < f.order(); ++a)
      if (f.add(a, f.pow(a, q)) == 0)
        trace_zero.push_back(a);
    for (const Vector& u : domain)
      if (leading_one(u))
        for (Elt a : trace_zero) {
          Vector ubar = u;
          for (auto& x : ubar)
            x = f.pow(x, q);
          sel.offer(rank_one_update(f, mg.form, ubar, u, a));
        }
    mg.provenance = "unitary transvections v -> v + a h(v,u) u, u isotropic, a + a^q = 0";
    break;
  }
  case Family::SO:
  case Family::SOplus:
  case Family::SOminus: {
    std::vector<Matrix> refl;
    for (const Vector& v : all_vectors(f, n)) {
      if (!leading_one(v))
        continue;
      const Elt b = form_value(f, mg.form, v, v);
      if (b == 0)
        continue;
      refl.push_back(rank_one_update(f, mg.form, v, v, f.neg(f.mul(2 % f.characteristic(), f.inv(b)))));
    }
    for (std::size_t i = 1; i < refl.size() && !sel.done(); ++i)
      sel.offer(mul(f, refl[0], refl[i]));
    mg.provenance = "products r_v0 r_v of orthogonal reflections, v anisotropic in lexicographic order";
    break;
  }
  case Family::Sz: {
    unsigned k = f.degree(); // q = 2^(2m+1), sigma: x -> x^(2^(m+1))
    const std::uint64_t sigma = std::uint64_t{1} << ((k + 1) / 2);
    auto sg = [&](Elt x) { return f.pow(x, sigma); };
    for (Elt a = 0; a < q; ++a)
      for (Elt b = 0; b < q; ++b) {
        Matrix m = Matrix::identity(4);
        m.at(1, 0) = a;
        m.at(2, 0) = b;
        m.at(2, 1) = sg(a);
        m.at(3, 0) = f.add(f.add(f.mul(f.mul(a, a), sg(a)), f.mul(a, b)), sg(b));
        m.at(3, 1) = f.add(f.mul(a, sg(a)), b);
        m.at(3, 2) = a;
        sel.offer(m);
      }
    sel.offer(antidiagonal(4, {1, 1, 1, 1}));
    mg.provenance = "Suzuki lower unitriangular matrices S(a,b) with sigma = x^(2^(m+1)) and the antidiagonal involution";
    break;
  }
  }
  if (!sel.done())
    throw InternalInconsistency("construction of " + mg.name + " stalled at order " +
                                std::to_string(sel.order()));
  mg.generators = sel.chosen();
  mg.validate();
  return mg;
}

} // namespace picky::zoo
