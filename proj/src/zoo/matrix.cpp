#include "picky/zoo/matrix.hpp"

#include <algorithm>

#include "picky/errors.hpp"
#include "picky/util.hpp"

namespace picky::zoo {

using nlohmann::json;

Matrix Matrix::identity(unsigned n) { return scalar(n, 1); }

Matrix Matrix::scalar(unsigned n, Elt c) {
  Matrix m{n, std::vector<Elt>(n * n, 0)};
  for (unsigned i = 0; i < n; ++i)
    m.at(i, i) = c;
  return m;
}

Matrix mul(const FiniteField& f, const Matrix& a, const Matrix& b) {
  const unsigned n = a.n;
  Matrix c{n, std::vector<Elt>(n * n, 0)};
  for (unsigned i = 0; i < n; ++i)
    for (unsigned k = 0; k < n; ++k) {
      const Elt x = a.at(i, k);
      if (x == 0)
        continue;
      for (unsigned j = 0; j < n; ++j)
        c.at(i, j) = f.add(c.at(i, j), f.mul(x, b.at(k, j)));
    }
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t = a;
  for (unsigned i = 0; i < a.n; ++i)
    for (unsigned j = 0; j < a.n; ++j)
      t.at(j, i) = a.at(i, j);
  return t;
}

Matrix frobenius(const FiniteField& f, const Matrix& a, std::uint64_t r) {
  Matrix b = a;
  for (auto& x : b.e)
    x = f.pow(x, r);
  return b;
}

Elt det(const FiniteField& f, Matrix a) {
  const unsigned n = a.n;
  Elt d = 1;
  for (unsigned c = 0; c < n; ++c) {
    unsigned piv = c;
    while (piv < n && a.at(piv, c) == 0)
      ++piv;
    if (piv == n)
      return 0;
    if (piv != c) {
      for (unsigned j = 0; j < n; ++j)
        std::swap(a.at(piv, j), a.at(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, a.at(c, c));
    const Elt inv = f.inv(a.at(c, c));
    for (unsigned i = c + 1; i < n; ++i) {
      const Elt t = f.mul(a.at(i, c), inv);
      if (t == 0)
        continue;
      for (unsigned j = c; j < n; ++j)
        a.at(i, j) = f.sub(a.at(i, j), f.mul(t, a.at(c, j)));
    }
  }
  return d;
}

namespace {

// Row reduction in place; returns the rank.
unsigned reduce(const FiniteField& f, std::vector<Vector>& rows, std::vector<Vector>* follow) {
  if (rows.empty())
    return 0;
  const std::size_t cols = rows[0].size();
  unsigned r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[r]);
    if (follow)
      std::swap((*follow)[piv], (*follow)[r]);
    const Elt inv = f.inv(rows[r][c]);
    for (auto& x : rows[r])
      x = f.mul(x, inv);
    if (follow)
      for (auto& x : (*follow)[r])
        x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      const Elt t = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(t, rows[r][j]));
      if (follow)
        for (std::size_t j = 0; j < (*follow)[i].size(); ++j)
          (*follow)[i][j] = f.sub((*follow)[i][j], f.mul(t, (*follow)[r][j]));
    }
    ++r;
  }
  return r;
}

Matrix sub_identity(const FiniteField& f, const Matrix& u) {
  Matrix m = u;
  for (unsigned i = 0; i < u.n; ++i)
    m.at(i, i) = f.sub(m.at(i, i), 1);
  return m;
}

std::vector<Vector> rows_of(const Matrix& m) {
  std::vector<Vector> rows(m.n);
  for (unsigned i = 0; i < m.n; ++i)
    rows[i].assign(m.e.begin() + i * m.n, m.e.begin() + (i + 1) * m.n);
  return rows;
}

} // namespace

unsigned rank(const FiniteField& f, std::vector<Vector> rows) {
  return reduce(f, rows, nullptr);
}

Vector apply(const FiniteField& f, const Vector& v, const Matrix& m) {
  Vector w(m.n, 0);
  for (unsigned i = 0; i < m.n; ++i) {
    if (v[i] == 0)
      continue;
    for (unsigned j = 0; j < m.n; ++j)
      w[j] = f.add(w[j], f.mul(v[i], m.at(i, j)));
  }
  return w;
}

Matrix solve_basis(const FiniteField& f, const std::vector<Vector>& rows,
                   const std::vector<Vector>& images) {
  // B M = B'  =>  M = B^-1 B'
  std::vector<Vector> b = rows, follow = images;
  const unsigned n = static_cast<unsigned>(rows.size());
  if (reduce(f, b, &follow) != n)
    throw PreconditionError("solve_basis: rows are not a basis");
  Matrix m{n, std::vector<Elt>(n * n)};
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      m.at(i, j) = follow[i][j];
  return m;
}

std::vector<unsigned> jordan_type(const FiniteField& f, const Matrix& u) {
  const unsigned n = u.n;
  const Matrix nil = sub_identity(f, u);
  std::vector<unsigned> r{n};
  Matrix power = Matrix::identity(n);
  for (unsigned k = 1; k <= n + 1; ++k) {
    power = mul(f, power, nil);
    r.push_back(rank(f, rows_of(power)));
  }
  if (r.back() != 0)
    throw PreconditionError("jordan_type: matrix is not unipotent");
  std::vector<unsigned> blocks;
  for (unsigned k = 1; k <= n; ++k) {
    const unsigned at_least = r[k - 1] - r[k];
    const unsigned at_least_next = r[k] - r[k + 1];
    for (unsigned c = 0; c < at_least - at_least_next; ++c)
      blocks.push_back(k);
  }
  std::sort(blocks.rbegin(), blocks.rend());
  return blocks;
}

std::string form_name(FormKind k) {
  switch (k) {
  case FormKind::none:
    return "none";
  case FormKind::alternating:
    return "alternating";
  case FormKind::hermitian:
    return "hermitian";
  case FormKind::symmetric:
    return "symmetric";
  }
  return "?";
}

FormKind parse_form(const std::string& s) {
  for (FormKind k : {FormKind::none, FormKind::alternating, FormKind::hermitian,
                     FormKind::symmetric})
    if (form_name(k) == s)
      return k;
  throw InputError("unknown form kind '" + s + "'");
}

std::string family_name(Family f) {
  switch (f) {
  case Family::GL:
    return "GL";
  case Family::SL:
    return "SL";
  case Family::SU:
    return "SU";
  case Family::Sp:
    return "Sp";
  case Family::SO:
    return "SO";
  case Family::SOplus:
    return "SOplus";
  case Family::SOminus:
    return "SOminus";
  case Family::Sz:
    return "Sz";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  for (Family f : {Family::GL, Family::SL, Family::SU, Family::Sp, Family::SO,
                   Family::SOplus, Family::SOminus, Family::Sz})
    if (family_name(f) == s)
      return f;
  throw InputError("unknown matrix family '" + s + "'");
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i)
    r = checked_mul(r, b);
  return r;
}

} // namespace

std::uint64_t classical_order(Family f, unsigned n, std::uint64_t q) {
  auto bad = [&] {
    return InputError("no classical group " + family_name(f) + "(" + std::to_string(n) +
                      "," + std::to_string(q) + ")");
  };
  if (n == 0 || q < 2)
    throw bad();
  std::uint64_t o = 1;
  switch (f) {
  case Family::GL:
  case Family::SL:
    o = ipow(q, n * (n - 1) / 2);
    for (unsigned i = 1; i <= n; ++i)
      o = checked_mul(o, ipow(q, i) - 1);
    return f == Family::SL ? o / (q - 1) : o;
  case Family::SU:
    o = ipow(q, n * (n - 1) / 2);
    for (unsigned i = 2; i <= n; ++i)
      o = checked_mul(o, i % 2 ? ipow(q, i) + 1 : ipow(q, i) - 1);
    return o;
  case Family::Sp: {
    if (n % 2)
      throw bad();
    const unsigned m = n / 2;
    o = ipow(q, m * m);
    for (unsigned i = 1; i <= m; ++i)
      o = checked_mul(o, ipow(q, 2 * i) - 1);
    return o;
  }
  case Family::SO: {
    if (n % 2 == 0 || q % 2 == 0)
      throw bad();
    const unsigned m = n / 2;
    o = ipow(q, m * m);
    for (unsigned i = 1; i <= m; ++i)
      o = checked_mul(o, ipow(q, 2 * i) - 1);
    return o;
  }
  case Family::SOplus:
  case Family::SOminus: {
    if (n % 2 || n < 2 || q % 2 == 0)
      throw bad();
    const unsigned m = n / 2;
    o = ipow(q, m * (m - 1));
    o = checked_mul(o, f == Family::SOplus ? ipow(q, m) - 1 : ipow(q, m) + 1);
    for (unsigned i = 1; i < m; ++i)
      o = checked_mul(o, ipow(q, 2 * i) - 1);
    return o;
  }
  case Family::Sz: {
    if (n != 4 || q < 8 || (q & (q - 1)) || valuation(q, 2) % 2 == 0)
      throw bad();
    return checked_mul(checked_mul(q * q, q * q + 1), q - 1);
  }
  }
  throw bad();
}

std::uint64_t family_field_order(Family f, std::uint64_t q) {
  return f == Family::SU ? q * q : q;
}

namespace {

FormKind expected_form(Family f) {
  switch (f) {
  case Family::GL:
  case Family::SL:
    return FormKind::none;
  case Family::SU:
    return FormKind::hermitian;
  case Family::Sp:
  case Family::Sz:
    return FormKind::alternating;
  default:
    return FormKind::symmetric;
  }
}

} // namespace

bool MatrixGroup::preserves_form(const Matrix& m) const {
  switch (form_kind) {
  case FormKind::none:
    return true;
  case FormKind::alternating:
  case FormKind::symmetric:
    return mul(field, mul(field, m, form), transpose(m)) == form;
  case FormKind::hermitian:
    return mul(field, mul(field, m, form), transpose(frobenius(field, m, q))) == form;
  }
  return false;
}

void MatrixGroup::validate() const {
  auto fail = [&](const std::string& what) {
    throw InternalInconsistency("matrix group " + name + ": " + what);
  };
  if (field.order() != family_field_order(family, q))
    fail("field order does not match the family");
  if (form_kind != expected_form(family))
    fail("form kind " + form_name(form_kind) + " does not match the family");
  if (form_kind != FormKind::none) {
    if (form.n != n)
      fail("form has the wrong size");
    if (det(field, form) == 0)
      fail("form is degenerate");
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = 0; j < n; ++j) {
        const Elt a = form.at(i, j), b = form.at(j, i);
        if (form_kind == FormKind::alternating && (a != field.neg(b) || (i == j && a != 0)))
          fail("form is not alternating");
        if (form_kind == FormKind::symmetric && a != b)
          fail("form is not symmetric");
        if (form_kind == FormKind::hermitian && a != field.pow(b, q))
          fail("form is not hermitian");
      }
  }
  if (generators.empty())
    fail("no generators");
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Matrix& m = generators[i];
    const std::string gi = "generator " + std::to_string(i);
    if (m.n != n || m.e.size() != std::size_t(n) * n)
      fail(gi + " has the wrong size");
    for (Elt x : m.e)
      if (x >= field.order())
        fail(gi + " has an entry outside the field");
    const Elt d = det(field, m);
    if (family == Family::GL ? d == 0 : d != 1)
      fail(gi + " has the wrong determinant");
    if (!preserves_form(m))
      fail(gi + " does not preserve the form");
  }
  if (expected_order != classical_order(family, n, q))
    fail("expected order " + std::to_string(expected_order) +
         " differs from the order formula");
}

std::vector<Elt> MatrixGroup::central_scalars() const {
  std::vector<Elt> out;
  for (Elt c = 1; c < field.order(); ++c) {
    if (family != Family::GL && field.pow(c, n) != 1)
      continue;
    if ((form_kind == FormKind::alternating || form_kind == FormKind::symmetric) &&
        field.mul(c, c) != 1)
      continue;
    if (form_kind == FormKind::hermitian && field.pow(c, q + 1) != 1)
      continue;
    out.push_back(c);
  }
  return out;
}

json MatrixGroup::to_json() const {
  json gens = json::array();
  for (const Matrix& m : generators)
    gens.push_back(m.e);
  json j{{"schema_version", 1},
         {"name", name},
         {"family", family_name(family)},
         {"n", n},
         {"q", q},
         {"field", {{"order", field.order()}, {"modulus", field.modulus()}}},
         {"form", {{"kind", form_name(form_kind)}}},
         {"generators", gens},
         {"expected_order", expected_order},
         {"provenance", provenance}};
  if (form_kind != FormKind::none)
    j["form"]["matrix"] = form.e;
  return j;
}

MatrixGroup MatrixGroup::from_json(const json& j) {
  try {
    if (j.at("schema_version") != 1)
      throw InputError("matrix group: unsupported schema version");
    MatrixGroup mg;
    mg.name = j.at("name").get<std::string>();
    mg.family = parse_family(j.at("family").get<std::string>());
    mg.n = j.at("n").get<unsigned>();
    mg.q = j.at("q").get<std::uint64_t>();
    mg.field = FiniteField(j.at("field").at("order").get<std::uint64_t>());
    if (j.at("field").at("modulus").get<std::vector<std::uint32_t>>() != mg.field.modulus())
      throw InternalInconsistency("matrix group " + mg.name +
                                  ": field modulus differs from the shipped table");
    mg.form_kind = parse_form(j.at("form").at("kind").get<std::string>());
    if (mg.form_kind != FormKind::none)
      mg.form = Matrix{mg.n, j.at("form").at("matrix").get<std::vector<Elt>>()};
    for (const auto& g : j.at("generators"))
      mg.generators.push_back(Matrix{mg.n, g.get<std::vector<Elt>>()});
    mg.expected_order = j.at("expected_order").get<std::uint64_t>();
    mg.provenance = j.at("provenance").get<std::string>();
    mg.validate();
    return mg;
  } catch (const json::exception& e) {
    throw InputError(std::string("matrix group: malformed JSON: ") + e.what());
  }
}

// ------------------------------------------------------------------ actions

MatrixAction::MatrixAction(const MatrixGroup& mg, bool projective, std::optional<Vector> seed,
                           std::uint64_t orbit_bound)
    : mg_(mg), projective_(projective) {
  const FiniteField& f = mg_.field;
  {
    std::uint64_t span = 1;
    for (unsigned i = 0; i < mg_.n; ++i)
      span = checked_mul(span, f.order());
  }
  Vector s = seed ? *seed : Vector(mg_.n, 0);
  if (!seed)
    s[0] = 1;
  if (s.size() != mg_.n || std::all_of(s.begin(), s.end(), [](Elt x) { return x == 0; }))
    throw InputError("matrix action: seed must be a nonzero vector of length n");
  s = normalise(std::move(s));
  points_.push_back(s);
  index_[key(s)] = 0;
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (const Matrix& m : mg_.generators) {
      Vector w = normalise(apply(f, points_[i], m));
      const std::uint64_t k = key(w);
      if (index_.count(k))
        continue;
      if (points_.size() >= orbit_bound)
        throw BoundExceeded("matrix action: orbit exceeds " + std::to_string(orbit_bound) +
                            " points");
      index_[k] = points_.size();
      points_.push_back(std::move(w));
    }
  std::vector<Perm> gens;
  for (const Matrix& m : mg_.generators)
    gens.push_back(perm_of(m));
  group_ = Group::generated(points_.size(), std::move(gens));
  if (!projective_) {
    std::vector<Vector> chosen;
    for (std::size_t i = 0; i < points_.size() && chosen.size() < mg_.n; ++i) {
      chosen.push_back(points_[i]);
      if (rank(f, chosen) < chosen.size())
        chosen.pop_back();
      else
        basis_points_.push_back(i);
    }
  }
}

std::uint64_t MatrixAction::key(const Vector& v) const {
  std::uint64_t k = 0;
  for (unsigned i = mg_.n; i-- > 0;)
    k = k * mg_.field.order() + v[i];
  return k;
}

Vector MatrixAction::normalise(Vector v) const {
  if (!projective_)
    return v;
  for (Elt x : v)
    if (x != 0) {
      const Elt inv = mg_.field.inv(x);
      for (auto& y : v)
        y = mg_.field.mul(y, inv);
      break;
    }
  return v;
}

std::size_t MatrixAction::point_of(const Vector& v) const {
  auto it = index_.find(key(normalise(v)));
  return it == index_.end() ? npos : it->second;
}

Perm MatrixAction::perm_of(const Matrix& m) const {
  std::vector<Point> img(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const std::size_t j = point_of(apply(mg_.field, points_[i], m));
    if (j == npos)
      throw PreconditionError("matrix action: matrix does not preserve the orbit");
    img[i] = static_cast<Point>(j);
  }
  return Perm(std::move(img));
}

Matrix MatrixAction::matrix_of(const Perm& x) const {
  if (projective_ || basis_points_.size() != mg_.n)
    throw PreconditionError("matrix_of needs a vector action whose orbit spans");
  std::vector<Vector> rows, images;
  for (std::size_t i : basis_points_) {
    rows.push_back(points_[i]);
    images.push_back(points_[x[i]]);
  }
  return solve_basis(mg_.field, rows, images);
}

MatrixAction vector_action(const MatrixGroup& mg) {
  MatrixAction a(mg, false);
  if (a.matrix_of(Perm::identity(a.degree())) != Matrix::identity(mg.n))
    throw InternalInconsistency("vector action: basis recovery failed");
  if (a.group().order() != mg.expected_order)
    throw InternalInconsistency("matrix group " + mg.name + ": generated order " +
                                std::to_string(a.group().order()) + " != expected " +
                                std::to_string(mg.expected_order));
  return a;
}

MatrixAction projective_action(const MatrixGroup& mg) {
  MatrixAction a(mg, true);
  const std::uint64_t z = mg.central_scalars().size();
  if (mg.expected_order % z != 0 || a.group().order() != mg.expected_order / z)
    throw InternalInconsistency("matrix group " + mg.name + ": projective image has order " +
                                std::to_string(a.group().order()) + ", expected " +
                                std::to_string(mg.expected_order / z));
  return a;
}

Perm project_to(const MatrixAction& vec, const MatrixAction& proj, const Perm& x) {
  return proj.perm_of(vec.matrix_of(x));
}

std::vector<std::size_t> unipotent_classes_of_type(const MatrixAction& vec,
                                                   const ClassData& cd_vec,
                                                   const std::vector<unsigned>& type) {
  const std::uint64_t p = vec.matrix_group().field.characteristic();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < cd_vec.size(); ++k) {
    const std::uint64_t o = cd_vec[k].element_order;
    if (p_part(o, p) != o)
      continue;
    if (jordan_type(vec.matrix_group().field, vec.matrix_of(cd_vec[k].rep)) == type)
      out.push_back(k);
  }
  return out;
}

} // namespace picky::zoo
