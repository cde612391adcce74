#include "picky/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "picky/errors.hpp"
#include "picky/util.hpp"

namespace picky {

using nlohmann::json;

namespace {

// ------------------------------------------------------------ arithmetic mod l

struct Field {
  std::uint64_t l;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % l; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + l - b) % l; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % l; }
  std::uint64_t inv(std::uint64_t a) const { return pow_mod(a, l - 2, l); }
  std::uint64_t neg(std::uint64_t a) const { return a ? l - a : 0; }
};

using Vec = std::vector<std::uint64_t>;
using Poly = std::vector<std::uint64_t>; // coefficients, lowest degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

Poly poly_rem(Poly a, const Poly& f, const Field& F) {
  trim(a);
  const std::uint64_t lead_inv = F.inv(f.back());
  while (a.size() >= f.size()) {
    const std::uint64_t c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i)
      a[shift + i] = F.sub(a[shift + i], F.mul(c, f[i]));
    trim(a);
  }
  return a;
}

Poly poly_div(Poly a, const Poly& f, const Field& F) {
  trim(a);
  if (a.size() < f.size())
    return {};
  Poly q(a.size() - f.size() + 1, 0);
  const std::uint64_t lead_inv = F.inv(f.back());
  while (a.size() >= f.size()) {
    const std::uint64_t c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - f.size();
    q[shift] = c;
    for (std::size_t i = 0; i < f.size(); ++i)
      a[shift + i] = F.sub(a[shift + i], F.mul(c, f[i]));
    trim(a);
  }
  return q;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, const Field& F) {
  if (a.empty() || b.empty())
    return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  return poly_rem(std::move(c), f, F);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, const Field& F) {
  Poly r{1};
  base = poly_rem(std::move(base), f, F);
  while (e) {
    if (e & 1)
      r = poly_mulmod(r, base, f, F);
    base = poly_mulmod(base, base, f, F);
    e >>= 1;
  }
  return poly_rem(std::move(r), f, F);
}

Poly poly_gcd(Poly a, Poly b, const Field& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t li = F.inv(a.back());
    for (auto& c : a)
      c = F.mul(c, li);
  }
  return a;
}

// Distinct roots of a product of linear factors with distinct roots.
void split_roots(const Poly& g, const Field& F, std::vector<std::uint64_t>& out) {
  if (g.size() <= 1)
    return;
  if (g.size() == 2) {
    out.push_back(F.mul(F.neg(g[0]), F.inv(g[1])));
    return;
  }
  for (std::uint64_t a = 1;; ++a) {
    Poly h = poly_powmod(Poly{a % F.l, 1}, (F.l - 1) / 2, g, F);
    if (h.empty())
      h = {0};
    h[0] = F.sub(h[0], 1);
    Poly d = poly_gcd(g, h, F);
    if (d.size() > 1 && d.size() < g.size()) {
      split_roots(d, F, out);
      split_roots(poly_div(g, d, F), F, out);
      return;
    }
    if (a > 4 * F.l)
      throw InternalInconsistency("character table: root splitting did not terminate");
  }
}

std::vector<std::uint64_t> distinct_roots(const Poly& f, const Field& F) {
  // gcd(f, x^l - x) keeps one copy of every root in F_l.
  Poly xl = poly_powmod(Poly{0, 1}, F.l, f, F);
  if (xl.size() < 2)
    xl.resize(2, 0);
  xl[1] = F.sub(xl[1], 1);
  std::vector<std::uint64_t> roots;
  split_roots(poly_gcd(f, xl, F), F, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Characteristic polynomial through a Hessenberg form.
Poly char_poly(std::vector<Vec> h, const Field& F) {
  const std::size_t n = h.size();
  for (std::size_t c = 0; c + 1 < n; ++c) {
    std::size_t piv = c + 1;
    while (piv < n && h[piv][c] == 0)
      ++piv;
    if (piv == n)
      continue;
    if (piv != c + 1) {
      std::swap(h[piv], h[c + 1]);
      for (auto& row : h)
        std::swap(row[piv], row[c + 1]);
    }
    const std::uint64_t pinv = F.inv(h[c + 1][c]);
    for (std::size_t k = c + 2; k < n; ++k) {
      const std::uint64_t t = F.mul(h[k][c], pinv);
      if (t == 0)
        continue;
      for (std::size_t j = 0; j < n; ++j)
        h[k][j] = F.sub(h[k][j], F.mul(t, h[c + 1][j]));
      for (std::size_t i = 0; i < n; ++i)
        h[i][c + 1] = F.add(h[i][c + 1], F.mul(t, h[i][k]));
    }
  }
  std::vector<Poly> p(n + 1);
  p[0] = {1};
  for (std::size_t m = 0; m < n; ++m) {
    Poly next(m + 2, 0);
    for (std::size_t i = 0; i < p[m].size(); ++i) {
      next[i + 1] = F.add(next[i + 1], p[m][i]);
      next[i] = F.sub(next[i], F.mul(h[m][m], p[m][i]));
    }
    std::uint64_t prod = 1;
    for (std::size_t i = m; i-- > 0;) {
      prod = F.mul(prod, h[i + 1][i]);
      if (prod == 0)
        break;
      const std::uint64_t c = F.mul(h[i][m], prod);
      for (std::size_t t = 0; t < p[i].size(); ++t)
        next[t] = F.sub(next[t], F.mul(c, p[i][t]));
    }
    p[m + 1] = std::move(next);
  }
  return p[n];
}

// Reduced row echelon form; returns the pivot column of each row.
std::vector<std::size_t> rref(std::vector<Vec>& rows, const Field& F) {
  std::vector<std::size_t> pivots;
  if (rows.empty())
    return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[r]);
    const std::uint64_t inv = F.inv(rows[r][c]);
    for (auto& v : rows[r])
      v = F.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0)
        continue;
      const std::uint64_t t = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(t, rows[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

// Kernel of a square matrix, as row vectors.
std::vector<Vec> kernel(std::vector<Vec> m, const Field& F) {
  const std::size_t n = m.size();
  std::vector<std::size_t> piv = rref(m, F);
  std::vector<bool> is_piv(n, false);
  for (std::size_t c : piv)
    is_piv[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free])
      continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = F.neg(m[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

std::uint64_t primitive_root(std::uint64_t l) {
  const auto qs = prime_divisors(l - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (std::uint64_t q : qs)
      if (pow_mod(g, (l - 1) / q, l) == 1) {
        ok = false;
        break;
      }
    if (ok)
      return g;
  }
}

struct Subspace {
  std::vector<Vec> basis; // RREF rows
  std::vector<std::size_t> pivots;
  std::size_t next_class;
};

// Exact accumulation of sums of products of cyclotomics with integer weights.
class Accumulator {
public:
  explicit Accumulator(std::uint64_t n) : n_(n), dense_(n) {}
  void clear() {
    for (auto& c : dense_)
      c = 0;
  }
  void add_product(const Cyclotomic& a, const Cyclotomic& b, std::uint64_t weight) {
    const std::uint64_t sa = n_ / a.conductor(), sb = n_ / b.conductor();
    const mpq_class w(std::to_string(weight));
    for (const auto& [ja, ca] : a.terms()) {
      const mpq_class wa = ca * w;
      for (const auto& [jb, cb] : b.terms())
        dense_[(ja * sa + jb * sb) % n_] += wa * cb;
    }
  }
  Cyclotomic value() const { return Cyclotomic::from_powers(n_, dense_); }

private:
  std::uint64_t n_;
  std::vector<mpq_class> dense_;
};

bool is_positive_integer(const Cyclotomic& c) {
  return c.is_integer() && c.rational() > 0;
}

Cyclotomic u64(std::uint64_t v) { return Cyclotomic(mpq_class(std::to_string(v))); }

// Units generating (Z/e)^*, chosen greedily in increasing order.
std::vector<std::uint64_t> unit_generators(std::uint64_t e) {
  const auto units = units_mod(e);
  std::vector<std::uint64_t> gens;
  std::set<std::uint64_t> span{1 % e};
  for (std::uint64_t u : units) {
    if (span.count(u % e))
      continue;
    gens.push_back(u);
    std::vector<std::uint64_t> frontier(span.begin(), span.end());
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (std::uint64_t g : gens) {
        const std::uint64_t v = frontier[i] * g % e;
        if (span.insert(v).second)
          frontier.push_back(v);
      }
  }
  return gens;
}

} // namespace

std::vector<std::uint64_t> power_map_primes(std::uint64_t exponent) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p <= exponent; ++p)
    if (is_prime(p))
      ps.push_back(p);
  return ps;
}

// ------------------------------------------------------------------ table data

std::uint64_t CharacterTable::degree(std::size_t row) const {
  const Cyclotomic& v = values.at(row).at(0);
  if (!v.is_integer() || v.rational() <= 0)
    throw InternalInconsistency("character table: degree is not a positive integer");
  return v.rational().get_num().get_ui();
}

std::size_t CharacterTable::power_class(std::size_t k, std::uint64_t e) const {
  const std::uint64_t o = element_orders.at(k);
  e %= o;
  if (e == 0)
    return 0;
  std::size_t c = k;
  for (const auto& [p, a] : factorize(e))
    for (unsigned i = 0; i < a; ++i) {
      auto it = power_maps.find(p);
      if (it != power_maps.end())
        c = it->second.at(c);
      else if (p > exponent)
        c = power_class(c, p % element_orders.at(c));
      else
        throw InputError("character table: missing power map for prime " + std::to_string(p));
    }
  return c;
}

std::size_t CharacterTable::trivial_row() const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    bool all_one = true;
    for (const auto& v : values[i])
      if (v != Cyclotomic(1)) {
        all_one = false;
        break;
      }
    if (all_one)
      return i;
  }
  throw InternalInconsistency("character table: no trivial character");
}

json CharacterTable::to_json() const {
  json classes = json::array();
  for (std::size_t k = 0; k < num_classes(); ++k) {
    json c{{"size", class_sizes[k]},
           {"centralizer_order", centralizer_orders[k]},
           {"element_order", element_orders[k]}};
    if (!class_reps.empty())
      c["representative"] = class_reps[k];
    classes.push_back(std::move(c));
  }
  json pm = json::object();
  for (const auto& [p, m] : power_maps)
    pm[std::to_string(p)] = m;
  json rows = json::array();
  for (const auto& row : values) {
    json r = json::array();
    for (const auto& v : row)
      r.push_back(v.to_json());
    rows.push_back(std::move(r));
  }
  return json{{"format", "picky-character-table"},
              {"version", 1},
              {"provenance", provenance},
              {"group_order", group_order},
              {"exponent", exponent},
              {"classes", std::move(classes)},
              {"power_maps", std::move(pm)},
              {"characters", std::move(rows)}};
}

CharacterTable CharacterTable::from_json(const json& j) {
  try {
    if (j.at("format") != "picky-character-table" || j.at("version") != 1)
      throw InputError("character table: unsupported format");
    CharacterTable t;
    t.provenance = j.at("provenance").get<std::string>();
    t.group_order = j.at("group_order").get<std::uint64_t>();
    t.exponent = j.at("exponent").get<std::uint64_t>();
    bool reps = true;
    for (const auto& c : j.at("classes")) {
      t.class_sizes.push_back(c.at("size").get<std::uint64_t>());
      t.centralizer_orders.push_back(c.at("centralizer_order").get<std::uint64_t>());
      t.element_orders.push_back(c.at("element_order").get<std::uint64_t>());
      if (c.contains("representative"))
        t.class_reps.push_back(c["representative"].get<std::vector<Point>>());
      else
        reps = false;
    }
    if (!reps)
      t.class_reps.clear();
    for (const auto& [p, m] : j.at("power_maps").items())
      t.power_maps[std::stoull(p)] = m.get<std::vector<std::size_t>>();
    for (const auto& r : j.at("characters")) {
      std::vector<Cyclotomic> row;
      for (const auto& v : r)
        row.push_back(Cyclotomic::from_json(v));
      if (row.size() != t.num_classes())
        throw InputError("character table: row length does not match class count");
      t.values.push_back(std::move(row));
    }
    for (const auto& [p, m] : t.power_maps)
      for (std::size_t c : m)
        if (m.size() != t.num_classes() || c >= t.num_classes())
          throw InputError("character table: malformed power map");
    return t;
  } catch (const json::exception& e) {
    throw InputError(std::string("character table: malformed JSON: ") + e.what());
  }
}

// ------------------------------------------------------------------- engine

std::vector<std::vector<std::uint64_t>> class_matrix(const ClassData& cd, std::size_t i) {
  const std::size_t r = cd.size();
  if (i >= r)
    throw InputError("class_matrix: class index out of range");
  const ElementIndexer& ix = cd.indexer();
  const std::vector<Point>& base = ix.base();
  const std::size_t inv_class = cd.class_of(cd[i].rep.inverse());
  std::vector<std::vector<std::uint64_t>> m(r, std::vector<std::uint64_t>(r, 0));
  Perm a, scratch;
  std::vector<Point> img(base.size());
  for (std::uint64_t idx = 0; idx < ix.size(); ++idx) {
    if (cd.class_of_index(idx) != inv_class)
      continue;
    ix.element_into(idx, a, scratch); // a = b^-1 for b in C_i
    for (std::size_t k = 0; k < r; ++k) {
      const Perm& z = cd[k].rep;
      for (std::size_t l = 0; l < base.size(); ++l)
        img[l] = z[a[base[l]]];
      const std::uint64_t j = ix.index_of_base_images(img);
      ++m[cd.class_of_index(j)][k];
    }
  }
  return m;
}

std::uint64_t dixon_prime(std::uint64_t exponent, std::uint64_t order,
                          std::uint64_t search_bound) {
  const double lo = 2.0 * std::sqrt(static_cast<double>(order));
  for (std::uint64_t l = exponent + 1; l <= search_bound; l += exponent) {
    if (static_cast<double>(l) <= lo)
      continue;
    if (is_prime(l))
      return l;
  }
  throw BoundExceeded("no Dixon prime = 1 mod " + std::to_string(exponent) + " below " +
                      std::to_string(search_bound));
}

CharacterTable character_table(const ClassData& cd, const Bounds& bounds,
                               const std::string& provenance) {
  const Group& g = cd.group();
  const std::uint64_t order = g.order();
  if (order > bounds.character_table_order)
    throw BoundExceeded("character table refused: |G| = " + std::to_string(order) +
                        " exceeds bound " + std::to_string(bounds.character_table_order));
  const std::size_t r = cd.size();
  if (r > bounds.class_count)
    throw BoundExceeded("character table refused: " + std::to_string(r) +
                        " classes exceed bound " + std::to_string(bounds.class_count));
  const std::uint64_t e = cd.exponent();
  const std::uint64_t l = dixon_prime(e, order, bounds.dixon_prime_search);
  const Field F{l};

  std::vector<std::uint64_t> inv_class(r);
  for (std::size_t k = 0; k < r; ++k)
    inv_class[k] = cd.class_of(cd[k].rep.inverse());

  std::vector<std::vector<std::vector<std::uint64_t>>> mats(r);
  auto matrix = [&](std::size_t i) -> const std::vector<std::vector<std::uint64_t>>& {
    if (mats[i].empty()) {
      mats[i] = class_matrix(cd, i);
      for (auto& row : mats[i])
        for (auto& v : row)
          v %= l;
    }
    return mats[i];
  };

  // Split F_l^r into common eigenspaces of the class matrices.
  std::vector<Subspace> todo, done;
  {
    Subspace all;
    for (std::size_t k = 0; k < r; ++k) {
      Vec v(r, 0);
      v[k] = 1;
      all.basis.push_back(std::move(v));
      all.pivots.push_back(k);
    }
    all.next_class = 1;
    todo.push_back(std::move(all));
  }
  while (!todo.empty()) {
    Subspace w = std::move(todo.back());
    todo.pop_back();
    const std::size_t d = w.basis.size();
    if (d == 1) {
      done.push_back(std::move(w));
      continue;
    }
    if (w.next_class >= r)
      throw InternalInconsistency("character table: class matrices failed to split a space");
    const auto& a = matrix(w.next_class);
    // Action on w: column s of `rest` holds the coordinates of A b_s.
    std::vector<Vec> rest(d, Vec(d, 0));
    for (std::size_t s = 0; s < d; ++s) {
      Vec img(r, 0);
      for (std::size_t j = 0; j < r; ++j) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < r; ++k)
          if (a[j][k] && w.basis[s][k])
            acc = (acc + a[j][k] * w.basis[s][k]) % l;
        img[j] = acc;
      }
      Vec check = img;
      for (std::size_t t = 0; t < d; ++t) {
        const std::uint64_t c = img[w.pivots[t]];
        rest[t][s] = c;
        for (std::size_t j = 0; j < r; ++j)
          check[j] = F.sub(check[j], F.mul(c, w.basis[t][j]));
      }
      if (std::any_of(check.begin(), check.end(), [](std::uint64_t v) { return v != 0; }))
        throw InternalInconsistency("character table: eigenspace is not invariant");
    }
    const std::vector<std::uint64_t> roots = distinct_roots(char_poly(rest, F), F);
    ++w.next_class;
    if (roots.size() <= 1) {
      todo.push_back(std::move(w));
      continue;
    }
    std::vector<Subspace> parts;
    std::size_t total = 0;
    for (std::uint64_t lambda : roots) {
      std::vector<Vec> m = rest;
      for (std::size_t t = 0; t < d; ++t)
        m[t][t] = F.sub(m[t][t], lambda);
      Subspace sub;
      sub.next_class = w.next_class;
      for (const Vec& c : kernel(std::move(m), F)) {
        Vec v(r, 0);
        for (std::size_t t = 0; t < d; ++t)
          if (c[t])
            for (std::size_t j = 0; j < r; ++j)
              v[j] = F.add(v[j], F.mul(c[t], w.basis[t][j]));
        sub.basis.push_back(std::move(v));
      }
      sub.pivots = rref(sub.basis, F);
      total += sub.basis.size();
      parts.push_back(std::move(sub));
    }
    if (total != d)
      throw InternalInconsistency("character table: class matrix is not diagonalisable mod l");
    // Reverse so that the first eigenvalue is processed first.
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
      todo.push_back(std::move(*it));
  }
  if (done.size() != r)
    throw InternalInconsistency("character table: wrong number of characters");

  // Powers of every class representative.
  std::vector<std::vector<std::size_t>> powers(r);
  for (std::size_t k = 0; k < r; ++k)
    for (std::uint64_t t = 0; t < cd[k].element_order; ++t)
      powers[k].push_back(cd.power_class(k, t));

  const std::uint64_t zeta_e = pow_mod(primitive_root(l), (l - 1) / e, l);
  const std::uint64_t order_mod = order % l;
  CharacterTable t;
  t.provenance = provenance;
  t.group_order = order;
  t.exponent = e;
  for (std::size_t k = 0; k < r; ++k) {
    t.class_sizes.push_back(cd[k].size);
    t.centralizer_orders.push_back(cd[k].centralizer_order);
    t.element_orders.push_back(cd[k].element_order);
    t.class_reps.push_back(cd[k].rep.images());
  }
  for (std::uint64_t p : power_map_primes(e)) {
    std::vector<std::size_t> m(r);
    for (std::size_t k = 0; k < r; ++k)
      m[k] = cd.power_class(k, p);
    t.power_maps[p] = std::move(m);
  }

  const std::uint64_t root_bound = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(order))) + 1;
  for (const Subspace& s : done) {
    const Vec& v0 = s.basis[0];
    if (v0[0] == 0)
      throw InternalInconsistency("character table: eigenvector vanishes on the identity");
    Vec omega(r);
    const std::uint64_t n0 = F.inv(v0[0]);
    for (std::size_t k = 0; k < r; ++k)
      omega[k] = F.mul(v0[k], n0);
    // chi(1)^2 = |G| / sum_k omega_k omega_k* / |C_k|
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k < r; ++k)
      sum = F.add(sum, F.mul(F.mul(omega[k], omega[inv_class[k]]), F.inv(cd[k].size % l)));
    if (sum == 0)
      throw InternalInconsistency("character table: degree equation degenerate");
    const std::uint64_t d2 = F.mul(order_mod, F.inv(sum));
    std::uint64_t deg = 0;
    for (std::uint64_t c = 1; c <= root_bound; ++c)
      if (c * c % l == d2 && order % c == 0) {
        deg = c;
        break;
      }
    if (deg == 0)
      throw InternalInconsistency("character table: no integral degree");
    Vec chi(r);
    for (std::size_t k = 0; k < r; ++k)
      chi[k] = F.mul(F.mul(omega[k], deg % l), F.inv(cd[k].size % l));
    std::vector<Cyclotomic> row;
    for (std::size_t k = 0; k < r; ++k) {
      const std::uint64_t o = cd[k].element_order;
      const std::uint64_t z = pow_mod(zeta_e, e / o, l);
      const std::uint64_t oinv = F.inv(o % l);
      std::vector<std::int64_t> mult(o);
      std::int64_t total = 0;
      for (std::uint64_t j = 0; j < o; ++j) {
        // m_j = (1/o) sum_t chi(x^t) z^(-jt)
        const std::uint64_t zj = pow_mod(z, (o - j) % o, l);
        std::uint64_t acc = 0, zt = 1;
        for (std::uint64_t tt = 0; tt < o; ++tt) {
          acc = F.add(acc, F.mul(chi[powers[k][tt]], zt));
          zt = F.mul(zt, zj);
        }
        const std::uint64_t m = F.mul(acc, oinv);
        if (m > deg)
          throw InternalInconsistency("character table: eigenvalue multiplicity out of range");
        mult[j] = static_cast<std::int64_t>(m);
        total += mult[j];
      }
      if (static_cast<std::uint64_t>(total) != deg)
        throw InternalInconsistency("character table: multiplicities do not sum to the degree");
      row.push_back(from_root_multiplicities(o, mult));
    }
    t.values.push_back(std::move(row));
  }
  std::sort(t.values.begin(), t.values.end(), [](const auto& a, const auto& b) {
    const auto da = a[0].rational(), db = b[0].rational();
    if (da != db)
      return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  TableVerification ver = verify_table(t, &cd);
  if (!ver.ok())
    throw InternalInconsistency("character table failed verification: " + ver.first_failure);
  return t;
}

CharacterTable character_table(const Group& g, const Bounds& bounds,
                               const std::string& provenance) {
  if (g.order() > bounds.character_table_order)
    throw BoundExceeded("character table refused: |G| = " + std::to_string(g.order()) +
                        " exceeds bound " + std::to_string(bounds.character_table_order));
  ClassData cd(g, bounds);
  return character_table(cd, bounds, provenance);
}

// --------------------------------------------------------------- verification

json TableVerification::to_json() const {
  return json{{"degrees", degrees_ok},
              {"sum_of_squares", sum_of_squares_ok},
              {"row_orthogonality", row_orthogonality_ok},
              {"column_orthogonality", column_orthogonality_ok},
              {"galois", galois_ok},
              {"power_maps", power_maps_ok},
              {"ok", ok()},
              {"first_failure", first_failure}};
}

TableVerification verify_table(const CharacterTable& t, const ClassData* cd) {
  TableVerification v;
  auto fail = [&v](const std::string& what) {
    if (v.first_failure.empty())
      v.first_failure = what;
  };
  const std::size_t r = t.num_classes();
  const std::uint64_t e = t.exponent;
  if (t.num_chars() != r || r == 0 || t.centralizer_orders.size() != r ||
      t.element_orders.size() != r) {
    fail("shape: " + std::to_string(t.num_chars()) + " characters for " +
         std::to_string(r) + " classes");
    return v;
  }
  if (e == 0 || t.element_orders[0] != 1 || t.class_sizes[0] != 1) {
    fail("shape: first class is not the identity");
    return v;
  }
  for (std::size_t k = 0; k < r; ++k)
    if (t.class_sizes[k] * t.centralizer_orders[k] != t.group_order ||
        e % t.element_orders[k] != 0) {
      fail("shape: class " + std::to_string(k) + " data inconsistent");
      return v;
    }
  for (const auto& row : t.values)
    for (std::size_t k = 0; k < r; ++k)
      if (e % row[k].conductor() != 0) {
        fail("shape: value conductor does not divide the exponent");
        return v;
      }

  v.degrees_ok = true;
  for (const auto& row : t.values)
    if (!is_positive_integer(row[0]))
      v.degrees_ok = false;
  if (!v.degrees_ok)
    fail("degrees: some chi(1) is not a positive integer");

  {
    mpq_class s = 0;
    for (const auto& row : t.values)
      if (row[0].is_rational())
        s += row[0].rational() * row[0].rational();
    v.sum_of_squares_ok = v.degrees_ok && s == mpq_class(std::to_string(t.group_order));
    if (!v.sum_of_squares_ok)
      fail("sum of squares: sum chi(1)^2 != |G|");
  }

  std::vector<std::vector<Cyclotomic>> conj(r);
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& x : t.values[i])
      conj[i].push_back(x.conj());

  Accumulator acc(e);
  v.row_orthogonality_ok = true;
  for (std::size_t i = 0; i < r && v.row_orthogonality_ok; ++i)
    for (std::size_t j = i; j < r; ++j) {
      acc.clear();
      for (std::size_t k = 0; k < r; ++k)
        acc.add_product(t.values[i][k], conj[j][k], t.class_sizes[k]);
      if (acc.value() != (i == j ? u64(t.group_order) : Cyclotomic(0))) {
        v.row_orthogonality_ok = false;
        fail("row orthogonality: rows " + std::to_string(i) + ", " + std::to_string(j));
        break;
      }
    }

  v.column_orthogonality_ok = true;
  for (std::size_t k = 0; k < r && v.column_orthogonality_ok; ++k)
    for (std::size_t m = k; m < r; ++m) {
      acc.clear();
      for (std::size_t i = 0; i < r; ++i)
        acc.add_product(t.values[i][k], conj[i][m], 1);
      if (acc.value() != (k == m ? u64(t.centralizer_orders[k]) : Cyclotomic(0))) {
        v.column_orthogonality_ok = false;
        fail("column orthogonality: classes " + std::to_string(k) + ", " +
             std::to_string(m));
        break;
      }
    }

  v.power_maps_ok = true;
  for (std::uint64_t p : power_map_primes(e)) {
    auto it = t.power_maps.find(p);
    if (it == t.power_maps.end() || it->second.size() != r) {
      v.power_maps_ok = false;
      fail("power maps: missing map for prime " + std::to_string(p));
      continue;
    }
    for (std::size_t k = 0; k < r; ++k) {
      const std::uint64_t o = t.element_orders[k];
      const std::uint64_t expect = o / std::gcd(o, p);
      if (t.element_orders[it->second[k]] != expect)
        v.power_maps_ok = false;
    }
    if (cd && cd->size() == r)
      for (std::size_t k = 0; k < r; ++k)
        if (it->second[k] != cd->power_class(k, p))
          v.power_maps_ok = false;
    if (!v.power_maps_ok)
      fail("power maps: map for prime " + std::to_string(p) + " inconsistent");
  }

  // Galois action on values matches the power maps and permutes the rows.
  v.galois_ok = true;
  if (v.power_maps_ok) {
    std::set<std::vector<Cyclotomic>> rows(t.values.begin(), t.values.end());
    for (std::uint64_t u : unit_generators(e)) {
      for (std::size_t i = 0; i < r && v.galois_ok; ++i) {
        std::vector<Cyclotomic> img;
        for (std::size_t k = 0; k < r; ++k) {
          Cyclotomic gv = t.values[i][k].galois(static_cast<std::int64_t>(u));
          if (gv != t.values[i][t.power_class(k, u)]) {
            v.galois_ok = false;
            break;
          }
          img.push_back(std::move(gv));
        }
        if (v.galois_ok && !rows.count(img))
          v.galois_ok = false;
      }
    }
  } else {
    v.galois_ok = false;
  }
  if (!v.galois_ok)
    fail("galois: action on values does not match the power maps");
  return v;
}

std::vector<std::size_t> irr_x(const CharacterTable& t, std::size_t k) {
  if (k >= t.num_classes())
    throw InputError("irr_x: class index out of range");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.num_chars(); ++i)
    if (!t.values[i][k].is_zero())
      out.push_back(i);
  return out;
}

} // namespace picky
