#include "picky/zoo/basic.hpp"

#include <tuple>

#include "picky/backtrack.hpp"
#include "picky/errors.hpp"
#include "picky/quotient.hpp"
#include "picky/util.hpp"

namespace picky::zoo {

namespace {

Perm cycle_on(std::size_t n, std::size_t first, std::size_t len) {
  std::vector<Point> im(n);
  for (std::size_t i = 0; i < n; ++i)
    im[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < len; ++i)
    im[first + i] = static_cast<Point>(first + (i + 1) % len);
  return Perm(std::move(im));
}

} // namespace

Group symmetric(std::size_t n) {
  if (n < 2)
    return Group::trivial(n);
  return Group::generated(n, {cycle_on(n, 0, n), Perm::from_cycles(n, {{0, 1}})});
}

Group alternating(std::size_t n) {
  if (n < 3)
    return Group::trivial(n);
  std::vector<Perm> gens;
  for (Point i = 2; i < n; ++i)
    gens.push_back(Perm::from_cycles(n, {{0, 1, i}}));
  return Group::generated(n, gens);
}

Group cyclic(std::size_t n) {
  if (n < 2)
    return Group::trivial(std::max<std::size_t>(n, 1));
  return Group::generated(n, {cycle_on(n, 0, n)});
}

Group dihedral(std::size_t order) {
  if (order % 2 != 0 || order < 6)
    throw InputError("dihedral group order must be even and at least 6");
  const std::size_t m = order / 2;
  std::vector<Point> refl(m);
  for (std::size_t i = 0; i < m; ++i)
    refl[i] = static_cast<Point>((m - i) % m);
  return Group::generated(m, {cycle_on(m, 0, m), Perm(refl)});
}

Group quaternion8() {
  // Elements ±1, ±i, ±j, ±k numbered 1,-1,i,-i,j,-j,k,-k = 0..7; right
  // multiplication by i and j.
  auto idx = [](int unit, int sign) { return static_cast<Point>(2 * unit + (sign < 0)); };
  // unit table: 0=1, 1=i, 2=j, 3=k; mul[a][b] = (unit, sign)
  const int mu[4][4][2] = {{{0, 1}, {1, 1}, {2, 1}, {3, 1}},
                           {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
                           {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
                           {{3, 1}, {2, 1}, {1, -1}, {0, -1}}};
  auto right = [&](int b) {
    std::vector<Point> im(8);
    for (int a = 0; a < 4; ++a)
      for (int s : {1, -1}) {
        const int u = mu[a][b][0], sg = mu[a][b][1] * s;
        im[idx(a, s)] = idx(u, sg);
      }
    return Perm(im);
  };
  return Group::generated(8, {right(1), right(2)});
}

Group abelian(const std::vector<std::size_t>& orders) {
  std::size_t n = 0;
  for (auto o : orders)
    n += o;
  std::vector<Perm> gens;
  std::size_t at = 0;
  for (auto o : orders) {
    if (o > 1)
      gens.push_back(cycle_on(n, at, o));
    at += o;
  }
  return Group::generated(n, gens);
}

Group affine_line(std::uint64_t p) {
  if (!is_prime(p))
    throw InputError("affine_line needs a prime");
  std::uint64_t a = 2;
  while (p > 2) {
    bool prim = true;
    for (auto q : prime_divisors(p - 1))
      if (pow_mod(a, (p - 1) / q, p) == 1)
        prim = false;
    if (prim)
      break;
    ++a;
  }
  std::vector<Point> t(p), m(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    t[x] = static_cast<Point>((x + 1) % p);
    m[x] = static_cast<Point>(x * a % p);
  }
  return Group::generated(p, {Perm(t), Perm(m)});
}

Perm embed_left(const Perm& g, std::size_t right_degree) {
  std::vector<Point> im(g.images());
  for (std::size_t i = 0; i < right_degree; ++i)
    im.push_back(static_cast<Point>(g.degree() + i));
  return Perm(std::move(im));
}

Perm embed_right(const Perm& g, std::size_t left_degree) {
  std::vector<Point> im(left_degree + g.degree());
  for (std::size_t i = 0; i < left_degree; ++i)
    im[i] = static_cast<Point>(i);
  for (std::size_t i = 0; i < g.degree(); ++i)
    im[left_degree + i] = static_cast<Point>(left_degree + g[i]);
  return Perm(std::move(im));
}

Group direct_product(const Group& a, const Group& b) {
  std::vector<Perm> gens;
  for (const Perm& s : a.generators())
    gens.push_back(embed_left(s, b.degree()));
  for (const Perm& s : b.generators())
    gens.push_back(embed_right(s, a.degree()));
  return Group::generated(a.degree() + b.degree(), gens);
}

Group wreath(const Group& g, const Group& h) {
  const std::size_t d = g.degree(), m = h.degree(), n = d * m;
  std::vector<Perm> gens;
  for (const Perm& s : g.generators()) {
    std::vector<Point> im(n);
    for (std::size_t i = 0; i < n; ++i)
      im[i] = static_cast<Point>(i < d ? s[i] : i);
    gens.emplace_back(std::move(im));
  }
  for (const Perm& s : h.generators()) {
    std::vector<Point> im(n);
    for (std::size_t c = 0; c < m; ++c)
      for (std::size_t i = 0; i < d; ++i)
        im[c * d + i] = static_cast<Point>(s[c] * d + i);
    gens.emplace_back(std::move(im));
  }
  // The base group is the normal closure of the first copy under the top group.
  return Group::generated(n, gens);
}

} // namespace picky::zoo

namespace picky::zoo {

Group central_quotient(const Group& g) {
  const Group z = center(g);
  if (z.is_trivial())
    return g;
  return QuotientAction(g, z).image();
}

Group affine_3_cubed_a4() {
  // points are vectors (a, b, c) in F_3^3, index a + 3b + 9c
  auto idx = [](int a, int b, int c) { return static_cast<Point>(a + 3 * b + 9 * c); };
  auto affine = [&](auto f) {
    std::vector<Point> img(27);
    for (int c = 0; c < 3; ++c)
      for (int b = 0; b < 3; ++b)
        for (int a = 0; a < 3; ++a) {
          auto [x, y, z] = f(a, b, c);
          img[idx(a, b, c)] = idx(((x % 3) + 3) % 3, ((y % 3) + 3) % 3, ((z % 3) + 3) % 3);
        }
    return Perm(std::move(img));
  };
  std::vector<Perm> gens{
      affine([](int a, int b, int c) { return std::tuple{a + 1, b, c}; }),
      affine([](int a, int b, int c) { return std::tuple{-a, -b, c}; }),
      affine([](int a, int b, int c) { return std::tuple{a, -b, -c}; }),
      affine([](int a, int b, int c) { return std::tuple{c, a, b}; })};
  return Group::generated(27, std::move(gens));
}

} // namespace picky::zoo
