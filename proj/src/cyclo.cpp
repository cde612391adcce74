#include "picky/cyclo.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "picky/errors.hpp"
#include "picky/util.hpp"

namespace picky {

using json = nlohmann::json;

namespace {

using Dense = std::vector<mpq_class>;

// Rewrite every non-basis exponent of Q(ζ_n) in terms of basis exponents.
void reduce(std::uint64_t n, Dense& c) {
  for (auto [p, a] : factorize(n)) {
    std::uint64_t pa = 1;
    for (unsigned i = 0; i < a; ++i)
      pa *= p;
    const std::uint64_t low = pa / p, step = n / p;
    for (std::uint64_t j = 0; j < n; ++j) {
      if (sgn(c[j]) == 0)
        continue;
      const std::uint64_t d = (j % pa) / low;
      const bool bad = p == 2 ? d != 0 : d == 0;
      if (!bad)
        continue;
      const mpq_class v = c[j];
      c[j] = 0;
      if (p == 2) {
        c[(j + step) % n] -= v;
      } else {
        for (std::uint64_t i = 1; i < p; ++i)
          c[(j + i * step) % n] -= v;
      }
    }
  }
}

// One conductor-lowering step for prime p, or false. Input is reduced.
bool shrink(std::uint64_t& n, Dense& c, std::uint64_t p, unsigned a) {
  if (a >= 2 || p == 2) {
    // For 2 || n every basis exponent is even: Q(ζ_2m) = Q(ζ_m).
    if (a >= 2)
      for (std::uint64_t j = 0; j < n; ++j)
        if (sgn(c[j]) != 0 && j % p != 0)
          return false;
    const std::uint64_t m = n / p;
    Dense out(m);
    for (std::uint64_t j = 0; j < n; ++j)
      if (sgn(c[j]) != 0) {
        if (j % p != 0)
          throw InternalInconsistency("cyclotomic reduction: odd exponent at conductor 2 mod 4");
        out[j / p] += c[j];
      }
    n = m;
    c = std::move(out);
    return true;
  }
  // p odd, p || n: constant on each fibre {J = r mod m, J != 0 mod p}.
  const std::uint64_t m = n / p;
  Dense val(m);
  std::vector<bool> seen(m, false);
  for (std::uint64_t j = 0; j < n; ++j) {
    if (j % p == 0)
      continue;
    const std::uint64_t r = j % m;
    if (!seen[r]) {
      seen[r] = true;
      val[r] = c[j];
    } else if (val[r] != c[j]) {
      return false;
    }
  }
  const std::uint64_t minv = m == 1 ? 0 : mod_inverse(m % p, p);
  Dense out(m);
  for (std::uint64_t r = 0; r < m; ++r) {
    if (sgn(val[r]) == 0)
      continue;
    // J0 = r + m t with J0 = 0 mod p; ζ_n^J0 = ζ_m^(J0 / p)
    const std::uint64_t t = (p - (r % p) * minv % p) % p;
    const std::uint64_t j0 = r + m * t;
    out[(j0 / p) % m] -= val[r];
  }
  n = m;
  c = std::move(out);
  return true;
}

std::uint64_t lcm64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

json int_json(const mpz_class& z) {
  if (z.fits_slong_p())
    return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

mpz_class json_int(const json& j) {
  if (j.is_string())
    return mpz_class(j.get<std::string>());
  if (j.is_number_unsigned())
    return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer())
    return mpz_class(std::to_string(j.get<std::int64_t>()));
  throw InputError("expected an integer in cyclotomic document");
}

} // namespace

Cyclotomic::Cyclotomic(const mpq_class& v) {
  if (sgn(v) != 0)
    terms_.emplace_back(0, v);
}

Cyclotomic Cyclotomic::canonical(std::uint64_t n, std::vector<mpq_class> dense) {
  reduce(n, dense);
  bool changed = true;
  while (changed && n > 1) {
    changed = false;
    for (auto [p, a] : factorize(n))
      if (shrink(n, dense, p, a)) {
        reduce(n, dense);
        changed = true;
        break;
      }
  }
  Cyclotomic r;
  r.f_ = n;
  for (std::uint64_t j = 0; j < n; ++j)
    if (sgn(dense[j]) != 0)
      r.terms_.emplace_back(j, dense[j]);
  if (r.terms_.empty())
    r.f_ = 1;
  return r;
}

Cyclotomic Cyclotomic::zeta(std::uint64_t n, std::int64_t k) {
  if (n == 0)
    throw PreconditionError("zeta: order must be positive");
  Dense d(n);
  const std::int64_t nn = static_cast<std::int64_t>(n);
  d[static_cast<std::uint64_t>(((k % nn) + nn) % nn)] = 1;
  return canonical(n, std::move(d));
}

Cyclotomic Cyclotomic::from_powers(std::uint64_t n, std::vector<mpq_class> coeffs) {
  if (coeffs.size() != n)
    throw PreconditionError("from_powers: coefficient vector length differs from n");
  return canonical(n, std::move(coeffs));
}

mpq_class Cyclotomic::rational() const {
  if (f_ != 1)
    throw PreconditionError("cyclotomic value " + to_string() + " is not rational");
  return terms_.empty() ? mpq_class(0) : terms_[0].second;
}

bool Cyclotomic::is_integer() const {
  return f_ == 1 && (terms_.empty() || terms_[0].second.get_den() == 1);
}

std::vector<mpq_class> Cyclotomic::expand(std::uint64_t n) const {
  if (n % f_ != 0)
    throw PreconditionError("expand: modulus is not a multiple of the conductor");
  Dense d(n);
  const std::uint64_t s = n / f_;
  for (const auto& [j, v] : terms_)
    d[j * s] += v;
  return d;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& t : r.terms_)
    t.second = -t.second;
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero())
    return b;
  if (b.is_zero())
    return a;
  if (a.f_ == 1 && b.f_ == 1)
    return Cyclotomic(mpq_class(a.terms_[0].second + b.terms_[0].second));
  const std::uint64_t n = lcm64(a.f_, b.f_);
  Dense d(n);
  for (const auto& [j, v] : a.terms_)
    d[j * (n / a.f_)] += v;
  for (const auto& [j, v] : b.terms_)
    d[j * (n / b.f_)] += v;
  return Cyclotomic::canonical(n, std::move(d));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.is_zero() || b.is_zero())
    return Cyclotomic();
  if (a.f_ == 1) {
    Cyclotomic r = b;
    for (auto& t : r.terms_)
      t.second *= a.terms_[0].second;
    return r;
  }
  if (b.f_ == 1)
    return b * a;
  const std::uint64_t n = lcm64(a.f_, b.f_);
  const std::uint64_t sa = n / a.f_, sb = n / b.f_;
  Dense d(n);
  for (const auto& [ja, va] : a.terms_)
    for (const auto& [jb, vb] : b.terms_)
      d[(ja * sa + jb * sb) % n] += va * vb;
  return Cyclotomic::canonical(n, std::move(d));
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero())
    throw PreconditionError("inversion of zero");
  if (f_ == 1)
    return Cyclotomic(mpq_class(1 / terms_[0].second));
  // α^-1 = (product of the other conjugates) / N(α)
  const std::vector<std::uint64_t> stab = stabilizer(*this);
  std::vector<bool> covered(f_, false);
  for (auto s : stab)
    covered[s] = true;
  Cyclotomic others(1L);
  for (auto u : units_mod(f_)) {
    if (covered[u])
      continue;
    for (auto s : stab)
      covered[u * s % f_] = true;
    others *= galois(static_cast<std::int64_t>(u));
  }
  const Cyclotomic norm = *this * others;
  if (!norm.is_rational())
    throw InternalInconsistency("inverse: norm is not rational");
  return others * Cyclotomic(mpq_class(1 / norm.rational()));
}

Cyclotomic Cyclotomic::galois(std::int64_t u) const {
  const std::int64_t f = static_cast<std::int64_t>(f_);
  const std::uint64_t uu = static_cast<std::uint64_t>(((u % f) + f) % f);
  if (std::gcd(uu, f_) != 1 && f_ != 1)
    throw PreconditionError("galois: " + std::to_string(u) + " is not a unit mod " +
                            std::to_string(f_));
  if (f_ == 1 || uu == 1)
    return *this;
  Dense d(f_);
  for (const auto& [j, v] : terms_)
    d[j * uu % f_] += v;
  return canonical(f_, std::move(d));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.f_ == b.f_ && a.terms_ == b.terms_;
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.f_ != b.f_)
    return a.f_ < b.f_;
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms_[i].first != b.terms_[i].first)
      return a.terms_[i].first < b.terms_[i].first;
    if (a.terms_[i].second != b.terms_[i].second)
      return a.terms_[i].second < b.terms_[i].second;
  }
  return a.terms_.size() < b.terms_.size();
}

std::string Cyclotomic::to_string() const {
  if (terms_.empty())
    return "0";
  if (f_ == 1)
    return terms_[0].second.get_str();
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, v] : terms_) {
    const std::string z = j == 0 ? "1" : j == 1 ? "E(" + std::to_string(f_) + ")"
                                               : "E(" + std::to_string(f_) + ")^" + std::to_string(j);
    mpq_class mag = abs(v);
    if (sgn(v) < 0)
      os << "-";
    else if (!first)
      os << "+";
    if (j == 0)
      os << mag.get_str();
    else if (mag == 1)
      os << z;
    else
      os << mag.get_str() << "*" << z;
    first = false;
  }
  return os.str();
}

json Cyclotomic::to_json() const {
  json t = json::array();
  for (const auto& [j, v] : terms_)
    t.push_back(json::array({j, int_json(v.get_num()), int_json(v.get_den())}));
  return json{{"conductor", f_}, {"terms", t}};
}

Cyclotomic Cyclotomic::from_json(const json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("terms"))
    throw InputError("cyclotomic document needs 'conductor' and 'terms'");
  const std::uint64_t f = j.at("conductor").get<std::uint64_t>();
  if (f == 0)
    throw InputError("cyclotomic conductor must be positive");
  Dense d(f);
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 3)
      throw InputError("cyclotomic term must be [exponent, numerator, denominator]");
    const std::uint64_t e = t[0].get<std::uint64_t>();
    if (e >= f)
      throw InputError("cyclotomic exponent out of range");
    mpq_class q(json_int(t[1]), json_int(t[2]));
    if (q.get_den() == 0)
      throw InputError("cyclotomic denominator is zero");
    q.canonicalize();
    d[e] += q;
  }
  return canonical(f, std::move(d));
}

Cyclotomic from_root_multiplicities(std::uint64_t n, const std::vector<std::int64_t>& m) {
  std::vector<mpq_class> d(n);
  for (std::uint64_t k = 0; k < n && k < m.size(); ++k)
    d[k] = static_cast<long>(m[k]);
  return Cyclotomic::from_powers(n, std::move(d));
}

// ---------------------------------------------------------------- fields

std::uint64_t AbelianFieldTag::degree() const { return euler_phi(conductor) / stabilizer.size(); }

std::string AbelianFieldTag::to_string() const {
  std::ostringstream os;
  os << "Q(E(" << conductor << "))^<";
  for (std::size_t i = 0; i < stabilizer.size(); ++i)
    os << (i ? "," : "") << stabilizer[i];
  os << ">";
  return os.str();
}

json AbelianFieldTag::to_json() const {
  return json{{"conductor", conductor}, {"stabilizer", stabilizer}, {"degree", degree()}};
}

std::string PPart::to_string() const { return std::to_string(p) + "^(" + e.get_str() + ")"; }

json PPart::to_json() const { return json{{"p", p}, {"e", e.get_str()}}; }

json LocalTag::to_json() const {
  return json{{"p", p},
              {"modulus", modulus},
              {"subgroup", subgroup},
              {"decomposition_order", decomposition_order},
              {"local_degree", local_degree()}};
}

std::vector<std::uint64_t> stabilizer(const Cyclotomic& a) {
  const std::uint64_t f = a.conductor();
  if (f == 1)
    return {0};
  std::vector<std::uint64_t> out;
  for (auto u : units_mod(f))
    if (a.galois(static_cast<std::int64_t>(u)) == a)
      out.push_back(u);
  return out;
}

AbelianFieldTag value_field(const Cyclotomic& a) { return {a.conductor(), stabilizer(a)}; }

std::vector<std::uint64_t> lift_stabilizer(const AbelianFieldTag& tag, std::uint64_t m) {
  if (m % tag.conductor != 0)
    throw PreconditionError("lift_stabilizer: modulus is not a multiple of the conductor");
  std::vector<bool> in(tag.conductor, false);
  for (auto s : tag.stabilizer)
    in[s] = true;
  std::vector<std::uint64_t> out;
  for (auto u : units_mod(m))
    if (in[u % tag.conductor])
      out.push_back(u);
  return out;
}

AbelianFieldTag field_from_stabilizer(std::uint64_t m, const std::vector<std::uint64_t>& h) {
  std::vector<bool> in(m, false);
  for (auto u : h)
    in[u % m] = true;
  // Smallest d | m with ker((Z/m)^* -> (Z/d)^*) inside H.
  std::vector<std::uint64_t> divs;
  for (std::uint64_t d = 1; d <= m; ++d)
    if (m % d == 0)
      divs.push_back(d);
  const std::vector<std::uint64_t> units = units_mod(m);
  for (std::uint64_t d : divs) {
    bool ok = true;
    for (auto u : units)
      if (u % d == 1 % d && !in[u]) {
        ok = false;
        break;
      }
    if (!ok)
      continue;
    std::vector<std::uint64_t> img;
    for (auto u : h)
      img.push_back(u % d);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return {d, img};
  }
  throw InternalInconsistency("field_from_stabilizer: no conductor found");
}

AbelianFieldTag character_field(const std::vector<Cyclotomic>& values) {
  if (values.empty())
    throw PreconditionError("character_field: empty value list");
  std::uint64_t m = 1;
  std::map<Cyclotomic, std::vector<bool>> stabs;
  for (const Cyclotomic& v : values) {
    m = lcm64(m, v.conductor());
    if (!stabs.count(v)) {
      std::vector<bool> in(v.conductor(), false);
      for (auto s : stabilizer(v))
        in[s] = true;
      stabs.emplace(v, std::move(in));
    }
  }
  std::vector<std::uint64_t> h;
  for (auto u : units_mod(m)) {
    bool ok = true;
    for (const auto& [v, in] : stabs)
      if (!in[u % v.conductor()]) {
        ok = false;
        break;
      }
    if (ok)
      h.push_back(u);
  }
  return field_from_stabilizer(m, h);
}

long valuation(const mpq_class& q, std::uint64_t p) {
  if (sgn(q) == 0)
    throw PreconditionError("valuation of zero");
  mpz_class num = q.get_num(), den = q.get_den(), pp = static_cast<unsigned long>(p);
  mpz_class rest;
  const long vn = static_cast<long>(mpz_remove(rest.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t()));
  const long vd = static_cast<long>(mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t()));
  return vn - vd;
}

mpq_class field_norm(const Cyclotomic& a) {
  if (a.is_zero())
    throw PreconditionError("norm of zero");
  if (a.is_rational())
    return a.rational();
  const std::uint64_t f = a.conductor();
  const std::vector<std::uint64_t> stab = stabilizer(a);
  std::vector<bool> covered(f, false);
  Cyclotomic prod(1L);
  for (auto u : units_mod(f)) {
    if (covered[u])
      continue;
    for (auto s : stab)
      covered[u * s % f] = true;
    prod *= a.galois(static_cast<std::int64_t>(u));
  }
  if (!prod.is_rational())
    throw InternalInconsistency("field norm is not rational: " + prod.to_string());
  return prod.rational();
}

PPart p_part(const Cyclotomic& a, std::uint64_t p) {
  if (a.is_zero())
    throw PreconditionError("p-part of zero");
  const mpq_class n = field_norm(a);
  const std::uint64_t deg = value_field(a).degree();
  mpq_class e(valuation(n, p), static_cast<long>(deg));
  e.canonicalize();
  return {p, e};
}

std::uint64_t local_modulus(std::uint64_t m, std::uint64_t p) { return m % p == 0 ? m : m * p; }

LocalTag local_field_tag(const AbelianFieldTag& k, std::uint64_t p, std::uint64_t modulus) {
  if (modulus % k.conductor != 0 || modulus % p != 0)
    throw PreconditionError("local_field_tag: modulus must be a multiple of the conductor and of p");
  const std::uint64_t mq = modulus / p_part(modulus, p);
  // <p> in (Z/mq)^*
  std::vector<bool> in_p(mq, false);
  {
    std::uint64_t x = 1 % mq;
    do {
      in_p[x] = true;
      x = x * (p % mq) % mq;
    } while (!in_p[x]);
  }
  std::vector<bool> in_h(k.conductor, false);
  for (auto s : k.stabilizer)
    in_h[s] = true;
  LocalTag t{p, modulus, {}, 0};
  for (auto u : units_mod(modulus)) {
    if (!in_p[u % mq])
      continue;
    ++t.decomposition_order;
    if (in_h[u % k.conductor])
      t.subgroup.push_back(u);
  }
  return t;
}

LocalTag local_field_tag(const AbelianFieldTag& k, std::uint64_t p) {
  return local_field_tag(k, p, local_modulus(k.conductor, p));
}

} // namespace picky
