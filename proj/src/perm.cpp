#include "picky/perm.hpp"

#include <numeric>
#include <sstream>

#include "picky/errors.hpp"
#include "picky/util.hpp"

namespace picky {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  if (!is_bijection(images_))
    throw InputError("image array is not a permutation of 0.." +
                     std::to_string(images_.size()) + "-1");
}

Perm Perm::from_cycles(std::size_t degree,
                       const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> seen(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || seen[c[i]])
        throw InputError("invalid cycle notation");
      seen[c[i]] = true;
      img[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(img));
}

bool is_bijection(std::span<const Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p])
      return false;
    seen[p] = true;
  }
  return true;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Perm operator*(const Perm& a, const Perm& b) {
  Perm r;
  r.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i)
    r.images_[i] = b.images_[a.images_[i]];
  return r;
}

void compose_into(const Perm& a, const Perm& b, Perm& out) {
  out.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i)
    out.images_[i] = b.images_[a.images_[i]];
}

Perm Perm::pow(long long k) const {
  const std::size_t n = images_.size();
  std::vector<Point> img(n);
  std::vector<bool> done(n, false);
  std::vector<Point> cyc;
  for (std::size_t s = 0; s < n; ++s) {
    if (done[s])
      continue;
    cyc.clear();
    for (Point q = static_cast<Point>(s); !done[q]; q = images_[q]) {
      done[q] = true;
      cyc.push_back(q);
    }
    const long long len = static_cast<long long>(cyc.size());
    long long shift = k % len;
    if (shift < 0)
      shift += len;
    for (long long i = 0; i < len; ++i)
      img[cyc[i]] = cyc[(i + shift) % len];
  }
  Perm r;
  r.images_ = std::move(img);
  return r;
}

std::uint64_t Perm::order() const {
  const std::size_t n = images_.size();
  std::vector<bool> done(n, false);
  std::uint64_t ord = 1;
  for (std::size_t s = 0; s < n; ++s) {
    if (done[s])
      continue;
    std::uint64_t len = 0;
    for (Point q = static_cast<Point>(s); !done[q]; q = images_[q]) {
      done[q] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t s = 0; s < images_.size(); ++s) {
    if (done[s] || images_[s] == s)
      continue;
    std::vector<Point> c;
    for (Point q = static_cast<Point>(s); !done[q]; q = images_[q]) {
      done[q] = true;
      c.push_back(q);
    }
    out.push_back(std::move(c));
  }
  return out;
}

Perm Perm::conjugate(const Perm& g) const {
  // (g^-1 x g)[g[i]] = g[x[i]]
  Perm r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[g.images_[i]] = g.images_[images_[i]];
  return r;
}

std::size_t Perm::smallest_moved_point() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return i;
  return images_.size();
}

std::string Perm::to_string() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? "," : "") << c[i];
    os << ')';
  }
  return os.str();
}

std::size_t Perm::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (Point p : images_) {
    h ^= p;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

PParts p_parts(const Perm& g, std::uint64_t p) {
  const std::uint64_t n = g.order();
  std::uint64_t pa = 1, m = n;
  while (m % p == 0) {
    m /= p;
    pa *= p;
  }
  // g_p = g^(m t) with m t = 1 mod p^a
  std::uint64_t t = pa == 1 ? 0 : mod_inverse(m % pa, pa);
  Perm gp = g.pow(static_cast<long long>((m * t) % n));
  Perm gq = g * gp.inverse();
  return {std::move(gp), std::move(gq)};
}

bool is_p_element(const Perm& g, std::uint64_t p) {
  std::uint64_t n = g.order();
  while (n % p == 0)
    n /= p;
  return n == 1;
}

} // namespace picky
