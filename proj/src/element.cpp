#include "apkit/element.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>

namespace apkit {

namespace {

double motion_norm(const MotionElement& m) {
  // distance from the identity (0, 1) in the ambient C^2
  return std::max(std::abs(m.z), std::abs(m.w - std::complex<double>(1.0)));
}

void hash_double(std::uint64_t& h, double x) {
  // normalize -0.0 so equal elements hash equally
  if (x == 0.0) x = 0.0;
  std::uint64_t bits;
  std::memcpy(&bits, &x, sizeof(bits));
  h = fnv1a(&bits, sizeof(bits), h);
}

void hash_int(std::uint64_t& h, std::int64_t v) {
  h = fnv1a(&v, sizeof(v), h);
}

}  // namespace

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t seed) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

bool element_equal(const Element& a, const Element& b, double tolerance) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<std::int64_t>(a)) {
    return std::get<std::int64_t>(a) == std::get<std::int64_t>(b);
  }
  if (std::holds_alternative<std::vector<std::int64_t>>(a)) {
    return std::get<std::vector<std::int64_t>>(a) ==
           std::get<std::vector<std::int64_t>>(b);
  }
  const auto& ma = std::get<MotionElement>(a);
  const auto& mb = std::get<MotionElement>(b);
  return std::abs(ma.z - mb.z) <= tolerance && std::abs(ma.w - mb.w) <= tolerance;
}

bool element_less(const Element& a, const Element& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (std::holds_alternative<std::int64_t>(a)) {
    return std::get<std::int64_t>(a) < std::get<std::int64_t>(b);
  }
  if (std::holds_alternative<std::vector<std::int64_t>>(a)) {
    const auto& va = std::get<std::vector<std::int64_t>>(a);
    const auto& vb = std::get<std::vector<std::int64_t>>(b);
    // center-out: by sup-norm first, then componentwise
    std::int64_t na = 0, nb = 0;
    for (auto x : va) na = std::max(na, std::abs(x));
    for (auto x : vb) nb = std::max(nb, std::abs(x));
    if (na != nb) return na < nb;
    return va < vb;
  }
  const auto& ma = std::get<MotionElement>(a);
  const auto& mb = std::get<MotionElement>(b);
  double na = motion_norm(ma), nb = motion_norm(mb);
  if (na != nb) return na < nb;
  auto key = [](const MotionElement& m) {
    return std::array<double, 4>{m.z.real(), m.z.imag(), m.w.real(),
                                 m.w.imag()};
  };
  return key(ma) < key(mb);
}

std::string format_element(const Element& e) {
  std::ostringstream os;
  os.precision(17);
  if (std::holds_alternative<std::int64_t>(e)) {
    os << std::get<std::int64_t>(e);
  } else if (std::holds_alternative<std::vector<std::int64_t>>(e)) {
    const auto& v = std::get<std::vector<std::int64_t>>(e);
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ", ";
      os << v[i];
    }
    os << ")";
  } else {
    const auto& m = std::get<MotionElement>(e);
    os << "(z=" << m.z.real() << (m.z.imag() < 0 ? "-" : "+")
       << std::abs(m.z.imag()) << "i, w=" << m.w.real()
       << (m.w.imag() < 0 ? "-" : "+") << std::abs(m.w.imag()) << "i)";
  }
  return os.str();
}

std::uint64_t element_hash(const Element& e) {
  std::uint64_t h = 1469598103934665603ull;
  hash_int(h, static_cast<std::int64_t>(e.index()));
  if (std::holds_alternative<std::int64_t>(e)) {
    hash_int(h, std::get<std::int64_t>(e));
  } else if (std::holds_alternative<std::vector<std::int64_t>>(e)) {
    for (auto v : std::get<std::vector<std::int64_t>>(e)) hash_int(h, v);
  } else {
    const auto& m = std::get<MotionElement>(e);
    hash_double(h, m.z.real());
    hash_double(h, m.z.imag());
    hash_double(h, m.w.real());
    hash_double(h, m.w.imag());
  }
  return h;
}

}  // namespace apkit
