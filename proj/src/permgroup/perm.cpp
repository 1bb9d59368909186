#include "pregal/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "pregal/error.hpp"

namespace pregal {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      fail(ErrorKind::InvalidInput, "image array is not a bijection");
    seen[p] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Perm result(degree);
  for (const auto& cycle : cycles) {
    std::vector<bool> seen(degree, false);
    for (Point p : cycle) {
      if (p >= degree)
        fail(ErrorKind::DegreeMismatch,
             "point " + std::to_string(p) + " outside degree " + std::to_string(degree));
      if (seen[p]) fail(ErrorKind::InvalidInput, "repeated point in cycle");
      seen[p] = true;
    }
    if (cycle.size() < 2) continue;
    Perm c(degree);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    result = result * c;
  }
  return result;
}

Perm Perm::operator*(const Perm& rhs) const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Perm Perm::pow(long long e) const {
  Perm base = e < 0 ? inverse() : *this;
  unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  Perm result(degree());
  while (n) {
    if (n & 1) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

Perm Perm::conjugated_by(const Perm& g) const { return g * *this * g.inverse(); }

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, len);
  return result;
}

std::vector<std::vector<Point>> Perm::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    std::vector<Point> cycle;
    for (Point p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> Perm::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (Point p = start; !seen[p]; p = images_[p]) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Perm Perm::extended(std::size_t new_degree, std::size_t offset) const {
  if (offset + degree() > new_degree)
    fail(ErrorKind::DegreeMismatch, "extension does not fit the target degree");
  Perm out(new_degree);
  for (std::size_t i = 0; i < degree(); ++i)
    out.images_[offset + i] = static_cast<Point>(offset + images_[i]);
  return out;
}

std::string Perm::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  // FNV-1a over the image array
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace pregal
