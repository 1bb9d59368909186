#include "pregal/bounds.hpp"

#include <cstdlib>
#include <string>

namespace pregal {

namespace {

Bounds initial_bounds() {
  Bounds b;
  if (const char* env = std::getenv("PREGAL_MAX_ELEMENTS")) {
    try {
      auto v = std::stoull(env);
      if (v > 0) b.max_elements = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // malformed override: keep the default
    }
  }
  return b;
}

Bounds& mutable_bounds() {
  static Bounds b = initial_bounds();
  return b;
}

}  // namespace

const Bounds& bounds() { return mutable_bounds(); }

void set_bounds(const Bounds& b) { mutable_bounds() = b; }

}  // namespace pregal
