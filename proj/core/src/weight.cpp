#include "weylface/weight.hpp"

#include <algorithm>
#include <sstream>

#include "weylface/errors.hpp"

namespace weylface {

namespace {

void require_same_length(const Weight& a, const Weight& b, const char* what) {
  if (a.size() != b.size()) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << a.size() << " vs " << b.size()
        << ")";
    throw DimensionMismatch(msg.str());
  }
}

}  // namespace

bool Weight::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](Coord c) { return c == 0; });
}

Coord pairing(const Weight& mu, const Weight& h) {
  require_same_length(mu, h, "pairing");
  Coord sum = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) sum += mu[i] * h[i];
  return sum;
}

Weight operator+(const Weight& a, const Weight& b) {
  require_same_length(a, b, "operator+");
  std::vector<Coord> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return Weight(std::move(out));
}

Weight operator-(const Weight& a, const Weight& b) {
  require_same_length(a, b, "operator-");
  std::vector<Coord> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return Weight(std::move(out));
}

Weight operator-(const Weight& a) {
  std::vector<Coord> out(a.begin(), a.end());
  for (auto& c : out) c = -c;
  return Weight(std::move(out));
}

Weight operator*(Coord factor, const Weight& a) {
  std::vector<Coord> out(a.begin(), a.end());
  for (auto& c : out) c *= factor;
  return Weight(std::move(out));
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  out += ')';
  return out;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  // FNV-1a over the coordinates.
  std::size_t h = 1469598103934665603ull;
  for (Coord c : w) {
    h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace weylface
