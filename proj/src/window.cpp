#include "nsalg/analysis.hpp"

#include "nsalg/error.hpp"

#include <charconv>

namespace nsalg {

void Window::validate() const {
  if (kmin > kmax) throw Error("invalid window: kmin > kmax in " + str());
  if (margin < 0) throw Error("invalid window: negative margin");
  if (lo() > hi()) throw Error("invalid window: empty interior in " + str());
}

std::string Window::str() const {
  return std::to_string(kmin) + ".." + std::to_string(kmax) + " (margin " + std::to_string(margin) + ")";
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("malformed " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Window Window::parse(std::string_view range, int margin) {
  auto dots = range.find("..");
  if (dots == std::string_view::npos) throw ParseError("window must look like A..B, got '" + std::string(range) + "'");
  Window w{parse_int(range.substr(0, dots), "window bound"), parse_int(range.substr(dots + 2), "window bound"),
           margin};
  w.validate();
  return w;
}

std::vector<BasisKey> interior_keys(const GammaModule& m, const Window& w) {
  std::vector<BasisKey> keys;
  for (int k = w.lo(); k <= w.hi(); ++k) {
    for (int eps = 0; eps < 2; ++eps) {
      if (m.admissible({k, eps})) keys.push_back({k, eps});
    }
  }
  return keys;
}

std::vector<Generator> sweep_generators(AlgebraMode mode, int gen_range) {
  std::vector<Generator> gens;
  for (int d = -2 * gen_range; d <= 2 * gen_range; ++d) {
    Generator g = (d % 2 == 0) ? Generator::L(d / 2) : Generator::G_doubled(d);
    if (g.allowed_in(mode)) gens.push_back(g);
  }
  return gens;
}

}  // namespace nsalg
