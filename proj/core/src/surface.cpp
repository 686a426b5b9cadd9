#include "skein/surface.hpp"

#include <algorithm>
#include <cctype>

#include "skein/error.hpp"

namespace skein {

Surface Surface::sphere(int punctures) {
  if (punctures == 4) return sphere4();
  if (punctures < 0 || punctures > 4) {
    throw SkeinError(ErrorCode::InvalidArgument,
                     "sphere puncture count must be in 0..4, got " + std::to_string(punctures));
  }
  return {SurfaceKind::SphereK, punctures};
}

std::vector<std::string> Surface::puncture_names() const {
  switch (kind) {
    case SurfaceKind::Torus1: return {"P"};
    case SurfaceKind::Torus0: return {};
    case SurfaceKind::Sphere4: return {"P0", "P1", "P2", "P3"};
    case SurfaceKind::SphereK: {
      std::vector<std::string> out;
      for (int i = 1; i <= k; ++i) out.push_back("P" + std::to_string(i));
      return out;
    }
  }
  return {};
}

std::vector<std::string> Surface::generator_names() const {
  std::vector<std::string> out;
  if (has_x_generators()) out = {"X1", "X2", "X3"};
  for (auto& p : puncture_names()) out.push_back(std::move(p));
  return out;
}

std::string to_string(const Surface& s) {
  switch (s.kind) {
    case SurfaceKind::Torus1: return "Torus1";
    case SurfaceKind::Torus0: return "Torus0";
    case SurfaceKind::Sphere4: return "Sphere4";
    case SurfaceKind::SphereK: return "Sphere" + std::to_string(s.k);
  }
  return "?";
}

Surface parse_surface(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "torus1" || lower == "torus") return Surface::torus1();
  if (lower == "torus0") return Surface::torus0();
  if (lower.size() == 7 && lower.rfind("sphere", 0) == 0 && lower[6] >= '0' && lower[6] <= '4') {
    return Surface::sphere(lower[6] - '0');
  }
  throw SkeinError(ErrorCode::InvalidArgument,
                   "unknown surface '" + std::string(text) +
                       "' (expected torus1, torus0, sphere4 or sphere0..sphere3)");
}

}  // namespace skein
