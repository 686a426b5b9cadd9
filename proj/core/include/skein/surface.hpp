#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace skein {

enum class SurfaceKind { Torus1, Torus0, Sphere4, SphereK };

/// Which presentation an expression or representation belongs to.
///
///   Torus1   one-punctured torus: X1, X2, X3 and the puncture loop P
///   Torus0   closed torus: X1, X2, X3
///   Sphere4  four-punctured sphere: X1, X2, X3 and central P0..P3
///   SphereK  sphere with k <= 3 punctures: central P1..Pk only
struct Surface {
  SurfaceKind kind = SurfaceKind::Torus1;
  int k = 0;  // puncture count, SphereK only

  static Surface torus1() { return {SurfaceKind::Torus1, 0}; }
  static Surface torus0() { return {SurfaceKind::Torus0, 0}; }
  static Surface sphere4() { return {SurfaceKind::Sphere4, 0}; }
  static Surface sphere(int punctures);

  bool has_x_generators() const { return kind != SurfaceKind::SphereK; }
  bool is_torus() const { return kind == SurfaceKind::Torus1 || kind == SurfaceKind::Torus0; }
  std::vector<std::string> puncture_names() const;
  /// X generators first, then punctures.
  std::vector<std::string> generator_names() const;

  friend bool operator==(const Surface&, const Surface&) = default;
};

/// "Torus1", "Torus0", "Sphere4", or "Sphere<k>" for k <= 3.
std::string to_string(const Surface& s);
/// Case-insensitive inverse of to_string.
Surface parse_surface(std::string_view text);

}  // namespace skein
