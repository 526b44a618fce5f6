#pragma once

// Descriptors for the free homology models the engine computes in:
// sphere(n) for QS^n (one generator g_n, n >= 1), sphere_zero for the
// base component of QS^0 (one generator of degree 0), and
// stunted(k0, m) for a suspended stunted projective spectrum with
// generators a_k, k >= k0, of degree k + m. A finite loop bound L
// restricts lower operation indices to 0 < a <= L-1; absent bound means
// the stable (infinite loop) model.

#include <optional>
#include <stdexcept>
#include <string>

namespace qops {

enum class ModelKind { sphere, sphere_zero, stunted };

struct Model {
  ModelKind kind = ModelKind::sphere;
  int dim = 0;     // sphere: generator dimension n
  int bottom = 0;  // stunted: bottom index k0
  int shift = 0;   // stunted: suspension shift m
  std::optional<long> loop_bound;

  static Model sphere(int n, std::optional<long> bound = std::nullopt) {
    if (n < 1) throw std::invalid_argument("sphere model needs dimension >= 1");
    if (bound && *bound < 1) throw std::invalid_argument("loop bound must be >= 1");
    Model m;
    m.kind = ModelKind::sphere;
    m.dim = n;
    m.loop_bound = bound;
    return m;
  }

  static Model sphere_zero() {
    Model m;
    m.kind = ModelKind::sphere_zero;
    return m;
  }

  static Model stunted(int k0, int shift_m,
                       std::optional<long> bound = std::nullopt) {
    if (k0 < 1) throw std::invalid_argument("stunted model needs bottom index >= 1");
    Model m;
    m.kind = ModelKind::stunted;
    m.bottom = k0;
    m.shift = shift_m;
    m.loop_bound = bound;
    return m;
  }

  bool stable() const { return !loop_bound.has_value(); }

  // Generator ids: sphere kinds have the single id dim (0 for
  // sphere_zero); stunted uses the index k >= bottom.
  int base_generator() const {
    switch (kind) {
      case ModelKind::sphere: return dim;
      case ModelKind::sphere_zero: return 0;
      case ModelKind::stunted: return bottom;
    }
    return 0;
  }

  long generator_dim(int gen) const {
    switch (kind) {
      case ModelKind::sphere:
        if (gen != dim) throw std::invalid_argument("unknown sphere generator");
        return dim;
      case ModelKind::sphere_zero:
        if (gen != 0) throw std::invalid_argument("unknown sphere_zero generator");
        return 0;
      case ModelKind::stunted:
        if (gen < bottom) throw std::invalid_argument("generator below bottom index");
        return gen + shift;
    }
    return 0;
  }

  std::string describe() const;

  bool operator==(const Model&) const = default;
};

// Parses "sphere:3", "sphere:3:bound=5", "sphere_zero", "stunted:13,-10".
Model parse_model(const std::string& text);

}  // namespace qops
