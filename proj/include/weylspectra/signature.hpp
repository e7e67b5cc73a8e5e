#pragma once

#include <weylspectra/errors.hpp>

namespace weylspectra {

/// Signature (p,q) of a non-degenerate symmetric bilinear form on R^m,
/// m = p + q: p timelike directions (g(v,v) < 0) and q spacelike directions
/// (g(v,v) > 0).  Dimension must be at least 3; Lorentzian means p == 1.
struct Signature {
  int p;
  int q;

  Signature(int timelike, int spacelike) : p(timelike), q(spacelike) {
    if (p < 0 || q < 0) throw InvalidArgument("signature counts must be non-negative");
    if (dim() < 3) throw InvalidArgument("dimension p+q must be at least 3");
  }

  int dim() const { return p + q; }
  bool riemannian() const { return p == 0; }
  bool lorentzian() const { return p == 1; }

  static Signature euclidean(int m) { return {0, m}; }
  static Signature neutral(int half) { return {half, half}; }

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Causal class of a vector: sign of g(v,v) up to the null tolerance.
enum class CausalType { Spacelike, Timelike, Null };

inline const char* to_string(CausalType t) {
  switch (t) {
    case CausalType::Spacelike: return "spacelike";
    case CausalType::Timelike: return "timelike";
    case CausalType::Null: return "null";
  }
  return "?";
}

}  // namespace weylspectra
