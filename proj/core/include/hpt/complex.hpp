#pragma once

#include "hpt/graded_map.hpp"

namespace hpt {

/**
 * A bigraded cochain complex: d has bidegree (1, 0) (degree +1, weight
 * preserving) and squares to zero. Both facts are enforced at construction.
 */
struct Complex {
  SpacePtr space;
  GradedMap d;
};

Complex make_complex(SpacePtr space, GradedMap d);
/** Complex with zero differential. */
Complex zero_complex(SpacePtr space);

/**
 * Differential of the hom-complex,
 *
 *   delta(u) = d_tgt . u + (-1)^{k+1} u . d_src,    k = total degree of u,
 *
 * so closed degree-(0,0) maps are chain maps, and delta(H) for a degree -1
 * homotopy H is d.H + H.d.
 */
GradedMap map_differential(const Complex& src, const Complex& tgt, const GradedMap& u);
inline GradedMap delta(const Complex& src, const Complex& tgt, const GradedMap& u) {
  return map_differential(src, tgt, u);
}
bool is_closed(const Complex& src, const Complex& tgt, const GradedMap& u);

/** Tensor complex: d = d (x) 1 + 1 (x) d, the Koszul sign handled by tensor_of_maps. */
Complex tensor_complex(const Complex& a, const Complex& b);
/** n-fold tensor power of a complex; the arity-1 power is the complex itself. */
Complex power_complex(const Complex& a, int n);

/**
 * Suspension: (SC)^i(n) = C^{i+1}(n) with d_SC = -s d s^{-1}. The structure
 * map s is the identity on components, closed of bidegree (-1, 0).
 */
struct Suspension {
  Complex complex;
  GradedMap s;      // C -> SC
  GradedMap s_inv;  // SC -> C
};
Suspension suspend(const Complex& c);

}  // namespace hpt
