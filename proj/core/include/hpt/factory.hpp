#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "hpt/perturbation.hpp"

namespace hpt {

/**
 * A finite simplicial complex by generating faces: vertex labels in a fixed
 * order and facets as strictly increasing lists of vertex indices. The face
 * closure is computed, so lower faces need not be listed.
 */
struct SimplicialComplexDescription {
  std::vector<std::string> vertices;
  std::vector<std::vector<int>> facets;
};

SimplicialComplexDescription interval_description();  // two vertices, one edge
SimplicialComplexDescription circle_description();    // hollow triangle
SimplicialComplexDescription torus_description();     // 9-vertex, 18-triangle grid

/** A complex together with a closed, unital, strictly associative product. */
struct DgAlgebra {
  Complex complex;
  GradedMap product;  // complex^(x)2 -> complex, bidegree (0, 0)
  Vec unit;
};

/**
 * Simplicial cochains over F, concentrated in weight 0: degree = simplex
 * dimension, d = the alternating-sum coboundary, product = the front/back
 * face cup product, unit = the sum of the vertex duals. Closedness,
 * associativity and unitality of the product are asserted before returning
 * rather than trusted. Throws on malformed facet lists.
 */
DgAlgebra cochain_dga(const SimplicialComplexDescription& K, const Field& F);

/**
 * Truncated algebra on one generator g of the given bidegree: basis
 * 1, g, ..., g^top with g^i.g^j = g^{i+j}, zero past the truncation; zero
 * differential. One-sided powers keep the truncation ideal two-sided, which
 * is what makes the quotient associative. Nonzero weight makes the Koszul
 * signs bite.
 */
DgAlgebra truncated_polynomial_dga(const Field& F, int degree, int weight, int top);

/** Tensor product of algebras, (a(x)b).(a2(x)b2) = +-(a.a2)(x)(b.b2) with
    the Koszul sign on |b| |a2|. */
DgAlgebra dga_tensor(const DgAlgebra& a, const DgAlgebra& b);

/**
 * Contraction of c onto a zero-differential complex of graded dimension
 * equal to its homology, by iterated single-entry pivots: pick the first
 * basis element (lowest degree, then weight, then index) with d(a) != 0,
 * pivot on the lowest-index entry of d(a), eliminate the pair, and compose
 * the one-step retractions. Each step satisfies the side conditions and
 * composition preserves them, so the result validates as a Contraction.
 */
Contraction gaussian_contraction(const Complex& c);

/**
 * The smallest instance this library ships whose triple product is forced:
 * nine basis elements, with degree-1 cocycles x, y, z whose pairwise
 * products x.y and y.z bound, while x.v (v the bounding element of y.z)
 * lands on a permanent degree-2 class. The triple product <x, y, z> is that
 * class, with zero indeterminacy.
 */
struct MasseyInstance {
  DgAlgebra dga;
  Vec x, y, z;
};
MasseyInstance massey_instance(const Field& F);

/**
 * Deterministic randomized instances: a complex with weights in
 * [wmin, wmax], an optional product (always associative and unital when
 * present; drawn from cochain algebras, truncated polynomial algebras and
 * their tensor products, capped at max_dim), and a Gaussian-elimination
 * contraction onto its homology. Equal seeds give equal suites.
 */
struct SuiteInstance {
  Complex complex;
  std::optional<GradedMap> product;
  std::optional<Vec> unit;
  Contraction contraction;
};
std::vector<SuiteInstance> random_suite(std::uint64_t seed, int count, int max_dim, int wmin,
                                        int wmax, const Field& F);

/**
 * The same underlying SDR with the homotopy replaced by h + delta(w) for a
 * random bidegree-(-2, 0) map w: delta of the hom-complex squares to zero,
 * so the four SDR identities survive on the nose while the side conditions
 * generically break. Raw material for the repair path.
 */
SdrDatum noised_sdr(std::mt19937_64& rng, const Contraction& c);

}  // namespace hpt
