#pragma once

#include <random>

#include "hpt/complex.hpp"

/* Small deterministic generators for property tests. Complexes are built as
   a direct sum of matched differential pairs and singletons, then conjugated
   by a random unipotent bidegree-(0,0) change of basis, so d.d = 0 holds by
   construction and homology is known by count. */
namespace hpt_test {

using namespace hpt;

inline int rand_in(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline Complex random_complex(std::mt19937_64& rng, const Field& F, int max_dim,
                              int wmin, int wmax, int dmin = 0, int dmax = 3) {
  const int dim = rand_in(rng, 0, max_dim);
  std::vector<BasisElement> basis;
  for (int i = 0; i < dim; ++i)
    basis.push_back({"e" + std::to_string(i), rand_in(rng, dmin, dmax), rand_in(rng, wmin, wmax)});
  SpacePtr space = make_space(F, basis);

  GradedMap d0(space, space, {1, 0});
  std::vector<bool> used(dim, false);
  for (int a = 0; a < dim; ++a) {
    if (used[a] || rng() % 3 == 0) continue;
    for (int b = 0; b < dim; ++b) {
      if (used[b] || b == a) continue;
      if (basis[b].degree == basis[a].degree + 1 && basis[b].weight == basis[a].weight) {
        d0.add_term(a, b, F.from_int(rand_in(rng, 1, 3)));
        used[a] = used[b] = true;
        break;
      }
    }
  }

  /* unipotent change of basis g = 1 + E, E nilpotent within each bidegree */
  GradedMap e(space, space, {0, 0});
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (basis[i].degree == basis[j].degree && basis[i].weight == basis[j].weight &&
          rng() % 2 == 0)
        e.add_term(i, j, F.from_int(rand_in(rng, -2, 2)));
  GradedMap id = GradedMap::identity(space);
  GradedMap g = map_add(id, e);
  GradedMap g_inv = id;
  GradedMap power = e;
  int sign = -1;
  for (int k = 1; k <= dim && !power.is_zero(); ++k) {
    g_inv = sign < 0 ? map_sub(g_inv, power) : map_add(g_inv, power);
    power = compose(power, e);
    sign = -sign;
  }
  return make_complex(space, compose(g_inv, compose(d0, g)));
}

inline GradedMap random_map(std::mt19937_64& rng, const SpacePtr& src, const SpacePtr& tgt,
                            Bidegree bd, int density_pct = 60) {
  const Field& F = src->field();
  GradedMap u(src, tgt, bd);
  for (int i = 0; i < src->dim(); ++i) {
    const BasisElement& s = src->at(i);
    for (int j : tgt->indices_at(s.degree + bd.r, s.weight - bd.s))
      if (static_cast<int>(rng() % 100) < density_pct) {
        int c = rand_in(rng, -2, 2);
        if (c) u.add_term(i, j, F.from_int(c));
      }
  }
  return u;
}

/* A random bidegree whose lane is plausibly populated. */
inline Bidegree random_bidegree(std::mt19937_64& rng) {
  return {rand_in(rng, -2, 2), rand_in(rng, -1, 1)};
}

}  // namespace hpt_test
