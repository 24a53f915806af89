// Independently coded expansions of the transfer outputs. Everything here
// recomputes what the perturbation recursion produces from scratch, so a
// bug in the recursion and a bug in the oracle would have to agree to slip
// through.
#pragma once

#include <map>
#include <vector>

#include "hpt/perturbation.hpp"

namespace hpt_test {

inline void compositions_into(int u, int k, std::vector<int>& cur,
                              std::vector<std::vector<int>>& out) {
  if (k == 1) {
    cur.push_back(u);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = 1; first + (k - 1) <= u; ++first) {
    cur.push_back(first);
    compositions_into(u - first, k - 1, cur, out);
    cur.pop_back();
  }
}

/*
 * Independent description of the perturbed differential's corestriction:
 * with a* / r* the corestrictions of the perturbed inclusion / projection
 * and b_s the suspended operations upstairs,
 *
 *   out(u) = sum r*_{k-s+1} . (1^{(x)n} (x) b_s (x) 1^{(x)m}) . (a*_{i_1} (x) ... (x) a*_{i_k})
 *
 * over all k, compositions i_1 + ... + i_k = u and n + s + m = k. Evaluation
 * signs come from the tensor calculus alone.
 */
inline hpt::GradedMap decomposition_corestriction(const hpt::TransferResult& res, int u) {
  using namespace hpt;
  const BarContextPtr& big = res.big_ctx;
  const BarContextPtr& small = res.small_ctx;
  const std::map<int, GradedMap> aco = corestriction(res.bar_alpha);
  const std::map<int, GradedMap> rco = corestriction(res.bar_r);
  const std::map<int, GradedMap> bco = corestriction(res.b_big);
  GradedMap one = GradedMap::identity(big->power(1));

  GradedMap acc(small->power(u), small->power(1), {1, 0});
  for (int k = 1; k <= u; ++k) {
    std::vector<std::vector<int>> comps;
    std::vector<int> cur;
    compositions_into(u, k, cur, comps);
    for (const std::vector<int>& comp : comps) {
      std::vector<const GradedMap*> inc;
      for (int part : comp) {
        auto it = aco.find(part);
        if (it == aco.end()) break;
        inc.push_back(&it->second);
      }
      if (static_cast<int>(inc.size()) != k) continue;
      GradedMap in_map = tensor_of_maps(inc, small->power(u), big->power(k));
      for (int s = 1; s <= k; ++s) {
        auto bit = bco.find(s);
        auto rit = rco.find(k - s + 1);
        if (bit == bco.end() || rit == rco.end()) continue;
        for (int n = 0; n + s <= k; ++n) {
          std::vector<const GradedMap*> mid(static_cast<size_t>(n), &one);
          mid.push_back(&bit->second);
          mid.insert(mid.end(), static_cast<size_t>(k - s - n), &one);
          GradedMap middle = tensor_of_maps(mid, big->power(k), big->power(k - s + 1));
          acc = map_add(acc, compose(rit->second, compose(middle, in_map)));
        }
      }
    }
  }
  return acc;
}

/*
 * The transfer recursion unrolled by hand through arity three, as tree
 * sums. Outputs are the (u -> 1) corestriction blocks of the transferred
 * coderivation table:
 *
 *   arity 2:  S(r) . b_2 . (S(alpha) (x) S(alpha))
 *   arity 3:  S(r) . sigma(3->1) . (S(alpha) (x) S(alpha) (x) S(alpha)),
 *
 *   sigma(3->1) = b_3 - b_2 . (S(h) (x) S(alpha.r) + 1 (x) S(h))
 *                       . (b_2 (x) 1 + 1 (x) b_2),
 *
 * the lone minus sign coming from the homotopy factor. For a strict algebra
 * upstairs b_3 = 0 and this is the familiar two-tree expansion.
 */
inline hpt::GradedMap tree_corestriction_oracle(const hpt::TransferResult& res,
                                                const hpt::Contraction& c, int u) {
  using namespace hpt;
  const BarContextPtr& big = res.big_ctx;
  const BarContextPtr& small = res.small_ctx;
  const std::map<int, GradedMap> bco = corestriction(res.b_big);

  GradedMap sa = suspend_multilinear(small, big, c.alpha(), 1);
  GradedMap sr = suspend_multilinear(big, small, c.r(), 1);
  GradedMap sigma(big->power(u), big->power(1), {1, 0});
  if (u == 2) {
    if (bco.count(2)) sigma = map_add(sigma, bco.at(2));
  } else if (u == 3) {
    if (bco.count(3)) sigma = map_add(sigma, bco.at(3));
    if (bco.count(2)) {
      const GradedMap& b2 = bco.at(2);
      GradedMap sh = suspend_multilinear(big, big, c.h(), 1);
      GradedMap sar = compose(big->s(), compose(compose(c.alpha(), c.r()), big->s_inv()));
      GradedMap one = GradedMap::identity(big->power(1));
      std::vector<const GradedMap*> hs1{&sh, &sar}, hs2{&one, &sh};
      GradedMap mid = map_add(tensor_of_maps(hs1, big->power(2), big->power(2)),
                              tensor_of_maps(hs2, big->power(2), big->power(2)));
      std::vector<const GradedMap*> t1{&b2, &one}, t2{&one, &b2};
      GradedMap lower = map_add(tensor_of_maps(t1, big->power(3), big->power(2)),
                                tensor_of_maps(t2, big->power(3), big->power(2)));
      sigma = map_sub(sigma, compose(b2, compose(mid, lower)));
    }
  }

  std::vector<const GradedMap*> as(static_cast<size_t>(u), &sa);
  return compose(sr, compose(sigma, tensor_of_maps(as, small->power(u), big->power(u))));
}

/* The transferred product on the nose: m_2 = r . m_2^big . (alpha (x) alpha). */
inline hpt::GradedMap transferred_product_oracle(const hpt::TransferResult& res,
                                                 const hpt::Contraction& c,
                                                 const hpt::GradedMap& product) {
  using namespace hpt;
  const GradedMap& al = c.alpha();
  std::vector<const GradedMap*> aa{&al, &al};
  return compose(c.r(), compose(product, tensor_of_maps(aa, res.small_ctx->base_power(2),
                                                        res.big_ctx->base_power(2))));
}

}  // namespace hpt_test
