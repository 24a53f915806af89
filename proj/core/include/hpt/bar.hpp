#pragma once

#include <map>

#include "hpt/complex.hpp"

namespace hpt {

/**
 * Workspace for one (truncated) reduced tensor coalgebra: the suspension SC
 * of a complex, its structure maps s / s^{-1}, and the cached tensor powers
 * (SC)^{(x) j} and C^{(x) j} for j = 1..max_arity. Contexts are immutable
 * and shared; two contexts agree when their base complexes and truncations
 * do.
 */
class BarContext {
public:
  BarContext(Complex base, int max_arity);

  const Complex& base() const { return base_; }
  int max_arity() const { return max_arity_; }
  const Complex& suspended() const { return susp_.complex; }
  const GradedMap& s() const { return susp_.s; }
  const GradedMap& s_inv() const { return susp_.s_inv; }
  /** (SC)^{(x) j}, 1 <= j <= max_arity; power(1) is the suspended space itself. */
  const SpacePtr& power(int j) const;
  /** C^{(x) j} over the unsuspended base. */
  const SpacePtr& base_power(int j) const;

  bool operator==(const BarContext& o) const;
  bool operator!=(const BarContext& o) const { return !(*this == o); }

private:
  Complex base_;
  int max_arity_;
  Suspension susp_;
  std::vector<SpacePtr> powers_, base_powers_;
};

using BarContextPtr = std::shared_ptr<const BarContext>;
BarContextPtr make_bar_context(Complex base, int max_arity);

inline bool same_context(const BarContextPtr& a, const BarContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

/**
 * A map between truncated bar constructions, stored as a table of blocks:
 * block (j -> k) maps (S src)^{(x) j} to (S tgt)^{(x) k}. Absent blocks are
 * zero and stored blocks are nonzero, so equal tables mean equal maps. All
 * blocks share one total degree.
 */
class BarMap {
public:
  BarMap(BarContextPtr source, BarContextPtr target, int total_degree);
  static BarMap identity(const BarContextPtr& ctx);

  const BarContextPtr& source() const { return source_; }
  const BarContextPtr& target() const { return target_; }
  int total_degree() const { return total_degree_; }

  /** Block (j -> k); nullptr when zero. */
  const GradedMap* block(int j, int k) const;
  /** Install a block; zero maps erase. Shapes and degree are validated. */
  void set_block(int j, int k, GradedMap m);
  void add_block(int j, int k, const GradedMap& m);
  const std::map<std::pair<int, int>, GradedMap>& blocks() const { return blocks_; }

  bool is_zero() const { return blocks_.empty(); }
  long nnz() const;
  bool operator==(const BarMap& o) const;
  bool operator!=(const BarMap& o) const { return !(*this == o); }

private:
  BarContextPtr source_, target_;
  int total_degree_;
  std::map<std::pair<int, int>, GradedMap> blocks_;
};

BarMap bar_add(const BarMap& f, const BarMap& g);
BarMap bar_sub(const BarMap& f, const BarMap& g);
BarMap bar_neg(const BarMap& f);
/** f after g; blocks compose through every middle arity. */
BarMap compose_bar(const BarMap& f, const BarMap& g);

/**
 * Hom differential for bar maps: b_src and b_tgt are degree-1 endomorphisms
 * of u's source and target contexts, and
 *
 *   delta(u) = b_tgt . u + (-1)^{k+1} u . b_src,    k = total degree of u,
 *
 * matching the hom-complex differential one level down.
 */
BarMap bar_delta(const BarMap& b_src, const BarMap& b_tgt, const BarMap& u);

/**
 * The unique coderivation with the given corestriction: components[s] maps
 * (SC)^{(x) s} -> SC, all of the given total degree, and block (j -> u),
 * u = j - s + 1, sums 1^{(x) r} (x) b_s (x) 1^{(x) t} over r + s + t = j.
 * No signs appear beyond the Koszul signs of tensor evaluation.
 */
BarMap lift_coderivation(const BarContextPtr& ctx, const std::map<int, GradedMap>& components,
                         int total_degree);

/**
 * The coalgebra-morphism lift of bidegree-(0,0) components: block (j -> k)
 * sums f_{i_1} (x) ... (x) f_{i_k} over compositions i_1 + ... + i_k = j.
 */
BarMap lift_morphism(const BarContextPtr& source, const BarContextPtr& target,
                     const std::map<int, GradedMap>& components);

/** Blocks (j -> 1) as a component table. */
std::map<int, GradedMap> corestriction(const BarMap& f);

/** True iff f equals the coderivation lift of its own corestriction. */
bool is_coderivation(const BarMap& f);
/** True iff f has degree 0 and equals the morphism lift of its corestriction. */
bool is_coalgebra_morphism(const BarMap& f);

}  // namespace hpt
