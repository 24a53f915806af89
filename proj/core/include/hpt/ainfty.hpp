#pragma once

#include "hpt/bar.hpp"
#include "hpt/homology.hpp"

namespace hpt {

/**
 * Transport of an arity-i map across the suspension:
 *
 *   f : C^{(x)i} -> D  of total degree k
 *     |->  (-1)^{k+i-1+i(i-1)/2}  s_D . f . (s_C^{-1})^{(x)i} : (SC)^{(x)i} -> SD,
 *
 * and back via b |-> (-1)^{k'} s_D^{-1} . b . (s_C)^{(x)i} for a map of
 * total degree k' on the suspended side; the i(i-1)/2 is the Koszul cost of
 * cancelling (s^{-1})^{(x)i} against s^{(x)i}, placed so that the two maps
 * are mutually inverse. Operations m_n of total degree 2-n land at total
 * degree 1 uniformly, which is what makes a single-degree coderivation
 * table possible, and this choice of twist is the one for which the
 * sign-free square of the coderivation table reproduces the (-1)^{r+st}
 * defects below with no leftover factor.
 */
GradedMap suspend_multilinear(const BarContextPtr& source, const BarContextPtr& target,
                              const GradedMap& f, int arity);
GradedMap desuspend_multilinear(const BarContextPtr& source, const BarContextPtr& target,
                                const GradedMap& b, int arity);

/**
 * An A-infinity structure in operation form on the base complex of a
 * context: ops[n] : C^{(x)n} -> C of bidegree (2-n, 0), 1 <= n <= the
 * truncation arity, with m_1 equal to the differential (filled in when
 * omitted). Construction validates shapes only; whether the structure
 * identities hold is a separate question answered by stasheff_defect and
 * is_ainfty, because measuring their failure exactly is the point.
 */
class AInfinityStructure {
public:
  AInfinityStructure(BarContextPtr ctx, std::map<int, GradedMap> ops);

  const BarContextPtr& context() const { return ctx_; }
  const Complex& complex() const { return ctx_->base(); }
  int max_arity() const { return ctx_->max_arity(); }
  /** Operation m_n; nullptr when zero. */
  const GradedMap* op(int n) const;
  /** Nonzero operations only, keyed by arity. */
  const std::map<int, GradedMap>& ops() const { return ops_; }

  bool operator==(const AInfinityStructure& o) const {
    return same_context(ctx_, o.ctx_) && ops_ == o.ops_;
  }
  bool operator!=(const AInfinityStructure& o) const { return !(*this == o); }

private:
  BarContextPtr ctx_;
  std::map<int, GradedMap> ops_;
};

/**
 * Wrap an associative product satisfying the Leibniz rule as the structure
 * {m_1 = d, m_2 = product}. Throws naming a failing basis input otherwise.
 */
AInfinityStructure from_dga(const BarContextPtr& ctx, const GradedMap& product);

/**
 * The arity-n structure defect
 *
 *   sum_{r+s+t=n} (-1)^{r+st} m_{r+1+t} . (1^{(x)r} (x) m_s (x) 1^{(x)t}),
 *
 * a map C^{(x)n} -> C of bidegree (3-n, 0); the structure is an A-infinity
 * algebra up to the truncation iff every defect vanishes. At n = 2 this is
 * the failure of m_1 to derive m_2, at n = 3 associativity up to the
 * homotopy m_3.
 */
GradedMap stasheff_defect(const AInfinityStructure& A, int n);

/** All defects up to the truncation arity vanish. */
bool is_ainfty(const AInfinityStructure& A);

/**
 * The coderivation with components suspend_multilinear(m_n), total degree 1.
 * Its square is the coderivation whose corestriction at arity n is the
 * suspension of the n-th defect, on the nose, so it vanishes iff is_ainfty.
 */
BarMap bar_differential(const AInfinityStructure& A);

/** Inverse of bar_differential: desuspend the corestriction of a degree-1
    coderivation table back to operation form. */
AInfinityStructure from_bar_differential(const BarMap& b);

/** F is a morphism of A-infinity algebras: a coalgebra-morphism table with
    F . b_A = b_B . F. */
bool is_ainfty_morphism(const AInfinityStructure& A, const AInfinityStructure& B, const BarMap& F);

/**
 * Triple product in homology. For cocycles x, y, z with [x][y] = [y][z] = 0,
 * pick d(u) = xy and d(v) = yz; the cocycle x v - (-1)^{|x|} u z represents
 * the triple product, well defined modulo [x] H + H [z]. Only membership
 * data is reported; no sign convention for the class itself is asserted.
 */
struct MasseyResult {
  bool defined = false;  // both pairwise products bound
  int degree = 0, weight = 0;
  Vec representative;
  std::vector<Scalar> coords;        // class in the homology basis at (degree, weight)
  int indeterminacy_dim = 0;         // rank of [x] H + H [z] there
  bool nonzero_mod_indeterminacy = false;
};

MasseyResult massey_triple(const HomologySolver& solver, const GradedMap& product, const Vec& x,
                           const Vec& y, const Vec& z);

}  // namespace hpt
