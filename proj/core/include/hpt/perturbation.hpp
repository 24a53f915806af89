#pragma once

#include <string>
#include <vector>

#include "hpt/ainfty.hpp"

namespace hpt {

/**
 * Strong-deformation-retract data exhibiting `small` as a retract of `big`:
 * alpha includes, r projects, h is the homotopy on the big side.
 *
 *   alpha : small -> big   closed, bidegree (0, 0)
 *   r     : big -> small   closed, bidegree (0, 0),   r . alpha = 1
 *   h     : big -> big     bidegree (-1, 0),          d.h + h.d = 1 - alpha.r
 *
 * The struct itself enforces nothing; check_sdr measures every identity.
 */
struct SdrDatum {
  Complex big;
  Complex small;
  GradedMap alpha;
  GradedMap r;
  GradedMap h;
};

/**
 * Defect sizes (nonzero entry counts) for each SDR identity; -1 means the
 * identity was not evaluated because the shapes already fail. Zero defects
 * mean the identity holds exactly.
 */
struct SdrReport {
  std::string shape_error;  // empty when all sources/targets/bidegrees line up
  long alpha_closed = -1;   // nnz of delta(alpha)
  long r_closed = -1;       // nnz of delta(r)
  long retract = -1;        // nnz of r.alpha - 1
  long homotopy = -1;       // nnz of d.h + h.d - (1 - alpha.r)
  long h_alpha = -1;        // nnz of h.alpha      (side condition)
  long r_h = -1;            // nnz of r.h          (side condition)
  long h_h = -1;            // nnz of h.h          (side condition)

  bool sdr_ok() const {
    return shape_error.empty() && alpha_closed == 0 && r_closed == 0 && retract == 0 &&
           homotopy == 0;
  }
  bool contraction_ok() const { return sdr_ok() && h_alpha == 0 && r_h == 0 && h_h == 0; }
};

SdrReport check_sdr(const SdrDatum& datum);

/**
 * An SdrDatum whose side conditions h.alpha = 0, r.h = 0, h.h = 0 have been
 * verified on construction; the only way in is make_contraction or
 * repair_to_contraction, so holding one is proof the checks passed.
 */
class Contraction {
public:
  const SdrDatum& datum() const { return datum_; }
  const Complex& big() const { return datum_.big; }
  const Complex& small() const { return datum_.small; }
  const GradedMap& alpha() const { return datum_.alpha; }
  const GradedMap& r() const { return datum_.r; }
  const GradedMap& h() const { return datum_.h; }

private:
  explicit Contraction(SdrDatum d) : datum_(std::move(d)) {}
  SdrDatum datum_;
  friend Contraction make_contraction(SdrDatum datum);
};

/** Validates all seven identities; throws naming the first failure. */
Contraction make_contraction(SdrDatum datum);

/** The identity contraction of a complex: alpha = r = 1, h = 0. */
Contraction identity_contraction(const Complex& c);

/**
 * Replace the homotopy of a valid SDR so the side conditions hold:
 * h' = delta(h).h.delta(h) annihilates alpha and r, then h'' = h'.d.h'
 * also squares to zero. Every identity of the result is re-verified,
 * including delta(h'') = 1 - alpha.r, which is a theorem but never assumed
 * here. Throws if the input fails check_sdr.
 */
Contraction repair_to_contraction(const SdrDatum& datum);

/**
 * The induced homotopy on the truncated bar construction of the big
 * complex: block (n -> n) is
 *
 *   sum_{i=1}^{n} 1^{(x)i-1} (x) S(h) (x) (S(alpha).S(r))^{(x)n-i},
 *
 * with S the arity-1 suspension transport. Total degree -1. Together with
 * the block-diagonal morphism lifts of S(alpha), S(r) this is again a
 * contraction of the bar complexes equipped with the tensor differential.
 */
BarMap bar_homotopy(const Contraction& c, const BarContextPtr& big_ctx);

/** Block-diagonal coalgebra-morphism lifts of the contraction's chain maps. */
BarMap bar_inclusion(const Contraction& c, const BarContextPtr& small_ctx,
                     const BarContextPtr& big_ctx);
BarMap bar_projection(const Contraction& c, const BarContextPtr& big_ctx,
                      const BarContextPtr& small_ctx);

/**
 * Everything the perturbation recursion produces at one truncation arity:
 * the structure transferred to the small complex, the perturbed inclusion /
 * projection / homotopy on the bar side, their desuspended component
 * families, and the accumulated recursion sum itself.
 */
struct TransferResult {
  BarContextPtr big_ctx;    // bar workspace of the big complex
  BarContextPtr small_ctx;  // bar workspace of the small complex

  AInfinityStructure transferred;  // structure on the small complex
  BarMap b_small;                  // its coderivation table (degree 1)
  BarMap b_big;                    // coderivation table of the input structure

  BarMap bar_alpha;  // perturbed inclusion  B(small) -> B(big), degree 0
  BarMap bar_r;      // perturbed projection B(big) -> B(small), degree 0
  BarMap bar_h;      // perturbed homotopy on B(big), degree -1

  std::map<int, GradedMap> alpha_components;  // desuspended: small^(x)n -> big, bidegree (1-n, 0)
  std::map<int, GradedMap> r_components;      // desuspended: big^(x)n -> small

  BarMap sigma;             // sum of the recursion terms used
  int recursion_depth = 0;  // number of nonzero terms in sigma
};

/**
 * Transfer the structure A on c.big across the contraction, truncated at
 * max_arity. With t the arity-lowering part of A's coderivation table and
 * h = -B(H) the bar homotopy adjusted to the perturbation recursion's sign
 * normalization (d.h + h.d = alpha.r - 1), the recursion
 *
 *   t(1) = t,   t(p+1) = t . h . t(p),   sigma = t(1) + ... + t(p)
 *
 * stabilizes after max_arity - 1 steps because each t factor lowers arity.
 * The outputs are
 *
 *   b_small    = [tensor differential of d_small] + B(r) . sigma . B(alpha)
 *   bar_alpha  = B(alpha) + h . sigma . B(alpha)
 *   bar_r      = B(r)     + B(r) . sigma . h
 *   bar_h      = -(h      + h . sigma . h),
 *
 * so that bar_h again satisfies delta(bar_h) = 1 - bar_alpha . bar_r in this
 * library's homotopy normalization. A must live on the big complex of the
 * contraction; operations above the truncation arity cannot influence the
 * result and are ignored. The arity-1 operation is the differential by
 * construction, so t genuinely lowers arity and the recursion terminates.
 */
TransferResult transfer(const Contraction& c, const AInfinityStructure& A, int max_arity);

/**
 * Post-conditions of transfer, each measured exactly (defect = nonzero
 * entries, 0 is a pass). delta below is taken with respect to the perturbed
 * differentials.
 */
struct TransferReport {
  std::vector<long> stasheff;   // defect of the transferred structure per arity (index n-1)
  long square = -1;             // b_small . b_small
  bool coderivation = false;    // b_small is a genuine coderivation table
  bool m1_is_differential = false;
  long retract = -1;            // bar_r . bar_alpha - 1
  long alpha_morphism = -1;     // b_big . bar_alpha - bar_alpha . b_small
  long r_morphism = -1;         // b_small . bar_r - bar_r . b_big
  long homotopy = -1;           // delta(bar_h) - (1 - bar_alpha . bar_r)
  long h_alpha = -1;            // bar_h . bar_alpha   (perturbed side conditions)
  long r_h = -1;                // bar_r . bar_h
  long h_h = -1;                // bar_h . bar_h

  bool ok() const;
};

TransferReport verify_transfer(const TransferResult& t);

/**
 * Naturality of the whole pipeline in a comparison map. Given contractions
 * c on (small in big) and c2 on (small2 in big2), structures A, A2 on the
 * big complexes, and closed degree-(0,0) maps phi_big, phi_small, the
 * hypotheses are
 *
 *   phi_big . alpha = alpha2 . phi_small        phi_small . r = r2 . phi_big
 *   phi_big . h = h2 . phi_big                  phi_big . m_n = m2_n . phi_big^(x)n
 *
 * and the conclusions, checked only when every hypothesis holds, are that
 * phi_small intertwines the transferred structures and that the lifted
 * comparison maps intertwine the perturbed inclusions and projections.
 * Hypothesis failures and conclusion failures are reported separately, so a
 * broken premise is never mistaken for a naturality failure.
 */
struct NaturalityReport {
  std::vector<std::string> hypothesis_failures;
  std::vector<std::string> conclusion_failures;
  bool hypotheses_ok() const { return hypothesis_failures.empty(); }
  bool natural() const { return hypotheses_ok() && conclusion_failures.empty(); }
};

NaturalityReport naturality_check(const Contraction& c, const Contraction& c2,
                                  const GradedMap& phi_big, const GradedMap& phi_small,
                                  const AInfinityStructure& A, const AInfinityStructure& A2,
                                  int max_arity);

}  // namespace hpt
