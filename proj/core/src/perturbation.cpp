#include "hpt/perturbation.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hpt {

namespace {

// First shape problem of the datum, or "" when everything lines up.
std::string shape_problem(const SdrDatum& d) {
  if (!same_space(d.alpha.source(), d.small.space) || !same_space(d.alpha.target(), d.big.space))
    return "alpha must map the small complex into the big one";
  if (d.alpha.bidegree() != Bidegree{0, 0}) return "alpha must have bidegree (0, 0)";
  if (!same_space(d.r.source(), d.big.space) || !same_space(d.r.target(), d.small.space))
    return "r must map the big complex onto the small one";
  if (d.r.bidegree() != Bidegree{0, 0}) return "r must have bidegree (0, 0)";
  if (!same_space(d.h.source(), d.big.space) || !same_space(d.h.target(), d.big.space))
    return "h must be an endomorphism of the big complex";
  if (d.h.bidegree() != Bidegree{-1, 0}) return "h must have bidegree (-1, 0)";
  return "";
}

GradedMap homotopy_defect(const SdrDatum& d) {
  GradedMap wanted = map_sub(GradedMap::identity(d.big.space), compose(d.alpha, d.r));
  return map_sub(delta(d.big, d.big, d.h), wanted);
}

}  // namespace

SdrReport check_sdr(const SdrDatum& datum) {
  SdrReport rep;
  rep.shape_error = shape_problem(datum);
  if (!rep.shape_error.empty()) return rep;
  rep.alpha_closed = delta(datum.small, datum.big, datum.alpha).nnz();
  rep.r_closed = delta(datum.big, datum.small, datum.r).nnz();
  rep.retract = map_sub(compose(datum.r, datum.alpha), GradedMap::identity(datum.small.space)).nnz();
  rep.homotopy = homotopy_defect(datum).nnz();
  rep.h_alpha = compose(datum.h, datum.alpha).nnz();
  rep.r_h = compose(datum.r, datum.h).nnz();
  rep.h_h = compose(datum.h, datum.h).nnz();
  return rep;
}

Contraction make_contraction(SdrDatum datum) {
  SdrReport rep = check_sdr(datum);
  if (!rep.shape_error.empty()) throw std::invalid_argument(rep.shape_error);
  if (rep.alpha_closed) throw std::invalid_argument("not an SDR: alpha is not a chain map");
  if (rep.r_closed) throw std::invalid_argument("not an SDR: r is not a chain map");
  if (rep.retract) throw std::invalid_argument("not an SDR: r.alpha is not the identity");
  if (rep.homotopy) throw std::invalid_argument("not an SDR: d.h + h.d differs from 1 - alpha.r");
  if (rep.h_alpha) throw std::invalid_argument("side condition h.alpha = 0 fails");
  if (rep.r_h) throw std::invalid_argument("side condition r.h = 0 fails");
  if (rep.h_h) throw std::invalid_argument("side condition h.h = 0 fails");
  return Contraction(std::move(datum));
}

Contraction identity_contraction(const Complex& c) {
  return make_contraction({c, c, GradedMap::identity(c.space), GradedMap::identity(c.space),
                           GradedMap(c.space, c.space, {-1, 0})});
}

Contraction repair_to_contraction(const SdrDatum& datum) {
  SdrReport rep = check_sdr(datum);
  if (!rep.shape_error.empty()) throw std::invalid_argument(rep.shape_error);
  if (!rep.sdr_ok())
    throw std::invalid_argument("cannot repair: the datum fails the SDR identities themselves");
  GradedMap dh = delta(datum.big, datum.big, datum.h);
  GradedMap h1 = compose(dh, compose(datum.h, dh));
  GradedMap h2 = compose(h1, compose(datum.big.d, h1));
  // make_contraction re-verifies everything, in particular that the repair
  // did not disturb d.h'' + h''.d = 1 - alpha.r.
  return make_contraction({datum.big, datum.small, datum.alpha, datum.r, std::move(h2)});
}

namespace {

void require_base(const BarContextPtr& ctx, const Complex& c, const char* what) {
  if (!same_space(ctx->base().space, c.space) || ctx->base().d != c.d)
    throw std::invalid_argument(std::string("bar context does not sit over the contraction's ") +
                                what + " complex");
}

}  // namespace

BarMap bar_homotopy(const Contraction& c, const BarContextPtr& big_ctx) {
  require_base(big_ctx, c.big(), "big");
  const int N = big_ctx->max_arity();
  GradedMap sh = suspend_multilinear(big_ctx, big_ctx, c.h(), 1);
  GradedMap sar = compose(big_ctx->s(), compose(compose(c.alpha(), c.r()), big_ctx->s_inv()));
  GradedMap one = GradedMap::identity(big_ctx->power(1));
  BarMap out(big_ctx, big_ctx, -1);
  for (int n = 1; n <= N; ++n) {
    for (int i = 1; i <= n; ++i) {
      std::vector<const GradedMap*> factors(n);
      for (int p = 0; p < n; ++p)
        factors[p] = p < i - 1 ? &one : (p == i - 1 ? &sh : &sar);
      out.add_block(n, n, tensor_of_maps(factors, big_ctx->power(n), big_ctx->power(n)));
    }
  }
  return out;
}

BarMap bar_inclusion(const Contraction& c, const BarContextPtr& small_ctx,
                     const BarContextPtr& big_ctx) {
  require_base(small_ctx, c.small(), "small");
  require_base(big_ctx, c.big(), "big");
  return lift_morphism(small_ctx, big_ctx,
                       {{1, suspend_multilinear(small_ctx, big_ctx, c.alpha(), 1)}});
}

BarMap bar_projection(const Contraction& c, const BarContextPtr& big_ctx,
                      const BarContextPtr& small_ctx) {
  require_base(small_ctx, c.small(), "small");
  require_base(big_ctx, c.big(), "big");
  return lift_morphism(big_ctx, small_ctx,
                       {{1, suspend_multilinear(big_ctx, small_ctx, c.r(), 1)}});
}

TransferResult transfer(const Contraction& c, const AInfinityStructure& A, int max_arity) {
  if (max_arity < 1) throw std::invalid_argument("transfer needs max_arity >= 1");
  if (!same_space(A.complex().space, c.big().space) || A.complex().d != c.big().d)
    throw std::invalid_argument("the structure does not live on the contraction's big complex");

  BarContextPtr big_ctx = A.context();
  const AInfinityStructure* As = &A;
  AInfinityStructure rebuilt(big_ctx, {});
  if (A.max_arity() != max_arity) {
    big_ctx = make_bar_context(c.big(), max_arity);
    std::map<int, GradedMap> ops;
    for (const auto& [n, m] : A.ops())
      if (n <= max_arity) ops.emplace(n, m);
    rebuilt = AInfinityStructure(big_ctx, std::move(ops));
    As = &rebuilt;
  }
  BarContextPtr small_ctx = make_bar_context(c.small(), max_arity);

  BarMap b_big = bar_differential(*As);
  std::map<int, GradedMap> higher;
  for (const auto& [n, m] : As->ops())
    if (n >= 2) higher.emplace(n, suspend_multilinear(big_ctx, big_ctx, m, n));
  BarMap t = lift_coderivation(big_ctx, higher, 1);

  BarMap bh = bar_homotopy(c, big_ctx);
  BarMap ba = bar_inclusion(c, small_ctx, big_ctx);
  BarMap br = bar_projection(c, big_ctx, small_ctx);

  // The recursion is classically stated for homotopies normalized by
  // d.h + h.d = alpha.r - 1; ours satisfies the opposite sign, so the
  // homotopy enters every formula negated and the perturbed homotopy is
  // negated back at the end. With the signs as written every identity
  // (square zero, retract, chain maps, homotopy, side conditions) holds on
  // the nose; flipping them breaks all but the square. t lowers arity, so
  // the recursion dies after max_arity - 1 steps.
  BarMap hn = bar_neg(bh);
  BarMap sigma(big_ctx, big_ctx, 1);
  int depth = 0;
  if (!t.is_zero()) {
    BarMap t_hn = compose_bar(t, hn);
    BarMap tp = t;
    for (int p = 1; p < max_arity && !tp.is_zero(); ++p) {
      sigma = bar_add(sigma, tp);
      depth = p;
      tp = compose_bar(t_hn, tp);
    }
  }

  BarMap b_small = bar_add(bar_differential(AInfinityStructure(small_ctx, {})),
                           compose_bar(br, compose_bar(sigma, ba)));
  BarMap bar_alpha = bar_add(ba, compose_bar(hn, compose_bar(sigma, ba)));
  BarMap bar_r = bar_add(br, compose_bar(br, compose_bar(sigma, hn)));
  BarMap bar_h = bar_neg(bar_add(hn, compose_bar(hn, compose_bar(sigma, hn))));

  TransferResult out{big_ctx,
                     small_ctx,
                     from_bar_differential(b_small),
                     std::move(b_small),
                     std::move(b_big),
                     std::move(bar_alpha),
                     std::move(bar_r),
                     std::move(bar_h),
                     {},
                     {},
                     std::move(sigma),
                     depth};
  for (const auto& [n, comp] : corestriction(out.bar_alpha))
    out.alpha_components.emplace(n, desuspend_multilinear(small_ctx, big_ctx, comp, n));
  for (const auto& [n, comp] : corestriction(out.bar_r))
    out.r_components.emplace(n, desuspend_multilinear(big_ctx, small_ctx, comp, n));
  return out;
}

bool TransferReport::ok() const {
  for (long s : stasheff)
    if (s != 0) return false;
  return square == 0 && coderivation && m1_is_differential && retract == 0 &&
         alpha_morphism == 0 && r_morphism == 0 && homotopy == 0 && h_alpha == 0 && r_h == 0 &&
         h_h == 0;
}

TransferReport verify_transfer(const TransferResult& t) {
  TransferReport rep;
  const int N = t.small_ctx->max_arity();
  for (int n = 1; n <= N; ++n) rep.stasheff.push_back(stasheff_defect(t.transferred, n).nnz());
  rep.square = compose_bar(t.b_small, t.b_small).nnz();
  rep.coderivation = is_coderivation(t.b_small);
  const GradedMap* m1 = t.transferred.op(1);
  const GradedMap& d_small = t.small_ctx->base().d;
  rep.m1_is_differential = m1 ? (*m1 == d_small) : d_small.is_zero();
  rep.retract =
      bar_sub(compose_bar(t.bar_r, t.bar_alpha), BarMap::identity(t.small_ctx)).nnz();
  rep.alpha_morphism =
      bar_sub(compose_bar(t.b_big, t.bar_alpha), compose_bar(t.bar_alpha, t.b_small)).nnz();
  rep.r_morphism =
      bar_sub(compose_bar(t.b_small, t.bar_r), compose_bar(t.bar_r, t.b_big)).nnz();
  BarMap wanted = bar_sub(BarMap::identity(t.big_ctx), compose_bar(t.bar_alpha, t.bar_r));
  rep.homotopy = bar_sub(bar_delta(t.b_big, t.b_big, t.bar_h), wanted).nnz();
  rep.h_alpha = compose_bar(t.bar_h, t.bar_alpha).nnz();
  rep.r_h = compose_bar(t.bar_r, t.bar_h).nnz();
  rep.h_h = compose_bar(t.bar_h, t.bar_h).nnz();
  return rep;
}

namespace {

std::string first_block(const BarMap& diff) {
  const auto& [j, k] = diff.blocks().begin()->first;
  std::ostringstream os;
  os << "first failing block (" << j << " -> " << k << ")";
  return os.str();
}

}  // namespace

NaturalityReport naturality_check(const Contraction& c, const Contraction& c2,
                                  const GradedMap& phi_big, const GradedMap& phi_small,
                                  const AInfinityStructure& A, const AInfinityStructure& A2,
                                  int max_arity) {
  if (!same_space(phi_big.source(), c.big().space) ||
      !same_space(phi_big.target(), c2.big().space) || phi_big.bidegree() != Bidegree{0, 0})
    throw std::invalid_argument("phi_big must map big to big2 with bidegree (0, 0)");
  if (!same_space(phi_small.source(), c.small().space) ||
      !same_space(phi_small.target(), c2.small().space) || phi_small.bidegree() != Bidegree{0, 0})
    throw std::invalid_argument("phi_small must map small to small2 with bidegree (0, 0)");
  if (!same_space(A.complex().space, c.big().space) ||
      !same_space(A2.complex().space, c2.big().space))
    throw std::invalid_argument("the structures must live on the contractions' big complexes");

  NaturalityReport rep;
  auto hyp = [&rep](bool holds, const std::string& name) {
    if (!holds) rep.hypothesis_failures.push_back(name);
  };
  hyp(is_closed(c.big(), c2.big(), phi_big), "phi_big is closed");
  hyp(is_closed(c.small(), c2.small(), phi_small), "phi_small is closed");
  hyp(compose(phi_big, c.alpha()) == compose(c2.alpha(), phi_small),
      "phi_big . alpha = alpha2 . phi_small");
  hyp(compose(phi_small, c.r()) == compose(c2.r(), phi_big), "phi_small . r = r2 . phi_big");
  hyp(compose(phi_big, c.h()) == compose(c2.h(), phi_big), "phi_big . h = h2 . phi_big");

  // phi_big^(x)n against each pair of operations; a missing operation is zero.
  for (int n = 1; n <= max_arity; ++n) {
    const GradedMap* m = A.op(n);
    const GradedMap* m2 = A2.op(n);
    if (!m && !m2) continue;
    SpacePtr src_pow = power_space(c.big().space, n);
    SpacePtr tgt_pow = power_space(c2.big().space, n);
    std::vector<const GradedMap*> factors(n, &phi_big);
    GradedMap phi_pow = tensor_of_maps(factors, src_pow, tgt_pow);
    GradedMap lhs = m ? compose(phi_big, *m) : GradedMap(src_pow, c2.big().space, {2 - n, 0});
    GradedMap rhs = m2 ? compose(*m2, phi_pow) : GradedMap(src_pow, c2.big().space, {2 - n, 0});
    if (lhs != rhs) {
      std::ostringstream os;
      os << "phi_big intertwines the arity-" << n << " operation";
      rep.hypothesis_failures.push_back(os.str());
    }
  }
  if (!rep.hypotheses_ok()) return rep;

  TransferResult t = transfer(c, A, max_arity);
  TransferResult t2 = transfer(c2, A2, max_arity);

  for (int n = 1; n <= max_arity; ++n) {
    const GradedMap* m = t.transferred.op(n);
    const GradedMap* m2 = t2.transferred.op(n);
    if (!m && !m2) continue;
    SpacePtr src_pow = power_space(c.small().space, n);
    SpacePtr tgt_pow = power_space(c2.small().space, n);
    std::vector<const GradedMap*> factors(n, &phi_small);
    GradedMap phi_pow = tensor_of_maps(factors, src_pow, tgt_pow);
    GradedMap lhs = m ? compose(phi_small, *m) : GradedMap(src_pow, c2.small().space, {2 - n, 0});
    GradedMap rhs = m2 ? compose(*m2, phi_pow) : GradedMap(src_pow, c2.small().space, {2 - n, 0});
    if (lhs != rhs) {
      std::ostringstream os;
      os << "transferred structures differ first at arity " << n;
      rep.conclusion_failures.push_back(os.str());
      break;
    }
  }

  BarMap bphi_small = lift_morphism(
      t.small_ctx, t2.small_ctx,
      {{1, suspend_multilinear(t.small_ctx, t2.small_ctx, phi_small, 1)}});
  BarMap bphi_big = lift_morphism(
      t.big_ctx, t2.big_ctx, {{1, suspend_multilinear(t.big_ctx, t2.big_ctx, phi_big, 1)}});

  BarMap incl = bar_sub(compose_bar(bphi_big, t.bar_alpha), compose_bar(t2.bar_alpha, bphi_small));
  if (!incl.is_zero())
    rep.conclusion_failures.push_back("perturbed inclusions disagree, " + first_block(incl));
  BarMap proj = bar_sub(compose_bar(bphi_small, t.bar_r), compose_bar(t2.bar_r, bphi_big));
  if (!proj.is_zero())
    rep.conclusion_failures.push_back("perturbed projections disagree, " + first_block(proj));
  return rep;
}

}  // namespace hpt
