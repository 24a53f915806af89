#include "hpt/ainfty.hpp"

#include <stdexcept>

namespace hpt {

namespace {

bool odd(int e) { return ((e % 2) + 2) % 2 == 1; }

GradedMap signed_map(int exponent, GradedMap m) {
  return odd(exponent) ? map_neg(m) : m;
}

std::string first_nonzero_input(const GradedMap& m) {
  for (int i = 0; i < m.source()->dim(); ++i)
    if (!m.column(i).empty()) return m.source()->at(i).name;
  return "";
}

}  // namespace

GradedMap suspend_multilinear(const BarContextPtr& source, const BarContextPtr& target,
                              const GradedMap& f, int arity) {
  if (arity < 1 || arity > source->max_arity())
    throw std::invalid_argument("suspension arity out of range");
  if (!same_space(f.source(), source->base_power(arity)) ||
      !same_space(f.target(), target->base().space))
    throw std::invalid_argument("map shape does not match the contexts for suspension");
  GradedMap inner = f;
  if (arity == 1) {
    inner = compose(f, source->s_inv());
  } else {
    std::vector<const GradedMap*> factors(arity, &source->s_inv());
    inner = compose(f, tensor_of_maps(factors, source->power(arity), source->base_power(arity)));
  }
  return signed_map(f.total_degree() + arity - 1 + arity * (arity - 1) / 2,
                    compose(target->s(), inner));
}

GradedMap desuspend_multilinear(const BarContextPtr& source, const BarContextPtr& target,
                                const GradedMap& b, int arity) {
  if (arity < 1 || arity > source->max_arity())
    throw std::invalid_argument("suspension arity out of range");
  if (!same_space(b.source(), source->power(arity)) ||
      !same_space(b.target(), target->suspended().space))
    throw std::invalid_argument("map shape does not match the contexts for desuspension");
  GradedMap inner = b;
  if (arity == 1) {
    inner = compose(b, source->s());
  } else {
    std::vector<const GradedMap*> factors(arity, &source->s());
    inner = compose(b, tensor_of_maps(factors, source->base_power(arity), source->power(arity)));
  }
  return signed_map(b.total_degree(), compose(target->s_inv(), inner));
}

AInfinityStructure::AInfinityStructure(BarContextPtr ctx, std::map<int, GradedMap> ops)
    : ctx_(std::move(ctx)) {
  if (!ctx_) throw std::invalid_argument("A-infinity structure needs a context");
  const Complex& base = ctx_->base();
  for (auto& [n, m] : ops) {
    if (n < 1 || n > ctx_->max_arity())
      throw std::invalid_argument("operation arity out of range");
    if (!same_space(m.source(), ctx_->base_power(n)) || !same_space(m.target(), base.space))
      throw std::invalid_argument("operation m_" + std::to_string(n) +
                                  " shapes do not match the context");
    if (!(m.bidegree() == Bidegree{2 - n, 0}))
      throw std::invalid_argument("operation m_" + std::to_string(n) + " must have bidegree (" +
                                  std::to_string(2 - n) + ", 0)");
    if (n == 1 && m != base.d)
      throw std::invalid_argument("operation m_1 must equal the differential");
    if (!m.is_zero()) ops_.emplace(n, std::move(m));
  }
  if (!base.d.is_zero()) ops_.emplace(1, base.d);  // no-op when already present
}

const GradedMap* AInfinityStructure::op(int n) const {
  auto it = ops_.find(n);
  return it == ops_.end() ? nullptr : &it->second;
}

AInfinityStructure from_dga(const BarContextPtr& ctx, const GradedMap& product) {
  if (ctx->max_arity() < 2)
    throw std::invalid_argument("a product needs truncation arity at least 2");
  AInfinityStructure A(ctx, {{2, product}});

  GradedMap leibniz = stasheff_defect(A, 2);
  if (!leibniz.is_zero())
    throw std::invalid_argument("product does not satisfy the Leibniz rule, first failure at '" +
                                first_nonzero_input(leibniz) + "'");

  const Complex& base = ctx->base();
  SpacePtr p3 = ctx->max_arity() >= 3 ? ctx->base_power(3) : power_space(base.space, 3);
  GradedMap id = GradedMap::identity(base.space);
  GradedMap left = compose(product, tensor_of_maps({&product, &id}, p3, ctx->base_power(2)));
  GradedMap right = compose(product, tensor_of_maps({&id, &product}, p3, ctx->base_power(2)));
  GradedMap assoc = map_sub(left, right);
  if (!assoc.is_zero())
    throw std::invalid_argument("product is not associative, first failure at '" +
                                first_nonzero_input(assoc) + "'");
  return A;
}

GradedMap stasheff_defect(const AInfinityStructure& A, int n) {
  const BarContextPtr& ctx = A.context();
  if (n < 1 || n > ctx->max_arity()) throw std::invalid_argument("defect arity out of range");
  GradedMap out(ctx->base_power(n), ctx->base_power(1), {3 - n, 0});
  GradedMap id = GradedMap::identity(ctx->base().space);
  for (int s = 1; s <= n; ++s) {
    const GradedMap* ms = A.op(s);
    if (!ms) continue;
    const int u = n - s + 1;
    const GradedMap* mu = A.op(u);
    if (!mu) continue;
    for (int r = 0; r + s <= n; ++r) {
      const int t = n - r - s;
      std::vector<const GradedMap*> factors(static_cast<size_t>(u), &id);
      factors[r] = ms;
      GradedMap term =
          compose(*mu, tensor_of_maps(factors, ctx->base_power(n), ctx->base_power(u)));
      out = map_add(out, signed_map(r + s * t, std::move(term)));
    }
  }
  return out;
}

bool is_ainfty(const AInfinityStructure& A) {
  for (int n = 1; n <= A.max_arity(); ++n)
    if (!stasheff_defect(A, n).is_zero()) return false;
  return true;
}

BarMap bar_differential(const AInfinityStructure& A) {
  const BarContextPtr& ctx = A.context();
  std::map<int, GradedMap> comps;
  for (const auto& [n, m] : A.ops()) comps.emplace(n, suspend_multilinear(ctx, ctx, m, n));
  return lift_coderivation(ctx, comps, 1);
}

AInfinityStructure from_bar_differential(const BarMap& b) {
  if (!same_context(b.source(), b.target()))
    throw std::invalid_argument("a bar differential must have equal source and target");
  if (!b.is_zero() && b.total_degree() != 1)
    throw std::invalid_argument("a bar differential must have total degree 1");
  const BarContextPtr& ctx = b.source();
  std::map<int, GradedMap> ops;
  for (const auto& [n, comp] : corestriction(b))
    ops.emplace(n, desuspend_multilinear(ctx, ctx, comp, n));
  return AInfinityStructure(ctx, std::move(ops));
}

bool is_ainfty_morphism(const AInfinityStructure& A, const AInfinityStructure& B,
                        const BarMap& F) {
  if (!same_context(F.source(), A.context()) || !same_context(F.target(), B.context()))
    return false;
  if (!is_coalgebra_morphism(F)) return false;
  return compose_bar(F, bar_differential(A)) == compose_bar(bar_differential(B), F);
}

MasseyResult massey_triple(const HomologySolver& solver, const GradedMap& product, const Vec& x,
                           const Vec& y, const Vec& z) {
  const Complex& C = solver.complex();
  const Field& F = C.space->field();
  if (!same_space(product.target(), C.space))
    throw std::invalid_argument("product does not land in the complex");
  for (const Vec* v : {&x, &y, &z}) {
    if (!same_space(v->space, C.space))
      throw std::invalid_argument("triple product inputs must live in the complex");
    if (!solver.is_cycle(*v)) throw std::invalid_argument("triple product inputs must be cocycles");
    if (v->is_zero()) throw std::invalid_argument("triple product inputs must be nonzero");
  }
  int px, nx, py, ny, pz, nz;
  if (!vec_bidegree(x, px, nx) || !vec_bidegree(y, py, ny) || !vec_bidegree(z, pz, nz))
    throw std::invalid_argument("triple product inputs must be homogeneous");

  auto mul = [&](const Vec& a, const Vec& b) {
    return apply(product, vec_tensor({&a, &b}, product.source()));
  };

  MasseyResult out;
  out.degree = px + py + pz - 1;
  out.weight = nx + ny + nz;

  Vec xy = mul(x, y), yz = mul(y, z);
  if (!solver.is_boundary(xy) || !solver.is_boundary(yz)) return out;
  out.defined = true;

  Vec u = solver.boundary_preimage(xy);
  Vec v = solver.boundary_preimage(yz);
  Vec uz = mul(u, z);
  out.representative =
      vec_add(mul(x, v), vec_scale(F.from_int(odd(px + nx) ? 1 : -1), uz));
  out.coords = solver.class_coords(out.representative, out.degree, out.weight);

  /* Indeterminacy: classes x.w over the bidegree of v plus w'.z over the
     bidegree of u, echelonized in homology coordinates. */
  const size_t betti = out.coords.size();
  std::vector<std::vector<Scalar>> rows;
  std::vector<size_t> pivots;
  auto reduce = [&](std::vector<Scalar> vec) {
    for (size_t r = 0; r < rows.size(); ++r) {
      const Scalar c = vec[pivots[r]];
      if (F.is_zero(c)) continue;
      for (size_t j = 0; j < betti; ++j) vec[j] = F.sub(vec[j], F.mul(c, rows[r][j]));
    }
    return vec;
  };
  auto absorb = [&](std::vector<Scalar> vec) {
    vec = reduce(std::move(vec));
    for (size_t j = 0; j < betti; ++j)
      if (!F.is_zero(vec[j])) {
        Scalar inv = F.inv(vec[j]);
        for (Scalar& c : vec) c = F.mul(inv, c);
        rows.push_back(std::move(vec));
        pivots.push_back(j);
        return true;
      }
    return false;
  };
  for (const HomologyPiece& piece : solver.basis().pieces) {
    if (piece.degree == py + pz - 1 && piece.weight == ny + nz)
      for (const Vec& w : piece.representatives)
        absorb(solver.class_coords(mul(x, w), out.degree, out.weight));
    if (piece.degree == px + py - 1 && piece.weight == nx + ny)
      for (const Vec& w : piece.representatives)
        absorb(solver.class_coords(mul(w, z), out.degree, out.weight));
  }
  out.indeterminacy_dim = static_cast<int>(rows.size());
  std::vector<Scalar> residue = reduce(out.coords);
  for (const Scalar& c : residue)
    if (!F.is_zero(c)) {
      out.nonzero_mod_indeterminacy = true;
      break;
    }
  return out;
}

}  // namespace hpt
