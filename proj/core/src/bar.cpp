#include "hpt/bar.hpp"

#include <stdexcept>

namespace hpt {

BarContext::BarContext(Complex base, int max_arity)
    : base_(std::move(base)), max_arity_(max_arity), susp_(suspend(base_)) {
  if (max_arity < 1) throw std::invalid_argument("bar truncation arity must be >= 1");
  powers_.reserve(max_arity);
  base_powers_.reserve(max_arity);
  for (int j = 1; j <= max_arity; ++j) {
    powers_.push_back(power_space(susp_.complex.space, j));
    base_powers_.push_back(power_space(base_.space, j));
  }
}

const SpacePtr& BarContext::power(int j) const {
  if (j < 1 || j > max_arity_) throw std::invalid_argument("bar arity out of range");
  return powers_[j - 1];
}

const SpacePtr& BarContext::base_power(int j) const {
  if (j < 1 || j > max_arity_) throw std::invalid_argument("bar arity out of range");
  return base_powers_[j - 1];
}

bool BarContext::operator==(const BarContext& o) const {
  if (this == &o) return true;
  return max_arity_ == o.max_arity_ && same_space(base_.space, o.base_.space) &&
         base_.d == o.base_.d;
}

BarContextPtr make_bar_context(Complex base, int max_arity) {
  return std::make_shared<BarContext>(std::move(base), max_arity);
}

BarMap::BarMap(BarContextPtr source, BarContextPtr target, int total_degree)
    : source_(std::move(source)), target_(std::move(target)), total_degree_(total_degree) {
  if (!source_ || !target_) throw std::invalid_argument("bar map needs both contexts");
}

BarMap BarMap::identity(const BarContextPtr& ctx) {
  BarMap id(ctx, ctx, 0);
  for (int j = 1; j <= ctx->max_arity(); ++j)
    id.set_block(j, j, GradedMap::identity(ctx->power(j)));
  return id;
}

const GradedMap* BarMap::block(int j, int k) const {
  auto it = blocks_.find({j, k});
  return it == blocks_.end() ? nullptr : &it->second;
}

void BarMap::set_block(int j, int k, GradedMap m) {
  if (j < 1 || j > source_->max_arity() || k < 1 || k > target_->max_arity())
    throw std::invalid_argument("bar block arity out of range");
  if (!same_space(m.source(), source_->power(j)) || !same_space(m.target(), target_->power(k)))
    throw std::invalid_argument("bar block spaces do not match context powers");
  if (m.is_zero()) {
    blocks_.erase({j, k});
    return;
  }
  if (m.total_degree() != total_degree_)
    throw std::invalid_argument("bar block degree " + std::to_string(m.total_degree()) +
                                " differs from declared " + std::to_string(total_degree_));
  blocks_.insert_or_assign({j, k}, std::move(m));
}

void BarMap::add_block(int j, int k, const GradedMap& m) {
  const GradedMap* cur = block(j, k);
  set_block(j, k, cur ? map_add(*cur, m) : m);
}

long BarMap::nnz() const {
  long n = 0;
  for (const auto& [key, m] : blocks_) n += m.nnz();
  return n;
}

bool BarMap::operator==(const BarMap& o) const {
  if (!same_context(source_, o.source_) || !same_context(target_, o.target_)) return false;
  if (blocks_.empty() && o.blocks_.empty()) return true;
  return total_degree_ == o.total_degree_ && blocks_ == o.blocks_;
}

BarMap bar_add(const BarMap& f, const BarMap& g) {
  if (!same_context(f.source(), g.source()) || !same_context(f.target(), g.target()))
    throw std::invalid_argument("cannot add bar maps over different contexts");
  if (!f.is_zero() && !g.is_zero() && f.total_degree() != g.total_degree())
    throw std::invalid_argument("cannot add bar maps of different degrees");
  BarMap out(f.source(), f.target(), f.is_zero() ? g.total_degree() : f.total_degree());
  for (const auto& [key, m] : f.blocks()) out.add_block(key.first, key.second, m);
  for (const auto& [key, m] : g.blocks()) out.add_block(key.first, key.second, m);
  return out;
}

BarMap bar_neg(const BarMap& f) {
  BarMap out(f.source(), f.target(), f.total_degree());
  for (const auto& [key, m] : f.blocks()) out.set_block(key.first, key.second, map_neg(m));
  return out;
}

BarMap bar_sub(const BarMap& f, const BarMap& g) {
  return bar_add(f, bar_neg(g));
}

BarMap compose_bar(const BarMap& f, const BarMap& g) {
  if (!same_context(g.target(), f.source()))
    throw std::invalid_argument("cannot compose bar maps: contexts do not match");
  BarMap out(g.source(), f.target(), f.total_degree() + g.total_degree());
  for (const auto& [gkey, gm] : g.blocks()) {
    const auto [j, m] = gkey;
    for (int k = 1; k <= f.target()->max_arity(); ++k) {
      const GradedMap* fm = f.block(m, k);
      if (!fm) continue;
      out.add_block(j, k, compose(*fm, gm));
    }
  }
  return out;
}

BarMap bar_delta(const BarMap& b_src, const BarMap& b_tgt, const BarMap& u) {
  if (!same_context(b_src.source(), b_src.target()) || !same_context(b_tgt.source(), b_tgt.target()))
    throw std::invalid_argument("bar_delta expects endomorphisms as differentials");
  if (b_src.total_degree() != 1 || b_tgt.total_degree() != 1)
    throw std::invalid_argument("bar_delta expects degree-1 differentials");
  if (!same_context(b_src.source(), u.source()) || !same_context(b_tgt.source(), u.target()))
    throw std::invalid_argument("bar_delta: differentials do not match the map's contexts");
  BarMap right = compose_bar(u, b_src);
  if (u.total_degree() % 2 == 0) right = bar_neg(right);
  return bar_add(compose_bar(b_tgt, u), right);
}

BarMap lift_coderivation(const BarContextPtr& ctx, const std::map<int, GradedMap>& components,
                         int total_degree) {
  const int N = ctx->max_arity();
  for (const auto& [s, b] : components) {
    if (s < 1 || s > N) throw std::invalid_argument("coderivation component arity out of range");
    if (!same_space(b.source(), ctx->power(s)) || !same_space(b.target(), ctx->power(1)))
      throw std::invalid_argument("coderivation component shapes do not match the context");
    if (!b.is_zero() && b.total_degree() != total_degree)
      throw std::invalid_argument("coderivation component degree differs from declared degree");
  }
  BarMap out(ctx, ctx, total_degree);
  GradedMap id = GradedMap::identity(ctx->suspended().space);
  for (const auto& [s, b] : components) {
    if (b.is_zero()) continue;
    for (int j = s; j <= N; ++j) {
      const int u = j - s + 1;
      for (int r = 0; r + s <= j; ++r) {
        std::vector<const GradedMap*> factors(static_cast<size_t>(j - s + 1), &id);
        factors[r] = &b;
        out.add_block(j, u, tensor_of_maps(factors, ctx->power(j), ctx->power(u)));
      }
    }
  }
  return out;
}

BarMap lift_morphism(const BarContextPtr& source, const BarContextPtr& target,
                     const std::map<int, GradedMap>& components) {
  for (const auto& [i, f] : components) {
    if (i < 1 || i > source->max_arity())
      throw std::invalid_argument("morphism component arity out of range");
    if (!same_space(f.source(), source->power(i)) || !same_space(f.target(), target->power(1)))
      throw std::invalid_argument("morphism component shapes do not match the contexts");
    if (f.bidegree() != Bidegree{0, 0})
      throw std::invalid_argument("morphism components must have bidegree (0,0)");
  }
  BarMap out(source, target, 0);
  for (int j = 1; j <= source->max_arity(); ++j) {
    for (int k = 1; k <= std::min(j, target->max_arity()); ++k) {
      /* sum of f_{i_1} (x) ... (x) f_{i_k} over compositions i_1+...+i_k = j */
      std::vector<const GradedMap*> factors(k, nullptr);
      auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == k) {
          if (remaining == 0)
            out.add_block(j, k, tensor_of_maps(factors, source->power(j), target->power(k)));
          return;
        }
        const int slots_left = k - slot - 1;
        for (const auto& [i, f] : components) {
          if (i > remaining - slots_left) break;
          factors[slot] = &f;
          self(self, slot + 1, remaining - i);
        }
      };
      rec(rec, 0, j);
    }
  }
  return out;
}

std::map<int, GradedMap> corestriction(const BarMap& f) {
  std::map<int, GradedMap> out;
  for (int j = 1; j <= f.source()->max_arity(); ++j)
    if (const GradedMap* b = f.block(j, 1)) out.emplace(j, *b);
  return out;
}

bool is_coderivation(const BarMap& f) {
  if (!same_context(f.source(), f.target())) return false;
  return f == lift_coderivation(f.source(), corestriction(f), f.total_degree());
}

bool is_coalgebra_morphism(const BarMap& f) {
  if (f.total_degree() != 0 && !f.is_zero()) return false;
  for (const auto& [j, b] : corestriction(f))
    if (b.bidegree() != Bidegree{0, 0}) return false;
  return f == lift_morphism(f.source(), f.target(), corestriction(f));
}

}  // namespace hpt
