#include "hpt/graded_map.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hpt {

namespace {

std::string bidegree_str(const Bidegree& b) {
  return "(" + std::to_string(b.r) + "," + std::to_string(b.s) + ")";
}

}  // namespace

Vec basis_vec(const SpacePtr& space, int index) {
  if (index < 0 || index >= space->dim())
    throw std::invalid_argument("basis index out of range");
  return {space, {{index, space->field().one()}}};
}

Vec make_vec(const SpacePtr& space, std::vector<Entry> entries) {
  const Field& F = space->field();
  std::map<int, Scalar> acc;
  for (const Entry& e : entries) {
    if (e.to < 0 || e.to >= space->dim())
      throw std::invalid_argument("vector index out of range");
    auto [it, fresh] = acc.emplace(e.to, F.normalize(e.coeff));
    if (!fresh) it->second = F.add(it->second, e.coeff);
  }
  Vec v{space, {}};
  for (auto& [i, c] : acc)
    if (!F.is_zero(c)) v.entries.push_back({i, c});
  return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (!same_space(a.space, b.space))
    throw std::invalid_argument("vector addition across different spaces");
  const Field& F = a.space->field();
  Vec out{a.space, {}};
  size_t i = 0, j = 0;
  while (i < a.entries.size() || j < b.entries.size()) {
    if (j == b.entries.size() || (i < a.entries.size() && a.entries[i].to < b.entries[j].to)) {
      out.entries.push_back(a.entries[i++]);
    } else if (i == a.entries.size() || b.entries[j].to < a.entries[i].to) {
      out.entries.push_back(b.entries[j++]);
    } else {
      Scalar c = F.add(a.entries[i].coeff, b.entries[j].coeff);
      if (!F.is_zero(c)) out.entries.push_back({a.entries[i].to, c});
      ++i, ++j;
    }
  }
  return out;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
  const Field& F = a.space->field();
  if (F.is_zero(c)) return {a.space, {}};
  Vec out{a.space, {}};
  out.entries.reserve(a.entries.size());
  for (const Entry& e : a.entries) out.entries.push_back({e.to, F.mul(c, e.coeff)});
  return out;
}

bool vec_eq(const Vec& a, const Vec& b) {
  return same_space(a.space, b.space) && a.entries == b.entries;
}

bool vec_bidegree(const Vec& v, int& degree, int& weight) {
  if (v.entries.empty()) return false;
  const BasisElement& first = v.space->at(v.entries.front().to);
  degree = first.degree;
  weight = first.weight;
  for (const Entry& e : v.entries) {
    const BasisElement& el = v.space->at(e.to);
    if (el.degree != degree || el.weight != weight) return false;
  }
  return true;
}

GradedMap::GradedMap(SpacePtr source, SpacePtr target, Bidegree bidegree)
    : source_(std::move(source)), target_(std::move(target)), bidegree_(bidegree) {
  if (source_->field() != target_->field())
    throw std::invalid_argument("map between spaces over different fields");
  cols_.resize(source_->dim());
}

GradedMap GradedMap::identity(const SpacePtr& space) {
  GradedMap id(space, space, {0, 0});
  const Scalar one = space->field().one();
  for (int i = 0; i < space->dim(); ++i) id.cols_[i] = {{i, one}};
  return id;
}

void GradedMap::add_term(int from, int to, const Scalar& c) {
  if (from < 0 || from >= source_->dim() || to < 0 || to >= target_->dim())
    throw std::invalid_argument("map entry index out of range");
  const BasisElement& s = source_->at(from);
  const BasisElement& t = target_->at(to);
  if (s.degree + bidegree_.r != t.degree || s.weight - bidegree_.s != t.weight)
    throw std::invalid_argument("entry '" + s.name + "' -> '" + t.name +
                                "' violates bidegree " + bidegree_str(bidegree_));
  const Field& F = field();
  Scalar cc = F.normalize(c);
  if (F.is_zero(cc)) return;
  auto& col = cols_[from];
  auto it = std::lower_bound(col.begin(), col.end(), to,
                             [](const Entry& e, int v) { return e.to < v; });
  if (it != col.end() && it->to == to) {
    it->coeff = F.add(it->coeff, cc);
    if (F.is_zero(it->coeff)) col.erase(it);
  } else {
    col.insert(it, {to, cc});
  }
}

void GradedMap::add_term(const std::string& from, const std::string& to, const Scalar& c) {
  const int i = source_->index_of(from);
  const int j = target_->index_of(to);
  if (i < 0) throw std::invalid_argument("no basis element named '" + from + "' in the source");
  if (j < 0) throw std::invalid_argument("no basis element named '" + to + "' in the target");
  add_term(i, j, c);
}

void GradedMap::set_column(int from, std::vector<Entry> entries) {
  if (from < 0 || from >= source_->dim())
    throw std::invalid_argument("map column index out of range");
  const Field& F = field();
  const BasisElement& s = source_->at(from);
  int prev = -1;
  for (const Entry& e : entries) {
    if (e.to <= prev) throw std::invalid_argument("column entries not strictly sorted");
    prev = e.to;
    if (e.to < 0 || e.to >= target_->dim())
      throw std::invalid_argument("map entry index out of range");
    if (F.is_zero(e.coeff)) throw std::invalid_argument("zero coefficient in column");
    const BasisElement& t = target_->at(e.to);
    if (s.degree + bidegree_.r != t.degree || s.weight - bidegree_.s != t.weight)
      throw std::invalid_argument("entry '" + s.name + "' -> '" + t.name +
                                  "' violates bidegree " + bidegree_str(bidegree_));
  }
  cols_[from] = std::move(entries);
}

bool GradedMap::is_zero() const {
  for (const auto& col : cols_)
    if (!col.empty()) return false;
  return true;
}

long GradedMap::nnz() const {
  long n = 0;
  for (const auto& col : cols_) n += static_cast<long>(col.size());
  return n;
}

bool GradedMap::operator==(const GradedMap& o) const {
  return bidegree_ == o.bidegree_ && same_space(source_, o.source_) &&
         same_space(target_, o.target_) && cols_ == o.cols_;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (!same_space(g.target(), f.source()))
    throw std::invalid_argument("cannot compose: middle spaces differ, left bidegree " +
                                bidegree_str(f.bidegree()) + ", right bidegree " +
                                bidegree_str(g.bidegree()));
  const Field& F = f.field();
  GradedMap out(g.source(), f.target(), f.bidegree() + g.bidegree());
  for (int i = 0; i < g.source()->dim(); ++i) {
    const auto& gcol = g.column(i);
    if (gcol.empty()) continue;
    std::map<int, Scalar> acc;
    for (const Entry& ge : gcol) {
      for (const Entry& fe : f.column(ge.to)) {
        Scalar c = F.mul(ge.coeff, fe.coeff);
        auto [it, fresh] = acc.emplace(fe.to, c);
        if (!fresh) it->second = F.add(it->second, c);
      }
    }
    std::vector<Entry> col;
    col.reserve(acc.size());
    for (auto& [to, c] : acc)
      if (!F.is_zero(c)) col.push_back({to, c});
    out.set_column(i, std::move(col));
  }
  return out;
}

GradedMap map_add(const GradedMap& f, const GradedMap& g) {
  if (!same_space(f.source(), g.source()) || !same_space(f.target(), g.target()) ||
      f.bidegree() != g.bidegree())
    throw std::invalid_argument("cannot add maps: shapes differ, bidegrees " +
                                bidegree_str(f.bidegree()) + " vs " + bidegree_str(g.bidegree()));
  const Field& F = f.field();
  GradedMap out(f.source(), f.target(), f.bidegree());
  for (int i = 0; i < f.source()->dim(); ++i) {
    const auto& a = f.column(i);
    const auto& b = g.column(i);
    std::vector<Entry> col;
    size_t x = 0, y = 0;
    while (x < a.size() || y < b.size()) {
      if (y == b.size() || (x < a.size() && a[x].to < b[y].to)) {
        col.push_back(a[x++]);
      } else if (x == a.size() || b[y].to < a[x].to) {
        col.push_back(b[y++]);
      } else {
        Scalar c = F.add(a[x].coeff, b[y].coeff);
        if (!F.is_zero(c)) col.push_back({a[x].to, c});
        ++x, ++y;
      }
    }
    out.set_column(i, std::move(col));
  }
  return out;
}

GradedMap map_scale(const Scalar& c, const GradedMap& f) {
  const Field& F = f.field();
  GradedMap out(f.source(), f.target(), f.bidegree());
  if (F.is_zero(c)) return out;
  for (int i = 0; i < f.source()->dim(); ++i) {
    std::vector<Entry> col;
    col.reserve(f.column(i).size());
    for (const Entry& e : f.column(i)) col.push_back({e.to, F.mul(c, e.coeff)});
    out.set_column(i, std::move(col));
  }
  return out;
}

GradedMap map_neg(const GradedMap& f) {
  return map_scale(f.field().from_int(-1), f);
}

GradedMap map_sub(const GradedMap& f, const GradedMap& g) {
  return map_add(f, map_neg(g));
}

Vec apply(const GradedMap& f, const Vec& v) {
  if (!same_space(v.space, f.source()))
    throw std::invalid_argument("cannot apply map: vector lives in a different space");
  const Field& F = f.field();
  std::map<int, Scalar> acc;
  for (const Entry& ve : v.entries) {
    for (const Entry& fe : f.column(ve.to)) {
      Scalar c = F.mul(ve.coeff, fe.coeff);
      auto [it, fresh] = acc.emplace(fe.to, c);
      if (!fresh) it->second = F.add(it->second, c);
    }
  }
  Vec out{f.target(), {}};
  for (auto& [i, c] : acc)
    if (!F.is_zero(c)) out.entries.push_back({i, c});
  return out;
}

GradedMap tensor_of_maps(const std::vector<const GradedMap*>& factors,
                         const SpacePtr& source, const SpacePtr& target) {
  const int k = static_cast<int>(factors.size());
  if (k == 0) throw std::invalid_argument("tensor product of zero maps");
  const Field& F = source->field();

  long src_prod = 1, tgt_prod = 1;
  Bidegree bid{0, 0};
  for (const GradedMap* f : factors) {
    if (f->field() != F)
      throw std::invalid_argument("tensor factor over a different field");
    src_prod *= f->source()->dim();
    tgt_prod *= f->target()->dim();
    bid = bid + f->bidegree();
  }
  if (src_prod != source->dim() || tgt_prod != target->dim())
    throw std::invalid_argument("tensor factors do not fit the given product spaces");

  std::vector<long> src_suffix(k, 1), tgt_suffix(k, 1);
  for (int i = k - 2; i >= 0; --i) {
    src_suffix[i] = src_suffix[i + 1] * factors[i + 1]->source()->dim();
    tgt_suffix[i] = tgt_suffix[i + 1] * factors[i + 1]->target()->dim();
  }

  GradedMap out(source, target, bid);
  std::vector<int> group(k);
  std::vector<const std::vector<Entry>*> cols(k);

  for (int I = 0; I < source->dim(); ++I) {
    bool dead = false;
    int sign_exp = 0, prefix_total = 0;
    for (int j = 0; j < k; ++j) {
      group[j] = static_cast<int>((I / src_suffix[j]) % factors[j]->source()->dim());
      cols[j] = &factors[j]->column(group[j]);
      if (cols[j]->empty()) { dead = true; break; }
      sign_exp += prefix_total * factors[j]->total_degree();
      prefix_total += factors[j]->source()->at(group[j]).total();
    }
    if (dead) continue;
    const bool negate = sign_exp & 1;

    std::map<int, Scalar> acc;
    /* Cross product of one entry choice per factor, prefix products carried down. */
    auto expand = [&](auto&& self, int level, const Scalar& coeff, long index) -> void {
      if (level == k) {
        Scalar c = negate ? F.neg(coeff) : coeff;
        auto [it, fresh] = acc.emplace(static_cast<int>(index), c);
        if (!fresh) it->second = F.add(it->second, c);
        return;
      }
      for (const Entry& e : *cols[level])
        self(self, level + 1, F.mul(coeff, e.coeff), index + e.to * tgt_suffix[level]);
    };
    expand(expand, 0, F.one(), 0);

    std::vector<Entry> col;
    col.reserve(acc.size());
    for (auto& [to, c] : acc)
      if (!F.is_zero(c)) col.push_back({to, c});
    out.set_column(I, std::move(col));
  }
  return out;
}

GradedMap tensor_map(const GradedMap& u, const GradedMap& v) {
  SpacePtr src = tensor_space_of(u.source(), v.source());
  SpacePtr tgt = tensor_space_of(u.target(), v.target());
  return tensor_of_maps({&u, &v}, src, tgt);
}

Vec vec_tensor(const std::vector<const Vec*>& factors, const SpacePtr& product) {
  if (factors.empty()) throw std::invalid_argument("tensor of no vectors");
  const Field& F = product->field();
  long expected = 1;
  for (const Vec* v : factors) {
    if (!v || !v->space) throw std::invalid_argument("tensor of a null vector");
    if (v->space->field() != F) throw std::invalid_argument("tensor factors over different fields");
    expected *= v->space->dim();
  }
  if (expected != product->dim())
    throw std::invalid_argument("product space dimension does not match the factors");

  const size_t k = factors.size();
  std::vector<long> stride(k, 1);
  for (size_t i = k - 1; i > 0; --i) stride[i - 1] = stride[i] * factors[i]->space->dim();

  std::vector<Entry> entries;
  auto expand = [&](auto&& self, size_t slot, long index, const Scalar& coeff) -> void {
    if (slot == k) {
      entries.push_back({static_cast<int>(index), coeff});
      return;
    }
    for (const Entry& e : factors[slot]->entries)
      self(self, slot + 1, index + e.to * stride[slot], F.mul(coeff, e.coeff));
  };
  expand(expand, 0, 0, F.one());
  return make_vec(product, std::move(entries));
}

GradedMap invert_permutation_map(const GradedMap& f) {
  const Field& F = f.field();
  if (f.source()->dim() != f.target()->dim())
    throw std::invalid_argument("cannot invert: dimensions differ");
  GradedMap out(f.target(), f.source(), {-f.bidegree().r, -f.bidegree().s});
  std::vector<bool> seen(f.target()->dim(), false);
  for (int i = 0; i < f.source()->dim(); ++i) {
    const auto& col = f.column(i);
    if (col.size() != 1)
      throw std::invalid_argument("cannot invert: not a signed permutation");
    if (seen[col[0].to])
      throw std::invalid_argument("cannot invert: target hit twice");
    seen[col[0].to] = true;
    out.add_term(col[0].to, i, F.inv(col[0].coeff));
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("cannot invert: map is not surjective");
  return out;
}

}  // namespace hpt
