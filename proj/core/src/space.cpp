#include "hpt/space.hpp"

#include <functional>
#include <stdexcept>

namespace hpt {

namespace {

size_t combine(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

BigradedSpace::BigradedSpace(Field field, std::vector<BasisElement> basis)
    : field_(std::move(field)), basis_(std::move(basis)) {
  size_t h = combine(static_cast<size_t>(field_.kind()),
                     static_cast<size_t>(field_.characteristic()));
  for (int i = 0; i < static_cast<int>(basis_.size()); ++i) {
    const BasisElement& e = basis_[i];
    if (!index_.emplace(e.name, i).second)
      throw std::invalid_argument("duplicate basis name '" + e.name + "'");
    by_bidegree_[{e.degree, e.weight}].push_back(i);
    h = combine(h, std::hash<std::string>{}(e.name));
    h = combine(h, static_cast<size_t>(e.degree * 31 + e.weight));
  }
  hash_ = h;
}

int BigradedSpace::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

const std::vector<int>& BigradedSpace::indices_at(int degree, int weight) const {
  static const std::vector<int> empty;
  auto it = by_bidegree_.find({degree, weight});
  return it == by_bidegree_.end() ? empty : it->second;
}

std::vector<std::pair<int, int>> BigradedSpace::occupied_bidegrees() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(by_bidegree_.size());
  for (const auto& [key, idx] : by_bidegree_)
    if (!idx.empty()) out.push_back(key);
  return out;
}

bool BigradedSpace::operator==(const BigradedSpace& o) const {
  if (this == &o) return true;
  if (hash_ != o.hash_ || field_ != o.field_ || basis_.size() != o.basis_.size())
    return false;
  return basis_ == o.basis_;
}

SpacePtr make_space(const Field& field, std::vector<BasisElement> basis) {
  return std::make_shared<BigradedSpace>(field, std::move(basis));
}

SpacePtr power_space(const SpacePtr& x, int n) {
  if (n < 1) throw std::invalid_argument("tensor power arity must be >= 1");
  if (n == 1) return x;
  const int d = x->dim();
  std::vector<BasisElement> basis;
  if (d > 0) {
    size_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<size_t>(d);
    basis.reserve(total);
    std::vector<int> tuple(n, 0);
    while (true) {
      BasisElement e;
      for (int i = 0; i < n; ++i) {
        const BasisElement& c = x->at(tuple[i]);
        if (i) e.name += '|';
        e.name += c.name;
        e.degree += c.degree;
        e.weight += c.weight;
      }
      basis.push_back(std::move(e));
      int pos = n - 1;
      while (pos >= 0 && ++tuple[pos] == d) tuple[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return make_space(x->field(), std::move(basis));
}

SpacePtr tensor_space_of(const SpacePtr& a, const SpacePtr& b) {
  if (a->field() != b->field())
    throw std::invalid_argument("tensor product of spaces over different fields");
  std::vector<BasisElement> basis;
  basis.reserve(static_cast<size_t>(a->dim()) * static_cast<size_t>(b->dim()));
  for (int i = 0; i < a->dim(); ++i)
    for (int j = 0; j < b->dim(); ++j) {
      const BasisElement& u = a->at(i);
      const BasisElement& v = b->at(j);
      basis.push_back({u.name + "|" + v.name, u.degree + v.degree, u.weight + v.weight});
    }
  return make_space(a->field(), std::move(basis));
}

}  // namespace hpt
