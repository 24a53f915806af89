#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hpt/field.hpp"

namespace hpt {

/** Bidegree (r, s) of a map: sends degree p, weight n to degree p+r, weight n-s. */
struct Bidegree {
  int r = 0;
  int s = 0;
  int total() const { return r + s; }
  Bidegree operator+(const Bidegree& o) const { return {r + o.r, s + o.s}; }
  bool operator==(const Bidegree& o) const { return r == o.r && s == o.s; }
  bool operator!=(const Bidegree& o) const { return !(*this == o); }
};

struct BasisElement {
  std::string name;
  int degree = 0;
  int weight = 0;
  /* Total degree, the exponent feeding every Koszul sign. */
  int total() const { return degree + weight; }
  bool operator==(const BasisElement& o) const {
    return name == o.name && degree == o.degree && weight == o.weight;
  }
};

/**
 * A bigraded vector space with an ordered, labeled basis.
 *
 * Basis order is part of the identity: serialization, elimination pivots and
 * tensor indexing all follow it. Spaces are immutable after construction and
 * shared by pointer; equality falls back to content so that independently
 * built copies interoperate.
 */
class BigradedSpace {
public:
  BigradedSpace(Field field, std::vector<BasisElement> basis);

  const Field& field() const { return field_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const BasisElement& at(int i) const { return basis_[i]; }
  const std::vector<BasisElement>& basis() const { return basis_; }

  /** Index of a named element, -1 if absent. */
  int index_of(const std::string& name) const;

  /** Indices of basis elements at the given bidegree (possibly empty). */
  const std::vector<int>& indices_at(int degree, int weight) const;
  /** Occupied bidegrees in (degree, weight) lexicographic order. */
  std::vector<std::pair<int, int>> occupied_bidegrees() const;

  size_t content_hash() const { return hash_; }
  bool operator==(const BigradedSpace& o) const;
  bool operator!=(const BigradedSpace& o) const { return !(*this == o); }

private:
  Field field_;
  std::vector<BasisElement> basis_;
  std::map<std::string, int> index_;
  std::map<std::pair<int, int>, std::vector<int>> by_bidegree_;
  size_t hash_;
};

using SpacePtr = std::shared_ptr<const BigradedSpace>;

SpacePtr make_space(const Field& field, std::vector<BasisElement> basis);

inline bool same_space(const SpacePtr& a, const SpacePtr& b) {
  return a == b || (a && b && *a == *b);
}

/**
 * n-fold tensor power with row-major (lexicographic) basis order; the label
 * of a tuple joins component labels with '|'. power_space(x, 1) is x itself,
 * so arity-1 tensor factors keep pointer identity.
 */
SpacePtr power_space(const SpacePtr& x, int n);

/** Binary tensor product of spaces, same ordering and label rule. */
SpacePtr tensor_space_of(const SpacePtr& a, const SpacePtr& b);

}  // namespace hpt
