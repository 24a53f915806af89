#pragma once

#include <vector>

#include "hpt/space.hpp"

namespace hpt {

struct Entry {
  int to;
  Scalar coeff;
  bool operator==(const Entry& o) const { return to == o.to && coeff == o.coeff; }
};

/** Element of a space: sparse coordinates in the basis, sorted by index. */
struct Vec {
  SpacePtr space;
  std::vector<Entry> entries;
  bool is_zero() const { return entries.empty(); }
};

Vec basis_vec(const SpacePtr& space, int index);
Vec make_vec(const SpacePtr& space, std::vector<Entry> entries);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_eq(const Vec& a, const Vec& b);
/** True if v is homogeneous; then reports its bidegree. Zero vectors are rejected. */
bool vec_bidegree(const Vec& v, int& degree, int& weight);

/**
 * A linear map of homogeneous bidegree (r, s) between bigraded spaces,
 * stored column-sparse: column i lists the image of basis element i, sorted
 * by target index with no zero coefficients. Every inserted entry is checked
 * against the declared bidegree, so a map can never silently leave its
 * (p, n) -> (p+r, n-s) lane.
 */
class GradedMap {
public:
  GradedMap(SpacePtr source, SpacePtr target, Bidegree bidegree);

  static GradedMap identity(const SpacePtr& space);

  const SpacePtr& source() const { return source_; }
  const SpacePtr& target() const { return target_; }
  const Bidegree& bidegree() const { return bidegree_; }
  int total_degree() const { return bidegree_.total(); }
  const Field& field() const { return source_->field(); }

  const std::vector<Entry>& column(int i) const { return cols_[i]; }
  /** Accumulate c into entry (from -> to). Throws if the bidegree lane is violated. */
  void add_term(int from, int to, const Scalar& c);
  /** Same, addressing basis elements by name. */
  void add_term(const std::string& from, const std::string& to, const Scalar& c);
  /** Replace a column wholesale; entries must be sorted, nonzero, lane-checked. */
  void set_column(int from, std::vector<Entry> entries);

  bool is_zero() const;
  long nnz() const;
  bool operator==(const GradedMap& o) const;
  bool operator!=(const GradedMap& o) const { return !(*this == o); }

private:
  SpacePtr source_, target_;
  Bidegree bidegree_;
  std::vector<std::vector<Entry>> cols_;
};

/** f after g. Throws unless g maps into the source of f (same field). */
GradedMap compose(const GradedMap& f, const GradedMap& g);
GradedMap map_add(const GradedMap& f, const GradedMap& g);
GradedMap map_sub(const GradedMap& f, const GradedMap& g);
GradedMap map_scale(const Scalar& c, const GradedMap& f);
GradedMap map_neg(const GradedMap& f);
Vec apply(const GradedMap& f, const Vec& v);

/**
 * Tensor product of maps evaluated with the Koszul rule: on a decomposable
 * source tuple (a_1 | ... | a_k),
 *
 *   (f_1 (x) ... (x) f_k) (a_1 | ... | a_k)
 *     = (-1)^{sum_{i<j} |a_i| |f_j|}  f_1(a_1) | ... | f_k(a_k),
 *
 * where |.| is total degree. `source` must be the tensor product of the
 * factor sources in order (row-major indexing), `target` of the factor
 * targets; both are usually power_space / tensor_space_of products.
 */
GradedMap tensor_of_maps(const std::vector<const GradedMap*>& factors,
                         const SpacePtr& source, const SpacePtr& target);

/** Binary tensor product u (x) v; constructs the product spaces. */
GradedMap tensor_map(const GradedMap& u, const GradedMap& v);

/**
 * a_1 | ... | a_k as an element of the product space (row-major factor
 * order). Elements carry no Koszul signs; those belong to map evaluation.
 */
Vec vec_tensor(const std::vector<const Vec*>& factors, const SpacePtr& product);

/**
 * Exact inverse of a map whose matrix is a signed permutation with
 * invertible scales (every column one entry, columns hitting every target
 * exactly once), e.g. iterated suspensions. Throws otherwise.
 */
GradedMap invert_permutation_map(const GradedMap& f);

}  // namespace hpt
