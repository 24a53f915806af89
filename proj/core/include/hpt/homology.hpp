#pragma once

#include "hpt/complex.hpp"

namespace hpt {

struct HomologyPiece {
  int degree = 0;
  int weight = 0;
  /* Cycles whose classes form a basis of H^degree(weight). */
  std::vector<Vec> representatives;
};

struct HomologyBasis {
  std::vector<HomologyPiece> pieces;  // (degree, weight) lexicographic, nonzero pieces only
  int betti(int degree, int weight) const;
  int total_dim() const;
};

/**
 * Representatives per bidegree by exact Gaussian elimination: the kernel of
 * d is computed column by column in basis order, boundaries are swept out,
 * and the surviving kernel vectors are returned. Pivots are always the first
 * nonzero entry in basis order, so output is deterministic.
 */
HomologyBasis homology_basis(const Complex& c);

/** Cycle/boundary tests and homology coordinates for one fixed complex. */
class HomologySolver {
public:
  explicit HomologySolver(const Complex& c);
  ~HomologySolver();
  HomologySolver(HomologySolver&&) noexcept;

  const Complex& complex() const { return c_; }
  const HomologyBasis& basis() const { return basis_; }

  bool is_cycle(const Vec& v) const;
  bool is_boundary(const Vec& v) const;
  /** Some u with d(u) = v, deterministic in basis order. Throws if v is not a boundary. */
  Vec boundary_preimage(const Vec& v) const;
  /**
   * Coordinates of [v] in the representative basis at (degree, weight).
   * v must be a cycle supported at that bidegree (or zero). Length equals
   * the Betti number there.
   */
  std::vector<Scalar> class_coords(const Vec& v, int degree, int weight) const;

private:
  struct Piece;
  const Piece* piece_at(int degree, int weight) const;

  Complex c_;
  HomologyBasis basis_;
  std::vector<Piece> pieces_;
};

}  // namespace hpt
