#include "hpt/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace hpt {

namespace {

using Dense = std::vector<Scalar>;  // coordinates over a fixed index set

/* Columns of d out of the given source indices, written in coordinates of
   the target index set (positions of `targets` in order). */
std::vector<Dense> restricted_columns(const GradedMap& d, const std::vector<int>& sources,
                                      const std::vector<int>& targets) {
  std::vector<int> pos(d.target()->dim(), -1);
  for (int i = 0; i < static_cast<int>(targets.size()); ++i) pos[targets[i]] = i;
  std::vector<Dense> cols;
  cols.reserve(sources.size());
  const Field& F = d.field();
  for (int s : sources) {
    Dense col(targets.size(), F.zero());
    for (const Entry& e : d.column(s)) col[pos[e.to]] = e.coeff;
    cols.push_back(std::move(col));
  }
  return cols;
}

/* Incremental column echelonizer: feed columns, learn which are independent. */
class Echelon {
public:
  explicit Echelon(const Field& f) : F(f) {}

  /* Reduce v in place against the rows collected so far; returns true and
     absorbs it when independent. */
  bool absorb(Dense v) {
    reduce(v);
    int p = pivot_of(v);
    if (p < 0) return false;
    Scalar inv = F.inv(v[p]);
    for (Scalar& x : v) x = F.mul(inv, x);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  /* True iff v lies in the current span. */
  bool contains(Dense v) const {
    reduce(v);
    return pivot_of(v) < 0;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

private:
  void reduce(Dense& v) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
      const Scalar& c = v[pivots_[i]];
      if (F.is_zero(c)) continue;
      Scalar factor = c;
      for (size_t j = 0; j < v.size(); ++j)
        v[j] = F.sub(v[j], F.mul(factor, rows_[i][j]));
    }
  }
  int pivot_of(const Dense& v) const {
    for (size_t j = 0; j < v.size(); ++j)
      if (!F.is_zero(v[j])) return static_cast<int>(j);
    return -1;
  }

  const Field& F;
  std::vector<Dense> rows_;
  std::vector<int> pivots_;
};

/* Kernel basis of the map with the given columns (source coordinates),
   via column echelon form; deterministic in source order. */
std::vector<Dense> kernel_basis(const std::vector<Dense>& cols, size_t target_dim,
                                const Field& F) {
  const size_t n = cols.size();
  /* Augment each column with the standard basis below; echelonize on the
     target part; columns whose target part dies yield kernel vectors. */
  std::vector<Dense> work;
  work.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    Dense w(target_dim + n, F.zero());
    std::copy(cols[i].begin(), cols[i].end(), w.begin());
    w[target_dim + i] = F.one();
    work.push_back(std::move(w));
  }
  std::vector<Dense> reduced;  // columns with nonzero target part, target-pivot normalized
  std::vector<int> pivots;
  std::vector<Dense> kernel;
  for (size_t i = 0; i < n; ++i) {
    Dense w = std::move(work[i]);
    for (size_t r = 0; r < reduced.size(); ++r) {
      const Scalar c = w[pivots[r]];
      if (F.is_zero(c)) continue;
      for (size_t j = 0; j < w.size(); ++j)
        w[j] = F.sub(w[j], F.mul(c, reduced[r][j]));
    }
    int p = -1;
    for (size_t j = 0; j < target_dim; ++j)
      if (!F.is_zero(w[j])) { p = static_cast<int>(j); break; }
    if (p < 0) {
      kernel.push_back(Dense(w.begin() + target_dim, w.end()));
    } else {
      Scalar inv = F.inv(w[p]);
      for (Scalar& x : w) x = F.mul(inv, x);
      reduced.push_back(std::move(w));
      pivots.push_back(p);
    }
  }
  return kernel;
}

Vec dense_to_vec(const SpacePtr& space, const std::vector<int>& indices, const Dense& v,
                 const Field& F) {
  std::vector<Entry> entries;
  for (size_t i = 0; i < indices.size(); ++i)
    if (!F.is_zero(v[i])) entries.push_back({indices[i], v[i]});
  return make_vec(space, std::move(entries));
}

}  // namespace

int HomologyBasis::betti(int degree, int weight) const {
  for (const HomologyPiece& p : pieces)
    if (p.degree == degree && p.weight == weight)
      return static_cast<int>(p.representatives.size());
  return 0;
}

int HomologyBasis::total_dim() const {
  int n = 0;
  for (const HomologyPiece& p : pieces) n += static_cast<int>(p.representatives.size());
  return n;
}

struct HomologySolver::Piece {
  int degree = 0, weight = 0;
  std::vector<int> indices;          // basis indices of the complex at this bidegree
  std::vector<Dense> boundary_span;  // independent boundary columns, local coords
  std::vector<Dense> rep_coords;     // representative cycles, local coords
};

HomologySolver::~HomologySolver() = default;
HomologySolver::HomologySolver(HomologySolver&&) noexcept = default;

HomologySolver::HomologySolver(const Complex& c) : c_(c) {
  const Field& F = c_.space->field();
  for (auto [degree, weight] : c_.space->occupied_bidegrees()) {
    Piece piece;
    piece.degree = degree;
    piece.weight = weight;
    piece.indices = c_.space->indices_at(degree, weight);

    const std::vector<int>& above = c_.space->indices_at(degree + 1, weight);
    const std::vector<int>& below = c_.space->indices_at(degree - 1, weight);

    std::vector<Dense> d_here = restricted_columns(c_.d, piece.indices, above);
    std::vector<Dense> kernel = kernel_basis(d_here, above.size(), F);

    Echelon ech(F);
    for (Dense& col : restricted_columns(c_.d, below, piece.indices))
      if (ech.absorb(col)) piece.boundary_span.push_back(std::move(col));

    Echelon sweep(F);
    for (const Dense& b : piece.boundary_span) sweep.absorb(b);
    for (Dense& k : kernel) {
      Dense copy = k;
      if (sweep.absorb(std::move(k))) piece.rep_coords.push_back(std::move(copy));
    }

    if (!piece.rep_coords.empty()) {
      HomologyPiece out;
      out.degree = degree;
      out.weight = weight;
      for (const Dense& r : piece.rep_coords)
        out.representatives.push_back(dense_to_vec(c_.space, piece.indices, r, F));
      basis_.pieces.push_back(std::move(out));
    }
    pieces_.push_back(std::move(piece));
  }
}

const HomologySolver::Piece* HomologySolver::piece_at(int degree, int weight) const {
  for (const Piece& p : pieces_)
    if (p.degree == degree && p.weight == weight) return &p;
  return nullptr;
}

bool HomologySolver::is_cycle(const Vec& v) const {
  return apply(c_.d, v).is_zero();
}

bool HomologySolver::is_boundary(const Vec& v) const {
  if (v.is_zero()) return true;
  int degree, weight;
  if (!vec_bidegree(v, degree, weight))
    throw std::invalid_argument("boundary test requires a homogeneous vector");
  const Piece* p = piece_at(degree, weight);
  if (!p) return false;
  const Field& F = c_.space->field();
  std::vector<int> pos(c_.space->dim(), -1);
  for (int i = 0; i < static_cast<int>(p->indices.size()); ++i) pos[p->indices[i]] = i;
  Dense local(p->indices.size(), F.zero());
  for (const Entry& e : v.entries) local[pos[e.to]] = e.coeff;
  Echelon ech(F);
  for (const Dense& b : p->boundary_span) ech.absorb(b);
  return ech.contains(local);
}

Vec HomologySolver::boundary_preimage(const Vec& v) const {
  const Field& F = c_.space->field();
  if (v.is_zero()) return make_vec(c_.space, {});
  int degree, weight;
  if (!vec_bidegree(v, degree, weight))
    throw std::invalid_argument("boundary preimage requires a homogeneous vector");
  const Piece* p = piece_at(degree, weight);
  if (!p) throw std::invalid_argument("preimage of a non-boundary requested");
  const std::vector<int>& below = c_.space->indices_at(degree - 1, weight);

  std::vector<int> pos(c_.space->dim(), -1);
  for (int i = 0; i < static_cast<int>(p->indices.size()); ++i) pos[p->indices[i]] = i;
  const size_t rows = p->indices.size();
  Dense local(rows, F.zero());
  for (const Entry& e : v.entries) local[pos[e.to]] = e.coeff;

  /* Solve d x = v over the bidegree below, tracking combinations in an
     augmented tail exactly as in class_coords. */
  std::vector<Dense> cols = restricted_columns(c_.d, below, p->indices);
  const size_t n = cols.size();
  std::vector<Dense> reduced;
  std::vector<int> pivots;
  for (size_t i = 0; i < n; ++i) {
    Dense w = std::move(cols[i]);
    w.resize(rows + n, F.zero());
    w[rows + i] = F.one();
    for (size_t r = 0; r < reduced.size(); ++r) {
      const Scalar c = w[pivots[r]];
      if (F.is_zero(c)) continue;
      for (size_t j = 0; j < w.size(); ++j)
        w[j] = F.sub(w[j], F.mul(c, reduced[r][j]));
    }
    int piv = -1;
    for (size_t j = 0; j < rows; ++j)
      if (!F.is_zero(w[j])) { piv = static_cast<int>(j); break; }
    if (piv < 0) continue;
    Scalar inv = F.inv(w[piv]);
    for (Scalar& x : w) x = F.mul(inv, x);
    reduced.push_back(std::move(w));
    pivots.push_back(piv);
  }
  Dense rhs(local);
  rhs.resize(rows + n, F.zero());
  for (size_t r = 0; r < reduced.size(); ++r) {
    const Scalar c = rhs[pivots[r]];
    if (F.is_zero(c)) continue;
    for (size_t j = 0; j < rhs.size(); ++j)
      rhs[j] = F.sub(rhs[j], F.mul(c, reduced[r][j]));
  }
  for (size_t j = 0; j < rows; ++j)
    if (!F.is_zero(rhs[j]))
      throw std::invalid_argument("preimage of a non-boundary requested");
  std::vector<Entry> entries;
  for (size_t i = 0; i < n; ++i) {
    Scalar c = F.neg(rhs[rows + i]);
    if (!F.is_zero(c)) entries.push_back({below[i], std::move(c)});
  }
  return make_vec(c_.space, std::move(entries));
}

std::vector<Scalar> HomologySolver::class_coords(const Vec& v, int degree, int weight) const {
  const Field& F = c_.space->field();
  const Piece* p = piece_at(degree, weight);
  const size_t betti = p ? p->rep_coords.size() : 0;
  if (v.is_zero()) return std::vector<Scalar>(betti, F.zero());

  int vd, vw;
  if (!vec_bidegree(v, vd, vw) || vd != degree || vw != weight)
    throw std::invalid_argument("vector is not homogeneous at the requested bidegree");
  if (!is_cycle(v)) throw std::invalid_argument("class of a non-cycle requested");
  if (!p) throw std::invalid_argument("no such bidegree in the complex");

  std::vector<int> pos(c_.space->dim(), -1);
  for (int i = 0; i < static_cast<int>(p->indices.size()); ++i) pos[p->indices[i]] = i;
  Dense local(p->indices.size(), F.zero());
  for (const Entry& e : v.entries) local[pos[e.to]] = e.coeff;

  /* Solve [boundaries | representatives] x = v by augmented elimination; the
     representative block of x is the class. */
  const size_t nb = p->boundary_span.size();
  const size_t n = nb + betti;
  std::vector<Dense> aug;
  aug.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const Dense& src = i < nb ? p->boundary_span[i] : p->rep_coords[i - nb];
    Dense w(src);
    w.resize(src.size() + n, F.zero());
    w[src.size() + i] = F.one();
    aug.push_back(std::move(w));
  }
  const size_t rows = p->indices.size();
  std::vector<Dense> reduced;
  std::vector<int> pivots;
  for (Dense& w : aug) {
    for (size_t r = 0; r < reduced.size(); ++r) {
      const Scalar c = w[pivots[r]];
      if (F.is_zero(c)) continue;
      for (size_t j = 0; j < w.size(); ++j)
        w[j] = F.sub(w[j], F.mul(c, reduced[r][j]));
    }
    int piv = -1;
    for (size_t j = 0; j < rows; ++j)
      if (!F.is_zero(w[j])) { piv = static_cast<int>(j); break; }
    if (piv < 0) continue;  // dependent column
    Scalar inv = F.inv(w[piv]);
    for (Scalar& x : w) x = F.mul(inv, x);
    reduced.push_back(std::move(w));
    pivots.push_back(piv);
  }
  /* Back-substitute the target vector through the recorded combinations. */
  Dense rhs(local);
  rhs.resize(rows + n, F.zero());
  for (size_t r = 0; r < reduced.size(); ++r) {
    const Scalar c = rhs[pivots[r]];
    if (F.is_zero(c)) continue;
    for (size_t j = 0; j < rhs.size(); ++j)
      rhs[j] = F.sub(rhs[j], F.mul(c, reduced[r][j]));
  }
  for (size_t j = 0; j < rows; ++j)
    if (!F.is_zero(rhs[j]))
      throw std::invalid_argument("cycle not spanned by boundaries and representatives");
  std::vector<Scalar> coords(betti, F.zero());
  for (size_t i = 0; i < betti; ++i) coords[i] = F.neg(rhs[rows + nb + i]);
  return coords;
}

HomologyBasis homology_basis(const Complex& c) {
  return HomologySolver(c).basis();
}

}  // namespace hpt
