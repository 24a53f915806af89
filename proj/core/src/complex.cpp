#include "hpt/complex.hpp"

#include <stdexcept>

namespace hpt {

Complex make_complex(SpacePtr space, GradedMap d) {
  if (!same_space(d.source(), space) || !same_space(d.target(), space))
    throw std::invalid_argument("differential must be an endomorphism of the space");
  if (d.bidegree() != Bidegree{1, 0})
    throw std::invalid_argument("differential must have bidegree (1,0)");
  GradedMap dd = compose(d, d);
  for (int i = 0; i < space->dim(); ++i)
    if (!dd.column(i).empty())
      throw std::invalid_argument("d.d != 0, first failure on basis element '" +
                                  space->at(i).name + "'");
  return Complex{std::move(space), std::move(d)};
}

Complex zero_complex(SpacePtr space) {
  GradedMap d(space, space, {1, 0});
  return Complex{std::move(space), std::move(d)};
}

GradedMap map_differential(const Complex& src, const Complex& tgt, const GradedMap& u) {
  if (!same_space(u.source(), src.space) || !same_space(u.target(), tgt.space))
    throw std::invalid_argument("map does not run between the given complexes");
  GradedMap left = compose(tgt.d, u);
  GradedMap right = compose(u, src.d);
  const int k = u.total_degree();
  /* (-1)^{k+1} */
  return (k % 2 == 0) ? map_sub(left, right) : map_add(left, right);
}

bool is_closed(const Complex& src, const Complex& tgt, const GradedMap& u) {
  return map_differential(src, tgt, u).is_zero();
}

Complex tensor_complex(const Complex& a, const Complex& b) {
  SpacePtr space = tensor_space_of(a.space, b.space);
  GradedMap id_a = GradedMap::identity(a.space);
  GradedMap id_b = GradedMap::identity(b.space);
  GradedMap d = map_add(tensor_of_maps({&a.d, &id_b}, space, space),
                        tensor_of_maps({&id_a, &b.d}, space, space));
  return make_complex(std::move(space), std::move(d));
}

Complex power_complex(const Complex& a, int n) {
  if (n < 1) throw std::invalid_argument("tensor power arity must be >= 1");
  if (n == 1) return a;
  SpacePtr space = power_space(a.space, n);
  GradedMap id = GradedMap::identity(a.space);
  GradedMap d(space, space, {1, 0});
  for (int i = 0; i < n; ++i) {
    std::vector<const GradedMap*> factors(n, &id);
    factors[i] = &a.d;
    d = map_add(d, tensor_of_maps(factors, space, space));
  }
  return make_complex(std::move(space), std::move(d));
}

Suspension suspend(const Complex& c) {
  std::vector<BasisElement> basis;
  basis.reserve(c.space->dim());
  for (const BasisElement& e : c.space->basis())
    basis.push_back({e.name, e.degree - 1, e.weight});
  SpacePtr sc = make_space(c.space->field(), std::move(basis));

  const Field& F = c.space->field();
  GradedMap s(c.space, sc, {-1, 0});
  GradedMap s_inv(sc, c.space, {1, 0});
  for (int i = 0; i < c.space->dim(); ++i) {
    s.add_term(i, i, F.one());
    s_inv.add_term(i, i, F.one());
  }

  GradedMap d_sc(sc, sc, {1, 0});
  for (int i = 0; i < c.space->dim(); ++i)
    for (const Entry& e : c.d.column(i)) d_sc.add_term(i, e.to, F.neg(e.coeff));

  return Suspension{make_complex(sc, std::move(d_sc)), std::move(s), std::move(s_inv)};
}

}  // namespace hpt
