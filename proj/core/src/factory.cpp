#include "hpt/factory.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hpt {

namespace {

int rand_in(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

// Closedness, associativity and unitality, asserted on every algebra this
// factory hands out; the sign conventions are checked, never trusted.
void assert_dga(const DgAlgebra& a, const char* who) {
  const Complex& c = a.complex;
  auto fail = [&](const char* what) {
    throw std::logic_error(std::string(who) + ": product failed its " + what + " check");
  };
  if (!is_closed(power_complex(c, 2), c, a.product)) fail("closedness");
  SpacePtr p2 = power_space(c.space, 2);
  SpacePtr p3 = power_space(c.space, 3);
  GradedMap one = GradedMap::identity(c.space);
  std::vector<const GradedMap*> left{&a.product, &one}, right{&one, &a.product};
  GradedMap assoc = map_sub(compose(a.product, tensor_of_maps(left, p3, p2)),
                            compose(a.product, tensor_of_maps(right, p3, p2)));
  if (!assoc.is_zero()) fail("associativity");
  for (int i = 0; i < c.space->dim(); ++i) {
    Vec x = basis_vec(c.space, i);
    std::vector<const Vec*> ux{&a.unit, &x}, xu{&x, &a.unit};
    if (!vec_eq(apply(a.product, vec_tensor(ux, p2)), x) ||
        !vec_eq(apply(a.product, vec_tensor(xu, p2)), x))
      fail("unitality");
  }
}

std::string face_label(const std::vector<std::string>& vertices, const std::vector<int>& face) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < face.size(); ++i) os << (i ? "," : "") << vertices[face[i]];
  os << '}';
  return os.str();
}

}  // namespace

SimplicialComplexDescription interval_description() { return {{"a", "b"}, {{0, 1}}}; }

SimplicialComplexDescription circle_description() {
  return {{"a", "b", "c"}, {{0, 1}, {0, 2}, {1, 2}}};
}

SimplicialComplexDescription torus_description() {
  // 3x3 vertex grid with wraparound, two triangles per cell
  SimplicialComplexDescription K;
  for (int v = 0; v < 9; ++v) K.vertices.push_back("v" + std::to_string(v));
  auto at = [](int i, int j) { return 3 * (i % 3) + (j % 3); };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::vector<int> t1{at(i, j), at(i, j + 1), at(i + 1, j + 1)};
      std::vector<int> t2{at(i, j), at(i + 1, j), at(i + 1, j + 1)};
      std::sort(t1.begin(), t1.end());
      std::sort(t2.begin(), t2.end());
      K.facets.push_back(t1);
      K.facets.push_back(t2);
    }
  return K;
}

DgAlgebra cochain_dga(const SimplicialComplexDescription& K, const Field& F) {
  const int nv = static_cast<int>(K.vertices.size());
  std::set<std::vector<int>> faces;
  for (int v = 0; v < nv; ++v) faces.insert({v});
  for (const auto& facet : K.facets) {
    if (facet.empty()) throw std::invalid_argument("empty facet");
    for (size_t i = 0; i < facet.size(); ++i) {
      if (facet[i] < 0 || facet[i] >= nv)
        throw std::invalid_argument("facet vertex index out of range");
      if (i && facet[i] <= facet[i - 1])
        throw std::invalid_argument("facet lists must be strictly increasing");
    }
    const int n = static_cast<int>(facet.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) face.push_back(facet[i]);
      faces.insert(face);
    }
  }

  std::vector<std::vector<int>> ordered(faces.begin(), faces.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<BasisElement> basis;
  std::map<std::vector<int>, int> index;
  for (const auto& face : ordered) {
    index[face] = static_cast<int>(basis.size());
    basis.push_back({face_label(K.vertices, face), static_cast<int>(face.size()) - 1, 0});
  }
  SpacePtr space = make_space(F, basis);

  GradedMap d(space, space, {1, 0});
  for (const auto& face : ordered) {
    if (face.size() < 2) continue;
    for (size_t i = 0; i < face.size(); ++i) {
      std::vector<int> sub = face;
      sub.erase(sub.begin() + static_cast<long>(i));
      d.add_term(index.at(sub), index.at(face), F.from_int(i % 2 ? -1 : 1));
    }
  }
  Complex complex = make_complex(space, std::move(d));

  SpacePtr p2 = power_space(space, 2);
  GradedMap product(p2, space, {0, 0});
  const int dim = space->dim();
  for (const auto& front : ordered)
    for (const auto& back : ordered) {
      if (front.back() != back.front()) continue;
      std::vector<int> joined = front;
      joined.insert(joined.end(), back.begin() + 1, back.end());
      auto it = index.find(joined);
      if (it == index.end()) continue;
      product.add_term(index.at(front) * dim + index.at(back), it->second, F.one());
    }

  std::vector<Entry> unit_entries;
  for (int v = 0; v < nv; ++v) unit_entries.push_back({index.at({v}), F.one()});
  std::sort(unit_entries.begin(), unit_entries.end(),
            [](const Entry& a, const Entry& b) { return a.to < b.to; });
  DgAlgebra out{std::move(complex), std::move(product), make_vec(space, std::move(unit_entries))};
  assert_dga(out, "cochain_dga");
  return out;
}

DgAlgebra truncated_polynomial_dga(const Field& F, int degree, int weight, int top) {
  if (top < 0) throw std::invalid_argument("truncation must be nonnegative");
  std::vector<BasisElement> basis;
  for (int i = 0; i <= top; ++i) {
    std::string label = i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i));
    basis.push_back({label, i * degree, i * weight});
  }
  SpacePtr space = make_space(F, std::move(basis));
  const int dim = top + 1;
  GradedMap product(power_space(space, 2), space, {0, 0});
  for (int i = 0; i <= top; ++i)
    for (int j = 0; j <= top && i + j <= top; ++j)
      product.add_term(i * dim + j, i + j, F.one());
  DgAlgebra out{zero_complex(space), std::move(product), basis_vec(space, 0)};
  assert_dga(out, "truncated_polynomial_dga");
  return out;
}

DgAlgebra dga_tensor(const DgAlgebra& a, const DgAlgebra& b) {
  const Field& F = a.complex.space->field();
  Complex complex = tensor_complex(a.complex, b.complex);
  const SpacePtr& T = complex.space;
  const int da = a.complex.space->dim();
  const int db = b.complex.space->dim();
  const int dt = T->dim();

  GradedMap product(power_space(T, 2), T, {0, 0});
  for (int u = 0; u < dt; ++u) {
    const int ia = u / db, ib = u % db;
    const BasisElement& eb = b.complex.space->at(ib);
    for (int v = 0; v < dt; ++v) {
      const int ja = v / db, jb = v % db;
      const BasisElement& ea = a.complex.space->at(ja);
      const int koszul = (eb.degree + eb.weight) * (ea.degree + ea.weight);
      const Scalar sgn = F.from_int(koszul % 2 ? -1 : 1);
      for (const Entry& pa : a.product.column(ia * da + ja))
        for (const Entry& pb : b.product.column(ib * db + jb))
          product.add_term(u * dt + v, pa.to * db + pb.to, F.mul(sgn, F.mul(pa.coeff, pb.coeff)));
    }
  }
  std::vector<const Vec*> units{&a.unit, &b.unit};
  Vec unit = vec_tensor(units, T);
  DgAlgebra out{std::move(complex), std::move(product), std::move(unit)};
  assert_dga(out, "dga_tensor");
  return out;
}

Contraction gaussian_contraction(const Complex& c) {
  const Field& F = c.space->field();
  Complex cur = c;
  GradedMap alpha = GradedMap::identity(c.space);
  GradedMap r = GradedMap::identity(c.space);
  GradedMap h(c.space, c.space, {-1, 0});

  for (;;) {
    const SpacePtr& S = cur.space;
    const int dim = S->dim();
    std::vector<int> order(dim);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
      const BasisElement &a = S->at(i), &b = S->at(j);
      return std::tie(a.degree, a.weight, i) < std::tie(b.degree, b.weight, j);
    });
    int a_idx = -1;
    for (int i : order)
      if (!cur.d.column(i).empty()) {
        a_idx = i;
        break;
      }
    if (a_idx < 0) break;
    const int b_idx = cur.d.column(a_idx).front().to;
    const Scalar lambda = cur.d.column(a_idx).front().coeff;

    std::vector<BasisElement> next_basis;
    std::vector<int> remap(dim, -1);
    for (int i = 0; i < dim; ++i) {
      if (i == a_idx || i == b_idx) continue;
      remap[i] = static_cast<int>(next_basis.size());
      next_basis.push_back(S->at(i));
    }
    SpacePtr next = make_space(F, std::move(next_basis));

    GradedMap alpha_step(next, S, {0, 0});
    GradedMap r_step(S, next, {0, 0});
    GradedMap h_step(S, S, {-1, 0});
    h_step.add_term(b_idx, a_idx, F.inv(lambda));
    for (int i = 0; i < dim; ++i) {
      if (remap[i] < 0) continue;
      alpha_step.add_term(remap[i], i, F.one());
      r_step.add_term(i, remap[i], F.one());
      for (const Entry& e : cur.d.column(i))
        if (e.to == b_idx) alpha_step.add_term(remap[i], a_idx, F.neg(F.div(e.coeff, lambda)));
    }
    for (const Entry& e : cur.d.column(a_idx))
      if (e.to != b_idx) r_step.add_term(b_idx, remap[e.to], F.neg(F.div(e.coeff, lambda)));

    h = map_add(h, compose(alpha, compose(h_step, r)));
    alpha = compose(alpha, alpha_step);
    r = compose(r_step, r);
    cur = make_complex(next, compose(r_step, compose(cur.d, alpha_step)));
  }
  return make_contraction({c, cur, std::move(alpha), std::move(r), std::move(h)});
}

MasseyInstance massey_instance(const Field& F) {
  std::vector<BasisElement> basis{{"e", 0, 0},  {"x", 1, 0},  {"y", 1, 0},
                                  {"z", 1, 0},  {"u", 1, 0},  {"v", 1, 0},
                                  {"m1", 2, 0}, {"m2", 2, 0}, {"g", 2, 0}};
  SpacePtr space = make_space(F, std::move(basis));
  GradedMap d(space, space, {1, 0});
  d.add_term("u", "m1", F.one());
  d.add_term("v", "m2", F.one());
  Complex complex = make_complex(space, std::move(d));

  GradedMap product(power_space(space, 2), space, {0, 0});
  const int dim = space->dim();
  for (int i = 0; i < dim; ++i) {
    product.add_term(0 * dim + i, i, F.one());
    if (i) product.add_term(i * dim + 0, i, F.one());
  }
  product.add_term("x|y", "m1", F.one());
  product.add_term("y|z", "m2", F.one());
  product.add_term("x|v", "g", F.one());

  DgAlgebra dga{std::move(complex), std::move(product), basis_vec(space, 0)};
  assert_dga(dga, "massey_instance");
  return {std::move(dga), basis_vec(space, 1), basis_vec(space, 2), basis_vec(space, 3)};
}

namespace {

// Matched-pair random complex: pair up elements one degree apart (so d.d = 0
// by construction), then conjugate by a random unipotent automorphism.
Complex random_complex(std::mt19937_64& rng, const Field& F, int max_dim, int wmin, int wmax) {
  const int dim = rand_in(rng, 1, std::max(1, max_dim));
  std::vector<BasisElement> basis;
  for (int i = 0; i < dim; ++i)
    basis.push_back(
        {"e" + std::to_string(i), rand_in(rng, 0, 2), rand_in(rng, wmin, wmax)});
  SpacePtr space = make_space(F, basis);

  GradedMap d0(space, space, {1, 0});
  std::vector<bool> used(dim, false);
  for (int a = 0; a < dim; ++a) {
    if (used[a] || rng() % 3 == 0) continue;
    for (int b = 0; b < dim; ++b) {
      if (used[b] || b == a) continue;
      if (basis[b].degree == basis[a].degree + 1 && basis[b].weight == basis[a].weight) {
        d0.add_term(a, b, F.from_int(rand_in(rng, 1, 3)));
        used[a] = used[b] = true;
        break;
      }
    }
  }

  GradedMap e(space, space, {0, 0});
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (basis[i].degree == basis[j].degree && basis[i].weight == basis[j].weight &&
          rng() % 2 == 0)
        e.add_term(i, j, F.from_int(rand_in(rng, -2, 2)));
  GradedMap id = GradedMap::identity(space);
  GradedMap g = map_add(id, e);
  GradedMap g_inv = id;
  GradedMap power = e;
  int sign = -1;
  for (int k = 1; k <= dim && !power.is_zero(); ++k) {
    g_inv = sign < 0 ? map_sub(g_inv, power) : map_add(g_inv, power);
    power = compose(power, e);
    sign = -sign;
  }
  return make_complex(space, compose(g_inv, compose(d0, g)));
}

}  // namespace

std::vector<SuiteInstance> random_suite(std::uint64_t seed, int count, int max_dim, int wmin,
                                        int wmax, const Field& F) {
  if (wmin > wmax) throw std::invalid_argument("empty weight range");
  std::mt19937_64 rng(seed);
  std::vector<SuiteInstance> out;
  out.reserve(static_cast<size_t>(std::max(count, 0)));

  for (int i = 0; i < count; ++i) {
    std::optional<DgAlgebra> dga;
    std::optional<Complex> plain;
    const int pick = rand_in(rng, 0, 5);
    switch (pick) {
      case 0:
        if (max_dim >= 3) dga = cochain_dga(interval_description(), F);
        break;
      case 1:
        if (max_dim >= 6) dga = cochain_dga(circle_description(), F);
        break;
      case 2:
        dga = truncated_polynomial_dga(F, rand_in(rng, 1, 2), rand_in(rng, wmin, wmax),
                                       std::min(rand_in(rng, 1, 3), max_dim - 1));
        break;
      case 3: {
        DgAlgebra first = truncated_polynomial_dga(F, 1, rand_in(rng, wmin, wmax), 1);
        DgAlgebra second = truncated_polynomial_dga(F, 2, rand_in(rng, wmin, wmax), 1);
        if (max_dim >= 4) dga = dga_tensor(first, second);
        break;
      }
      case 4:
        if (max_dim >= 6)
          dga = dga_tensor(cochain_dga(interval_description(), F),
                           truncated_polynomial_dga(F, 1, rand_in(rng, wmin, wmax), 1));
        break;
      default:
        break;
    }
    if (!dga) plain = random_complex(rng, F, max_dim, wmin, wmax);

    const Complex& complex = dga ? dga->complex : *plain;
    Contraction contraction = gaussian_contraction(complex);
    out.push_back(SuiteInstance{complex,
                                dga ? std::optional<GradedMap>(dga->product) : std::nullopt,
                                dga ? std::optional<Vec>(dga->unit) : std::nullopt,
                                std::move(contraction)});
  }
  return out;
}

SdrDatum noised_sdr(std::mt19937_64& rng, const Contraction& c) {
  const Complex& big = c.big();
  const Complex& small = c.small();
  const Field& F = big.space->field();

  GradedMap w(big.space, big.space, {-2, 0});
  for (int i = 0; i < big.space->dim(); ++i) {
    const BasisElement& s = big.space->at(i);
    for (int j : big.space->indices_at(s.degree - 2, s.weight))
      if (rng() % 100 < 70) {
        const int v = rand_in(rng, -2, 2);
        if (v) w.add_term(i, j, F.from_int(v));
      }
  }
  GradedMap h = map_add(c.h(), delta(big, big, w));

  // a closed small-side endomorphism conjugated into the middle also
  // preserves the SDR identities while wrecking r.h and h.alpha
  GradedMap y(small.space, small.space, {-1, 0});
  for (int i = 0; i < small.space->dim(); ++i) {
    const BasisElement& s = small.space->at(i);
    for (int j : small.space->indices_at(s.degree - 1, s.weight))
      if (rng() % 100 < 70) {
        const int v = rand_in(rng, -2, 2);
        if (v) y.add_term(i, j, F.from_int(v));
      }
  }
  if (is_closed(small, small, y)) h = map_add(h, compose(c.alpha(), compose(y, c.r())));

  return {big, small, c.alpha(), c.r(), std::move(h)};
}

}  // namespace hpt
