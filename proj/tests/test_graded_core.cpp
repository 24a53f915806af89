#include "doctest.h"
#include "helpers.hpp"
#include "hpt/complex.hpp"

using namespace hpt;
using namespace hpt_test;

namespace {

/* Two-term complex k[a] -> k[b] in the given degrees, d(a) = b. */
Complex two_term(const Field& F, int deg, int weight = 0) {
  SpacePtr s = make_space(F, {{"a", deg, weight}, {"b", deg + 1, weight}});
  GradedMap d(s, s, {1, 0});
  d.add_term(0, 1, F.one());
  return make_complex(s, d);
}

}  // namespace

TEST_CASE("spaces enforce unique names and expose bidegree slices") {
  Field Q;
  CHECK_THROWS_AS(make_space(Q, {{"a", 0, 0}, {"a", 1, 0}}), std::invalid_argument);
  SpacePtr s = make_space(Q, {{"x", 0, 2}, {"y", 1, -1}, {"z", 1, -1}});
  CHECK(s->dim() == 3);
  CHECK(s->index_of("y") == 1);
  CHECK(s->index_of("w") == -1);
  CHECK(s->indices_at(1, -1) == std::vector<int>{1, 2});
  CHECK(s->indices_at(5, 5).empty());
}

TEST_CASE("maps reject entries off the bidegree lane") {
  Field Q;
  SpacePtr s = make_space(Q, {{"x", 0, 0}, {"y", 1, 0}, {"w", 1, 1}});
  GradedMap u(s, s, {1, 0});
  u.add_term(0, 1, Q.one());
  CHECK_THROWS_AS(u.add_term(0, 2, Q.one()), std::invalid_argument);  // weight off
  CHECK_THROWS_AS(u.add_term(1, 0, Q.one()), std::invalid_argument);  // degree off
  CHECK(u.nnz() == 1);
  /* accumulation to zero removes the entry */
  u.add_term(0, 1, Q.from_int(-1));
  CHECK(u.is_zero());
}

TEST_CASE("composition adds bidegrees and rejects mismatched shapes") {
  Field Q;
  std::mt19937_64 rng(7);
  Complex A = random_complex(rng, Q, 6, -2, 2);
  GradedMap u(A.space, A.space, {1, 0});
  GradedMap v(A.space, A.space, {0, 1});
  CHECK(compose(u, v).bidegree() == Bidegree{1, 1});

  SpacePtr other = make_space(Q, {{"q", 0, 0}});
  GradedMap w(other, other, {2, 0});
  CHECK_THROWS_WITH_AS(compose(u, w), doctest::Contains("bidegree"), std::invalid_argument);
}

TEST_CASE("zero maps with different shapes are distinct") {
  Field Q;
  SpacePtr s = make_space(Q, {{"x", 0, 0}});
  GradedMap z1(s, s, {1, 0});
  GradedMap z2(s, s, {2, 0});
  CHECK(z1.is_zero());
  CHECK(z2.is_zero());
  CHECK(z1 != z2);
}

TEST_CASE("complex construction validates d.d = 0 and names the first failure") {
  Field Q;
  SpacePtr s = make_space(Q, {{"a", 0, 0}, {"b", 1, 0}, {"c", 2, 0}});
  GradedMap d(s, s, {1, 0});
  d.add_term(0, 1, Q.one());
  d.add_term(1, 2, Q.one());
  CHECK_THROWS_WITH_AS(make_complex(s, d), doctest::Contains("'a'"), std::invalid_argument);
  /* weight-breaking differential is impossible to even write down */
  SpacePtr t = make_space(Q, {{"a", 0, 0}, {"b", 1, 1}});
  GradedMap dt(t, t, {1, 0});
  CHECK_THROWS_AS(dt.add_term(0, 1, Q.one()), std::invalid_argument);
}

TEST_CASE("map_differential matches the hom-complex convention") {
  Field Q;
  Complex A = two_term(Q, 0);
  /* the differential itself is closed: delta(d) = dd + dd = 0 */
  CHECK(is_closed(A, A, A.d));

  /* identity is closed (it is a chain map) */
  CHECK(is_closed(A, A, GradedMap::identity(A.space)));

  /* delta of a degree -1 map H on the two-term complex: dH + Hd */
  GradedMap H(A.space, A.space, {-1, 0});
  H.add_term(1, 0, Q.one());
  GradedMap dH = map_differential(A, A, H);
  CHECK(dH == GradedMap::identity(A.space));
}

TEST_CASE("delta squares to zero and satisfies Leibniz on random maps") {
  Field F7(7);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const Field& F = trial % 2 ? static_cast<const Field&>(F7) : Field();
    Complex A = random_complex(rng, F, 6, -2, 2);
    Complex B = random_complex(rng, F, 6, -2, 2);
    Complex C = random_complex(rng, F, 6, -2, 2);
    GradedMap u = random_map(rng, B.space, C.space, random_bidegree(rng));
    GradedMap v = random_map(rng, A.space, B.space, random_bidegree(rng));

    CHECK(map_differential(A, B, map_differential(A, B, v)).is_zero());

    GradedMap lhs = map_differential(A, C, compose(u, v));
    GradedMap rhs = map_add(compose(map_differential(B, C, u), v),
                            u.total_degree() % 2 == 0
                                ? compose(u, map_differential(A, B, v))
                                : map_neg(compose(u, map_differential(A, B, v))));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tensor differential follows the total-degree sign") {
  Field Q;
  /* a at (0,0): d(a|b) = da|b + a|db */
  Complex A = two_term(Q, 0);
  Complex T = tensor_complex(A, A);
  int ab = T.space->index_of("a|b");
  int bb = T.space->index_of("b|b");
  REQUIRE(ab >= 0);
  Vec im = apply(T.d, basis_vec(T.space, ab));
  /* d(a|b) = (da)|b + a|(db) = b|b + 0 */
  CHECK(vec_eq(im, basis_vec(T.space, bb)));

  /* a at (1,0): d(a|a) = b|a - a|b */
  Complex A1 = two_term(Q, 1);
  Complex T1 = tensor_complex(A1, A1);
  Vec im1 = apply(T1.d, basis_vec(T1.space, T1.space->index_of("a|a")));
  Vec expect = vec_add(basis_vec(T1.space, T1.space->index_of("b|a")),
                       vec_scale(Q.from_int(-1), basis_vec(T1.space, T1.space->index_of("a|b"))));
  CHECK(vec_eq(im1, expect));
}

TEST_CASE("weights enter the Koszul sign") {
  Field Q;
  /* a at degree 1, weight 1: total degree 2, so the sign in front of a|db
     is +; dropping the weight from the exponent would give -. */
  SpacePtr s = make_space(Q, {{"a", 1, 1}, {"b", 2, 1}});
  GradedMap d(s, s, {1, 0});
  d.add_term(0, 1, Q.one());
  Complex A = make_complex(s, d);
  Complex T = tensor_complex(A, A);
  Vec im = apply(T.d, basis_vec(T.space, T.space->index_of("a|a")));
  Vec expect = vec_add(basis_vec(T.space, T.space->index_of("b|a")),
                       basis_vec(T.space, T.space->index_of("a|b")));
  CHECK(vec_eq(im, expect));

  /* same degrees, weight 0: total degree 1, sign flips */
  Complex A0 = two_term(Q, 1);
  Complex T0 = tensor_complex(A0, A0);
  Vec im0 = apply(T0.d, basis_vec(T0.space, T0.space->index_of("a|a")));
  Vec expect0 = vec_add(basis_vec(T0.space, T0.space->index_of("b|a")),
                        vec_scale(Q.from_int(-1), basis_vec(T0.space, T0.space->index_of("a|b"))));
  CHECK(vec_eq(im0, expect0));
}

TEST_CASE("(1 (x) d) on an odd element picks up a sign") {
  Field Q;
  Complex A1 = two_term(Q, 1);  // a odd
  GradedMap id = GradedMap::identity(A1.space);
  GradedMap one_d = tensor_map(id, A1.d);
  SpacePtr T = one_d.source();
  Vec im = apply(one_d, basis_vec(T, T->index_of("a|a")));
  CHECK(vec_eq(im, vec_scale(Q.from_int(-1),
                             basis_vec(one_d.target(), one_d.target()->index_of("a|b")))));
}

TEST_CASE("tensor interchange law on random maps") {
  Field Q;
  Field F3(3);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Field& F = trial % 2 ? static_cast<const Field&>(F3) : Field();
    Complex A = random_complex(rng, F, 4, -2, 2);
    Complex B = random_complex(rng, F, 4, -2, 2);
    Complex C = random_complex(rng, F, 4, -2, 2);
    Complex D = random_complex(rng, F, 4, -2, 2);
    Complex E = random_complex(rng, F, 4, -2, 2);
    Complex G = random_complex(rng, F, 4, -2, 2);
    GradedMap u = random_map(rng, B.space, C.space, random_bidegree(rng));
    GradedMap up = random_map(rng, A.space, B.space, random_bidegree(rng));
    GradedMap v = random_map(rng, E.space, G.space, random_bidegree(rng));
    GradedMap vp = random_map(rng, D.space, E.space, random_bidegree(rng));

    /* (u (x) v) . (u' (x) v') = (-1)^{|v||u'|} (u.u') (x) (v.v') */
    GradedMap lhs = compose(tensor_map(u, v), tensor_map(up, vp));
    GradedMap rhs = tensor_map(compose(u, up), compose(v, vp));
    if ((v.total_degree() * up.total_degree()) % 2) rhs = map_neg(rhs);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tensor of complexes squares to zero on random input") {
  Field Q;
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Complex A = random_complex(rng, Q, 5, -2, 2);
    Complex B = random_complex(rng, Q, 5, -2, 2);
    if (A.space->dim() == 0 || B.space->dim() == 0) continue;
    Complex T = tensor_complex(A, B);  // make_complex validates d.d = 0
    CHECK(compose(T.d, T.d).is_zero());
  }
}

TEST_CASE("suspension flips the differential and is closed") {
  Field Q;
  std::mt19937_64 rng(41);
  Complex A = random_complex(rng, Q, 6, -2, 2);
  Suspension S = suspend(A);
  for (int i = 0; i < A.space->dim(); ++i) {
    CHECK(S.complex.space->at(i).degree == A.space->at(i).degree - 1);
    CHECK(S.complex.space->at(i).weight == A.space->at(i).weight);
  }
  CHECK(S.s.bidegree() == Bidegree{-1, 0});
  CHECK(is_closed(A, S.complex, S.s));
  /* d_SC = -s d s^{-1} */
  CHECK(S.complex.d == map_neg(compose(S.s, compose(A.d, S.s_inv))));
  CHECK(compose(S.s_inv, S.s) == GradedMap::identity(A.space));

  /* double suspension: degrees drop by two, differential is restored */
  Suspension S2 = suspend(S.complex);
  for (int i = 0; i < A.space->dim(); ++i)
    CHECK(S2.complex.space->at(i).degree == A.space->at(i).degree - 2);
  GradedMap d_back = compose(S2.s, compose(S.s, compose(A.d, compose(S.s_inv, S2.s_inv))));
  CHECK(S2.complex.d == d_back);
}

TEST_CASE("conjugation by the suspension intertwines the hom differentials") {
  Field Q;
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    Complex A = random_complex(rng, Q, 6, -2, 2);
    Suspension S = suspend(A);
    GradedMap u = random_map(rng, A.space, A.space, random_bidegree(rng));
    GradedMap conj = compose(S.s, compose(u, S.s_inv));
    GradedMap lhs = map_differential(S.complex, S.complex, conj);
    GradedMap rhs = map_neg(compose(S.s, compose(map_differential(A, A, u), S.s_inv)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("degenerate spaces are legal") {
  Field Q;
  SpacePtr empty = make_space(Q, {});
  Complex Z = zero_complex(empty);
  CHECK(Z.space->dim() == 0);
  Complex T = tensor_complex(Z, Z);
  CHECK(T.space->dim() == 0);
  Suspension S = suspend(Z);
  CHECK(S.complex.space->dim() == 0);
  GradedMap u(empty, empty, {1, 0});
  CHECK(compose(u, u).is_zero());
}

TEST_CASE("permutation-map inversion") {
  Field Q;
  Complex A = two_term(Q, 0);
  Suspension S = suspend(A);
  GradedMap t2 = tensor_map(S.s, S.s);
  GradedMap t2_inv = invert_permutation_map(t2);
  CHECK(compose(t2_inv, t2) == GradedMap::identity(t2.source()));
  CHECK(compose(t2, t2_inv) == GradedMap::identity(t2.target()));
  GradedMap not_perm(A.space, A.space, {1, 0});
  CHECK_THROWS_AS(invert_permutation_map(not_perm), std::invalid_argument);
}
