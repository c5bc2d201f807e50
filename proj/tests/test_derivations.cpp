#include <doctest.h>

#include "support.hpp"

using namespace glmn;
using namespace testing_support;

namespace {

Loc L(Poly p, int k = 0) { return Loc(std::move(p), k); }

}  // namespace

TEST_CASE("derive_poly examples") {
  RingContext ctx(1, 1, 0);
  CHECK(derive(c(ctx, 1, 1), DerivationId{1, 2}) == c(ctx, 1, 2));
  CHECK(derive(c(ctx, 1, 2), DerivationId{1, 2}).is_zero());

  RingContext c21(2, 1, 0);
  auto sq = c(c21, 1, 1) * c(c21, 1, 1);
  CHECK(derive(sq, DerivationId{1, 3}) == 2 * c(c21, 1, 1) * c(c21, 1, 3));
}

TEST_CASE("derive_poly sign rule by hand") {
  RingContext ctx(1, 1, 0);
  // (c_11 c_21)_{12}D: the odd derivation passes c_21 when hitting c_11.
  auto f = c(ctx, 1, 1) * c(ctx, 2, 1);
  auto expected = -(c(ctx, 1, 2) * c(ctx, 2, 1)) + c(ctx, 1, 1) * c(ctx, 2, 2);
  CHECK(derive(f, DerivationId{1, 2}) == expected);
}

TEST_CASE("property: derive_poly matches the word-by-word product rule") {
  std::mt19937 rng(19);
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    RingContext ctx(m, n, 0);
    for (int trial = 0; trial < 25; ++trial) {
      auto f = random_poly(ctx, rng, 4, 4);
      for (int a = 1; a <= ctx.size(); ++a)
        for (int b = 1; b <= ctx.size(); ++b) CHECK(derive(f, DerivationId{a, b}) == derive_by_words(f, DerivationId{a, b}));
    }
  }
  RingContext f5(2, 2, 5);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_poly<ModP>(f5, rng, 4, 4);
    CHECK(derive(f, DerivationId{2, 4}) == derive_by_words(f, DerivationId{2, 4}));
  }
}

TEST_CASE("property: graded Leibniz rule") {
  std::mt19937 rng(23);
  RingContext ctx(2, 2, 0);
  for (int trial = 0; trial < 40; ++trial) {
    int pb = trial % 2;
    auto a = random_poly(ctx, rng, 3, 3, (trial / 2) % 2);
    auto b = random_poly(ctx, rng, 3, 3, pb);
    for (auto d : {DerivationId{1, 3}, DerivationId{3, 4}, DerivationId{2, 1}, DerivationId{4, 2}}) {
      int sign = (d.parity(ctx) && pb) ? -1 : 1;
      CHECK(derive(a * b, d) == sign * (derive(a, d) * b) + a * derive(b, d));
    }
  }
}

TEST_CASE("derive_loc examples") {
  RingContext ctx(1, 1, 0);
  auto inv = derive(L(k(ctx, 1), 1), DerivationId{1, 2});
  CHECK(loc_eq(inv, L(-c(ctx, 1, 2), 2)));
  auto f = c(ctx, 1, 1) * c(ctx, 2, 2);
  auto d0 = derive(L(f, 0), DerivationId{1, 2});
  CHECK(loc_eq(d0, L(derive(f, DerivationId{1, 2}), 0)));
  CHECK(derive(y<Rational>(ctx, 1, 2), DerivationId{1, 2}).is_zero());
}

TEST_CASE("property: derive_loc respects the localization and derive_compact agrees") {
  std::mt19937 rng(29);
  RingContext ctx(2, 1, 0);
  auto D = det_c11<Rational>(ctx);
  for (int trial = 0; trial < 15; ++trial) {
    auto f = random_poly(ctx, rng);
    int kf = trial % 3;
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        DerivationId d{a, b};
        CHECK(loc_eq(derive(L(f, kf), d), derive(L(f * D, kf + 1), d)));
        CHECK(loc_eq(derive(L(f, kf), d), derive_compact(L(f, kf), d)));
      }
  }
}

TEST_CASE("adjugate") {
  RingContext m1(1, 1, 0);
  CHECK(adjugate_entry<Rational>(m1, 1, 1) == k(m1, 1));
  RingContext m2(2, 1, 0);
  CHECK(adjugate_entry<Rational>(m2, 1, 1) == c(m2, 2, 2));
  CHECK(adjugate_entry<Rational>(m2, 1, 2) == -c(m2, 1, 2));
  RingContext m3(3, 1, 0);
  auto D = det_c11<Rational>(m3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      Poly s(m3);
      for (int a = 1; a <= 3; ++a) s += adjugate_entry<Rational>(m3, i, a) * c(m3, a, j);
      CHECK(s == (i == j ? D : Poly(m3)));
    }
}

TEST_CASE("y and phi") {
  RingContext m1(1, 2, 0);
  CHECK(loc_eq(y<Rational>(m1, 1, 3), L(c(m1, 1, 3), 1)));
  RingContext m2(2, 1, 0);
  auto y13 = y<Rational>(m2, 1, 3);
  CHECK(y13.d_power == 1);
  CHECK(y13.numerator == c(m2, 2, 2) * c(m2, 1, 3) - c(m2, 1, 2) * c(m2, 2, 3));
  CHECK((y13 * y13).is_zero());
  CHECK(y13.parity() == 1);
  CHECK_THROWS(y<Rational>(m2, 3, 3));

  RingContext m11(1, 1, 0);
  auto phi = phi_c<Rational>(m11, 2, 2);
  CHECK(phi.d_power == 1);
  CHECK(phi.numerator == c(m11, 1, 1) * c(m11, 2, 2) - c(m11, 2, 1) * c(m11, 1, 2));

  RingContext m22(2, 2, 0);
  for (int a = 3; a <= 4; ++a)
    for (int b = 3; b <= 4; ++b) {
      auto p = phi_c<Rational>(m22, a, b);
      CHECK(p.parity() == 0);
      // φ(c_ab) = c_ab - Σ_t c_at y_tb
      Loc direct(c(m22, a, b), 0);
      for (int t = 1; t <= 2; ++t) direct = direct - L(c(m22, a, t)) * y<Rational>(m22, t, b);
      CHECK(loc_eq(p, direct));
    }
}

TEST_CASE("det_plus, minor") {
  RingContext ctx(2, 1, 0);
  std::vector<int> one{1}, rep{1, 1}, both{1, 2};
  CHECK(det_plus<Rational>(ctx, one) == c(ctx, 1, 1));
  CHECK(det_plus<Rational>(ctx, rep).is_zero());
  CHECK(det_plus<Rational>(ctx, both) == det_c11<Rational>(ctx));
  CHECK(det_c11<Rational>(ctx) == c(ctx, 1, 1) * c(ctx, 2, 2) - c(ctx, 2, 1) * c(ctx, 1, 2));

  CHECK(minor<Rational>(ctx, {{1}, {1}}) == c(ctx, 1, 1));
  CHECK(minor<Rational>(ctx, {{1, 2}, {1, 2}}) == det_c11<Rational>(ctx));
  CHECK(minor<Rational>(ctx, {{1, 2}, {2, 1}}) == -det_c11<Rational>(ctx));
  // One odd column: ascending-row factor order.
  CHECK(minor<Rational>(ctx, {{1, 2}, {1, 3}}) == c(ctx, 1, 1) * c(ctx, 2, 3) - c(ctx, 1, 3) * c(ctx, 2, 1));
}

TEST_CASE("det_minus") {
  RingContext m11(1, 1, 0);
  std::vector<int> j2{2};
  CHECK(loc_eq(det_minus<Rational>(m11, j2), phi_c<Rational>(m11, 2, 2)));

  RingContext m12(1, 2, 0);
  std::vector<int> rep{3, 3}, j23{2, 3};
  auto z = det_minus<Rational>(m12, rep);
  CHECK(z.is_zero());
  auto d = det_minus<Rational>(m12, j23);
  CHECK(d.d_power == 2);
  auto expected = phi_c<Rational>(m12, 2, 2) * phi_c<Rational>(m12, 3, 3) - phi_c<Rational>(m12, 2, 3) * phi_c<Rational>(m12, 3, 2);
  CHECK(loc_eq(d, expected));
}

TEST_CASE("entry_replace_derive") {
  RingContext ctx(1, 2, 0);
  auto dm = [&](std::vector<int> cols) { return det_minus<Rational>(ctx, cols); };
  CHECK(loc_eq(entry_replace_derive<Rational>(ctx, {{2}}, 2, 3), dm({3})));
  CHECK(entry_replace_derive<Rational>(ctx, {{2}}, 3, 2).is_zero());
  auto two = entry_replace_derive<Rational>(ctx, {{2}, {2}}, 2, 3);
  CHECK(loc_eq(two, dm({3}) * dm({2}) + dm({2}) * dm({3})));
}

TEST_CASE("highest vector") {
  RingContext ctx(1, 1, 0);
  CHECK(loc_eq(highest_vector<Rational>(ctx, Weight{{0}, {0}}), L(k(ctx, 1))));
  auto v = highest_vector<Rational>(ctx, Weight{{2}, {1}});
  CHECK(loc_eq(v, L(c(ctx, 1, 1) * c(ctx, 1, 1)) * phi_c<Rational>(ctx, 2, 2)));
  CHECK(v.d_power == 1);
  auto neg = highest_vector<Rational>(ctx, Weight{{-1}, {0}});
  CHECK(neg.d_power == 1);
  CHECK(neg.numerator == k(ctx, 1));
  CHECK_THROWS(highest_vector<Rational>(ctx, Weight{{0}, {-1}}));
  RingContext c21(2, 1, 0);
  CHECK_THROWS(highest_vector<Rational>(c21, Weight{{0, 1}, {0}}));
}

TEST_CASE("y products and the derivation chain") {
  RingContext ctx(2, 2, 0);
  std::vector<int> rows{2, 1};
  auto yp = y_product<Rational>(ctx, rows);
  auto manual = y<Rational>(ctx, 2, 3) * y<Rational>(ctx, 2, 4) * y<Rational>(ctx, 1, 3) * y<Rational>(ctx, 1, 4);
  CHECK(loc_eq(yp, manual));
  CHECK_FALSE(yp.is_zero());
  auto seg = y_row_segment<Rational>(ctx, 1, 3, 3);
  CHECK(loc_eq(seg, y<Rational>(ctx, 1, 3)));
  auto v = highest_vector<Rational>(ctx, Weight{{1, 0}, {0, 0}});
  auto chain = row_derivation_chain(v, 1);
  CHECK(loc_eq(chain, derive(derive(v, DerivationId{1, 3}), DerivationId{1, 4})));
}
