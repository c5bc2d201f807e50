#include <doctest.h>

#include <stdexcept>

#include "glmn/characters.hpp"
#include "glmn/theorems.hpp"
#include "grids.hpp"

using namespace glmn;

namespace {

void check_pass(const VerificationReport& r, std::size_t instances) {
  INFO(r.target << " m=" << r.m << " n=" << r.n << " p=" << r.characteristic);
  CHECK(r.passed());
  CHECK(r.instances_checked == instances);
  for (const auto& f : r.failures) MESSAGE(f.instance << ": " << f.lhs << " vs " << f.rhs);
}

}  // namespace

TEST_CASE("lemma1 instance counts") {
  check_pass(verify_lemma1(1, 1, 0), 1);
  check_pass(verify_lemma1(2, 1, 0), 4);
  check_pass(verify_lemma1(2, 2, 0), 16);
  check_pass(verify_lemma1(2, 2, 3), 16);
}

TEST_CASE("lemma2") {
  check_pass(verify_lemma2(1, 1, 0), 1);
  check_pass(verify_lemma2(1, 2, 0), 8);
  check_pass(verify_lemma2(2, 2, 5), 16);
}

TEST_CASE("lemma3_4") {
  auto r = verify_lemma3_4(1, 2, 0);
  CHECK(r.passed());
  CHECK(r.instances_checked > 0);
  CHECK(verify_lemma3_4(2, 2, 5).passed());
  CHECK(verify_lemma3_4(1, 1, 0, 2).passed());
}

TEST_CASE("lemma5") {
  check_pass(verify_lemma5(Weight{{2}, {0}}, 0), 1);
  check_pass(verify_lemma5(Weight{{0}, {0}}, 0), 1);
  check_pass(verify_lemma5(Weight{{-1}, {0}}, 0), 1);
  check_pass(verify_lemma5(Weight{{2, -1}, {0, 0}}, 5), 2);
}

TEST_CASE("lemma6") {
  check_pass(verify_lemma6(1, 2, 0), 4);
  check_pass(verify_lemma6(2, 2, 5), 8);
}

TEST_CASE("prop7") {
  check_pass(verify_prop7(Weight{{1}, {0}}, 0), 1);
  check_pass(verify_prop7(Weight{{0}, {0}}, 0), 1);
  check_pass(verify_prop7(Weight{{1}, {0, 0}}, 0), 1);
  CHECK_THROWS_AS(verify_prop7(Weight{{1}, {-1}}, 0), std::invalid_argument);
}

TEST_CASE("lemma9, laplace9, jacobi") {
  check_pass(verify_lemma9(1, 1, 0), 1);
  check_pass(verify_lemma9(2, 1, 0), 3);
  check_pass(verify_laplace9(3, 1, 0), 18);
  check_pass(verify_jacobi(3, 1, 5), 18);
  auto j1 = verify_jacobi(1, 2, 0);
  CHECK(j1.passed());
  CHECK(j1.instances_checked == 0);
}

TEST_CASE("lemma10") {
  check_pass(verify_lemma10(Weight{{1, 0}, {0}}, 0, 1, 3), 1);
  check_pass(verify_lemma10(Weight{{0, 0}, {0}}, 0), 2);
  check_pass(verify_lemma10(Weight{{3, 1, -1}, {0}}, 5), 3);
  auto r = verify_lemma10(Weight{{2, 1}, {0, 0}}, 0);
  REQUIRE(r.notes.size() == 1);
  CHECK_THROWS(verify_lemma10(Weight{{1, 0}, {0}}, 0, 3, 3));
}

TEST_CASE("lemma11 and lemma13") {
  check_pass(verify_lemma11(1, 1, 0), 1);
  check_pass(verify_lemma11(2, 1, 0), 2);
  check_pass(verify_lemma11(1, 2, 0), 2);
  CHECK(verify_lemma13(1, 2, 0).passed());
  CHECK(verify_lemma13(2, 1, 0).passed());
  CHECK(verify_lemma13(2, 2, 5).passed());
}

TEST_CASE("prop12 and the top derivative") {
  auto a = verify_prop12_detailed(Weight{{1}, {0}}, 0);
  check_pass(a.report, 1);
  CHECK_FALSE(a.status.lhs_zero);
  auto b = verify_prop12_detailed(Weight{{0}, {0}}, 0);
  check_pass(b.report, 1);
  CHECK(b.status.lhs_zero);
  CHECK(b.status.predicted_zero);
  auto c = verify_prop12_detailed(Weight{{2}, {1}}, 3);
  check_pass(c.report, 1);
  CHECK(c.status.predicted_zero);
  CHECK(c.status.lhs_zero);
  CHECK(c.status.vy_nonzero);
  auto d = verify_prop12_detailed(Weight{{2}, {1}}, 0);
  CHECK_FALSE(d.status.lhs_zero);
}

TEST_CASE("verify_target dispatch") {
  for (const auto& t : verification_targets()) {
    std::optional<Weight> w;
    if (target_needs_weight(t)) w = Weight{{2, 1}, {1}};
    CHECK(verify_target(t, 2, 1, 0, w).passed());
  }
  CHECK_THROWS(verify_target("lemma7", 1, 1, 0, std::nullopt));
  CHECK_THROWS(verify_target("prop7", 1, 1, 0, std::nullopt));
}

TEST_CASE("closure oracle examples") {
  auto a = closure_oracle(Weight{{0}, {0}});
  CHECK(a.dim_closure == 1);
  CHECK(a.dim_induced == 2);
  CHECK_FALSE(a.irreducible);
  auto b = closure_oracle(Weight{{1}, {0}});
  CHECK(b.dim_closure == 2);
  CHECK(b.irreducible);
  auto c = closure_oracle(Weight{{1}, {1}});
  CHECK(c.dim_closure == 2);
  CHECK(c.dim_induced == 2);
  CHECK(c.irreducible);
  CHECK(c.normalized == Weight{{2}, {0}});
  CHECK_THROWS_AS(closure_oracle(Weight{{1}, {0}}, 4096, 5), std::invalid_argument);
  CHECK_THROWS_AS(closure_oracle(Weight{{4, 0}, {0, 0}}, 8), std::invalid_argument);
}

TEST_CASE("property: closure weight spaces and the kappa component") {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n)
      for (const auto& w : grids::dominant_weights(m, n, -1, 0, 2)) {
        auto res = closure_oracle(w);
        std::int64_t sum = 0;
        for (const auto& [wt, d] : res.weight_dims) sum += d;
        CHECK(sum == res.dim_closure);
        bool typical = is_typical(w, 0).typical;
        CHECK(res.irreducible == typical);
        CHECK((res.kappa_dim > 0) == typical);
        if (typical) CHECK(res.kappa_dim == 1);
        else CHECK(res.dim_closure < res.dim_induced);
      }
}

TEST_CASE("decision procedure examples") {
  auto a = decide_irreducible(Weight{{1}, {0}}, 0, std::nullopt);
  CHECK(a.induced == Verdict::Irreducible);
  CHECK(a.even_part == EvenPart::Irreducible);
  auto b = decide_irreducible(Weight{{0}, {0}}, 0, std::nullopt);
  CHECK(b.induced == Verdict::Reducible);
  auto c = decide_irreducible(Weight{{2}, {1}}, 3, true);
  CHECK(c.induced == Verdict::Reducible);
  CHECK_FALSE(c.typical);
  auto d = decide_irreducible(Weight{{2}, {1}}, 5, std::nullopt);
  CHECK(d.induced == Verdict::Indeterminate);
  CHECK(d.rationale.find("James-Mathas") != std::string::npos);
  auto e = decide_irreducible(Weight{{2}, {1}}, 5, true);
  CHECK(e.induced == Verdict::Irreducible);
  CHECK_THROWS_AS(decide_irreducible(Weight{{0, 1}, {0}}, 0, std::nullopt), std::invalid_argument);
  CHECK_THROWS_AS(decide_irreducible(Weight{{1}, {0}}, 2, std::nullopt), std::invalid_argument);
}

TEST_CASE("corollary verdicts") {
  CHECK(corollary_verdicts(Weight{{1}, {0}}, 0, std::nullopt).kac == Verdict::Irreducible);
  CHECK(corollary_verdicts(Weight{{0}, {0}}, 0, std::nullopt).kac == Verdict::Reducible);
  auto v = corollary_verdicts(Weight{{2}, {1}}, 5, false);
  CHECK(v.weyl == Verdict::Reducible);
  CHECK(v.kac == Verdict::Irreducible);
}

TEST_CASE("property: verdict invariant") {
  for (std::uint32_t p : {0u, 3u, 5u})
    for (const auto& w : grids::dominant_weights(2, 2, -2, -2, 2))
      for (std::optional<bool> ev : {std::optional<bool>{}, std::optional<bool>{true}, std::optional<bool>{false}}) {
        if (p == 0 && ev) continue;
        auto v = decide_irreducible(w, p, ev);
        if (!v.typical) CHECK(v.induced == Verdict::Reducible);
        else if (p == 0 || (ev && *ev)) CHECK(v.induced == Verdict::Irreducible);
        else if (ev) CHECK(v.induced == Verdict::Reducible);
        else CHECK(v.induced == Verdict::Indeterminate);
      }
}
