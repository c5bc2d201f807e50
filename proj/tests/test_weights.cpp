#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "glmn/weights.hpp"
#include "grids.hpp"

using namespace glmn;

using grids::partitions_up_to;

TEST_CASE("omega examples") {
  CHECK(omega(Weight{{0}, {0}}, 1, 1) == 0);
  CHECK(omega(Weight{{1}, {0}}, 1, 1) == 1);
  Weight w{{3, 1}, {2, 0}};
  CHECK(omega(w, 1, 1) == 6);
  CHECK(omega(w, 2, 2) == 0);
  CHECK_THROWS_AS(omega(w, 3, 1), std::out_of_range);
}

TEST_CASE("typicality examples") {
  for (std::uint32_t p : {0u, 3u, 5u, 7u}) {
    auto t = is_typical(Weight{{0}, {0}}, p);
    CHECK_FALSE(t.typical);
    CHECK(t.atypical_positions == std::vector<std::pair<int, int>>{{1, 1}});
  }
  Weight w{{2}, {1}};
  CHECK_FALSE(is_typical(w, 3).typical);
  CHECK(is_typical(w, 0).typical);
  CHECK(is_typical(w, 5).typical);
  CHECK(is_typical(w, 0).omega_matrix == std::vector<std::vector<long>>{{3}});
  CHECK_THROWS_AS(is_typical(w, 2), std::invalid_argument);
}

TEST_CASE("hook_to_weight examples") {
  auto e = hook_to_weight({}, 2, 3);
  CHECK(e.plus == std::vector<long>{0, 0});
  CHECK(e.minus == std::vector<long>{0, 0, 0});
  auto w = hook_to_weight({3, 2, 2, 1}, 2, 2);
  CHECK(w.plus == std::vector<long>{3, 2});
  CHECK(w.minus == std::vector<long>{2, 1});
  auto one = hook_to_weight({1}, 1, 1);
  CHECK(one == Weight{{1}, {0}});
  CHECK_THROWS_AS(hook_to_weight({2, 2}, 1, 1), std::invalid_argument);
}

TEST_CASE("weight_to_hook rejects what it cannot invert") {
  CHECK_THROWS(weight_to_hook(Weight{{1}, {-1}}));
  CHECK_THROWS(weight_to_hook(Weight{{0}, {1}}));  // λ⁺_m = 0 < 1 = length of the tail
  CHECK(weight_to_hook(Weight{{1}, {1}}) == Partition{1, 1});
}

TEST_CASE("berezin_normalize and kappa examples") {
  auto same = berezin_normalize(Weight{{2, 1}, {1, 0}});
  CHECK(same.twist == 0);
  CHECK(same.weight == Weight{{2, 1}, {1, 0}});
  auto t = berezin_normalize(Weight{{0}, {-2}});
  CHECK(t.weight == Weight{{-2}, {0}});
  CHECK(t.twist == -2);

  CHECK(kappa_weight(Weight{{1}, {0}}) == Weight{{0}, {1}});
  CHECK(kappa_weight(Weight{{0, 0}, {0, 0, 0}}) == Weight{{-3, -3}, {2, 2, 2}});
  CHECK(kappa_weight(Weight{{1, 1}, {0}}) == Weight{{0, 0}, {2}});
}

TEST_CASE("parsing and formatting") {
  auto w = parse_weight("3, 1|2,0", 2, 2);
  CHECK(w == Weight{{3, 1}, {2, 0}});
  CHECK(format_weight(w) == "3,1|2,0");
  CHECK(format_weight(parse_weight("-1|0")) == "-1|0");
  CHECK_THROWS(parse_weight("1,2|0", 1, 1));
  CHECK_THROWS(parse_weight("1|x"));
  CHECK_THROWS(parse_weight("1,0"));
  CHECK(parse_partition("3,2,0,0") == Partition{3, 2});
  CHECK_THROWS(parse_partition("1,2"));
  CHECK_THROWS(Weight::dominant({0, 1}, {0}));
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(conjugate({}) == Partition{});
}

TEST_CASE("property: omega row difference and beta-twist invariance") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> entry(-6, 6);
  std::uniform_int_distribution<int> size(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    int m = size(rng), n = size(rng);
    Weight w;
    for (int i = 0; i < m; ++i) w.plus.push_back(entry(rng));
    for (int j = 0; j < n; ++j) w.minus.push_back(entry(rng));
    std::sort(w.plus.rbegin(), w.plus.rend());
    std::sort(w.minus.rbegin(), w.minus.rend());
    for (int i = 1; i < m; ++i)
      for (int j = 1; j <= n; ++j) {
        CHECK(omega(w, i, j) - omega(w, i + 1, j) == w.plus[i - 1] - w.plus[i] + 1);
        CHECK(omega(w, i, j) > omega(w, i + 1, j));
      }
    long t = entry(rng);
    CHECK(is_typical(shift_by_beta(w, t), 0).omega_matrix == is_typical(w, 0).omega_matrix);
    auto nrm = berezin_normalize(w);
    CHECK(nrm.weight.minus.back() == 0);
    CHECK(nrm.weight.is_dominant());
    CHECK(is_typical(nrm.weight, 3).typical == is_typical(w, 3).typical);
  }
}

TEST_CASE("property: hook round trip and the characteristic-0 hook criterion") {
  auto parts = partitions_up_to(10);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (const auto& p : parts) {
        if (!is_hook(p, m, n)) continue;
        auto w = hook_to_weight(p, m, n);
        CHECK(w.is_dominant());
        CHECK(w.is_polynomial());
        CHECK(weight_to_hook(w) == p);
        long lambda_m = static_cast<int>(p.size()) >= m ? p[m - 1] : 0;
        CHECK(is_typical(w, 0).typical == (lambda_m >= n));
      }
}
