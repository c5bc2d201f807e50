#pragma once

// Shared helpers for the unit tests: builders, a random element generator and a
// literal product-rule derivation used as an oracle.

#include <random>
#include <vector>

#include "glmn/derivations.hpp"

namespace testing_support {

using glmn::Generator;
using glmn::Localized;
using glmn::Polynomial;
using glmn::Rational;
using glmn::RingContext;
using Poly = Polynomial<Rational>;
using Loc = Localized<Rational>;

template <class S = Rational>
Polynomial<S> c(const RingContext& ctx, int i, int j) {
  return Polynomial<S>::generator(ctx, i, j);
}

template <class S = Rational>
Polynomial<S> k(const RingContext& ctx, long v) {
  return Polynomial<S>::constant(ctx, v);
}

/// Ordered product of generators with its sorting sign applied.
template <class S = Rational>
Polynomial<S> word(const RingContext& ctx, const std::vector<Generator>& gens, long coeff = 1) {
  auto [sign, mono] = glmn::monomial_from_sequence(ctx, gens);
  if (sign == 0) return Polynomial<S>(ctx);
  return Polynomial<S>::from_terms(ctx, {{mono, glmn::ScalarTraits<S>::from_int(sign * coeff, ctx.characteristic)}});
}

/// Random element with up to `terms` words of length <= `max_len`. With
/// `parity` 0 or 1 every word has that parity; -1 allows both.
template <class S = Rational>
Polynomial<S> random_poly(const RingContext& ctx, std::mt19937& rng, int terms = 4, int max_len = 3, int parity = -1) {
  std::uniform_int_distribution<int> idx(1, ctx.size());
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> coef(-3, 3);
  Polynomial<S> out(ctx);
  int made = 0;
  for (int tries = 0; made < terms && tries < 200; ++tries) {
    std::vector<Generator> gens(len(rng));
    int par = 0;
    for (auto& g : gens) {
      g = {idx(rng), idx(rng)};
      par ^= g.parity(ctx);
    }
    if (parity >= 0 && par != parity) continue;
    out += word<S>(ctx, gens, coef(rng));
    ++made;
  }
  return out;
}

/// Expands each monomial into its ordered generator word and applies the
/// right-superderivation product rule factor by factor.
template <class S>
Polynomial<S> derive_by_words(const Polynomial<S>& f, glmn::DerivationId d) {
  const RingContext& ctx = f.context();
  const int dpar = d.parity(ctx);
  const int total = ctx.size() * ctx.size();
  Polynomial<S> out(ctx);
  for (const auto& term : f.terms()) {
    std::vector<Generator> gens;
    for (int g = 0; g < total; ++g)
      for (int e = 0; e < term.mono.exps[g]; ++e) gens.push_back({ctx.row_of(g), ctx.col_of(g)});
    for (std::size_t t = 0; t < gens.size(); ++t) {
      if (gens[t].col != d.k) continue;
      int after = 0;
      for (std::size_t s = t + 1; s < gens.size(); ++s) after += gens[s].parity(ctx);
      auto replaced = gens;
      replaced[t].col = d.l;
      auto [sign, mono] = glmn::monomial_from_sequence(ctx, replaced);
      if (sign == 0) continue;
      if (dpar && (after & 1)) sign = -sign;
      out += Polynomial<S>::from_terms(ctx, {{mono, term.coeff * glmn::ScalarTraits<S>::from_int(sign, ctx.characteristic)}});
    }
  }
  return out;
}

}  // namespace testing_support
