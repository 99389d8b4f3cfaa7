#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "ccalc/formula.hpp"
#include "ccalc/heyting.hpp"
#include "ccalc/kripke.hpp"

// Seeded generators shared by the test suites.  Draws use raw engine output
// with modulo so the sequences depend only on mt19937_64, not on the
// standard library's distribution implementations.
namespace ccalc::gen {

using Rng = std::mt19937_64;

inline logic::Formula random_formula(Rng& rng, const std::vector<std::string>& atoms,
                                     int max_depth, bool allow_n = false) {
  using F = logic::Formula;
  auto pick_atom = [&] { return F::atom(atoms[rng() % atoms.size()]); };
  auto sub = [&] { return random_formula(rng, atoms, max_depth - 1, allow_n); };
  if (max_depth <= 0) {
    switch (rng() % 6) {
      case 0: return F::bottom();
      case 1: return F::top();
      default: return pick_atom();
    }
  }
  switch (rng() % (allow_n ? 8 : 7)) {
    case 0: return pick_atom();
    case 1: return rng() % 2 ? F::bottom() : F::top();
    case 2: return F::negate(sub());
    case 3: {
      F a = sub();
      return F::conj(std::move(a), sub());
    }
    case 4: {
      F a = sub();
      return F::disj(std::move(a), sub());
    }
    case 5:
    case 6: {
      F a = sub();
      return F::implies(std::move(a), sub());
    }
    default: {
      std::vector<F> args;
      std::size_t k = 1 + rng() % 2;
      for (std::size_t i = 0; i < k; ++i) args.push_back(sub());
      return F::joint_denial(std::move(args));
    }
  }
}

// Random partial order on n elements: forward edges i < j drawn with
// probability 1/2, then closed transitively.  Forward-only edges keep the
// relation antisymmetric, so construction always succeeds.
inline heyting::FinitePoset random_poset(Rng& rng, int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % 2) pairs.emplace_back(i, j);
  return heyting::FinitePoset(std::move(labels), pairs, true);
}

// Random model over a random poset of 1..max_worlds worlds.  Raw atom masks
// are closed upward so the valuation is always persistent.
inline kripke::Model random_model(Rng& rng, int max_worlds,
                                  const std::vector<std::string>& atoms) {
  int n = 1 + static_cast<int>(rng() % max_worlds);
  heyting::FinitePoset p = random_poset(rng, n);
  std::map<std::string, std::vector<int>> valuation;
  for (const std::string& a : atoms) {
    std::uint32_t raw = rng() % (1u << n);
    std::uint32_t mask = 0;
    for (int w = 0; w < n; ++w)
      if (raw >> w & 1u)
        for (int v = 0; v < n; ++v)
          if (p.leq(w, v)) mask |= 1u << v;
    std::vector<int>& worlds = valuation[a];
    for (int w = 0; w < n; ++w)
      if (mask >> w & 1u) worlds.push_back(w);
  }
  return kripke::Model(std::move(p), std::move(valuation));
}

}  // namespace ccalc::gen
