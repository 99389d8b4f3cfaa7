#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccalc/exec.hpp"
#include "ccalc/formula.hpp"
#include "ccalc/heyting.hpp"

namespace ccalc::kripke {

/// A Kripke frame for intuitionistic logic is exactly a finite poset of
/// worlds: accessibility is the partial order itself.
using KripkeFrame = heyting::FinitePoset;

/// Frame plus persistent valuation.  Each atom is true on an upward-closed
/// set of worlds; upward closure is enforced at construction (monotonicity).
class Model {
 public:
  Model(KripkeFrame frame, std::map<std::string, std::vector<int>> valuation);

  const KripkeFrame& frame() const { return frame_; }
  std::size_t worlds() const { return frame_.size(); }
  const std::map<std::string, std::uint32_t>& masks() const { return masks_; }
  bool holds(const std::string& atom, int world) const;  // false if unmapped

  std::string str() const;  // atom lines "p: {w0,w2}" in sorted order

 private:
  KripkeFrame frame_;
  std::map<std::string, std::uint32_t> masks_;
};

/// Forcing.  Atoms from the valuation; conjunction and disjunction are
/// pointwise; w forces f -> g when every v >= w forcing f forces g; negation
/// is the g = bottom case; N(f1,...,fk) is expanded to ~f1 & ... & ~fk
/// before evaluation.  Atoms absent from the valuation hold nowhere.
bool forces(const Model& m, int world, const logic::Formula& f);

/// Persistence: once forced, forced in every later world.  Holds for every
/// formula on every model with a monotone valuation; exposed for tests.
bool persistent(const Model& m, const logic::Formula& f);

/// Valid on the frame: forced at every world under every monotone valuation
/// of the formula's atoms.  Errors when worlds > 6 or the formula has more
/// than 4 atoms.
bool valid_in_frame(const KripkeFrame& frame, const logic::Formula& f);

struct Countermodel {
  Model model;
  int world;  // least world where the formula fails
  std::string str() const;
};

/// First countermodel in canonical order, or nullopt if none within budget.
/// Enumeration order: world count k ascending (1..max_worlds, capped at 5);
/// for each k, partial orders by the off-diagonal matrix bitmask read
/// row-major, first cell most significant, ascending; for each order,
/// valuations assign each atom (sorted) an upward-closed world set, upsets
/// ordered by ascending mask, tuples lexicographic with the first atom most
/// significant; finally the least refuting world.  The parallel kernel
/// shards the order space and keeps the minimum candidate, so both modes
/// return the identical countermodel.
std::optional<Countermodel> countermodel_search(const logic::Formula& f,
                                                int max_worlds,
                                                ExecMode mode = ExecMode::Parallel);

/// Semantic bridge: a formula is valid on the frames over a poset exactly
/// when it is valid in the Heyting algebra of the poset's upsets (the
/// semantic values of forcing), built here as the downset algebra of the
/// reversed order.  Both sides are computed exhaustively (poset <= 3
/// elements, formula <= 2 atoms); a disagreement throws, otherwise the
/// shared verdict is returned.
bool correspondence_check(const heyting::FinitePoset& p,
                          const logic::Formula& f);

/// All upward-closed world sets of the frame, ascending by mask.
std::vector<std::uint32_t> upsets_of(const KripkeFrame& frame);

}  // namespace ccalc::kripke
