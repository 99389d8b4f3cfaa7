#include "ccalc/kripke.hpp"

#include <algorithm>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ccalc/error.hpp"

namespace ccalc::kripke {

namespace {

// mask of worlds >= w, one entry per world
std::vector<std::uint32_t> up_masks(const KripkeFrame& f) {
  std::vector<std::uint32_t> up(f.size(), 0);
  for (std::size_t w = 0; w < f.size(); ++w)
    for (std::size_t v = 0; v < f.size(); ++v)
      if (f.leq(static_cast<int>(w), static_cast<int>(v)))
        up[w] |= 1u << v;
  return up;
}

// forcing set of an N-free formula as a world mask
std::uint32_t eval_mask(const logic::Formula& f,
                        const std::vector<std::uint32_t>& up,
                        std::uint32_t full,
                        const std::map<std::string, std::uint32_t>& val) {
  using logic::Kind;
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = val.find(f.atom_name());
      return it == val.end() ? 0 : it->second;
    }
    case Kind::Bottom:
      return 0;
    case Kind::Top:
      return full;
    case Kind::And:
      return eval_mask(f.child(0), up, full, val) &
             eval_mask(f.child(1), up, full, val);
    case Kind::Or:
      return eval_mask(f.child(0), up, full, val) |
             eval_mask(f.child(1), up, full, val);
    case Kind::Not: {
      std::uint32_t c = eval_mask(f.child(0), up, full, val);
      std::uint32_t out = 0;
      for (std::size_t w = 0; w < up.size(); ++w)
        if ((up[w] & c) == 0) out |= 1u << w;
      return out;
    }
    case Kind::Implies: {
      std::uint32_t l = eval_mask(f.child(0), up, full, val);
      std::uint32_t r = eval_mask(f.child(1), up, full, val);
      std::uint32_t out = 0;
      for (std::size_t w = 0; w < up.size(); ++w)
        if ((up[w] & l & ~r) == 0) out |= 1u << w;
      return out;
    }
    case Kind::N: {
      // equivalent to the conjunction of the negations
      std::uint32_t out = full;
      for (const logic::Formula& a : f.children()) {
        std::uint32_t c = eval_mask(a, up, full, val);
        std::uint32_t neg = 0;
        for (std::size_t w = 0; w < up.size(); ++w)
          if ((up[w] & c) == 0) neg |= 1u << w;
        out &= neg;
      }
      return out;
    }
  }
  throw domain_error("unreachable formula kind");
}

}  // namespace

Model::Model(KripkeFrame frame, std::map<std::string, std::vector<int>> valuation)
    : frame_(std::move(frame)) {
  if (frame_.size() > 31) throw domain_error("model limited to 31 worlds");
  std::vector<std::uint32_t> up = up_masks(frame_);
  for (auto& [atom, worlds] : valuation) {
    std::uint32_t mask = 0;
    for (int w : worlds) {
      if (w < 0 || static_cast<std::size_t>(w) >= frame_.size())
        throw domain_error("valuation world out of range for atom " + atom);
      mask |= 1u << w;
    }
    for (std::size_t w = 0; w < frame_.size(); ++w)
      if ((mask >> w & 1u) && (up[w] & ~mask))
        throw domain_error("valuation of " + atom +
                           " is not upward closed (not persistent)");
    masks_[atom] = mask;
  }
}

bool Model::holds(const std::string& atom, int world) const {
  auto it = masks_.find(atom);
  if (it == masks_.end()) return false;
  return it->second >> world & 1u;
}

std::string Model::str() const {
  std::string out;
  for (const auto& [atom, mask] : masks_) {
    out += atom;
    out += ": {";
    bool first = true;
    for (std::size_t w = 0; w < frame_.size(); ++w)
      if (mask >> w & 1u) {
        if (!first) out += ',';
        first = false;
        out += frame_.label(static_cast<int>(w));
      }
    out += "}\n";
  }
  return out;
}

bool forces(const Model& m, int world, const logic::Formula& f) {
  if (world < 0 || static_cast<std::size_t>(world) >= m.worlds())
    throw domain_error("world index out of range");
  std::vector<std::uint32_t> up = up_masks(m.frame());
  std::uint32_t full =
      m.worlds() == 31 ? 0x7fffffffu : (1u << m.worlds()) - 1;
  logic::Formula expanded = logic::expand_n(f);
  return eval_mask(expanded, up, full, m.masks()) >> world & 1u;
}

bool persistent(const Model& m, const logic::Formula& f) {
  std::vector<std::uint32_t> up = up_masks(m.frame());
  std::uint32_t full =
      m.worlds() == 31 ? 0x7fffffffu : (1u << m.worlds()) - 1;
  std::uint32_t mask = eval_mask(logic::expand_n(f), up, full, m.masks());
  for (std::size_t w = 0; w < m.worlds(); ++w)
    if ((mask >> w & 1u) && (up[w] & ~mask)) return false;
  return true;
}

bool valid_in_frame(const KripkeFrame& frame, const logic::Formula& f) {
  if (frame.size() > 6) throw domain_error("frame validity limited to 6 worlds");
  std::vector<std::string> atoms = logic::atoms_of(f);
  if (atoms.size() > 4) throw domain_error("frame validity limited to 4 atoms");
  logic::Formula expanded = logic::expand_n(f);
  std::vector<std::uint32_t> up = up_masks(frame);
  std::uint32_t full = (1u << frame.size()) - 1;
  std::vector<std::uint32_t> ups = upsets_of(frame);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) total *= ups.size();
  std::map<std::string, std::uint32_t> val;
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    for (std::size_t j = atoms.size(); j-- > 0;) {
      val[atoms[j]] = ups[rest % ups.size()];
      rest /= ups.size();
    }
    if (eval_mask(expanded, up, full, val) != full) return false;
  }
  return true;
}

std::vector<std::uint32_t> upsets_of(const KripkeFrame& frame) {
  if (frame.size() > 20) throw domain_error("upset enumeration limited to 20 worlds");
  std::vector<std::uint32_t> up = up_masks(frame);
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << frame.size()); ++mask) {
    bool closed = true;
    for (std::size_t w = 0; w < frame.size() && closed; ++w)
      if ((mask >> w & 1u) && (up[w] & ~mask)) closed = false;
    if (closed) out.push_back(mask);
  }
  return out;
}

std::string Countermodel::str() const {
  const KripkeFrame& fr = model.frame();
  std::string out = "worlds: " + std::to_string(fr.size()) + "\n";
  for (auto [a, b] : fr.hasse_edges())
    out += "order: " + fr.label(a) + " <= " + fr.label(b) + "\n";
  out += "refuted: " + fr.label(world) + "\n";
  out += model.str();
  return out;
}

namespace {

struct RawFrame {
  int k = 0;
  std::vector<std::uint8_t> leq;  // k*k with diagonal set
  std::vector<std::uint32_t> up;
};

// decode candidate matrix; nullopt when not a partial order
std::optional<RawFrame> decode_order(int k, std::uint64_t c) {
  RawFrame rf;
  rf.k = k;
  rf.leq.assign(k * k, 0);
  int cells = k * (k - 1);
  int p = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) {
        rf.leq[i * k + j] = 1;
      } else {
        rf.leq[i * k + j] = (c >> (cells - 1 - p)) & 1u;
        ++p;
      }
    }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (rf.leq[i * k + j] && rf.leq[j * k + i]) return std::nullopt;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (rf.leq[i * k + j])
        for (int l = 0; l < k; ++l)
          if (rf.leq[j * k + l] && !rf.leq[i * k + l]) return std::nullopt;
  rf.up.assign(k, 0);
  for (int w = 0; w < k; ++w)
    for (int v = 0; v < k; ++v)
      if (rf.leq[w * k + v]) rf.up[w] |= 1u << v;
  return rf;
}

std::vector<std::uint32_t> raw_upsets(const RawFrame& rf) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << rf.k); ++mask) {
    bool closed = true;
    for (int w = 0; w < rf.k && closed; ++w)
      if ((mask >> w & 1u) && (rf.up[w] & ~mask)) closed = false;
    if (closed) out.push_back(mask);
  }
  return out;
}

struct Hit {
  std::uint64_t c = 0;
  std::uint64_t t = 0;
  int w = 0;
};

// first (t, w) refuting the formula on this order, valuations lexicographic
std::optional<std::pair<std::uint64_t, int>> first_refutation(
    const RawFrame& rf, const logic::Formula& expanded,
    const std::vector<std::string>& atoms) {
  std::vector<std::uint32_t> ups = raw_upsets(rf);
  std::uint32_t full = (1u << rf.k) - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) total *= ups.size();
  std::map<std::string, std::uint32_t> val;
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t rest = t;
    for (std::size_t j = atoms.size(); j-- > 0;) {
      val[atoms[j]] = ups[rest % ups.size()];
      rest /= ups.size();
    }
    std::uint32_t mask = eval_mask(expanded, rf.up, full, val);
    if (mask != full) {
      int w = std::countr_one(mask);  // least world with a zero bit
      return std::make_pair(t, w);
    }
  }
  return std::nullopt;
}

Countermodel build_countermodel(int k, const Hit& hit,
                                const std::vector<std::string>& atoms) {
  RawFrame rf = *decode_order(k, hit.c);
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    labels.push_back("w" + std::to_string(i));
    for (int j = 0; j < k; ++j)
      if (i != j && rf.leq[i * k + j]) pairs.emplace_back(i, j);
  }
  KripkeFrame frame(std::move(labels), pairs);
  std::vector<std::uint32_t> ups = raw_upsets(rf);
  std::map<std::string, std::vector<int>> valuation;
  std::uint64_t rest = hit.t;
  std::vector<std::uint32_t> chosen(atoms.size());
  for (std::size_t j = atoms.size(); j-- > 0;) {
    chosen[j] = ups[rest % ups.size()];
    rest /= ups.size();
  }
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    std::vector<int>& worlds = valuation[atoms[j]];
    for (int w = 0; w < k; ++w)
      if (chosen[j] >> w & 1u) worlds.push_back(w);
  }
  Model model(std::move(frame), std::move(valuation));
  return Countermodel{std::move(model), hit.w};
}

}  // namespace

std::optional<Countermodel> countermodel_search(const logic::Formula& f,
                                                int max_worlds, ExecMode mode) {
  if (max_worlds < 1 || max_worlds > 5)
    throw domain_error("countermodel budget is 1..5 worlds");
  std::vector<std::string> atoms = logic::atoms_of(f);
  if (atoms.size() > 4)
    throw domain_error("countermodel search limited to 4 atoms");
  logic::Formula expanded = logic::expand_n(f);

  for (int k = 1; k <= max_worlds; ++k) {
    int cells = k * (k - 1);
    std::uint64_t total = 1ull << cells;
    std::optional<Hit> best;

    if (mode == ExecMode::Serial) {
      for (std::uint64_t c = 0; c < total && !best; ++c) {
        auto rf = decode_order(k, c);
        if (!rf) continue;
        if (auto tw = first_refutation(*rf, expanded, atoms))
          best = Hit{c, tw->first, tw->second};
      }
    } else {
      int nt = max_threads();
      std::vector<std::optional<Hit>> local(nt);
#pragma omp parallel num_threads(nt)
      {
#ifdef _OPENMP
        int tid = omp_get_thread_num();
        int tn = omp_get_num_threads();
#else
        int tid = 0;
        int tn = 1;
#endif
        std::uint64_t lo = total * tid / tn;
        std::uint64_t hi = total * (tid + 1) / tn;
        for (std::uint64_t c = lo; c < hi; ++c) {
          auto rf = decode_order(k, c);
          if (!rf) continue;
          if (auto tw = first_refutation(*rf, expanded, atoms)) {
            local[tid] = Hit{c, tw->first, tw->second};
            break;  // first hit in this shard is its minimum
          }
        }
      }
      for (const auto& h : local)
        if (h && (!best || h->c < best->c)) best = h;
    }

    if (best) return build_countermodel(k, *best, atoms);
  }
  return std::nullopt;
}

bool correspondence_check(const heyting::FinitePoset& p,
                          const logic::Formula& f) {
  if (p.size() > 3)
    throw domain_error("correspondence check limited to 3-element posets");
  if (logic::atoms_of(f).size() > 2)
    throw domain_error("correspondence check limited to 2 atoms");
  bool frame_side = valid_in_frame(p, f);
  // semantic values of forcing are upsets, so the matching algebra is the
  // poset's upsets, materialized as the downsets of the reversed order
  std::vector<std::pair<int, int>> flipped;
  int n = static_cast<int>(p.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && p.leq(a, b)) flipped.emplace_back(b, a);
  heyting::FinitePoset reversed(p.labels(), flipped);
  bool algebra_side = heyting::valid_in_algebra(
      heyting::HeytingAlgebra::downset_algebra(reversed), f);
  if (frame_side != algebra_side)
    throw std::logic_error("frame and algebra semantics disagree");
  return frame_side;
}

}  // namespace ccalc::kripke
