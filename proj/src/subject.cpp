#include "ccalc/subject.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ccalc/error.hpp"

namespace ccalc::subject {

SubjectVector vector_close(int n, int r) {
  if (n < 0) throw domain_error("identity count must be nonnegative");
  int w = n - r;
  if (w < 0) throw domain_error("context index would be negative");
  return SubjectVector{w, n, r};
}

std::int64_t ledger(std::int64_t n) {
  if (n < 0) throw domain_error("name count must be nonnegative");
  return n * n - n;
}

std::string HomogeneityReport::str() const {
  if (verdict == Homogeneity::NonDeterminate) return "NON_DETERMINATE";
  return "DETERMINATE " + std::to_string(num) + "/" + std::to_string(den);
}

HomogeneityReport homogeneity_flag(std::int64_t n) {
  if (n < 1) throw domain_error("need at least one category");
  if (n == 1) return HomogeneityReport{Homogeneity::NonDeterminate, 0, 0};
  return HomogeneityReport{Homogeneity::Determinate, 1, ledger(n)};
}

Endowment Endowment::acquire(const std::string& label, int ctx) const {
  if (label.empty()) throw domain_error("zeroed function needs a label");
  for (const auto& [l, c] : entries_)
    if (l == label) throw domain_error("label already acquired: " + label);
  if (!entries_.empty() && ctx < entries_.back().second)
    throw domain_error("acquisition context may not decrease");
  Endowment out = *this;
  out.entries_.emplace_back(label, ctx);
  return out;
}

std::string Endowment::project_identity(int ctx) const {
  if (entries_.empty()) throw domain_error("empty endowment");
  const std::string* best = nullptr;
  for (const auto& [l, c] : entries_)
    if (c <= ctx) best = &l;  // later entries overwrite: latest wins
  if (!best)
    throw domain_error("no zeroed function applies at context " +
                       std::to_string(ctx));
  return *best;
}

std::string Predicate::str() const { return name + "(" + a + "," + b + ")"; }

bool same_extension(const Predicate& p, const Predicate& q) {
  return p.a == q.a && p.b == q.b;
}

StateOfAffairs::StateOfAffairs(std::vector<Predicate> predicates)
    : predicates_(std::move(predicates)) {
  for (const Predicate& p : predicates_)
    if (p.name.empty() || p.a.empty() || p.b.empty())
      throw domain_error("predicate needs a name and two endpoints");
}

std::vector<std::string> StateOfAffairs::nodes() const {
  std::set<std::string> s;
  for (const Predicate& p : predicates_) {
    s.insert(p.a);
    s.insert(p.b);
  }
  return std::vector<std::string>(s.begin(), s.end());
}

std::vector<std::string> StateOfAffairs::shared_nodes() const {
  std::map<std::string, int> incident;
  for (const Predicate& p : predicates_) {
    std::set<std::string> ends{p.a, p.b};  // a self-edge touches once
    for (const std::string& e : ends) ++incident[e];
  }
  std::vector<std::string> out;
  for (const auto& [node, k] : incident)
    if (k >= 2) out.push_back(node);
  return out;
}

StateOfAffairs StateOfAffairs::with_complement(const std::string& x,
                                               const std::string& nx) const {
  if (x == nx) throw domain_error("a node cannot be its own complement");
  StateOfAffairs out = *this;
  std::string lo = std::min(x, nx), hi = std::max(x, nx);
  for (const auto& [a, b] : out.complements_)
    if (a == lo && b == hi) return out;  // already declared
  out.complements_.emplace_back(lo, hi);
  return out;
}

std::vector<Predicate> StateOfAffairs::identity_paradox_edges() const {
  std::vector<Predicate> out;
  for (const Predicate& p : predicates_) {
    std::string lo = std::min(p.a, p.b), hi = std::max(p.a, p.b);
    for (const auto& [a, b] : complements_)
      if (a == lo && b == hi) {
        out.push_back(p);
        break;
      }
  }
  return out;
}

std::string StateOfAffairs::str() const {
  std::string out;
  for (const Predicate& p : predicates_) {
    out += p.str();
    out += "\n";
  }
  std::vector<std::string> shared = shared_nodes();
  if (!shared.empty()) {
    out += "shared:";
    for (const std::string& s : shared) {
      out += ' ';
      out += s;
    }
    out += "\n";
  }
  return out;
}

StateOfAffairs compose_state(const Predicate& f, const Predicate& g) {
  if (f == g) return StateOfAffairs({f});
  std::set<std::string> fe{f.a, f.b};
  if (!fe.count(g.a) && !fe.count(g.b))
    throw domain_error("no shared endpoint between " + f.str() + " and " +
                       g.str());
  return StateOfAffairs({f, g});
}

std::string OverdeterminationReport::str() const {
  std::string out = outer + " over " + inner + "\n";
  out += "output node: " + output_node + "\n";
  out += std::string("scope opaque: ") + (scope_opaque ? "yes" : "no") + "\n";
  if (!tampered.empty()) {
    out += "tampered:";
    for (const std::string& t : tampered) out += " " + t;
    out += "\n";
  }
  out += "witnesses:";
  for (const std::string& w : witnesses) out += " " + w;
  out += "\n";
  out += std::string("complete: ") + (complete ? "yes" : "no") + "\n";
  return out;
}

OverdeterminationReport overdetermination_check(const StateOfAffairs& s,
                                                const std::string& outer,
                                                const std::string& inner) {
  const Predicate* po = nullptr;
  const Predicate* pi = nullptr;
  for (const Predicate& p : s.predicates()) {
    if (p.name == outer) po = &p;
    if (p.name == inner) pi = &p;
  }
  if (!po) throw domain_error("no predicate named " + outer);
  if (!pi) throw domain_error("no predicate named " + inner);

  OverdeterminationReport rep;
  rep.outer = outer;
  rep.inner = inner;
  rep.output_node = pi->str();
  std::set<std::string> outer_ends{po->a, po->b};
  std::set<std::string> inner_args{pi->a, pi->b};
  for (const std::string& arg : inner_args) {
    if (outer_ends.count(arg))
      rep.tampered.push_back(arg);
    else
      rep.witnesses.push_back(arg);
  }
  rep.scope_opaque = outer_ends.count(rep.output_node) && rep.tampered.empty();
  rep.complete = rep.witnesses.empty();
  return rep;
}

std::vector<std::pair<std::string, std::string>> AffinityPairing::pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < left.size() && i + shift < right.size(); ++i)
    out.emplace_back(left[i], right[i + shift]);
  return out;
}

std::size_t AffinityPairing::pair_count() const {
  std::size_t avail = right.size() - static_cast<std::size_t>(shift);
  return std::min(left.size(), avail);
}

std::string AffinityPairing::str() const {
  std::string out;
  for (const auto& [f, e] : pairs()) out += "[" + f + ", " + e + "]\n";
  return out;
}

AffinityPairing affinity(std::vector<std::string> left,
                         std::vector<std::string> right) {
  if (left.empty() || right.empty())
    throw domain_error("affinity needs two nonempty classes");
  return AffinityPairing{std::move(left), std::move(right), 0};
}

AffinityPairing rearticulate(const AffinityPairing& p, int shift) {
  if (shift < 1) throw domain_error("shift must be positive");
  int total = p.shift + shift;
  if (static_cast<std::size_t>(total) >= p.right.size())
    throw domain_error("shift " + std::to_string(total) +
                       " exhausts the right class");
  AffinityPairing out = p;
  out.shift = total;
  return out;
}

}  // namespace ccalc::subject
