#include "ccalc/heyting.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>

#include "ccalc/error.hpp"

namespace ccalc::heyting {

FinitePoset::FinitePoset(std::vector<std::string> labels,
                         const std::vector<std::pair<int, int>>& leq_pairs,
                         bool close)
    : labels_(std::move(labels)) {
  std::size_t n = labels_.size();
  std::set<std::string> uniq(labels_.begin(), labels_.end());
  if (uniq.size() != n) throw domain_error("poset labels must be unique");
  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n ||
        static_cast<std::size_t>(b) >= n)
      throw domain_error("poset relation index out of range");
    leq_[a * n + b] = 1;
  }
  if (close) {
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq_[i * n + k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq_[k * n + j]) leq_[i * n + j] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq_[i * n + j] && leq_[j * n + i])
        throw domain_error("order not antisymmetric: " + labels_[i] + " and " +
                           labels_[j]);
      if (!leq_[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (leq_[j * n + k] && !leq_[i * n + k])
          throw domain_error("order not transitive at " + labels_[i] + " <= " +
                             labels_[j] + " <= " + labels_[k]);
    }
}

FinitePoset FinitePoset::chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return FinitePoset(std::move(labels), pairs);
}

FinitePoset FinitePoset::antichain(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FinitePoset(std::move(labels), {});
}

int FinitePoset::index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  throw domain_error("no such element: " + label);
}

std::vector<std::pair<int, int>> FinitePoset::hasse_edges() const {
  std::size_t n = labels_.size();
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covered = true;
      for (std::size_t c = 0; c < n; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) {
          covered = false;
          break;
        }
      if (covered) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FinitePoset> all_posets(int n) {
  if (n < 0 || n > 5) throw domain_error("poset enumeration limited to 5 elements");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  std::vector<FinitePoset> out;
  if (n == 0) return out;
  int cells = n * (n - 1);
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n) * n);
  for (std::uint64_t mask = 0; mask < (1ull << cells); ++mask) {
    // off-diagonal cells row-major, first cell in the top bit
    int p = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          m[i * n + j] = 1;
        } else {
          m[i * n + j] = (mask >> (cells - 1 - p)) & 1u;
          ++p;
        }
      }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (m[i * n + j] && m[j * n + i]) ok = false;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j)
        if (m[i * n + j])
          for (int k = 0; k < n; ++k)
            if (m[j * n + k] && !m[i * n + k]) {
              ok = false;
              break;
            }
    if (!ok) continue;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && m[i * n + j]) pairs.emplace_back(i, j);
    out.emplace_back(FinitePoset(labels, pairs));
  }
  return out;
}

std::string to_dot(const FinitePoset& p, const std::string& graph_name) {
  std::string out = "digraph " + graph_name + " {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    out += "  \"" + p.label(static_cast<int>(i)) + "\";\n";
  for (auto [a, b] : p.hasse_edges())
    out += "  \"" + p.label(a) + "\" -> \"" + p.label(b) + "\";\n";
  out += "}\n";
  return out;
}

HeytingAlgebra::HeytingAlgebra(FinitePoset p, int bottom, int top,
                               std::vector<int> meet, std::vector<int> join,
                               std::vector<int> imp)
    : poset_(std::move(p)),
      bottom_(bottom),
      top_(top),
      meet_(std::move(meet)),
      join_(std::move(join)),
      imp_(std::move(imp)) {}

HeytingAlgebra HeytingAlgebra::from_tables(FinitePoset p, int bottom, int top,
                                           std::vector<int> meet,
                                           std::vector<int> join,
                                           std::vector<int> imp) {
  std::size_t n = p.size();
  if (meet.size() != n * n || join.size() != n * n || imp.size() != n * n)
    throw domain_error("operation tables must be n by n");
  auto in_range = [&](const std::vector<int>& t) {
    return std::all_of(t.begin(), t.end(), [&](int v) {
      return v >= 0 && static_cast<std::size_t>(v) < n;
    });
  };
  if (!in_range(meet) || !in_range(join) || !in_range(imp) || bottom < 0 ||
      top < 0 || static_cast<std::size_t>(bottom) >= n ||
      static_cast<std::size_t>(top) >= n)
    throw domain_error("operation table entry out of range");
  return HeytingAlgebra(std::move(p), bottom, top, std::move(meet),
                        std::move(join), std::move(imp));
}

HeytingAlgebra HeytingAlgebra::chain(int n) {
  if (n < 1) throw domain_error("chain algebra needs at least one element");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < n; ++k) {
    if (n == 1) {
      labels.push_back("0");
    } else {
      int g = std::gcd(k, n - 1);
      int num = k / g, den = (n - 1) / g;
      labels.push_back(den == 1 ? std::to_string(num)
                                : std::to_string(num) + "/" + std::to_string(den));
    }
    for (int j = k + 1; j < n; ++j) pairs.emplace_back(k, j);
  }
  FinitePoset p(std::move(labels), pairs);
  std::vector<int> meet(n * n), join(n * n), imp(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      meet[a * n + b] = std::min(a, b);
      join[a * n + b] = std::max(a, b);
      imp[a * n + b] = a <= b ? n - 1 : b;
    }
  return HeytingAlgebra(std::move(p), 0, n - 1, std::move(meet),
                        std::move(join), std::move(imp));
}

HeytingAlgebra HeytingAlgebra::downset_algebra(const FinitePoset& p) {
  std::size_t n = p.size();
  if (n > 6) throw domain_error("downset algebra limited to 6-element posets");
  std::vector<std::uint32_t> downsets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool down = true;
    for (std::size_t i = 0; i < n && down; ++i)
      if (mask >> i & 1u)
        for (std::size_t j = 0; j < n; ++j)
          if (p.leq(static_cast<int>(j), static_cast<int>(i)) &&
              !(mask >> j & 1u)) {
            down = false;
            break;
          }
    if (down) downsets.push_back(mask);
  }
  std::sort(downsets.begin(), downsets.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  auto index_of = [&](std::uint32_t mask) {
    return static_cast<int>(std::find(downsets.begin(), downsets.end(), mask) -
                            downsets.begin());
  };
  std::size_t m = downsets.size();
  std::vector<std::string> labels;
  for (std::uint32_t mask : downsets) {
    std::string l = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) {
        if (!first) l += ',';
        first = false;
        l += p.label(static_cast<int>(i));
      }
    l += '}';
    labels.push_back(std::move(l));
  }
  std::vector<std::pair<int, int>> incl;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && (downsets[i] & ~downsets[j]) == 0)
        incl.emplace_back(static_cast<int>(i), static_cast<int>(j));
  FinitePoset order(std::move(labels), incl);
  std::vector<int> meet(m * m), join(m * m), imp(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      meet[i * m + j] = index_of(downsets[i] & downsets[j]);
      join[i * m + j] = index_of(downsets[i] | downsets[j]);
      std::uint32_t u = 0;
      for (std::uint32_t w : downsets)
        if ((downsets[i] & w & ~downsets[j]) == 0) u |= w;
      imp[i * m + j] = index_of(u);
    }
  return HeytingAlgebra(std::move(order), index_of(0),
                        index_of((1u << n) - 1), std::move(meet),
                        std::move(join), std::move(imp));
}

HeytingAlgebra HeytingAlgebra::from_poset(const FinitePoset& p) {
  int n = static_cast<int>(p.size());
  if (n == 0) throw domain_error("empty carrier is not a lattice");
  std::vector<int> meet(n * n), join(n * n), imp(n * n);
  auto greatest_of = [&](const std::vector<int>& cands) {
    for (int c : cands) {
      bool over_all = true;
      for (int d : cands)
        if (!p.leq(d, c)) {
          over_all = false;
          break;
        }
      if (over_all) return c;
    }
    return -1;
  };
  auto least_of = [&](const std::vector<int>& cands) {
    for (int c : cands) {
      bool under_all = true;
      for (int d : cands)
        if (!p.leq(c, d)) {
          under_all = false;
          break;
        }
      if (under_all) return c;
    }
    return -1;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> lower, upper;
      for (int x = 0; x < n; ++x) {
        if (p.leq(x, a) && p.leq(x, b)) lower.push_back(x);
        if (p.leq(a, x) && p.leq(b, x)) upper.push_back(x);
      }
      int g = greatest_of(lower);
      int l = least_of(upper);
      if (g < 0)
        throw domain_error("not a lattice: no meet of " + p.label(a) + " and " +
                           p.label(b));
      if (l < 0)
        throw domain_error("not a lattice: no join of " + p.label(a) + " and " +
                           p.label(b));
      meet[a * n + b] = g;
      join[a * n + b] = l;
    }
  std::vector<int> everything(n);
  std::iota(everything.begin(), everything.end(), 0);
  int bottom = least_of(everything);
  int top = greatest_of(everything);
  if (bottom < 0 || top < 0)
    throw domain_error("not a bounded lattice");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> res;
      for (int x = 0; x < n; ++x)
        if (p.leq(meet[a * n + x], b)) res.push_back(x);
      int g = greatest_of(res);
      if (g >= 0) {
        imp[a * n + b] = g;
      } else {
        // no greatest residual (lattice not distributive); fall back to the
        // join of the candidates so check_laws can name the failure
        int acc = res.front();
        for (int x : res) acc = join[acc * n + x];
        imp[a * n + b] = acc;
      }
    }
  return HeytingAlgebra(p, bottom, top, std::move(meet), std::move(join),
                        std::move(imp));
}

LawReport HeytingAlgebra::check_laws() const {
  int n = static_cast<int>(size());
  LawReport rep;
  auto hit = [&](const char* law, std::initializer_list<int> elems) {
    rep.violations.push_back(LawViolation{law, std::vector<int>(elems)});
  };
  for (int a = 0; a < n; ++a) {
    if (!leq(bottom_, a) || !leq(a, top_)) hit("bounds", {a});
    if (imp(bottom_, a) != top_) hit("ex-falso", {a});
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = meet(a, b), j = join(a, b);
      if (!leq(m, a) || !leq(m, b)) hit("meet-glb", {a, b});
      if (!leq(a, j) || !leq(b, j)) hit("join-lub", {a, b});
      for (int c = 0; c < n; ++c) {
        if (leq(c, a) && leq(c, b) && !leq(c, m)) hit("meet-glb", {a, b, c});
        if (leq(a, c) && leq(b, c) && !leq(j, c)) hit("join-lub", {a, b, c});
      }
      if (!leq(meet(a, imp(a, b)), b)) hit("modus-ponens", {a, b});
      if ((imp(a, b) == top_) != leq(a, b)) hit("imp-top-iff-leq", {a, b});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int x = 0; x < n; ++x) {
        if (meet(a, join(b, x)) != join(meet(a, b), meet(a, x)))
          hit("distributive", {a, b, x});
        if (leq(meet(a, x), b) != leq(x, imp(a, b)))
          hit("residuation", {a, b, x});
      }
  std::sort(rep.violations.begin(), rep.violations.end());
  rep.violations.erase(
      std::unique(rep.violations.begin(), rep.violations.end()),
      rep.violations.end());
  rep.ok = rep.violations.empty();
  return rep;
}

std::string LawReport::str(const HeytingAlgebra& h) const {
  if (ok) return "all laws hold\n";
  std::string out;
  std::size_t shown = 0;
  for (const LawViolation& v : violations) {
    if (shown == 20) {
      out += "... (" + std::to_string(violations.size() - shown) + " more)\n";
      break;
    }
    out += v.law;
    out += '(';
    for (std::size_t i = 0; i < v.elems.size(); ++i) {
      if (i) out += ", ";
      out += h.label(v.elems[i]);
    }
    out += ")\n";
    ++shown;
  }
  return out;
}

bool is_filter(const HeytingAlgebra& h, const Filter& f) {
  int n = static_cast<int>(h.size());
  std::vector<char> in(n, 0);
  for (int x : f.members) {
    if (x < 0 || x >= n) throw domain_error("filter member out of range");
    in[x] = 1;
  }
  if (f.members.empty() || !in[h.top()]) return false;
  for (int x : f.members) {
    for (int y : f.members)
      if (!in[h.meet(x, y)]) return false;
    for (int y = 0; y < n; ++y)
      if (h.leq(x, y) && !in[y]) return false;
  }
  return true;
}

Filter generate_filter(const HeytingAlgebra& h, const std::vector<int>& seed) {
  int n = static_cast<int>(h.size());
  std::vector<char> in(n, 0);
  for (int x : seed) {
    if (x < 0 || x >= n) throw domain_error("filter seed element out of range");
    in[x] = 1;
  }
  in[h.top()] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int x = 0; x < n; ++x) {
      if (!in[x]) continue;
      for (int y = 0; y < n; ++y) {
        if (in[y] && !in[h.meet(x, y)]) {
          in[h.meet(x, y)] = 1;
          grew = true;
        }
        if (h.leq(x, y) && !in[y]) {
          in[y] = 1;
          grew = true;
        }
      }
    }
  }
  Filter f;
  for (int x = 0; x < n; ++x)
    if (in[x]) f.members.push_back(x);
  return f;
}

Filter principal_filter(const HeytingAlgebra& h, int a) {
  if (a < 0 || a >= static_cast<int>(h.size()))
    throw domain_error("element out of range");
  Filter f;
  for (int y = 0; y < static_cast<int>(h.size()); ++y)
    if (h.leq(a, y)) f.members.push_back(y);
  return f;
}

std::vector<Filter> all_filters(const HeytingAlgebra& h) {
  std::vector<Filter> out;
  for (int a = 0; a < static_cast<int>(h.size()); ++a)
    out.push_back(principal_filter(h, a));
  return out;
}

QuotientResult quotient(const HeytingAlgebra& h, const Filter& f) {
  if (!is_filter(h, f)) throw domain_error("quotient requires a filter");
  int n = static_cast<int>(h.size());
  std::vector<char> in(n, 0);
  for (int x : f.members) in[x] = 1;
  auto cong = [&](int x, int y) { return in[h.imp(x, y)] && in[h.imp(y, x)]; };

  std::vector<int> class_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (class_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int y = x; y < n; ++y)
      if (class_of[y] < 0 && cong(x, y)) class_of[y] = id;
  }
  int m = static_cast<int>(reps.size());

  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> order;
  for (int i = 0; i < m; ++i) {
    labels.push_back("[" + h.label(reps[i]) + "]");
    for (int j = 0; j < m; ++j)
      if (i != j && in[h.imp(reps[i], reps[j])]) order.emplace_back(i, j);
  }
  FinitePoset qp(std::move(labels), order);
  std::vector<int> meet(m * m), join(m * m), imp(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      meet[i * m + j] = class_of[h.meet(reps[i], reps[j])];
      join[i * m + j] = class_of[h.join(reps[i], reps[j])];
      imp[i * m + j] = class_of[h.imp(reps[i], reps[j])];
    }
  QuotientResult qr{HeytingAlgebra::from_tables(
                        std::move(qp), class_of[h.bottom()], class_of[h.top()],
                        std::move(meet), std::move(join), std::move(imp)),
                    class_of};
  // the congruence must respect the operations on every pair, not only on
  // the chosen representatives
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (qr.class_of[h.meet(x, y)] !=
              qr.algebra.meet(qr.class_of[x], qr.class_of[y]) ||
          qr.class_of[h.join(x, y)] !=
              qr.algebra.join(qr.class_of[x], qr.class_of[y]) ||
          qr.class_of[h.imp(x, y)] !=
              qr.algebra.imp(qr.class_of[x], qr.class_of[y]))
        throw domain_error("quotient operations are not well defined");
    }
  return qr;
}

int label_ceiling(const HeytingAlgebra& h, const std::vector<int>& elems) {
  if (elems.empty()) throw domain_error("ceiling of an empty set");
  int acc = elems.front();
  for (int x : elems) acc = h.join(acc, x);
  return acc;
}

int label_floor(const HeytingAlgebra& h, const std::vector<int>& elems) {
  if (elems.empty()) throw domain_error("floor of an empty set");
  int acc = elems.front();
  for (int x : elems) acc = h.meet(acc, x);
  return acc;
}

namespace {

bool extend_iso(const HeytingAlgebra& a, const HeytingAlgebra& b,
                std::vector<int>& map, std::vector<char>& used, std::size_t i) {
  std::size_t n = a.size();
  if (i == n) return true;
  for (std::size_t j = 0; j < n; ++j) {
    if (used[j]) continue;
    bool ok = true;
    for (std::size_t k = 0; k < i && ok; ++k) {
      if (a.leq(static_cast<int>(i), static_cast<int>(k)) !=
          b.leq(static_cast<int>(j), map[k]))
        ok = false;
      if (a.leq(static_cast<int>(k), static_cast<int>(i)) !=
          b.leq(map[k], static_cast<int>(j)))
        ok = false;
    }
    if (!ok) continue;
    map[i] = static_cast<int>(j);
    used[j] = 1;
    if (extend_iso(a, b, map, used, i + 1)) return true;
    used[j] = 0;
  }
  return false;
}

}  // namespace

bool isomorphic(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  if (a.size() != b.size()) return false;
  if (a.size() > 8) throw domain_error("isomorphism check limited to 8 elements");
  std::vector<int> map(a.size(), -1);
  std::vector<char> used(a.size(), 0);
  return extend_iso(a, b, map, used, 0);
}

FunctionSpace::FunctionSpace(int domain, int codomain)
    : domain_(domain), codomain_(codomain) {
  if (domain < 0 || codomain < 1)
    throw domain_error("function space needs domain >= 0 and codomain >= 1");
  count_ = 1;
  for (int i = 0; i < domain; ++i) {
    count_ *= codomain;
    if (count_ > (1u << 20))
      throw domain_error("function space too large to enumerate");
  }
}

std::vector<int> FunctionSpace::table(std::uint64_t i) const {
  if (i >= count_) throw domain_error("function index out of range");
  std::vector<int> t(domain_);
  for (int x = 0; x < domain_; ++x) {
    t[x] = static_cast<int>(i % codomain_);
    i /= codomain_;
  }
  return t;
}

std::uint64_t FunctionSpace::index_of(const std::vector<int>& table) const {
  if (table.size() != static_cast<std::size_t>(domain_))
    throw domain_error("function table has wrong arity");
  std::uint64_t i = 0;
  for (int x = domain_ - 1; x >= 0; --x) {
    if (table[x] < 0 || table[x] >= codomain_)
      throw domain_error("function value out of codomain");
    i = i * codomain_ + table[x];
  }
  return i;
}

CurryReport curry_check(int a, int b, int c) {
  if (a < 1 || a > 3 || b < 1 || b > 3 || c < 1 || c > 3)
    throw domain_error("curry check covers set sizes 1..3");
  FunctionSpace uncurried(a * b, c);        // arg (x, y) flattened as x*b + y
  FunctionSpace inner(b, c);                // C^B
  FunctionSpace curried(a, static_cast<int>(inner.count()));

  CurryReport rep;
  rep.uncurried_count = uncurried.count();
  rep.curried_count = curried.count();
  rep.bijection_ok = rep.uncurried_count == rep.curried_count;

  std::vector<char> seen(curried.count(), 0);
  for (std::uint64_t fi = 0; fi < uncurried.count() && rep.bijection_ok; ++fi) {
    std::vector<int> f = uncurried.table(fi);
    std::vector<int> g(a);
    for (int x = 0; x < a; ++x) {
      std::vector<int> slice(f.begin() + x * b, f.begin() + (x + 1) * b);
      g[x] = static_cast<int>(inner.index_of(slice));
    }
    std::uint64_t gi = curried.index_of(g);
    if (seen[gi]) {
      rep.bijection_ok = false;
      break;
    }
    seen[gi] = 1;
    // round trip: uncurry g and require the original table
    std::vector<int> back(a * b);
    for (int x = 0; x < a; ++x) {
      std::vector<int> slice = inner.table(g[x]);
      for (int y = 0; y < b; ++y) back[x * b + y] = slice[y];
    }
    if (uncurried.index_of(back) != fi) rep.bijection_ok = false;
  }
  if (rep.bijection_ok &&
      !std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; }))
    rep.bijection_ok = false;
  return rep;
}

std::string CurryReport::str() const {
  std::string out;
  out += "functions (A x B) -> C: " + std::to_string(uncurried_count) + "\n";
  out += "functions A -> C^B:     " + std::to_string(curried_count) + "\n";
  out += bijection_ok ? "currying bijection: ok\n" : "currying bijection: FAILED\n";
  return out;
}

int eval_in_algebra(const HeytingAlgebra& h, const logic::Formula& f,
                    const std::map<std::string, int>& env) {
  using logic::Kind;
  switch (f.kind()) {
    case Kind::Atom: {
      auto it = env.find(f.atom_name());
      if (it == env.end())
        throw domain_error("unbound atom in evaluation: " + f.atom_name());
      if (it->second < 0 || it->second >= static_cast<int>(h.size()))
        throw domain_error("valuation element out of range");
      return it->second;
    }
    case Kind::Bottom:
      return h.bottom();
    case Kind::Top:
      return h.top();
    case Kind::Not:
      return h.neg(eval_in_algebra(h, f.child(0), env));
    case Kind::And:
      return h.meet(eval_in_algebra(h, f.child(0), env),
                    eval_in_algebra(h, f.child(1), env));
    case Kind::Or:
      return h.join(eval_in_algebra(h, f.child(0), env),
                    eval_in_algebra(h, f.child(1), env));
    case Kind::Implies:
      return h.imp(eval_in_algebra(h, f.child(0), env),
                   eval_in_algebra(h, f.child(1), env));
    case Kind::N: {
      int acc = h.top();
      for (const logic::Formula& arg : f.children())
        acc = h.meet(acc, h.neg(eval_in_algebra(h, arg, env)));
      return acc;
    }
  }
  throw domain_error("unreachable formula kind");
}

bool valid_in_algebra(const HeytingAlgebra& h, const logic::Formula& f) {
  std::vector<std::string> atoms = logic::atoms_of(f);
  if (atoms.size() > 6) throw domain_error("algebra validity limited to 6 atoms");
  std::size_t n = h.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    total *= n;
    if (total > (1u << 22))
      throw domain_error("too many valuations to enumerate");
  }
  std::map<std::string, int> env;
  for (std::uint64_t v = 0; v < total; ++v) {
    std::uint64_t rest = v;
    for (const std::string& a : atoms) {
      env[a] = static_cast<int>(rest % n);
      rest /= n;
    }
    if (eval_in_algebra(h, f, env) != h.top()) return false;
  }
  return true;
}

FinitePoset parse_poset_file(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;
  bool have_elements = false;
  std::string raw;
  int lineno = 0;
  auto index_of = [&](const std::string& s, int line) {
    auto it = std::find(labels.begin(), labels.end(), s);
    if (it == labels.end())
      throw parse_error("unknown element '" + s + "'", line, 1);
    return static_cast<int>(it - labels.begin());
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    std::string t;
    while (ls >> t) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] == "elements:") {
      if (have_elements)
        throw parse_error("duplicate elements line", lineno, 1);
      if (tok.size() == 1)
        throw parse_error("elements line lists nothing", lineno, 1);
      labels.assign(tok.begin() + 1, tok.end());
      have_elements = true;
      continue;
    }
    if (!have_elements)
      throw parse_error("expected 'elements:' before relations", lineno, 1);
    if (tok.size() != 3 || tok[1] != "<=")
      throw parse_error("expected 'a <= b'", lineno, 1);
    pairs.emplace_back(index_of(tok[0], lineno), index_of(tok[2], lineno));
  }
  if (!have_elements) throw parse_error("missing 'elements:' line", 1, 1);
  try {
    return FinitePoset(std::move(labels), pairs, /*close=*/true);
  } catch (const domain_error& e) {
    throw parse_error(e.what(), lineno, 1);
  }
}

SurveyReport downset_law_survey(int max_elems, ExecMode mode) {
  if (max_elems < 1 || max_elems > 4)
    throw domain_error("law survey covers 1..4 elements");
  std::vector<FinitePoset> posets;
  for (int n = 1; n <= max_elems; ++n)
    for (FinitePoset& p : all_posets(n)) posets.push_back(std::move(p));

  int count = static_cast<int>(posets.size());
  std::vector<char> ok(count, 0);
  std::vector<LawViolation> first_hit(count);

  auto work = [&](int i) {
    HeytingAlgebra h = HeytingAlgebra::downset_algebra(posets[i]);
    LawReport rep = h.check_laws();
    ok[i] = rep.ok;
    if (!rep.ok) first_hit[i] = rep.violations.front();
  };
  if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < count; ++i) work(i);
  } else {
    for (int i = 0; i < count; ++i) work(i);
  }

  SurveyReport rep;
  rep.max_elems = max_elems;
  rep.posets = count;
  for (int i = 0; i < count; ++i) {
    if (ok[i])
      ++rep.algebras_ok;
    else
      rep.failures.emplace_back(i, first_hit[i]);
  }
  return rep;
}

std::string SurveyReport::str() const {
  std::string out;
  out += "downset algebras over posets on 1.." + std::to_string(max_elems) +
         " elements\n";
  out += "posets: " + std::to_string(posets) + "\n";
  out += "algebras passing all laws: " + std::to_string(algebras_ok) + "\n";
  for (const auto& [idx, v] : failures) {
    out += "poset " + std::to_string(idx) + " fails " + v.law + "\n";
  }
  return out;
}

}  // namespace ccalc::heyting
