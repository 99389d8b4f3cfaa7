#include "ccalc/workspace.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ccalc/error.hpp"

namespace ccalc::workspace {

struct SyntacticObject::Node {
  std::string label;
  std::shared_ptr<const Node> kid[2];  // both null for a leaf
  std::string serial;
};

namespace {

using NodePtr = std::shared_ptr<const SyntacticObject::Node>;

NodePtr make_leaf(const std::string& name) {
  auto n = std::make_shared<SyntacticObject::Node>();
  n->label = name;
  n->serial = name;
  return n;
}

// children stored in canonical order (by serialized form); labels are
// unique workspace-wide so serials never tie
NodePtr make_node(const std::string& label, NodePtr a, NodePtr b) {
  if (b->serial < a->serial) std::swap(a, b);
  auto n = std::make_shared<SyntacticObject::Node>();
  n->label = label;
  n->serial = label + ":{" + a->serial + "," + b->serial + "}";
  n->kid[0] = std::move(a);
  n->kid[1] = std::move(b);
  return n;
}

void collect_labels(const NodePtr& n, std::set<const SyntacticObject::Node*>& seen,
                    std::set<std::string>& out) {
  if (!seen.insert(n.get()).second) return;
  out.insert(n->label);
  if (n->kid[0]) {
    collect_labels(n->kid[0], seen, out);
    collect_labels(n->kid[1], seen, out);
  }
}

NodePtr find_label(const NodePtr& n, const std::string& label) {
  if (n->label == label) return n;
  if (!n->kid[0]) return nullptr;
  if (NodePtr hit = find_label(n->kid[0], label)) return hit;
  return find_label(n->kid[1], label);
}

void collect_leaves(const NodePtr& n, std::set<const SyntacticObject::Node*>& seen,
                    std::vector<std::string>& out) {
  if (!seen.insert(n.get()).second) return;
  if (!n->kid[0]) {
    out.push_back(n->label);
    return;
  }
  collect_leaves(n->kid[0], seen, out);
  collect_leaves(n->kid[1], seen, out);
}

// every occurrence counts, so shared subterms are revisited on purpose
void find_paths(const NodePtr& n, const std::string& name, std::string& steps,
                std::vector<std::string>& out) {
  if (!n->kid[0]) {
    if (n->label == name) out.push_back(steps);
    return;
  }
  for (int i = 0; i < 2; ++i) {
    steps.push_back(i == 0 ? 'L' : 'R');
    find_paths(n->kid[i], name, steps, out);
    steps.pop_back();
  }
}

std::string display_path(const std::string& steps) {
  if (steps.empty()) return "/";
  std::string out;
  for (char c : steps) {
    if (!out.empty()) out += '/';
    out += c;
  }
  return out;
}

}  // namespace

bool SyntacticObject::is_leaf() const { return !node_->kid[0]; }
const std::string& SyntacticObject::label() const { return node_->label; }
const std::string& SyntacticObject::str() const { return node_->serial; }

SyntacticObject SyntacticObject::child(int i) const {
  if (is_leaf()) throw domain_error("leaf has no children");
  if (i < 0 || i > 1) throw domain_error("child index must be 0 or 1");
  return SyntacticObject(node_->kid[i]);
}

bool SyntacticObject::same_object(const SyntacticObject& other) const {
  return node_.get() == other.node_.get();
}

Workspace Workspace::lex(const std::string& name) const {
  if (name.empty()) throw domain_error("lexical item needs a name");
  std::set<const SyntacticObject::Node*> seen;
  std::set<std::string> labels;
  for (const SyntacticObject& r : roots_) collect_labels(r.node_, seen, labels);
  if (labels.count(name))
    throw domain_error("label already in use: " + name);
  Workspace out = *this;
  out.roots_.push_back(SyntacticObject(make_leaf(name)));
  out.lexicon_.push_back(name);
  return out;
}

Workspace Workspace::merge(const std::string& x, const std::string& y,
                           const std::string& as) const {
  std::set<const SyntacticObject::Node*> seen;
  std::set<std::string> labels;
  for (const SyntacticObject& r : roots_) collect_labels(r.node_, seen, labels);
  if (labels.count(as)) throw domain_error("label already in use: " + as);

  int rx = -1;
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].label() == x) rx = static_cast<int>(i);
  if (rx < 0) {
    if (labels.count(x))
      throw domain_error(x + " is not a root");
    throw domain_error("unknown name: " + x);
  }

  // y as a distinct root: external merge
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i].label() != y) continue;
    if (static_cast<int>(i) == rx)
      throw domain_error("cannot merge a root with itself");
    Workspace out = *this;
    NodePtr merged = make_node(as, roots_[rx].node_, roots_[i].node_);
    std::vector<SyntacticObject> kept;
    for (std::size_t j = 0; j < roots_.size(); ++j)
      if (j != static_cast<std::size_t>(rx) && j != i) kept.push_back(roots_[j]);
    kept.push_back(SyntacticObject(std::move(merged)));
    out.roots_ = std::move(kept);
    out.stage_ = stage_ + 1;
    return out;
  }

  // y inside x: internal merge, the subterm is shared not moved
  if (NodePtr sub = find_label(roots_[rx].node_, y)) {
    if (sub == roots_[rx].node_)
      throw domain_error("cannot merge a root with itself");
    Workspace out = *this;
    out.roots_[rx] = SyntacticObject(make_node(as, roots_[rx].node_, sub));
    out.stage_ = stage_ + 1;
    return out;
  }

  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (static_cast<int>(i) != rx)
      if (find_label(roots_[i].node_, y))
        throw domain_error("no tampering: " + y + " is inside foreign root " +
                           roots_[i].label());

  throw domain_error("unknown name: " + y);
}

Workspace Workspace::imerge(const std::string& root, const std::string& path,
                            const std::string& as) const {
  std::set<const SyntacticObject::Node*> seen;
  std::set<std::string> labels;
  for (const SyntacticObject& r : roots_) collect_labels(r.node_, seen, labels);
  if (labels.count(as)) throw domain_error("label already in use: " + as);

  int rx = -1;
  for (std::size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].label() == root) rx = static_cast<int>(i);
  if (rx < 0) throw domain_error("unknown root: " + root);

  if (path.empty() || path == "/")
    throw domain_error("internal merge needs a proper subterm path");
  NodePtr cur = roots_[rx].node_;
  std::size_t p = 0;
  while (p < path.size()) {
    std::size_t q = path.find('/', p);
    std::string step = path.substr(p, q == std::string::npos ? q : q - p);
    if (step != "L" && step != "R")
      throw domain_error("bad path step: " + step);
    if (!cur->kid[0])
      throw domain_error("path walks past a leaf: " + path);
    cur = cur->kid[step == "L" ? 0 : 1];
    p = q == std::string::npos ? path.size() : q + 1;
  }

  Workspace out = *this;
  out.roots_[rx] = SyntacticObject(make_node(as, roots_[rx].node_, cur));
  out.stage_ = stage_ + 1;
  return out;
}

hf::Ordinal Workspace::stage() const { return hf::ord_of_nat(stage_); }

std::vector<std::string> Workspace::leaf_names() const {
  std::set<const SyntacticObject::Node*> seen;
  std::vector<std::string> out;
  for (const SyntacticObject& r : roots_) collect_leaves(r.node_, seen, out);
  std::sort(out.begin(), out.end());
  return out;
}

DerivationTriple Workspace::triple(const std::string& name) const {
  int lex_index = -1;
  for (std::size_t i = 0; i < lexicon_.size(); ++i)
    if (lexicon_[i] == name) lex_index = static_cast<int>(i);
  if (lex_index < 0) throw domain_error("unknown lexical item: " + name);
  std::vector<std::string> raw;
  std::string steps;
  for (const SyntacticObject& r : roots_) find_paths(r.node_, name, steps, raw);
  std::sort(raw.begin(), raw.end());
  DerivationTriple t;
  t.stage = stage_;
  t.name = name;
  t.lex_index = lex_index;
  for (const std::string& s : raw) t.paths.push_back(display_path(s));
  return t;
}

std::string Workspace::str() const {
  std::vector<std::string> lines;
  for (const SyntacticObject& r : roots_) lines.push_back(r.str());
  std::sort(lines.begin(), lines.end());
  std::string out = "stage: " + std::to_string(stage_) + "\n";
  for (const std::string& l : lines) out += "root: " + l + "\n";
  return out;
}

std::string DerivationTriple::str() const {
  std::string out = "<" + std::to_string(stage) + ", " + name + ", {";
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (i) out += ", ";
    out += paths[i];
  }
  out += "}>";
  return out;
}

hf::HFSet DerivationTriple::to_hfset() const {
  using hf::HFSet;
  // "" -> 0, L prefix -> pair(0, rest), R prefix -> pair(1, rest)
  auto code_path = [](const std::string& display) {
    std::vector<int> steps;
    for (char c : display)
      if (c == 'L' || c == 'R') steps.push_back(c == 'L' ? 0 : 1);
    HFSet code = hf::ord_of_nat(0).set();
    for (std::size_t i = steps.size(); i-- > 0;)
      code = hf::pair(hf::ord_of_nat(steps[i]).set(), code);
    return code;
  };
  std::vector<HFSet> path_codes;
  for (const std::string& p : paths) path_codes.push_back(code_path(p));
  return hf::nest({hf::ord_of_nat(stage).set(),
                      hf::ord_of_nat(lex_index).set(),
                      HFSet(path_codes)});
}

ScriptResult run_script(std::string_view text) {
  ScriptResult res;
  int lineno = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    std::string w;
    while (ls >> w) tok.push_back(w);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "lex" && tok.size() == 2) {
        res.ws = res.ws.lex(tok[1]);
      } else if (tok[0] == "merge" && tok.size() == 5 && tok[3] == "as") {
        res.ws = res.ws.merge(tok[1], tok[2], tok[4]);
      } else if (tok[0] == "imerge" && tok.size() == 5 && tok[3] == "as") {
        res.ws = res.ws.imerge(tok[1], tok[2], tok[4]);
      } else if (tok[0] == "triple" && tok.size() == 2) {
        res.triples.push_back(res.ws.triple(tok[1]).str());
      } else {
        throw parse_error("bad script line", lineno, 1);
      }
    } catch (const parse_error&) {
      throw;
    } catch (const domain_error& e) {
      throw domain_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return res;
}

std::string CitationRecord::str() const {
  std::string out = chain_label;
  for (int i = 0; i < index; ++i) out += '\'';
  return out;
}

CitationChain CitationChain::start(std::string chain_label, std::string assertion,
                                   bool valid) {
  CitationChain c;
  c.records_.push_back(
      CitationRecord{std::move(chain_label), 0, std::move(assertion), valid});
  return c;
}

CitationChain CitationChain::cite(std::string assertion) const {
  const CitationRecord& h = head();
  CitationChain out = *this;
  out.records_.push_back(
      CitationRecord{h.chain_label, h.index + 1, std::move(assertion), h.valid});
  return out;
}

CitationChain CitationChain::cite_from(int index, std::string assertion) const {
  if (index != head().index)
    throw domain_error("can only cite the head of the chain (record " +
                       std::to_string(head().index) + ")");
  return cite(std::move(assertion));
}

std::optional<std::size_t> CitationChain::resolve(const std::string& name) const {
  for (std::size_t i = 0; i < records_.size(); ++i)
    if (records_[i].assertion == name) return i;
  return std::nullopt;
}

std::string CitationChain::str() const {
  std::string out;
  for (const CitationRecord& r : records_) {
    out += r.str();
    out += ": ";
    out += r.assertion;
    if (!r.valid) out += " (invalid)";
    out += "\n";
  }
  return out;
}

std::optional<std::size_t> resolve(const std::string& name,
                                   const CitationChain& chain) {
  return chain.resolve(name);
}

ContextChain::ContextChain(std::string base_label,
                           std::vector<std::string> base_axioms)
    : base_(std::move(base_label)) {
  if (base_.empty()) throw domain_error("context chain needs a base label");
  std::sort(base_axioms.begin(), base_axioms.end());
  base_axioms.erase(std::unique(base_axioms.begin(), base_axioms.end()),
                    base_axioms.end());
  stages_.push_back(std::move(base_axioms));
}

std::string ContextChain::stage_name(std::size_t i) const {
  if (i >= stages_.size()) throw domain_error("stage index out of range");
  return base_ + std::to_string(i);
}

const std::vector<std::string>& ContextChain::axioms(std::size_t i) const {
  if (i >= stages_.size()) throw domain_error("stage index out of range");
  return stages_[i];
}

ContextChain ContextChain::step() const {
  std::string self = stage_name(stages_.size() - 1);
  const std::vector<std::string>& cur = stages_.back();
  if (std::binary_search(cur.begin(), cur.end(), self))
    throw domain_error("axiom already present: " + self);
  ContextChain out = *this;
  std::vector<std::string> next = cur;
  next.insert(std::upper_bound(next.begin(), next.end(), self), self);
  out.stages_.push_back(std::move(next));
  return out;
}

ContextChain ContextChain::rebase(std::string new_base_label) const {
  ContextChain out(std::move(new_base_label), stages_.back());
  return out;
}

std::string ContextChain::str() const {
  std::string out;
  for (std::size_t i = 0; i < stages_.size(); ++i) {
    out += stage_name(i);
    out += ": {";
    for (std::size_t j = 0; j < stages_[i].size(); ++j) {
      if (j) out += ", ";
      out += stages_[i][j];
    }
    out += "}\n";
  }
  return out;
}

}  // namespace ccalc::workspace
