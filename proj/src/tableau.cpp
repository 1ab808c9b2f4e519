#include "tableau.hpp"

#include <algorithm>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <optional>
#include <set>
#include <tuple>

namespace ontotdd::detail {

// ── ConceptPool ─────────────────────────────────────────────────────────────

ConceptPool::ConceptPool() {
  intern(Concept{ConceptKind::Top});
  intern(Concept{ConceptKind::Bottom});
  negations_[kTop] = kBottom;
  negations_[kBottom] = kTop;
}

ConceptId ConceptPool::intern(Concept c) {
  auto it = ids_.find(c);
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<ConceptId>(concepts_.size());
  concepts_.push_back(c);
  ids_.emplace(std::move(c), id);
  return id;
}

ConceptId ConceptPool::atom(const Name& name) {
  auto [it, inserted] = atoms_.try_emplace(name, static_cast<std::uint32_t>(atoms_.size()));
  return intern(Concept{ConceptKind::Atom, it->second});
}

std::uint32_t ConceptPool::role(const Name& name) {
  auto [it, inserted] = roles_.try_emplace(name, static_cast<std::uint32_t>(roles_.size()));
  return it->second;
}

ConceptId ConceptPool::makeAnd(std::vector<ConceptId> args) {
  std::vector<ConceptId> flat;
  for (auto a : args) {
    if (a == kBottom) return kBottom;
    if (a == kTop) continue;
    if (concepts_[a].kind == ConceptKind::And) {
      flat.insert(flat.end(), concepts_[a].args.begin(), concepts_[a].args.end());
    } else {
      flat.push_back(a);
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return kTop;
  if (flat.size() == 1) return flat.front();
  return intern(Concept{ConceptKind::And, 0, 0, std::move(flat)});
}

ConceptId ConceptPool::makeOr(std::vector<ConceptId> args) {
  std::vector<ConceptId> flat;
  for (auto a : args) {
    if (a == kTop) return kTop;
    if (a == kBottom) continue;
    if (concepts_[a].kind == ConceptKind::Or) {
      flat.insert(flat.end(), concepts_[a].args.begin(), concepts_[a].args.end());
    } else {
      flat.push_back(a);
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return kBottom;
  if (flat.size() == 1) return flat.front();
  return intern(Concept{ConceptKind::Or, 0, 0, std::move(flat)});
}

ConceptId ConceptPool::makeSome(std::uint32_t role, ConceptId filler) {
  if (filler == kBottom) return kBottom;
  return intern(Concept{ConceptKind::Some, role, 0, {filler}});
}

ConceptId ConceptPool::makeAll(std::uint32_t role, ConceptId filler) {
  if (filler == kTop) return kTop;
  return intern(Concept{ConceptKind::All, role, 0, {filler}});
}

ConceptId ConceptPool::makeAtLeast(std::uint32_t n, std::uint32_t role, ConceptId filler) {
  if (n == 0) return kTop;
  if (filler == kBottom) return kBottom;
  return intern(Concept{ConceptKind::AtLeast, role, n, {filler}});
}

ConceptId ConceptPool::makeAtMost(std::uint32_t n, std::uint32_t role, ConceptId filler) {
  if (filler == kBottom) return kTop;
  return intern(Concept{ConceptKind::AtMost, role, n, {filler}});
}

ConceptId ConceptPool::negate(ConceptId c) {
  if (auto it = negations_.find(c); it != negations_.end()) return it->second;
  const Concept con = concepts_[c];  // copy: interning below may reallocate
  ConceptId result = kTop;
  switch (con.kind) {
    case ConceptKind::Top: result = kBottom; break;
    case ConceptKind::Bottom: result = kTop; break;
    case ConceptKind::Atom: result = intern(Concept{ConceptKind::NegAtom, con.symbol}); break;
    case ConceptKind::NegAtom: result = intern(Concept{ConceptKind::Atom, con.symbol}); break;
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<ConceptId> neg;
      for (auto a : con.args) neg.push_back(negate(a));
      result = con.kind == ConceptKind::And ? makeOr(std::move(neg)) : makeAnd(std::move(neg));
      break;
    }
    case ConceptKind::Some: result = makeAll(con.symbol, negate(con.args[0])); break;
    case ConceptKind::All: result = makeSome(con.symbol, negate(con.args[0])); break;
    case ConceptKind::AtLeast: result = makeAtMost(con.n - 1, con.symbol, con.args[0]); break;
    case ConceptKind::AtMost: result = makeAtLeast(con.n + 1, con.symbol, con.args[0]); break;
  }
  negations_[c] = result;
  negations_[result] = c;
  return result;
}

ConceptId ConceptPool::fromExpression(const ClassExpression& expr) { return fromNnf(nnf(expr)); }

ConceptId ConceptPool::fromNnf(const ClassExpression& e) {
  auto list = [&] {
    std::vector<ConceptId> out;
    for (const auto& op : e.operands()) out.push_back(fromNnf(op));
    return out;
  };
  switch (e.kind()) {
    case ExprKind::Named: return atom(e.name());
    case ExprKind::Top: return kTop;
    case ExprKind::Bottom: return kBottom;
    case ExprKind::And: return makeAnd(list());
    case ExprKind::Or: return makeOr(list());
    case ExprKind::Not: return negate(fromNnf(e.sub()));
    case ExprKind::Some: return makeSome(role(e.role()), fromNnf(e.sub()));
    case ExprKind::All: return makeAll(role(e.role()), fromNnf(e.sub()));
    case ExprKind::MinCard: return makeAtLeast(e.cardinality(), role(e.role()), fromNnf(e.sub()));
    case ExprKind::MaxCard: return makeAtMost(e.cardinality(), role(e.role()), fromNnf(e.sub()));
    case ExprKind::ExactCard: return fromNnf(nnf(e));
  }
  return kTop;
}

// ── Compilation ─────────────────────────────────────────────────────────────

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Tableau::Tableau(const OntologyState& state, const ReasonerOptions& options) : options_(options) {
  compileTbox(state.tbox());
  const auto& sig = state.signature();
  individuals_.assign(sig.individuals.begin(), sig.individuals.end());
  for (const auto& ax : state.abox()) {
    std::visit(Overloaded{
                   [&](const ClassAssertion& a) {
                     memberships_.emplace_back(a.individual, pool_.fromExpression(a.expr));
                   },
                   [&](const ObjectPropertyAssertion& a) {
                     edges_.emplace_back(pool_.role(a.role), a.subject, a.object);
                   },
                   [&](const SameIndividual& a) { same_.push_back(a.individuals); },
                   [&](const DifferentIndividuals& a) { different_.push_back(a.individuals); },
                   [](const auto&) {},
               },
               ax);
  }
}

void Tableau::addInclusion(const ClassExpression& sub, const ClassExpression& sup) {
  const ConceptId rhs = pool_.fromExpression(sup);
  if (rhs == ConceptPool::kTop) return;
  if (sub.kind() == ExprKind::Top) {
    universal_.push_back(rhs);
    return;
  }
  // Lazy unfolding for inclusions whose left side is, or contains as a
  // top-level conjunct, a named class.
  if (sub.kind() == ExprKind::Named) {
    const ConceptId a = pool_.atom(sub.name());
    unfold_[pool_[a].symbol].push_back(rhs);
    return;
  }
  if (sub.kind() == ExprKind::And) {
    const auto& ops = sub.operands();
    auto it = std::find_if(ops.begin(), ops.end(), [](const ClassExpression& e) { return e.isNamed(); });
    if (it != ops.end()) {
      std::vector<ConceptId> disj{rhs};
      for (const auto& op : ops) {
        if (&op != &*it) disj.push_back(pool_.negate(pool_.fromExpression(op)));
      }
      const ConceptId a = pool_.atom(it->name());
      unfold_[pool_[a].symbol].push_back(pool_.makeOr(std::move(disj)));
      return;
    }
  }
  universal_.push_back(pool_.makeOr({pool_.negate(pool_.fromExpression(sub)), rhs}));
}

void Tableau::compileTbox(const std::vector<Axiom>& tbox) {
  for (const auto& ax : tbox) {
    std::visit(Overloaded{
                   [&](const SubClassOf& a) { addInclusion(a.sub, a.sup); },
                   [&](const EquivalentClasses& a) {
                     for (std::size_t i = 1; i < a.members.size(); ++i) {
                       addInclusion(a.members[0], a.members[i]);
                       addInclusion(a.members[i], a.members[0]);
                     }
                   },
                   [&](const DisjointClasses& a) {
                     for (std::size_t i = 0; i < a.members.size(); ++i) {
                       for (std::size_t j = i + 1; j < a.members.size(); ++j) {
                         addInclusion(a.members[i], Not(a.members[j]));
                       }
                     }
                   },
                   [&](const DisjointUnion& a) {
                     const auto lhs = Named(a.lhs);
                     const auto rhs = Or(a.members);
                     addInclusion(lhs, rhs);
                     addInclusion(rhs, lhs);
                     for (std::size_t i = 0; i < a.members.size(); ++i) {
                       for (std::size_t j = i + 1; j < a.members.size(); ++j) {
                         addInclusion(a.members[i], Not(a.members[j]));
                       }
                     }
                   },
                   [](const auto&) {},
               },
               ax);
  }
  std::sort(universal_.begin(), universal_.end());
  universal_.erase(std::unique(universal_.begin(), universal_.end()), universal_.end());
}

// ── Completion graph ────────────────────────────────────────────────────────

namespace {

/// Branch points a fact depends on, sorted. Used for backjumping. Immutable
/// and shared, so copying a completion graph does not copy the sets.
class DepSet {
 public:
  DepSet() = default;
  DepSet(std::initializer_list<std::uint32_t> levels) : DepSet(std::vector<std::uint32_t>(levels)) {}
  explicit DepSet(std::vector<std::uint32_t> sorted)
      : levels_(sorted.empty() ? nullptr : std::make_shared<const std::vector<std::uint32_t>>(std::move(sorted))) {}

  bool empty() const { return !levels_; }
  std::vector<std::uint32_t>::const_iterator begin() const { return levels_ ? levels_->begin() : kEmpty.begin(); }
  std::vector<std::uint32_t>::const_iterator end() const { return levels_ ? levels_->end() : kEmpty.end(); }

  DepSet without(std::uint32_t level) const {
    std::vector<std::uint32_t> out;
    std::remove_copy(begin(), end(), std::back_inserter(out), level);
    return DepSet(std::move(out));
  }

  friend DepSet unite(const DepSet& a, const DepSet& b) {
    if (b.empty() || a.levels_ == b.levels_) return a;
    if (a.empty()) return b;
    if (std::includes(a.begin(), a.end(), b.begin(), b.end())) return a;
    if (std::includes(b.begin(), b.end(), a.begin(), a.end())) return b;
    std::vector<std::uint32_t> out;
    out.reserve(a.levels_->size() + b.levels_->size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return DepSet(std::move(out));
  }

 private:
  static inline const std::vector<std::uint32_t> kEmpty;
  std::shared_ptr<const std::vector<std::uint32_t>> levels_;
};

void uniteInto(DepSet& a, const DepSet& b) { a = unite(a, b); }

bool dependsOn(const DepSet& s, std::uint32_t level) { return std::binary_search(s.begin(), s.end(), level); }

const DepSet kNoDeps;

struct Entry {
  ConceptId id;
  DepSet deps;
};

struct Edge {
  std::uint32_t role;
  int to;
  DepSet deps;
};

struct Node {
  bool alive = true;
  bool root = false;
  bool dirty = true;
  int parent = -1;
  std::vector<Entry> label;  // sorted by concept
  std::vector<Edge> out;

  const Entry* find(ConceptId c) const {
    auto it = std::lower_bound(label.begin(), label.end(), c,
                               [](const Entry& e, ConceptId id) { return e.id < id; });
    return it != label.end() && it->id == c ? &*it : nullptr;
  }
  bool has(ConceptId c) const { return c == ConceptPool::kTop || find(c) != nullptr; }
  const DepSet& depsOf(ConceptId c) const {
    const Entry* e = find(c);
    return e ? e->deps : kNoDeps;
  }
  /// Every concept of `other` is also in this label.
  bool covers(const Node& other) const {
    return std::includes(label.begin(), label.end(), other.label.begin(), other.label.end(),
                         [](const Entry& a, const Entry& b) { return a.id < b.id; });
  }
};

struct Graph {
  std::vector<Node> nodes;
  std::map<std::pair<int, int>, DepSet> distinct;
  bool clash = false;
  DepSet clashDeps;

  static std::pair<int, int> key(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }
  const DepSet* distinctDeps(int a, int b) const {
    auto it = distinct.find(key(a, b));
    return it == distinct.end() ? nullptr : &it->second;
  }
  bool areDistinct(int a, int b) const { return distinctDeps(a, b) != nullptr; }
  void markDistinct(int a, int b, DepSet deps) { distinct.try_emplace(key(a, b), std::move(deps)); }
  void setClash(DepSet deps) {
    if (clash) return;
    clash = true;
    clashDeps = std::move(deps);
  }
};

struct Option {
  enum class Type { AddConcepts, Merge } type;
  int node;  // target of additions, or node merged away
  int into = -1;
  std::vector<ConceptId> concepts;
};

}  // namespace

class Search {
 public:
  explicit Search(Tableau& t) : t_(t), pool_(t.pool_) {}

  int newNode(Graph& g, bool root, int parent, const DepSet& deps) {
    if (++t_.nodes_created_ > t_.options_.nodeBudget) {
      throw ResourceExhausted("tableau node budget of " + std::to_string(t_.options_.nodeBudget) + " exceeded");
    }
    g.nodes.push_back(Node{});
    const int id = static_cast<int>(g.nodes.size()) - 1;
    g.nodes[id].root = root;
    g.nodes[id].parent = parent;
    for (auto u : t_.universal_) add(g, id, u, deps);
    return id;
  }

  void add(Graph& g, int v, ConceptId c, const DepSet& deps) {
    if (c == ConceptPool::kTop) return;
    auto& label = g.nodes[v].label;
    auto it = std::lower_bound(label.begin(), label.end(), c,
                               [](const Entry& e, ConceptId id) { return e.id < id; });
    if (it != label.end() && it->id == c) return;
    label.insert(it, Entry{c, deps});
    g.nodes[v].dirty = true;
    if (c == ConceptPool::kBottom) {
      g.setClash(deps);
    } else if (const Entry* neg = g.nodes[v].find(pool_.negate(c))) {
      g.setClash(unite(deps, neg->deps));
    }
  }

  void addEdge(Graph& g, int from, std::uint32_t role, int to, const DepSet& deps) {
    auto& out = g.nodes[from].out;
    for (const auto& e : out) {
      if (e.role == role && e.to == to) return;
    }
    out.push_back(Edge{role, to, deps});
    g.nodes[from].dirty = true;
  }

  void prune(Graph& g, int v) {
    for (const auto& e : g.nodes[v].out) {
      auto& child = g.nodes[e.to];
      if (child.alive && !child.root && child.parent == v) {
        prune(g, e.to);
        child.alive = false;
        child.label.clear();
      }
    }
    g.nodes[v].out.clear();
  }

  /// Merges node `y` into node `x`; `deps` justifies the merge.
  void merge(Graph& g, int y, int x, const DepSet& deps) {
    if (g.nodes[y].root && !g.nodes[x].root) std::swap(x, y);
    if (const DepSet* apart = g.distinctDeps(x, y)) {
      g.setClash(unite(*apart, deps));
      return;
    }
    const auto yLabel = g.nodes[y].label;
    for (const auto& e : yLabel) add(g, x, e.id, unite(e.deps, deps));

    for (auto& n : g.nodes) {
      if (!n.alive) continue;
      bool touched = false;
      for (auto& e : n.out) {
        if (e.to == y) {
          e.to = x;
          uniteInto(e.deps, deps);
          touched = true;
        }
      }
      if (!touched) continue;
      std::vector<Edge> uniq;
      for (auto& e : n.out) {
        auto same = [&](const Edge& u) { return u.role == e.role && u.to == e.to; };
        if (std::find_if(uniq.begin(), uniq.end(), same) == uniq.end()) uniq.push_back(std::move(e));
      }
      n.out = std::move(uniq);
      n.dirty = true;
    }

    if (g.nodes[y].root) {
      const auto out = g.nodes[y].out;
      for (const auto& e : out) {
        auto& child = g.nodes[e.to];
        if (!child.root && child.parent == y) child.parent = x;
        addEdge(g, x, e.role, e.to, unite(e.deps, deps));
      }
      g.nodes[y].out.clear();
    } else {
      prune(g, y);
    }

    std::map<std::pair<int, int>, DepSet> updated;
    for (auto& [pair, d] : g.distinct) {
      auto [a, b] = pair;
      if (a != y && b != y) {
        updated.try_emplace(pair, std::move(d));
        continue;
      }
      if (a == y) a = x;
      if (b == y) b = x;
      if (a == b) {
        g.setClash(unite(d, deps));
        return;
      }
      updated.try_emplace(Graph::key(a, b), unite(d, deps));
    }
    g.distinct = std::move(updated);
    g.nodes[y].alive = false;
    g.nodes[y].label.clear();
    g.nodes[x].dirty = true;
    forwarding_[y] = x;
  }

  int resolve(int v) const {
    for (auto it = forwarding_.find(v); it != forwarding_.end(); it = forwarding_.find(v)) v = it->second;
    return v;
  }

  void saturate(Graph& g) {
    bool again = true;
    while (again && !g.clash) {
      again = false;
      for (int v = 0; v < static_cast<int>(g.nodes.size()) && !g.clash; ++v) {
        if (!g.nodes[v].alive || !g.nodes[v].dirty) continue;
        g.nodes[v].dirty = false;
        again = true;
        const auto label = g.nodes[v].label;
        for (const auto& entry : label) {
          const Concept& con = pool_[entry.id];
          switch (con.kind) {
            case ConceptKind::And:
              for (auto a : con.args) add(g, v, a, entry.deps);
              break;
            case ConceptKind::Atom:
              if (auto it = t_.unfold_.find(con.symbol); it != t_.unfold_.end()) {
                for (auto d : it->second) add(g, v, d, entry.deps);
              }
              break;
            case ConceptKind::All: {
              const auto out = g.nodes[v].out;
              for (const auto& e : out) {
                if (e.role == con.symbol) add(g, e.to, con.args[0], unite(entry.deps, e.deps));
              }
              break;
            }
            default:
              break;
          }
          if (g.clash) return;
        }
      }
    }
  }

  /// R-successors of `v` carrying `filler`; `deps` collects why they qualify.
  std::vector<int> successors(const Graph& g, int v, std::uint32_t role, ConceptId filler, DepSet* deps) const {
    std::vector<int> out;
    for (const auto& e : g.nodes[v].out) {
      const auto& w = g.nodes[e.to];
      if (e.role != role || !w.alive || !w.has(filler)) continue;
      if (deps) {
        uniteInto(*deps, e.deps);
        uniteInto(*deps, w.depsOf(filler));
      }
      if (std::find(out.begin(), out.end(), e.to) == out.end()) out.push_back(e.to);
    }
    return out;
  }

  /// A largest set of pairwise-distinct members of `nodes`, searching no further than size `k`.
  static std::vector<int> distinctClique(const Graph& g, const std::vector<int>& nodes, std::size_t k) {
    std::vector<int> chosen, best;
    auto rec = [&](auto&& self, std::size_t from) -> bool {
      if (chosen.size() > best.size()) best = chosen;
      if (best.size() >= k) return true;
      for (std::size_t i = from; i < nodes.size(); ++i) {
        if (chosen.size() + (nodes.size() - i) <= best.size()) return false;
        bool ok = true;
        for (int c : chosen) ok = ok && g.areDistinct(c, nodes[i]);
        if (!ok) continue;
        chosen.push_back(nodes[i]);
        if (self(self, i + 1)) return true;
        chosen.pop_back();
      }
      return false;
    };
    rec(rec, 0);
    return best;
  }

  static bool hasDistinctClique(const Graph& g, const std::vector<int>& nodes, std::size_t k) {
    return k == 0 || distinctClique(g, nodes, k).size() >= k;
  }

  static void collectDistinct(const Graph& g, const std::vector<int>& nodes, DepSet& deps) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        if (const DepSet* d = g.distinctDeps(nodes[i], nodes[j])) uniteInto(deps, *d);
      }
    }
  }

  /// 0 = not blocked, 1 = directly blocked, 2 = indirectly blocked. A tree node
  /// is blocked by any earlier unblocked node whose label contains its own.
  std::vector<std::uint8_t> blocking(const Graph& g) const {
    std::vector<std::uint8_t> status(g.nodes.size(), 0);
    for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) {
      const auto& n = g.nodes[v];
      if (!n.alive || n.root || n.parent < 0) continue;
      if (!g.nodes[n.parent].root && status[n.parent] != 0) {
        status[v] = 2;
        continue;
      }
      for (int a = 0; a < v; ++a) {
        if (g.nodes[a].alive && status[a] == 0 && g.nodes[a].covers(n)) {
          status[v] = 1;
          break;
        }
      }
    }
    return status;
  }

  enum class Found { Nothing, Clash, Branch };

  /// Applies disjunctions left with a single open disjunct and detects
  /// disjunctions and at-most restrictions that can no longer be satisfied.
  /// Returns true if a clash was found, with its dependencies in `clash`.
  bool propagate(Graph& g, const std::vector<std::uint8_t>& blocked, DepSet& clash) {
    std::vector<std::tuple<int, ConceptId, DepSet>> forced;
    for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) {
      const auto& n = g.nodes[v];
      if (!n.alive || blocked[v] != 0) continue;
      for (const auto& entry : n.label) {
        const Concept& con = pool_[entry.id];
        if (con.kind == ConceptKind::Or) {
          if (std::any_of(con.args.begin(), con.args.end(), [&](ConceptId a) { return n.has(a); })) continue;
          DepSet deps = entry.deps;
          int open = 0;
          ConceptId last = ConceptPool::kBottom;
          for (auto a : con.args) {
            if (const Entry* neg = n.find(pool_.negate(a))) {
              uniteInto(deps, neg->deps);
            } else {
              ++open;
              last = a;
            }
          }
          if (open == 0) {
            clash = std::move(deps);
            return true;
          }
          if (open == 1) forced.emplace_back(v, last, std::move(deps));
        } else if (con.kind == ConceptKind::AtMost) {
          DepSet deps = entry.deps;
          const auto succ = successors(g, v, con.symbol, con.args[0], &deps);
          if (succ.size() <= con.n || !hasDistinctClique(g, succ, con.n + 1)) continue;
          collectDistinct(g, succ, deps);
          clash = std::move(deps);
          return true;
        }
      }
    }
    for (const auto& [v, c, deps] : forced) {
      add(g, v, c, deps);
      if (g.clash) {
        clash = g.clashDeps;
        return true;
      }
    }
    return false;
  }

  static bool anyDirty(const Graph& g) {
    return std::any_of(g.nodes.begin(), g.nodes.end(), [](const Node& n) { return n.alive && n.dirty; });
  }

  /// Finds the next nondeterministic rule. `base` receives the dependencies
  /// of the rule's premises, or of the clash when Found::Clash.
  Found nondeterministic(Graph& g, const std::vector<std::uint8_t>& blocked, std::vector<Option>& options,
                         DepSet& base) {
    // Node by node: disjunctions with semantic branching, then at-most restrictions.
    for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) {
      const auto& n = g.nodes[v];
      if (!n.alive || blocked[v] != 0) continue;
      for (const auto& entry : n.label) {
        const Concept& con = pool_[entry.id];
        if (con.kind != ConceptKind::Or) continue;
        if (std::any_of(con.args.begin(), con.args.end(), [&](ConceptId a) { return n.has(a); })) continue;
        base = entry.deps;
        std::vector<ConceptId> negatedPrefix;
        for (auto a : con.args) {
          const ConceptId na = pool_.negate(a);
          if (const Entry* present = n.find(na)) {
            uniteInto(base, present->deps);
            continue;
          }
          Option o{Option::Type::AddConcepts, v, -1, negatedPrefix};
          o.concepts.push_back(a);
          options.push_back(std::move(o));
          negatedPrefix.push_back(na);
        }
        return options.empty() ? Found::Clash : Found::Branch;
      }
      // At-most restrictions: choose-rule, clash detection, then merging. They
      // run before the successors' own disjunctions are decided.
      for (const auto& entry : n.label) {
        const Concept& con = pool_[entry.id];
        if (con.kind != ConceptKind::AtMost) continue;
        const ConceptId filler = con.args[0];
        if (filler != ConceptPool::kTop) {
          const ConceptId negFiller = pool_.negate(filler);
          for (const auto& e : n.out) {
            if (e.role != con.symbol) continue;
            const auto& w = g.nodes[e.to];
            if (!w.alive || w.has(filler) || w.has(negFiller)) continue;
            base = unite(entry.deps, e.deps);
            options.push_back(Option{Option::Type::AddConcepts, e.to, -1, {filler}});
            options.push_back(Option{Option::Type::AddConcepts, e.to, -1, {negFiller}});
            return Found::Branch;
          }
        }
        DepSet deps = entry.deps;
        const auto succ = successors(g, v, con.symbol, filler, &deps);
        if (succ.size() <= con.n) continue;
        collectDistinct(g, succ, deps);
        base = std::move(deps);
        if (hasDistinctClique(g, succ, con.n + 1)) return Found::Clash;
        for (std::size_t i = 0; i < succ.size(); ++i) {
          for (std::size_t j = i + 1; j < succ.size(); ++j) {
            if (g.areDistinct(succ[i], succ[j])) continue;
            int keep = succ[i], gone = succ[j];
            if (g.nodes[gone].root && !g.nodes[keep].root) std::swap(keep, gone);
            options.push_back(Option{Option::Type::Merge, gone, keep, {}});
          }
        }
        return Found::Branch;
      }
    }
    return Found::Nothing;
  }

  bool generate(Graph& g, const std::vector<std::uint8_t>& blocked) {
    bool any = false;
    const int count = static_cast<int>(g.nodes.size());
    for (int v = 0; v < count; ++v) {
      if (!g.nodes[v].alive || blocked[v] != 0) continue;
      const auto label = g.nodes[v].label;
      for (const auto& entry : label) {
        const Concept con = pool_[entry.id];
        if (con.kind == ConceptKind::Some) {
          if (!successors(g, v, con.symbol, con.args[0], nullptr).empty()) continue;
          const int w = newNode(g, false, v, entry.deps);
          add(g, w, con.args[0], entry.deps);
          addEdge(g, v, con.symbol, w, entry.deps);
          any = true;
        } else if (con.kind == ConceptKind::AtLeast) {
          DepSet deps = entry.deps;
          const auto succ = successors(g, v, con.symbol, con.args[0], &deps);
          std::vector<int> have = distinctClique(g, succ, con.n);
          if (have.size() >= con.n) continue;
          // Only the missing witnesses are created, each distinct from the existing ones.
          collectDistinct(g, have, deps);
          for (std::uint32_t i = static_cast<std::uint32_t>(have.size()); i < con.n; ++i) {
            const int w = newNode(g, false, v, entry.deps);
            add(g, w, con.args[0], entry.deps);
            addEdge(g, v, con.symbol, w, entry.deps);
            for (int f : have) g.markDistinct(f, w, deps);
            have.push_back(w);
          }
          any = true;
        }
        if (g.clash) return true;
      }
    }
    return any;
  }

  void apply(Graph& g, const Option& o, const DepSet& deps) {
    if (o.type == Option::Type::AddConcepts) {
      for (auto c : o.concepts) add(g, o.node, c, deps);
    } else {
      merge(g, o.node, o.into, deps);
    }
  }

  /// Drops dead nodes, keeping the relative order of the live ones.
  static void compact(Graph& g) {
    std::vector<int> id(g.nodes.size(), -1);
    int next = 0;
    for (std::size_t v = 0; v < g.nodes.size(); ++v) {
      if (g.nodes[v].alive) id[v] = next++;
    }
    if (next == static_cast<int>(g.nodes.size())) return;
    std::vector<Node> nodes;
    nodes.reserve(next);
    for (auto& n : g.nodes) {
      if (!n.alive) continue;
      if (n.parent >= 0) n.parent = id[n.parent];
      std::erase_if(n.out, [&](const Edge& e) { return id[e.to] < 0; });
      for (auto& e : n.out) e.to = id[e.to];
      nodes.push_back(std::move(n));
    }
    g.nodes = std::move(nodes);
    std::map<std::pair<int, int>, DepSet> distinct;
    for (auto& [pair, d] : g.distinct) {
      if (id[pair.first] >= 0 && id[pair.second] >= 0) distinct.emplace(Graph::key(id[pair.first], id[pair.second]), std::move(d));
    }
    g.distinct = std::move(distinct);
  }

  /// Empty optional when a complete clash-free graph is reached; otherwise
  /// the branch points the failure depends on.
  std::optional<DepSet> run(Graph g) {
    for (;;) {
      saturate(g);
      if (g.clash) return g.clashDeps;
      compact(g);
      const auto blocked = blocking(g);
      std::vector<Option> options;
      DepSet base;
      if (propagate(g, blocked, base)) return base;
      if (anyDirty(g)) continue;
      switch (nondeterministic(g, blocked, options, base)) {
        case Found::Clash:
          return base;
        case Found::Branch: {
          if (++t_.branches_ > t_.options_.branchBudget) {
            throw ResourceExhausted("tableau branch budget of " + std::to_string(t_.options_.branchBudget) + " exceeded");
          }
          const std::uint32_t level = next_level_++;
          DepSet failed;
          for (std::size_t i = 0; i < options.size(); ++i) {
            Graph h = (i + 1 == options.size()) ? std::move(g) : g;
            apply(h, options[i], unite(unite(base, failed), DepSet{level}));
            std::optional<DepSet> result;
            if (h.clash) {
              result = std::move(h.clashDeps);
            } else {
              result = run(std::move(h));
              if (!result) return std::nullopt;
            }
            if (!dependsOn(*result, level)) return result;
            *result = result->without(level);
            uniteInto(failed, *result);
          }
          return unite(failed, base);
        }
        case Found::Nothing:
          break;
      }
      if (!generate(g, blocked)) return std::nullopt;
    }
  }

  std::map<int, int> forwarding_;

 private:
  Tableau& t_;
  ConceptPool& pool_;
  std::uint32_t next_level_ = 0;
};

bool Tableau::consistent(const ExtraAssertions& extra) {
  nodes_created_ = 0;
  branches_ = 0;
  Search search(*this);
  Graph g;

  std::map<Name, int> rootOf;
  auto rootFor = [&](const Name& name) {
    auto it = rootOf.find(name);
    if (it != rootOf.end()) return search.resolve(it->second);
    const int id = search.newNode(g, true, -1, kNoDeps);
    rootOf.emplace(name, id);
    return id;
  };

  for (const auto& ind : individuals_) rootFor(ind);
  for (const auto& [ind, c] : memberships_) search.add(g, rootFor(ind), c, kNoDeps);
  for (const auto& [role, s, o] : edges_) search.addEdge(g, rootFor(s), role, rootFor(o), kNoDeps);
  for (const auto& [ind, expr] : extra.memberships) {
    search.add(g, rootFor(ind), pool_.fromExpression(expr), kNoDeps);
  }
  for (const auto& expr : extra.anonymous) {
    const int id = search.newNode(g, true, -1, kNoDeps);
    search.add(g, id, pool_.fromExpression(expr), kNoDeps);
  }
  if (g.nodes.empty()) search.newNode(g, true, -1, kNoDeps);

  auto distinctAll = [&](const std::vector<Name>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        const int a = rootFor(names[i]), b = rootFor(names[j]);
        if (a == b) {
          g.setClash({});
          return;
        }
        g.markDistinct(a, b, {});
      }
    }
  };
  for (const auto& names : different_) distinctAll(names);
  for (const auto& [a, b] : extra.different) distinctAll({a, b});

  auto sameAll = [&](const std::vector<Name>& names) {
    for (std::size_t i = 1; i < names.size() && !g.clash; ++i) {
      const int a = rootFor(names[0]), b = rootFor(names[i]);
      if (a != b) search.merge(g, b, a, kNoDeps);
    }
  };
  for (const auto& names : same_) sameAll(names);
  for (const auto& [a, b] : extra.same) sameAll({a, b});

  if (g.clash) return false;
  return !search.run(std::move(g)).has_value();
}

}  // namespace ontotdd::detail
