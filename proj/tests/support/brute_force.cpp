#include "brute_force.hpp"

#include <bit>
#include <stdexcept>

namespace ontotdd::support {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int lookup(const std::map<Name, int>& ids, const Name& name) {
  auto it = ids.find(name);
  if (it == ids.end()) throw std::invalid_argument("brute force: unknown name " + name);
  return it->second;
}

}  // namespace

std::uint32_t Model::ext(const CompiledExpr& e) const {
  switch (e.kind) {
    case ExprKind::Named: return classes[e.symbol];
    case ExprKind::Top: return all();
    case ExprKind::Bottom: return 0;
    case ExprKind::And: {
      std::uint32_t m = all();
      for (const auto& op : e.ops) m &= ext(op);
      return m;
    }
    case ExprKind::Or: {
      std::uint32_t m = 0;
      for (const auto& op : e.ops) m |= ext(op);
      return m;
    }
    case ExprKind::Not: return all() & ~ext(e.ops[0]);
    default: break;
  }
  const std::uint32_t filler = ext(e.ops[0]);
  std::uint32_t m = 0;
  for (int x = 0; x < size; ++x) {
    const std::uint32_t succ = roles[e.symbol][x];
    const auto count = static_cast<std::uint32_t>(std::popcount(succ & filler));
    bool in = false;
    switch (e.kind) {
      case ExprKind::Some: in = count > 0; break;
      case ExprKind::All: in = (succ & ~filler) == 0; break;
      case ExprKind::MinCard: in = count >= e.n; break;
      case ExprKind::MaxCard: in = count <= e.n; break;
      case ExprKind::ExactCard: in = count == e.n; break;
      default: break;
    }
    if (in) m |= 1u << x;
  }
  return m;
}

bool Model::satisfies(const CompiledAxiom& a) const {
  switch (a.type) {
    case CompiledAxiom::Type::Sub: return (ext(a.exprs[0]) & ~ext(a.exprs[1])) == 0;
    case CompiledAxiom::Type::Disjoint: return (ext(a.exprs[0]) & ext(a.exprs[1])) == 0;
    case CompiledAxiom::Type::Member: return (ext(a.exprs[0]) >> individuals[a.individuals[0]]) & 1u;
    case CompiledAxiom::Type::Edge:
      return (roles[a.role][individuals[a.individuals[0]]] >> individuals[a.individuals[1]]) & 1u;
    case CompiledAxiom::Type::Same: return individuals[a.individuals[0]] == individuals[a.individuals[1]];
    case CompiledAxiom::Type::Different: return individuals[a.individuals[0]] != individuals[a.individuals[1]];
  }
  return false;
}

BruteForce::BruteForce(const std::vector<Axiom>& axioms, const Signature& sig) {
  Signature full = sig;
  for (const auto& a : axioms) full.merge(signatureOf(a));
  for (const auto& n : full.classes) classIds_.emplace(n, static_cast<int>(classIds_.size()));
  for (const auto& n : full.roles) roleIds_.emplace(n, static_cast<int>(roleIds_.size()));
  for (const auto& n : full.individuals) individualIds_.emplace(n, static_cast<int>(individualIds_.size()));
  for (const auto& a : axioms) {
    auto parts = compile(a);
    constraints_.insert(constraints_.end(), parts.begin(), parts.end());
  }
}

CompiledExpr BruteForce::compile(const ClassExpression& e) const {
  CompiledExpr out;
  out.kind = e.kind();
  out.n = e.cardinality();
  switch (e.kind()) {
    case ExprKind::Named: out.symbol = lookup(classIds_, e.name()); break;
    case ExprKind::Top:
    case ExprKind::Bottom: break;
    case ExprKind::And:
    case ExprKind::Or:
      for (const auto& op : e.operands()) out.ops.push_back(compile(op));
      break;
    case ExprKind::Not: out.ops.push_back(compile(e.sub())); break;
    default:
      out.symbol = lookup(roleIds_, e.role());
      out.ops.push_back(compile(e.sub()));
      break;
  }
  return out;
}

std::vector<CompiledAxiom> BruteForce::compile(const Axiom& axiom) const {
  using T = CompiledAxiom::Type;
  std::vector<CompiledAxiom> out;
  auto sub = [&](const ClassExpression& c, const ClassExpression& d) {
    out.push_back(CompiledAxiom{T::Sub, {compile(c), compile(d)}, {}, -1});
  };
  auto disjoint = [&](const std::vector<ClassExpression>& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        out.push_back(CompiledAxiom{T::Disjoint, {compile(m[i]), compile(m[j])}, {}, -1});
      }
    }
  };
  auto ind = [&](const Name& n) { return lookup(individualIds_, n); };
  std::visit(Overloaded{
                 [&](const SubClassOf& a) { sub(a.sub, a.sup); },
                 [&](const EquivalentClasses& a) {
                   for (std::size_t i = 1; i < a.members.size(); ++i) {
                     sub(a.members[0], a.members[i]);
                     sub(a.members[i], a.members[0]);
                   }
                 },
                 [&](const DisjointClasses& a) { disjoint(a.members); },
                 [&](const DisjointUnion& a) {
                   sub(Named(a.lhs), Or(a.members));
                   sub(Or(a.members), Named(a.lhs));
                   disjoint(a.members);
                 },
                 [&](const ClassAssertion& a) {
                   out.push_back(CompiledAxiom{T::Member, {compile(a.expr)}, {ind(a.individual)}, -1});
                 },
                 [&](const ObjectPropertyAssertion& a) {
                   out.push_back(CompiledAxiom{T::Edge, {}, {ind(a.subject), ind(a.object)}, lookup(roleIds_, a.role)});
                 },
                 [&](const SameIndividual& a) {
                   for (std::size_t i = 1; i < a.individuals.size(); ++i) {
                     out.push_back(CompiledAxiom{T::Same, {}, {ind(a.individuals[0]), ind(a.individuals[i])}, -1});
                   }
                 },
                 [&](const DifferentIndividuals& a) {
                   for (std::size_t i = 0; i < a.individuals.size(); ++i) {
                     for (std::size_t j = i + 1; j < a.individuals.size(); ++j) {
                       out.push_back(
                           CompiledAxiom{T::Different, {}, {ind(a.individuals[i]), ind(a.individuals[j])}, -1});
                     }
                   }
                 },
                 [&](const ObjectPropertyDomain& a) { sub(Some(a.role, Top()), a.expr); },
                 [&](const ObjectPropertyRange& a) { sub(Top(), All(a.role, a.expr)); },
                 [&](const FunctionalObjectProperty& a) { sub(Top(), MaxCard(1, a.role, Top())); },
             },
             axiom);
  return out;
}

void BruteForce::forEachModel(int maxDomain, const std::function<bool(const Model&)>& f) const {
  const std::size_t nc = classIds_.size(), nr = roleIds_.size(), ni = individualIds_.size();
  for (int k = 1; k <= maxDomain; ++k) {
    Model m;
    m.size = k;
    m.classes.assign(nc, 0);
    m.roles.assign(nr, std::vector<std::uint32_t>(k, 0));
    m.individuals.assign(ni, 0);
    const std::uint32_t setLimit = 1u << k;
    // Odometer over individuals, then role successor masks, then class masks.
    for (;;) {
      bool ok = true;
      for (const auto& c : constraints_) {
        if (!m.satisfies(c)) {
          ok = false;
          break;
        }
      }
      if (ok && !f(m)) return;

      bool carried = true;
      for (std::size_t i = 0; i < ni && carried; ++i) {
        if (++m.individuals[i] < k) carried = false;
        else m.individuals[i] = 0;
      }
      for (std::size_t r = 0; r < nr && carried; ++r) {
        for (int x = 0; x < k && carried; ++x) {
          if (++m.roles[r][x] < setLimit) carried = false;
          else m.roles[r][x] = 0;
        }
      }
      for (std::size_t c = 0; c < nc && carried; ++c) {
        if (++m.classes[c] < setLimit) carried = false;
        else m.classes[c] = 0;
      }
      if (carried) break;
    }
  }
}

bool BruteForce::satisfiable(const ClassExpression& e, int maxDomain) const {
  const auto compiled = compile(e);
  bool found = false;
  forEachModel(maxDomain, [&](const Model& m) {
    found = m.ext(compiled) != 0;
    return !found;
  });
  return found;
}

bool BruteForce::consistent(int maxDomain) const {
  bool found = false;
  forEachModel(maxDomain, [&](const Model&) {
    found = true;
    return false;
  });
  return found;
}

}  // namespace ontotdd::support
