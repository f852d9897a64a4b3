#pragma once

#include "markedres/errors.hpp"
#include "markedres/module_element.hpp"
#include "markedres/quasistable.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace markedres {

template <class S>
struct MarkedElement {
  ModuleTerm head;
  ModuleElement<S> tail;

  ModuleElement<S> polynomial() const {
    ModuleElement<S> f = tail;
    f.add(head, Coefficient<S>::one());
    return f;
  }
};

// Marked set over U: one element per Pommaret term, in Pommaret basis order.
template <class S>
struct MarkedSet {
  ModulePtr module;
  std::vector<MarkedElement<S>> elements;
  std::vector<ModuleElement<S>> polys;  // head + tail, cached

  std::size_t size() const { return elements.size(); }
  const ModuleElement<S>& poly(std::size_t i) const { return polys[i]; }
  int degree(std::size_t i) const { return elements[i].head.degree(); }
  std::vector<int> degrees() const {
    std::vector<int> d;
    for (const auto& e : elements) d.push_back(e.head.degree());
    return d;
  }
};

// Validates and orders an assignment head -> tail.
template <class S>
MarkedSet<S> make_marked_set(ModulePtr U, const std::map<ModuleTerm, ModuleElement<S>>& tails) {
  for (const auto& [h, t] : tails) {
    if (!U->pommaret_index(h))
      throw HeadNotInPommaretBasis("head " + to_string(h, U->rank() > 1) + " is not in the Pommaret basis");
  }
  MarkedSet<S> F;
  F.module = U;
  for (const auto& h : U->pommaret_basis()) {
    auto it = tails.find(h);
    if (it == tails.end()) throw MissingHead("no marked element with head " + to_string(h, U->rank() > 1));
    for (const auto& [t, c] : it->second) {
      if (t.degree() != h.degree())
        throw DegreeMismatch("tail term " + to_string(t, U->rank() > 1) + " has degree " +
                             std::to_string(t.degree()) + ", head " + to_string(h, U->rank() > 1) + " has " +
                             std::to_string(h.degree()));
      if (t.component < 0 || t.component >= U->rank() || t.shift != U->shifts()[static_cast<std::size_t>(t.component)])
        throw DegreeMismatch("tail term outside the free module");
      if (U->contains(t))
        throw TailTermInU("tail term " + to_string(t, U->rank() > 1) + " of " + to_string(h, U->rank() > 1) +
                          " lies in U");
    }
    F.elements.push_back(MarkedElement<S>{h, it->second});
    F.polys.push_back(F.elements.back().polynomial());
  }
  return F;
}

// the monomial module as its own marked set
template <class S>
MarkedSet<S> zero_tail_set(ModulePtr U) {
  std::map<ModuleTerm, ModuleElement<S>> tails;
  for (const auto& h : U->pommaret_basis()) tails[h] = {};
  return make_marked_set<S>(U, tails);
}

template <class S>
struct UniqueWriting {
  std::vector<Poly<S>> quotients;  // aligned with the Pommaret basis
  ModuleElement<S> remainder;
};

struct ReductionStrategy {
  enum class Kind { Greatest, Random };
  Kind kind = Kind::Greatest;
  std::uint64_t seed = 0;

  static ReductionStrategy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

// f = sum quotients[i] * f_i + remainder, remainder supported in the sous-escalier
template <class S>
UniqueWriting<S> reduce(const ModuleElement<S>& f, const MarkedSet<S>& F, ReductionStrategy strategy = {}) {
  const QuasiStableModule& U = *F.module;
  UniqueWriting<S> w;
  w.quotients.resize(F.size());
  std::mt19937_64 rng(strategy.seed);
  // reduce each homogeneous piece separately
  for (auto& [deg, piece] : f.homogeneous_parts()) {
    ModuleElement<S> h = piece;
    std::size_t steps = 0;
    while (!h.is_zero()) {
      if (++steps > 50'000'000) throw std::runtime_error("reduction did not terminate");
      ModuleTerm t;
      if (strategy.kind == ReductionStrategy::Kind::Greatest) {
        t = h.leading_term();
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, h.size() - 1);
        auto it = h.begin();
        std::advance(it, static_cast<long>(pick(rng)));
        t = it->first;
      }
      S c = h.coefficient(t);
      auto hit = U.pommaret_divisor(t);
      if (!hit) {
        w.remainder.add(t, c);
        h.add(t, -c);
        continue;
      }
      h.subtract_multiple(c, hit->multiplier, F.poly(hit->index));
      w.quotients[hit->index].add(ModuleTerm{hit->multiplier, 0, 0}, c);
    }
  }
  return w;
}

template <class S>
struct BasisWitness {
  std::size_t element = 0;  // index into the marked set
  int variable = 0;
  ModuleElement<S> remainder;
};

template <class S>
struct MarkedBasisCheck {
  bool is_basis = true;
  std::optional<BasisWitness<S>> witness;
};

namespace detail {

// runs job(k) for k in [0, count) on up to `threads` workers; results land by index
template <class R, class Job>
std::vector<R> parallel_map(std::size_t count, unsigned threads, Job job) {
  std::vector<R> out(count);
  if (threads <= 1 || count <= 1) {
    for (std::size_t k = 0; k < count; ++k) out[k] = job(k);
    return out;
  }
  std::vector<std::thread> pool;
  unsigned nt = std::min<unsigned>(threads, static_cast<unsigned>(count));
  for (unsigned w = 0; w < nt; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t k = w; k < count; k += nt) out[k] = job(k);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace detail

// (element, non-multiplicative variable) pairs in deterministic order
inline std::vector<std::pair<std::size_t, int>> prolongation_pairs(const QuasiStableModule& U) {
  std::vector<std::pair<std::size_t, int>> pairs;
  for (std::size_t i = 0; i < U.size(); ++i)
    for (int v : U.nonmultiplicative(i)) pairs.emplace_back(i, v);
  return pairs;
}

template <class S>
MarkedBasisCheck<S> is_marked_basis(const MarkedSet<S>& F, unsigned threads = 1) {
  auto pairs = prolongation_pairs(*F.module);
  auto rems = detail::parallel_map<ModuleElement<S>>(pairs.size(), threads, [&](std::size_t k) {
    auto [i, v] = pairs[k];
    return reduce(F.poly(i).shifted(Term::var(v)), F).remainder;
  });
  MarkedBasisCheck<S> out;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (!rems[k].is_zero()) {
      out.is_basis = false;
      out.witness = BasisWitness<S>{pairs[k].first, pairs[k].second, rems[k]};
      break;
    }
  }
  return out;
}

// Module U_{>=s}: cones of lower-degree Pommaret terms sliced at degree s, plus higher ones.
inline std::vector<ModuleTerm> truncated_heads(const QuasiStableModule& U, int s) {
  std::vector<ModuleTerm> heads;
  for (const auto& p : U.pommaret_basis()) {
    if (p.degree() > s) {
      heads.push_back(p);
      continue;
    }
    int q = multiplicative_bound(p.term, U.nvars());
    for (const auto& m : terms_of_degree(q + 1, s - p.degree())) heads.push_back(m * p);
  }
  return heads;
}

template <class S>
MarkedSet<S> truncate(const MarkedSet<S>& F, int s) {
  if (!is_marked_basis(F).is_basis) throw NotABasis("truncate needs a marked basis");
  const QuasiStableModule& U = *F.module;
  auto heads = truncated_heads(U, s);
  auto V = QuasiStableModule::make(U.nvars(), U.shifts(), heads);
  if (V->size() != heads.size()) throw std::logic_error("truncated Pommaret basis mismatch");
  for (const auto& h : heads)
    if (!V->pommaret_index(h)) throw std::logic_error("truncated Pommaret basis mismatch");
  std::map<ModuleTerm, ModuleElement<S>> tails;
  for (const auto& h : heads) {
    if (auto idx = U.pommaret_index(h); idx && h.degree() >= s) {
      tails[h] = F.elements[*idx].tail;
      continue;
    }
    // x^gamma minus its remainder, written as head + tail
    tails[h] = -reduce(ModuleElement<S>::monomial(h), F).remainder;
  }
  return make_marked_set<S>(V, tails);
}

}  // namespace markedres
