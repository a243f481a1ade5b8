#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "fairdiv/knapsack.hpp"

namespace fairdiv {

/// Target index convention: 0..n-1 are agents, n is the charity.
inline Index charity_target(const Instance& inst) { return inst.n(); }

/**
 * The n x (n+1) matrix of feasible-subset values: entry (i,h) is agent i's
 * value for her maximum-value feasible sub-bundle of bundle h (column n is
 * the charity bundle). Entries are values, not envy differences.
 */
Mat envy_matrix(const Instance& inst, const Allocation& alloc);

/// max(0, best feasible subset of the target's bundle minus own value).
Rational envy_value(const Instance& inst, const Allocation& alloc, Index i, Index target);

struct EnvyWitness {
  Index agent = 0;
  Index target = 0;  // charity_target(inst) for the charity
  Bundle sub_bundle;
  Rational envy;  // strictly positive
};

struct FairnessVerdict {
  bool holds = false;
  std::optional<EnvyWitness> witness;
};

/**
 * Feasible envy-freeness: no agent has a budget-feasible sub-bundle of any
 * other agent's bundle, or of the charity bundle, worth strictly more than
 * her own bundle.
 *
 * @throws std::invalid_argument when alloc itself is infeasible.
 */
FairnessVerdict is_fef(const Instance& inst, const Allocation& alloc);

/**
 * FEF up to eps: inter-agent envy at most eps. Envy versus the charity is
 * checked against the same eps by default; strict_charity checks it
 * against zero instead. The witness envy is the raw envy amount.
 */
FairnessVerdict is_fef_eps(const Instance& inst, const Allocation& alloc, const Rational& eps,
                           bool strict_charity = false);

struct EnvyGraph {
  Index n = 0;
  std::vector<std::pair<Index, Index>> edges;  // i -> h iff i feasibly envies h
};

EnvyGraph envy_graph(const Instance& inst, const Allocation& alloc);

struct AcyclicityResult {
  bool acyclic = false;
  std::vector<Index> topo_order;  // lowest-index-first when acyclic
  std::vector<Index> cycle;       // a directed cycle when not
};

AcyclicityResult is_acyclic(const EnvyGraph& g);

struct DiscreteEnvyWitness {
  Index agent = 0;
  Index target = 0;
  CountVec sub_multiset;
  Rational envy;
};

struct DiscreteFairnessVerdict {
  bool holds = false;
  std::optional<DiscreteEnvyWitness> witness;
};

/**
 * FEFx over piece-level allocations: for every agent i and every target
 * bundle (agents and charity), no feasible strict sub-multiset — at least
 * one piece removed — is worth more than v_i of i's own pieces. Strictness
 * is covered exactly by capping each good's count one below the target's.
 *
 * @throws std::invalid_argument on inconsistent or infeasible input;
 *         CapExceededError when the piece space is too large.
 */
DiscreteFairnessVerdict is_fefx(const Instance& inst, const DiscreteAllocation& da);

}  // namespace fairdiv
