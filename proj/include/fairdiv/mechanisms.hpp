#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fairdiv/fairness.hpp"

namespace fairdiv {

/// Declared value vectors, one row per agent. Sizes and budgets are public
/// and never part of a report.
using ReportMatrix = Mat;

/**
 * Two-agent truthful mechanism that always outputs an FEF allocation for
 * the reported values: each good is split into identical halves, one half
 * assigned to each agent's reserved pool, and each agent receives her
 * maximum-value feasible subset of her own pool (greedy by reported
 * density, true sizes and budgets).
 *
 * @throws std::invalid_argument unless n == 2.
 */
Allocation split_half_mechanism(const Instance& inst, const ReportMatrix& reports);

/**
 * Serial welfare mechanism, truthful and Pareto-optimal for any n: stage i
 * maximizes agent order[i]'s reported value subject to the feasibility
 * polytope and exact value equalities locked in for earlier agents; a
 * final feasibility program realizes all locked values at once.
 */
Allocation serial_po_mechanism(const Instance& inst, const ReportMatrix& reports,
                               const std::vector<Index>& order);

using Mechanism = std::function<Allocation(const Instance&, const ReportMatrix&)>;

struct AuditRecord {
  Index agent = 0;
  Vec misreport;
  Rational truthful_utility;
  Rational misreport_utility;
  Rational gain;  // measured with the agent's true values on both sides
};

struct AuditResult {
  std::vector<AuditRecord> records;
  Rational max_gain;
  std::optional<AuditRecord> worst;  // set when max_gain > 0
};

/**
 * Unilateral-deviation audit: rerun the mechanism with one agent's report
 * replaced by each candidate misreport (everyone else truthful) and
 * compare true-value utilities against the all-truthful run.
 */
AuditResult audit_truthfulness(const Mechanism& mechanism, const Instance& inst,
                               const std::vector<std::vector<Vec>>& misreports_per_agent);

/// All reduced fractions p/q with 0 <= p/q <= max_value and q <= max_den,
/// ascending. Building block for exhaustive misreport grids.
std::vector<Rational> rational_lattice(int max_den, const Rational& max_value);

/// Cartesian power of the lattice: every length-m value vector, in
/// lexicographic order.
std::vector<Vec> report_lattice(Index m, int max_den, const Rational& max_value);

/**
 * The two-agent, two-good instance family showing that envy-freeness plus
 * Pareto-optimality cannot be combined with truthfulness: values
 * (a, 1-a) and (b, 1-b) with 1/2 < b < a < 1, unit sizes, budgets of 2 so
 * the constraints never bind.
 */
Instance impossibility_instance(const Rational& alpha, const Rational& beta);

/**
 * Reference rules that output an envy-free and Pareto-optimal allocation
 * for the reported values on unconstrained two-good instances. Reports
 * are normalized to first-good preference fractions; when both agents
 * favor the same good, the stronger agent receives a fraction of it from
 * the envy-free band [1/(2p_hi), 1/(2p_lo)] — its lower endpoint or its
 * midpoint — and nothing else, the other agent takes the rest.
 *
 * @throws std::invalid_argument unless n == m == 2 and the construction
 *         is feasible (budgets must not bind).
 */
Allocation band_endpoint_rule(const Instance& inst, const ReportMatrix& reports);
Allocation band_midpoint_rule(const Instance& inst, const ReportMatrix& reports);

struct DeviationRecord {
  Index agent = 0;
  Vec report;
  Rational first_good_share_after;  // x(0,0) under the deviation
  Rational utility_truthful;
  Rational utility_after;
  Rational gain;
};

struct RuleRun {
  std::string rule;
  Allocation truthful;
  Rational truthful_first_good_share;  // x(0,0)
  std::vector<DeviationRecord> deviations;
  Rational max_gain;
};

struct ImpossibilityTranscript {
  Rational alpha;
  Rational beta;
  int grid_k = 0;
  Rational band_lo;  // 1/(2 alpha)
  Rational band_hi;  // 1/(2 beta)
  long long po_count = 0;
  long long fefpo_count = 0;
  bool po_structure_holds = false;  // every PO grid point: x(0,0)=1 or x(0,1)=0
  bool fefpo_band_holds = false;    // every FEF&PO grid point: x(0,1)=0, band bounds
  RuleRun endpoint;
  RuleRun midpoint;
};

/**
 * End-to-end demonstration that EF+PO rules are manipulable: verifies the
 * two structural facts on a grid of resolution grid_k, then runs both
 * reference rules truthfully and under the structured deviations — agent
 * one lowering her report to (alpha+beta)/2, agent two raising hers — and
 * records the exact true-value gains.
 *
 * @throws std::invalid_argument unless 1/2 < beta < alpha < 1.
 */
ImpossibilityTranscript impossibility_demo(const Rational& alpha, const Rational& beta,
                                           int grid_k = 20);

}  // namespace fairdiv
