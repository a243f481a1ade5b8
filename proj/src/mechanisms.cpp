#include "fairdiv/mechanisms.hpp"

#include <algorithm>
#include <stdexcept>

#include "fairdiv/grid_oracle.hpp"
#include "fairdiv/lp.hpp"

namespace fairdiv {

namespace {

void validate_reports(const Instance& inst, const ReportMatrix& reports) {
  if (reports.rows() != inst.n() || reports.cols() != inst.m()) {
    throw std::invalid_argument("reports: dimension mismatch with instance");
  }
  for (Index i = 0; i < reports.rows(); ++i) {
    for (Index g = 0; g < reports.cols(); ++g) {
      if (reports(i, g) < 0) {
        throw std::invalid_argument("reports[" + std::to_string(i) + "][" + std::to_string(g) +
                                    "]: negative value");
      }
    }
  }
}

}  // namespace

Allocation split_half_mechanism(const Instance& inst, const ReportMatrix& reports) {
  if (inst.n() != 2) {
    throw std::invalid_argument("split-half mechanism is defined for exactly two agents");
  }
  validate_reports(inst, reports);
  Instance reported{reports, inst.sizes, inst.budgets};
  Bundle half = Bundle::Constant(inst.m(), Rational(1, 2));
  Allocation x(2, inst.m());
  for (Index i = 0; i < 2; ++i) {
    x.row(i) = max_feasible_subset(reported, i, half).take.transpose();
  }
  return x;
}

Allocation serial_po_mechanism(const Instance& inst, const ReportMatrix& reports,
                               const std::vector<Index>& order) {
  validate_reports(inst, reports);
  const Index n = inst.n();
  const Index m = inst.m();
  if (static_cast<Index>(order.size()) != n) {
    throw std::invalid_argument("order: must be a permutation of all agents");
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (Index a : order) {
    if (a < 0 || a >= n || seen[static_cast<size_t>(a)]) {
      throw std::invalid_argument("order: must be a permutation of all agents");
    }
    seen[static_cast<size_t>(a)] = true;
  }

  // Stage LPs over blocks for the first (p+1) agents in order; block pos
  // holds agent order[pos]'s variables.
  auto stage_lp = [&](Index agents_in) {
    LinearProgram lp;
    const Index vars = agents_in * m;
    lp.objective = Vec::Zero(vars);
    lp.bounds.assign(static_cast<size_t>(vars), VariableBounds{Rational(0), Rational(1)});
    for (Index g = 0; g < m; ++g) {
      ConstraintRow row{Vec::Zero(vars), Relation::LessEq, Rational(1)};
      for (Index pos = 0; pos < agents_in; ++pos) row.coeffs(pos * m + g) = 1;
      lp.rows.push_back(std::move(row));
    }
    for (Index pos = 0; pos < agents_in; ++pos) {
      Index agent = order[static_cast<size_t>(pos)];
      ConstraintRow row{Vec::Zero(vars), Relation::LessEq, inst.budgets(agent)};
      for (Index g = 0; g < m; ++g) row.coeffs(pos * m + g) = inst.sizes(agent, g);
      lp.rows.push_back(std::move(row));
    }
    return lp;
  };

  std::vector<Rational> locked;  // q values, by order position
  for (Index p = 0; p < n; ++p) {
    LinearProgram lp = stage_lp(p + 1);
    for (Index pos = 0; pos < p; ++pos) {
      Index agent = order[static_cast<size_t>(pos)];
      ConstraintRow eq{Vec::Zero(lp.objective.size()), Relation::Equal, locked[static_cast<size_t>(pos)]};
      for (Index g = 0; g < m; ++g) eq.coeffs(pos * m + g) = reports(agent, g);
      lp.rows.push_back(std::move(eq));
    }
    Index agent = order[static_cast<size_t>(p)];
    for (Index g = 0; g < m; ++g) lp.objective(p * m + g) = reports(agent, g);
    LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal) {
      throw std::logic_error("stage LP infeasible; the empty allocation always satisfies it");
    }
    locked.push_back(sol.value);
  }

  LinearProgram final_lp = stage_lp(n);
  for (Index pos = 0; pos < n; ++pos) {
    Index agent = order[static_cast<size_t>(pos)];
    ConstraintRow eq{Vec::Zero(final_lp.objective.size()), Relation::Equal,
                     locked[static_cast<size_t>(pos)]};
    for (Index g = 0; g < m; ++g) eq.coeffs(pos * m + g) = reports(agent, g);
    final_lp.rows.push_back(std::move(eq));
  }
  LpSolution sol = solve(final_lp);
  if (sol.status != LpStatus::Optimal) {
    throw std::logic_error("final feasibility LP infeasible despite feasible stage values");
  }
  Allocation x(n, m);
  for (Index pos = 0; pos < n; ++pos) {
    Index agent = order[static_cast<size_t>(pos)];
    for (Index g = 0; g < m; ++g) x(agent, g) = sol.point(pos * m + g);
  }
  return x;
}

AuditResult audit_truthfulness(const Mechanism& mechanism, const Instance& inst,
                               const std::vector<std::vector<Vec>>& misreports_per_agent) {
  if (static_cast<Index>(misreports_per_agent.size()) != inst.n()) {
    throw std::invalid_argument("misreports: one candidate list per agent required");
  }
  Allocation base = mechanism(inst, inst.values);
  std::vector<Rational> baseline;
  for (Index i = 0; i < inst.n(); ++i) {
    baseline.push_back(bundle_value(inst, i, base.row(i).transpose()));
  }

  AuditResult result;
  result.max_gain = 0;
  for (Index i = 0; i < inst.n(); ++i) {
    for (const Vec& mr : misreports_per_agent[static_cast<size_t>(i)]) {
      if (mr.size() != inst.m()) {
        throw std::invalid_argument("misreport: length must equal good count");
      }
      ReportMatrix rep = inst.values;
      rep.row(i) = mr.transpose();
      Allocation x = mechanism(inst, rep);
      Rational u = bundle_value(inst, i, x.row(i).transpose());
      AuditRecord rec{i, mr, baseline[static_cast<size_t>(i)], u,
                      u - baseline[static_cast<size_t>(i)]};
      if (rec.gain > result.max_gain) {
        result.max_gain = rec.gain;
        result.worst = rec;
      }
      result.records.push_back(std::move(rec));
    }
  }
  return result;
}

std::vector<Rational> rational_lattice(int max_den, const Rational& max_value) {
  if (max_den < 1 || max_value < 0) {
    throw std::invalid_argument("lattice requires max_den >= 1 and max_value >= 0");
  }
  std::vector<Rational> values;
  for (int q = 1; q <= max_den; ++q) {
    for (Integer p = 0; Rational(p, q) <= max_value; ++p) {
      values.emplace_back(p, q);
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<Vec> report_lattice(Index m, int max_den, const Rational& max_value) {
  std::vector<Rational> lattice = rational_lattice(max_den, max_value);
  std::vector<Vec> out;
  Vec current = Vec::Zero(m);
  // Odometer over lattice indices, lexicographic.
  std::vector<size_t> idx(static_cast<size_t>(m), 0);
  for (;;) {
    for (Index g = 0; g < m; ++g) current(g) = lattice[idx[static_cast<size_t>(g)]];
    out.push_back(current);
    Index pos = m - 1;
    while (pos >= 0 && ++idx[static_cast<size_t>(pos)] == lattice.size()) {
      idx[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

Instance impossibility_instance(const Rational& alpha, const Rational& beta) {
  if (!(beta > Rational(1, 2) && alpha > beta && alpha < 1)) {
    throw std::invalid_argument("requires 1/2 < beta < alpha < 1");
  }
  Instance inst;
  inst.values = Mat(2, 2);
  inst.values << alpha, Rational(1) - alpha, beta, Rational(1) - beta;
  inst.sizes = Mat::Ones(2, 2);
  inst.budgets = Vec::Constant(2, Rational(2));
  return inst;
}

namespace {

Rational pref_fraction(const ReportMatrix& reports, Index i) {
  Rational total = reports(i, 0) + reports(i, 1);
  return total > 0 ? Rational(reports(i, 0) / total) : Rational(1, 2);
}

Allocation band_rule(const Instance& inst, const ReportMatrix& reports, bool midpoint) {
  if (inst.n() != 2 || inst.m() != 2) {
    throw std::invalid_argument("band rules are defined for two agents and two goods");
  }
  validate_reports(inst, reports);
  const Rational half(1, 2);
  Rational p0 = pref_fraction(reports, 0);
  Rational p1 = pref_fraction(reports, 1);

  Allocation x(2, 2);
  if (p0 == p1) {
    x.setConstant(half);
  } else {
    Index hi = p0 > p1 ? 0 : 1;
    Index lo = 1 - hi;
    Rational p_hi = hi == 0 ? p0 : p1;
    Rational p_lo = hi == 0 ? p1 : p0;
    if (p_hi > half && p_lo > half) {
      // Both favor good 0. Envy-freeness pins the stronger agent's share
      // of it to [1/(2 p_hi), 1/(2 p_lo)]; she gets nothing else.
      Rational t_lo = 1 / (2 * p_hi);
      Rational t_hi = 1 / (2 * p_lo);
      Rational t = midpoint ? (t_lo + t_hi) / 2 : t_lo;
      x(hi, 0) = t;
      x(hi, 1) = 0;
      x(lo, 0) = 1 - t;
      x(lo, 1) = 1;
    } else if (p_hi < half && p_lo < half) {
      // Both favor good 1; same construction with the goods mirrored.
      Rational q_hi = 1 - p_lo;
      Rational q_lo = 1 - p_hi;
      Rational t_lo = 1 / (2 * q_hi);
      Rational t_hi = 1 / (2 * q_lo);
      Rational t = midpoint ? (t_lo + t_hi) / 2 : t_lo;
      x(lo, 1) = t;
      x(lo, 0) = 0;
      x(hi, 1) = 1 - t;
      x(hi, 0) = 1;
    } else {
      // Opposite (weak) favorites: each takes her preferred good whole.
      x(hi, 0) = 1;
      x(hi, 1) = 0;
      x(lo, 0) = 0;
      x(lo, 1) = 1;
    }
  }

  try {
    validate_allocation(inst, x);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("band rules require budgets that never bind");
  }
  return x;
}

RuleRun run_rule(const Instance& inst, const Rational& alpha, const Rational& beta,
                 bool midpoint) {
  const Mechanism rule = midpoint ? Mechanism(band_midpoint_rule) : Mechanism(band_endpoint_rule);
  RuleRun run;
  run.rule = midpoint ? "band-midpoint" : "band-endpoint";
  run.truthful = rule(inst, inst.values);
  run.truthful_first_good_share = run.truthful(0, 0);
  run.max_gain = 0;

  auto try_deviation = [&](Index agent, const Rational& first_good_value) {
    Vec report(2);
    report << first_good_value, Rational(1) - first_good_value;
    ReportMatrix rep = inst.values;
    rep.row(agent) = report.transpose();
    Allocation after = rule(inst, rep);
    DeviationRecord dev;
    dev.agent = agent;
    dev.report = report;
    dev.first_good_share_after = after(0, 0);
    dev.utility_truthful = bundle_value(inst, agent, run.truthful.row(agent).transpose());
    dev.utility_after = bundle_value(inst, agent, after.row(agent).transpose());
    dev.gain = dev.utility_after - dev.utility_truthful;
    if (dev.gain > run.max_gain) run.max_gain = dev.gain;
    run.deviations.push_back(std::move(dev));
  };

  // Agent 0 understates her preference toward the other agent's.
  try_deviation(0, (alpha + beta) / 2);
  // Agent 1 overstates hers just enough to push the band below the
  // truthful share (a no-op for the endpoint rule, recorded regardless).
  Rational x11 = run.truthful_first_good_share;
  try_deviation(1, (1 / (2 * x11) + alpha) / 2);
  return run;
}

}  // namespace

Allocation band_endpoint_rule(const Instance& inst, const ReportMatrix& reports) {
  return band_rule(inst, reports, false);
}

Allocation band_midpoint_rule(const Instance& inst, const ReportMatrix& reports) {
  return band_rule(inst, reports, true);
}

ImpossibilityTranscript impossibility_demo(const Rational& alpha, const Rational& beta,
                                           int grid_k) {
  Instance inst = impossibility_instance(alpha, beta);

  ImpossibilityTranscript tr;
  tr.alpha = alpha;
  tr.beta = beta;
  tr.grid_k = grid_k;
  tr.band_lo = 1 / (2 * alpha);
  tr.band_hi = 1 / (2 * beta);

  std::vector<Allocation> po = pareto_frontier(inst, grid_k);
  tr.po_count = static_cast<long long>(po.size());
  tr.po_structure_holds = true;
  for (const Allocation& x : po) {
    if (!(x(0, 0) == 1 || x(0, 1) == 0)) {
      tr.po_structure_holds = false;
      break;
    }
  }
  tr.fefpo_band_holds = true;
  for (const Allocation& x : po) {
    if (!is_fef(inst, x).holds) continue;
    ++tr.fefpo_count;
    if (!(x(0, 1) == 0 && tr.band_lo <= x(0, 0) && x(0, 0) <= tr.band_hi)) {
      tr.fefpo_band_holds = false;
    }
  }

  tr.endpoint = run_rule(inst, alpha, beta, false);
  tr.midpoint = run_rule(inst, alpha, beta, true);
  return tr;
}

}  // namespace fairdiv
