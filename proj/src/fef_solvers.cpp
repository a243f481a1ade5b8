#include "fairdiv/fef_solvers.hpp"

#include <stdexcept>

namespace fairdiv {

Rational lipschitz_bound(const Instance& inst) {
  Rational best = 0;
  for (Index i = 0; i < inst.n(); ++i) {
    for (Index g = 0; g < inst.m(); ++g) {
      if (inst.values(i, g) > best) best = inst.values(i, g);
    }
  }
  return best;
}

PieceSplit split_into_pieces(const Instance& inst, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be strictly positive");
  Rational lip = lipschitz_bound(inst);
  Integer k = lip > 0 ? ceil_rational(lip / eps) : Integer(1);
  if (k < 1) k = 1;
  if (k > kEnumerationCap) {
    throw CapExceededError("eps " + to_pq_string(eps) + " needs " + k.str() +
                           " pieces per good; rerun with a larger eps");
  }
  PieceSplit split;
  split.lipschitz = lip;
  split.pieces_per_good = CountVec::Constant(inst.m(), static_cast<int>(k));
  return split;
}

namespace {

Rational own_value(const Instance& inst, const DiscreteAllocation& da, Index i) {
  CountVec row = da.counts.row(i).transpose();
  return counts_value(inst, i, row, da.pieces_per_good);
}

// Lowest-index agent whose best feasible subset of `pieces` beats her own
// bundle; the optimal subset is returned through `out`.
Index find_envier(const Instance& inst, const DiscreteAllocation& da, const CountVec& pieces,
                  CountVec& out) {
  PieceMultiset pm{pieces, da.pieces_per_good};
  for (Index k = 0; k < inst.n(); ++k) {
    DiscreteSubsetResult best = max_feasible_discrete_subset(inst, k, pm);
    if (best.value > own_value(inst, da, k)) {
      out = best.take;
      return k;
    }
  }
  return -1;
}

}  // namespace

std::optional<MinimalEnviedSet> find_minimal_envied_set(const Instance& inst,
                                                        const DiscreteAllocation& da) {
  CountVec t;
  if (find_envier(inst, da, da.charity, t) < 0) return std::nullopt;

  // Shrink: while removing one piece of some good leaves an envied set,
  // replace t by the envious agent's best subset of the reduced set. Each
  // round loses at least one piece, so this terminates.
  for (bool shrunk = true; shrunk;) {
    shrunk = false;
    for (Index g = 0; g < inst.m() && !shrunk; ++g) {
      if (t(g) == 0) continue;
      CountVec reduced = t;
      reduced(g) -= 1;
      CountVec sub;
      if (find_envier(inst, da, reduced, sub) >= 0) {
        t = sub;
        shrunk = true;
      }
    }
  }

  // Minimality forces the envied witness to be t itself.
  CountVec witness;
  Index agent = find_envier(inst, da, t, witness);
  if (agent < 0 || witness != t) {
    throw std::logic_error("minimal envied set shrink lost the envy invariant");
  }
  return MinimalEnviedSet{t, agent};
}

DiscreteAllocation compute_fefx(const Instance& inst, const CountVec& pieces_per_good) {
  if (pieces_per_good.size() != inst.m()) {
    throw std::invalid_argument("pieces_per_good: length must equal good count");
  }
  for (Index g = 0; g < inst.m(); ++g) {
    if (pieces_per_good(g) < 1) {
      throw std::invalid_argument("pieces_per_good[" + std::to_string(g) + "]: must be >= 1");
    }
  }
  DiscreteAllocation da;
  da.counts = Eigen::MatrixXi::Zero(inst.n(), inst.m());
  da.charity = pieces_per_good;
  da.pieces_per_good = pieces_per_good;

  // Iteration guard: n * prod(K_g + 1) swaps can never be reached because
  // the total agent value strictly increases on a finite grid.
  long long guard = inst.n() > 0 ? static_cast<long long>(inst.n()) : 1;
  for (Index g = 0; g < inst.m(); ++g) {
    if (guard > kEnumerationCap) break;
    guard *= pieces_per_good(g) + 1;
  }

  long long iterations = 0;
  for (;;) {
    std::optional<MinimalEnviedSet> envied = find_minimal_envied_set(inst, da);
    if (!envied) break;
    if (++iterations > guard) {
      throw std::logic_error("swap loop exceeded its iteration bound");
    }
    Index k = envied->agent;
    Rational before = own_value(inst, da, k);
    // Old pieces rejoin the charity, then the envied set leaves it.
    da.charity += da.counts.row(k).transpose();
    da.counts.row(k) = envied->pieces.transpose();
    da.charity -= envied->pieces;
    Rational after = own_value(inst, da, k);
    if (!(after > before)) {
      throw std::logic_error("swap did not strictly increase the adopting agent's value");
    }
  }
  return da;
}

Allocation compute_fef_eps(const Instance& inst, const Rational& eps) {
  PieceSplit split = split_into_pieces(inst, eps);
  DiscreteAllocation da = compute_fefx(inst, split.pieces_per_good);
  return to_fractional(inst, da);
}

ConvergenceReport fef_convergence_study(const Instance& inst,
                                        const std::vector<Rational>& schedule) {
  if (schedule.empty()) throw std::invalid_argument("schedule must be non-empty");
  for (size_t t = 0; t < schedule.size(); ++t) {
    if (schedule[t] <= 0) throw std::invalid_argument("schedule entries must be positive");
    if (t > 0 && schedule[t] > schedule[t - 1]) {
      throw std::invalid_argument("schedule must be non-increasing");
    }
  }

  ConvergenceReport report;
  for (const Rational& eps : schedule) {
    Allocation x;
    try {
      x = compute_fef_eps(inst, eps);
    } catch (const CapExceededError& e) {
      report.truncated = true;
      report.truncation_reason = e.what();
      break;
    }
    ConvergenceStep step;
    step.eps = eps;
    step.alloc = x;
    Mat v = envy_matrix(inst, x);
    step.max_envy = 0;
    for (Index i = 0; i < inst.n(); ++i) {
      Rational own = bundle_value(inst, i, x.row(i).transpose());
      for (Index h = 0; h <= inst.n(); ++h) {
        if (h == i) continue;
        Rational envy = v(i, h) - own;
        if (envy > step.max_envy) step.max_envy = envy;
      }
    }
    if (step.max_envy > eps) {
      throw std::logic_error("splitting solver exceeded its eps envy bound");
    }
    step.distance_to_prev = 0;
    if (!report.steps.empty()) {
      const Allocation& prev = report.steps.back().alloc;
      for (Index i = 0; i < inst.n(); ++i) {
        for (Index g = 0; g < inst.m(); ++g) {
          Rational d = x(i, g) - prev(i, g);
          if (d < 0) d = -d;
          if (d > step.distance_to_prev) step.distance_to_prev = d;
        }
      }
    }
    report.steps.push_back(std::move(step));
  }
  return report;
}

}  // namespace fairdiv
