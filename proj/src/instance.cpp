#include "fairdiv/instance.hpp"

#include <stdexcept>
#include <string>

namespace fairdiv {

namespace {

std::string cell(const char* name, Index i, Index g) {
  return std::string(name) + "[" + std::to_string(i) + "][" + std::to_string(g) + "]";
}

}  // namespace

void validate_instance(const Instance& inst) {
  const Index n = inst.values.rows();
  const Index m = inst.values.cols();
  if (n < 1) throw std::invalid_argument("n: must be at least 1");
  if (m < 0) throw std::invalid_argument("m: must be non-negative");
  if (inst.sizes.rows() != n || inst.sizes.cols() != m) {
    throw std::invalid_argument("sizes: dimension mismatch with values");
  }
  if (inst.budgets.size() != n) {
    throw std::invalid_argument("budgets: length must equal agent count");
  }
  for (Index i = 0; i < n; ++i) {
    for (Index g = 0; g < m; ++g) {
      if (inst.values(i, g) < 0) {
        throw std::invalid_argument(cell("values", i, g) + ": negative value");
      }
      if (inst.sizes(i, g) <= 0) {
        throw std::invalid_argument(cell("sizes", i, g) + ": non-positive size");
      }
    }
    if (inst.budgets(i) < 0) {
      throw std::invalid_argument("budgets[" + std::to_string(i) + "]: negative budget");
    }
  }
}

Rational bundle_value(const Instance& inst, Index i, const Bundle& b) {
  return inst.values.row(i).dot(b);
}

Rational bundle_size(const Instance& inst, Index i, const Bundle& b) {
  return inst.sizes.row(i).dot(b);
}

bool is_feasible(const Instance& inst, Index i, const Bundle& b) {
  return bundle_size(inst, i, b) <= inst.budgets(i);
}

Bundle charity_bundle(const Allocation& alloc) {
  const Index m = alloc.cols();
  Bundle c(m);
  for (Index g = 0; g < m; ++g) {
    Rational total = alloc.col(g).sum();
    if (total > 1) {
      throw std::invalid_argument("good " + std::to_string(g) +
                                  " over-allocated: total fraction " + to_pq_string(total));
    }
    c(g) = Rational(1) - total;
  }
  return c;
}

void validate_allocation(const Instance& inst, const Allocation& alloc) {
  if (alloc.rows() != inst.n() || alloc.cols() != inst.m()) {
    throw std::invalid_argument("allocation: dimension mismatch with instance");
  }
  for (Index i = 0; i < alloc.rows(); ++i) {
    for (Index g = 0; g < alloc.cols(); ++g) {
      if (alloc(i, g) < 0 || alloc(i, g) > 1) {
        throw std::invalid_argument(cell("bundles", i, g) + ": fraction outside [0,1]");
      }
    }
  }
  charity_bundle(alloc);  // throws on over-allocation
  for (Index i = 0; i < inst.n(); ++i) {
    Bundle b = alloc.row(i).transpose();
    if (!is_feasible(inst, i, b)) {
      throw std::invalid_argument("bundles[" + std::to_string(i) + "]: size " +
                                  to_pq_string(bundle_size(inst, i, b)) +
                                  " exceeds budget " + to_pq_string(inst.budgets(i)));
    }
  }
}

Allocation empty_allocation(const Instance& inst) {
  return Allocation::Zero(inst.n(), inst.m());
}

}  // namespace fairdiv
