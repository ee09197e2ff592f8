#pragma once

#include <cstddef>
#include <vector>

#include "angulate/presentation.hpp"

namespace angulate {

/// Relator words over generators 0..generators-1; letter g >= 0 stands for
/// x_g and ~g (that is, -g-1) for its inverse.
struct CosetProblem {
  int generators = 0;
  std::vector<std::vector<int>> relators;
};

/// Index of the trivial subgroup, i.e. the group order, by HLT coset
/// enumeration with coincidence processing. Throws BudgetExceeded when more
/// than `max_cosets` cosets get defined (0 means budgets().coset_table).
std::size_t coset_enumerate(const CosetProblem& problem, std::size_t max_cosets = 0);

/// The presentation's relator pairs as lhs * rhs^-1, plus any `extra` words.
CosetProblem coset_problem(const Presentation& presentation, const std::vector<Word>& extra = {});

/// Adds s_i^2 for every generator: the quotient of a braid group of type A
/// with n-1 generators is the symmetric group of order n!.
std::size_t order_with_squares(const Presentation& presentation, std::size_t max_cosets = 0);

}  // namespace angulate
