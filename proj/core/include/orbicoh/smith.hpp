#pragma once

#include <cstddef>
#include <vector>

#include "orbicoh/fin_ab_group.hpp"
#include "orbicoh/int_matrix.hpp"

namespace orbicoh {

/// U * A * V = diag(d) with U, V unimodular. `d` has min(rows, cols) entries,
/// all >= 0, nonzero entries first and forming a divisibility chain.
struct SmithForm {
  std::vector<Integer> d;
  IntMatrix U;
  IntMatrix V;

  std::size_t rank() const;
};

/// Full Smith normal form with transforms. Pivot = entry of least absolute value
/// in the remaining submatrix. Deterministic.
SmithForm smith_form(const IntMatrix& a);

/// Diagonal of the Smith form only (no transforms); the cheap path used by all
/// cohomology computations.
std::vector<Integer> smith_diagonal(const IntMatrix& a);

std::size_t integer_rank(const IntMatrix& a);

/// Z-basis of the right kernel {v : A v = 0}, as the columns of the result.
/// The basis spans a saturated sublattice.
IntMatrix kernel_basis(const IntMatrix& a);

/// Z^rows / column-span(A).
FinAbGroup cokernel_group(const IntMatrix& a);

/// H = ker(d_out) / im(d_in) for a cochain complex  . --d_in--> C --d_out--> .
/// Throws CompositionNonzero if d_out * d_in != 0 and DimensionMismatch on bad shapes.
FinAbGroup complex_cohomology(const IntMatrix& d_in, const IntMatrix& d_out);

/// Rank over F_p. Throws NotPrime.
std::size_t rank_mod_p(const IntMatrix& a, long p);

/// Cohomology of a whole cochain complex C^0 -> C^1 -> ... given by its
/// coboundaries (d[k] : C^k -> C^{k+1}); each Smith diagonal is computed once.
/// Returns H^0 .. H^{d.size()-1}; the last degree needs d.back() as its d_out.
std::vector<FinAbGroup> cochain_cohomology(const std::vector<IntMatrix>& coboundaries, bool check_composition = true);

}  // namespace orbicoh
