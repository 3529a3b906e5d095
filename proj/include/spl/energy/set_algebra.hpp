#pragma once

#include "spl/core/ground_set.hpp"

namespace spl {

GroundSet sumset(const GroundSet& A, const GroundSet& B);
GroundSet productset(const GroundSet& A, const GroundSet& B);
/// {a - b}
GroundSet difference_set(const GroundSet& A, const GroundSet& B);
/// {1/b}; 0 not allowed.
GroundSet inverse_set(const GroundSet& B);

/// sA; s >= 1.
GroundSet fold_sumset(const GroundSet& A, unsigned s);
/// A^(s); s >= 1.
GroundSet fold_productset(const GroundSet& A, unsigned s);
/// A^(s) / A^(s); 0 not allowed in A.
GroundSet quotient_set(const GroundSet& A, unsigned s);
/// mA - nA with 0A = {0}.
GroundSet mA_minus_nA(const GroundSet& A, unsigned m, unsigned n);

}  // namespace spl
