#pragma once

// Library-internal helpers; not part of the installed surface.

namespace gbf::special::detail {

// Regularized upper tail Q(y, z) = 1 - P(y, z), computed without the
// cancellation that 1 - P suffers when P is close to 1.
double regularized_gamma_q(double y, double z);

} // namespace gbf::special::detail
