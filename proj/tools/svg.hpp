#pragma once

#include <string>

#include "slicecalc/nash_cert.hpp"

namespace slicecalc::cli {

/// Zeros in the (α, β) half-plane: spheres as discs, isolated zeros as squares, real zeros on the axis.
std::string zeros_svg(const ZeroSet& zs);
/// log-log plot of sampled ‖f(x)‖ against ‖x‖ under the envelope C(1 + r^m).
std::string bound_svg(const SliceFunction& f, const BoundCertificate& b, std::uint64_t seed);

}  // namespace slicecalc::cli
