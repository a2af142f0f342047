#pragma once

#include <json.hpp>

#include "slicecalc/nash_cert.hpp"

namespace slicecalc::cli {

using nlohmann::json;

json to_json(const Scalar& s);
json to_json(const AlgebraElement& a);
json to_json(const ComplexifiedElement& w);
json to_json(const ComplexPoint& z);
json to_json(Cplx z);
json to_json(const DomainSpec& d);
json to_json(const SplittingBase& b);
json to_json(const ZeroSet& zs);
json to_json(const SlicePolynomial& p);
json to_json(const AnnihilatorPoly& a);
json to_json(const BoundCertificate& b);
json to_json(const BoundCheck& c);
json to_json(const NashCertificate& c);

}  // namespace slicecalc::cli
