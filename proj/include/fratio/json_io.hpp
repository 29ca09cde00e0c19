#pragma once

#include <json.hpp>

#include "fratio/affine_family.hpp"
#include "fratio/catalog.hpp"
#include "fratio/constructor.hpp"
#include "fratio/criteria.hpp"
#include "fratio/enumerate.hpp"
#include "fratio/int_list.hpp"
#include "fratio/rational.hpp"
#include "fratio/reducibility.hpp"

namespace fratio {

// Key order is part of the output format.
using Json = nlohmann::ordered_json;

/// Rationals are "num/den" strings ("3" for integers).
Json to_json(const Rat &r);
Json to_json(const IntList &a);
Json to_json(const Point2 &p);
/// {status, height?, witness_x?, value_range?, reason?}
Json to_json(const RatioVerdict &v);
/// {d, entries, constraints, coprime, height?}; constraints as [[coeffs], ">0"].
Json to_json(const AffineList &f);
Json to_json(const FamilyVerdict &v);
Json to_json(const ConstructionInput &t);
Json to_json(const ProofChecks &c);
Json to_json(const Decomposition &d);
Json to_json(const IrreducibilityCertificate &c);
Json to_json(const SmallNormReport &r);
Json to_json(const RowReport &r);
Json to_json(const CatalogReport &r);

/// Throws std::invalid_argument on shape errors; list validation errors
/// propagate as ListError / FamilyError.
Rat rat_from_json(const Json &j);
IntList list_from_json(const Json &j);
RatioVerdict verdict_from_json(const Json &j);
/// Accepts a single [[coeffs], rel] pair or an array of them.
std::vector<LinearConstraint> constraints_from_json(const Json &j, int d);
AffineList family_from_json(const Json &j);

} // namespace fratio
