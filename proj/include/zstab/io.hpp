#pragma once

/**
 * @file io.hpp
 * @brief JSON encoding of rings, classes, charges, lattices and results.
 *
 * Every rational is written as a "p/q" (or "p") string and never as a float.
 * Readers accept such strings or JSON integers and throw ParseError on
 * anything else.
 */

#include <functional>

#include <json.hpp>

#include "zstab/charge.hpp"
#include "zstab/filtr.hpp"

namespace zstab::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

/// [re, im]
Json to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const Json& j);

/// Coefficient list, lowest degree first.
Json to_json(const RPoly& p);
Json to_json(const CPoly& p);
RPoly rpoly_from_json(const Json& j);
CPoly cpoly_from_json(const Json& j);

/// "+inf" or a rational string.
Json to_json(const ExtReal& x);
ExtReal extreal_from_json(const Json& j);

/**
 * Either {"projective_space": n} or an explicit table
 * {"dim", "basis": [b_0..b_n], "names"?, "cup": [{"p","i","q","j","result"}],
 *  "integrate": [...]}.
 */
RingPtr ring_from_json(const Json& j);
Json ring_to_json(const GradedRing& ring);

/// {"0": [...], "1": [...], ...}; absent degrees are zero. A list of
/// per-degree lists is also accepted.
GradedClass class_from_json(const RingPtr& ring, const Json& j);
Json class_to_json(const GradedClass& x);

/**
 * {"components": ..., "codim"?, "label"?}, or on projective rings
 * {"line_bundle": a} and {"linear_subspace": c}. Without "codim" the lowest
 * nonzero degree is used.
 */
SheafClass sheaf_from_json(const RingPtr& ring, const Json& j);
Json sheaf_to_json(const SheafClass& s);

/// A list of [re, im] pairs, or a preset name "leung", "dhym", "gieseker".
StabilityVector rho_from_json(const Json& j, int n);
Json rho_to_json(const StabilityVector& rho);

/// {"omega"?: class (default H), "rho": ..., "twist"?: "trivial" | "todd" | class}.
ChargeData charge_from_json(const RingPtr& ring, const Json& j);
Json charge_to_json(const ChargeData& cd);

/// {"omega"?, "blocks": [[class, ...], ...]}; block degrees are the block lengths.
GammaSpec gamma_from_json(const RingPtr& ring, const Json& j);

/**
 * {"nodes": [{"id", "class"?, "codim"?}], "leq", "join"?, "meet"?, "top",
 *  "bottom", "strict"?}. A node class is inline JSON or, through resolve, the
 * name of a class defined elsewhere.
 */
LatticeSpec lattice_from_json(const RingPtr& ring, const Json& j,
                              const std::function<SheafClass(const std::string&)>& resolve = {});
Json lattice_to_json(const SubobjectLattice& l);

Json mu_to_json(const MuValue& v);
MuValue mu_from_json(const Json& j);

Json verdict_to_json(const SignVerdict& v);
SignVerdict verdict_from_json(const Json& j);

/// {"chain": [ids], "graded": [{"class", "codim", "mu"}], "mode"}.
Json filtration_to_json(const SubobjectLattice& l, const Filtration& f);

struct FiltrationRecord {
  std::string mode;
  std::vector<std::string> chain;
  std::vector<GradedClass> graded;
  std::vector<MuValue> mu;
};
FiltrationRecord filtration_from_json(const RingPtr& ring, const Json& j);

}  // namespace zstab::io
