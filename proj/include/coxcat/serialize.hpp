#pragma once

// JSON renderings of lattices, complexes, polynomials and reports, and the
// loaders that rebuild lattices and complexes from them.

#include <memory>
#include <string>

#include <json.hpp>

#include "coxcat/cluster.hpp"
#include "coxcat/identity.hpp"
#include "coxcat/nclattice.hpp"

namespace coxcat {

using Json = nlohmann::ordered_json;

/// Exact strings per coordinate ("3/2", "1/2+1/2r5"); a dihedral root is
/// rendered as its angle, e.g. ["pi*3/7"].
Json root_to_json(const RootSystem& rs, int root);

Json integer_to_json(const mpz_class& v);
/// {"deg_x":k,"deg_y":l,"coeff":[[...]]}, row index = power of x.
Json bipoly_to_json(const BiPoly& p);
/// Ascending coefficients.
Json poly_to_json(const Poly1& p);

/// {"type","n","vertices":[{"id","root","class"}],"facets","f_kl"}.
Json complex_to_json(const ClusterComplex& cx);
/// {"type","n","elements":[{"id","rank","perm"}],"covers","mobius"}.
Json lattice_to_json(const NCLattice& lat);

/// Rebuild from the renderings above. The payload must describe `rs`
/// (same label, roots and sizes); all stored derived data (f_kl, mobius) is
/// recomputed and compared. Throws DataError on any mismatch.
NCLattice lattice_from_json(const Json& j, std::shared_ptr<const RootSystem> rs);
ClusterComplex complex_from_json(const Json& j, std::shared_ptr<const RootSystem> rs);

Json report_to_json(const VerificationReport& r, bool timings);
std::string report_to_text(const VerificationReport& r, bool timings);

}  // namespace coxcat
