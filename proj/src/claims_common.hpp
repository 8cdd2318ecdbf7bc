#ifndef WITT_CLAIMS_COMMON_HPP
#define WITT_CLAIMS_COMMON_HPP

#include <string>
#include <vector>

#include "witt/algebras.hpp"
#include "witt/envelope.hpp"
#include "witt/geometry.hpp"
#include "witt/hilbert.hpp"
#include "witt/morphism.hpp"
#include "witt/named_elements.hpp"
#include "witt/parser.hpp"
#include "witt/veritas.hpp"

namespace witt {

void register_env_claims(std::vector<ClaimSpec>& out);
void register_ideal_claims(std::vector<ClaimSpec>& out);
void register_geom_claims(std::vector<ClaimSpec>& out);

namespace claims {

/// Polynomial in the parameter, constant coefficient first.
inline RatFunc apoly(std::vector<long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return RatFunc(UniPoly(std::move(v)), UniPoly(1));
}

inline std::string yesno(bool b) { return b ? "true" : "false"; }

inline std::string dims_str(const std::vector<size_t>& d) {
    std::string s;
    for (size_t x : d) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

} // namespace claims
} // namespace witt

#endif
