#pragma once

// Canonical JSON form of a factorization: sorted keys, no whitespace,
// factors and edges in canonical order, so equal factorizations give equal bytes.
//
//   {"factors":[[[u,v],...],...],"format":1,"lambda":L,"model":{...},"n":N}
//
// model: {"kind":"cyclic","n":N,"starters":[[pi...],...]} (+ "b" for odd n)
//        {"kind":"field","m":M,"modulus":[c0,...,1],"p":P}
//        {"kind":"plain"}

#include <string>

#include "onefact/core.hpp"

namespace onefact {

std::string serialize_document(const MultiFactorization &mf);

/// Errors: ParseError (bad JSON, missing fields, factors that are not perfect matchings).
MultiFactorization parse_document(const std::string &text);

} // namespace onefact
