// Copyright 2026 The nonadd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NONADD_JSON_IO_HPP
#define NONADD_JSON_IO_HPP

// JSON encodings. Rationals are strings "p" or "p/q" in lowest terms;
// integers are also accepted on input. Every parser throws
// std::invalid_argument on malformed input.
//
//   IntegerSet   {"finite":[1,2,3]}
//                {"ep":{"n0":1,"p":2,"res":[0],"exc_in":[],"exc_out":[]}}
//                {"truncated":{"horizon":4096,"elements":[...]}}
//                {"rule":"powers-of-two"|"squares"}
//   IdealSpec    {"kind":"fin"} | {"kind":"density"}
//                {"kind":"summable","weights":"harmonic"|"constant","scale":"1"}
//                {"kind":"exh","phi":"density-sup","normalization":"1"}
//   Capacity     {"n":2,"values":{"0":"0","1":"1","2":"0","3":"1"}}
//   Coord ideal  {"n":3,"K":[1,3]}

#include <string>
#include <vector>

#include <json.hpp>

#include "nonadd/capacity.hpp"
#include "nonadd/choquet.hpp"
#include "nonadd/ideals.hpp"
#include "nonadd/integer_set.hpp"
#include "nonadd/rational.hpp"
#include "nonadd/representation.hpp"
#include "nonadd/riesz.hpp"
#include "nonadd/subalgebra.hpp"

namespace nonadd {

using Json = nlohmann::ordered_json;

Rational rational_from_json(const Json& j);
Json to_json(const Rational& q);

Vector vector_from_json(const Json& j);
Json to_json(const Vector& x);

AnySet set_from_json(const Json& j);
/// Only the exact class; throws for truncations and rule sets.
IntegerSet integer_set_from_json(const Json& j);
Json to_json(const AnySet& set);
Json to_json(const IntegerSet& set);

IdealSpec ideal_from_json(const Json& j);
Json to_json(const IdealSpec& ideal);

/// Missing table entries are rejected.
FiniteCapacity capacity_from_json(const Json& j);
Json to_json(const FiniteCapacity& capacity);
Json to_json(const ValidationReport& report);

CoordinateIdeal coordinate_ideal_from_json(const Json& j);
Json to_json(const CoordinateIdeal& ideal);

Json to_json(const DensityValue& d);
Json to_json(const MembershipVerdict& v);
Json to_json(const ExhNormResult& r);
Json to_json(const PropertyResult& r);
Json to_json(const PropertyReport& r);
Json to_json(const RoundtripReport& r);

Json to_json(const Subalgebra& algebra);
Json to_json(const RepresentationCertificate& cert, const Subalgebra& algebra);
Json to_json(const FunctionReport& r);

}  // namespace nonadd

#endif  // NONADD_JSON_IO_HPP
