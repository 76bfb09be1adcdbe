#pragma once

#include "utfree/decider.hpp"
#include "utfree/encoder.hpp"
#include "utfree/oracle.hpp"

#include <json.hpp>

#include <string>

namespace utfree {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// { "t": int, "x": [[r,r],[r,r]], "z": [ t+1 matrices ] }, entries row-major
// Rational text with a "0" lower-left entry.
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json collision_report_to_json(const CollisionReport& r);

// { "arity": int, "terms": [ { "coeff": Rational-text, "exps": [ints] } ] }
Polynomial polynomial_from_json(const nlohmann::json& j);
nlohmann::json polynomial_to_json(const Polynomial& p);

// { "k": int, "A": [[ints]], "M": ..., "N": ..., "B": ... }
nlohmann::json gadget_to_json(const Gadget& g);

}  // namespace utfree
