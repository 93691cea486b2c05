#pragma once

#include <json.hpp>

#include "wordchar/engine.hpp"
#include "wordchar/lanczos.hpp"
#include "wordchar/sampling.hpp"

namespace wordchar {

using Json = nlohmann::json;

/// Polynomials serialize as arrays of "p/q" strings, lowest degree first;
/// rational functions as {"num": [...], "den": [...]}.
Json to_json(const Polynomial& p);
Json to_json(const RationalFunction& f);
Polynomial polynomial_from_json(const Json& j);
RationalFunction rational_function_from_json(const Json& j);

Json to_json(const EnumerationStats& s);
Json to_json(const McReport& r);
Json to_json(const SpectralReport& r);

/// Serialization with sorted keys and stable number formatting, so equal
/// reports are byte-identical.
std::string dump_report(const Json& j);

/// Stable rendering for floating point columns (shortest round-trip form).
std::string format_double(double v);

}  // namespace wordchar
