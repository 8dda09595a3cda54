#ifndef INVCOVER_REPORT_JSON_HPP
#define INVCOVER_REPORT_JSON_HPP

#include "invcover/bounds.hpp"
#include "invcover/search.hpp"

#include <json.hpp>

namespace invcover {

// {"num": "p", "den": "q"}; decimal strings, never rounded.
nlohmann::json rational_json(const Rational &q);
Rational rational_from_json(const nlohmann::json &value);

// {"a": rational, "b": rational} meaning a + b·√2.
nlohmann::json surd_json(const RationalSqrt2 &x);

nlohmann::json clause_json(const BoundClause &clause);
nlohmann::json report_json(const BoundsReport &report, const Hypergraph &h);
nlohmann::json search_json(const SearchRecord &record);
nlohmann::json search_config_json(const SearchConfig &cfg);

}  // namespace invcover

#endif
