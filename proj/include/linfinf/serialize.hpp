#pragma once

#include "linfinf/decomposable.hpp"
#include "linfinf/errors.hpp"
#include "linfinf/germ.hpp"
#include "linfinf/represent.hpp"
#include "linfinf/simple_fn.hpp"

#include <json.hpp>

#include <string>

namespace linfinf {

using Json = nlohmann::json;

/// Parses UTF-8 text as JSON; ParseError carries `origin` in its path.
Json parse_json_text(const std::string& text, const std::string& origin);

/// Reads a whole file; ParseError on I/O failure.
std::string read_text_file(const std::string& path);

// Every parser rejects unknown object fields and non-reduced rationals and
// reports the JSON path of the offending node.
Rat rat_from_json(const Json& j, const std::string& path);
Interval interval_from_json(const Json& j, const std::string& path);
Set1D set1d_from_json(const Json& j, const std::string& path);
Figure2D figure_from_json(const Json& j, const std::string& path);
SimpleFunc simple_func_from_json(const Json& j, const std::string& path);
LineFunc line_func_from_json(const Json& j, const std::string& path);
LineRule line_rule_from_json(const Json& j, const std::string& path);
Germ germ_from_json(const Json& j, const std::string& path);
RawGermTable table_from_json(const Json& j, const std::string& path);
CandidateGlobal candidate_from_json(const Json& j, const std::string& path);
std::vector<Figure2D> figure_list_from_json(const Json& j, const std::string& path);

Json rat_to_json(const Rat& r);
Json interval_to_json(const Interval& iv);
Json set1d_to_json(const Set1D& s);
Json figure_to_json(const Figure2D& f);
Json simple_func_to_json(const SimpleFunc& f);
Json line_func_to_json(const LineFunc& f);
Json line_rule_to_json(const LineRule& r);
Json germ_to_json(const Germ& g);
Json restricted_germ_to_json(const RestrictedGerm& r);
Json table_to_json(const RawGermTable& t);
Json candidate_to_json(const CandidateGlobal& g);
Json ext_rat_to_json(const ExtRat& v);

/// Envelope for files on disk: {"schema_version":1,"kind":...,"payload":...}.
Json wrap_manifest(const std::string& kind, Json payload);

/// Validates the envelope and the kind tag, returns the payload.
Json unwrap_manifest(const Json& j, const std::string& expected_kind,
                     const std::string& origin);

/// Convenience: read + parse + unwrap in one step.
Json load_manifest_payload(const std::string& path, const std::string& expected_kind);

}  // namespace linfinf
