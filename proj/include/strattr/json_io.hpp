#pragma once

// JSON spec files and report serialization. Objects keep a fixed key order so
// identical inputs give byte-identical output.

#include <string>
#include <string_view>

#include "json.hpp"
#include "strattr/attractor.hpp"
#include "strattr/biword.hpp"
#include "strattr/modular.hpp"
#include "strattr/quasisturmian.hpp"
#include "strattr/sturmian.hpp"
#include "strattr/substitution.hpp"

namespace strattr {

using Json = nlohmann::ordered_json;

// Spec schema:
//   {"type":"eventually-periodic","left":"0","center":"","right":"1"}
//   {"type":"char-sturmian","head":"","tail":"01","variant":"lower"}
//   {"type":"shift","m":3,"inner":{...}}
//   {"type":"image","phi":{"0":"01","1":"00"},"residue":0,"inner":{...}}
//   {"type":"orbit-point","inner":{...}}
// "phi" may also be "L0" or "L1"; "residue" defaults to 0. ParseError messages
// name the JSON path and the missing or malformed field.
BiWordSpec spec_from_json(const Json& j, const std::string& path = "$");
Json to_json(const BiWordSpec& spec);
BiWordSpec parse_spec(std::string_view text);
BiWordSpec load_spec(const std::string& file);
// Compact canonical text; parse_spec(dump_spec(s)) dumps to the same bytes.
std::string dump_spec(const BiWordSpec& spec);

Substitution substitution_from_json(const Json& j, const std::string& path = "$");
Json to_json(const Substitution& phi);

// {"kind":"interval","lo":a,"hi":b} | {"kind":"finite","positions":[...]} |
// {"kind":"progression","residue":i,"modulus":k}
PositionSet position_set_from_json(const Json& j, const std::string& path = "$");
Json to_json(const PositionSet& gamma);

Json to_json(const Window& w);
Json to_json(const CoverageReport& r);
Json to_json(const SpanResult& r);
Json to_json(const ComplexityProfile& p);
Json to_json(const ComplexityBoundReport& r);
Json to_json(const PeriodicAttractor& r);
Json to_json(const ReturnMorphismCertificate& c);
Json to_json(const DesubstitutionResult& r);
Json to_json(const Span1Report& r);
Json to_json(const DescentStep& s);
Json to_json(const DescentTrace& t);
Json to_json(const ExtractionResult& r);
Json to_json(const DesubstitutionReport& r);
Json to_json(const QuasiSturmianSpan& r);
Json to_json(const FiniteAttractorVerdict& v);
Json to_json(const ResidueSet& r);
Json to_json(const ModuloRecurrenceReport& r);
Json to_json(const SparseReport& r);
Json to_json(const LocalRule& rule);
Json to_json(const PeriodizingRule& r);

}  // namespace strattr
