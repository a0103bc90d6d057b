#include "strattr/json_io.hpp"

#include <fstream>
#include <sstream>

#include "strattr/error.hpp"

namespace strattr {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const Json& j, const std::string& path, const char* key) {
  const Json& v = field(j, path, key);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

Position int_field(const Json& j, const std::string& path, const char* key) {
  const Json& v = field(j, path, key);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<Position>();
}

Word word_field(const Json& j, const std::string& path, const char* key) {
  const std::string text = string_field(j, path, key);
  try {
    return parse_word(text);
  } catch (const Error& e) {
    fail(path + "." + key, e.what());
  }
}

Json opt_word(const std::optional<Word>& w) {
  return w ? Json(to_string(*w)) : Json(nullptr);
}

Json words(const std::vector<Word>& ws) {
  Json a = Json::array();
  for (const Word& w : ws) a.push_back(to_string(w));
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// Specs

Substitution substitution_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "L0") return Substitution::L0();
    if (name == "L1") return Substitution::L1();
    fail(path, "unknown substitution name \"" + name + "\" (expected L0 or L1)");
  }
  if (!j.is_object() || j.empty()) fail(path, "expected a nonempty object of letter images");
  std::map<Letter, Word> rules;
  for (const auto& [key, value] : j.items()) {
    if (key.size() != 1) fail(path, "key \"" + key + "\" is not a single letter");
    if (!value.is_string()) fail(path + "." + key, "expected an image string");
    try {
      rules[letter_from_name(key[0])] = parse_word(value.get<std::string>());
    } catch (const Error& e) {
      fail(path + "." + key, e.what());
    }
  }
  try {
    return Substitution(std::move(rules));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Json to_json(const Substitution& phi) {
  Json j = Json::object();
  for (const auto& [a, img] : phi.rules()) j[std::string(1, letter_name(a))] = to_string(img);
  return j;
}

BiWordSpec spec_from_json(const Json& j, const std::string& path) {
  const std::string type = string_field(j, path, "type");
  try {
    if (type == "eventually-periodic") {
      return BiWordSpec::eventually_periodic(word_field(j, path, "left"),
                                             word_field(j, path, "center"),
                                             word_field(j, path, "right"));
    }
    if (type == "char-sturmian") {
      const std::string v = string_field(j, path, "variant");
      if (v != "upper" && v != "lower") {
        fail(path + ".variant", "expected \"upper\" or \"lower\"");
      }
      return BiWordSpec::characteristic(
          DirectiveSequence(word_field(j, path, "head"), word_field(j, path, "tail")),
          v == "upper" ? Variant::upper : Variant::lower);
    }
    if (type == "shift") {
      const Position m = int_field(j, path, "m");
      return BiWordSpec::shifted(spec_from_json(field(j, path, "inner"), path + ".inner"), m);
    }
    if (type == "image") {
      Substitution phi = substitution_from_json(field(j, path, "phi"), path + ".phi");
      const Position r = j.contains("residue") ? int_field(j, path, "residue") : 0;
      return BiWordSpec::image(spec_from_json(field(j, path, "inner"), path + ".inner"),
                               std::move(phi), r);
    }
    if (type == "orbit-point") {
      return BiWordSpec::orbit_point(spec_from_json(field(j, path, "inner"), path + ".inner"));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(path, e.what());
  }
  fail(path + ".type", "unknown spec type \"" + type + "\"");
}

Json to_json(const BiWordSpec& spec) {
  return std::visit(
      [](const auto& n) -> Json {
        using T = std::decay_t<decltype(n)>;
        Json j;
        if constexpr (std::is_same_v<T, EventuallyPeriodic>) {
          j["type"] = "eventually-periodic";
          j["left"] = to_string(n.left);
          j["center"] = to_string(n.center);
          j["right"] = to_string(n.right);
        } else if constexpr (std::is_same_v<T, CharacteristicSturmian>) {
          j["type"] = "char-sturmian";
          j["head"] = to_string(n.directive.head());
          j["tail"] = to_string(n.directive.tail());
          j["variant"] = to_string(n.variant);
        } else if constexpr (std::is_same_v<T, Shifted>) {
          j["type"] = "shift";
          j["m"] = n.m;
          j["inner"] = to_json(*n.inner);
        } else if constexpr (std::is_same_v<T, MorphicImage>) {
          j["type"] = "image";
          j["phi"] = to_json(n.phi);
          j["residue"] = n.residue;
          j["inner"] = to_json(*n.inner);
        } else {
          j["type"] = "orbit-point";
          j["inner"] = to_json(*n.inner);
        }
        return j;
      },
      spec.node());
}

BiWordSpec parse_spec(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return spec_from_json(j);
}

BiWordSpec load_spec(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw ParseError(file + ": cannot open spec file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_spec(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(file + ": " + e.what());
  }
}

std::string dump_spec(const BiWordSpec& spec) { return to_json(spec).dump(); }

// ---------------------------------------------------------------------------
// Position sets

PositionSet position_set_from_json(const Json& j, const std::string& path) {
  const std::string kind = string_field(j, path, "kind");
  try {
    if (kind == "interval") return PositionSet::interval(int_field(j, path, "lo"), int_field(j, path, "hi"));
    if (kind == "progression") {
      return PositionSet::progression(int_field(j, path, "residue"), int_field(j, path, "modulus"));
    }
    if (kind == "finite") {
      const Json& a = field(j, path, "positions");
      if (!a.is_array()) fail(path + ".positions", "expected an array");
      std::vector<Position> pts;
      for (const Json& v : a) {
        if (!v.is_number_integer()) fail(path + ".positions", "expected integers");
        pts.push_back(v.get<Position>());
      }
      return PositionSet::finite(std::move(pts));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(path, e.what());
  }
  fail(path + ".kind", "unknown position set kind \"" + kind + "\"");
}

Json to_json(const PositionSet& g) {
  Json j;
  switch (g.kind()) {
    case PositionSet::Kind::interval:
      j["kind"] = "interval";
      j["lo"] = g.min();
      j["hi"] = g.max();
      break;
    case PositionSet::Kind::finite:
      j["kind"] = "finite";
      j["positions"] = g.positions();
      break;
    case PositionSet::Kind::progression:
      j["kind"] = "progression";
      j["residue"] = g.residue();
      j["modulus"] = g.modulus();
      break;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Reports

Json to_json(const Window& w) {
  Json j;
  j["offset"] = w.offset;
  j["content"] = to_string(w.content);
  return j;
}

Json to_json(const CoverageReport& r) {
  Json j;
  j["verdict"] = r.verdict();
  j["N"] = r.N;
  j["radius"] = r.radius;
  j["witness"] = opt_word(r.witness);
  j["attractor"] = r.gamma ? to_json(*r.gamma) : Json(nullptr);
  j["span"] = r.gamma && r.gamma->bounded() ? Json(r.gamma->span()) : Json(nullptr);
  return j;
}

Json to_json(const SpanResult& r) {
  Json j;
  switch (r.kind) {
    case SpanResult::Kind::finite: j["verdict"] = "finite"; break;
    case SpanResult::Kind::infinite: j["verdict"] = "infinite"; break;
    case SpanResult::Kind::unknown: j["verdict"] = "unknown"; break;
  }
  j["N"] = r.N;
  j["span"] = r.kind == SpanResult::Kind::finite ? Json(r.value) : Json(nullptr);
  j["attractor"] = r.attractor ? to_json(*r.attractor) : Json(nullptr);
  j["provenance"] = r.provenance;
  j["reason"] = r.reason;
  return j;
}

Json to_json(const ComplexityProfile& p) {
  Json j;
  j["radius"] = p.radius;
  j["profile"] = p.counts;
  return j;
}

Json to_json(const ComplexityBoundReport& r) {
  Json j;
  j["span"] = r.span;
  j["radius"] = r.radius;
  j["equality"] = r.equality;
  j["profile"] = r.profile;
  return j;
}

Json to_json(const PeriodicAttractor& r) {
  Json j;
  j["structure"] = {{"i", r.structure.i}, {"p", r.structure.p}, {"j", r.structure.j}, {"q", r.structure.q}};
  j["conjugate_periods"] = r.conjugate_periods;
  j["span"] = r.span;
  j["attractor"] = to_json(r.gamma);
  j["validation"] = to_json(r.validation);
  return j;
}

Json to_json(const ReturnMorphismCertificate& c) {
  Json j;
  j["w"] = to_string(c.w);
  j["valid"] = c.valid;
  j["injective_on_letters"] = c.injective_on_letters;
  Json checks = Json::array();
  for (const ReturnCheck& ch : c.checks) {
    Json x;
    x["letter"] = std::string(1, letter_name(ch.letter));
    x["extended"] = to_string(ch.extended);
    x["occurrences"] = ch.occurrences;
    x["ok"] = ch.ok;
    checks.push_back(std::move(x));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json to_json(const DesubstitutionResult& r) {
  Json j;
  j["which"] = r.which;
  j["m"] = r.m;
  j["ell"] = r.ell;
  j["preimage"] = to_json(r.preimage);
  j["removed_left"] = r.removed_left;
  j["left_reason"] = r.left_reason;
  j["removed_right"] = r.removed_right;
  j["right_reason"] = r.right_reason;
  j["swapped_rules"] = r.swapped_rules;
  j["result"] = to_json(r.result);
  j["validation"] = to_json(r.validation);
  return j;
}

Json to_json(const Span1Report& r) {
  Json j;
  j["pass"] = r.pass;
  j["N"] = r.N;
  j["radius"] = r.radius;
  j["variant"] = r.variant ? Json(to_string(*r.variant)) : Json(nullptr);
  j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
  j["reversal_law"] = r.reversal_law;
  j["consistent"] = r.consistent;
  j["coverage"] = to_json(r.coverage);
  return j;
}

Json to_json(const DescentStep& s) {
  Json j;
  j["which"] = s.which;
  j["shift"] = s.shift;
  j["gamma_before"] = to_json(s.gamma_before);
  j["gamma_after"] = to_json(s.gamma_after);
  j["stabilized"] = s.stabilized;
  j["pattern"] = to_string(s.pattern);
  j["validated"] = s.validated;
  return j;
}

Json to_json(const DescentTrace& t) {
  Json j;
  j["reached_span1"] = t.reached_span1;
  j["budget_exhausted"] = t.budget_exhausted;
  Json steps = Json::array();
  for (const DescentStep& s : t.steps) steps.push_back(to_json(s));
  j["steps"] = std::move(steps);
  return j;
}

Json to_json(const ExtractionResult& r) {
  Json j;
  j["w"] = to_string(r.w);
  j["n1"] = r.n1;
  j["phi"] = to_json(r.phi);
  j["m"] = r.m;
  j["k"] = r.k;
  j["certificate_valid"] = r.certificate.valid;
  j["orientation_ok"] = r.orientation_ok;
  j["swapped"] = r.swapped;
  j["measured_offset"] = r.measured_offset;
  j["k_matches"] = r.k_matches;
  j["radius"] = r.radius;
  return j;
}

Json to_json(const DesubstitutionReport& r) {
  Json j;
  j["round_trip"] = r.round_trip;
  j["N"] = r.N;
  j["inner_complexity"] = r.inner_complexity;
  j["inner_balanced"] = r.inner_balanced;
  j["inner_aperiodic"] = r.inner_aperiodic;
  j["sturmian"] = r.sturmian();
  j["inner_profile"] = r.inner_profile;
  return j;
}

Json to_json(const QuasiSturmianSpan& r) {
  Json j;
  j["span"] = to_json(r.span);
  j["extraction"] = r.extraction ? to_json(*r.extraction) : Json(nullptr);
  j["inner_attractor"] = r.inner_attractor ? to_json(*r.inner_attractor) : Json(nullptr);
  return j;
}

Json to_json(const FiniteAttractorVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.kind);
  j["span"] = v.span ? Json(*v.span) : Json(nullptr);
  j["attractor"] = v.attractor ? to_json(*v.attractor) : Json(nullptr);
  j["validation"] = v.validation ? to_json(*v.validation) : Json(nullptr);
  j["complexity_law"] = v.complexity_law ? Json(*v.complexity_law) : Json(nullptr);
  j["provenance"] = v.provenance;
  j["detail"] = v.detail;
  return j;
}

Json to_json(const ResidueSet& r) {
  Json j;
  j["k"] = r.modulus;
  j["residues"] = r.residues;
  j["radius"] = r.radius;
  return j;
}

Json to_json(const ModuloRecurrenceReport& r) {
  Json j;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["K"] = r.K;
  j["N"] = r.N;
  j["radius"] = r.radius;
  Json fails = Json::array();
  for (const ModuloFailure& f : r.failures) {
    Json x;
    x["k"] = f.k;
    x["w"] = to_string(f.w);
    x["missing"] = f.missing;
    fails.push_back(std::move(x));
  }
  j["failures"] = std::move(fails);
  return j;
}

Json to_json(const SparseReport& r) {
  Json j;
  j["density_ok"] = r.density_ok;
  j["density_violation"] = r.density_violation ? Json(*r.density_violation) : Json(nullptr);
  j["coverage_ok"] = r.coverage_ok;
  j["uncovered"] = opt_word(r.uncovered);
  j["radius"] = r.radius;
  j["attractor"] = to_json(r.gamma);
  j["enumeration"] = words(r.enumeration);
  j["selected"] = r.selected;
  j["block_lengths"] = r.block_lengths;
  return j;
}

Json to_json(const LocalRule& rule) {
  Json j;
  j["M"] = rule.M;
  Json table = Json::object();
  for (const auto& [block, out] : rule.table) {
    table[to_string(block)] = std::string(1, letter_name(out));
  }
  j["table"] = std::move(table);
  return j;
}

Json to_json(const PeriodizingRule& r) {
  Json j;
  j["occurrences"] = to_json(r.occurrences);
  j["representatives"] = r.representatives;
  j["N"] = r.N;
  j["u"] = to_string(r.u);
  j["radius"] = r.radius;
  j["rule"] = to_json(r.rule);
  return j;
}

}  // namespace strattr
