// strattr: command-line front end for the string-attractor library.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "strattr/attractor.hpp"
#include "strattr/biword.hpp"
#include "strattr/error.hpp"
#include "strattr/json_io.hpp"
#include "strattr/modular.hpp"
#include "strattr/quasisturmian.hpp"
#include "strattr/sturmian.hpp"
#include "strattr/substitution.hpp"

using namespace strattr;

namespace {

struct Common {
  std::string spec_file;
  std::size_t N = 40;
  Position radius = 0;
  std::string out = "json";
  std::int64_t ceiling = 0;

  WorkCeiling work() const {
    WorkCeiling w;
    if (ceiling > 0) w.max_symbols = ceiling;
    return w;
  }
};

void add_common(CLI::App* cmd, Common& c, std::size_t default_N) {
  c.N = default_N;
  cmd->add_option("spec", c.spec_file, "Spec file (JSON)")->required();
  cmd->add_option("--N", c.N, "Largest factor length checked")->capture_default_str();
  cmd->add_option("--radius", c.radius, "Sampling radius (0 = automatic)")->capture_default_str();
  cmd->add_option("--out", c.out, "Output format")->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--ceiling", c.ceiling, "Largest number of symbols materialized");
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

// Top-level fields as "key: value" lines.
void emit(const Json& j, const Common& c) {
  if (c.out == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    std::cout << key << ": " << scalar_text(value) << "\n";
  }
}

PositionSet gamma_from_flags(const std::vector<Position>& interval, const std::vector<Position>& set,
                             const std::vector<Position>& ap) {
  const int given = !interval.empty() + !set.empty() + !ap.empty();
  if (given != 1) throw PreconditionError("give exactly one of --interval, --set, --ap");
  if (!interval.empty()) return PositionSet::interval(interval[0], interval[1]);
  if (!set.empty()) return PositionSet::finite(set);
  return PositionSet::progression(ap[0], ap[1]);
}

Json span_result(const BiWordSpec& spec, std::size_t N, Position search, const WorkCeiling& w) {
  if (!spec.window_computable()) return to_json(classify_sturmian_span(spec, N, w));
  if (auto reduced = reduce_to_eventually_periodic(spec)) {
    if (std::holds_alternative<PeriodicStructure>(normalize_eventually_periodic(spec))) {
      PeriodicAttractor pa = eventually_periodic_attractor(spec, std::nullopt, w);
      Json j = to_json(SpanResult::finite(pa.span, pa.gamma, pa.validation.N));
      j["validation"] = to_json(pa.validation);
      return j;
    }
  }
  return to_json(min_span_bruteforce(spec, N, search, std::nullopt, w));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"String attractors of bi-infinite words"};
  app.require_subcommand(1);

  // gen
  Common gen_c;
  Position gen_i = 0, gen_j = 0;
  auto* gen = app.add_subcommand("gen", "Print the window x[i..j]");
  gen->add_option("spec", gen_c.spec_file, "Spec file (JSON)")->required();
  gen->add_option("i", gen_i, "First position")->required();
  gen->add_option("j", gen_j, "Last position")->required();
  gen->add_option("--out", gen_c.out, "Output format")->check(CLI::IsMember({"json", "text"}));
  gen->add_option("--ceiling", gen_c.ceiling, "Largest number of symbols materialized");
  gen_c.out = "text";

  // check
  Common check_c;
  std::vector<Position> interval, set, ap;
  auto* check = app.add_subcommand("check", "Check a position set as a string attractor");
  add_common(check, check_c, 40);
  check->add_option("--interval", interval, "Interval a b")->expected(2);
  check->add_option("--set", set, "Finite set p1,p2,...")->delimiter(',');
  check->add_option("--ap", ap, "Arithmetic progression i k")->expected(2);

  // span
  Common span_c;
  Position search = 40;
  auto* span = app.add_subcommand("span", "Minimal span of an interval attractor");
  add_common(span, span_c, 30);
  span->add_option("--search", search, "Largest |start| tried by the interval scan")
      ->capture_default_str();

  // complexity
  Common cx_c;
  auto* cx = app.add_subcommand("complexity", "Factor complexity profile p(1..N)");
  add_common(cx, cx_c, 20);

  // classify
  Common cl_c;
  auto* cl = app.add_subcommand("classify", "Finite-attractor classification");
  add_common(cl, cl_c, 60);

  // desub
  Common de_c;
  int which = -1;
  std::vector<Position> de_interval;
  auto* de = app.add_subcommand(
      "desub", "Return-morphism desubstitution, or one L0/L1 step with --L and --interval");
  add_common(de, de_c, 40);
  de->add_option("--L", which, "Peel L0 (0) or L1 (1) off the spec")->check(CLI::Range(0, 1));
  de->add_option("--interval", de_interval, "Interval attractor a b of L(spec)")->expected(2);

  // modrec
  Common mr_c;
  Position K = 4;
  auto* mr = app.add_subcommand("modrec", "Modulo-recurrence up to K and N");
  add_common(mr, mr_c, 10);
  mr->add_option("--K", K, "Largest modulus")->capture_default_str();

  // sparse
  Common sp_c;
  bool block = false;
  Position eta_base = 1, eta_mul = 2, eta_add = 2;
  std::vector<Position> eta_jumps{2};
  auto* sp = app.add_subcommand("sparse", "Sparse attractor under a density budget");
  add_common(sp, sp_c, 8);
  sp->add_flag("--block", block, "Block variant with measured recurrence constants");
  sp->add_option("--eta-base", eta_base, "Budget value at 0")->capture_default_str();
  sp->add_option("--eta-jumps", eta_jumps, "Explicit jump positions")->delimiter(',');
  sp->add_option("--eta-mul", eta_mul, "Tail rule multiplier")->capture_default_str();
  sp->add_option("--eta-add", eta_add, "Tail rule increment")->capture_default_str();

  // ca
  Common ca_c;
  std::string ca_w = "1";
  Position ca_k = 2;
  std::vector<Position> range{-100, 100};
  auto* ca = app.add_subcommand("ca", "Periodizing sliding block code for (w, k)");
  add_common(ca, ca_c, 0);
  ca->add_option("--w", ca_w, "Factor w")->capture_default_str();
  ca->add_option("--k", ca_k, "Modulus k")->capture_default_str();
  ca->add_option("--range", range, "Output positions i j")->expected(2);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      const BiWordSpec spec = load_spec(gen_c.spec_file);
      const Window w = window(spec, gen_i, gen_j, gen_c.work());
      if (gen_c.out == "json") {
        std::cout << to_json(w).dump(2) << "\n";
      } else {
        std::cout << "offset " << w.offset << ": " << to_string(w.content) << "\n";
      }
    } else if (*check) {
      const BiWordSpec spec = load_spec(check_c.spec_file);
      const PositionSet gamma = gamma_from_flags(interval, set, ap);
      CoverageReport r = gamma.bounded()
                             ? check_attractor(spec, gamma, check_c.N, check_c.radius, check_c.work())
                             : ap_attractor_check(spec, gamma.residue(), gamma.modulus(), check_c.N,
                                                  check_c.radius, check_c.work());
      emit(to_json(r), check_c);
    } else if (*span) {
      const BiWordSpec spec = load_spec(span_c.spec_file);
      emit(span_result(spec, span_c.N, search, span_c.work()), span_c);
    } else if (*cx) {
      const BiWordSpec spec = load_spec(cx_c.spec_file);
      const Position r = std::max<Position>(cx_c.radius, static_cast<Position>(cx_c.N));
      emit(to_json(factor_complexity_profile(spec, cx_c.N, r, cx_c.work())), cx_c);
    } else if (*cl) {
      const BiWordSpec spec = load_spec(cl_c.spec_file);
      emit(to_json(finite_attractor_classifier(spec, cl_c.N, cl_c.work())), cl_c);
    } else if (*de) {
      const BiWordSpec spec = load_spec(de_c.spec_file);
      if (which >= 0) {
        if (de_interval.empty()) throw PreconditionError("--L needs --interval a b");
        emit(to_json(desubstitute_L(spec, which, PositionSet::interval(de_interval[0], de_interval[1]),
                                    de_c.N, de_c.work())),
             de_c);
      } else {
        ExtractionResult ex = extract(spec, de_c.N, de_c.work());
        Json j;
        j["extraction"] = to_json(ex);
        j["desubstitution"] = to_json(desubstitute(spec, ex, de_c.N, de_c.work()));
        j["inner"] = to_json(ex.inner);
        emit(j, de_c);
      }
    } else if (*mr) {
      const BiWordSpec spec = load_spec(mr_c.spec_file);
      emit(to_json(modulo_recurrent_upto(spec, K, mr_c.N, mr_c.radius, mr_c.work())), mr_c);
    } else if (*sp) {
      const BiWordSpec spec = load_spec(sp_c.spec_file);
      const DensityBudget budget(eta_base, eta_jumps, eta_mul, eta_add);
      SparseReport r = block ? sparse_block_attractor(spec, budget, sp_c.N, sp_c.radius, sp_c.work())
                             : sparse_attractor(spec, budget, sp_c.N, sp_c.radius, sp_c.work());
      emit(to_json(r), sp_c);
    } else if (*ca) {
      const BiWordSpec spec = load_spec(ca_c.spec_file);
      const Position radius = ca_c.radius > 0 ? ca_c.radius : 2000;
      auto rule = periodizing_rule(spec, parse_word(ca_w), ca_k, radius, ca_c.work());
      Json j;
      j["w"] = ca_w;
      j["k"] = ca_k;
      j["occurrences"] = to_json(occ_mod(spec, parse_word(ca_w), ca_k, radius, ca_c.work()));
      if (!rule) {
        j["rule"] = nullptr;
        j["reason"] = "occurrence residues are empty or all of Z/kZ";
      } else {
        const Window out = apply_sliding_block(spec, rule->rule, range[0], range[1], ca_c.work());
        j["rule"] = to_json(*rule);
        j["output"] = to_json(out);
      }
      emit(j, ca_c);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
