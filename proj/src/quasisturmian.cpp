#include "strattr/quasisturmian.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "strattr/error.hpp"
#include "strattr/substitution.hpp"

namespace strattr {

// ---------------------------------------------------------------------------
// Rauzy graphs

std::optional<std::size_t> RauzyGraph::index_of(const Word& u) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), u);
  if (it == vertices.end() || *it != u) return std::nullopt;
  return static_cast<std::size_t>(it - vertices.begin());
}

RauzyGraph build_rauzy(const FactorSet& sample_n, const FactorSet& sample_n1) {
  if (sample_n1.length != sample_n.length + 1) {
    throw PreconditionError("Rauzy graph needs samples at lengths n and n+1");
  }
  RauzyGraph g;
  g.rank = sample_n.length;
  g.vertices.assign(sample_n.factors.begin(), sample_n.factors.end());
  g.out_degree.assign(g.vertices.size(), 0);
  g.in_degree.assign(g.vertices.size(), 0);
  for (const Word& f : sample_n1.factors) {
    Word u(f.begin(), f.end() - 1);
    Word v(f.begin() + 1, f.end());
    auto iu = g.index_of(u), iv = g.index_of(v);
    if (!iu || !iv) {
      throw PreconditionError("inconsistent sample: factor " + to_string(f) +
                              " has a length-" + std::to_string(g.rank) +
                              " block missing from the shorter sample");
    }
    g.edges.push_back({*iu, *iv, f.back()});
    ++g.out_degree[*iu];
    ++g.in_degree[*iv];
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.label) < std::tie(b.from, b.label);
  });
  return g;
}

std::size_t measure_n0(const ComplexityProfile& profile) {
  const std::size_t N = profile.counts.size();
  if (N < 2) throw PreconditionError("profile too short to measure n0");
  if (profile.at(N) != profile.at(N - 1) + 1) {
    throw PreconditionError("not quasi-Sturmian: p(" + std::to_string(N) + ") - p(" +
                            std::to_string(N - 1) + ") = " +
                            std::to_string(static_cast<long long>(profile.at(N)) -
                                           static_cast<long long>(profile.at(N - 1))));
  }
  std::size_t n0 = N - 1;
  while (n0 > 1 && profile.at(n0) == profile.at(n0 - 1) + 1) --n0;
  return n0;
}

Bispecial find_bispecial(const BiWordSpec& spec, std::size_t n0, std::size_t N,
                         const WorkCeiling& ceiling) {
  if (n0 < 1) throw PreconditionError("find_bispecial needs n0 >= 1");
  LanguageSample s = sample_language(spec, N + 1, 0, ceiling);
  const auto k = static_cast<long long>(s.counts[n0]) - static_cast<long long>(n0);
  FactorSet at_n = s.factors(n0);
  for (std::size_t n = n0; n <= N; ++n) {
    if (static_cast<long long>(s.counts[n]) != static_cast<long long>(n) + k) {
      throw PreconditionError("complexity is not n + " + std::to_string(k) + " at length " +
                              std::to_string(n));
    }
    FactorSet at_n1 = s.factors(n + 1);
    SpecialFactors sp = special_factors(at_n, at_n1);
    if (sp.left.size() != 1) {
      throw PreconditionError(std::to_string(sp.left.size()) +
                              " left-special factors at length " + std::to_string(n));
    }
    const Word& l = *sp.left.begin();
    if (sp.right.count(l)) return {n, l};
    at_n = std::move(at_n1);
  }
  throw PreconditionError("no bispecial <= " + std::to_string(N));
}

// ---------------------------------------------------------------------------
// Extraction

namespace {

bool oriented(const Substitution& phi, const Word& w) {
  for (Letter a : {Letter{0}, Letter{1}}) {
    Word ext = concat(w, phi.image(a));
    if (ext[ext.size() - w.size() - 1] != a) return false;
  }
  return true;
}

std::vector<std::size_t> window_profile(WordView w, std::size_t N) {
  std::vector<std::size_t> out;
  std::unordered_set<std::string_view> seen;
  for (std::size_t n = 1; n <= N; ++n) {
    seen.clear();
    for (std::size_t i = 0; i + n <= w.size(); ++i) seen.insert(as_key(w.subspan(i, n)));
    out.push_back(seen.size());
  }
  return out;
}

}  // namespace

ExtractionResult extract_return_morphism(const BiWordSpec& spec, std::size_t n1, std::size_t N,
                                         const WorkCeiling& ceiling) {
  if (!spec.window_computable()) {
    throw SymbolicError("extraction needs windows; declared orbit points have none");
  }
  const std::size_t max_len = std::max(N, n1 + 1);
  LanguageSample s = sample_language(spec, max_len, 0, ceiling);
  RauzyGraph g = build_rauzy(s.factors(n1), s.factors(n1 + 1));

  std::optional<std::size_t> hub;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (g.out_degree[v] == 2 && g.in_degree[v] == 2 && !hub) {
      hub = v;
    } else if (g.out_degree[v] != 1 || g.in_degree[v] != 1) {
      throw PreconditionError("not quasi-Sturmian at this rank: vertex " +
                              to_string(g.vertices[v]) + " has degrees (in " +
                              std::to_string(g.in_degree[v]) + ", out " +
                              std::to_string(g.out_degree[v]) + ")");
    }
  }
  if (!hub) throw PreconditionError("not quasi-Sturmian at this rank: no branching vertex");

  std::vector<Word> loops;
  for (const auto& e : g.edges) {
    if (e.from != *hub) continue;
    Word label{e.label};
    std::size_t cur = e.to;
    for (std::size_t guard = 0; cur != *hub; ++guard) {
      if (guard > g.vertices.size()) throw InvariantViolation("Rauzy loop does not close");
      auto it = std::find_if(g.edges.begin(), g.edges.end(),
                             [cur](const auto& x) { return x.from == cur; });
      label.push_back(it->label);
      cur = it->to;
    }
    loops.push_back(std::move(label));
  }

  ExtractionResult r;
  r.w = g.vertices[*hub];
  r.n1 = n1;
  r.phi = Substitution({{0, loops[0]}, {1, loops[1]}});
  r.orientation_ok = oriented(r.phi, r.w);
  if (!r.orientation_ok) {
    Substitution swapped({{0, loops[1]}, {1, loops[0]}});
    if (oriented(swapped, r.w)) {
      r.phi = swapped;
      r.swapped = true;
      r.orientation_ok = true;
    }
  }
  r.certificate = is_return_morphism(r.phi, r.w);
  r.k = static_cast<Position>(loops[0].size() + loops[1].size()) -
        static_cast<Position>(r.w.size()) - 1;

  // Profile law p(n) = n + k for sampled n >= |w|.
  r.measured_offset = static_cast<Position>(s.counts[max_len]) - static_cast<Position>(max_len);
  r.k_matches = true;
  for (std::size_t n = std::max<std::size_t>(r.w.size(), 1); n <= max_len; ++n) {
    if (static_cast<Position>(s.counts[n]) != static_cast<Position>(n) + r.k) r.k_matches = false;
  }

  // Decode x between consecutive occurrence ends of w.
  const auto longest = static_cast<Position>(r.phi.max_image_length());
  r.radius = std::max<Position>(s.radius, 2048 * longest);
  const Window W = window(spec, -r.radius, r.radius, ceiling);
  const auto occ = occurrences(W.content, r.w);
  const auto wl = static_cast<Position>(r.w.size());
  Word letters;
  std::optional<std::size_t> zero_segment;
  Position zero_start = 0;
  for (std::size_t j = 0; j + 1 < occ.size(); ++j) {
    const Position a = W.first() + static_cast<Position>(occ[j]) + wl;
    const Position b = W.first() + static_cast<Position>(occ[j + 1]) + wl - 1;
    const Word seg = W.sub(a, b);
    if (seg == r.phi.image(0)) {
      letters.push_back(0);
    } else if (seg == r.phi.image(1)) {
      letters.push_back(1);
    } else {
      throw InvariantViolation("segment " + to_string(seg) + " at " + std::to_string(a) +
                               " is not a loop label");
    }
    if (a <= 0 && 0 <= b) {
      zero_segment = j;
      zero_start = a;
    }
  }
  if (!zero_segment) throw PreconditionError("no return-word segment covers index 0");
  r.m = -zero_start;
  r.inner = {-static_cast<Position>(*zero_segment), std::move(letters)};
  return r;
}

ExtractionResult extract(const BiWordSpec& spec, std::size_t N, const WorkCeiling& ceiling) {
  ComplexityProfile prof = factor_complexity_profile(spec, N, static_cast<Position>(N), ceiling);
  const std::size_t n0 = measure_n0(prof);
  Bispecial b = find_bispecial(spec, n0, N, ceiling);
  return extract_return_morphism(spec, b.n1, N, ceiling);
}

DesubstitutionReport desubstitute(const BiWordSpec& spec, const ExtractionResult& result,
                                  std::size_t N, const WorkCeiling& ceiling) {
  DesubstitutionReport rep;
  rep.N = N;
  Window img = apply(result.phi, result.inner);
  img.offset -= result.m;
  Window ref = window(spec, img.first(), img.last(), ceiling);
  if (ref.content != img.content) {
    auto diff = std::mismatch(ref.content.begin(), ref.content.end(), img.content.begin());
    throw InvariantViolation("round trip differs from the spec at position " +
                             std::to_string(img.first() + (diff.first - ref.content.begin())));
  }
  rep.round_trip = true;

  const Word& y = result.inner.content;
  rep.inner_profile = window_profile(y, N);
  rep.inner_complexity = true;
  rep.inner_aperiodic = true;
  rep.inner_balanced = true;
  for (std::size_t n = 1; n <= N; ++n) {
    if (rep.inner_profile[n - 1] != n + 1) rep.inner_complexity = false;
    if (n > 1 && rep.inner_profile[n - 1] <= rep.inner_profile[n - 2]) rep.inner_aperiodic = false;
    if (!is_balanced(factors(y, n)).balanced) rep.inner_balanced = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

// Smallest |t| (then smallest t) with [t, t+1] covering every factor of the
// window of length <= N through an occurrence inside the window.
std::optional<Position> span_one_position(const Window& y, std::size_t N, Position search) {
  struct Target {
    Position length;
    std::vector<Position> starts;
  };
  std::vector<Target> targets;
  for (std::size_t n = 1; n <= N; ++n) {
    const auto len = static_cast<Position>(n);
    std::map<std::string_view, std::vector<Position>> occ;
    for (Position t = y.first(); t + len - 1 <= y.last(); ++t) {
      occ[as_key(y.view(t, t + len - 1))].push_back(t);
    }
    for (auto& kv : occ) targets.push_back({len, std::move(kv.second)});
  }
  for (Position step = 0; step <= 2 * search; ++step) {
    const Position t = (step % 2 == 1) ? -(step + 1) / 2 : step / 2;
    bool ok = std::all_of(targets.begin(), targets.end(), [t](const Target& tg) {
      auto it = std::lower_bound(tg.starts.begin(), tg.starts.end(), t - tg.length + 1);
      return it != tg.starts.end() && *it <= t + 1;
    });
    if (ok) return t;
  }
  return std::nullopt;
}

void require_quasi_sturmian_profile(const BiWordSpec& spec, std::size_t N,
                                    const WorkCeiling& ceiling) {
  ComplexityProfile prof = factor_complexity_profile(spec, N, static_cast<Position>(N), ceiling);
  measure_n0(prof);
}

}  // namespace

QuasiSturmianSpan classify_qs_span(const BiWordSpec& spec, std::size_t N,
                                   const WorkCeiling& ceiling) {
  QuasiSturmianSpan out;
  if (spec.as<OrbitPoint>()) {
    require_quasi_sturmian_profile(spec, N, ceiling);
    out.span = SpanResult::infinite(
        "quasi-Sturmian orbit point that is not a shifted image of a characteristic word: "
        "span k or infinity, and finite span forces that shape");
    return out;
  }
  if (reduce_to_eventually_periodic(spec)) {
    throw PreconditionError("eventually periodic word is not quasi-Sturmian");
  }
  require_quasi_sturmian_profile(spec, N, ceiling);
  ExtractionResult ex = extract(spec, N, ceiling);
  DesubstitutionReport rep = desubstitute(spec, ex, N, ceiling);
  if (!rep.sturmian()) {
    throw PreconditionError("desubstituted word is not Sturmian up to length " +
                            std::to_string(N));
  }
  const Position search = std::min<Position>(64, static_cast<Position>(ex.inner.size()) / 4);
  auto t = span_one_position(ex.inner, N, search);
  out.extraction = ex;
  if (!t) {
    out.span = SpanResult::unknown_up_to(N);
    return out;
  }
  out.inner_attractor = PositionSet::interval(*t, *t + 1);
  PositionSet img = image_attractor(ex.inner, ex.phi, *out.inner_attractor);
  auto pts = img.positions();
  if (pts.size() <= ex.w.size()) {
    throw InvariantViolation("image of the inner attractor is not longer than w");
  }
  pts.resize(pts.size() - ex.w.size());
  for (Position& p : pts) p -= ex.m;
  PositionSet witness = PositionSet::finite(pts);
  if (witness.span() + 1 == static_cast<Position>(pts.size())) {
    witness = PositionSet::interval(witness.min(), witness.max());
  }
  CoverageReport cov = check_attractor(spec, witness, N, 0, ceiling);
  if (!cov.covered) {
    throw InvariantViolation("trimmed image " + witness.describe() + " misses factor " +
                             to_string(*cov.witness) + " at N = " + std::to_string(N));
  }
  out.span = SpanResult::finite(witness.span(), witness, N);
  return out;
}

const char* to_string(FiniteAttractorVerdict::Kind k) {
  switch (k) {
    case FiniteAttractorVerdict::Kind::bi_eventually_periodic:
      return "BiEventuallyPeriodic";
    case FiniteAttractorVerdict::Kind::characteristic_morphic_image:
      return "CharacteristicMorphicImage";
    case FiniteAttractorVerdict::Kind::no_finite_attractor:
      return "NoFiniteAttractor";
  }
  return "";
}

FiniteAttractorVerdict finite_attractor_classifier(const BiWordSpec& spec, std::size_t N,
                                                   const WorkCeiling& ceiling) {
  using Kind = FiniteAttractorVerdict::Kind;
  FiniteAttractorVerdict v;
  if (spec.as<OrbitPoint>()) {
    v.kind = Kind::no_finite_attractor;
    v.provenance = "theorem-derived";
    v.detail = "declared orbit point: not a shifted image of a characteristic word";
    return v;
  }
  v.provenance = "window-verified";

  auto periodic_verdict = [&](std::size_t period) {
    v.kind = Kind::bi_eventually_periodic;
    v.attractor = PositionSet::interval(0, static_cast<Position>(period) - 1);
    v.span = static_cast<Position>(period) - 1;
    v.validation = check_attractor(spec, *v.attractor, std::max<std::size_t>(N, 2 * period), 0,
                                   ceiling);
    v.detail = "purely periodic with period " + std::to_string(period);
  };

  if (auto reduced = reduce_to_eventually_periodic(spec)) {
    Normalization norm = normalize_eventually_periodic(spec);
    if (auto* pp = std::get_if<PurelyPeriodic>(&norm)) {
      periodic_verdict(pp->period);
      return v;
    }
    PeriodicAttractor pa = eventually_periodic_attractor(spec, std::nullopt, ceiling);
    v.kind = Kind::bi_eventually_periodic;
    v.attractor = pa.gamma;
    v.span = pa.span;
    v.validation = pa.validation;
    const auto& s = pa.structure;
    const std::size_t from = reduced->base.center.size() + s.p + s.q;
    const std::size_t upto = eventually_periodic_check_length(spec);
    ComplexityProfile prof = factor_complexity_profile(spec, upto, static_cast<Position>(upto), ceiling);
    bool law = true;
    for (std::size_t n = std::max<std::size_t>(from, 1); n <= upto; ++n) {
      if (static_cast<Position>(prof.at(n)) != static_cast<Position>(n) + pa.span) law = false;
    }
    v.complexity_law = law;
    v.detail = "eventually periodic, " + std::string(pa.conjugate_periods ? "conjugate" : "distinct") +
               " period words";
    return v;
  }

  ComplexityProfile prof = factor_complexity_profile(spec, N, static_cast<Position>(N), ceiling);
  if (prof.at(N) == prof.at(N - 1)) {
    LanguageSample s = sample_language(spec, N, 0, ceiling);
    periodic_verdict(periods(s.window.content).front());
    return v;
  }
  try {
    QuasiSturmianSpan q = classify_qs_span(spec, N, ceiling);
    if (q.span.kind != SpanResult::Kind::finite) {
      v.kind = Kind::no_finite_attractor;
      v.detail = "no span-one attractor of the desubstituted word found near 0";
      return v;
    }
    v.kind = Kind::characteristic_morphic_image;
    v.span = q.span.value;
    v.attractor = q.span.attractor;
    v.validation = check_attractor(spec, *v.attractor, N, 0, ceiling);
    v.complexity_law = q.extraction->k_matches && q.extraction->k == q.span.value;
    v.detail = "w = " + to_string(q.extraction->w) + ", phi = {0 -> " +
               to_string(q.extraction->phi.image(0)) + ", 1 -> " +
               to_string(q.extraction->phi.image(1)) + "}";
  } catch (const PreconditionError& e) {
    v.kind = Kind::no_finite_attractor;
    v.provenance = "theorem-derived";
    v.detail = std::string("not quasi-Sturmian at precision N: ") + e.what();
  }
  return v;
}

}  // namespace strattr
