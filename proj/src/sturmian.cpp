#include "strattr/sturmian.hpp"

#include <algorithm>

#include "strattr/error.hpp"
#include "strattr/substitution.hpp"

namespace strattr {

namespace {

void require_sturmian_profile(const LanguageSample& s, std::size_t upto) {
  for (std::size_t n = 1; n <= upto; ++n) {
    if (s.counts[n] != n + 1) {
      throw PreconditionError("not complexity n+1 at length " + std::to_string(n) + " (p = " +
                              std::to_string(s.counts[n]) + ")");
    }
  }
}

Word concat3(const Word& a, Word mid, const Word& b) {
  Word out = a;
  out.insert(out.end(), mid.begin(), mid.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

Span1Report verify_span1(const BiWordSpec& spec, std::size_t N, const WorkCeiling& ceiling) {
  LanguageSample sample = sample_language(spec, N + 1, 0, ceiling);
  require_sturmian_profile(sample, N + 1);

  Span1Report rep;
  rep.N = N;
  rep.radius = sample.radius;
  FactorSet at_n = sample.factors(0);
  for (std::size_t n = 0; n <= N; ++n) {
    FactorSet at_n1 = sample.factors(n + 1);
    SpecialFactors sp = special_factors(at_n, at_n1);
    if (sp.left.size() != 1 || sp.right.size() != 1) {
      throw PreconditionError("expected one left- and one right-special factor of length " +
                              std::to_string(n));
    }
    rep.l.push_back(*sp.left.begin());
    rep.r.push_back(*sp.right.begin());
    if (rep.r.back() != reversal(rep.l.back())) rep.reversal_law = false;
    at_n = std::move(at_n1);
  }

  const Window W = window(spec, -static_cast<Position>(N), static_cast<Position>(N) + 1, ceiling);
  const Word center = W.sub(0, 1);
  if (center == Word{0, 1}) {
    rep.variant = Variant::upper;
  } else if (center == Word{1, 0}) {
    rep.variant = Variant::lower;
  } else {
    rep.first_failure = 0;
  }
  if (rep.variant) {
    const Word mid = *rep.variant == Variant::upper ? Word{0, 1} : Word{1, 0};
    for (std::size_t n = 0; n <= N; ++n) {
      const auto p = static_cast<Position>(n);
      if (W.sub(-p, p + 1) != concat3(rep.r[n], mid, rep.l[n])) {
        rep.first_failure = n;
        break;
      }
    }
  }
  rep.pass = !rep.first_failure.has_value();
  if (!rep.pass) rep.variant.reset();
  rep.coverage = check_attractor(spec, PositionSet::interval(0, 1), N, 0, ceiling);
  rep.consistent = rep.pass == rep.coverage.covered;
  return rep;
}

PositionSet push_forward_attractor(const DirectiveSequence& d, Variant variant,
                                   const PositionSet& gamma, std::size_t depth,
                                   const WorkCeiling& ceiling) {
  std::vector<DirectiveSequence> ds{d};
  for (std::size_t t = 0; t < depth; ++t) ds.push_back(ds.back().drop_first());
  PositionSet g = gamma;
  for (std::size_t t = depth; t-- > 0;) {
    const BiWordSpec y = BiWordSpec::characteristic(ds[t + 1], variant);
    const Substitution L = d.at(t) == 0 ? Substitution::L0() : Substitution::L1();
    PositionSet img = image_attractor(y, L, g, ceiling);
    g = PositionSet::interval(img.min() - 1, img.max() - 1);
  }
  return g;
}

DescentTrace descend(const BiWordSpec& spec, const PositionSet& gamma, std::size_t N,
                     std::size_t budget, const WorkCeiling& ceiling) {
  if (gamma.kind() != PositionSet::Kind::interval) {
    throw PreconditionError("descend needs an interval attractor");
  }
  const CharacteristicSturmian* cs = spec.as<CharacteristicSturmian>();
  PositionSet g = gamma;
  if (!cs) {
    if (auto* sh = spec.as<Shifted>()) {
      cs = sh->inner->as<CharacteristicSturmian>();
      g = PositionSet::interval(gamma.min() + sh->m, gamma.max() + sh->m);
    }
  }
  if (!cs) throw PreconditionError("descend needs a (shifted) characteristic Sturmian spec");

  DescentTrace trace;
  DirectiveSequence d = cs->directive;
  for (std::size_t step = 0;; ++step) {
    if (g.span() <= 1) {
      trace.reached_span1 = true;
      break;
    }
    if (step == budget) {
      trace.budget_exhausted = true;
      break;
    }
    const int a = d.at(0);
    DirectiveSequence next = d.drop_first();
    const BiWordSpec y = BiWordSpec::characteristic(next, cs->variant);
    const PositionSet on_image = PositionSet::interval(g.min() + 1, g.max() + 1);
    DesubstitutionResult res = desubstitute_L(y, a, on_image, N, ceiling);

    DescentStep s;
    s.which = a;
    s.shift = 1;
    s.gamma_before = g;
    s.gamma_after = res.result;
    const Substitution L = a == 0 ? Substitution::L0() : Substitution::L1();
    s.pattern = window(apply(L, y), on_image.min(), on_image.max(), ceiling).content;
    s.validated = res.validation.covered;
    if (s.gamma_after.span() > s.gamma_before.span()) {
      throw InvariantViolation("descent increased the span from " +
                               std::to_string(s.gamma_before.span()) + " to " +
                               std::to_string(s.gamma_after.span()));
    }
    if (s.gamma_after.span() == s.gamma_before.span()) {
      s.stabilized = true;
      // 0^i 1 0^j for L0, 1^i 0 1^j for L1.
      const Letter lone = a == 0 ? 1 : 0;
      if (std::count(s.pattern.begin(), s.pattern.end(), lone) != 1) {
        throw InvariantViolation("span kept at " + std::to_string(g.span()) +
                                 " outside the 0^i10^j pattern: " + to_string(s.pattern));
      }
    }
    trace.steps.push_back(std::move(s));
    g = res.result;
    d = next;
  }
  return trace;
}

SpanResult classify_sturmian_span(const BiWordSpec& spec, std::size_t N,
                                  const WorkCeiling& ceiling) {
  LanguageSample sample = sample_language(spec, N, 0, ceiling);
  require_sturmian_profile(sample, N);
  if (spec.as<OrbitPoint>()) {
    return SpanResult::infinite(
        "Sturmian orbit point that is not a shifted characteristic word: span 1 or infinity, "
        "and span 1 forces a shifted characteristic word");
  }
  if (reduce_to_eventually_periodic(spec)) {
    throw PreconditionError("eventually periodic word is not Sturmian");
  }
  std::optional<PositionSet> candidate;
  if (spec.as<CharacteristicSturmian>()) {
    candidate = PositionSet::interval(0, 1);
  } else if (auto* sh = spec.as<Shifted>(); sh && sh->inner->as<CharacteristicSturmian>()) {
    candidate = PositionSet::interval(-sh->m, -sh->m + 1);
  }
  if (candidate) {
    CoverageReport cov = check_attractor(spec, *candidate, N, 0, ceiling);
    if (!cov.covered) {
      throw InvariantViolation("shifted characteristic word fails " + candidate->describe() +
                               " at N = " + std::to_string(N));
    }
    return SpanResult::finite(1, *candidate, N);
  }
  SpanResult r = min_span_bruteforce(spec, N, static_cast<Position>(N), Position{1}, ceiling);
  if (r.kind == SpanResult::Kind::finite) return r;
  return SpanResult::unknown_up_to(N);
}

ImageCheckReport characteristic_image_check(const BiWordSpec& spec, int a, std::size_t N,
                                            const WorkCeiling& ceiling) {
  const CharacteristicSturmian* cs = spec.as<CharacteristicSturmian>();
  if (!cs) throw PreconditionError("characteristic_image_check needs a characteristic spec");
  if (a != 0 && a != 1) throw PreconditionError("substitution index must be 0 or 1");
  const Substitution L = a == 0 ? Substitution::L0() : Substitution::L1();
  const BiWordSpec img = BiWordSpec::shifted(apply(L, spec), 1);
  ImageCheckReport out;
  out.expected = cs->variant;
  out.report = verify_span1(img, N, ceiling);
  out.pass = out.report.pass && out.report.variant == cs->variant;
  return out;
}

}  // namespace strattr
