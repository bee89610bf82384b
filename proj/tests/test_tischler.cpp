#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "folcoh/errors.hpp"
#include "folcoh/tischler.hpp"
#include "oracles.hpp"

using namespace folcoh;

namespace {

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.kind();
  }
  return "";
}

PeriodGroup over(std::vector<std::string> constant_names, std::vector<Vec> gens) {
  PeriodGroup p;
  for (auto& n : constant_names) p.constants.push_back({std::move(n), ""});
  p.generators = std::move(gens);
  return p;
}

Matrix int_matrix(long long a, long long b, long long c, long long d) {
  Matrix m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

FoliationProfile all_true_profile() {
  FoliationProfile p;
  p.name = "sample";
  p.g0_unimodular = true;
  p.gamma_closure_unimodular = true;
  p.gamma_identity_unimodular = true;
  p.k_compact = true;
  p.k_strongly_unimodular = true;
  p.fibers_finite_components = true;
  p.manifold_compact = true;
  return p;
}

FoliationProfile profile_from_bits(unsigned bits) {
  FoliationProfile p;
  p.g0_unimodular = bits & 1u;
  p.gamma_closure_unimodular = bits & 2u;
  p.gamma_identity_unimodular = bits & 4u;
  p.k_strongly_unimodular = bits & 8u;
  p.fibers_finite_components = bits & 16u;
  p.k_compact = bits & 32u;
  p.manifold_compact = bits & 64u;
  return p;
}

// Answer table rebuilt from scratch, branching on the unimodular pair first.
VerdictKind expected_kind(const FoliationProfile& p) {
  if (!p.manifold_compact || !p.k_compact) return VerdictKind::HypothesesNotMet;
  if (p.g0_unimodular && p.gamma_closure_unimodular) {
    if (p.k_strongly_unimodular && p.fibers_finite_components)
      return VerdictKind::FoliationUnimodular;
    return VerdictKind::HypothesesNotMet;
  }
  if (!p.fibers_finite_components) return VerdictKind::HypothesesNotMet;
  if (!p.g0_unimodular) return VerdictKind::ManifoldFibers;
  if (!p.gamma_identity_unimodular) return VerdictKind::LeafClosuresFiber;
  return VerdictKind::BlumenthalBundleFibers;
}

} // namespace

TEST_CASE("period group validation") {
  CHECK_NOTHROW(validate_period_group(over({"log_lambda"}, {{Scalar(1)}})));
  CHECK(kind_of([] { validate_period_group(over({}, {})); }) == "NoConstants");
  CHECK(kind_of([] { validate_period_group(over({"c", "c"}, {})); }) == "DuplicateConstant");
  CHECK(kind_of([] {
          validate_period_group(over({"a", "b"}, {{Scalar(1)}}));
        }) == "DimensionMismatch");
}

TEST_CASE("rational rank of a period group") {
  CHECK(q_rank(over({"log_lambda"}, {{Scalar(1)}, {Scalar(2)}})) == 1);
  CHECK(q_rank(over({"1", "log_lambda"},
                    {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}})) == 2);
  CHECK(q_rank(over({"c"}, {})) == 0);
  CHECK(q_rank(over({"a", "b", "c"}, {{Scalar(0), Scalar(0), Scalar(0)}})) == 0);
}

TEST_CASE("rank is stable under generator moves") {
  oracle::RatGen gen(417);
  for (int trial = 0; trial < 20; ++trial) {
    PeriodGroup p = over({"a", "b", "c"}, {});
    for (int i = 0; i < 4; ++i) p.generators.push_back(gen.vec(3));
    const std::size_t r = q_rank(p);

    PeriodGroup swapped = p;
    std::swap(swapped.generators[0], swapped.generators[2]);
    CHECK(q_rank(swapped) == r);

    PeriodGroup scaled = p;
    scaled.generators[1] = vec_scale(Scalar(-3, 2), scaled.generators[1]);
    CHECK(q_rank(scaled) == r);

    PeriodGroup sheared = p;
    sheared.generators[0] = vec_add(sheared.generators[0], vec_scale(Scalar(2), sheared.generators[3]));
    CHECK(q_rank(sheared) == r);

    PeriodGroup padded = p;
    padded.generators.push_back(vec_sub(p.generators[0], vec_scale(Scalar(5), p.generators[1])));
    CHECK(q_rank(padded) == r);
  }
}

TEST_CASE("discreteness and the cyclic generator") {
  const auto multiples = over({"log_lambda"}, {{Scalar(1)}, {Scalar(2)}, {Scalar(5)}});
  const auto rep = is_discrete(multiples);
  CHECK(rep.rank == 1);
  CHECK(rep.discrete);
  REQUIRE(rep.generator.has_value());
  CHECK(*rep.generator == Vec{Scalar(1)});
  CHECK(format_period(multiples, *rep.generator) == "log_lambda");

  const auto dense = over({"1", "log_lambda"}, {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}});
  const auto dense_rep = is_discrete(dense);
  CHECK(dense_rep.rank == 2);
  CHECK(!dense_rep.discrete);
  CHECK(!dense_rep.generator.has_value());

  const auto fractions = over({"c"}, {{Scalar(2, 3)}, {Scalar(5, 7)}});
  const auto frac_rep = is_discrete(fractions);
  CHECK(frac_rep.discrete);
  REQUIRE(frac_rep.generator.has_value());
  CHECK(*frac_rep.generator == Vec{Scalar(1, 21)});
  CHECK(format_period(fractions, *frac_rep.generator) == "(1/21)*c");

  const auto trivial = is_discrete(over({"c"}, {{Scalar(0)}}));
  CHECK(trivial.rank == 0);
  CHECK(trivial.discrete);
  CHECK(!trivial.generator.has_value());

  // a line through two constants still carries a cyclic generator
  const auto diagonal = over({"a", "b"}, {{Scalar(1), Scalar(2)}, {Scalar(3), Scalar(6)}});
  const auto diag_rep = is_discrete(diagonal);
  REQUIRE(diag_rep.generator.has_value());
  CHECK(*diag_rep.generator == Vec{Scalar(1), Scalar(2)});
  CHECK(format_period(diagonal, *diag_rep.generator) == "a + (2)*b");
}

TEST_CASE("every generator divides by the cyclic generator") {
  using boost::multiprecision::denominator;
  oracle::RatGen gen(88);
  for (int trial = 0; trial < 25; ++trial) {
    Vec direction = gen.vec(2);
    if (vec_is_zero(direction)) direction = {Scalar(1), Scalar(0)};
    PeriodGroup p = over({"a", "b"}, {});
    for (int i = 0; i < 4; ++i) {
      Scalar q = gen.scalar();
      p.generators.push_back(vec_scale(q, direction));
    }
    const auto rep = is_discrete(p);
    CHECK(rep.discrete);
    if (!rep.generator) continue;
    std::size_t lead = 0;
    while ((*rep.generator)[lead] == 0) ++lead;
    for (const Vec& g : p.generators) {
      const Scalar multiplier = g[lead] / (*rep.generator)[lead];
      CHECK(denominator(multiplier) == 1);
      CHECK(vec_scale(multiplier, *rep.generator) == g);
    }
  }
}

TEST_CASE("format of period vectors") {
  const auto p = over({"a", "b", "c"}, {});
  CHECK(format_period(p, {Scalar(0), Scalar(0), Scalar(0)}) == "0");
  CHECK(format_period(p, {Scalar(1), Scalar(0), Scalar(1)}) == "a + c");
  CHECK(format_period(p, {Scalar(-1, 2), Scalar(0), Scalar(3)}) == "(-1/2)*a + (3)*c");
}

TEST_CASE("unimodularity criterion") {
  const auto yes = unimodularity_verdict(all_true_profile());
  CHECK(yes.kind == VerdictKind::FoliationUnimodular);
  CHECK(!yes.certificate.empty());

  auto open_manifold = all_true_profile();
  open_manifold.manifold_compact = false;
  CHECK(unimodularity_verdict(open_manifold).kind == VerdictKind::HypothesesNotMet);

  auto noncompact_k = all_true_profile();
  noncompact_k.k_compact = false;
  CHECK(unimodularity_verdict(noncompact_k).kind == VerdictKind::HypothesesNotMet);

  auto affine_model = all_true_profile();
  affine_model.g0_unimodular = false;
  CHECK(unimodularity_verdict(affine_model).kind == VerdictKind::ManifoldFibers);
}

TEST_CASE("fibration trichotomy branches") {
  auto p = all_true_profile();
  p.g0_unimodular = false;
  const auto manifold = trichotomy_verdict(p);
  CHECK(manifold.kind == VerdictKind::ManifoldFibers);
  CHECK(manifold.certificate.find("fibers over the circle") != std::string::npos);

  p = all_true_profile();
  p.gamma_closure_unimodular = false;
  p.gamma_identity_unimodular = false;
  CHECK(trichotomy_verdict(p).kind == VerdictKind::LeafClosuresFiber);

  p = all_true_profile();
  p.gamma_closure_unimodular = false;
  CHECK(trichotomy_verdict(p).kind == VerdictKind::BlumenthalBundleFibers);

  // with nothing non-unimodular the trichotomy has nothing to say
  CHECK(trichotomy_verdict(all_true_profile()).kind == VerdictKind::HypothesesNotMet);

  p = all_true_profile();
  p.g0_unimodular = false;
  p.fibers_finite_components = false;
  CHECK(trichotomy_verdict(p).kind == VerdictKind::HypothesesNotMet);
}

TEST_CASE("the four outcomes partition the unimodularity cube") {
  std::size_t seen[4] = {0, 0, 0, 0};
  for (unsigned bits = 0; bits < 8; ++bits) {
    auto p = all_true_profile();
    p.g0_unimodular = bits & 1u;
    p.gamma_closure_unimodular = bits & 2u;
    p.gamma_identity_unimodular = bits & 4u;
    const auto v = unimodularity_verdict(p);
    CHECK(v.kind != VerdictKind::HypothesesNotMet);
    switch (v.kind) {
      case VerdictKind::FoliationUnimodular: ++seen[0]; break;
      case VerdictKind::ManifoldFibers: ++seen[1]; break;
      case VerdictKind::LeafClosuresFiber: ++seen[2]; break;
      case VerdictKind::BlumenthalBundleFibers: ++seen[3]; break;
      default: break;
    }
    CHECK(v.kind == expected_kind(p));
  }
  CHECK(seen[0] == 2); // both gamma flags free once g0 and closure hold
  CHECK(seen[1] == 4);
  CHECK(seen[2] == 1);
  CHECK(seen[3] == 1);
}

TEST_CASE("exactly one verdict fires on every flag combination") {
  for (unsigned bits = 0; bits < 128; ++bits) {
    const auto p = profile_from_bits(bits);
    const auto v = unimodularity_verdict(p);
    CHECK(v.kind == expected_kind(p));
    CHECK(!v.certificate.empty());
    // repeated calls are deterministic
    CHECK(unimodularity_verdict(p).kind == v.kind);
    CHECK(unimodularity_verdict(p).certificate == v.certificate);
    // the trichotomy agrees whenever it applies
    if (v.kind == VerdictKind::ManifoldFibers || v.kind == VerdictKind::LeafClosuresFiber ||
        v.kind == VerdictKind::BlumenthalBundleFibers)
      CHECK(trichotomy_verdict(p).kind == v.kind);
    CHECK(trichotomy_verdict(p).kind != VerdictKind::FoliationUnimodular);
  }
}

TEST_CASE("hyperbolic torus bundle profile") {
  const auto profile = carriere_profile(int_matrix(2, 1, 1, 1));
  CHECK(!profile.g0_unimodular);
  CHECK(profile.gamma_closure_unimodular);
  CHECK(profile.gamma_identity_unimodular);
  CHECK(profile.k_compact);
  CHECK(profile.k_strongly_unimodular);
  CHECK(profile.fibers_finite_components);
  CHECK(profile.manifold_compact);
  REQUIRE(profile.periods.has_value());
  REQUIRE(profile.periods->constants.size() == 1);
  CHECK(profile.periods->constants[0].name == "log_lambda");
  CHECK(profile.periods->constants[0].note.find("x^2-3x+1") != std::string::npos);
  CHECK(profile.periods->generators == std::vector<Vec>{{Scalar(1)}});

  const auto rep = is_discrete(*profile.periods);
  CHECK(rep.rank == 1);
  CHECK(rep.discrete);
  REQUIRE(rep.generator.has_value());
  CHECK(format_period(*profile.periods, *rep.generator) == "log_lambda");

  const auto verdict = unimodularity_verdict(profile);
  CHECK(verdict.kind == VerdictKind::ManifoldFibers);
  CHECK(verdict.certificate.find("log_lambda") != std::string::npos);

  CHECK(carriere_profile(int_matrix(3, 1, 2, 1)).periods->constants[0].note.find("x^2-4x+1") !=
        std::string::npos);
}

TEST_CASE("profile construction rejects bad matrices") {
  CHECK(kind_of([] { carriere_profile(int_matrix(1, 1, 0, 1)); }) == "NotHyperbolic");
  CHECK(kind_of([] { carriere_profile(int_matrix(2, 1, 1, 0)); }) == "NotUnimodularMatrix");
  CHECK(kind_of([] { carriere_profile(int_matrix(0, -1, 1, 0)); }) == "NotHyperbolic");
  CHECK_THROWS_AS(carriere_profile(Matrix::identity(3)), Error);
  Matrix half = int_matrix(2, 1, 1, 1);
  half(0, 1) = Scalar(1, 2);
  CHECK_THROWS_AS(carriere_profile(half), Error);
}

TEST_CASE("every hyperbolic unimodular integer matrix fibers the manifold") {
  // random products of hyperbolic seeds stay in the family
  const std::vector<Matrix> seeds = {int_matrix(2, 1, 1, 1), int_matrix(1, 1, 1, 2),
                                     int_matrix(3, 1, 2, 1)};
  oracle::RatGen gen(9001);
  std::vector<Matrix> family = seeds;
  Matrix walk = seeds[0];
  for (int i = 0; i < 12; ++i) {
    walk = walk * seeds[static_cast<std::size_t>(gen.integer(0, 2))];
    family.push_back(walk);
  }
  for (long long k = 2; k <= 8; ++k) family.push_back(int_matrix(k, 1, k - 1, 1));

  for (const Matrix& a : family) {
    CHECK(a.determinant() == 1);
    CHECK(a(0, 0) + a(1, 1) > 2);
    const auto profile = carriere_profile(a);
    CHECK(unimodularity_verdict(profile).kind == VerdictKind::ManifoldFibers);
    CHECK(trichotomy_verdict(profile).kind == VerdictKind::ManifoldFibers);
    CHECK(is_discrete(*profile.periods).discrete);
  }
}
