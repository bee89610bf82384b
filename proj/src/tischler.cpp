#include "folcoh/tischler.hpp"

#include <set>
#include <sstream>

#include "folcoh/errors.hpp"
#include "folcoh/lie_algebra.hpp"

namespace folcoh {

void validate_period_group(const PeriodGroup& p) {
  if (p.constants.empty()) throw ValidationError("NoConstants", "period group declares no constants");
  std::set<std::string> names;
  for (const auto& c : p.constants)
    if (!names.insert(c.name).second)
      throw ValidationError("DuplicateConstant", "constant '" + c.name + "' declared twice");
  for (const Vec& g : p.generators)
    if (g.size() != p.constants.size())
      throw ValidationError("DimensionMismatch", "generator length does not match the constant list");
}

std::size_t q_rank(const PeriodGroup& p) {
  validate_period_group(p);
  if (p.generators.empty()) return 0;
  return Matrix::from_rows(p.constants.size(), p.generators).rank();
}

DiscretenessReport is_discrete(const PeriodGroup& p) {
  validate_period_group(p);
  DiscretenessReport rep;
  std::vector<Vec> nonzero;
  for (const Vec& g : p.generators)
    if (!vec_is_zero(g)) nonzero.push_back(g);
  if (nonzero.empty()) {
    rep.rank = 0;
    rep.discrete = true;
    return rep;
  }
  Matrix m = Matrix::from_rows(p.constants.size(), nonzero);
  std::vector<std::size_t> pivots;
  const Matrix r = m.rref(&pivots);
  rep.rank = pivots.size();
  rep.discrete = rep.rank <= 1;
  if (rep.rank == 1) {
    // every generator is a rational multiple of the pivot direction; the
    // group they generate is cyclic on the gcd of those multipliers
    const Vec direction = r.row(0);
    const std::size_t lead = pivots[0];
    Scalar g = 0;
    for (const Vec& v : nonzero) g = rat_gcd(g, v[lead]);
    rep.generator = vec_scale(g, direction);
  }
  return rep;
}

std::string format_period(const PeriodGroup& p, const Vec& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!first) out << " + ";
    if (coeffs[i] != 1) out << "(" << rat_str(coeffs[i]) << ")*";
    out << p.constants[i].name;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

std::string verdict_kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::FoliationUnimodular: return "FoliationUnimodular";
    case VerdictKind::ManifoldFibers: return "ManifoldFibers";
    case VerdictKind::LeafClosuresFiber: return "LeafClosuresFiber";
    case VerdictKind::BlumenthalBundleFibers: return "BlumenthalBundleFibers";
    case VerdictKind::HypothesesNotMet: return "HypothesesNotMet";
  }
  return "HypothesesNotMet";
}

namespace {

std::string period_note(const FoliationProfile& profile) {
  if (!profile.periods) return "";
  const DiscretenessReport rep = is_discrete(*profile.periods);
  std::ostringstream out;
  if (rep.generator)
    out << "; period group discrete, generated by " << format_period(*profile.periods, *rep.generator);
  else if (rep.discrete)
    out << "; period group trivial";
  else
    out << "; period group dense (rational rank " << rep.rank << ")";
  return out.str();
}

} // namespace

Verdict unimodularity_verdict(const FoliationProfile& profile) {
  if (!profile.manifold_compact || !profile.k_compact)
    return {VerdictKind::HypothesesNotMet,
            "standing hypotheses not met: needs a compact manifold and a compact isotropy group"};
  if (profile.g0_unimodular && profile.gamma_closure_unimodular && profile.k_strongly_unimodular &&
      profile.fibers_finite_components)
    return {VerdictKind::FoliationUnimodular,
            "unimodularity criterion: model group and holonomy closure unimodular, isotropy strongly "
            "unimodular, developing-map fibers with finitely many components"};
  return trichotomy_verdict(profile);
}

Verdict trichotomy_verdict(const FoliationProfile& profile) {
  if (!profile.manifold_compact || !profile.k_compact || !profile.fibers_finite_components)
    return {VerdictKind::HypothesesNotMet,
            "standing hypotheses not met: needs a compact manifold, a compact isotropy group, and "
            "developing-map fibers with finitely many components"};
  if (!profile.g0_unimodular)
    return {VerdictKind::ManifoldFibers,
            "model group not unimodular: the manifold fibers over the circle" + period_note(profile)};
  if (!profile.gamma_closure_unimodular && !profile.gamma_identity_unimodular)
    return {VerdictKind::LeafClosuresFiber,
            "holonomy closure and its identity component both non-unimodular: leaf closures fiber over "
            "the circle"};
  if (!profile.gamma_closure_unimodular)
    return {VerdictKind::BlumenthalBundleFibers,
            "holonomy closure non-unimodular with unimodular identity component: the isotropy bundle "
            "total space fibers over the circle"};
  return {VerdictKind::HypothesesNotMet,
          "every group in the chain is unimodular: the fibration trichotomy does not apply, use the "
          "unimodularity criterion"};
}

FoliationProfile carriere_profile(const Matrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw Error("expected a 2 by 2 matrix");
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (boost::multiprecision::denominator(a(i, j)) != 1)
        throw Error("expected integer matrix entries");
  const Scalar det = a.determinant();
  if (det != 1)
    throw ValidationError("NotUnimodularMatrix", "matrix determinant is " + rat_str(det) + ", not 1");
  const Scalar tr = a(0, 0) + a(1, 1);
  if (tr <= 2)
    throw ValidationError("NotHyperbolic", "matrix trace is " + rat_str(tr) + ", needs trace above 2");

  // transverse model: the affine group of the line, with bracket [H,S] = S
  LieAlgebra ga = make_algebra("ga1", {"H", "S"});
  set_bracket(ga, 0, 1, {Scalar(0), Scalar(1)});
  validate_algebra(ga);

  FoliationProfile profile;
  profile.name = "carriere";
  profile.g0_unimodular = modular_character(ga).unimodular;
  profile.gamma_closure_unimodular = true;
  profile.gamma_identity_unimodular = true;
  profile.k_compact = true;
  profile.k_strongly_unimodular = true;
  profile.fibers_finite_components = true;
  profile.manifold_compact = true;

  PeriodGroup periods;
  periods.constants.push_back(
      {"log_lambda", "lambda is the dominant eigenvalue, minimal polynomial x^2-" + rat_str(tr) + "x+1"});
  periods.generators.push_back({Scalar(1)});
  profile.periods = periods;
  return profile;
}

} // namespace folcoh
