#pragma once

#include <optional>
#include <string>
#include <vector>

#include "folcoh/matrix.hpp"
#include "folcoh/rational.hpp"

namespace folcoh {

/// A real constant referenced by name and assumed rationally independent of
/// the other declared constants. The note is free-form documentation, e.g.
/// the minimal polynomial pinning down an algebraic number.
struct NamedConstant {
  std::string name;
  std::string note;

  bool operator==(const NamedConstant&) const = default;
};

/// Finitely generated subgroup of the reals, written formally: each generator
/// is a rational combination of the declared constants.
struct PeriodGroup {
  std::vector<NamedConstant> constants;
  std::vector<Vec> generators;

  bool operator==(const PeriodGroup&) const = default;
};

/// Throws ValidationError kinds NoConstants, DuplicateConstant,
/// DimensionMismatch.
void validate_period_group(const PeriodGroup& p);

/// Rank over the rationals of the generator list.
std::size_t q_rank(const PeriodGroup& p);

/// A subgroup of the reals with finitely many generators is discrete exactly
/// when its rational span is at most a line. Rank one pins down a cyclic
/// generator: the gcd of the rational multipliers along that line.
struct DiscretenessReport {
  std::size_t rank = 0;
  bool discrete = false;
  std::optional<Vec> generator;
};
DiscretenessReport is_discrete(const PeriodGroup& p);

/// Human-readable form of a period vector, e.g. "log_lambda" or "(1/21)*c".
std::string format_period(const PeriodGroup& p, const Vec& coeffs);

/// Hypothesis bundle for the fibration and unimodularity verdicts. The flags
/// describe the transverse model group, the holonomy closure and its identity
/// component, and the isotropy group; they are trusted inputs.
struct FoliationProfile {
  std::string name;
  bool g0_unimodular = false;
  bool gamma_closure_unimodular = false;
  bool gamma_identity_unimodular = false;
  bool k_compact = false;
  bool k_strongly_unimodular = false;
  bool fibers_finite_components = false;
  bool manifold_compact = false;
  std::optional<PeriodGroup> periods;

  bool operator==(const FoliationProfile&) const = default;
};

enum class VerdictKind {
  FoliationUnimodular,
  ManifoldFibers,
  LeafClosuresFiber,
  BlumenthalBundleFibers,
  HypothesesNotMet,
};

std::string verdict_kind_name(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::HypothesesNotMet;
  std::string certificate;
};

/// Applies the unimodularity criterion: with a compact manifold and compact
/// isotropy, the foliation is unimodular when the model group and the
/// holonomy closure are unimodular, the isotropy is strongly unimodular, and
/// the developing-map fibers have finitely many components. When the
/// criterion fails the profile is handed to the fibration trichotomy.
Verdict unimodularity_verdict(const FoliationProfile& profile);

/// Decides which space fibers over the circle: the manifold when the model
/// group is not unimodular, the leaf closures when the holonomy closure and
/// its identity component are both non-unimodular, the isotropy bundle total
/// space when only the identity component is unimodular.
Verdict trichotomy_verdict(const FoliationProfile& profile);

/// Profile of the linear flow on the hyperbolic torus bundle attached to an
/// integer matrix with determinant one and trace above two. The transverse
/// model is the affine group of the line, so the model-group flag comes from
/// its modular character; the period group is generated by the log of the
/// dominant eigenvalue, kept symbolic with its minimal polynomial recorded.
/// Throws ValidationError kinds NotUnimodularMatrix, NotHyperbolic.
FoliationProfile carriere_profile(const Matrix& a);

} // namespace folcoh
