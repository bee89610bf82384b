#include "folcoh/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "folcoh/cohomology.hpp"
#include "folcoh/errors.hpp"
#include "folcoh/relative.hpp"

namespace folcoh {
namespace catalog {

namespace {

LieAlgebra abelian(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  return make_algebra("abelian" + std::to_string(n), std::move(names));
}

LieAlgebra heisenberg3() {
  LieAlgebra g = make_algebra("heisenberg3", {"X", "Y", "Z"});
  set_bracket(g, 0, 1, {Scalar(0), Scalar(0), Scalar(1)});
  return g;
}

LieAlgebra sl2() {
  LieAlgebra g = make_algebra("sl2", {"X", "Y", "Z"});
  set_bracket(g, 0, 1, {Scalar(0), Scalar(2), Scalar(0)});
  set_bracket(g, 0, 2, {Scalar(0), Scalar(0), Scalar(-2)});
  set_bracket(g, 1, 2, {Scalar(1), Scalar(0), Scalar(0)});
  return g;
}

LieAlgebra ga1() {
  LieAlgebra g = make_algebra("ga1", {"H", "S"});
  set_bracket(g, 0, 1, {Scalar(0), Scalar(1)});
  return g;
}

LieAlgebra su2() {
  LieAlgebra g = make_algebra("su2", {"E1", "E2", "E3"});
  set_bracket(g, 0, 1, {Scalar(0), Scalar(0), Scalar(1)});
  set_bracket(g, 1, 2, {Scalar(1), Scalar(0), Scalar(0)});
  set_bracket(g, 2, 0, {Scalar(0), Scalar(1), Scalar(0)});
  return g;
}

ReductivePair sl2_so2_pair() {
  ReductivePair pair;
  pair.name = "sl2_so2_pair";
  pair.g = sl2();
  pair.g.name = pair.name;
  pair.k_basis = {{Scalar(0), Scalar(1), Scalar(-1)}};
  pair.p_basis = {{Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(1)}};
  return pair;
}

ReductivePair ga1_trivial_pair() {
  ReductivePair pair;
  pair.name = "ga1_trivial_pair";
  pair.g = ga1();
  pair.g.name = pair.name;
  pair.p_basis = {{Scalar(1), Scalar(0)}, {Scalar(0), Scalar(1)}};
  return pair;
}

using Perm = std::vector<std::size_t>;

Perm compose(const Perm& f, const Perm& g) {
  Perm r(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) r[x] = f[g[x]];
  return r;
}

// all permutations of {0..n-1} in lexicographic order; the identity is first
FiniteGroup symmetric_group(std::size_t n) {
  std::vector<Perm> perms;
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  const auto index_of = [&perms](const Perm& q) {
    return static_cast<std::size_t>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };

  FiniteGroup g;
  g.name = "s" + std::to_string(n) + "_table";
  g.order = perms.size();
  g.identity = 0;
  g.table.assign(g.order, std::vector<std::size_t>(g.order));
  for (std::size_t i = 0; i < g.order; ++i)
    for (std::size_t j = 0; j < g.order; ++j) g.table[i][j] = index_of(compose(perms[i], perms[j]));
  for (const Perm& q : perms) {
    Matrix m(n, n);
    for (std::size_t x = 0; x < n; ++x) m(q[x], x) = 1;
    g.action.push_back(m);
  }
  return g;
}

FoliationProfile carriere_default() {
  Matrix a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = 1;
  a(1, 0) = 1;
  a(1, 1) = 1;
  FoliationProfile profile = carriere_profile(a);
  profile.name = "carriere_default";
  return profile;
}

CatalogEntry build(const std::string& name) {
  if (name == "abelian1")
    return {name, "abelian line", abelian(1), {{"betti", "1 1", "definition"}}};
  if (name == "abelian2")
    return {name, "abelian plane", abelian(2), {{"betti", "1 2 1", "definition"}}};
  if (name == "abelian3")
    return {name, "abelian 3-space", abelian(3), {{"betti", "1 3 3 1", "definition"}}};
  if (name == "abelian4")
    return {name, "abelian 4-space", abelian(4), {{"betti", "1 4 6 4 1", "definition"}}};
  if (name == "heisenberg3")
    return {name,
            "Heisenberg algebra, [X,Y] = Z",
            heisenberg3(),
            {{"betti", "1 2 2 1", "independent_oracle"}, {"unimodular", "true", "definition"}}};
  if (name == "sl2")
    return {name,
            "traceless 2x2 matrices, [X,Y] = 2Y, [X,Z] = -2Z, [Y,Z] = X",
            sl2(),
            {{"betti", "1 0 0 1", "worked_example"}, {"unimodular", "true", "definition"}}};
  if (name == "ga1")
    return {name,
            "affine transformations of the line, [H,S] = S",
            ga1(),
            {{"betti", "1 1 0", "independent_oracle"},
             {"modular_character", "1 0", "worked_example"},
             {"unimodular", "false", "worked_example"}}};
  if (name == "su2")
    return {name,
            "rotation algebra, cyclic brackets",
            su2(),
            {{"betti", "1 0 0 1", "independent_oracle"}, {"unimodular", "true", "definition"}}};
  if (name == "sl2_so2_pair")
    return {name,
            "sl2 with rotation isotropy, k = span(Y-Z), p = span(X, Y+Z)",
            sl2_so2_pair(),
            {{"relative_betti", "1 0 1", "worked_example"},
             {"h0_dual_twist_dim", "1", "worked_example"},
             {"duality_match", "true", "worked_example"}}};
  if (name == "ga1_trivial_pair")
    return {name,
            "affine line algebra with trivial isotropy",
            ga1_trivial_pair(),
            {{"relative_betti", "1 1 0", "independent_oracle"},
             {"h0_dual_twist_dim", "0", "independent_oracle"},
             {"duality_match", "true", "independent_oracle"}}};
  if (name == "s3_table")
    return {name,
            "symmetric group on 3 letters with its permutation action",
            symmetric_group(3),
            {{"order", "6", "definition"}, {"average_rank", "1", "independent_oracle"}}};
  if (name == "s4_table")
    return {name,
            "symmetric group on 4 letters with its permutation action",
            symmetric_group(4),
            {{"order", "24", "definition"}, {"average_rank", "1", "independent_oracle"}}};
  if (name == "carriere_default")
    return {name,
            "linear flow on the hyperbolic torus bundle of [[2,1],[1,1]]",
            carriere_default(),
            {{"verdict", "ManifoldFibers", "worked_example"},
             {"period_rank", "1", "worked_example"},
             {"period_generator", "log_lambda", "worked_example"}}};
  throw ValidationError("UnknownName", "no catalog entry named '" + name + "'");
}

std::string size_list(const std::vector<std::size_t>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << " ";
    out << xs[i];
  }
  return out.str();
}

std::string scalar_list(const Vec& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << " ";
    out << rat_str(xs[i]);
  }
  return out.str();
}

} // namespace

std::vector<std::string> list() {
  return {"abelian1", "abelian2",     "abelian3",     "abelian4",         "heisenberg3",
          "sl2",      "ga1",          "su2",          "sl2_so2_pair",     "ga1_trivial_pair",
          "s3_table", "s4_table",     "carriere_default"};
}

CatalogEntry get(const std::string& name) {
  CatalogEntry entry = build(name);
  if (const auto* g = std::get_if<LieAlgebra>(&entry.payload)) {
    validate_algebra(*g);
  } else if (const auto* pair = std::get_if<ReductivePair>(&entry.payload)) {
    validate_reductive_pair(*pair);
  } else if (const auto* grp = std::get_if<FiniteGroup>(&entry.payload)) {
    validate_group(*grp);
  } else if (const auto* profile = std::get_if<FoliationProfile>(&entry.payload)) {
    if (profile->periods) validate_period_group(*profile->periods);
  }
  return entry;
}

std::string evaluate_expected(const CatalogEntry& entry, const std::string& quantity) {
  if (const auto* g = std::get_if<LieAlgebra>(&entry.payload)) {
    if (quantity == "betti") return size_list(betti(*g, trivial_module(g->dim)).b);
    if (quantity == "unimodular") return modular_character(*g).unimodular ? "true" : "false";
    if (quantity == "modular_character") return scalar_list(modular_character(*g).chi);
  } else if (const auto* pair = std::get_if<ReductivePair>(&entry.payload)) {
    if (quantity == "relative_betti")
      return size_list(relative_betti(*pair, trivial_gk(*pair)).b);
    if (quantity == "h0_dual_twist_dim")
      return std::to_string(
          h0_fixed_points(*pair, dual_gk(hazewinkel_twist(*pair, trivial_gk(*pair)))).dim);
    if (quantity == "duality_match") {
      const DualityReport rep = duality_check(*pair, trivial_gk(*pair));
      return rep.all_degrees_match && rep.corollary_match ? "true" : "false";
    }
  } else if (const auto* grp = std::get_if<FiniteGroup>(&entry.payload)) {
    if (quantity == "order") return std::to_string(grp->order);
    if (quantity == "average_rank") return std::to_string(average_projector(*grp).rank());
  } else if (const auto* profile = std::get_if<FoliationProfile>(&entry.payload)) {
    if (quantity == "verdict") return verdict_kind_name(unimodularity_verdict(*profile).kind);
    if (quantity == "period_rank" && profile->periods)
      return std::to_string(q_rank(*profile->periods));
    if (quantity == "period_generator" && profile->periods) {
      const auto rep = is_discrete(*profile->periods);
      if (rep.generator) return format_period(*profile->periods, *rep.generator);
    }
  }
  throw Error("catalog entry '" + entry.name + "' has no evaluator for '" + quantity + "'");
}

} // namespace catalog
} // namespace folcoh
