#include "folcoh/commands.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "folcoh/catalog.hpp"
#include "folcoh/cohomology.hpp"
#include "folcoh/errors.hpp"
#include "folcoh/format.hpp"
#include "folcoh/relative.hpp"

namespace folcoh {

namespace {

using nlohmann::ordered_json;

// command-line misuse, reported like a parse failure (exit 2)
struct UsageError {
  std::string message;
};

struct Request {
  std::string command;
  std::vector<std::string> positionals;
  bool json = false;
  bool representatives = false;
};

Request parse_request(const std::vector<std::string>& args) {
  Request req;
  for (const std::string& a : args) {
    if (a == "--json")
      req.json = true;
    else if (a == "--representatives")
      req.representatives = true;
    else if (a.rfind("--", 0) == 0)
      throw UsageError{"unknown flag '" + a + "'"};
    else if (req.command.empty())
      req.command = a;
    else
      req.positionals.push_back(a);
  }
  if (req.command.empty()) throw UsageError{"no command given"};
  return req;
}

struct Loaded {
  std::string name;
  catalog::Payload payload;
};

Loaded load_payload(const std::string& ref) {
  const auto colon = ref.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == ref.size())
    throw UsageError{"payload reference must be <file>:<name> or catalog:<name>"};
  const std::string source = ref.substr(0, colon);
  const std::string name = ref.substr(colon + 1);
  if (source == "catalog") return {name, catalog::get(name).payload};
  std::ifstream in(source);
  if (!in) throw UsageError{"cannot open file '" + source + "'"};
  std::stringstream buffer;
  buffer << in.rdbuf();
  const Document doc = parse_document(buffer.str());
  for (const auto& g : doc.algebras)
    if (g.name == name) return {name, g};
  for (const auto& p : doc.pairs)
    if (p.name == name) return {name, p};
  for (const auto& g : doc.groups)
    if (g.name == name) return {name, g};
  for (const auto& p : doc.profiles)
    if (p.name == name) return {name, p};
  throw ValidationError("UnknownName", "no payload named '" + name + "' in " + source);
}

std::string payload_kind(const catalog::Payload& payload) {
  if (std::holds_alternative<LieAlgebra>(payload)) return "algebra";
  if (std::holds_alternative<ReductivePair>(payload)) return "pair";
  if (std::holds_alternative<FiniteGroup>(payload)) return "group";
  return "profile";
}

void validate_payload(const catalog::Payload& payload) {
  if (const auto* g = std::get_if<LieAlgebra>(&payload)) {
    validate_algebra(*g);
  } else if (const auto* pair = std::get_if<ReductivePair>(&payload)) {
    validate_reductive_pair(*pair);
  } else if (const auto* grp = std::get_if<FiniteGroup>(&payload)) {
    validate_group(*grp);
  } else if (const auto* profile = std::get_if<FoliationProfile>(&payload)) {
    if (profile->periods) validate_period_group(*profile->periods);
  }
}

const LieAlgebra& want_algebra(const Loaded& loaded) {
  const auto* g = std::get_if<LieAlgebra>(&loaded.payload);
  if (!g) throw Error("'" + loaded.name + "' is not an algebra");
  return *g;
}

const ReductivePair& want_pair(const Loaded& loaded) {
  const auto* p = std::get_if<ReductivePair>(&loaded.payload);
  if (!p) throw Error("'" + loaded.name + "' is not a reductive pair");
  return *p;
}

const FiniteGroup& want_group(const Loaded& loaded) {
  const auto* g = std::get_if<FiniteGroup>(&loaded.payload);
  if (!g) throw Error("'" + loaded.name + "' is not a finite group");
  return *g;
}

const FoliationProfile& want_profile(const Loaded& loaded) {
  const auto* p = std::get_if<FoliationProfile>(&loaded.payload);
  if (!p) throw Error("'" + loaded.name + "' is not a foliation profile");
  return *p;
}

std::string size_list(const std::vector<std::size_t>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << " ";
    out << xs[i];
  }
  return out.str();
}

std::string scalar_list(const Vec& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << " ";
    out << rat_str(v[i]);
  }
  return out.str();
}

std::string vec_group(const Vec& v) { return "(" + scalar_list(v) + ")"; }

ordered_json vec_json(const Vec& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json a = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vec_json(m.row(r)));
  return a;
}

struct Report {
  std::ostringstream text;
  ordered_json json;
};

void betti_report(Report& rep, const BettiTable& table, bool want_reps) {
  rep.text << size_list(table.b) << "\n";
  rep.json["betti"] = table.b;
  if (!want_reps) return;
  ordered_json reps = ordered_json::object();
  for (std::size_t r = 0; r < table.reps.size(); ++r) {
    ordered_json degree = ordered_json::array();
    for (const Vec& v : table.reps[r]) {
      rep.text << "rep " << r << " = " << vec_group(v) << "\n";
      degree.push_back(vec_json(v));
    }
    reps[std::to_string(r)] = degree;
  }
  rep.json["representatives"] = reps;
}

FiniteGroup with_default_action(const FiniteGroup& g) {
  if (!g.action.empty()) return g;
  // left-multiplication permutation matrices; exact and always available
  FiniteGroup out = g;
  for (std::size_t i = 0; i < g.order; ++i) {
    Matrix m(g.order, g.order);
    for (std::size_t j = 0; j < g.order; ++j) m(g.table[i][j], j) = 1;
    out.action.push_back(std::move(m));
  }
  return out;
}

void run_dispatch(const Request& req, Report& rep) {
  const std::string& cmd = req.command;
  rep.json["command"] = cmd;

  const auto one_ref = [&]() -> Loaded {
    if (req.positionals.size() != 1)
      throw UsageError{"'" + cmd + "' expects exactly one payload reference"};
    Loaded loaded = load_payload(req.positionals[0]);
    validate_payload(loaded.payload);
    return loaded;
  };

  if (cmd == "validate") {
    const Loaded loaded = one_ref();
    rep.json["kind"] = payload_kind(loaded.payload);
    rep.json["name"] = loaded.name;
    rep.json["valid"] = true;
    rep.text << "valid " << payload_kind(loaded.payload) << " " << loaded.name << "\n";
  } else if (cmd == "betti") {
    const Loaded loaded = one_ref();
    const LieAlgebra& g = want_algebra(loaded);
    rep.json["name"] = loaded.name;
    betti_report(rep, betti(g, trivial_module(g.dim), req.representatives), req.representatives);
  } else if (cmd == "relative-betti") {
    const Loaded loaded = one_ref();
    const ReductivePair& pair = want_pair(loaded);
    rep.json["name"] = loaded.name;
    betti_report(rep, relative_betti(pair, trivial_gk(pair), req.representatives),
                 req.representatives);
  } else if (cmd == "homology-betti") {
    const Loaded loaded = one_ref();
    const ReductivePair& pair = want_pair(loaded);
    rep.json["name"] = loaded.name;
    betti_report(rep, relative_homology_betti(pair, trivial_gk(pair), req.representatives),
                 req.representatives);
  } else if (cmd == "character") {
    const Loaded loaded = one_ref();
    const auto character = modular_character(want_algebra(loaded));
    rep.json["name"] = loaded.name;
    rep.json["chi"] = vec_json(character.chi);
    rep.json["unimodular"] = character.unimodular;
    rep.text << "chi = " << scalar_list(character.chi) << "\n";
    rep.text << "unimodular = " << (character.unimodular ? "true" : "false") << "\n";
  } else if (cmd == "det-ad" || cmd == "decompose-ad") {
    const Loaded loaded = one_ref();
    const ReductivePair& pair = want_pair(loaded);
    if (pair.generators.empty()) throw Error("'" + loaded.name + "' has no component generators");
    rep.json["name"] = loaded.name;
    ordered_json gens = ordered_json::array();
    for (std::size_t i = 0; i < pair.generators.size(); ++i) {
      const GroupElementAd elem{"generator " + std::to_string(i), pair.generators[i]};
      rep.text << "generator " << i << "\n";
      ordered_json entry;
      if (cmd == "det-ad") {
        const DetAdReport r = det_ad(pair.g, elem);
        rep.text << "det = " << rat_str(r.det) << "\n";
        rep.text << "modular_value = " << rat_str(r.modular_value) << "\n";
        rep.text << "unimodular = " << (r.unimodular ? "true" : "false") << "\n";
        rep.text << "strongly_unimodular = " << (r.strongly_unimodular ? "true" : "false") << "\n";
        entry["det"] = rat_str(r.det);
        entry["modular_value"] = rat_str(r.modular_value);
        entry["unimodular"] = r.unimodular;
        entry["strongly_unimodular"] = r.strongly_unimodular;
      } else {
        const DetAdDecomposition d = det_ad_decomposition(pair, elem);
        rep.text << "det_k = " << rat_str(d.det_k) << "\n";
        rep.text << "det_p = " << rat_str(d.det_p) << "\n";
        rep.text << "det_full = " << rat_str(d.det_full) << "\n";
        rep.text << "product_ok = " << (d.product_ok ? "true" : "false") << "\n";
        entry["det_k"] = rat_str(d.det_k);
        entry["det_p"] = rat_str(d.det_p);
        entry["det_full"] = rat_str(d.det_full);
        entry["product_ok"] = d.product_ok;
      }
      gens.push_back(entry);
    }
    rep.json["generators"] = gens;
  } else if (cmd == "core") {
    if (req.positionals.size() < 2)
      throw UsageError{"'core' expects a payload reference and subgroup element indices"};
    Loaded loaded = load_payload(req.positionals[0]);
    validate_payload(loaded.payload);
    const FiniteGroup& g = want_group(loaded);
    std::vector<std::size_t> k;
    for (std::size_t i = 1; i < req.positionals.size(); ++i) {
      const std::string& tok = req.positionals[i];
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError{"subgroup indices must be non-negative integers, got '" + tok + "'"};
      const std::size_t v = std::stoul(tok);
      if (v >= g.order) throw Error("subgroup index " + tok + " is out of range");
      k.push_back(v);
    }
    const auto core = normal_core(g, k);
    rep.json["name"] = loaded.name;
    rep.json["core"] = core;
    rep.text << size_list(core) << "\n";
  } else if (cmd == "average") {
    const Loaded loaded = one_ref();
    const FiniteGroup g = with_default_action(want_group(loaded));
    const Matrix p = average_projector(g);
    rep.json["name"] = loaded.name;
    rep.json["rank"] = p.rank();
    rep.json["projector"] = matrix_json(p);
    rep.text << "rank = " << p.rank() << "\n";
    rep.text << "projector =";
    for (std::size_t r = 0; r < p.rows(); ++r) rep.text << " " << vec_group(p.row(r));
    rep.text << "\n";
  } else if (cmd == "duality") {
    const Loaded loaded = one_ref();
    const ReductivePair& pair = want_pair(loaded);
    const DualityReport d = duality_check(pair, trivial_gk(pair));
    rep.json["name"] = loaded.name;
    rep.json["cohomology"] = d.cochain_dims;
    rep.json["twisted_homology"] = d.twisted_chain_dims;
    rep.json["degrees_match"] = d.all_degrees_match;
    rep.json["top_cohomology"] = d.top_cochain_dim;
    rep.json["dual_twist_fixed"] = d.fixed_dual_twist_dim;
    rep.json["corollary_match"] = d.corollary_match;
    rep.text << "cohomology = " << size_list(d.cochain_dims) << "\n";
    rep.text << "twisted_homology = " << size_list(d.twisted_chain_dims) << "\n";
    rep.text << "degrees_match = " << (d.all_degrees_match ? "true" : "false") << "\n";
    rep.text << "top_cohomology = " << d.top_cochain_dim << "\n";
    rep.text << "dual_twist_fixed = " << d.fixed_dual_twist_dim << "\n";
    rep.text << "corollary_match = " << (d.corollary_match ? "true" : "false") << "\n";
  } else if (cmd == "h0") {
    const Loaded loaded = one_ref();
    const ReductivePair& pair = want_pair(loaded);
    const std::size_t plain = h0_fixed_points(pair, trivial_gk(pair)).dim;
    const std::size_t dual_twist =
        h0_fixed_points(pair, dual_gk(hazewinkel_twist(pair, trivial_gk(pair)))).dim;
    rep.json["name"] = loaded.name;
    rep.json["h0"] = plain;
    rep.json["dual_twist_h0"] = dual_twist;
    rep.text << "h0 = " << plain << "\n";
    rep.text << "dual_twist_h0 = " << dual_twist << "\n";
  } else if (cmd == "tischler") {
    const Loaded loaded = one_ref();
    const FoliationProfile& profile = want_profile(loaded);
    if (!profile.periods) throw Error("'" + loaded.name + "' carries no period data");
    const DiscretenessReport d = is_discrete(*profile.periods);
    rep.json["name"] = loaded.name;
    rep.json["rank"] = d.rank;
    rep.json["discrete"] = d.discrete;
    rep.text << "rank = " << d.rank << "\n";
    rep.text << "discrete = " << (d.discrete ? "true" : "false") << "\n";
    if (d.generator) {
      const std::string g = format_period(*profile.periods, *d.generator);
      rep.json["generator"] = g;
      rep.text << "generator = " << g << "\n";
    }
  } else if (cmd == "verdict") {
    const Loaded loaded = one_ref();
    const Verdict v = unimodularity_verdict(want_profile(loaded));
    rep.json["name"] = loaded.name;
    rep.json["kind"] = verdict_kind_name(v.kind);
    rep.json["certificate"] = v.certificate;
    rep.text << verdict_kind_name(v.kind) << "\n";
    rep.text << "certificate: " << v.certificate << "\n";
  } else if (cmd == "catalog") {
    if (req.positionals.empty()) {
      ordered_json entries = ordered_json::array();
      for (const auto& name : catalog::list()) {
        const auto entry = catalog::get(name);
        rep.text << name << ": " << entry.summary << "\n";
        entries.push_back({{"name", name}, {"summary", entry.summary}});
      }
      rep.json["entries"] = entries;
    } else if (req.positionals.size() == 1) {
      const auto entry = catalog::get(req.positionals[0]);
      Document doc;
      std::visit(
          [&doc](const auto& payload) {
            using T = std::decay_t<decltype(payload)>;
            if constexpr (std::is_same_v<T, LieAlgebra>)
              doc.algebras.push_back(payload);
            else if constexpr (std::is_same_v<T, ReductivePair>)
              doc.pairs.push_back(payload);
            else if constexpr (std::is_same_v<T, FiniteGroup>)
              doc.groups.push_back(payload);
            else
              doc.profiles.push_back(payload);
          },
          entry.payload);
      const std::string text = serialize(doc);
      rep.text << text;
      rep.json["name"] = entry.name;
      rep.json["kind"] = payload_kind(entry.payload);
      rep.json["summary"] = entry.summary;
      ordered_json expected = ordered_json::array();
      for (const auto& ev : entry.expected)
        expected.push_back(
            {{"quantity", ev.quantity}, {"value", ev.value}, {"source", ev.source}});
      rep.json["expected"] = expected;
      rep.json["document"] = text;
    } else {
      throw UsageError{"'catalog' takes at most one entry name"};
    }
  } else {
    throw UsageError{
        "unknown command '" + cmd +
        "' (expected validate, betti, relative-betti, homology-betti, character, det-ad, "
        "decompose-ad, core, average, duality, h0, tischler, verdict or catalog)"};
  }
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  Request req;
  try {
    req = parse_request(args);
  } catch (const UsageError& e) {
    return {2, "", "error: " + e.message + "\n"};
  }
  Report rep;
  try {
    run_dispatch(req, rep);
  } catch (const UsageError& e) {
    return {2, "", "error: " + e.message + "\n"};
  } catch (const ParseError& e) {
    return {2, "", "error: " + std::string(e.what()) + "\n"};
  } catch (const ValidationError& e) {
    return {1, "", "error: " + std::string(e.what()) + "\n"};
  } catch (const Error& e) {
    return {1, "", "error: " + std::string(e.what()) + "\n"};
  }
  if (req.json) return {0, rep.json.dump(2) + "\n", ""};
  return {0, rep.text.str(), ""};
}

} // namespace folcoh
