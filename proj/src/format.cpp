#include "folcoh/format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "folcoh/errors.hpp"

namespace folcoh {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (tokens >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

Scalar parse_rational(const std::string& tok, std::size_t line) {
  const auto r = rat_parse(tok);
  if (!r) throw ParseError(line, "expected a rational number, got '" + tok + "'");
  return *r;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  if (tok.empty() || tok.size() > 9) throw ParseError(line, "expected a small non-negative integer");
  for (const char ch : tok)
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  return std::stoul(tok);
}

// parenthesized rational groups: (1 0) (-1/2 3) ...
std::vector<Vec> parse_vector_groups(const std::vector<std::string>& toks, std::size_t start,
                                     std::size_t line) {
  std::vector<Vec> out;
  Vec current;
  bool open = false;
  for (std::size_t t = start; t < toks.size(); ++t) {
    std::string tok = toks[t];
    if (!open) {
      if (tok.front() != '(') throw ParseError(line, "expected '(' to start a vector");
      open = true;
      tok.erase(0, 1);
      current.clear();
    }
    const bool closes = !tok.empty() && tok.back() == ')';
    if (closes) tok.pop_back();
    if (!tok.empty()) current.push_back(parse_rational(tok, line));
    if (closes) {
      out.push_back(current);
      open = false;
    }
  }
  if (open) throw ParseError(line, "unterminated vector");
  return out;
}

struct AlgebraBuilder {
  std::size_t header_line = 0;
  LieAlgebra g;
  bool has_dim = false;
  bool basis_set = false;
  bool members_started = false;
  std::set<std::pair<std::size_t, std::size_t>> bracket_pairs;
  bool is_pair = false;
  bool k_set = false;
  std::vector<Vec> k_basis;
  std::optional<std::vector<Vec>> complement;
  std::vector<Matrix> generators;
};

struct GroupBuilder {
  std::size_t header_line = 0;
  FiniteGroup g;
  bool has_order = false;
  std::vector<std::vector<std::size_t>> rows;
};

struct ProfileBuilder {
  std::size_t header_line = 0;
  FoliationProfile p;
  bool in_periods = false;
  bool has_constants = false;
  PeriodGroup periods;
};

const std::map<std::string, bool FoliationProfile::*>& flag_fields() {
  static const std::map<std::string, bool FoliationProfile::*> fields = {
      {"g0_unimodular", &FoliationProfile::g0_unimodular},
      {"gamma_closure_unimodular", &FoliationProfile::gamma_closure_unimodular},
      {"gamma_identity_unimodular", &FoliationProfile::gamma_identity_unimodular},
      {"k_compact", &FoliationProfile::k_compact},
      {"k_strongly_unimodular", &FoliationProfile::k_strongly_unimodular},
      {"fibers_finite_components", &FoliationProfile::fibers_finite_components},
      {"manifold_compact", &FoliationProfile::manifold_compact},
  };
  return fields;
}

// canonical flag order for serialization
const std::vector<std::string>& flag_order() {
  static const std::vector<std::string> order = {
      "g0_unimodular",      "gamma_closure_unimodular", "gamma_identity_unimodular",
      "k_compact",          "k_strongly_unimodular",    "fibers_finite_components",
      "manifold_compact"};
  return order;
}

class Parser {
public:
  Document run(const std::string& text) {
    for (const Line& line : tokenize(text)) {
      const std::string& kw = line.tokens[0];
      if (kw == "algebra" || kw == "group" || kw == "profile") {
        finish_block();
        if (line.tokens.size() != 2) throw ParseError(line.number, "expected '" + kw + " <name>'");
        claim_name(line.tokens[1], line.number);
        if (kw == "algebra") {
          algebra.emplace();
          algebra->header_line = line.number;
          algebra->g.name = line.tokens[1];
        } else if (kw == "group") {
          group.emplace();
          group->header_line = line.number;
          group->g.name = line.tokens[1];
        } else {
          profile.emplace();
          profile->header_line = line.number;
          profile->p.name = line.tokens[1];
        }
      } else if (algebra) {
        algebra_line(line);
      } else if (group) {
        group_line(line);
      } else if (profile) {
        profile_line(line);
      } else {
        throw ParseError(line.number, "expected an 'algebra', 'group' or 'profile' header");
      }
    }
    finish_block();
    return std::move(doc);
  }

private:
  Document doc;
  std::map<std::string, std::size_t> names;
  std::optional<AlgebraBuilder> algebra;
  std::optional<GroupBuilder> group;
  std::optional<ProfileBuilder> profile;

  void claim_name(const std::string& name, std::size_t line) {
    if (!names.emplace(name, line).second)
      throw ParseError(line, "payload name '" + name + "' already used");
  }

  void finish_block() {
    if (algebra) finish_algebra();
    if (group) finish_group();
    if (profile) finish_profile();
    algebra.reset();
    group.reset();
    profile.reset();
  }

  std::size_t basis_index(const std::string& name, std::size_t line) const {
    for (std::size_t i = 0; i < algebra->g.basis.size(); ++i)
      if (algebra->g.basis[i] == name) return i;
    throw ParseError(line, "unknown basis element '" + name + "'");
  }

  void require_dim(const Line& line) const {
    if (!algebra->has_dim) throw ParseError(line.number, "'dim' must come first in an algebra block");
  }

  std::vector<Vec> member_vectors(const Line& line, std::size_t start) const {
    const auto groups = parse_vector_groups(line.tokens, start, line.number);
    for (const Vec& v : groups)
      if (v.size() != algebra->g.dim)
        throw ParseError(line.number, "vector length does not match the algebra dimension");
    return groups;
  }

  void algebra_line(const Line& line) {
    const std::string& kw = line.tokens[0];
    if (kw == "dim") {
      if (algebra->has_dim) throw ParseError(line.number, "'dim' given twice");
      if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'dim <n>'");
      const std::size_t n = parse_count(line.tokens[1], line.number);
      std::vector<std::string> names;
      for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
      algebra->g = make_algebra(algebra->g.name, std::move(names));
      algebra->has_dim = true;
    } else if (kw == "basis") {
      require_dim(line);
      if (algebra->basis_set) throw ParseError(line.number, "'basis' given twice");
      if (algebra->members_started)
        throw ParseError(line.number, "'basis' must come before bracket lines");
      if (line.tokens.size() - 1 != algebra->g.dim)
        throw ParseError(line.number, "expected one basis name per dimension");
      std::set<std::string> seen;
      for (std::size_t i = 1; i < line.tokens.size(); ++i)
        if (!seen.insert(line.tokens[i]).second)
          throw ParseError(line.number, "duplicate basis name '" + line.tokens[i] + "'");
      algebra->g.basis.assign(line.tokens.begin() + 1, line.tokens.end());
      algebra->basis_set = true;
    } else if (kw == "bracket") {
      require_dim(line);
      algebra->members_started = true;
      if (line.tokens.size() < 5 || line.tokens[3] != "=")
        throw ParseError(line.number, "expected 'bracket <a> <b> = <terms>'");
      const std::size_t i = basis_index(line.tokens[1], line.number);
      const std::size_t j = basis_index(line.tokens[2], line.number);
      if (i == j) throw ParseError(line.number, "bracket of a basis element with itself");
      const auto key = std::make_pair(std::min(i, j), std::max(i, j));
      if (!algebra->bracket_pairs.insert(key).second)
        throw ParseError(line.number, "bracket pair listed twice");
      Vec v(algebra->g.dim, Scalar(0));
      if (line.tokens.size() == 5 && line.tokens[4] == "0") {
        // explicit zero bracket
      } else {
        std::size_t t = 4;
        while (true) {
          if (t + 1 >= line.tokens.size())
            throw ParseError(line.number, "expected '<coeff> <basis>' terms");
          const Scalar c = parse_rational(line.tokens[t], line.number);
          const std::size_t k = basis_index(line.tokens[t + 1], line.number);
          v[k] += c;
          t += 2;
          if (t == line.tokens.size()) break;
          if (line.tokens[t] != "+") throw ParseError(line.number, "expected '+' between terms");
          ++t;
        }
      }
      set_bracket(algebra->g, i, j, v);
    } else if (kw == "subalgebra") {
      require_dim(line);
      algebra->members_started = true;
      algebra->is_pair = true;
      if (algebra->k_set) throw ParseError(line.number, "'subalgebra' given twice");
      algebra->k_set = true;
      if (line.tokens.size() == 1) return; // trivial isotropy
      if (line.tokens[1].front() == '(') {
        algebra->k_basis = member_vectors(line, 1);
      } else {
        for (std::size_t t = 1; t < line.tokens.size(); ++t) {
          Vec v(algebra->g.dim, Scalar(0));
          v[basis_index(line.tokens[t], line.number)] = 1;
          algebra->k_basis.push_back(std::move(v));
        }
      }
    } else if (kw == "complement") {
      require_dim(line);
      algebra->members_started = true;
      algebra->is_pair = true;
      if (algebra->complement) throw ParseError(line.number, "'complement' given twice");
      algebra->complement = member_vectors(line, 1);
    } else if (kw == "generator") {
      require_dim(line);
      algebra->members_started = true;
      algebra->is_pair = true;
      const auto rows = member_vectors(line, 1);
      if (rows.size() != algebra->g.dim)
        throw ParseError(line.number, "expected one matrix row per dimension");
      Matrix m(algebra->g.dim, algebra->g.dim);
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
      algebra->generators.push_back(std::move(m));
    } else {
      throw ParseError(line.number, "unexpected line '" + kw + "' in an algebra block");
    }
  }

  void finish_algebra() {
    if (!algebra->has_dim) throw ParseError(algebra->header_line, "algebra block is missing 'dim'");
    if (!algebra->is_pair) {
      doc.algebras.push_back(std::move(algebra->g));
      return;
    }
    ReductivePair pair;
    pair.name = algebra->g.name;
    pair.g = std::move(algebra->g);
    pair.k_basis = std::move(algebra->k_basis);
    pair.p_basis = algebra->complement
                       ? std::move(*algebra->complement)
                       : find_reductive_complement(pair.g, pair.k_basis, algebra->generators);
    pair.generators = std::move(algebra->generators);
    doc.pairs.push_back(std::move(pair));
  }

  void group_line(const Line& line) {
    const std::string& kw = line.tokens[0];
    if (kw == "order") {
      if (group->has_order) throw ParseError(line.number, "'order' given twice");
      if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'order <n>'");
      group->g.order = parse_count(line.tokens[1], line.number);
      if (group->g.order == 0) throw ParseError(line.number, "group order must be positive");
      group->has_order = true;
    } else if (kw == "table") {
      if (!group->has_order) throw ParseError(line.number, "'order' must come before 'table'");
      if (group->rows.size() == group->g.order)
        throw ParseError(line.number, "more table rows than the group order");
      if (line.tokens.size() - 1 != group->g.order)
        throw ParseError(line.number, "expected one table entry per element");
      std::vector<std::size_t> row;
      for (std::size_t t = 1; t < line.tokens.size(); ++t) {
        const std::size_t v = parse_count(line.tokens[t], line.number);
        if (v >= group->g.order) throw ParseError(line.number, "table entry out of range");
        row.push_back(v);
      }
      group->rows.push_back(std::move(row));
    } else if (kw == "action") {
      if (!group->has_order) throw ParseError(line.number, "'order' must come before 'action'");
      const auto rows = parse_vector_groups(line.tokens, 1, line.number);
      for (const Vec& r : rows)
        if (r.size() != rows.size())
          throw ParseError(line.number, "action rows must form a square matrix");
      if (!group->g.action.empty() && group->g.action.front().rows() != rows.size())
        throw ParseError(line.number, "action matrices must share one dimension");
      Matrix m(rows.size(), rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
      group->g.action.push_back(std::move(m));
    } else {
      throw ParseError(line.number, "unexpected line '" + kw + "' in a group block");
    }
  }

  void finish_group() {
    if (group->rows.size() != group->g.order)
      throw ParseError(group->header_line, "expected one table row per element");
    group->g.table = std::move(group->rows);
    // pick out the two-sided identity; validation reports a missing one later
    group->g.identity = 0;
    for (std::size_t e = 0; e < group->g.order; ++e) {
      bool ok = true;
      for (std::size_t j = 0; j < group->g.order && ok; ++j)
        ok = group->g.table[e][j] == j && group->g.table[j][e] == j;
      if (ok) {
        group->g.identity = e;
        break;
      }
    }
    doc.groups.push_back(std::move(group->g));
  }

  std::size_t constant_index(const std::string& name, std::size_t line) const {
    for (std::size_t i = 0; i < profile->periods.constants.size(); ++i)
      if (profile->periods.constants[i].name == name) return i;
    throw ParseError(line, "unknown constant '" + name + "'");
  }

  void profile_line(const Line& line) {
    const std::string& kw = line.tokens[0];
    if (profile->in_periods) {
      if (kw == "constants") {
        if (profile->has_constants) throw ParseError(line.number, "'constants' given twice");
        for (std::size_t t = 1; t < line.tokens.size(); ++t)
          profile->periods.constants.push_back({line.tokens[t], ""});
        profile->has_constants = true;
      } else if (kw == "note") {
        if (line.tokens.size() < 4 || line.tokens[2] != "=")
          throw ParseError(line.number, "expected 'note <constant> = <text>'");
        const std::size_t i = constant_index(line.tokens[1], line.number);
        std::string text;
        for (std::size_t t = 3; t < line.tokens.size(); ++t) {
          if (t > 3) text += " ";
          text += line.tokens[t];
        }
        profile->periods.constants[i].note = text;
      } else if (kw == "period") {
        if (!profile->has_constants)
          throw ParseError(line.number, "'constants' must come before 'period'");
        if (line.tokens.size() < 3 || line.tokens[1] != "=")
          throw ParseError(line.number, "expected 'period = <terms>'");
        Vec v(profile->periods.constants.size(), Scalar(0));
        if (!(line.tokens.size() == 3 && line.tokens[2] == "0")) {
          std::size_t t = 2;
          while (true) {
            const std::string& term = line.tokens[t];
            const auto star = term.find('*');
            if (star == std::string::npos)
              throw ParseError(line.number, "expected '<coeff>*<constant>' terms");
            const Scalar c = parse_rational(term.substr(0, star), line.number);
            v[constant_index(term.substr(star + 1), line.number)] += c;
            ++t;
            if (t == line.tokens.size()) break;
            if (line.tokens[t] != "+") throw ParseError(line.number, "expected '+' between terms");
            ++t;
            if (t == line.tokens.size()) throw ParseError(line.number, "dangling '+'");
          }
        }
        profile->periods.generators.push_back(std::move(v));
      } else {
        throw ParseError(line.number, "unexpected line '" + kw + "' in a periods block");
      }
      return;
    }
    if (kw == "periods") {
      if (line.tokens.size() != 1) throw ParseError(line.number, "expected bare 'periods'");
      profile->in_periods = true;
      return;
    }
    const auto field = flag_fields().find(kw);
    if (field == flag_fields().end())
      throw ParseError(line.number, "unknown profile flag '" + kw + "'");
    if (line.tokens.size() != 3 || line.tokens[1] != "=")
      throw ParseError(line.number, "expected '" + kw + " = true|false'");
    if (line.tokens[2] == "true")
      profile->p.*(field->second) = true;
    else if (line.tokens[2] == "false")
      profile->p.*(field->second) = false;
    else
      throw ParseError(line.number, "expected 'true' or 'false'");
  }

  void finish_profile() {
    if (profile->in_periods) {
      if (!profile->has_constants)
        throw ParseError(profile->header_line, "periods block is missing 'constants'");
      profile->p.periods = std::move(profile->periods);
    }
    doc.profiles.push_back(std::move(profile->p));
  }
};

std::string vec_group(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += rat_str(v[i]);
  }
  return out + ")";
}

void write_algebra_body(std::ostream& out, const LieAlgebra& g, const std::string& header) {
  out << "algebra " << header << "\n";
  out << "dim " << g.dim << "\n";
  out << "basis";
  for (const auto& b : g.basis) out << " " << b;
  out << "\n";
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i + 1; j < g.dim; ++j) {
      const Vec v = g.bracket_basis(i, j);
      if (vec_is_zero(v)) continue;
      out << "bracket " << g.basis[i] << " " << g.basis[j] << " =";
      bool first = true;
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        out << (first ? " " : " + ") << rat_str(v[k]) << " " << g.basis[k];
        first = false;
      }
      out << "\n";
    }
}

void write_matrix_rows(std::ostream& out, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) out << " " << vec_group(m.row(r));
}

} // namespace

Document parse_document(const std::string& text) { return Parser().run(text); }

std::string serialize(const LieAlgebra& g) {
  std::ostringstream out;
  write_algebra_body(out, g, g.name);
  return out.str();
}

std::string serialize(const ReductivePair& pair) {
  std::ostringstream out;
  write_algebra_body(out, pair.g, pair.name);
  out << "subalgebra";
  for (const Vec& v : pair.k_basis) out << " " << vec_group(v);
  out << "\n";
  out << "complement";
  for (const Vec& v : pair.p_basis) out << " " << vec_group(v);
  out << "\n";
  for (const Matrix& m : pair.generators) {
    out << "generator";
    write_matrix_rows(out, m);
    out << "\n";
  }
  return out.str();
}

std::string serialize(const FiniteGroup& g) {
  std::ostringstream out;
  out << "group " << g.name << "\n";
  out << "order " << g.order << "\n";
  for (const auto& row : g.table) {
    out << "table";
    for (const std::size_t v : row) out << " " << v;
    out << "\n";
  }
  for (const Matrix& m : g.action) {
    out << "action";
    write_matrix_rows(out, m);
    out << "\n";
  }
  return out.str();
}

std::string serialize(const FoliationProfile& profile) {
  std::ostringstream out;
  out << "profile " << profile.name << "\n";
  for (const auto& flag : flag_order())
    out << flag << " = " << (profile.*(flag_fields().at(flag)) ? "true" : "false") << "\n";
  if (profile.periods) {
    out << "periods\n";
    out << "constants";
    for (const auto& c : profile.periods->constants) out << " " << c.name;
    out << "\n";
    for (const auto& c : profile.periods->constants)
      if (!c.note.empty()) out << "note " << c.name << " = " << c.note << "\n";
    for (const Vec& g : profile.periods->generators) {
      out << "period =";
      bool first = true;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] == 0) continue;
        out << (first ? " " : " + ") << rat_str(g[i]) << "*" << profile.periods->constants[i].name;
        first = false;
      }
      if (first) out << " 0";
      out << "\n";
    }
  }
  return out.str();
}

std::string serialize(const Document& doc) {
  std::vector<std::string> blocks;
  for (const auto& g : doc.algebras) blocks.push_back(serialize(g));
  for (const auto& p : doc.pairs) blocks.push_back(serialize(p));
  for (const auto& g : doc.groups) blocks.push_back(serialize(g));
  for (const auto& p : doc.profiles) blocks.push_back(serialize(p));
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += "\n";
    out += blocks[i];
  }
  return out;
}

} // namespace folcoh
