#include "stdual/report.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <sstream>

#include "stdual/errors.hpp"

#ifndef STDUAL_VERSION
#define STDUAL_VERSION "unknown"
#endif

namespace stdual {

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "machine") return Format::machine;
  throw InvalidInput("unknown format '" + name + "' (expected table or machine)");
}

const char* version() { return STDUAL_VERSION; }

namespace {

constexpr const char* kSchema = "stdual-report/1";

// Left-aligned text columns.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  std::string str() const {
    std::vector<std::size_t> width;
    for (const auto& r : rows_)
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (width.size() <= i) width.push_back(0);
        width[i] = std::max(width[i], r[i].size());
      }
    std::ostringstream os;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::string line;
      for (std::size_t i = 0; i < rows_[k].size(); ++i) {
        line += rows_[k][i];
        if (i + 1 < rows_[k].size()) line += std::string(width[i] - rows_[k][i].size() + 2, ' ');
      }
      os << line << '\n';
      if (k == 0) {
        std::size_t total = 0;
        for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i + 1 < width.size() ? 2 : 0);
        os << std::string(total, '-') << '\n';
      }
    }
    return os.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

template <class T>
std::string index_list(const std::vector<T>& v) {
  std::vector<std::string> parts;
  for (auto x : v) parts.push_back(std::to_string(x));
  return "{" + join(parts) + "}";
}

std::string labels(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<std::string> parts;
  for (int e : elements) parts.push_back(g.label(e));
  return "{" + join(parts) + "}";
}

std::string subset_string(const std::optional<std::vector<std::size_t>>& subset) {
  if (!subset) return "-";
  std::vector<std::string> parts;
  for (auto k : *subset) parts.push_back(std::to_string(k + 1));
  return "{" + join(parts) + "}";
}

void emit(YAML::Emitter& out, const Rational& q) { out << to_string(q); }

void emit(YAML::Emitter& out, const Cyclotomic& c) {
  out << YAML::Flow << YAML::BeginMap << YAML::Key << "conductor" << YAML::Value << c.conductor() << YAML::Key
      << "terms" << YAML::Value << YAML::BeginSeq;
  for (std::size_t k = 0; k < c.coeffs().size(); ++k)
    if (c.coeffs()[k] != 0) out << YAML::BeginSeq << k << to_string(c.coeffs()[k]) << YAML::EndSeq;
  out << YAML::EndSeq << YAML::EndMap;
}

void emit(YAML::Emitter& out, const Vector& v) {
  out << YAML::Flow << YAML::BeginSeq;
  for (const auto& q : v) emit(out, q);
  out << YAML::EndSeq;
}

void emit(YAML::Emitter& out, const Matrix& m) {
  out << YAML::Flow << YAML::BeginSeq;
  for (std::size_t r = 0; r < m.rows(); ++r) emit(out, m.row(r));
  out << YAML::EndSeq;
}

void emit_values(YAML::Emitter& out, const std::vector<Cyclotomic>& values) {
  out << YAML::Flow << YAML::BeginSeq;
  for (const auto& v : values) emit(out, v);
  out << YAML::EndSeq;
}

template <class T>
void emit_ints(YAML::Emitter& out, const std::vector<T>& v) {
  out << YAML::Flow << YAML::BeginSeq;
  for (auto x : v) out << static_cast<long>(x);
  out << YAML::EndSeq;
}

void header(YAML::Emitter& out, const std::string& command) {
  out << YAML::BeginMap;
  out << YAML::Key << "schema" << YAML::Value << kSchema;
  out << YAML::Key << "version" << YAML::Value << version();
  out << YAML::Key << "command" << YAML::Value << command;
}

void conventions(YAML::Emitter& out) {
  out << YAML::Key << "conventions" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "contragredient" << YAML::Value << "complex conjugation of character values";
  out << YAML::Key << "operator_matrix" << YAML::Value << "column j holds the coordinates of D(basis j)";
  out << YAML::Key << "levi_subgroup" << YAML::Value << "pointwise stabilizer of a_L in R";
  out << YAML::Key << "indices" << YAML::Value << "simple roots 1-based, everything else 0-based";
  out << YAML::EndMap;
}

std::string finish(YAML::Emitter& out) {
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

void scenario_keys(YAML::Emitter& out, const Scenario& s, LeviFamily family) {
  out << YAML::Key << "scenario" << YAML::Value << s.name();
  out << YAML::Key << "family" << YAML::Value << to_string(family);
  out << YAML::Key << "levi_family" << YAML::Value;
  emit_ints(out, active_levi_family(s, family));
  out << YAML::Key << "non_reflection_elements" << YAML::Value << s.non_reflection_elements;
}

std::string class_header(const FiniteGroup& g, std::size_t c) {
  return g.label(g.class_rep(static_cast<int>(c))) + " (" + std::to_string(g.class_size(c)) + ")";
}

std::vector<std::string> value_cells(const ClassFunction& f) {
  std::vector<std::string> out;
  for (const auto& v : f.values()) out.push_back(v.str());
  return out;
}

std::string function_table(const std::vector<std::pair<std::string, ClassFunction>>& rows, const FiniteGroup& g) {
  std::vector<std::string> head{""};
  for (std::size_t c = 0; c < g.num_classes(); ++c) head.push_back(class_header(g, c));
  TextTable t(head);
  for (const auto& [name, f] : rows) {
    auto cells = value_cells(f);
    cells.insert(cells.begin(), name);
    t.add(std::move(cells));
  }
  return t.str();
}

}  // namespace

std::string render_info(const Scenario& s, LeviFamily family, Format f) {
  const auto fam = active_levi_family(s, family);
  const auto& r = *s.r_group;
  const auto reg = regular_set(s);
  const auto strata = levi_support_partition(s);
  auto in_family = [&](std::size_t l) { return std::find(fam.begin(), fam.end(), l) != fam.end(); };
  if (f == Format::machine) {
    YAML::Emitter out;
    header(out, "info");
    scenario_keys(out, s, family);
    out << YAML::Key << "root_system" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "family_tag" << YAML::Value << s.root_system.family_tag;
    out << YAML::Key << "ambient_dim" << YAML::Value << s.root_system.ambient_dim;
    out << YAML::Key << "roots" << YAML::Value << YAML::BeginSeq;
    for (const auto& root : s.root_system.roots) emit(out, root);
    out << YAML::EndSeq << YAML::EndMap;
    out << YAML::Key << "levi_m" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "dim_A" << YAML::Value << s.levi_m.dim_A();
    out << YAML::Key << "basis" << YAML::Value;
    emit(out, s.levi_m.split_component.basis());
    out << YAML::EndMap;
    out << YAML::Key << "restricted_roots" << YAML::Value << YAML::BeginSeq;
    for (const auto& c : s.restricted) emit(out, c);
    out << YAML::EndSeq;
    out << YAML::Key << "delta_sigma" << YAML::Value << YAML::BeginSeq;
    for (const auto& c : s.delta_sigma) emit(out, c);
    out << YAML::EndSeq;
    out << YAML::Key << "lattice" << YAML::Value << YAML::BeginSeq;
    for (std::size_t l = 0; l < s.lattice.size(); ++l) {
      out << YAML::BeginMap;
      out << YAML::Key << "index" << YAML::Value << l;
      out << YAML::Key << "dim_A" << YAML::Value << s.dim_a(l);
      out << YAML::Key << "basis" << YAML::Value;
      emit(out, s.lattice[l].split_component.basis());
      if (s.lattice[l].subset) {
        out << YAML::Key << "subset" << YAML::Value;
        std::vector<std::size_t> one_based;
        for (auto k : *s.lattice[l].subset) one_based.push_back(k + 1);
        emit_ints(out, one_based);
      }
      out << YAML::Key << "arthur_compatible" << YAML::Value
          << arthur_compatible(s.root_system, s.levi_m, s.delta_sigma, s.lattice[l]);
      out << YAML::Key << "active" << YAML::Value << in_family(l);
      out << YAML::EndMap;
    }
    out << YAML::EndSeq;
    out << YAML::Key << "r_group" << YAML::Value << YAML::BeginSeq;
    for (std::size_t e = 0; e < r.order(); ++e) {
      out << YAML::BeginMap;
      out << YAML::Key << "label" << YAML::Value << r.label(static_cast<int>(e));
      out << YAML::Key << "matrix" << YAML::Value;
      emit(out, (*r.linear_action())[e]);
      out << YAML::Key << "levi" << YAML::Value << s.levi_of_element[e];
      out << YAML::EndMap;
    }
    out << YAML::EndSeq;
    out << YAML::Key << "regular_set" << YAML::Value;
    emit_ints(out, reg.elements);
    out << YAML::Key << "elliptic" << YAML::Value << reg.elliptic;
    out << YAML::Key << "strata" << YAML::Value << YAML::BeginSeq;
    for (const auto& st : strata) {
      out << YAML::Flow << YAML::BeginMap << YAML::Key << "levi" << YAML::Value << st.levi << YAML::Key << "elements"
          << YAML::Value;
      emit_ints(out, st.elements);
      out << YAML::EndMap;
    }
    out << YAML::EndSeq;
    out << YAML::Key << "extension" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "total_order" << YAML::Value << s.extension.total->order();
    out << YAML::Key << "center" << YAML::Value;
    emit_ints(out, s.extension.center);
    out << YAML::Key << "chi" << YAML::Value;
    emit_values(out, s.extension.chi);
    out << YAML::EndMap;
    return finish(out);
  }

  std::ostringstream os;
  os << "scenario " << s.name() << "\n";
  if (!s.document.description.empty()) os << "  " << s.document.description << "\n";
  os << "root system " << s.root_system.family_tag << " in dimension " << s.root_system.ambient_dim << ", "
     << s.root_system.roots.size() << " roots\n";
  os << "M: dim a_M = " << s.levi_m.dim_A() << ", a_G has dim " << s.lattice.back().dim_A() << "\n";
  std::vector<std::string> rr;
  for (const auto& c : s.restricted) rr.push_back(to_string(c));
  os << "restricted roots: " << join(rr, " ") << "\n";
  std::vector<std::string> dd;
  for (const auto& c : s.delta_sigma) dd.push_back(to_string(c));
  os << "delta_sigma: " << (dd.empty() ? "(empty)" : join(dd, " ")) << "\n";
  os << "Levi family: " << to_string(family) << " " << index_list(fam) << "\n\n";
  TextTable lt({"levi", "dim A", "split component", "subset", "arthur", "active"});
  for (std::size_t l = 0; l < s.lattice.size(); ++l)
    lt.add({"L" + std::to_string(l), std::to_string(s.dim_a(l)), s.lattice[l].split_component.str(),
            subset_string(s.lattice[l].subset),
            arthur_compatible(s.root_system, s.levi_m, s.delta_sigma, s.lattice[l]) ? "yes" : "no",
            in_family(l) ? "yes" : "no"});
  os << lt.str() << "\n";
  TextTable et({"r", "matrix on a_M", "L_r", "dim A_{L_r}"});
  for (std::size_t e = 0; e < r.order(); ++e)
    et.add({r.label(static_cast<int>(e)), (*r.linear_action())[e].str(), "L" + std::to_string(s.levi_of_element[e]),
            std::to_string(s.dim_a(s.levi_of_element[e]))});
  os << et.str() << "\n";
  os << "regular set: " << labels(r, reg.elements) << (reg.elliptic ? " (elliptic)" : " (not elliptic)") << "\n";
  for (const auto& st : strata) os << "  stratum L" << st.levi << ": " << labels(r, st.elements) << "\n";
  if (s.non_reflection_elements) os << "note: R contains elements that are not reflections\n";
  std::vector<std::string> chi;
  for (std::size_t i = 0; i < s.extension.center.size(); ++i)
    chi.push_back(s.extension.total->label(s.extension.center[i]) + " -> " + s.extension.chi[i].str());
  os << "extension: |R~| = " << s.extension.total->order() << ", Z = " << labels(*s.extension.total, s.extension.center)
     << ", chi: " << join(chi) << "\n";
  return os.str();
}

std::string render_chartable(const Scenario& s, Format f) {
  const auto fam = chi_isotypic(s.extension);
  const auto& g = *s.extension.total;
  if (f == Format::machine) {
    YAML::Emitter out;
    header(out, "chartable");
    out << YAML::Key << "scenario" << YAML::Value << s.name();
    out << YAML::Key << "classes" << YAML::Value << YAML::BeginSeq;
    for (std::size_t c = 0; c < g.num_classes(); ++c)
      out << YAML::Flow << YAML::BeginMap << YAML::Key << "representative" << YAML::Value
          << g.label(g.class_rep(static_cast<int>(c))) << YAML::Key << "size" << YAML::Value << g.class_size(c)
          << YAML::EndMap;
    out << YAML::EndSeq;
    out << YAML::Key << "characters" << YAML::Value << YAML::BeginSeq;
    for (const auto& chi : fam.table.irreducibles) emit_values(out, chi.values());
    out << YAML::EndSeq;
    out << YAML::Key << "isotypic" << YAML::Value;
    emit_ints(out, fam.members);
    return finish(out);
  }
  std::vector<std::pair<std::string, ClassFunction>> rows;
  for (std::size_t i = 0; i < fam.table.size(); ++i) {
    bool member = std::find(fam.members.begin(), fam.members.end(), i) != fam.members.end();
    rows.emplace_back("chi" + std::to_string(i) + (member ? " *" : ""), fam.table.irreducibles[i]);
  }
  std::ostringstream os;
  os << "character table of R~ (order " << g.order() << ") for " << s.name() << "\n";
  os << function_table(rows, g);
  os << "* = central character chi on Z (" << fam.size() << " of " << fam.table.size() << ")\n";
  return os.str();
}

std::string render_dual(const Scenario& s, LeviFamily family, Format f) {
  DualityEngine e(s, family);
  const auto m = e.matrix();
  const auto& fam = e.top().family;
  if (f == Format::machine) {
    YAML::Emitter out;
    header(out, "dual");
    scenario_keys(out, s, family);
    conventions(out);
    out << YAML::Key << "basis" << YAML::Value;
    emit_ints(out, fam.members);
    out << YAML::Key << "matrix" << YAML::Value << YAML::BeginSeq;
    for (const auto& row : m.entries) emit_values(out, row);
    out << YAML::EndSeq;
    out << YAML::Key << "involution" << YAML::Value << (m * m).is_identity();
    return finish(out);
  }
  std::vector<std::string> head{""};
  for (auto k : fam.members) head.push_back("chi" + std::to_string(k));
  TextTable t(head);
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<std::string> row{"chi" + std::to_string(fam.members[i])};
    for (const auto& v : m.entries[i]) row.push_back(v.str());
    t.add(std::move(row));
  }
  std::ostringstream os;
  os << "duality operator for " << s.name() << " (family " << to_string(family) << " " << index_list(e.family())
     << "); column j is D(chi_j)\n";
  os << t.str();
  os << "D^2 = I: " << ((m * m).is_identity() ? "yes" : "no") << "\n";
  return os.str();
}

std::string render_steinberg(const Scenario& s, LeviFamily family, Format f) {
  DualityEngine e(s, family);
  const auto st = e.steinberg();
  const auto& table = e.top().family.table;
  const auto coeffs = decompose(st, table);
  const bool elliptic = is_elliptic_character(s, st);
  if (f == Format::machine) {
    YAML::Emitter out;
    header(out, "steinberg");
    scenario_keys(out, s, family);
    out << YAML::Key << "values" << YAML::Value;
    emit_values(out, st.values());
    out << YAML::Key << "decomposition" << YAML::Value;
    emit_values(out, coeffs);
    out << YAML::Key << "elliptic" << YAML::Value << elliptic;
    return finish(out);
  }
  std::ostringstream os;
  os << "Steinberg class function for " << s.name() << " (family " << to_string(family) << ")\n";
  os << function_table({{"St", st}, {"xi", sign_map(s)}}, *st.group());
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) parts.push_back("(" + coeffs[i].str() + ") chi" + std::to_string(i));
  os << "St = " << (parts.empty() ? "0" : join(parts, " + ")) << "\n";
  os << "elliptic: " << (elliptic ? "yes" : "no") << "\n";
  return os.str();
}

std::string render_report(const Scenario& s, const DualityReport& r, Format f) {
  if (f == Format::machine) {
    YAML::Emitter out;
    header(out, "verify");
    scenario_keys(out, s, r.family);
    conventions(out);
    out << YAML::Key << "claims" << YAML::Value << YAML::BeginSeq;
    for (const auto& c : r.claims)
      out << YAML::BeginMap << YAML::Key << "id" << YAML::Value << c.id << YAML::Key << "status" << YAML::Value
          << to_string(c.status) << YAML::Key << "witness" << YAML::Value << c.witness << YAML::EndMap;
    out << YAML::EndSeq;
    out << YAML::Key << "all_pass" << YAML::Value << r.all_pass();
    return finish(out);
  }
  std::ostringstream os;
  os << "verification of " << r.scenario << " (family " << to_string(r.family) << " " << index_list(r.levi_family)
     << ")\n";
  TextTable t({"claim", "status", "witness"});
  for (const auto& c : r.claims) t.add({c.id, to_string(c.status), c.witness});
  os << t.str();
  if (s.non_reflection_elements) os << "note: R contains elements that are not reflections\n";
  os << (r.all_pass() ? "all executed checks pass\n" : "some checks FAIL\n");
  return os.str();
}

std::string render_scan(const std::vector<DualityReport>& reports, std::optional<LeviFamily> family, Format f) {
  const auto m = claim_matrix(reports);
  if (f == Format::machine) {
    YAML::Emitter out;
    header(out, "scan");
    out << YAML::Key << "family" << YAML::Value << (family ? to_string(*family) : std::string("default"));
    out << YAML::Key << "scenarios" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (const auto& s : m.scenarios) out << s;
    out << YAML::EndSeq;
    out << YAML::Key << "matrix" << YAML::Value << YAML::BeginSeq;
    for (std::size_t i = 0; i < m.claims.size(); ++i) {
      out << YAML::Flow << YAML::BeginMap << YAML::Key << "claim" << YAML::Value << m.claims[i] << YAML::Key
          << "status" << YAML::Value << YAML::Flow << YAML::BeginSeq;
      for (auto st : m.status[i]) out << to_string(st);
      out << YAML::EndSeq << YAML::EndMap;
    }
    out << YAML::EndSeq;
    out << YAML::Key << "all_pass" << YAML::Value << m.all_pass();
    return finish(out);
  }
  std::vector<std::string> head{"claim"};
  for (const auto& s : m.scenarios) head.push_back(s);
  TextTable t(head);
  for (std::size_t i = 0; i < m.claims.size(); ++i) {
    std::vector<std::string> row{m.claims[i]};
    for (auto st : m.status[i]) row.push_back(st == ClaimStatus::not_applicable ? "n/a" : to_string(st));
    t.add(std::move(row));
  }
  std::ostringstream os;
  os << "claim matrix (family " << (family ? to_string(*family) : std::string("per scenario default")) << ")\n";
  os << t.str();
  return os.str();
}

}  // namespace stdual
