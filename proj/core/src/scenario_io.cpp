#include "stdual/scenario_io.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace stdual {

ParseError::ParseError(std::string source, int line, int column, const std::string& message)
    : InvalidInput(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void error(const YAML::Node& at, const std::string& message) const {
    const auto& m = at.Mark();
    throw ParseError(source_, m.line + 1, m.column + 1, message);
  }

  void expect_map(const YAML::Node& n, const std::string& what, const std::set<std::string>& keys) const {
    if (!n.IsMap()) error(n, what + " must be a mapping");
    for (const auto& kv : n) {
      const auto key = kv.first.as<std::string>();
      if (!keys.count(key)) error(kv.first, "unknown key '" + key + "' in " + what);
    }
  }

  YAML::Node required(const YAML::Node& map, const std::string& key, const std::string& what) const {
    YAML::Node n = map[key];
    if (!n) error(map, what + " is missing '" + key + "'");
    return n;
  }

  std::string scalar(const YAML::Node& n, const std::string& what) const {
    if (!n.IsScalar()) error(n, what + " must be a scalar");
    return n.Scalar();
  }

  Rational rational(const YAML::Node& n, const std::string& what) const {
    try {
      return parse_rational(scalar(n, what));
    } catch (const InvalidInput&) {
      error(n, what + " must be a rational number, got '" + n.Scalar() + "'");
    }
  }

  long integer(const YAML::Node& n, const std::string& what, long lo = std::numeric_limits<long>::min()) const {
    Rational q = rational(n, what);
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) error(n, what + " must be an integer");
    long v = q.get_num().get_si();
    if (v < lo) error(n, what + " must be at least " + std::to_string(lo));
    return v;
  }

  YAML::Node sequence(const YAML::Node& n, const std::string& what) const {
    if (!n.IsSequence()) error(n, what + " must be a list");
    return n;
  }

  std::vector<long> integers(const YAML::Node& n, const std::string& what, long lo = std::numeric_limits<long>::min()) const {
    std::vector<long> out;
    for (const auto& x : sequence(n, what)) out.push_back(integer(x, what + " entry", lo));
    return out;
  }

  Vector vector(const YAML::Node& n, const std::string& what) const {
    Vector out;
    for (const auto& x : sequence(n, what)) out.push_back(rational(x, what + " entry"));
    return out;
  }

  Matrix matrix(const YAML::Node& n, const std::string& what) const {
    std::vector<Vector> rows;
    for (const auto& r : sequence(n, what)) rows.push_back(vector(r, what + " row"));
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i].size() != cols) error(n[i], what + " rows must have equal length");
    return Matrix::from_rows(rows, cols);
  }

  std::vector<std::vector<int>> int_rows(const YAML::Node& n, const std::string& what, long lo) const {
    std::vector<std::vector<int>> out;
    for (const auto& r : sequence(n, what)) {
      std::vector<int> row;
      for (long v : integers(r, what + " row", lo)) row.push_back(static_cast<int>(v));
      out.push_back(std::move(row));
    }
    return out;
  }

  RootSystemSpec root_system(const YAML::Node& n) const {
    RootSystemSpec rs;
    if (n["family"]) {
      expect_map(n, "root_system", {"family", "rank"});
      rs.family = scalar(n["family"], "root_system.family");
      if (rs.family.size() != 1 || std::string("ABCD").find(rs.family[0]) == std::string::npos)
        error(n["family"], "root_system.family must be one of A, B, C, D");
      rs.rank = static_cast<int>(integer(required(n, "rank", "root_system"), "root_system.rank", 1));
    } else {
      expect_map(n, "root_system", {"ambient_dim", "roots", "simple_roots"});
      rs.ambient_dim = static_cast<std::size_t>(integer(required(n, "ambient_dim", "root_system"), "ambient_dim", 0));
      auto roots = sequence(required(n, "roots", "root_system"), "roots");
      for (std::size_t i = 0; i < roots.size(); ++i) {
        Vector v = vector(roots[i], "root");
        if (v.size() != rs.ambient_dim) error(roots[i], "root must have ambient_dim entries");
        rs.roots.push_back(std::move(v));
      }
      for (long k : integers(required(n, "simple_roots", "root_system"), "simple_roots", 1))
        rs.simple_roots.push_back(static_cast<std::size_t>(k));
    }
    return rs;
  }

  GeneratorSpec generator(const YAML::Node& n) const {
    expect_map(n, "generator", {"matrix", "word"});
    GeneratorSpec g;
    if (n["matrix"] && n["word"]) error(n, "generator must give either matrix or word");
    if (n["word"]) {
      std::vector<int> w;
      for (long k : integers(n["word"], "word", 1)) w.push_back(static_cast<int>(k));
      g.word = std::move(w);
    } else if (n["matrix"]) {
      g.matrix = matrix(n["matrix"], "generator matrix");
      if (!g.matrix.square() && g.matrix.rows() != 0) error(n["matrix"], "generator matrix must be square");
    } else {
      error(n, "generator must give either matrix or word");
    }
    return g;
  }

  ExtensionSpec extension(const YAML::Node& n) const {
    ExtensionSpec e;
    if (n.IsScalar()) {
      if (n.Scalar() != "split") error(n, "extension must be 'split' or a mapping");
      return e;
    }
    expect_map(n, "extension", {"mult_table", "permutations", "matrices", "center", "chi", "lifts"});
    const int kinds = (n["mult_table"] ? 1 : 0) + (n["permutations"] ? 1 : 0) + (n["matrices"] ? 1 : 0);
    if (kinds != 1) error(n, "extension must give exactly one of mult_table, permutations, matrices");
    auto center = sequence(required(n, "center", "extension"), "center");
    if (n["mult_table"]) {
      e.kind = ExtensionSpec::Kind::mult_table;
      e.mult_table = int_rows(n["mult_table"], "mult_table", 0);
      for (std::size_t i = 0; i < e.mult_table.size(); ++i)
        if (e.mult_table[i].size() != e.mult_table.size()) error(n["mult_table"][i], "mult_table must be square");
      for (const auto& c : center) e.center.push_back({static_cast<int>(integer(c, "center element", 0))});
      for (long l : integers(required(n, "lifts", "extension"), "lifts", 0)) e.lifts.push_back(static_cast<int>(l));
    } else {
      if (n["lifts"]) error(n["lifts"], "lifts apply to mult_table extensions only");
      if (n["permutations"]) {
        e.kind = ExtensionSpec::Kind::permutations;
        e.permutations = int_rows(n["permutations"], "permutations", 0);
      } else {
        e.kind = ExtensionSpec::Kind::matrices;
        for (const auto& m : sequence(n["matrices"], "matrices")) e.matrices.push_back(matrix(m, "extension matrix"));
      }
      for (const auto& c : center) {
        std::vector<int> w;
        for (long k : integers(c, "center word", 1)) w.push_back(static_cast<int>(k));
        e.center.push_back(std::move(w));
      }
    }
    auto chi = sequence(required(n, "chi", "extension"), "chi");
    if (chi.size() != center.size()) error(chi, "chi must list one exponent per center element");
    for (const auto& c : chi) e.chi.push_back(rational(c, "chi exponent"));
    return e;
  }

  ScenarioDocument document(const YAML::Node& root) const {
    expect_map(root, "scenario",
               {"name", "description", "root_system", "levi_subset", "delta_sigma", "r_group", "extension", "options"});
    ScenarioDocument d;
    d.name = scalar(required(root, "name", "scenario"), "name");
    if (root["description"]) d.description = scalar(root["description"], "description");
    d.root_system = root_system(required(root, "root_system", "scenario"));
    if (root["levi_subset"])
      for (long k : integers(root["levi_subset"], "levi_subset", 1)) d.levi_subset.push_back(static_cast<std::size_t>(k));
    if (root["delta_sigma"])
      for (long k : integers(root["delta_sigma"], "delta_sigma", 0)) d.delta_sigma.push_back(static_cast<std::size_t>(k));
    if (root["r_group"]) {
      const auto rg = root["r_group"];
      expect_map(rg, "r_group", {"generators"});
      if (rg["generators"])
        for (const auto& g : sequence(rg["generators"], "generators")) d.generators.push_back(generator(g));
    }
    d.extension = root["extension"] ? extension(root["extension"]) : ExtensionSpec{};
    if (root["options"]) {
      const auto opt = root["options"];
      expect_map(opt, "options", {"levi_family", "base_characters"});
      if (opt["levi_family"]) {
        try {
          d.levi_family = parse_levi_family(scalar(opt["levi_family"], "levi_family"));
        } catch (const InvalidInput& e) {
          error(opt["levi_family"], e.what());
        }
      }
      if (opt["base_characters"])
        for (const auto& b : sequence(opt["base_characters"], "base_characters")) {
          expect_map(b, "base character", {"levi", "character"});
          d.base_characters.push_back(BaseCharacter{
              static_cast<std::size_t>(integer(required(b, "levi", "base character"), "levi", 0)),
              static_cast<std::size_t>(integer(required(b, "character", "base character"), "character", 0))});
        }
    }
    return d;
  }

 private:
  std::string source_;
};

void emit_rational_list(YAML::Emitter& out, const Vector& v) {
  out << YAML::Flow << YAML::BeginSeq;
  for (const auto& q : v) out << to_string(q);
  out << YAML::EndSeq;
}

void emit_matrix(YAML::Emitter& out, const Matrix& m) {
  out << YAML::Flow << YAML::BeginSeq;
  for (std::size_t r = 0; r < m.rows(); ++r) emit_rational_list(out, m.row(r));
  out << YAML::EndSeq;
}

template <class Int>
void emit_int_list(YAML::Emitter& out, const std::vector<Int>& v) {
  out << YAML::Flow << YAML::BeginSeq;
  for (auto x : v) out << static_cast<long>(x);
  out << YAML::EndSeq;
}

}  // namespace

ScenarioDocument parse_scenario_document(std::string_view text, const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(source, e.mark.line + 1, e.mark.column + 1, e.msg);
  }
  return Reader(source).document(root);
}

Scenario parse_scenario(std::string_view text, const std::string& source) {
  return build_scenario(parse_scenario_document(text, source));
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path);
}

std::string emit_scenario(const ScenarioDocument& d) {
  YAML::Emitter out;
  out << YAML::BeginMap;
  out << YAML::Key << "name" << YAML::Value << d.name;
  if (!d.description.empty()) out << YAML::Key << "description" << YAML::Value << d.description;
  out << YAML::Key << "root_system" << YAML::Value << YAML::BeginMap;
  if (d.root_system.is_explicit()) {
    out << YAML::Key << "ambient_dim" << YAML::Value << d.root_system.ambient_dim;
    out << YAML::Key << "roots" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (const auto& r : d.root_system.roots) emit_rational_list(out, r);
    out << YAML::EndSeq;
    out << YAML::Key << "simple_roots" << YAML::Value;
    emit_int_list(out, d.root_system.simple_roots);
  } else {
    out << YAML::Key << "family" << YAML::Value << d.root_system.family;
    out << YAML::Key << "rank" << YAML::Value << d.root_system.rank;
  }
  out << YAML::EndMap;
  out << YAML::Key << "levi_subset" << YAML::Value;
  emit_int_list(out, d.levi_subset);
  out << YAML::Key << "delta_sigma" << YAML::Value;
  emit_int_list(out, d.delta_sigma);
  out << YAML::Key << "r_group" << YAML::Value << YAML::BeginMap << YAML::Key << "generators" << YAML::Value
      << YAML::BeginSeq;
  for (const auto& g : d.generators) {
    out << YAML::BeginMap;
    if (g.word) {
      out << YAML::Key << "word" << YAML::Value;
      emit_int_list(out, *g.word);
    } else {
      out << YAML::Key << "matrix" << YAML::Value;
      emit_matrix(out, g.matrix);
    }
    out << YAML::EndMap;
  }
  out << YAML::EndSeq << YAML::EndMap;
  out << YAML::Key << "extension" << YAML::Value;
  const auto& e = d.extension;
  using Kind = ExtensionSpec::Kind;
  if (e.kind == Kind::split) {
    out << "split";
  } else {
    out << YAML::BeginMap;
    if (e.kind == Kind::mult_table) {
      out << YAML::Key << "mult_table" << YAML::Value << YAML::BeginSeq;
      for (const auto& row : e.mult_table) emit_int_list(out, row);
      out << YAML::EndSeq;
      out << YAML::Key << "center" << YAML::Value << YAML::Flow << YAML::BeginSeq;
      for (const auto& c : e.center) out << static_cast<long>(c.at(0));
      out << YAML::EndSeq;
      out << YAML::Key << "lifts" << YAML::Value;
      emit_int_list(out, e.lifts);
    } else {
      if (e.kind == Kind::permutations) {
        out << YAML::Key << "permutations" << YAML::Value << YAML::BeginSeq;
        for (const auto& p : e.permutations) emit_int_list(out, p);
        out << YAML::EndSeq;
      } else {
        out << YAML::Key << "matrices" << YAML::Value << YAML::BeginSeq;
        for (const auto& m : e.matrices) emit_matrix(out, m);
        out << YAML::EndSeq;
      }
      out << YAML::Key << "center" << YAML::Value << YAML::Flow << YAML::BeginSeq;
      for (const auto& c : e.center) emit_int_list(out, c);
      out << YAML::EndSeq;
    }
    out << YAML::Key << "chi" << YAML::Value;
    emit_rational_list(out, e.chi);
    out << YAML::EndMap;
  }
  out << YAML::Key << "options" << YAML::Value << YAML::BeginMap;
  out << YAML::Key << "levi_family" << YAML::Value << to_string(d.levi_family);
  if (!d.base_characters.empty()) {
    out << YAML::Key << "base_characters" << YAML::Value << YAML::BeginSeq;
    for (const auto& b : d.base_characters)
      out << YAML::Flow << YAML::BeginMap << YAML::Key << "levi" << YAML::Value << b.levi << YAML::Key << "character"
          << YAML::Value << b.character << YAML::EndMap;
    out << YAML::EndSeq;
  }
  out << YAML::EndMap;
  out << YAML::EndMap;
  return std::string(out.c_str()) + "\n";
}

}  // namespace stdual
