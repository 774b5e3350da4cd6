#include "simat/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "simat/block_ops.hpp"
#include "simat/fuzzy.hpp"
#include "simat/io.hpp"
#include "simat/structure/checks.hpp"
#include "simat/structure/span.hpp"

namespace simat::cli {

namespace {

// ---------------------------------------------------------------------------
// Carrier file parsing (TOML subset).

struct TomlValue {
  enum class Kind { String, Integer, Array } kind = Kind::String;
  std::string str;
  long long integer = 0;
  std::vector<TomlValue> array;
};

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

TomlValue parse_toml_value(const std::string& raw, int line_no);

std::vector<TomlValue> parse_toml_array(const std::string& inner, int line_no) {
  std::vector<TomlValue> out;
  std::string cur;
  int depth = 0;
  bool in_str = false;
  for (char c : inner) {
    if (c == '"') in_str = !in_str;
    if (!in_str) {
      if (c == '[') ++depth;
      if (c == ']') --depth;
      if (c == ',' && depth == 0) {
        std::string t = trim(cur);
        if (!t.empty()) out.push_back(parse_toml_value(t, line_no));
        cur.clear();
        continue;
      }
    }
    cur += c;
  }
  std::string t = trim(cur);
  if (!t.empty()) out.push_back(parse_toml_value(t, line_no));
  return out;
}

TomlValue parse_toml_value(const std::string& raw, int line_no) {
  TomlValue v;
  std::string t = trim(raw);
  if (t.empty()) throw ParseError("empty value", line_no, 1);
  if (t.front() == '"') {
    if (t.size() < 2 || t.back() != '"') throw ParseError("unterminated string", line_no, 1);
    v.kind = TomlValue::Kind::String;
    v.str = t.substr(1, t.size() - 2);
    return v;
  }
  if (t.front() == '[') {
    if (t.back() != ']') throw ParseError("unterminated array", line_no, 1);
    v.kind = TomlValue::Kind::Array;
    v.array = parse_toml_array(t.substr(1, t.size() - 2), line_no);
    return v;
  }
  v.kind = TomlValue::Kind::Integer;
  try {
    v.integer = std::stoll(t);
  } catch (...) {
    throw ParseError("expected an integer, string, or array, got '" + t + "'", line_no, 1);
  }
  return v;
}

std::vector<int> to_int_list(const TomlValue& v, int line_no) {
  if (v.kind != TomlValue::Kind::Array) throw ParseError("expected an array", line_no, 1);
  std::vector<int> out;
  for (const TomlValue& e : v.array) {
    if (e.kind != TomlValue::Kind::Integer)
      throw ParseError("expected integers in array", line_no, 1);
    out.push_back(static_cast<int>(e.integer));
  }
  return out;
}

std::vector<Scalar> to_scalar_list(const TomlValue& v, int line_no) {
  if (v.kind != TomlValue::Kind::Array) throw ParseError("expected an array", line_no, 1);
  std::vector<Scalar> out;
  for (const TomlValue& e : v.array) {
    if (e.kind == TomlValue::Kind::Integer)
      out.push_back(Scalar::integer(BigInt(e.integer)));
    else if (e.kind == TomlValue::Kind::String)
      out.push_back(Scalar::parse(e.str));
    else
      throw ParseError("expected scalar literals in array", line_no, 1);
  }
  return out;
}

SuperIntervalMatrix parse_generator(const std::string& body, const ScalarDomain& d,
                                    const PartitionSpec& p) {
  std::istringstream in(body);
  std::string tok;
  std::vector<Scalar> grid;
  while (in >> tok) {
    if (tok == "|" || tok == ";" || tok == "/") continue;
    grid.push_back(Scalar::parse(tok));
  }
  return SuperIntervalMatrix::build(d, p, std::move(grid));
}

struct PendingCarrier {
  std::optional<std::string> domain_tag;
  int rows = 1, cols = 1;
  std::vector<int> row_cuts, col_cuts;
  std::optional<std::vector<Scalar>> pool;
  std::optional<std::vector<int>> pattern_list;
  bool pattern_constant = false;
  std::string op = "add";
};

}  // namespace

CarrierFile parse_carrier_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::string section;
  PendingCarrier pc;
  CarrierFile out;
  std::vector<std::string> generator_bodies;
  std::vector<std::vector<std::string>> part_bodies;
  std::optional<std::string> action_scalars_tag;
  std::optional<std::vector<Scalar>> action_scalars_list;
  std::string action_kind = "type1";
  bool saw_action = false;
  int map_rows = 0, map_cols = 0;
  std::vector<int> map_row_cuts, map_col_cuts;

  while (std::getline(in, line)) {
    ++line_no;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("[[", 0) == 0) {
      std::string name = trim(t.substr(2, t.size() - 4));
      if (name != "part") throw ParseError("unknown table '" + name + "'", line_no, 1);
      section = "part";
      part_bodies.emplace_back();
      continue;
    }
    if (t.front() == '[') {
      if (t.back() != ']') throw ParseError("bad section header", line_no, 1);
      section = trim(t.substr(1, t.size() - 2));
      if (section != "action" && section != "map")
        throw ParseError("unknown section '" + section + "'", line_no, 1);
      if (section == "action") saw_action = true;
      continue;
    }
    auto eq = t.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_no, 1);
    std::string key = trim(t.substr(0, eq));
    TomlValue value = parse_toml_value(t.substr(eq + 1), line_no);

    if (section.empty()) {
      if (key == "domain" && value.kind == TomlValue::Kind::String)
        pc.domain_tag = value.str;
      else if (key == "rows")
        pc.rows = static_cast<int>(value.integer);
      else if (key == "cols")
        pc.cols = static_cast<int>(value.integer);
      else if (key == "row_cuts")
        pc.row_cuts = to_int_list(value, line_no);
      else if (key == "col_cuts")
        pc.col_cuts = to_int_list(value, line_no);
      else if (key == "pool")
        pc.pool = to_scalar_list(value, line_no);
      else if (key == "op" && value.kind == TomlValue::Kind::String)
        pc.op = value.str;
      else if (key == "pattern" && value.kind == TomlValue::Kind::String &&
               value.str == "constant")
        pc.pattern_constant = true;
      else if (key == "pattern" && value.kind == TomlValue::Kind::Array)
        pc.pattern_list = to_int_list(value, line_no);
      else if (key == "seed")
        out.seed = static_cast<std::uint64_t>(value.integer);
      else if (key == "coeff_bound")
        out.coeff_bound = static_cast<int>(value.integer);
      else if (key == "generators") {
        if (value.kind != TomlValue::Kind::Array)
          throw ParseError("generators must be an array of strings", line_no, 1);
        for (const TomlValue& e : value.array) generator_bodies.push_back(e.str);
      } else
        throw ParseError("unknown key '" + key + "'", line_no, 1);
    } else if (section == "action") {
      if (key == "kind" && value.kind == TomlValue::Kind::String)
        action_kind = value.str;
      else if (key == "scalars" && value.kind == TomlValue::Kind::String)
        action_scalars_tag = value.str;
      else if (key == "scalars" && value.kind == TomlValue::Kind::Array)
        action_scalars_list = to_scalar_list(value, line_no);
      else if (key == "coeff_bound")
        out.coeff_bound = static_cast<int>(value.integer);
      else
        throw ParseError("unknown action key '" + key + "'", line_no, 1);
    } else if (section == "map") {
      if (key == "rows")
        map_rows = static_cast<int>(value.integer);
      else if (key == "cols")
        map_cols = static_cast<int>(value.integer);
      else if (key == "row_cuts")
        map_row_cuts = to_int_list(value, line_no);
      else if (key == "col_cuts")
        map_col_cuts = to_int_list(value, line_no);
      else if (key == "cells") {
        if (value.kind != TomlValue::Kind::Array)
          throw ParseError("map cells must be an array of strings", line_no, 1);
        for (const TomlValue& e : value.array) out.map_cells.push_back(e.str);
      } else
        throw ParseError("unknown map key '" + key + "'", line_no, 1);
    } else if (section == "part") {
      if (key == "generators" && value.kind == TomlValue::Kind::Array) {
        for (const TomlValue& e : value.array) part_bodies.back().push_back(e.str);
      } else
        throw ParseError("unknown part key '" + key + "'", line_no, 1);
    }
  }

  if (!pc.domain_tag) throw ParseError("carrier file needs domain = \"<tag>\"", line_no, 1);
  CarrierSpec spec;
  spec.domain = ScalarDomain::parse_tag(*pc.domain_tag);
  spec.partition = PartitionSpec(pc.rows, pc.cols, pc.row_cuts, pc.col_cuts);
  spec.entry_pool = pc.pool;
  spec.op = parse_carrier_op(pc.op);
  if (pc.pattern_constant)
    spec.pattern = std::vector<int>(static_cast<std::size_t>(spec.cells()), 0);
  else if (pc.pattern_list)
    spec.pattern = pc.pattern_list;
  spec.validate();
  out.carrier = spec;

  out.action.kind = parse_action_kind(saw_action ? action_kind : "type1");
  out.action.scalar_domain =
      action_scalars_tag ? ScalarDomain::parse_tag(*action_scalars_tag) : spec.domain;
  out.action.scalar_set = action_scalars_list;
  out.action.validate();

  for (const std::string& body : generator_bodies)
    out.generators.push_back(parse_generator(body, spec.domain, spec.partition));
  for (const auto& bodies : part_bodies) {
    std::vector<SuperIntervalMatrix> part;
    for (const std::string& body : bodies)
      part.push_back(parse_generator(body, spec.domain, spec.partition));
    out.parts.push_back(std::move(part));
  }
  if (map_rows > 0 && map_cols > 0)
    out.map_shape = PartitionSpec(map_rows, map_cols, map_row_cuts, map_col_cuts);
  return out;
}

CarrierFile load_carrier_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open carrier file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_carrier_file(buf.str());
}

namespace {

// One linear-map cell: sum of terms `k*a<i>`, `a<i>`, `k`.
struct MapTerm {
  Scalar coeff = Scalar(1);
  int index = -1;  // -1: constant term
};

std::vector<MapTerm> parse_map_cell(const std::string& expr) {
  std::vector<MapTerm> terms;
  std::string cur;
  auto flush = [&]() {
    std::string t = trim(cur);
    cur.clear();
    if (t.empty()) throw Error("empty term in map expression");
    MapTerm term;
    auto star = t.find('*');
    std::string var = t;
    if (star != std::string::npos) {
      term.coeff = Scalar::parse(trim(t.substr(0, star)));
      var = trim(t.substr(star + 1));
    }
    if (!var.empty() && var[0] == 'a') {
      long long idx = 0;
      std::string digits = var.substr(1);
      if (digits.empty() || digits.size() > 6) throw Error("map variables are a1, a2, ...");
      for (char c : digits) {
        if (c < '0' || c > '9') throw Error("map variables are a1, a2, ...");
        idx = idx * 10 + (c - '0');
      }
      term.index = static_cast<int>(idx) - 1;
      if (term.index < 0) throw Error("map variables are a1, a2, ...");
    } else {
      term.coeff = Scalar::parse(var);
      term.index = -1;
    }
    terms.push_back(term);
  };
  for (char c : expr) {
    if (c == '+') {
      flush();
      continue;
    }
    cur += c;
  }
  flush();
  return terms;
}

}  // namespace

LinearMapFn CarrierFile::compile_map() const {
  if (!map_shape) throw MapUndefined("carrier file has no [map] section");
  std::size_t want = static_cast<std::size_t>(map_shape->rows) *
                     static_cast<std::size_t>(map_shape->cols);
  if (map_cells.size() != want)
    throw MapUndefined("map needs exactly " + std::to_string(want) + " cell expressions");
  std::vector<std::vector<MapTerm>> cells;
  for (const std::string& e : map_cells) cells.push_back(parse_map_cell(e));
  PartitionSpec shape = *map_shape;
  return [cells, shape](const SuperIntervalMatrix& x) {
    const ScalarDomain& d = x.domain();
    std::vector<Scalar> grid;
    grid.reserve(cells.size());
    for (const auto& terms : cells) {
      Scalar acc(0);
      for (const MapTerm& t : terms) {
        Scalar value = t.coeff;
        if (t.index >= 0) {
          if (t.index >= static_cast<int>(x.endpoints().size()))
            throw MapUndefined("map references a" + std::to_string(t.index + 1) +
                               " beyond the source grid");
          value = scalar_mul(d, t.coeff, x.endpoints()[static_cast<std::size_t>(t.index)]);
        }
        acc = scalar_add(d, acc, value);
      }
      grid.push_back(std::move(acc));
    }
    return SuperIntervalMatrix::build(d, shape, std::move(grid));
  };
}

namespace {

// ---------------------------------------------------------------------------
// Output rendering.

nlohmann::ordered_json matrix_json(const SuperIntervalMatrix& m) {
  return nlohmann::ordered_json::parse(render_matrix(m, RenderFormat::Json));
}

std::string indent_block(const std::string& text, const std::string& pad) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) out << pad << line << "\n";
  return out.str();
}

void print_report(const StructureReport& rep, bool json, std::ostream& out) {
  if (json) {
    nlohmann::ordered_json j;
    j["subject"] = rep.subject;
    if (rep.carrier_size) j["carrier_size"] = rep.carrier_size->str();
    j["seed"] = rep.seed;
    j["samples"] = rep.sample_count;
    nlohmann::ordered_json axioms = nlohmann::ordered_json::array();
    for (const AxiomResult& a : rep.axioms) {
      nlohmann::ordered_json ja;
      ja["axiom"] = a.axiom;
      ja["verdict"] = verdict_name(a.verdict);
      if (!a.note.empty()) ja["note"] = a.note;
      nlohmann::ordered_json w = nlohmann::ordered_json::array();
      for (const auto& m : a.witness) w.push_back(matrix_json(m));
      if (!w.empty()) ja["witness"] = w;
      axioms.push_back(ja);
    }
    j["axioms"] = axioms;
    j["ok"] = rep.ok();
    out << j.dump(2) << "\n";
    return;
  }
  out << "subject: " << rep.subject << "\n";
  if (rep.carrier_size) out << "carrier-size: " << rep.carrier_size->str() << "\n";
  out << "seed: " << rep.seed << "\n";
  if (rep.sample_count > 0) out << "samples: " << rep.sample_count << "\n";
  for (const AxiomResult& a : rep.axioms) {
    out << "  " << a.axiom << ": " << verdict_name(a.verdict);
    if (!a.note.empty()) out << " -- " << a.note;
    out << "\n";
    for (const auto& m : a.witness) out << indent_block(render_matrix(m), "    ");
  }
  out << "result: " << (rep.ok() ? "holds" : "fails") << "\n";
}

void print_matrices(const std::vector<SuperIntervalMatrix>& ms, bool json, bool decimals,
                    std::ostream& out) {
  if (json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& m : ms) j.push_back(matrix_json(m));
    out << j.dump(2) << "\n";
    return;
  }
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) out << "--\n";
    out << render_matrix(ms[i], RenderFormat::Text, decimals);
  }
}

Budget make_budget(std::uint64_t seed, int samples, std::uint64_t limit, int coeff_bound) {
  Budget b;
  b.seed = seed;
  b.sample_count = samples;
  b.exhaustive_limit = limit;
  b.coeff_bound = coeff_bound;
  return b;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact super interval matrix algebra"};
  app.require_subcommand(1);

  bool json = false;
  bool decimals = false;
  std::uint64_t seed = 0;
  int samples = 1000;
  std::uint64_t limit = 100000;
  int coeff_bound = 32;
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--decimals", decimals, "render unit/qplus endpoints as decimals when exact");
  app.add_option("--seed", seed, "PRNG seed for sampled checks");
  app.add_option("--samples", samples, "samples per sampled axiom");
  app.add_option("--limit", limit, "exhaustive tuple/element budget");
  app.add_option("--coeff-bound", coeff_bound, "coefficient bound over infinite scalars");

  std::string file_a, file_b, mode = "major", by, carrier_path, eta_rule = "reciprocal";
  std::string fuzzy_op = "min", eta_zero = "1", eta_int = "1/3", eta_frac = "1/4";
  bool as_interval = false, count_only = false, list_all = false, include_trivial = false;
  int dim_m = 1, dim_n = 1, max_results = 5;

  auto* c_add = app.add_subcommand("add", "entrywise sum of two matrices");
  c_add->add_option("A", file_a)->required();
  c_add->add_option("B", file_b)->required();

  auto* c_had = app.add_subcommand("hadamard", "entrywise interval product");
  c_had->add_option("A", file_a)->required();
  c_had->add_option("B", file_b)->required();

  auto* c_smul = app.add_subcommand("scalar-mul", "scale every endpoint by a scalar");
  c_smul->add_option("--by", by, "scalar value")->required();
  c_smul->add_flag("--as-interval", as_interval, "record the scalar as [0,s] (type II)");
  c_smul->add_option("A", file_a)->required();

  auto* c_tr = app.add_subcommand("transpose", "transpose the grid and the partition");
  c_tr->add_option("A", file_a)->required();

  auto* c_mm = app.add_subcommand("matmul", "major or extended matrix product");
  c_mm->add_option("--mode", mode, "major|extended")->check(CLI::IsMember({"major", "extended"}));
  c_mm->add_option("A", file_a)->required();
  c_mm->add_option("B", file_b)->required();

  auto* c_outer = app.add_subcommand("outer", "column times row product");
  c_outer->add_option("COL", file_a)->required();
  c_outer->add_option("ROW", file_b)->required();

  auto* c_gram = app.add_subcommand("gram", "transpose(A) * A");
  c_gram->add_option("A", file_a)->required();

  auto* c_parts = app.add_subcommand("partitions", "count or list grid partitions");
  c_parts->add_flag("--count", count_only, "print the proper partition count");
  c_parts->add_flag("--list", list_all, "list the cut sets");
  c_parts->add_flag("--include-trivial", include_trivial, "include the uncut matrix");
  c_parts->add_option("M", dim_m)->required();
  c_parts->add_option("N", dim_n)->required();

  std::string check_kind;
  auto* c_check = app.add_subcommand("check", "run a structure-lab check");
  c_check->add_option("KIND", check_kind, "semigroup|group|semiring|strict|lattice|ideal|direct-sum|linear-map")
      ->required()
      ->check(CLI::IsMember({"semigroup", "group", "semiring", "strict", "lattice", "ideal",
                             "direct-sum", "linear-map"}));
  c_check->add_option("--carrier", carrier_path, "carrier description file")->required();

  std::string find_kind;
  auto* c_find = app.add_subcommand("find", "search for witnesses");
  c_find->add_option("KIND", find_kind, "zero-divisors|idempotents|units|inverses")
      ->required()
      ->check(CLI::IsMember({"zero-divisors", "idempotents", "units", "inverses"}));
  c_find->add_option("--carrier", carrier_path)->required();
  c_find->add_option("--max", max_results, "maximum witnesses to emit");

  auto* c_span = app.add_subcommand("span", "set spanned by the carrier file's generators");
  c_span->add_option("--carrier", carrier_path)->required();

  auto* c_basis = app.add_subcommand("basis", "greedy minimal generating set");
  c_basis->add_option("--carrier", carrier_path)->required();

  auto* c_fmin = app.add_subcommand("fuzzy-min", "entrywise min of two fuzzy matrices");
  c_fmin->add_option("A", file_a)->required();
  c_fmin->add_option("B", file_b)->required();

  auto* c_fmax = app.add_subcommand("fuzzy-max", "entrywise max of two fuzzy matrices");
  c_fmax->add_option("A", file_a)->required();
  c_fmax->add_option("B", file_b)->required();

  auto* c_fscale = app.add_subcommand("fuzzy-scale", "scalar min/max/product on a fuzzy matrix");
  c_fscale->add_option("--op", fuzzy_op, "min|max|prod")
      ->check(CLI::IsMember({"min", "max", "prod"}));
  c_fscale->add_option("--by", by)->required();
  c_fscale->add_option("A", file_a)->required();

  auto* c_fz = app.add_subcommand("fuzzify", "apply an eta map to a non-unit matrix");
  c_fz->add_option("--eta", eta_rule, "reciprocal|class")
      ->check(CLI::IsMember({"reciprocal", "class"}));
  c_fz->add_option("--eta-zero", eta_zero, "image of endpoint 0");
  c_fz->add_option("--eta-int", eta_int, "class image of positive integers");
  c_fz->add_option("--eta-frac", eta_frac, "class image of non-integers");
  c_fz->add_option("A", file_a)->required();

  auto* c_audit = app.add_subcommand("audit-eta", "check eta(a+b) >= min(eta(a), eta(b))");
  c_audit->add_option("--eta", eta_rule, "reciprocal|class")
      ->check(CLI::IsMember({"reciprocal", "class"}));
  c_audit->add_option("--eta-zero", eta_zero);
  c_audit->add_option("--eta-int", eta_int);
  c_audit->add_option("--eta-frac", eta_frac);
  c_audit->add_option("--carrier", carrier_path)->required();

  std::vector<std::string> argv = args;
  try {
    app.parse(std::vector<std::string>(argv.rbegin(), argv.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  auto make_eta = [&]() {
    EtaMap eta;
    eta.rule = eta_rule == "class" ? EtaMap::Rule::ConstantByClass : EtaMap::Rule::Reciprocal;
    eta.eta_zero = Scalar::parse(eta_zero);
    eta.class_int = Scalar::parse(eta_int);
    eta.class_frac = Scalar::parse(eta_frac);
    return eta;
  };

  try {
    if (*c_add) {
      print_matrices({add(load_matrix(file_a), load_matrix(file_b))}, json, decimals, out);
    } else if (*c_had) {
      print_matrices({hadamard(load_matrix(file_a), load_matrix(file_b))}, json, decimals, out);
    } else if (*c_smul) {
      print_matrices({scalar_mul(Scalar::parse(by), load_matrix(file_a),
                                 as_interval ? ScalarForm::IntervalForm : ScalarForm::Base)},
                     json, decimals, out);
    } else if (*c_tr) {
      print_matrices({transpose(load_matrix(file_a))}, json, decimals, out);
    } else if (*c_mm) {
      SuperIntervalMatrix a = load_matrix(file_a), b = load_matrix(file_b);
      print_matrices({mode == "major" ? major_product(a, b) : extended_product(a, b)}, json,
                     decimals, out);
    } else if (*c_outer) {
      print_matrices({outer_product(load_matrix(file_a), load_matrix(file_b))}, json, decimals,
                     out);
    } else if (*c_gram) {
      print_matrices({gram(load_matrix(file_a))}, json, decimals, out);
    } else if (*c_parts) {
      if (count_only || !list_all) {
        out << count_proper_partitions(dim_m, dim_n).str() << "\n";
      }
      if (list_all) {
        auto specs = enumerate_partitions(dim_m, dim_n, include_trivial);
        if (json) {
          nlohmann::ordered_json j = nlohmann::ordered_json::array();
          for (const auto& p : specs)
            j.push_back({{"row_cuts", p.row_cuts}, {"col_cuts", p.col_cuts}});
          out << j.dump(2) << "\n";
        } else {
          for (const auto& p : specs) {
            out << "rows={";
            for (std::size_t i = 0; i < p.row_cuts.size(); ++i)
              out << (i ? "," : "") << p.row_cuts[i];
            out << "} cols={";
            for (std::size_t i = 0; i < p.col_cuts.size(); ++i)
              out << (i ? "," : "") << p.col_cuts[i];
            out << "}\n";
          }
        }
      }
    } else if (*c_check) {
      CarrierFile cf = load_carrier_file(carrier_path);
      Budget budget = make_budget(cf.seed.value_or(seed), samples, limit,
                                  cf.coeff_bound.value_or(coeff_bound));
      if (app.count("--seed")) budget.seed = seed;
      StructureReport rep;
      if (check_kind == "semigroup")
        rep = check_semigroup(cf.carrier, budget);
      else if (check_kind == "group")
        rep = check_group(cf.carrier, budget);
      else if (check_kind == "semiring")
        rep = check_semiring(cf.carrier, budget);
      else if (check_kind == "strict")
        rep = check_strictness(cf.carrier, budget);
      else if (check_kind == "lattice")
        rep = check_lattice(cf.carrier, budget);
      else if (check_kind == "ideal")
        rep = check_ideal(cf.generators, cf.carrier, budget);
      else if (check_kind == "direct-sum")
        rep = check_direct_sum(cf.parts, cf.carrier, cf.action, budget);
      else
        rep = check_linear_map(cf.compile_map(), cf.carrier,
                               [&] {
                                 CarrierSpec dst = cf.carrier;
                                 if (cf.map_shape) dst.partition = *cf.map_shape;
                                 dst.pattern.reset();
                                 return dst;
                               }(),
                               cf.action, budget);
      print_report(rep, json, out);
    } else if (*c_find) {
      CarrierFile cf = load_carrier_file(carrier_path);
      Budget budget = make_budget(cf.seed.value_or(seed), samples, limit,
                                  cf.coeff_bound.value_or(coeff_bound));
      WitnessKind kind = WitnessKind::Idempotent;
      if (find_kind == "zero-divisors") kind = WitnessKind::ZeroDivisorPair;
      if (find_kind == "units") kind = WitnessKind::UnitPair;
      if (find_kind == "inverses") kind = WitnessKind::AdditiveInversePair;
      try {
        WitnessSearch ws = find_witnesses(cf.carrier, kind, budget, max_results);
        if (json) {
          nlohmann::ordered_json j;
          j["kind"] = witness_kind_name(kind);
          j["verdict"] = verdict_name(ws.verdict);
          nlohmann::ordered_json arr = nlohmann::ordered_json::array();
          for (const auto& tup : ws.witnesses) {
            nlohmann::ordered_json t = nlohmann::ordered_json::array();
            for (const auto& m : tup) t.push_back(matrix_json(m));
            arr.push_back(t);
          }
          j["witnesses"] = arr;
          out << j.dump(2) << "\n";
        } else {
          out << "kind: " << witness_kind_name(kind) << "\n";
          out << "found: " << ws.witnesses.size() << "\n";
          for (const auto& tup : ws.witnesses) {
            out << "--\n";
            for (const auto& m : tup) out << render_matrix(m, RenderFormat::Text, decimals);
          }
        }
      } catch (const NoneFound& e) {
        out << "none found: " << e.what() << "\n";
      }
    } else if (*c_span) {
      CarrierFile cf = load_carrier_file(carrier_path);
      Budget budget = make_budget(cf.seed.value_or(seed), samples, limit,
                                  cf.coeff_bound.value_or(coeff_bound));
      SpanResult s = span(cf.generators, cf.action, budget);
      if (!json) out << "elements: " << s.elements.size()
                     << (s.truncated ? " (bounded coefficients)" : "") << "\n";
      print_matrices(s.elements, json, decimals, out);
    } else if (*c_basis) {
      CarrierFile cf = load_carrier_file(carrier_path);
      Budget budget = make_budget(cf.seed.value_or(seed), samples, limit,
                                  cf.coeff_bound.value_or(coeff_bound));
      GeneratingSet g = find_generating_set(cf.carrier, cf.action, budget);
      if (json) {
        nlohmann::ordered_json j;
        j["carrier_size"] = g.carrier_size.str();
        j["generators"] = nlohmann::ordered_json::array();
        for (const auto& m : g.generators) j["generators"].push_back(matrix_json(m));
        out << j.dump(2) << "\n";
      } else {
        out << "carrier-size: " << g.carrier_size.str() << "\n";
        out << "generators: " << g.generators.size() << "\n";
        print_matrices(g.generators, false, decimals, out);
      }
    } else if (*c_fmin) {
      print_matrices({fuzzy_min(load_matrix(file_a), load_matrix(file_b))}, json, decimals, out);
    } else if (*c_fmax) {
      print_matrices({fuzzy_max(load_matrix(file_a), load_matrix(file_b))}, json, decimals, out);
    } else if (*c_fscale) {
      SuperIntervalMatrix a = load_matrix(file_a);
      Scalar s = Scalar::parse(by);
      SuperIntervalMatrix r = fuzzy_op == "min"   ? fuzzy_scalar_min(s, a)
                              : fuzzy_op == "max" ? fuzzy_scalar_max(s, a)
                                                  : fuzzy_scalar_prod(s, a);
      print_matrices({r}, json, decimals, out);
    } else if (*c_fz) {
      print_matrices({fuzzify(load_matrix(file_a), make_eta())}, json, decimals, out);
    } else if (*c_audit) {
      CarrierFile cf = load_carrier_file(carrier_path);
      Budget budget = make_budget(cf.seed.value_or(seed), samples, limit,
                                  cf.coeff_bound.value_or(coeff_bound));
      print_report(audit_eta(make_eta(), cf.carrier, budget), json, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace simat::cli
