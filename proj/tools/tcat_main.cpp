// Command-line surface: tables and reports for the tensor-category
// combinatorics engine, plus the matrix levelizer.

#include "tcat/levelize.hpp"
#include "tcat/oracle.hpp"
#include "tcat/parallel.hpp"
#include "tcat/resolution.hpp"
#include "tcat/symmetry.hpp"
#include "tcat/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace tcat;
using ordered_json = nlohmann::ordered_json;

namespace {

enum class OutputFormat { human, json, csv };

struct CommonOpts {
  bool as_json = false;
  bool as_csv = false;
  OutputFormat format() const {
    if (as_json) return OutputFormat::json;
    if (as_csv) return OutputFormat::csv;
    return OutputFormat::human;
  }
};

void add_format_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_flag("--json", opts.as_json, "emit a JSON document");
  cmd->add_flag("--csv", opts.as_csv, "emit CSV rows");
}

void emit_table(const Table& table, const CommonOpts& opts, ordered_json header) {
  switch (opts.format()) {
    case OutputFormat::json: {
      ordered_json doc = std::move(header);
      ordered_json entries = ordered_json::array();
      for (const auto& [key, mult] : table)
        entries.push_back({{"key", format_tuple(key)}, {"mult", format_mult(mult)}});
      doc["entries"] = std::move(entries);
      std::cout << doc.dump(2) << "\n";
      break;
    }
    case OutputFormat::csv:
      std::cout << "key,mult\n";
      for (const auto& [key, mult] : table)
        std::cout << "\"" << format_tuple(key) << "\"," << format_mult(mult) << "\n";
      break;
    case OutputFormat::human:
      if (table.empty()) {
        std::cout << "(empty)\n";
        break;
      }
      for (const auto& [key, mult] : table)
        std::cout << format_tuple(key) << "  x" << format_mult(mult) << "\n";
      break;
  }
}

void emit_report(const CheckReport& report, const CommonOpts& opts) {
  if (opts.format() == OutputFormat::json) {
    ordered_json doc{{"check", report.name},
                     {"range", report.range},
                     {"cases", report.cases},
                     {"skipped", report.skipped},
                     {"pass", report.pass}};
    ordered_json ces = ordered_json::array();
    for (const auto& ce : report.counterexamples)
      ces.push_back({{"input", ce.input}, {"lhs", ce.lhs}, {"rhs", ce.rhs}});
    doc["counterexamples"] = std::move(ces);
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::cout << report.name << " [" << report.range << "]: " << (report.pass ? "PASS" : "FAIL")
            << " (" << report.cases << " cases";
  if (report.skipped) std::cout << ", " << report.skipped << " skipped";
  std::cout << ")\n";
  for (const auto& ce : report.counterexamples)
    std::cout << "  counterexample " << ce.input << ": " << ce.lhs << " != " << ce.rhs << "\n";
}

int run_lr(const std::string& lam, const std::string& mu, const std::string& nu,
           bool use_oracle) {
  YoungDiagram l = parse_diagram(lam), m = parse_diagram(mu), n = parse_diagram(nu);
  Mult value = use_oracle ? oracle::lr_oracle(l, m, n) : lr_coefficient(l, m, n);
  std::cout << format_mult(value) << "\n";
  return 0;
}

int run_socle(const std::string& cat, const std::string& object, const std::string& tuple_text,
              const std::string& vector_text, int t, int q, const CommonOpts& opts) {
  ordered_json header{{"cat", cat}, {"object", object}, {"t", t}, {"q", q}};
  if (object == "Jdegree") {
    DegreeVector v = parse_degree(vector_text, t);
    auto table = socle_layers_J_degree(v, q);
    header["vector"] = format_degree(v);
    if (opts.format() == OutputFormat::json) {
      ordered_json doc = header;
      ordered_json entries = ordered_json::array();
      for (const auto& [key, mult] : table)
        entries.push_back({{"key", format_degree(key)}, {"mult", format_mult(mult)}});
      doc["entries"] = std::move(entries);
      std::cout << doc.dump(2) << "\n";
    } else if (opts.format() == OutputFormat::csv) {
      std::cout << "key,mult\n";
      for (const auto& [key, mult] : table)
        std::cout << "\"" << format_degree(key) << "\"," << format_mult(mult) << "\n";
    } else {
      if (table.empty()) std::cout << "(empty)\n";
      for (const auto& [key, mult] : table)
        std::cout << format_degree(key) << "  x" << format_mult(mult) << "\n";
    }
    return 0;
  }
  if (object == "I") {
    emit_table(socle_layers_I(q, t), opts, std::move(header));
    return 0;
  }
  DiagramTuple x = parse_tuple(tuple_text, t);
  header["tuple"] = format_tuple(x);
  Table table;
  if (object == "J")
    table = (cat == "bfT") ? socle_layers_I_bfT(x, q) : socle_layers_J(x, q);
  else if (object == "Ilambda")
    table = (cat == "bfT") ? socle_layers_I_bfT(x, q) : socle_layers_I_lambda(x, q);
  else if (object == "M")
    table = socle_layers_M(x, q);
  else
    throw CLI::ValidationError("--object", "unknown object " + object);
  emit_table(table, opts, std::move(header));
  return 0;
}

Category parse_category(const std::string& name) {
  if (name == "smallTT") return Category::smallTT;
  if (name == "Tleft") return Category::Tleft;
  if (name == "TT") return Category::TT;
  if (name == "bfT") return Category::bfT;
  if (name == "underlineT") return Category::underlineT;
  throw CLI::ValidationError("--cat", "unknown category " + name);
}

int run_resolution(const std::string& cat, const std::string& tuple_text, int t, int max_degree,
                   const CommonOpts& opts) {
  Category category = parse_category(cat);
  DiagramTuple x = parse_tuple(tuple_text, t);
  Resolution res;
  switch (category) {
    case Category::smallTT:
    case Category::underlineT:
      if (!x.inner_only())
        throw std::invalid_argument("resolution: tuple must carry inner diagrams only");
      res = resolution_smallTT(x.inner_left, x.inner_right, t);
      break;
    case Category::Tleft:
      res = resolution_Tleft(left_ext(x), t);
      break;
    case Category::TT:
      res = resolution_TT(x, max_degree);
      break;
    case Category::bfT:
      res = resolution_bfT(x);
      break;
  }
  int shown = res.length ? std::min(*res.length, max_degree) : max_degree;
  if (opts.format() == OutputFormat::json) {
    ordered_json doc{{"cat", cat}, {"t", t}, {"tuple", format_tuple(x)}};
    if (res.length)
      doc["length"] = *res.length;
    else
      doc["length"] = nullptr;
    ordered_json terms = ordered_json::array();
    for (int k = 0; k <= shown; ++k) {
      ordered_json entries = ordered_json::array();
      for (const auto& [key, mult] : res.term(k))
        entries.push_back({{"key", format_tuple(key)}, {"mult", format_mult(mult)}});
      terms.push_back({{"degree", k}, {"entries", std::move(entries)}});
    }
    doc["terms"] = std::move(terms);
    std::cout << doc.dump(2) << "\n";
  } else if (opts.format() == OutputFormat::csv) {
    std::cout << "degree,key,mult\n";
    for (int k = 0; k <= shown; ++k)
      for (const auto& [key, mult] : res.term(k))
        std::cout << k << ",\"" << format_tuple(key) << "\"," << format_mult(mult) << "\n";
  } else {
    if (res.length)
      std::cout << "length " << *res.length << "\n";
    else
      std::cout << "length unbounded (showing degrees 0.." << shown << ")\n";
    for (int k = 0; k <= shown; ++k) {
      std::cout << "degree " << k << ":\n";
      for (const auto& [key, mult] : res.term(k))
        std::cout << "  " << format_tuple(key) << "  x" << format_mult(mult) << "\n";
    }
  }
  return 0;
}

int run_ext(const std::string& cat, const std::string& kappa_text, const std::string& lambda_text,
            int t, int q, bool profile, int max_degree, const CommonOpts& opts) {
  Category category = parse_category(cat);
  DiagramTuple kap = parse_tuple(kappa_text, t);
  DiagramTuple lam = parse_tuple(lambda_text, t);
  if (!profile) {
    std::cout << format_mult(ext_dim(kap, lam, q, category)) << "\n";
    return 0;
  }
  std::vector<std::pair<int, Mult>> dims;
  for (int k = 0; k <= max_degree; ++k) {
    Mult d = ext_dim(kap, lam, k, category);
    if (d != 0) dims.push_back({k, d});
  }
  if (opts.format() == OutputFormat::json) {
    ordered_json doc{{"cat", cat},
                     {"t", t},
                     {"kappa", format_tuple(kap)},
                     {"lambda", format_tuple(lam)},
                     {"max_degree", max_degree}};
    ordered_json entries = ordered_json::array();
    for (const auto& [k, d] : dims) entries.push_back({{"q", k}, {"dim", format_mult(d)}});
    doc["profile"] = std::move(entries);
    std::cout << doc.dump(2) << "\n";
  } else if (opts.format() == OutputFormat::csv) {
    std::cout << "q,dim\n";
    for (const auto& [k, d] : dims) std::cout << k << "," << format_mult(d) << "\n";
  } else {
    if (dims.empty()) std::cout << "(zero through degree " << max_degree << ")\n";
    for (const auto& [k, d] : dims)
      std::cout << "Ext^" << k << " = " << format_mult(d) << "\n";
  }
  return 0;
}

int run_poset(const std::string& kind_name, const std::string& vector_text, int t, int q,
              bool dot, size_t max_level_size, const CommonOpts& opts) {
  PosetKind kind;
  if (kind_name == "P")
    kind = PosetKind::P;
  else if (kind_name == "bfP")
    kind = PosetKind::bfP;
  else
    throw CLI::ValidationError("--kind", "level sets support kinds P and bfP");
  DegreeVector v = parse_degree(vector_text, t);
  auto levels = level_sets(v, kind, q, max_level_size);
  if (dot) {
    std::cout << "digraph levels {\n  rankdir=TB;\n";
    for (size_t ql = 0; ql < levels.size(); ++ql)
      for (const auto& k : levels[ql])
        std::cout << "  \"" << format_degree(k) << "\" [label=\"" << format_degree(k)
                  << "\", level=" << ql << "];\n";
    for (size_t ql = 0; ql + 1 < levels.size(); ++ql)
      for (const auto& k : levels[ql]) {
        auto steps = one_step(k, kind);
        for (const auto& s : steps)
          if (levels[ql + 1].count(s))
            std::cout << "  \"" << format_degree(k) << "\" -> \"" << format_degree(s)
                      << "\";\n";
      }
    std::cout << "}\n";
    return 0;
  }
  if (opts.format() == OutputFormat::json) {
    ordered_json doc{{"kind", kind_name}, {"t", t}, {"vector", format_degree(v)}};
    ordered_json out = ordered_json::array();
    for (size_t ql = 0; ql < levels.size(); ++ql) {
      ordered_json members = ordered_json::array();
      for (const auto& k : levels[ql]) members.push_back(format_degree(k));
      out.push_back({{"q", ql}, {"members", std::move(members)}});
    }
    doc["levels"] = std::move(out);
    std::cout << doc.dump(2) << "\n";
  } else if (opts.format() == OutputFormat::csv) {
    std::cout << "q,member\n";
    for (size_t ql = 0; ql < levels.size(); ++ql)
      for (const auto& k : levels[ql])
        std::cout << ql << ",\"" << format_degree(k) << "\"\n";
  } else {
    for (size_t ql = 0; ql < levels.size(); ++ql) {
      std::cout << "level " << ql << ":";
      for (const auto& k : levels[ql]) std::cout << " " << format_degree(k);
      std::cout << "\n";
    }
  }
  return 0;
}

ordered_json matrix_to_json(const SparseMatrix& m) {
  ordered_json entries = ordered_json::array();
  for (const auto& [rc, value] : m.entries)
    entries.push_back({{"row", m.labels[static_cast<size_t>(rc.first)]},
                       {"col", m.labels[static_cast<size_t>(rc.second)]},
                       {"value", value.str()}});
  return entries;
}

// Accepts coordinate text or a JSON document {"entries": [[row,col,value],...]}.
SparseMatrix read_matrix(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
    ordered_json doc = ordered_json::parse(text);
    const ordered_json& entries = doc.is_array() ? doc : doc.at("entries");
    SparseMatrix m;
    for (const auto& e : entries) {
      if (e.is_array())
        m.set(e.at(0).get<std::string>(), e.at(1).get<std::string>(),
              Rational::parse(e.at(2).get<std::string>()));
      else
        m.set(e.at("row").get<std::string>(), e.at("col").get<std::string>(),
              Rational::parse(e.at("value").get<std::string>()));
    }
    return m;
  }
  std::istringstream plain(text);
  return SparseMatrix::parse_coordinate_text(plain);
}

int run_levelize(const std::string& input, const std::string& output, const CommonOpts& opts) {
  SparseMatrix m;
  if (input.empty() || input == "-") {
    m = read_matrix(std::cin);
  } else {
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open input file " + input);
    m = read_matrix(in);
  }
  auto lv = levelize(m);
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!output.empty() && output != "-") {
    file.open(output);
    if (!file) throw std::invalid_argument("cannot open output file " + output);
    os = &file;
  }
  if (opts.format() == OutputFormat::csv)
    throw CLI::ValidationError("--csv", "levelize emits text or JSON");
  if (opts.format() == OutputFormat::json || opts.as_json) {
    ordered_json doc;
    ordered_json classes = ordered_json::array();
    for (size_t c = 0; c < lv.classes.size(); ++c) {
      const auto& cc = lv.classes[c];
      ordered_json levels = ordered_json::array();
      for (const auto& level : cc.levels) {
        ordered_json names = ordered_json::array();
        for (int a : level) names.push_back(m.labels[static_cast<size_t>(a)]);
        levels.push_back(std::move(names));
      }
      classes.push_back({{"representative", m.labels[static_cast<size_t>(cc.representative)]},
                         {"levels", std::move(levels)},
                         {"bandwidth", lv.stats[c].bandwidth},
                         {"max_adjacent_level_width", lv.stats[c].max_adjacent_level_width}});
    }
    doc["classes"] = std::move(classes);
    ordered_json order = ordered_json::array();
    for (int a : lv.order) order.push_back(m.labels[static_cast<size_t>(a)]);
    doc["order"] = std::move(order);
    doc["phi_minus"] = matrix_to_json(lv.parts[0]);
    doc["phi_zero"] = matrix_to_json(lv.parts[1]);
    doc["phi_plus"] = matrix_to_json(lv.parts[2]);
    *os << doc.dump(2) << "\n";
    return 0;
  }
  for (size_t c = 0; c < lv.classes.size(); ++c) {
    const auto& cc = lv.classes[c];
    *os << "class " << c << " (representative "
        << m.labels[static_cast<size_t>(cc.representative)] << ", bandwidth "
        << lv.stats[c].bandwidth << ", max adjacent level width "
        << lv.stats[c].max_adjacent_level_width << ")\n";
    for (size_t n = 0; n < cc.levels.size(); ++n) {
      *os << "  level " << n << ":";
      for (int a : cc.levels[n]) *os << " " << m.labels[static_cast<size_t>(a)];
      *os << "\n";
    }
  }
  *os << "order:";
  for (int a : lv.order) *os << " " << m.labels[static_cast<size_t>(a)];
  *os << "\n";
  const char* names[3] = {"phi_minus", "phi_zero", "phi_plus"};
  for (int part = 0; part < 3; ++part) {
    *os << names[part] << ":\n";
    for (const auto& [rc, value] : lv.parts[static_cast<size_t>(part)].entries)
      *os << "  " << m.labels[static_cast<size_t>(rc.first)] << " "
          << m.labels[static_cast<size_t>(rc.second)] << " " << value.str() << "\n";
  }
  return 0;
}

int run_symmetry(const std::string& check, int t, int max_boxes, const std::string& duality,
                 int workers, const CommonOpts& opts) {
  CheckReport report;
  if (check == "rev")
    report = check_rev_symmetry(t, max_boxes, workers);
  else if (check == "t0ext")
    report = check_t0_ext_symmetry(max_boxes, workers);
  else if (check == "mh")
    report = check_m_h_identity(max_boxes, workers);
  else if (check == "exthom") {
    DualityKind kind;
    if (duality == "Tleft")
      kind = DualityKind::Tleft;
    else if (duality == "bfT")
      kind = DualityKind::bfT;
    else if (duality == "bfT_t0")
      kind = DualityKind::bfT_t0;
    else
      throw CLI::ValidationError("--duality", "expected Tleft, bfT or bfT_t0");
    report = check_ext_hom_duality(t, max_boxes, kind, workers);
  } else {
    throw CLI::ValidationError("--check", "expected rev, t0ext, mh or exthom");
  }
  emit_report(report, opts);
  return report.pass ? 0 : 1;
}

// Oracle-backed validation of the main computational paths.
int run_selftest(int t, int max_boxes, int workers, const CommonOpts& opts) {
  std::vector<CheckReport> reports;
  {
    CheckReport lr;
    lr.name = "lr_vs_oracle";
    lr.range = "|lambda|<=" + std::to_string(max_boxes);
    auto diagrams = all_diagrams_upto(max_boxes);
    std::vector<std::vector<Counterexample>> shards(diagrams.size());
    std::vector<size_t> cases(diagrams.size(), 0);
    parallel_for(diagrams.size(), workers, [&](size_t i) {
      const auto& mu = diagrams[i];
      for (const auto& nu : diagrams) {
        if (mu.size() + nu.size() > max_boxes) continue;
        auto expected = oracle::schur_product(mu, nu);
        for (const auto& lam : all_diagrams(mu.size() + nu.size())) {
          ++cases[i];
          auto it = expected.find(lam);
          Mult want = it == expected.end() ? Mult(0) : it->second;
          Mult got = lr_coefficient(lam, mu, nu);
          if (want != got)
            shards[i].push_back({"lambda=" + format_diagram(lam) + " mu=" + format_diagram(mu) +
                                     " nu=" + format_diagram(nu),
                                 got.str(), want.str()});
        }
      }
    });
    for (size_t i = 0; i < shards.size(); ++i) {
      lr.cases += cases[i];
      lr.counterexamples.insert(lr.counterexamples.end(), shards[i].begin(), shards[i].end());
    }
    lr.pass = lr.counterexamples.empty();
    reports.push_back(std::move(lr));
  }
  {
    CheckReport poset;
    poset.name = "poset_levels_vs_oracle";
    poset.range = "t<=" + std::to_string(t) + ", |l|<=" + std::to_string(std::min(max_boxes, 3)) +
                  ", q<=4";
    int vec_total = std::min(max_boxes, 3);
    for (int tt = 0; tt <= t; ++tt)
      for (const auto& v : all_degree_vectors(tt, vec_total))
        for (auto kind : {PosetKind::P, PosetKind::bfP}) {
          ++poset.cases;
          auto fast = level_sets(v, kind, 4);
          auto slow = oracle::poset_level_oracle(v, kind, 4);
          for (int q = 0; q <= 4; ++q)
            if (fast[static_cast<size_t>(q)] != slow[static_cast<size_t>(q)]) {
              poset.counterexamples.push_back(
                  {"kind=" + std::string(kind == PosetKind::P ? "P" : "bfP") +
                       " l=" + format_degree(v) + " q=" + std::to_string(q),
                   std::to_string(fast[static_cast<size_t>(q)].size()) + " elements",
                   std::to_string(slow[static_cast<size_t>(q)].size()) + " elements"});
              break;
            }
        }
    poset.pass = poset.counterexamples.empty();
    reports.push_back(std::move(poset));
  }
  {
    CheckReport deg;
    deg.name = "degree_tables_closed_vs_convolution";
    int vec_total = std::min(max_boxes, 3);
    deg.range = "t<=" + std::to_string(std::min(t, 1)) + ", |l|<=" + std::to_string(vec_total);
    for (int tt = 0; tt <= std::min(t, 1); ++tt)
      for (const auto& v : all_degree_vectors(tt, vec_total))
        for (int q = 0; q <= q_max(v); ++q) {
          ++deg.cases;
          try {
            socle_layers_J_degree(v, q);  // throws on closed/convolution mismatch
          } catch (const std::exception& e) {
            deg.counterexamples.push_back({format_degree(v) + " q=" + std::to_string(q),
                                           e.what(), "agreement"});
          }
        }
    deg.pass = deg.counterexamples.empty();
    reports.push_back(std::move(deg));
  }
  {
    CheckReport euler;
    euler.name = "euler_bfT";
    int boxes = std::min(max_boxes, 2);
    euler.range = "t=0, ||.||<=" + std::to_string(boxes);
    for (const auto& x : all_tuples(0, boxes)) {
      ++euler.cases;
      if (!oracle::composition_euler_bfT(x))
        euler.counterexamples.push_back({format_tuple(x), "alternating sum", "{lambda: 1}"});
    }
    euler.pass = euler.counterexamples.empty();
    reports.push_back(std::move(euler));
  }
  bool all_pass = true;
  for (const auto& r : reports) {
    emit_report(r, opts);
    all_pass = all_pass && r.pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Socle filtrations, injective resolutions and Ext tables for the tensor "
               "categories of a Mackey Lie algebra; includes a sparse-matrix levelizer."};
  app.require_subcommand(1);

  std::string lam_text, mu_text, nu_text;
  bool lr_use_oracle = false;
  auto* lr_cmd = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  lr_cmd->add_option("--lambda", lam_text, "outer diagram")->required();
  lr_cmd->add_option("--mu", mu_text, "first factor")->required();
  lr_cmd->add_option("--nu", nu_text, "second factor")->required();
  lr_cmd->add_flag("--oracle", lr_use_oracle, "use the symmetric-function oracle");

  CommonOpts socle_opts;
  std::string socle_cat = "TT", socle_object = "J", socle_tuple, socle_vector;
  int socle_t = 0, socle_q = 0;
  auto* socle_cmd = app.add_subcommand("socle", "socle filtration layer tables");
  socle_cmd->add_option("--cat", socle_cat, "category: TT or bfT")
      ->check(CLI::IsMember({"TT", "bfT"}));
  socle_cmd->add_option("--object", socle_object, "J, I, Ilambda, M or Jdegree")
      ->check(CLI::IsMember({"J", "I", "Ilambda", "M", "Jdegree"}));
  socle_cmd->add_option("--tuple", socle_tuple, "diagram tuple");
  socle_cmd->add_option("--vector", socle_vector, "degree vector (Jdegree)");
  socle_cmd->add_option("--t", socle_t, "t parameter")->required();
  socle_cmd->add_option("--q", socle_q, "layer index (0-based)")->required();
  add_format_flags(socle_cmd, socle_opts);

  CommonOpts res_opts;
  std::string res_cat = "bfT", res_tuple;
  int res_t = 0, res_max_degree = 8;
  auto* res_cmd = app.add_subcommand("resolution", "injective resolution terms");
  res_cmd->add_option("--cat", res_cat, "smallTT, Tleft, TT or bfT")
      ->check(CLI::IsMember({"smallTT", "Tleft", "TT", "bfT", "underlineT"}));
  res_cmd->add_option("--tuple", res_tuple, "diagram tuple")->required();
  res_cmd->add_option("--t", res_t, "t parameter")->required();
  res_cmd->add_option("--max-degree", res_max_degree, "degree bound for display/truncation");
  add_format_flags(res_cmd, res_opts);

  CommonOpts ext_opts;
  std::string ext_cat = "bfT", ext_kappa, ext_lambda;
  int ext_t = 0, ext_q = -1, ext_max_degree = 12;
  auto* ext_cmd = app.add_subcommand("ext", "Ext dimensions between simples");
  ext_cmd->add_option("--cat", ext_cat, "smallTT, Tleft, TT, bfT or underlineT")
      ->check(CLI::IsMember({"smallTT", "Tleft", "TT", "bfT", "underlineT"}));
  ext_cmd->add_option("--kappa", ext_kappa, "source tuple")->required();
  ext_cmd->add_option("--lambda", ext_lambda, "target tuple")->required();
  ext_cmd->add_option("--t", ext_t, "t parameter")->required();
  ext_cmd->add_option("--q", ext_q, "single degree; omit for the full profile");
  ext_cmd->add_option("--max-degree", ext_max_degree, "profile degree bound");
  add_format_flags(ext_cmd, ext_opts);

  CommonOpts poset_opts;
  std::string poset_kind = "bfP", poset_vector;
  int poset_t = 0, poset_q = 4;
  bool poset_dot = false;
  size_t poset_cap = kDefaultLevelCap;
  auto* poset_cmd = app.add_subcommand("poset", "level sets of the degree-vector posets");
  poset_cmd->add_option("--kind", poset_kind, "P or bfP")->check(CLI::IsMember({"P", "bfP"}));
  poset_cmd->add_option("--vector", poset_vector, "degree vector")->required();
  poset_cmd->add_option("--t", poset_t, "t parameter")->required();
  poset_cmd->add_option("--q", poset_q, "level bound");
  poset_cmd->add_flag("--dot", poset_dot, "emit GraphViz DOT");
  poset_cmd->add_option("--max-level-size", poset_cap, "safety cap per level");
  add_format_flags(poset_cmd, poset_opts);

  CommonOpts lev_opts;
  std::string lev_input, lev_output;
  auto* lev_cmd = app.add_subcommand("levelize", "matrix levelization (coordinate text input)");
  lev_cmd->add_option("--input", lev_input, "input file, '-' for stdin");
  lev_cmd->add_option("--output", lev_output, "output file, default stdout");
  add_format_flags(lev_cmd, lev_opts);

  CommonOpts sym_opts;
  std::string sym_check = "rev", sym_duality = "bfT_t0";
  int sym_t = 0, sym_boxes = 2, sym_workers = 1;
  auto* sym_cmd = app.add_subcommand("symmetry", "identity checks over complete ranges");
  sym_cmd->add_option("--check", sym_check, "rev, t0ext, mh or exthom")->required();
  sym_cmd->add_option("--t", sym_t, "t parameter");
  sym_cmd->add_option("--max-boxes", sym_boxes, "box bound for the range");
  sym_cmd->add_option("--duality", sym_duality, "exthom variant: Tleft, bfT or bfT_t0");
  sym_cmd->add_option("--workers", sym_workers, "worker threads");
  add_format_flags(sym_cmd, sym_opts);

  CommonOpts st_opts;
  int st_t = 1, st_boxes = 3, st_workers = 1;
  auto* st_cmd = app.add_subcommand("selftest", "oracle-backed validation suite");
  st_cmd->add_option("--t", st_t, "largest t to exercise");
  st_cmd->add_option("--max-boxes", st_boxes, "box bound");
  st_cmd->add_option("--workers", st_workers, "worker threads");
  add_format_flags(st_cmd, st_opts);

  try {
    app.parse(argc, argv);
    if (lr_cmd->parsed()) return run_lr(lam_text, mu_text, nu_text, lr_use_oracle);
    if (socle_cmd->parsed())
      return run_socle(socle_cat, socle_object, socle_tuple, socle_vector, socle_t, socle_q,
                       socle_opts);
    if (res_cmd->parsed())
      return run_resolution(res_cat, res_tuple, res_t, res_max_degree, res_opts);
    if (ext_cmd->parsed())
      return run_ext(ext_cat, ext_kappa, ext_lambda, ext_t, ext_q < 0 ? 0 : ext_q, ext_q < 0,
                     ext_max_degree, ext_opts);
    if (poset_cmd->parsed())
      return run_poset(poset_kind, poset_vector, poset_t, poset_q, poset_dot, poset_cap,
                       poset_opts);
    if (lev_cmd->parsed()) return run_levelize(lev_input, lev_output, lev_opts);
    if (sym_cmd->parsed())
      return run_symmetry(sym_check, sym_t, sym_boxes, sym_duality, sym_workers, sym_opts);
    if (st_cmd->parsed()) return run_selftest(st_t, st_boxes, st_workers, st_opts);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ordered_json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
