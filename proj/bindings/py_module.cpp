// Python bindings for the main operations: diagram arithmetic, socle
// layer tables, resolutions, Ext dimensions, poset levels and the
// levelizer. Multiplicities cross the boundary as Python ints.

#include "tcat/levelize.hpp"
#include "tcat/oracle.hpp"
#include "tcat/resolution.hpp"
#include "tcat/symmetry.hpp"
#include "tcat/text.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tcat;

namespace {

py::int_ to_py(const Mult& m) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(m.str().c_str(), nullptr, 10));
}

YoungDiagram diagram_from(const std::vector<int>& parts) { return YoungDiagram(parts); }

py::dict table_to_dict(const Table& table) {
  py::dict out;
  for (const auto& [key, mult] : table) out[py::str(format_tuple(key))] = to_py(mult);
  return out;
}

py::dict degree_table_to_dict(const std::map<DegreeVector, Mult>& table) {
  py::dict out;
  for (const auto& [key, mult] : table) out[py::str(format_degree(key))] = to_py(mult);
  return out;
}

Category category_from(const std::string& name) {
  if (name == "smallTT") return Category::smallTT;
  if (name == "Tleft") return Category::Tleft;
  if (name == "TT") return Category::TT;
  if (name == "bfT") return Category::bfT;
  if (name == "underlineT") return Category::underlineT;
  throw std::invalid_argument("unknown category " + name);
}

py::dict report_to_dict(const CheckReport& report) {
  py::dict out;
  out["name"] = report.name;
  out["range"] = report.range;
  out["cases"] = report.cases;
  out["skipped"] = report.skipped;
  out["pass"] = report.pass;
  py::list ces;
  for (const auto& ce : report.counterexamples) {
    py::dict d;
    d["input"] = ce.input;
    d["lhs"] = ce.lhs;
    d["rhs"] = ce.rhs;
    ces.append(d);
  }
  out["counterexamples"] = ces;
  return out;
}

}  // namespace

PYBIND11_MODULE(_tcat, m) {
  m.doc() = "socle filtrations, injective resolutions and Ext tables for tensor categories "
            "of Mackey Lie algebras";

  m.def(
      "lr",
      [](const std::vector<int>& lam, const std::vector<int>& mu, const std::vector<int>& nu) {
        return to_py(lr_coefficient(diagram_from(lam), diagram_from(mu), diagram_from(nu)));
      },
      py::arg("lam"), py::arg("mu"), py::arg("nu"),
      "Littlewood-Richardson coefficient N^lam_{mu,nu}");

  m.def(
      "lr_oracle",
      [](const std::vector<int>& lam, const std::vector<int>& mu, const std::vector<int>& nu) {
        return to_py(oracle::lr_oracle(diagram_from(lam), diagram_from(mu), diagram_from(nu)));
      },
      py::arg("lam"), py::arg("mu"), py::arg("nu"),
      "independent symmetric-function evaluation of the same coefficient");

  m.def(
      "conjugate",
      [](const std::vector<int>& lam) { return diagram_from(lam).conjugate().parts(); },
      py::arg("lam"));

  m.def(
      "sn_dim",
      [](const std::vector<int>& lam) { return to_py(sn_dim(diagram_from(lam))); },
      py::arg("lam"), "number of standard Young tableaux");

  m.def(
      "multi_lr",
      [](const std::vector<int>& lam, const std::vector<std::vector<int>>& factors) {
        std::vector<YoungDiagram> fs;
        for (const auto& f : factors) fs.push_back(diagram_from(f));
        return to_py(multi_lr(diagram_from(lam), fs));
      },
      py::arg("lam"), py::arg("factors"), "iterated multi-fold coefficient");

  m.def(
      "decompose_power",
      [](const std::string& kind, int mth) {
        PowerKind pk;
        if (kind == "sym")
          pk = PowerKind::sym;
        else if (kind == "ext")
          pk = PowerKind::ext;
        else if (kind == "tensor")
          pk = PowerKind::tensor;
        else
          throw std::invalid_argument("kind must be sym, ext or tensor");
        py::list out;
        for (const auto& c : decompose_power(pk, mth))
          out.append(py::make_tuple(c.first.parts(), c.second.parts(), to_py(c.mult)));
        return out;
      },
      py::arg("kind"), py::arg("m"), "Schur decomposition of a power of a tensor product");

  m.def(
      "h_coeff",
      [](const std::vector<int>& lam, const std::vector<int>& mu, const std::vector<int>& xi,
         const std::vector<int>& eta) {
        return to_py(
            h_coeff(diagram_from(lam), diagram_from(mu), diagram_from(xi), diagram_from(eta)));
      },
      py::arg("lam"), py::arg("mu"), py::arg("xi"), py::arg("eta"));

  m.def(
      "m_coeff",
      [](const std::vector<int>& lam, const std::vector<int>& mu, const std::vector<int>& xi,
         const std::vector<int>& eta) {
        return to_py(
            m_coeff(diagram_from(lam), diagram_from(mu), diagram_from(xi), diagram_from(eta)));
      },
      py::arg("lam"), py::arg("mu"), py::arg("xi"), py::arg("eta"));

  m.def(
      "socle_layers_J",
      [](const std::string& tuple_text, int t, int q) {
        return table_to_dict(socle_layers_J(parse_tuple(tuple_text, t), q));
      },
      py::arg("tuple"), py::arg("t"), py::arg("q"),
      "layer q of the socle filtration of J_tuple; keys in tuple text form");

  m.def(
      "socle_layers_J_degree",
      [](const std::string& vector_text, int t, int q) {
        return degree_table_to_dict(socle_layers_J_degree(parse_degree(vector_text, t), q));
      },
      py::arg("vector"), py::arg("t"), py::arg("q"));

  m.def(
      "socle_layers_I",
      [](int q, int t) { return table_to_dict(socle_layers_I(q, t)); },
      py::arg("q"), py::arg("t"));

  m.def(
      "socle_layers_I_lambda",
      [](const std::string& tuple_text, int t, int q) {
        return table_to_dict(socle_layers_I_lambda(parse_tuple(tuple_text, t), q));
      },
      py::arg("tuple"), py::arg("t"), py::arg("q"));

  m.def(
      "socle_layers_M",
      [](const std::string& tuple_text, int t, int q) {
        return table_to_dict(socle_layers_M(parse_tuple(tuple_text, t), q));
      },
      py::arg("tuple"), py::arg("t"), py::arg("q"));

  m.def(
      "tensor_simples_layers",
      [](const std::string& a, const std::string& b, int t, int q) {
        return table_to_dict(tensor_simples_layers(parse_tuple(a, t), parse_tuple(b, t), q));
      },
      py::arg("a"), py::arg("b"), py::arg("t"), py::arg("q"));

  m.def(
      "resolution_terms",
      [](const std::string& cat, const std::string& tuple_text, int t, int max_degree) {
        Category category = category_from(cat);
        DiagramTuple x = parse_tuple(tuple_text, t);
        Resolution res;
        switch (category) {
          case Category::smallTT:
          case Category::underlineT:
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
        py::list terms;
        int hi = res.length ? std::min(*res.length, max_degree) : max_degree;
        for (int k = 0; k <= hi; ++k) terms.append(table_to_dict(res.term(k)));
        py::dict out;
        out["terms"] = terms;
        out["length"] = res.length ? py::object(py::int_(*res.length)) : py::none();
        return out;
      },
      py::arg("cat"), py::arg("tuple"), py::arg("t"), py::arg("max_degree") = 8);

  m.def(
      "ext_dim",
      [](const std::string& cat, const std::string& kappa, const std::string& lam, int t,
         int q) {
        return to_py(ext_dim(parse_tuple(kappa, t), parse_tuple(lam, t), q, category_from(cat)));
      },
      py::arg("cat"), py::arg("kappa"), py::arg("lam"), py::arg("t"), py::arg("q"));

  m.def(
      "level_sets",
      [](const std::string& vector_text, int t, const std::string& kind, int q_bound) {
        PosetKind pk;
        if (kind == "P")
          pk = PosetKind::P;
        else if (kind == "bfP")
          pk = PosetKind::bfP;
        else
          throw std::invalid_argument("kind must be P or bfP");
        auto levels = level_sets(parse_degree(vector_text, t), pk, q_bound);
        py::list out;
        for (const auto& level : levels) {
          py::list members;
          for (const auto& v : level) members.append(format_degree(v));
          out.append(members);
        }
        return out;
      },
      py::arg("vector"), py::arg("t"), py::arg("kind") = "bfP", py::arg("q_bound") = 4);

  m.def(
      "q_max",
      [](const std::string& vector_text, int t) { return q_max(parse_degree(vector_text, t)); },
      py::arg("vector"), py::arg("t"));

  m.def(
      "levelize",
      [](const std::vector<std::tuple<std::string, std::string, std::string>>& entries) {
        SparseMatrix matrix;
        for (const auto& [row, col, value] : entries)
          matrix.set(row, col, Rational::parse(value));
        auto lv = levelize(matrix);
        py::dict out;
        py::list classes;
        for (const auto& cc : lv.classes) {
          py::dict c;
          c["representative"] = matrix.labels[static_cast<size_t>(cc.representative)];
          py::list levels;
          for (const auto& level : cc.levels) {
            py::list names;
            for (int a : level) names.append(matrix.labels[static_cast<size_t>(a)]);
            levels.append(names);
          }
          c["levels"] = levels;
          classes.append(c);
        }
        out["classes"] = classes;
        py::list order;
        for (int a : lv.order) order.append(matrix.labels[static_cast<size_t>(a)]);
        out["order"] = order;
        const char* names[3] = {"phi_minus", "phi_zero", "phi_plus"};
        for (int part = 0; part < 3; ++part) {
          py::list rows;
          for (const auto& [rc, value] : lv.parts[static_cast<size_t>(part)].entries)
            rows.append(py::make_tuple(matrix.labels[static_cast<size_t>(rc.first)],
                                       matrix.labels[static_cast<size_t>(rc.second)],
                                       value.str()));
          out[names[part]] = rows;
        }
        return out;
      },
      py::arg("entries"), "levelize a sparse matrix given as (row, col, value) strings");

  m.def(
      "check_rev_symmetry",
      [](int t, int max_boxes, int workers) {
        return report_to_dict(check_rev_symmetry(t, max_boxes, workers));
      },
      py::arg("t"), py::arg("max_boxes"), py::arg("workers") = 1);

  m.def(
      "check_m_h_identity",
      [](int max_boxes, int workers) {
        return report_to_dict(check_m_h_identity(max_boxes, workers));
      },
      py::arg("max_boxes"), py::arg("workers") = 1);
}
