#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "schurcert/block_io.hpp"
#include "schurcert/explicit_small.hpp"
#include "schurcert/extremum.hpp"
#include "schurcert/linalg.hpp"
#include "schurcert/oracle.hpp"
#include "schurcert/schur_first.hpp"
#include "schurcert/schur_second.hpp"

namespace py = pybind11;
using namespace schurcert;

namespace {

using Grid = std::vector<std::vector<std::vector<double>>>;  // flat row-major blocks

BlockMatrix to_block_matrix(const std::vector<int>& dims, const Grid& grid,
                            const Tolerances& tol) {
  const int n = static_cast<int>(dims.size());
  if (static_cast<int>(grid.size()) != n) {
    throw ShapeMismatch("blocks grid must have one row per block dimension");
  }
  std::vector<std::vector<DenseMatrix>> blocks(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(grid[i].size()) != n) {
      throw ShapeMismatch("blocks row " + std::to_string(i + 1) + " has the wrong length");
    }
    for (int j = 0; j < n; ++j) {
      blocks[i].emplace_back(dims[i], dims[j], grid[i][j]);
    }
  }
  return BlockMatrix(dims, std::move(blocks), tol);
}

std::pair<std::vector<int>, Grid> from_block_matrix(const BlockMatrix& b) {
  Grid grid(b.order());
  for (int i = 0; i < b.order(); ++i) {
    for (int j = 0; j < b.order(); ++j) {
      grid[i].push_back(b.block(i, j).entries());
    }
  }
  return {b.dims(), std::move(grid)};
}

DenseMatrix to_dense(const std::vector<std::vector<double>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
  DenseMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw ShapeMismatch("ragged matrix rows");
    }
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<double>> from_dense(const DenseMatrix& m) {
  std::vector<std::vector<double>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    rows[i].resize(m.cols());
    for (int j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

py::object json_to_py(const nlohmann::ordered_json& j) {
  switch (j.type()) {
    case nlohmann::ordered_json::value_t::object: {
      py::dict d;
      for (const auto& [key, value] : j.items()) d[py::str(key)] = json_to_py(value);
      return d;
    }
    case nlohmann::ordered_json::value_t::array: {
      py::list l;
      for (const auto& value : j) l.append(json_to_py(value));
      return l;
    }
    case nlohmann::ordered_json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::ordered_json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::ordered_json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::ordered_json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::ordered_json::value_t::number_float:
      return py::float_(j.get<double>());
    default:
      return py::none();
  }
}

Tolerances make_tol(double sym_tol, double pd_eps, double inv_tol, double nn_tol) {
  Tolerances tol;
  tol.sym_tol = sym_tol;
  tol.pd_eps = pd_eps;
  tol.inv_tol = inv_tol;
  tol.nn_tol = nn_tol;
  tol.validate();
  return tol;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sign certificates for block operator matrices via Schur complements";

  const Tolerances d;  // defaults mirrored into the keyword arguments

  m.def("count_inequalities", &count_inequalities, py::arg("n"),
        "Exact number of first-kind inequalities V_n.");
  m.def("recursion_depth", &recursion_depth, py::arg("n"),
        "Bisection recursion depth m for block order n.");
  m.def(
      "enumerate_chains",
      [](int n) {
        std::vector<std::string> out;
        for (const SchurChain& c : enumerate_chains(n)) out.push_back(c.str());
        return out;
      },
      py::arg("n"), "Serialized Schur chains of the full certificate, in order.");

  m.def(
      "check_pd",
      [d](const std::vector<int>& dims, const Grid& blocks, bool full_tree, double sym_tol,
          double pd_eps, double inv_tol, double nn_tol) {
        const Tolerances tol = make_tol(sym_tol, pd_eps, inv_tol, nn_tol);
        const SignCertificate cert = check_pd(to_block_matrix(dims, blocks, tol), tol,
                                              full_tree ? PdMode::FullTree : PdMode::EarlyExit);
        return json_to_py(cert.to_json());
      },
      py::arg("dims"), py::arg("blocks"), py::arg("full_tree") = false,
      py::arg("sym_tol") = d.sym_tol, py::arg("pd_eps") = d.pd_eps,
      py::arg("inv_tol") = d.inv_tol, py::arg("nn_tol") = d.nn_tol,
      "Recursive positive-definiteness certificate as a dict.");

  m.def(
      "check_nn",
      [d](const std::vector<int>& dims, const Grid& blocks, double sym_tol, double pd_eps,
          double inv_tol, double nn_tol) {
        const Tolerances tol = make_tol(sym_tol, pd_eps, inv_tol, nn_tol);
        return json_to_py(check_nn(to_block_matrix(dims, blocks, tol), tol).to_json());
      },
      py::arg("dims"), py::arg("blocks"), py::arg("sym_tol") = d.sym_tol,
      py::arg("pd_eps") = d.pd_eps, py::arg("inv_tol") = d.inv_tol,
      py::arg("nn_tol") = d.nn_tol,
      "Sequential nonnegativity certificate as a dict.");

  m.def(
      "check_pd_bidiagonal",
      [](const std::vector<int>& dims, const Grid& blocks) {
        const Tolerances tol;
        return json_to_py(check_pd_bidiagonal(to_block_matrix(dims, blocks, tol), tol).to_json());
      },
      py::arg("dims"), py::arg("blocks"),
      "Fast-path certificate for bidiagonal block matrices.");

  m.def(
      "is_bidiagonal",
      [](const std::vector<int>& dims, const Grid& blocks) {
        const Tolerances tol;
        return is_bidiagonal(to_block_matrix(dims, blocks, tol), tol);
      },
      py::arg("dims"), py::arg("blocks"));

  m.def(
      "schur_first",
      [](const std::vector<int>& dims, const Grid& blocks, int i, int j) {
        const Tolerances tol;
        return from_block_matrix(schur_first(to_block_matrix(dims, blocks, tol), i, j, tol));
      },
      py::arg("dims"), py::arg("blocks"), py::arg("i"), py::arg("j"),
      "One first-kind Schur operator; returns (dims, blocks).");

  m.def(
      "schur_second",
      [](const std::vector<int>& dims, const Grid& blocks) {
        const Tolerances tol;
        return from_block_matrix(schur_second(to_block_matrix(dims, blocks, tol), tol));
      },
      py::arg("dims"), py::arg("blocks"),
      "Eliminates the first block coordinate; returns (dims, blocks).");

  m.def(
      "quadratic_form",
      [](const std::vector<int>& dims, const Grid& blocks,
         const std::vector<std::vector<double>>& h) {
        const Tolerances tol;
        return quadratic_form(to_block_matrix(dims, blocks, tol), h);
      },
      py::arg("dims"), py::arg("blocks"), py::arg("h"));

  m.def(
      "sym_eig_min",
      [](const std::vector<std::vector<double>>& rows) {
        return sym_eig_min(to_dense(rows), Tolerances{});
      },
      py::arg("matrix"), "Smallest eigenvalue of a symmetric dense matrix.");

  m.def(
      "invert",
      [](const std::vector<std::vector<double>>& rows) {
        return from_dense(invert(to_dense(rows), Tolerances{}));
      },
      py::arg("matrix"));

  m.def(
      "classify_example_l2",
      [](int trunc, double step) {
        const Tolerances tol;
        const ProductFunctional f = example_l2_functional(trunc);
        ExtremumOptions opt;
        opt.step = step;
        return json_to_py(classify_critical_point(f, zero_point(f.dims), tol, opt).to_json());
      },
      py::arg("trunc") = 4, py::arg("step") = 0.0,
      "Classification report for the built-in sequence-space functional.");

  m.def(
      "classify_hessian",
      [](const std::vector<int>& dims, const Grid& blocks) {
        const Tolerances tol;
        return json_to_py(classify_hessian(to_block_matrix(dims, blocks, tol), tol).to_json());
      },
      py::arg("dims"), py::arg("blocks"),
      "Classification report from an explicit block Hessian.");

  m.def(
      "classify_functional",
      [](const std::vector<int>& dims, const std::function<double(const Point&)>& eval,
         const Point& y, double step) {
        const Tolerances tol;
        ProductFunctional f;
        f.dims = dims;
        f.eval = eval;
        ExtremumOptions opt;
        opt.step = step;
        return json_to_py(classify_critical_point(f, y, tol, opt).to_json());
      },
      py::arg("dims"), py::arg("eval"), py::arg("y"), py::arg("step") = 0.0,
      "Classification report for a user-supplied callable functional.");

  m.def(
      "random_self_adjoint",
      [](const std::vector<int>& dims, double spectrum_shift, std::uint64_t seed) {
        return from_block_matrix(random_self_adjoint(dims, spectrum_shift, seed));
      },
      py::arg("dims"), py::arg("spectrum_shift"), py::arg("seed"));

  // translators run newest-first, so the derived exception goes last
  py::register_exception<Error>(m, "SchurcertError");
  py::register_exception<NumericallySingular>(m, "NumericallySingularError");
}
