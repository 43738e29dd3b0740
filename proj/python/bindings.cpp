#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "elliptica/classical.hpp"
#include "elliptica/cli.hpp"
#include "elliptica/errors.hpp"
#include "elliptica/exchange.hpp"
#include "elliptica/rhsplit.hpp"
#include "elliptica/rmatrix_gl2.hpp"
#include "elliptica/rmatrix_glN.hpp"
#include "elliptica/surfaces.hpp"
#include "elliptica/vertexcoeffs.hpp"

namespace py = pybind11;
using namespace elliptica;

namespace {

// reports cross the boundary as JSON text; the Python side parses them
std::string dump(const std::vector<VerificationReport>& rs) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : rs) a.push_back(to_json(r));
  return a.dump();
}

EllipticParams gl2_point(cplx q, cplx p) {
  auto pr = EllipticParams::from_q_p_c(q, p, 0.0, 2);
  pr.c.reset();
  return pr;
}

TruncationPolicy pol() { return TruncationPolicy::from_env(); }

}  // namespace

PYBIND11_MODULE(_elliptica, m) {
  m.doc() = "elliptic R-matrices, exchange functions and their identities";

  static py::exception<Error> exc(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(exc)(py::str(e.what()));
      err.attr("kind") = to_string(e.kind());
      err.attr("residual") = e.residual();
      PyErr_SetObject(exc.ptr(), err.ptr());
    }
  });

  py::class_<EllipticParams>(m, "EllipticParams")
      .def(py::init<>())
      .def_readwrite("q", &EllipticParams::q)
      .def_readwrite("s", &EllipticParams::s)
      .def_readwrite("s_star", &EllipticParams::s_star)
      .def_readwrite("c", &EllipticParams::c)
      .def_readwrite("n", &EllipticParams::n)
      .def_property_readonly("p", &EllipticParams::p)
      .def_property_readonly("p_star", &EllipticParams::p_star)
      .def("validate", &EllipticParams::validate)
      .def_static("from_q_p_c", &EllipticParams::from_q_p_c, py::arg("q"), py::arg("p"), py::arg("c"),
                  py::arg("n") = 2)
      .def("__repr__", [](const EllipticParams& e) {
        std::ostringstream o;
        o << "EllipticParams(q=" << format(e.q) << ", s=" << format(e.s) << ", s_star=" << format(e.s_star)
          << ", n=" << e.n << ")";
        return o.str();
      });

  m.def("qpoch", [](cplx z, std::vector<cplx> bases) { return qpoch(z, std::span<const cplx>(bases), pol()); },
        py::arg("z"), py::arg("bases"));
  m.def("theta_p", [](cplx z, cplx p) { return theta_p(z, p, pol()); }, py::arg("z"), py::arg("p"));
  m.def("xi", [](cplx z, cplx p, cplx q) { return xi(z, p, q, pol()); }, py::arg("z"), py::arg("p"), py::arg("q"));
  m.def("h_poisson", [](cplx x, cplx q) { return h_poisson(x, q, pol()); }, py::arg("x"), py::arg("q"));

  m.def("w_matrix", [](cplx z, cplx q, cplx p) { return ComplexMatrix(w_matrix(z, gl2_point(q, p), pol())); },
        py::arg("z"), py::arg("q"), py::arg("p"), "eight-vertex matrix, rows ordered ++, +-, -+, --");
  m.def("r_matrix", [](cplx z, cplx q, cplx p) { return ComplexMatrix(r_matrix(z, gl2_point(q, p), pol())); },
        py::arg("z"), py::arg("q"), py::arg("p"));
  m.def("belavin_w",
        [](cplx xi_, cplx mu, cplx tau, int n) { return ComplexMatrix(belavin_w({xi_, mu, tau}, n, pol())); },
        py::arg("xi"), py::arg("mu"), py::arg("tau"), py::arg("n"));

  m.def("case_study_params", &case_study_params, py::arg("q"));
  m.def("F", [](int ell, cplx z, const EllipticParams& pr, bool starred) { return F_func(ell, z, pr, starred, pol()); },
        py::arg("ell"), py::arg("z"), py::arg("params"), py::arg("starred") = false);
  m.def("f_exchange",
        [](int l, int lp, cplx z, const EllipticParams& pr) { return f_exchange({l, lp}, z, pr, pol()); },
        py::arg("ell"), py::arg("ell_prime"), py::arg("z"), py::arg("params"));
  m.def("big_F",
        [](std::pair<int, int> a, std::pair<int, int> b, cplx z, const EllipticParams& pr) {
          return big_F({a.first, a.second}, {b.first, b.second}, z, pr, pol());
        },
        py::arg("labels"), py::arg("labels2"), py::arg("z"), py::arg("params"));
  m.def("tableau_value", [](int r, int c, cplx z, cplx q) { return tableau_value(r, c, z, q, pol()); },
        py::arg("row"), py::arg("col"), py::arg("z"), py::arg("q"));

  m.def("solve_exponent",
        [](int l, int lp, long long cn, long long cd, int n) {
          auto s = solve_exponent({l, lp}, Rational(cn, cd), n);
          return py::dict(py::arg("ell") = l, py::arg("ell_prime") = lp,
                          py::arg("a") = py::make_tuple(s.a.numerator(), s.a.denominator()), py::arg("r") = s.r,
                          py::arg("s") = s.s, py::arg("sigma") = s.sigma, py::arg("sigma_star") = s.sigma_star);
        },
        py::arg("ell"), py::arg("ell_prime"), py::arg("c_num") = 1, py::arg("c_den") = 1, py::arg("n") = 2);
  m.def("surface_residual",
        [](int l, int lp, const EllipticParams& pr) { return surface_residual({l, lp}, pr, SurfaceSide::T); },
        py::arg("ell"), py::arg("ell_prime"), py::arg("params"));
  m.def("phi",
        [](cplx x, int l, int lp, const EllipticParams& pr) { return phi(x, SplitFactor{{l, lp}, pr.n, pr}, pol()); },
        py::arg("x"), py::arg("ell"), py::arg("ell_prime"), py::arg("params"));

  m.def("_verify_gl2", [](cplx q, cplx p, int n, std::uint64_t seed, double tol) {
    return dump(verify_gl2(gl2_point(q, p), n, seed, tol, pol()));
  });
  m.def("_verify_glN", [](cplx xi_, cplx mu, cplx tau, int n, int samples, std::uint64_t seed, double tol) {
    return dump(verify_glN({xi_, mu, tau}, n, samples, seed, tol, pol()));
  });

  m.def("run_cli",
        [](std::vector<std::string> args) {
          std::ostringstream out, err;
          int code;
          {
            py::gil_scoped_release release;
            code = cli::run(args, out, err);
          }
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "run the command line in-process; returns (exit_code, stdout, stderr)");
}
