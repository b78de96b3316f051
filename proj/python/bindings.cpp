#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "json.hpp"
#include "quintic/cli.hpp"
#include "quintic/errors.hpp"
#include "quintic/genus.hpp"
#include "quintic/report.hpp"
#include "quintic/tables.hpp"

namespace py = pybind11;
using namespace quintic;

namespace {

PrimeIdeal pick_prime(const std::string& p, std::size_t index) {
  auto primes = split_prime(Integer(p));
  if (index >= primes.size())
    throw Error(ErrorKind::kInvalidInput, "prime " + p + " has only " + std::to_string(primes.size()) + " primes above it");
  return primes[index];
}

Config with_seed(std::uint64_t seed) {
  Config cfg = Config::from_env();
  cfg.seed = seed;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_quintic, m) {
  m.doc() = "Pure quintic fields: residue symbols, form classification, genus ranks";

  static py::handle error_type = py::exception<Error>(m, "QuinticError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));

  m.def(
      "classify_json",
      [](const std::string& n) { return to_json(classify(Integer(n))).dump(); }, py::arg("n"));

  m.def(
      "lambda_ramified", [](const std::string& n) { return lambda_ramified(Integer(n)); }, py::arg("n"));

  m.def(
      "power_residue_symbol",
      [](const std::string& alpha, const std::string& p, std::size_t index) {
        return power_residue_symbol(CyclotomicInt::parse(alpha), pick_prime(p, index)).value();
      },
      py::arg("alpha"), py::arg("p"), py::arg("index") = 0);

  m.def(
      "norm_residue_symbol",
      [](const std::string& beta, const std::string& alpha, const std::string& p, std::size_t index,
         std::uint64_t seed) {
        ResidueEngine eng(with_seed(seed));
        const auto prime = p == "5" ? lambda_prime() : pick_prime(p, index);
        return eng.norm_residue_symbol(CyclotomicInt::parse(beta), CyclotomicInt::parse(alpha), prime).value();
      },
      py::arg("beta"), py::arg("alpha"), py::arg("p"), py::arg("index") = 0, py::arg("seed") = 1);

  m.def(
      "table_csv", [](int which) { return table_csv(regenerate_table(which)); }, py::arg("which"));

  m.def(
      "signed_mod25", [](const std::string& r) { return signed_mod25(Integer(r)); }, py::arg("r"));
}
