#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lqa/branching.hpp"
#include "lqa/cache_io.hpp"
#include "lqa/errors.hpp"
#include "lqa/kostant.hpp"
#include "lqa/lr.hpp"
#include "lqa/pieri.hpp"
#include "lqa/recurrence.hpp"
#include "lqa/verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

py::int_ to_py(const lqa::Integer& c)
{
    return py::reinterpret_steal<py::int_>(PyLong_FromString(c.str().c_str(), nullptr, 10));
}

py::dict series_to_py(const lqa::QSeries& s)
{
    py::dict out;
    for (const auto& [deg, c] : s.terms())
        out[py::int_(deg)] = to_py(c);
    return out;
}

lqa::Partition part(const std::vector<int>& parts) { return lqa::Partition(parts); }

py::tuple part_to_py(const lqa::Partition& p) { return py::cast(p.parts()); }

lqa::RootSystem root_system(const std::string& type, int rank)
{
    return lqa::RootSystem(lqa::parse_root_type(type), rank);
}

} // namespace

PYBIND11_MODULE(_lqa, m)
{
    m.doc() = "q-analogues of weight multiplicities for the classical Lie algebras";

    py::register_exception<lqa::invalid_weight>(m, "InvalidWeight", PyExc_ValueError);
    py::register_exception<lqa::out_of_regime>(m, "OutOfRegime", PyExc_ValueError);
    py::register_exception<lqa::not_universal>(m, "NotUniversal", PyExc_ValueError);
    py::register_exception<lqa::corrupt_cache>(m, "CorruptCache", PyExc_RuntimeError);

    m.def("lr_coefficient",
          [](const std::vector<int>& lam, const std::vector<int>& gam, const std::vector<int>& nu) {
              return lqa::lr_coefficient(part(lam), part(gam), part(nu));
          },
          "lam"_a, "gamma"_a, "nu"_a, "Littlewood-Richardson coefficient c^nu_{lam,gamma}.");

    m.def("degrees", [](const std::string& type, int rank) { return lqa::degrees(root_system(type, rank)); },
          "type"_a, "rank"_a);
    m.def("weyl_order", [](const std::string& type, int rank) { return root_system(type, rank).weyl_order(); },
          "type"_a, "rank"_a);

    m.def("q_kostant",
          [](const std::string& type, int rank, const std::vector<int>& beta) {
              return series_to_py(lqa::q_kostant(root_system(type, rank), beta));
          },
          "type"_a, "rank"_a, "beta"_a, "q-Kostant partition function as {degree: coefficient}.");

    m.def("k_direct",
          [](const std::string& type, int rank, const std::vector<int>& lam, const std::vector<int>& mu, int jobs) {
              py::gil_scoped_release release;
              auto s = lqa::k_direct(root_system(type, rank), part(lam), part(mu), std::nullopt, jobs);
              py::gil_scoped_acquire acquire;
              return series_to_py(s);
          },
          "type"_a, "rank"_a, "lam"_a, "mu"_a = std::vector<int>{}, "jobs"_a = 1,
          "K_{lam,mu}(q) by the alternating sum over the Weyl group.");

    m.def("k_recurrence",
          [](const std::string& type, int rank, const std::vector<int>& lam, const std::vector<int>& mu) {
              return series_to_py(lqa::k_recurrence_finite(root_system(type, rank), part(lam), part(mu)));
          },
          "type"_a, "rank"_a, "lam"_a, "mu"_a = std::vector<int>{}, "K_{lam,mu}(q) by the rank-lowering recurrence.");

    m.def("k_limit",
          [](const std::string& family, const std::vector<int>& lam, const std::vector<int>& mu, int trunc) {
              return series_to_py(lqa::k_limit(lqa::parse_family(family), part(lam), part(mu), trunc));
          },
          "family"_a, "lam"_a, "mu"_a = std::vector<int>{}, "trunc"_a,
          "Rank-stable limit series modulo q^{trunc+1}.");

    m.def("stable_pieri",
          [](const std::vector<int>& gamma, int l, const std::vector<int>& lam) {
              return lqa::stable_pieri(part(gamma), l, part(lam));
          },
          "gamma"_a, "l"_a, "lam"_a);
    m.def("pieri_expand",
          [](const std::vector<int>& gamma, int l) {
              py::dict out;
              for (const auto& [lam, c] : lqa::pieri_expand(part(gamma), l))
                  out[part_to_py(lam)] = c;
              return out;
          },
          "gamma"_a, "l"_a);

    m.def("branching",
          [](const std::string& family, const std::vector<int>& nu, const std::vector<int>& lam) {
              return lqa::branching(lqa::parse_family(family), part(nu), part(lam));
          },
          "family"_a, "nu"_a, "lam"_a);
    m.def("sym_mult_stable",
          [](const std::string& family, int k, const std::vector<int>& lam) {
              return to_py(lqa::sym_mult_stable(lqa::parse_family(family), k, part(lam)));
          },
          "family"_a, "k"_a, "lam"_a);
    m.def("sym_mult_finite",
          [](const std::string& type, int rank, int k, const std::vector<int>& lam) {
              return to_py(lqa::sym_mult_finite(root_system(type, rank), k, part(lam)));
          },
          "type"_a, "rank"_a, "k"_a, "lam"_a);
    m.def("harmonic_coeff_stable",
          [](const std::string& family, int k, const std::vector<int>& lam) {
              return to_py(lqa::harmonic_coeff_stable(lqa::parse_family(family), k, part(lam)));
          },
          "family"_a, "k"_a, "lam"_a);

    m.def("cache_save", [](const std::string& path) { lqa::cache_save(path); }, "path"_a);
    m.def("cache_load", [](const std::string& path) { return lqa::cache_load(path); }, "path"_a,
          "Load a persisted cache; False when the file does not exist.");

    m.def("verify",
          [](const std::string& suite, int max_weight, int degree, int max_rank, int bound, int jobs) {
              lqa::VerifyParams p{max_weight, degree, max_rank, bound, jobs};
              lqa::VerifyReport r;
              {
                  py::gil_scoped_release release;
                  r = lqa::run_verify_suite(suite, p);
              }
              py::dict out;
              out["suite"] = r.suite;
              out["passed"] = r.passed();
              out["checks"] = r.checks;
              out["failures"] = r.failures;
              return out;
          },
          "suite"_a, "max_weight"_a = -1, "degree"_a = -1, "max_rank"_a = -1, "bound"_a = -1, "jobs"_a = 1);
    m.attr("suites") = lqa::verify_suite_names();
}
