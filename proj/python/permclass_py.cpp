#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "permclass/bijections.hpp"
#include "permclass/error.hpp"
#include "permclass/pattern_classes.hpp"
#include "permclass/series.hpp"
#include "permclass/verification.hpp"

namespace py = pybind11;
using namespace permclass;

namespace {

Permutation to_perm(const std::vector<int>& values) { return Permutation(values); }

std::vector<int> from_perm(const Permutation& p) {
  return {p.values().begin(), p.values().end()};
}

// Python ints of arbitrary size round-trip through their decimal text.
py::list series_coefficients(const TruncatedSeries& s) {
  py::list out;
  const auto ints = s.as_integers();
  for (int n = 0; n <= s.order(); ++n) {
    if (ints) {
      out.append(py::int_(py::str((*ints)[static_cast<std::size_t>(n)].str())));
    } else {
      out.append(to_string(s[n]));
    }
  }
  return out;
}

TruncatedSeries profile_series(const WeightProfile& profile, std::optional<int> k, int order) {
  return k ? cf_series(profile, *k, order) : unbounded_series(profile, order);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Almost-increasing permutations, the X-class and their bijections";

  py::exception<Error>(m, "PermclassError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::object type = py::module_::import("permclass._core").attr("PermclassError");
      py::object err = type(e.what());
      err.attr("code") = std::string(error_code_name(e.code()));
      PyErr_SetObject(type.ptr(), err.ptr());
    }
  });

  m.def("stats", [](const std::vector<int>& p) {
    const StatVector s = stats(to_perm(p));
    py::dict d;
    d["cyc"] = s.cyc;
    d["fp"] = s.fp;
    d["exc"] = s.exc;
    d["inv"] = s.inv;
    return d;
  });
  m.def("height_profile", [](const std::vector<int>& p) { return height_profile(to_perm(p)); });
  m.def("is_almost_increasing",
        [](const std::vector<int>& p, int k) { return is_almost_increasing(to_perm(p), k); },
        py::arg("perm"), py::arg("k") = 1);
  m.def("is_x_class", [](const std::vector<int>& p) { return is_x_class(to_perm(p)); });
  m.def("contains_pattern", [](const std::vector<int>& p, const std::vector<int>& sigma) {
    return contains_pattern(to_perm(p), to_perm(sigma));
  });

  m.def("word_to_xperm",
        [](const std::string& w) { return from_perm(word_to_xperm(validate_word(w))); });
  m.def("xperm_to_word",
        [](const std::vector<int>& p) { return xperm_to_word(to_perm(p)).letters(); });
  m.def("aip_to_word", [](const std::vector<int>& p) { return aip_to_word(to_perm(p)).letters(); });
  m.def("word_to_aip",
        [](const std::string& w) { return from_perm(word_to_aip(validate_word(w))); });
  m.def("word_to_path",
        [](const std::string& w) { return word_to_path(validate_word(w)).steps(); });
  m.def("path_to_word",
        [](const std::string& p) { return path_to_word(validate_bounded_path(p)).letters(); });
  m.def("theta", [](const std::vector<int>& p) { return theta(to_perm(p)).steps; });
  m.def("psi", [](const std::vector<int>& p) { return to_string(psi(to_perm(p))); });
  m.def("psi_inverse",
        [](const std::string& path) { return from_perm(psi_inverse(parse_colored_motzkin(path))); });

  m.def("ak_series",
        [](std::optional<int> k, int order) { return series_coefficients(profile_series(ak_profile(), k, order)); },
        py::arg("k") = py::none(), py::arg("order") = 10);
  m.def("f_series",
        [](std::optional<int> k, int order) { return series_coefficients(profile_series(f_profile(), k, order)); },
        py::arg("k") = py::none(), py::arg("order") = 10);
  m.def("g_series",
        [](std::optional<int> k, int order) { return series_coefficients(profile_series(g_profile(), k, order)); },
        py::arg("k") = py::none(), py::arg("order") = 10);
  m.def("h_series",
        [](std::optional<int> k, int order) { return series_coefficients(profile_series(h_profile(), k, order)); },
        py::arg("k") = py::none(), py::arg("order") = 10);
  m.def("xclass_series", [](int order) { return series_coefficients(xclass_series(order)); },
        py::arg("order") = 10);

  m.def("verify", [](const std::string& suite, int max_n) {
    const VerifySuite which = suite == "bijections" ? VerifySuite::kBijections
                              : suite == "series"   ? VerifySuite::kSeries
                                                    : VerifySuite::kAll;
    py::list out;
    for (const auto& r : run_verification(which, VerifyOptions{max_n, false})) {
      out.append(py::make_tuple(r.name, r.passed));
    }
    return out;
  }, py::arg("suite") = "all", py::arg("max_n") = 6);
}
