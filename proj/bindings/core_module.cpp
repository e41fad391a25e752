#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "mahonia/bipoly.hpp"
#include "mahonia/compositions.hpp"
#include "mahonia/errors.hpp"
#include "mahonia/hilbert.hpp"
#include "mahonia/inversions.hpp"
#include "mahonia/posets.hpp"
#include "mahonia/qanalog.hpp"
#include "mahonia/unipoly.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// mpz_class <-> python int, via decimal strings. Exactness over speed; these
// bindings exist so python callers get arbitrary-precision counts natively.
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        object str = reinterpret_steal<object>(PyObject_Str(src.ptr()));
        if (!str) return false;
        return value.set_str(PyUnicode_AsUTF8(str.ptr()), 10) == 0;
    }

    static handle cast(const mpz_class& src, return_value_policy, handle) {
        return PyLong_FromString(src.get_str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using namespace mahonia;

std::vector<ExactInt> poly_coeffs(const UniPoly& p) { return p.coeffs(); }

std::map<std::pair<unsigned, unsigned>, ExactInt> bipoly_terms(const BiPoly& p) {
    return p.terms();
}

DegreeSequence degrees_of(const std::vector<unsigned>& ds) {
    return DegreeSequence::of(ds);
}

Factorization factorization_of(const std::vector<std::pair<unsigned long, unsigned>>& pps) {
    std::vector<PrimePower> v;
    v.reserve(pps.size());
    for (const auto& [p, e] : pps) v.push_back({p, e});
    return Factorization::of(std::move(v));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact inversion-number and bounded-composition counts";

    py::register_exception<resource_guard_error>(m, "ResourceGuardError", PyExc_RuntimeError);

    // inversions
    m.def("inv_bruteforce", [](unsigned n) { return inv_bruteforce(n).values; },
          py::arg("n"), "Histogram of inversion counts over all n! permutations.");
    m.def("inv_recurrence", &inv_recurrence, py::arg("n"), py::arg("t"));
    m.def("inv_recurrence_row", [](unsigned n) { return inv_recurrence_row(n).values; },
          py::arg("n"));
    m.def("inv_genfun", [](unsigned n) { return inv_genfun(n).values; }, py::arg("n"),
          "Coefficients of prod_{i=1}^{n-1} (1 + z + ... + z^i).");
    m.def("inv_prefix_closed", &inv_prefix_closed, py::arg("n"), py::arg("t"));
    m.def("inv_closed", &inv_closed, py::arg("n"), py::arg("t"),
          "I_n(t) by the closed binomial-difference formula.");
    m.def("inv_pentagonal", &inv_pentagonal, py::arg("n"), py::arg("t"),
          "I_n(t) for t <= n by the pentagonal-number formula.");
    m.def("standard_monomial_count_L", &standard_monomial_count_L, py::arg("n"), py::arg("t"));

    // compositions
    m.def("comp_bruteforce", [](unsigned n, unsigned d) { return comp_bruteforce(n, d).values; },
          py::arg("n"), py::arg("d"));
    m.def("comp_recurrence", &comp_recurrence, py::arg("n"), py::arg("d"), py::arg("t"));
    m.def("comp_recurrence_row",
          [](unsigned n, unsigned d) { return comp_recurrence_row(n, d).values; }, py::arg("n"),
          py::arg("d"));
    m.def("comp_genfun", [](unsigned n, unsigned d) { return comp_genfun(n, d).values; },
          py::arg("n"), py::arg("d"), "Coefficients of (1 + x + ... + x^(d-1))^n.");
    m.def("comp_prefix_closed", &comp_prefix_closed, py::arg("n"), py::arg("d"), py::arg("t"));
    m.def("comp_closed", &comp_closed, py::arg("n"), py::arg("d"), py::arg("t"));
    m.def("standard_monomial_count_M", &standard_monomial_count_M, py::arg("n"), py::arg("d"),
          py::arg("t"));

    // qanalog
    m.def("q_factorial", [](unsigned n) { return poly_coeffs(q_factorial(n)); }, py::arg("n"),
          "Coefficients of the q-factorial [n]_q!.");
    m.def("gaussian_binomial", [](unsigned n, unsigned m_) { return poly_coeffs(gaussian_binomial(n, m_)); },
          py::arg("n"), py::arg("m"), "Coefficients of the Gaussian binomial [n m]_q.");
    m.def("gaussian_binomial_row",
          [](unsigned n) {
              std::vector<std::vector<ExactInt>> rows;
              for (const UniPoly& p : gaussian_binomial_row(n)) rows.push_back(p.coeffs());
              return rows;
          },
          py::arg("n"));
    m.def("subset_sum_count", &subset_sum_count, py::arg("n"), py::arg("j"), py::arg("k"),
          "Number of j-element subsets of {1..n} with sum k (enumeration oracle).");
    m.def("gauss_coefficient_C", &gauss_coefficient_C, py::arg("n"), py::arg("j"), py::arg("k"));
    m.def("cauchy_product", [](unsigned n) { return bipoly_terms(cauchy_product(n)); },
          py::arg("n"), "Terms of prod (1 + t q^i) as {(t_exp, q_exp): coefficient}.");

    // hilbert
    m.def("restricted_binomial", &restricted_binomial, py::arg("n"), py::arg("k"));
    m.def("koszul_hilbert",
          [](const std::vector<unsigned>& ds, unsigned long t) {
              return koszul_hilbert(degrees_of(ds), t);
          },
          py::arg("degrees"), py::arg("t"),
          "Hilbert function of the complete intersection with the given degrees.");
    m.def("koszul_hilbert_by_subsets",
          [](const std::vector<unsigned>& ds, unsigned long t) {
              return koszul_hilbert_by_subsets(degrees_of(ds), t);
          },
          py::arg("degrees"), py::arg("t"));
    m.def("elementary_symmetric_at_init", &elementary_symmetric_at_init, py::arg("n"),
          py::arg("i"));
    m.def("complete_symmetric_eval",
          [](const std::vector<ExactInt>& vars, unsigned i) {
              return complete_symmetric_eval(vars, i);
          },
          py::arg("vars"), py::arg("i"));
    m.def("groebner_f_eval",
          [](unsigned n, unsigned k, const std::vector<ExactInt>& point) {
              return groebner_f_eval(n, k, point);
          },
          py::arg("n"), py::arg("k"), py::arg("point"));
    m.def("verify_orbit_vanishing",
          [](unsigned n) {
              const OrbitVanishingReport r = verify_orbit_vanishing(n);
              py::dict d;
              d["n"] = r.n;
              d["evaluations"] = r.evaluations;
              d["all_zero"] = r.all_zero;
              if (!r.all_zero) {
                  d["failing_k"] = r.failing_k;
                  d["failing_permutation"] = r.failing_permutation;
              }
              return d;
          },
          py::arg("n"));
    m.def("dbox_groebner_eval",
          [](unsigned n, unsigned d, unsigned i, const std::vector<ExactInt>& point) {
              return dbox_groebner_eval(n, d, i, point);
          },
          py::arg("n"), py::arg("d"), py::arg("i"), py::arg("point"));

    // posets
    m.def("factorize",
          [](unsigned long N) {
              std::vector<std::pair<unsigned long, unsigned>> out;
              for (const PrimePower& pp : factorize(N).prime_powers)
                  out.emplace_back(pp.prime, pp.exponent);
              return out;
          },
          py::arg("N"));
    m.def("divisor_rank_genfun",
          [](const std::vector<std::pair<unsigned long, unsigned>>& pps) {
              return poly_coeffs(divisor_rank_genfun(factorization_of(pps)));
          },
          py::arg("prime_powers"),
          "Rank generating function of the divisor lattice, from (prime, exponent) pairs.");
    m.def("brute_divisor_rank_genfun",
          [](unsigned long N) { return poly_coeffs(brute_divisor_rank_genfun(N)); }, py::arg("N"));
    m.def("involution_weight",
          [](const std::vector<std::pair<unsigned, unsigned>>& arcs) {
              return involution_weight(Involution::from_arcs(arcs));
          },
          py::arg("arcs"), "Weight (total span minus crossings) of a fixed-point-free involution.");
    m.def("involution_rank_genfun",
          [](unsigned n) { return poly_coeffs(involution_rank_genfun(n)); }, py::arg("n"));
    m.def("odd_double_factorial", &odd_double_factorial, py::arg("n"));
}
