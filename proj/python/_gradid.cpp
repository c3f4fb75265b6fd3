#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gradid/errors.hpp"
#include "gradid/parser.hpp"
#include "gradid/verify.hpp"

namespace py = pybind11;
using namespace gradid;

namespace {

FieldPtr field_of(unsigned q) { return Field::of_order(q, kHardMaxFieldSize); }

py::dict matrix_assignment(const Field& F, const Assignment& a) {
  py::dict d;
  for (const auto& [v, m] : a) d[py::str(to_string(v))] = to_string(F, m);
  return d;
}

}  // namespace

PYBIND11_MODULE(_gradid, m) {
  m.doc() = "Graded polynomial identities of upper-triangular matrix algebras over finite fields";

  py::register_exception<CapExceeded>(m, "CapExceeded");
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("field_info", [](unsigned q) {
    const FieldPtr F = field_of(q);
    py::dict d;
    d["name"] = F->name();
    d["characteristic"] = F->characteristic();
    d["degree"] = F->degree();
    d["order"] = F->order();
    d["modulus"] = F->modulus();
    std::vector<std::string> els;
    for (auto e : F->elements()) els.push_back(F->format(e));
    d["elements"] = els;
    return d;
  }, py::arg("q"));

  m.def("normalize", [](const std::string& text, unsigned q) { return to_string(parse_polynomial(text, field_of(q))); },
        "Canonical text of a polynomial.", py::arg("text"), py::arg("q"));

  m.def("commutator", [](const std::string& u, const std::string& v, unsigned q) {
    const FieldPtr F = field_of(q);
    return to_string(commutator(parse_polynomial(u, F), parse_polynomial(v, F)));
  }, py::arg("u"), py::arg("v"), py::arg("q"));

  m.def("check_identity", [](const std::string& poly, unsigned q, const std::string& grading, const std::string& mode,
                             std::uint64_t samples, std::uint64_t seed, unsigned threads) {
    const FieldPtr F = field_of(q);
    CheckOptions opts;
    if (mode == "exhaustive") {
      opts.mode = CheckMode::Exhaustive;
    } else if (mode == "random") {
      opts.mode = CheckMode::Random;
    } else {
      throw std::invalid_argument("mode must be 'exhaustive' or 'random'");
    }
    opts.samples = samples;
    opts.seed = seed;
    opts.threads = threads;
    IdentityVerdict v;
    {
      py::gil_scoped_release release;
      v = check_identity(parse_polynomial(poly, F), Grading::parse(grading), opts);
    }
    py::dict d;
    d["identity"] = v.identity;
    d["exact"] = v.exact;
    d["evaluations"] = v.evaluations;
    if (v.counterexample) {
      d["counterexample"] = matrix_assignment(*F, *v.counterexample);
      d["value"] = to_string(*F, *v.counterexample_value);
    }
    return d;
  }, py::arg("poly"), py::arg("q"), py::arg("grading"), py::arg("mode") = "exhaustive",
     py::arg("samples") = 1'000'000, py::arg("seed") = 0, py::arg("threads") = 1);

  m.def("generators", [](const std::string& preset, unsigned q) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& g : generator_set(parse_preset(preset), field_of(q))) out.emplace_back(g.label, to_string(g.poly));
    return out;
  }, py::arg("preset"), py::arg("q"));

  m.def("spanning_family", [](const std::string& preset, unsigned q, unsigned m_, unsigned n, unsigned d) {
    std::vector<std::tuple<std::string, unsigned, std::string>> out;
    for (const auto& s : enumerate_spanning_family(parse_preset(preset), field_of(q), m_, n, d).members) {
      out.emplace_back(s.label, s.degree, to_string(s.poly));
    }
    return out;
  }, py::arg("preset"), py::arg("q"), py::arg("yvars"), py::arg("zvars"), py::arg("max_deg"));

  m.def("closure_rank", [](const std::string& preset, unsigned q, unsigned m_, unsigned n, unsigned d, unsigned depth) {
    ClosureOptions opts;
    opts.depth = depth;
    const IdealComponent comp =
        closure(IdealPresentation::of_preset(parse_preset(preset), field_of(q)), Window(m_, n, d), opts);
    return py::make_tuple(comp.window.dim(), comp.rank());
  }, py::arg("preset"), py::arg("q"), py::arg("yvars"), py::arg("zvars"), py::arg("max_deg"),
     py::arg("schedule_depth") = 2);

  m.def("reduce", [](const std::string& poly, const std::string& preset, unsigned q, unsigned m_, unsigned n,
                     unsigned d, unsigned depth) {
    const FieldPtr F = field_of(q);
    const Preset p = parse_preset(preset);
    ClosureOptions opts;
    opts.depth = depth;
    const IdealComponent comp = closure(IdealPresentation::of_preset(p, F), Window(m_, n, d), opts);
    const SpanningFamily family = enumerate_spanning_family(p, F, m_, n, d);
    const NormalForm nf = normal_form(parse_polynomial(poly, F), family, comp);
    py::dict out;
    out["residual"] = nf.residual;
    std::vector<std::pair<std::string, std::string>> terms;
    for (std::size_t i = 0; i < nf.coefficients.size(); ++i) {
      if (!nf.coefficients[i].is_zero()) terms.emplace_back(family.members[i].label, F->format(nf.coefficients[i]));
    }
    out["terms"] = terms;
    return out;
  }, py::arg("poly"), py::arg("preset"), py::arg("q"), py::arg("yvars"), py::arg("zvars"), py::arg("max_deg"),
     py::arg("schedule_depth") = 2);

  m.def("verify_basis_json", [](const std::string& preset, unsigned q, unsigned m_, unsigned n, unsigned d,
                                std::uint64_t seed, unsigned depth, bool check_inclusion,
                                std::optional<std::string> cache_dir, unsigned threads) {
    VerificationConfig c;
    c.preset = parse_preset(preset);
    c.field = field_of(q);
    c.yvars = m_;
    c.zvars = n;
    c.max_deg = d;
    c.seed = seed;
    c.schedule_depth = depth;
    c.check_inclusion = check_inclusion;
    c.threads = threads;
    if (cache_dir) c.cache_dir = *cache_dir;
    py::gil_scoped_release release;
    return report_to_json(verify_basis(c));
  }, py::arg("preset"), py::arg("q"), py::arg("yvars"), py::arg("zvars"), py::arg("max_deg"), py::arg("seed") = 0,
     py::arg("schedule_depth") = 2, py::arg("check_inclusion") = true, py::arg("cache_dir") = py::none(),
     py::arg("threads") = 1);

  m.def("lemma_suite", [](std::uint64_t seed, unsigned cases) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& r : lemma_suite({seed, cases})) out.emplace_back(r.name, r.passed, r.detail);
    return out;
  }, py::arg("seed") = 1, py::arg("cases") = 200);
}
