#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "regjm/construct.hpp"
#include "regjm/report.hpp"
#include "regjm/textio.hpp"

namespace py = pybind11;
using namespace regjm;

namespace {

py::dict betti_dict(const BettiTable& b) {
  py::dict d;
  for (const auto& [ij, v] : b.entries()) d[py::make_tuple(ij.first, ij.second)] = v;
  return d;
}

BettiTable betti_from_dict(const py::dict& d) {
  BettiTable b;
  for (auto [key, value] : d) {
    auto ij = key.cast<std::pair<int, int>>();
    b.add(ij.first, ij.second, value.cast<std::int64_t>());
  }
  return b;
}

py::dict module_dict(const ModuleInput& m) {
  py::dict d;
  d["n"] = m.n();
  d["presentation"] = format_matrix(m.ring, m.presentation);
  d["betti"] = betti_dict(m.betti);
  d["degree_sequence"] = m.degrees.values;
  d["pure"] = is_pure(m.betti);
  d["regularity"] = regularity(m.betti);
  return d;
}

std::vector<std::string> format_all(const RingContext& ring, const std::vector<Polynomial>& gens) {
  std::vector<std::string> out;
  for (const auto& g : gens) out.push_back(format_polynomial(ring, g));
  return out;
}

PairStrategy strategy_of(const std::string& s) {
  if (s == "normal") return PairStrategy::NormalDegree;
  if (s == "fifo") return PairStrategy::Fifo;
  throw InvalidInput("strategy must be 'normal' or 'fifo'");
}

}  // namespace

PYBIND11_MODULE(_regjm, m) {
  m.doc() = "Ideals J_M with prescribed Betti data, built and verified over F_p";

  py::register_exception<HypothesisFailure>(m, "HypothesisFailure");
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

  m.attr("DEFAULT_PRIME") = PrimeField::kDefaultPrime;

  m.def(
      "pure_module",
      [](int n, int k, int d, std::uint32_t prime) { return module_dict(pure_module({n, k, d}, prime)); },
      py::arg("n"), py::arg("k"), py::arg("d"), py::arg("prime") = PrimeField::kDefaultPrime);

  m.def(
      "module_from_presentation",
      [](const std::string& text, std::uint32_t prime) {
        auto [ring, pres] = parse_module_file(text, prime);
        return module_dict(module_from_presentation(ring, pres));
      },
      py::arg("text"), py::arg("prime") = PrimeField::kDefaultPrime);

  m.def(
      "hypothesis_check",
      [](int n, int k, int d, int N) {
        HypothesisResult h = hypothesis_check(pure_module_summary({n, k, d}), k, N);
        py::dict out;
        out["pass"] = h.pass();
        out["failed"] = h.failed;
        out["beta0"] = py::int_(py::str(h.beta0.str()));
        out["bound"] = py::int_(py::str(h.bound.str()));
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("d"), py::arg("N"),
      "Hypotheses for the pure module (k, ..., k+n, k+n+1+d) in codimension N; no module is built.");

  m.def(
      "build_jm",
      [](int n, int k, int d, int N, std::uint32_t prime) {
        ModuleInput mod = pure_module({n, k, d}, prime);
        HypothesisResult h = hypothesis_check(mod, k, N);
        if (!h.pass()) throw HypothesisFailure(h.failed);
        RingContext ring = ambient_ring(mod, N);
        return format_all(ring, build_jm(mod, ring, k));
      },
      py::arg("n"), py::arg("k"), py::arg("d"), py::arg("N"), py::arg("prime") = PrimeField::kDefaultPrime);

  m.def(
      "verify_json",
      [](int n, int k, int d, int N, std::uint32_t prime, const std::string& strategy,
         std::optional<double> max_seconds) {
        VerifyOptions opts;
        opts.strategy = strategy_of(strategy);
        if (max_seconds) opts.deadline = Deadline::after(*max_seconds);
        JmCertificate cert;
        {
          py::gil_scoped_release release;
          cert = verify(PureModuleSpec{n, k, d}, N, opts, prime);
        }
        return certificate_json(cert);
      },
      py::arg("n"), py::arg("k"), py::arg("d"), py::arg("N"), py::arg("prime") = PrimeField::kDefaultPrime,
      py::arg("strategy") = "normal", py::arg("max_seconds") = py::none());

  m.def(
      "resolve_ideal",
      [](const std::vector<std::string>& gens, int n, int N, std::uint32_t prime) {
        RingContext ring(n, N, prime);
        std::vector<Polynomial> polys;
        for (const auto& g : gens) polys.push_back(parse_polynomial(ring, g));
        return betti_dict(ideal_table(betti_table(minimal_resolution(ring, GradedMatrix::row(polys)))));
      },
      py::arg("generators"), py::arg("n"), py::arg("N") = 0, py::arg("prime") = PrimeField::kDefaultPrime,
      "Betti table of the ideal as a module: minimal generators sit at i = 0.");

  m.def("power_ideal_betti", [](int q, int a) { return betti_dict(power_ideal_betti(q, a)); }, py::arg("q"),
        py::arg("a"));
  m.def(
      "predicted_betti_jm", [](const py::dict& b, int k, int N) { return betti_dict(predicted_betti_jm(betti_from_dict(b), k, N)); },
      py::arg("betti_m"), py::arg("k"), py::arg("N"));
  m.def(
      "predicted_degree_sequence",
      [](const std::vector<int>& t, int N) { return predicted_degree_sequence(DegreeSequence{t}, N).values; },
      py::arg("t"), py::arg("N"));
  m.def("regularity", [](const py::dict& b) { return regularity(betti_from_dict(b)); }, py::arg("betti"));
  m.def("betti_ascii", [](const py::dict& b) { return betti_ascii(betti_from_dict(b)); }, py::arg("betti"));
  m.def("max_jump", &max_jump, py::arg("n"), py::arg("N"), py::arg("k"));

  m.def(
      "scan",
      [](int n, int N, int k_min, int k_max, std::optional<double> max_seconds) {
        ScanOptions opts;
        opts.max_seconds = max_seconds;
        std::vector<ScanRow> rows = scan(n, N, k_min, k_max, opts);
        py::list out;
        for (const auto& r : rows) {
          py::dict d;
          d["k"] = r.k;
          d["d_max"] = r.d_max;
          d["reg_predicted"] = r.reg_predicted;
          d["reg_computed"] = r.reg_computed ? py::cast(*r.reg_computed) : py::none();
          d["wall_seconds"] = r.wall_seconds ? py::cast(*r.wall_seconds) : py::none();
          out.append(d);
        }
        return py::make_tuple(out, rows.size() >= 2 ? py::cast(loglog_slope(rows)) : py::none());
      },
      py::arg("n"), py::arg("N"), py::arg("k_min"), py::arg("k_max"), py::arg("max_seconds") = py::none());
}
