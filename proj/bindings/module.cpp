#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wqc/analysis.hpp"
#include "wqc/cli.hpp"
#include "wqc/config.hpp"
#include "wqc/effective_coupling.hpp"

namespace py = pybind11;
using namespace wqc;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Two-node electron/nuclear spin processor: cross-node coupling channel simulator";

  py::class_<SystemSpec>(m, "SystemSpec")
      .def(py::init<>())
      .def_static("defaults", &SystemSpec::defaults, py::arg("k") = 1)
      .def_readwrite("k", &SystemSpec::k)
      .def_readwrite("hyperfine", &SystemSpec::hyperfine)
      .def_readwrite("nuclear_zeeman", &SystemSpec::nuclear_zeeman)
      .def_readwrite("dipolar", &SystemSpec::dipolar)
      .def_readwrite("rabi", &SystemSpec::rabi)
      .def_property_readonly("dim", &SystemSpec::dim)
      .def_property_readonly("nuclear_dim", &SystemSpec::nuclear_dim)
      .def("validate", &SystemSpec::validate);

  py::class_<NoiseParams>(m, "NoiseParams")
      .def(py::init<double, double>(), py::arg("t1"), py::arg("t2"))
      .def_readwrite("t1", &NoiseParams::t1)
      .def_readwrite("t2", &NoiseParams::t2);

  m.def("pauli", [](const std::string& axis) { return Eigen::MatrixXcd(pauli(axis)); },
        py::arg("axis"), "2x2 operator for axis in {x,y,z,plus,minus,identity,e_plus,e_minus}");
  m.def("embed", [](const Eigen::MatrixXcd& op, int site, int n_sites) {
          if (op.rows() != 2 || op.cols() != 2)
            throw std::invalid_argument("embed: op must be 2x2");
          return embed(Eigen::Matrix2cd(op), site, n_sites);
        },
        py::arg("op"), py::arg("site"), py::arg("n_sites"));
  m.def("commutator", &commutator);
  m.def("expm", &expm);
  m.def("spectral_norm", &spectral_norm);
  m.def("vec", &vec);
  m.def("unvec", &unvec, py::arg("v"), py::arg("d"));

  m.def("build_nuclear_zeeman", &build_nuclear_zeeman);
  m.def("build_dipolar", &build_dipolar);
  m.def("build_hyperfine", &build_hyperfine);
  m.def("build_microwave", &build_microwave);
  m.def("total_hamiltonian", &total_hamiltonian);

  py::class_<AlphabetTerms>(m, "AlphabetTerms")
      .def_readonly("a_term", &AlphabetTerms::a_term)
      .def_readonly("b_term", &AlphabetTerms::b_term)
      .def_readonly("c_term", &AlphabetTerms::c_term)
      .def_readonly("d_term", &AlphabetTerms::d_term)
      .def_readonly("e_term", &AlphabetTerms::e_term)
      .def_readonly("f_term", &AlphabetTerms::f_term);

  py::class_<InversionPattern>(m, "InversionPattern")
      .def_readonly("cycles", &InversionPattern::cycles);

  m.def("double_commutator_channel", &double_commutator_channel);
  m.def("dipolar_alphabet", &dipolar_alphabet, py::arg("spec"), py::arg("l"), py::arg("m"));
  m.def("induced_pair_coupling", &induced_pair_coupling, py::arg("spec"), py::arg("l"),
        py::arg("m"));
  m.def("split_parallel_cross", &split_parallel_cross);
  m.def("inversion_pattern", &inversion_pattern, py::arg("k"));
  m.def("inversion_unitary", &inversion_unitary);
  m.def("refocused_average", &refocused_average);

  py::enum_<Generator>(m, "Generator")
      .value("HYPERFINE", Generator::Hyperfine)
      .value("DIPOLAR", Generator::Dipolar)
      .value("MICROWAVE", Generator::Microwave)
      .value("SWAP_EN", Generator::SwapEN)
      .value("SWAP_EE", Generator::SwapEE);

  py::class_<Segment>(m, "Segment")
      .def_readwrite("generator", &Segment::generator)
      .def_readwrite("sign", &Segment::sign)
      .def_readwrite("duration", &Segment::duration)
      .def_readwrite("with_noise", &Segment::with_noise);

  py::class_<PulseSequence>(m, "PulseSequence")
      .def_readwrite("segments", &PulseSequence::segments)
      .def_readwrite("label", &PulseSequence::label)
      .def("total_duration", &PulseSequence::total_duration);

  py::enum_<MatrixNorm>(m, "MatrixNorm")
      .value("SPECTRAL", MatrixNorm::Spectral)
      .value("FROBENIUS", MatrixNorm::Frobenius);

  m.def("bch_sequence", &bch_sequence, py::arg("tau"));
  m.def("serial_swap_sequence", &serial_swap_sequence);
  m.def("generator_hamiltonian", &generator_hamiltonian);
  m.def("sequence_propagator", &sequence_propagator);
  m.def("select_tau", &select_tau, py::arg("spec"),
        py::arg("norm_kind") = MatrixNorm::Spectral);
  m.def("swap_unitary", &swap_unitary, py::arg("spec"), py::arg("site_a"), py::arg("site_b"));

  m.def("gammas_from_times", &gammas_from_times);
  m.def("liouvillian", &liouvillian);
  m.def("conjugation_superop", &conjugation_superop);
  m.def("qubit_dissipator", &qubit_dissipator, py::arg("gamma1"), py::arg("gamma2"));
  m.def("electron_dissipator",
        [](double gamma1, double gamma2, int electron_index, const SystemSpec& spec) {
          return electron_dissipator({gamma1, gamma2, electron_index}, spec);
        },
        py::arg("gamma1"), py::arg("gamma2"), py::arg("electron_index"), py::arg("spec"));
  m.def("prep_superop", &prep_superop);
  m.def("trace_superop", &trace_superop);
  m.def("channel_superop", &channel_superop, py::arg("seq"), py::arg("spec"),
        py::arg("noise") = std::nullopt, py::arg("with_microwave") = false);
  m.def("choi_matrix", &choi_matrix);

  m.def("process_fidelity", &process_fidelity);
  m.def("neg_log10_infidelity", &neg_log10_infidelity);

  py::class_<SweepPoint>(m, "SweepPoint")
      .def_readonly("t1", &SweepPoint::t1)
      .def_readonly("t2", &SweepPoint::t2)
      .def_readonly("fidelity_wqc", &SweepPoint::fidelity_wqc)
      .def_readonly("fidelity_swap", &SweepPoint::fidelity_swap)
      .def_readonly("neg_log10_infid_wqc", &SweepPoint::neg_log10_infid_wqc)
      .def_readonly("neg_log10_infid_swap", &SweepPoint::neg_log10_infid_swap);

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("points", &SweepResult::points)
      .def_readonly("errors", &SweepResult::errors)
      .def("to_csv", [](const SweepResult& r) { return sweep_to_csv(r); });

  m.def("robustness_sweep", &robustness_sweep, py::arg("spec"), py::arg("t_values"));

  py::class_<CptpReport>(m, "CptpReport")
      .def_readonly("trace_residual", &CptpReport::trace_residual)
      .def_readonly("choi_min_eigenvalue", &CptpReport::choi_min_eigenvalue)
      .def_readonly("hermiticity_residual", &CptpReport::hermiticity_residual);

  m.def("cptp_report", &cptp_report);

  m.attr("__version__") = "0.1.0";
}
