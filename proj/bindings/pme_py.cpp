#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pme/circuits.hpp"
#include "pme/errors.hpp"
#include "pme/families4.hpp"
#include "pme/io.hpp"
#include "pme/planar.hpp"
#include "pme/protocols.hpp"
#include "pme/state.hpp"

namespace py = pybind11;
using namespace pme;

PYBIND11_MODULE(_core, m) {
  m.doc() = "planar maximally entangled states: construction, verification, "
            "classification, and protocols";

  py::register_exception<VerificationError>(m, "VerificationError",
                                            PyExc_RuntimeError);
  py::register_exception<AuthorizationError>(m, "AuthorizationError",
                                             PyExc_ValueError);
  py::register_exception<GaugeError>(m, "GaugeError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.attr("DEFAULT_TOL") = kDefaultTol;

  m.def("pow_index", &pow_index, py::arg("dim"), py::arg("exp"));
  m.def("pack_digits", &pack_digits, py::arg("sites"), py::arg("dim"),
        py::arg("digits"));
  m.def("unpack_digits", &unpack_digits, py::arg("sites"), py::arg("dim"),
        py::arg("index"));

  py::class_<PureState>(m, "PureState")
      .def(py::init<int, int, ComplexVector>(), py::arg("sites"), py::arg("dim"),
           py::arg("amps"))
      .def_property_readonly("sites", &PureState::sites)
      .def_property_readonly("local_dim", &PureState::local_dim)
      .def_property_readonly("amps",
                             [](const PureState& s) { return ComplexVector(s.amps()); })
      .def("amp", &PureState::amp, py::arg("index"))
      .def("norm", &PureState::norm)
      .def("__repr__", [](const PureState& s) {
        std::ostringstream os;
        os << "PureState(sites=" << s.sites() << ", dim=" << s.local_dim() << ")";
        return os.str();
      });

  m.def("basis_state", &basis_state, py::arg("sites"), py::arg("dim"),
        py::arg("digits"));
  m.def("tensor_product", &tensor_product, py::arg("a"), py::arg("b"));
  m.def("inner_product", &inner_product, py::arg("a"), py::arg("b"));
  m.def("fidelity", &fidelity, py::arg("a"), py::arg("b"));
  m.def("apply_local_unitary", &apply_local_unitary, py::arg("state"),
        py::arg("sites"), py::arg("u"));
  m.def("global_phase_canonical", &global_phase_canonical, py::arg("state"));
  m.def("unitarity_deviation", &unitarity_deviation, py::arg("u"));
  m.def("is_unitary", &is_unitary, py::arg("u"), py::arg("tol") = kUnitaryTol);

  py::class_<Partition>(m, "Partition")
      .def_readonly("n", &Partition::n)
      .def_readonly("start", &Partition::start)
      .def_readonly("length", &Partition::length)
      .def_readonly("window", &Partition::window)
      .def_readonly("complement", &Partition::complement);
  m.def("cyclic_window", &cyclic_window, py::arg("n"), py::arg("start"),
        py::arg("length"));

  py::class_<SubsetPartition>(m, "SubsetPartition")
      .def_readonly("n", &SubsetPartition::n)
      .def_readonly("subset", &SubsetPartition::subset)
      .def_readonly("complement", &SubsetPartition::complement);
  m.def("subset_partition", &subset_partition, py::arg("n"), py::arg("subset"));

  m.def("coefficient_matrix",
        py::overload_cast<const PureState&, const Partition&>(&coefficient_matrix),
        py::arg("state"), py::arg("partition"));
  m.def("coefficient_matrix",
        py::overload_cast<const PureState&, const SubsetPartition&>(
            &coefficient_matrix),
        py::arg("state"), py::arg("partition"));
  m.def("reduced_density",
        py::overload_cast<const PureState&, const Partition&>(&reduced_density),
        py::arg("state"), py::arg("partition"));
  m.def("reduced_density",
        py::overload_cast<const PureState&, const SubsetPartition&>(&reduced_density),
        py::arg("state"), py::arg("partition"));

  m.def(
      "is_maximally_mixed",
      [](const ComplexMatrix& rho, double tol) {
        const CheckVerdict v = is_maximally_mixed(rho, tol);
        return py::make_tuple(v.pass, v.deviation);
      },
      py::arg("rho"), py::arg("tol") = kDefaultTol);
  m.def(
      "is_proportional_isometry",
      [](const ComplexMatrix& mat, double tol) {
        const CheckVerdict v = is_proportional_isometry(mat, tol);
        return py::make_tuple(v.pass, v.deviation);
      },
      py::arg("m"), py::arg("tol") = kDefaultTol);

  py::class_<PartitionCheck>(m, "PartitionCheck")
      .def_readonly("where", &PartitionCheck::where)
      .def_readonly("deviation", &PartitionCheck::deviation)
      .def_readonly("passed", &PartitionCheck::pass);
  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("checks", &VerificationReport::checks)
      .def_readonly("overall_pass", &VerificationReport::overall_pass)
      .def_readonly("tolerance", &VerificationReport::tolerance)
      .def("max_deviation", &VerificationReport::max_deviation);
  m.def("verify_pme", &verify_pme, py::arg("state"), py::arg("tol") = kDefaultTol);
  m.def("verify_ame", &verify_ame, py::arg("state"), py::arg("tol") = kDefaultTol);

  py::class_<FourQubitCoefficients>(m, "FourQubitCoefficients")
      .def_static("from_state", &FourQubitCoefficients::from_state, py::arg("state"))
      .def_property_readonly("alpha", [](const FourQubitCoefficients& c) {
        return std::vector<Complex>(c.alpha.begin(), c.alpha.end());
      });
  m.def("uw_matrices", &uw_matrices, py::arg("coefficients"));
  m.def("family_a", &family_a, py::arg("theta"), py::arg("u"));
  m.def("family_b", &family_b, py::arg("phi"), py::arg("alpha"), py::arg("beta"),
        py::arg("gamma"), py::arg("delta"));
  m.def("psi_zero", &psi_zero, py::arg("beta"));

  py::enum_<FamilyTag>(m, "FamilyTag")
      .value("FamilyA", FamilyTag::FamilyA)
      .value("FamilyAShifted", FamilyTag::FamilyAShifted)
      .value("FamilyB", FamilyTag::FamilyB)
      .value("Intersection", FamilyTag::Intersection)
      .value("PmeUnclassified", FamilyTag::PmeUnclassified)
      .value("NotPme", FamilyTag::NotPme);
  m.def("family_tag_name", [](FamilyTag tag) { return to_string(tag); },
        py::arg("tag"));

  py::class_<FamilyClass>(m, "FamilyClass")
      .def_readonly("tag", &FamilyClass::tag)
      .def_readonly("angles", &FamilyClass::angles)
      .def_property_readonly("block", [](const FamilyClass& f) -> py::object {
        if (!f.block) return py::none();
        return py::cast(Eigen::Matrix2cd(*f.block));
      });
  m.def("classify_four_qubit", &classify_four_qubit, py::arg("state"),
        py::arg("tol") = kDefaultTol);

  py::class_<Gate>(m, "Gate")
      .def_readonly("control", &Gate::control)
      .def_readonly("target", &Gate::target)
      .def_readonly("u", &Gate::u);
  py::class_<Circuit>(m, "Circuit")
      .def_readonly("n_sites", &Circuit::n_sites)
      .def_readonly("d", &Circuit::d)
      .def_readonly("gates", &Circuit::gates);
  m.def("controlled_power_gate", &controlled_power_gate, py::arg("control"),
        py::arg("target"), py::arg("u"));
  m.def("controlled_power_matrix", &controlled_power_matrix, py::arg("u"));
  m.def("apply_circuit", &apply_circuit, py::arg("state"), py::arg("circuit"));
  m.def("inverted", &inverted, py::arg("circuit"));
  m.def("ghz", &ghz, py::arg("sites"), py::arg("dim"));
  m.def("bell_pair", &bell_pair, py::arg("dim"));
  m.def("dimerized_bell", &dimerized_bell, py::arg("half"), py::arg("dim"));
  m.def("psi_circuit", &psi_circuit, py::arg("half"), py::arg("dim"), py::arg("us"));
  m.def("xi_circuit", &xi_circuit, py::arg("half"), py::arg("dim"), py::arg("us"));
  m.def("circuit_psi", &circuit_psi, py::arg("half"), py::arg("dim"), py::arg("us"));
  m.def("circuit_xi", &circuit_xi, py::arg("half"), py::arg("dim"), py::arg("us"));
  m.def("random_unitary", &random_unitary, py::arg("dim"), py::arg("seed"));
  m.def("random_state", &random_state, py::arg("sites"), py::arg("dim"),
        py::arg("seed"));

  py::class_<TransferUnitary>(m, "TransferUnitary")
      .def_readonly("partition", &TransferUnitary::partition)
      .def_readonly("u", &TransferUnitary::u);
  m.def("extract_transfer_unitary", &extract_transfer_unitary, py::arg("state"),
        py::arg("partition"), py::arg("tol") = kDefaultTol);
  m.def("canonical_max_entangled", &canonical_max_entangled, py::arg("partition"),
        py::arg("dim"));
  m.def("teleport_setup", &teleport_setup, py::arg("state"), py::arg("partition"),
        py::arg("tol") = kDefaultTol);

  py::class_<QssShares>(m, "QssShares")
      .def_readonly("n_half", &QssShares::n_half)
      .def_readonly("d", &QssShares::d)
      .def_readonly("distributor_site", &QssShares::distributor_site)
      .def_readonly("encoded", &QssShares::encoded)
      .def_readonly("resource", &QssShares::resource);
  m.def("encoded_site_index", &encoded_site_index, py::arg("shares"),
        py::arg("resource_site"));
  m.def("qss_encode", &qss_encode, py::arg("resource"), py::arg("distributor_site"),
        py::arg("secret"), py::arg("tol") = kDefaultTol);
  py::class_<QssRecovery>(m, "QssRecovery")
      .def_readonly("recovered", &QssRecovery::recovered)
      .def_readonly("fidelity", &QssRecovery::fidelity)
      .def_readonly("recovery_site", &QssRecovery::recovery_site)
      .def_readonly("sub_window", &QssRecovery::sub_window);
  m.def("qss_decode", &qss_decode, py::arg("shares"), py::arg("recovery_window"),
        py::arg("tol") = kDefaultTol);
  m.def("unauthorized_arcs", &unauthorized_arcs, py::arg("n_half"),
        py::arg("distributor_site"));
  m.def("security_report", &security_report, py::arg("shares"),
        py::arg("tol") = kDefaultTol);

  m.def("load_state", &load_state, py::arg("path"));
  m.def("save_state", &save_state, py::arg("path"), py::arg("state"));
  m.def("load_matrix", &load_matrix, py::arg("path"));
  m.def("save_matrix", &save_matrix, py::arg("path"), py::arg("m"));
}
