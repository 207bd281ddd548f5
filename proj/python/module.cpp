// Python bindings for the main operations: exact scalars, the point census,
// Hall numbers, the local product engine, root-vector elements and the
// verification suites. Exact values cross the boundary as strings or
// (partition, power) -> coefficient dictionaries.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ihall/dictionary.hpp"
#include "ihall/ihall.hpp"
#include "ihall/oracle.hpp"
#include "ihall/qsym.hpp"
#include "ihall/suites.hpp"

namespace py = pybind11;
using namespace ihall;

namespace {

Partition toPartition(const std::vector<int>& parts) { return Partition(parts); }

py::dict localElemToDict(const LocalHallElement& e) {
    py::dict d;
    for (auto& [key, c] : e.terms()) {
        py::tuple nu = py::cast(key.nu.parts());
        d[py::make_tuple(nu, key.kpow)] = c.toString();
    }
    return d;
}

py::list elemToList(const NumElem& e) {
    py::list out;
    for (auto& [key, c] : e.terms())
        out.append(py::make_tuple(key.toString(), c.toString()));
    return out;
}

py::dict reportToDict(const Report& rep) {
    py::dict d;
    d["all_pass"] = rep.allPass();
    d["cases"] = static_cast<int>(rep.cases().size());
    d["failures"] = static_cast<int>(rep.failCount());
    py::list failed;
    for (auto& c : rep.cases())
        if (!c.pass) failed.append(c.suite + "/" + c.id);
    d["failed"] = failed;
    return d;
}

}  // namespace

PYBIND11_MODULE(ihall, m) {
    m.doc() = "exact iHall algebra engine for the projective line over F_q";

    // scalars
    m.def("quantum_integer", [](long n) { return quantumInteger(n).toString(); });
    m.def("quantum_binomial", [](long n, long r) { return quantumBinomial(n, r).toString(); });
    m.def(
        "specialize_quantum_binomial",
        [](long n, long r, long q) { return specializeV(quantumBinomial(n, r), q).toString(); },
        py::arg("n"), py::arg("r"), py::arg("q"));

    // curve
    m.def("count_points", [](long q, int d) { return countPoints(q, d).get_str(); });
    m.def("zeta_identity_holds", [](long q, int nMax) { return verifyZetaIdentity(q, nMax).allPass(); });
    m.def("cyclic_profiles", [](long q, int mdeg) {
        py::list out;
        for (const Profile& n : enumerateCyclicProfiles(q, mdeg)) {
            py::list prof;
            for (auto& [x, nx] : n) prof.append(py::make_tuple(x.degree, x.index, nx));
            out.append(prof);
        }
        return out;
    });

    // sheaves
    m.def("euler_form", [](long ra, long da, long rb, long db) {
        return eulerForm({ra, da}, {rb, db});
    });
    m.def("hall_number", [](const std::vector<int>& lam, const std::vector<int>& mu,
                            const std::vector<int>& nu, long q) {
        return hallNumber(toPartition(lam), toPartition(mu), toPartition(nu), q).get_str();
    });
    m.def("aut_order", [](const std::vector<int>& lam, long q) {
        return autOrderPartition(toPartition(lam), q).get_str();
    });
    m.def("hall_number_interpolated", [](const std::vector<int>& lam, const std::vector<int>& mu,
                                         const std::vector<int>& nu, long q) {
        return hallNumberInterpolated(toPartition(lam), toPartition(mu), toPartition(nu), q)
            .get_str();
    });
    m.def("mono_count", [](const std::vector<int>& iota, const std::vector<int>& lam, long q) {
        return monoCount(toPartition(iota), toPartition(lam), q).get_str();
    });

    // local (Jordan-quiver) engine
    m.def("jordan_product", [](const std::vector<int>& lam, const std::vector<int>& mu, long q) {
        return localElemToDict(iProduct(toPartition(lam), toPartition(mu), q));
    });
    m.def("local_exp_identity_holds",
          [](long qx, int order) { return verifyLocalExp(qx, order).allPass(); });

    // global elements and identities
    m.def("theta_hat", [](int mdeg, long q) { return elemToList(thetaHat(mdeg, q)); });
    m.def("h_hat", [](int mdeg, long q) { return elemToList(hHat(mdeg, q)); });
    m.def("theta_commutator_vanishes", [](long q, int bound) {
        return verifyThetaCommutativity(q, bound).allPass();
    });
    m.def("exp_identity_holds",
          [](long q, int order) { return verifyExpIdentity(q, order).allPass(); });
    m.def("line_relations_hold",
          [](int rLo, int rHi, int mMax) { return verifyPropOO(rLo, rHi, mMax).allPass(); });
    m.def("current_relation_holds",
          [](int rLo, int rHi, int mMax) { return verifyTOTO(rLo, rHi, mMax).allPass(); });
    m.def("h_commutator_holds", [](long q, int mMax, int rLo, int rHi) {
        return verifyHCommutator(q, mMax, rLo, rHi).allPass();
    });
    m.def("diagram_commutes", [] { return verifyDiagram().allPass(); });

    // oracle
    m.def("brute_hall_number", [](const std::vector<int>& lam, const std::vector<int>& mu,
                                  const std::vector<int>& nu, long p) {
        return oracle::bruteHallNumber(toPartition(lam), toPartition(mu), toPartition(nu), p)
            .get_str();
    });
    m.def("brute_jordan_product", [](const std::vector<int>& lam, const std::vector<int>& mu,
                                     long p) {
        return localElemToDict(oracle::bruteC1Product(toPartition(lam), toPartition(mu), p));
    });

    // suites
    m.def(
        "run_suites",
        [](const std::set<std::string>& suites, const std::vector<long>& qList, int mMax, int rLo,
           int rHi, int order) {
            SuiteConfig cfg;
            cfg.suites = suites;
            cfg.qList = qList;
            cfg.mMax = mMax;
            cfg.rLo = rLo;
            cfg.rHi = rHi;
            cfg.seriesOrder = order;
            return reportToDict(runSuites(cfg));
        },
        py::arg("suites"), py::arg("q_list") = std::vector<long>{2, 3}, py::arg("m_max") = 6,
        py::arg("r_lo") = -3, py::arg("r_hi") = 3, py::arg("order") = 4);
}
