#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hookpairs/identities.hpp"
#include "hookpairs/region.hpp"
#include "hookpairs/staircase.hpp"
#include "hookpairs/sweep.hpp"
#include "hookpairs/text.hpp"

namespace py = pybind11;
using namespace hookpairs;

namespace {

py::dict report_to_dict(const Report& report) {
  py::dict out;
  out["pass"] = report.pass;
  py::list failures;
  for (const IdentityFailure& f : report.failures) {
    py::dict entry;
    entry["instance"] = f.instance;
    entry["d"] = f.d ? py::cast(*f.d) : py::none();
    entry["lhs"] = f.lhs;
    entry["rhs"] = f.rhs;
    failures.append(entry);
  }
  out["failures"] = failures;
  return out;
}

py::dict sweep_to_dict(const SweepSummary& summary) {
  py::dict out;
  out["theorem"] = summary.theorem;
  py::dict params;
  for (const auto& [name, value] : summary.params) {
    params[name.c_str()] = value;
  }
  out["params"] = params;
  out["pass"] = summary.failed_instances == 0;
  out["failed_instances"] = summary.failed_instances;
  out["instances_checked"] = summary.instances_checked;
  out["elapsed_ms"] = summary.elapsed_ms;
  return out;
}

std::vector<std::pair<int, int>> region_cells(const Region& g) {
  std::vector<std::pair<int, int>> out;
  for (const Cell& c : g.cells()) out.emplace_back(c.row, c.col);
  return out;
}

}  // namespace

PYBIND11_MODULE(hookpairs, m) {
  m.doc() = "Skew-diagram constructions, the broken-column stack bijection, "
            "and exhaustive verifiers for arm-leg hook pair identities.";

  py::class_<Partition>(m, "Partition")
      .def(py::init<>())
      .def(py::init<std::vector<int>>(), py::arg("parts"))
      .def_property_readonly("parts", &Partition::parts)
      .def("sum", &Partition::sum)
      .def("length", &Partition::length)
      .def("part", &Partition::part, py::arg("i"))
      .def("conjugate", &Partition::conjugate)
      .def("is_strict", &Partition::is_strict)
      .def("__len__", &Partition::length)
      .def("__eq__",
           [](const Partition& a, const Partition& b) { return a == b; })
      .def("__repr__", [](const Partition& p) {
        std::ostringstream os;
        os << "Partition([";
        for (int i = 1; i <= p.length(); ++i) {
          if (i > 1) os << ", ";
          os << p.part(i);
        }
        os << "])";
        return os.str();
      });

  py::class_<Region>(m, "Region")
      .def("cells", &region_cells)
      .def("size", &Region::size)
      .def("contains",
           [](const Region& g, std::pair<int, int> cell) {
             return g.contains({cell.first, cell.second});
           })
      .def("render", &render_ascii)
      .def("__len__", &Region::size)
      .def("__eq__", [](const Region& a, const Region& b) { return a == b; });

  m.def("make_partition",
        [](std::vector<int> parts) { return Partition(std::move(parts)); });
  m.def("conjugate", [](const Partition& mu) { return mu.conjugate(); });
  m.def("to_frobenius", [](const Partition& mu) {
    const FrobeniusForm f = to_frobenius(mu);
    return std::make_pair(f.arms, f.legs);
  });
  m.def("from_frobenius", [](std::vector<int> arms, std::vector<int> legs) {
    return from_frobenius({std::move(arms), std::move(legs)});
  });
  m.def("doubled_shifted", &doubled_shifted);
  m.def("is_doubled_shifted", &is_doubled_shifted);
  m.def("partitions_in_box", &partitions_in_box, py::arg("n"), py::arg("k"));
  m.def("strict_partitions_max", &strict_partitions_max, py::arg("m"));

  m.def("ferrers", &ferrers);
  m.def("rectangle", &rectangle);
  m.def("sr", &sr);
  m.def("sr_tilde", &sr_tilde);
  m.def("sq", &sq);
  m.def("split_p", &split_p);
  m.def("split_q_rect", &split_q_rect);
  m.def("split_sq", [](int a, const Partition& mu) {
    SqSplit s = split_sq(a, mu);
    return std::make_tuple(s.q_a, s.a2, s.whole);
  });
  m.def("s_t_decomposition", [](int n, int k, const Partition& mu) {
    STDecomposition st = s_t_decomposition(n, k, mu);
    return std::make_tuple(st.s1, st.t1, st.s2, st.t2);
  });
  m.def("render_ascii", &render_ascii);

  m.def("hook_pair", [](const Region& g, std::pair<int, int> cell) {
    const HookPair hp = hook_pair(g, {cell.first, cell.second});
    return std::make_pair(hp.arm, hp.leg);
  });
  m.def("hook_pairs", [](const Region& g, const Region& h) {
    std::vector<std::tuple<int, int, long long>> out;
    for (const auto& [hp, count] : hook_pairs(g, h).entries()) {
      out.emplace_back(hp.arm, hp.leg, count);
    }
    return out;
  });
  m.def("broken_column", [](const Region& g, const Region& h, int d) {
    std::vector<std::pair<std::pair<int, int>, int>> out;
    for (const auto& [cell, leg] : broken_column(g, h, d)) {
      out.push_back({{cell.row, cell.col}, leg});
    }
    return out;
  });
  m.def("broken_column_legs", [](const Region& g, const Region& h, int d) {
    std::vector<std::pair<int, long long>> out;
    for (const auto& [value, count] : broken_column_legs(g, h, d).entries()) {
      out.emplace_back(value, count);
    }
    return out;
  });

  m.def("left_legs", [](std::vector<int> v, std::vector<int> h, int d) {
    return left_legs(Staircase(std::move(v), std::move(h)), d);
  });
  m.def("right_legs", [](std::vector<int> v, std::vector<int> h, int d) {
    return right_legs(Staircase(std::move(v), std::move(h)), d);
  });
  m.def("staircase_of", [](const Partition& mu, int n) {
    const Staircase s = staircase_of(mu, n);
    return std::make_pair(s.v(), s.h());
  });
  m.def("master_bijection", [](std::vector<int> seq) {
    return master_bijection(seq);
  });
  m.def("inverse_master_bijection", [](std::vector<int> seq) {
    return inverse_master_bijection(seq);
  });
  m.def("verify_lemma", [](std::vector<int> v, std::vector<int> h, int d) {
    const LemmaReport report = verify_lemma(Staircase(std::move(v), std::move(h)), d);
    return std::make_pair(report.pass, report.detail);
  });

  m.def("eq7_check", [](int n, int k, const Partition& mu, int d) {
    return report_to_dict(eq7_check(n, k, mu, d));
  });
  m.def("eq8_check", [](int n, int k, const Partition& mu, int d) {
    return report_to_dict(eq8_check(n, k, mu, d));
  });
  m.def("verify_theorem1", [](int n, int k, const Partition& mu) {
    return report_to_dict(verify_theorem1(n, k, mu));
  });
  m.def("verify_theorem2", [](int n, int k, const Partition& mu) {
    return report_to_dict(verify_theorem2(n, k, mu));
  });
  m.def("verify_theorem3", [](int a, const Partition& lambda) {
    return report_to_dict(verify_theorem3(a, lambda));
  });
  m.def("sweep_box_theorem",
        [](int theorem, int max_n, int max_k, int jobs) {
          return sweep_to_dict(sweep_box_theorem(theorem, max_n, max_k, jobs));
        },
        py::arg("theorem"), py::arg("max_n"), py::arg("max_k"),
        py::arg("jobs") = 1);
  m.def("sweep_theorem3",
        [](int max_lambda, int a_span, int jobs) {
          return sweep_to_dict(sweep_theorem3(max_lambda, a_span, jobs));
        },
        py::arg("max_lambda"), py::arg("a_span"), py::arg("jobs") = 1);
}
