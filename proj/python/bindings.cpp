/*
 * Copyright 2026 The sympair Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sympair/serialize.hpp"

namespace py = pybind11;
using namespace sympair;

namespace {

py::object to_python(const nlohmann::json& doc) { return py::module_::import("json").attr("loads")(doc.dump()); }

Word to_word(const Field& f, const std::vector<std::uint32_t>& v) {
  Word w;
  w.reserve(v.size());
  for (auto x : v) w.push_back(f.checked(Elem{x}));
  return w;
}

std::vector<std::uint32_t> from_word(const Word& w) {
  std::vector<std::uint32_t> out;
  out.reserve(w.size());
  for (Elem e : w) out.push_back(e.v);
  return out;
}

Method parse_method(const std::string& s) {
  if (s == "auto") return Method::kAuto;
  if (s == "full_enumeration") return Method::kFullEnumeration;
  if (s == "support_rank") return Method::kSupportRank;
  throw Error("unknown method '" + s + "'");
}

TowerPtr tower_for(std::uint64_t q) {
  const auto [p, m] = split_prime_power(q);
  return Tower::make(p, m);
}

EngineOptions engine(unsigned workers) {
  EngineOptions o;
  o.workers = workers;
  return o;
}

}  // namespace

PYBIND11_MODULE(_sympair, m) {
  m.doc() = "Exact distances of constacyclic codes and MDS symbol-pair family certification";

  // Translators run most recent first, so the base class is registered first.
  auto& error = py::register_exception<Error>(m, "SympairError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", error.ptr());

  // pybind11 holders cannot point to const; fields are never mutated through it.
  py::class_<Field, std::shared_ptr<Field>>(m, "Field")
      .def(py::init([](std::uint32_t p, std::uint32_t deg) { return std::const_pointer_cast<Field>(Field::make(p, deg)); }),
           py::arg("p"),
           py::arg("m") = 1)
      .def_property_readonly("p", &Field::characteristic)
      .def_property_readonly("m", &Field::degree)
      .def_property_readonly("size", &Field::size)
      .def_property_readonly("modulus", &Field::modulus)
      .def_property_readonly("generator", [](const Field& f) { return f.generator().v; })
      .def("add", [](const Field& f, std::uint32_t a, std::uint32_t b) { return f.add(f.checked(Elem{a}), f.checked(Elem{b})).v; })
      .def("sub", [](const Field& f, std::uint32_t a, std::uint32_t b) { return f.sub(f.checked(Elem{a}), f.checked(Elem{b})).v; })
      .def("mul", [](const Field& f, std::uint32_t a, std::uint32_t b) { return f.mul(f.checked(Elem{a}), f.checked(Elem{b})).v; })
      .def("div", [](const Field& f, std::uint32_t a, std::uint32_t b) { return f.div(f.checked(Elem{a}), f.checked(Elem{b})).v; })
      .def("neg", [](const Field& f, std::uint32_t a) { return f.neg(f.checked(Elem{a})).v; })
      .def("inv", [](const Field& f, std::uint32_t a) { return f.inv(f.checked(Elem{a})).v; })
      .def("pow", [](const Field& f, std::uint32_t a, std::int64_t e) { return f.pow(f.checked(Elem{a}), e).v; })
      .def("from_int", [](const Field& f, std::int64_t v) { return f.from_int(v).v; })
      .def("nth_root_of_unity", [](const Field& f, std::uint64_t n) { return nth_root_of_unity(f, n).v; })
      .def("__repr__", &Field::describe);

  py::class_<ConstacyclicCode>(m, "Code")
      .def_property_readonly("q", &ConstacyclicCode::q)
      .def_property_readonly("n", &ConstacyclicCode::length)
      .def_property_readonly("k", &ConstacyclicCode::dimension)
      .def_property_readonly("lam", [](const ConstacyclicCode& c) { return c.lambda().v; })
      .def_property_readonly("generator", [](const ConstacyclicCode& c) { return c.generator().indices(); })
      .def_property_readonly("defining_set",
                             [](const ConstacyclicCode& c) -> py::object {
                               if (!c.defining_set()) return py::none();
                               return py::cast(c.defining_set()->residues);
                             })
      .def("contains",
           [](const ConstacyclicCode& c, const std::vector<std::uint32_t>& w) {
             return c.contains(to_word(c.field(), w));
           })
      .def("encode",
           [](const ConstacyclicCode& c, const std::vector<std::uint32_t>& msg) {
             return from_word(c.encode(to_word(c.field(), msg)));
           })
      .def("shift",
           [](const ConstacyclicCode& c, const std::vector<std::uint32_t>& w) {
             return from_word(c.shift(to_word(c.field(), w)));
           })
      .def("to_dict", [](const ConstacyclicCode& c) { return to_python(to_json(c)); })
      .def("__repr__", [](const ConstacyclicCode& c) {
        return "<Code [" + std::to_string(c.length()) + ", " + std::to_string(c.dimension()) + "] over GF(" +
               std::to_string(c.q()) + ")>";
      });

  m.def(
      "make_code",
      [](std::uint64_t q, std::size_t n, const std::vector<std::uint32_t>& generator, std::int64_t lam) {
        const TowerPtr t = tower_for(q);
        return ConstacyclicCode::make(t, n, t->small().from_int(lam),
                                      Poly(t->small_ptr(), to_word(t->small(), generator)));
      },
      py::arg("q"), py::arg("n"), py::arg("generator"), py::arg("lam") = 1,
      "Code <g> in GF(q)[x]/<x^n - lam>; generator coefficients are element indices, low degree first.");
  m.def("dual", &dual);

  m.def("pair_weight", [](const std::vector<std::uint32_t>& w) {
    Word x;
    for (auto v : w) x.push_back(Elem{v});
    return pair_weight(x);
  });
  m.def("hamming_weight", [](const std::vector<std::uint32_t>& w) {
    Word x;
    for (auto v : w) x.push_back(Elem{v});
    return hamming_weight(x);
  });

  m.def(
      "min_hamming",
      [](const ConstacyclicCode& c, std::size_t w_max, unsigned workers, const std::string& method) {
        DistanceCertificate cert;
        {
          py::gil_scoped_release release;
          cert = min_hamming(c, w_max, engine(workers), parse_method(method));
        }
        return to_python(to_json(cert));
      },
      py::arg("code"), py::arg("w_max"), py::arg("workers") = 1, py::arg("method") = "auto");
  m.def(
      "min_pair",
      [](const ConstacyclicCode& c, std::size_t pw_max, unsigned workers, const std::string& method) {
        DistanceCertificate cert;
        {
          py::gil_scoped_release release;
          cert = min_pair(c, pw_max, engine(workers), parse_method(method));
        }
        return to_python(to_json(cert));
      },
      py::arg("code"), py::arg("pw_max"), py::arg("workers") = 1, py::arg("method") = "auto");

  m.def("families", [] {
    std::vector<std::string> out;
    for (auto id : all_families()) out.push_back(to_string(id));
    return out;
  });
  m.def("build", [](const std::string& family, std::uint64_t q) { return build(parse_family(family), q); },
        py::arg("family"), py::arg("q"));
  m.def(
      "certify",
      [](const std::string& family, std::uint64_t q, unsigned workers, std::optional<std::size_t> w_max,
         std::optional<std::size_t> pw_max) {
        CertifyOptions o;
        o.engine.workers = workers;
        o.w_max = w_max;
        o.pw_max = pw_max;
        FamilyCertificate cert;
        {
          py::gil_scoped_release release;
          cert = certify_family(parse_family(family), q, o);
        }
        return to_python(to_json(cert));
      },
      py::arg("family"), py::arg("q"), py::arg("workers") = 1, py::arg("w_max") = py::none(),
      py::arg("pw_max") = py::none());
  m.def("witness_low_weight",
        [](const std::string& family, std::uint64_t q) { return from_word(witness_low_weight(parse_family(family), q)); });
  m.def("subcode_check", &subcode_check, py::arg("q"));
  m.def("root_choice_stability", [](const std::string& family, std::uint64_t q) {
    return to_python(to_json(root_choice_stability(parse_family(family), q)));
  });

  m.def("enumerate_shapes", [](std::size_t n, std::size_t pw) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& s : enumerate_shapes(n, pw).shapes) out.push_back(s.positions);
    return out;
  });
  m.def("exclude_pattern", [](const ConstacyclicCode& c, const std::vector<std::uint32_t>& positions) {
    const auto r = exclude_pattern(c, SupportPattern{c.length(), positions, false});
    py::dict d;
    d["admissible"] = r.admissible;
    d["nullity"] = r.nullity;
    d["witness"] = r.fully_nonzero_witness ? py::cast(from_word(*r.fully_nonzero_witness)) : py::none();
    return d;
  });

  m.def("decompose", [](const ConstacyclicCode& c) {
    auto parts = decompose(c);
    return py::make_tuple(parts.c1, parts.c2);
  });
  m.def("join", &join);
  m.def("same_code", &same_code);
  m.def("negacyclic_dual_generator", [](std::uint64_t q) {
    const auto code = build(FamilyId::kDp9, q);
    return negacyclic_dual_generator(code.tower(), *code.root_base()).indices();
  });
}
