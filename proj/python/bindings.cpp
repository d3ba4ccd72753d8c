#include "knutson/cli.hpp"
#include "knutson/groups.hpp"
#include "knutson/numtheory.hpp"
#include "knutson/partitions.hpp"
#include "knutson/sequences.hpp"
#include "knutson/serialize.hpp"
#include "knutson/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

namespace py = pybind11;
using namespace knutson;

namespace {

py::object to_py(const BigInt& x) { return py::module_::import("builtins").attr("int")(x.get_str()); }

py::object to_py(const Rational& x)
{
    return py::module_::import("fractions").attr("Fraction")(to_py(x.get_num()), to_py(x.get_den()));
}

BigInt from_py(const py::handle& h) { return BigInt(py::str(h).cast<std::string>()); }

py::list to_py(const std::vector<BigInt>& v)
{
    py::list out;
    for (const auto& x : v)
        out.append(to_py(x));
    return out;
}

std::vector<int> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

IntegerMatrix matrix_from_py(const std::vector<std::vector<py::object>>& rows)
{
    std::vector<std::vector<BigInt>> m;
    for (const auto& r : rows) {
        auto& out = m.emplace_back();
        for (const auto& x : r)
            out.push_back(from_py(x));
    }
    return IntegerMatrix::from_rows(m);
}

py::list matrix_to_py(const IntegerMatrix& m)
{
    py::list out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        py::list row;
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.append(to_py(m(r, c)));
        out.append(row);
    }
    return out;
}

std::vector<BigInt> vector_from_py(const std::vector<py::object>& v)
{
    std::vector<BigInt> out;
    for (const auto& x : v)
        out.push_back(from_py(x));
    return out;
}

py::object search_to_py(const std::optional<RhoSearchResult>& s)
{
    if (!s)
        return py::none();
    py::dict d;
    d["rho"] = s->rho.to_string();
    d["multiplicities"] = to_py(s->rho.multiplicities);
    d["degree"] = to_py(s->rho.degree());
    d["k_prime"] = to_py(s->k_prime);
    d["candidates"] = s->candidates;
    return d;
}

// A group together with its character ring.
struct Group {
    GroupSpec spec;
    std::shared_ptr<CharacterRing> ring;

    const CharacterTable& table() const { return ring->table(); }

    std::size_t index_of(const py::object& chi) const
    {
        if (py::isinstance<py::str>(chi)) {
            const auto i = table().find_irreducible(chi.cast<std::string>());
            if (!i)
                throw PreconditionError("no irreducible labelled " + chi.cast<std::string>());
            return *i;
        }
        const auto i = chi.cast<std::size_t>();
        if (i >= table().num_irreducibles())
            throw PreconditionError("irreducible index out of range");
        return i;
    }
};

Group make_group(const std::string& family, int n)
{
    const GroupSpec spec = parse_group(family, n);
    return {spec, std::make_shared<CharacterRing>(build_table(spec))};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact character tables and Knutson indices";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ResourceCapError>(m, "ResourceCapError", PyExc_RuntimeError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_ArithmeticError);

    m.def("is_triangular", &is_triangular);
    m.def("is_loeschian", &is_loeschian);
    m.def("loeschian_witness", &loeschian_witness);
    m.def("sigma3", &sigma3);
    m.def("quadform_xxyy", [](std::uint64_t n, bool brute_force) {
        return quadform_xxyy(n, brute_force ? QuadformMethod::brute_force : QuadformMethod::loeschian);
    }, py::arg("n"), py::arg("brute_force") = false);

    m.def("partitions", [](int n) {
        std::vector<std::vector<int>> out;
        for (const auto& p : enumerate_partitions(n))
            out.push_back(parts_of(p));
        return out;
    });
    m.def("partition_count", [](int n) { return to_py(partition_count(n)); });
    m.def("conjugate", [](std::vector<int> p) { return parts_of(conjugate(Partition(std::move(p)))); });
    m.def("hook_degree", [](std::vector<int> p) { return to_py(degree_hook(Partition(std::move(p)))); });
    m.def("is_t_core", [](std::vector<int> p, int t) { return is_t_core(Partition(std::move(p)), t); });
    m.def("count_t_cores", [](int n, int t, bool brute_force) {
        return count_t_cores(n, t, brute_force ? CoreMethod::brute_force : CoreMethod::automatic);
    }, py::arg("n"), py::arg("t"), py::arg("brute_force") = false);
    m.def("exists_t_core", [](int n, int t, bool brute_force) {
        return exists_t_core(n, t, brute_force ? CoreMethod::brute_force : CoreMethod::automatic);
    }, py::arg("n"), py::arg("t"), py::arg("brute_force") = false);
    m.def("find_t_core", [](int n, int t) -> std::optional<std::vector<int>> {
        if (auto p = find_t_core(n, t))
            return parts_of(*p);
        return std::nullopt;
    });

    m.def("seq_L_Sn", [](std::uint64_t limit) { return seq_L_Sn(limit).terms; });
    m.def("seq_L_An", [](std::uint64_t limit) { return seq_L_An(limit).terms; });
    m.def("seq_zero_columns_sn", [](int limit) { return seq_zero_columns_sn(limit).terms; });

    m.def("smith_normal_form", [](const std::vector<std::vector<py::object>>& rows) {
        const auto snf = smith_normal_form(matrix_from_py(rows));
        return py::make_tuple(matrix_to_py(snf.U), matrix_to_py(snf.D), matrix_to_py(snf.V));
    });
    m.def("solve_integer", [](const std::vector<std::vector<py::object>>& rows, const std::vector<py::object>& b)
              -> py::object {
        if (auto x = solve_integer(matrix_from_py(rows), vector_from_py(b)))
            return to_py(*x);
        return py::none();
    });
    m.def("min_multiplier", [](const std::vector<std::vector<py::object>>& rows, const std::vector<py::object>& v)
              -> py::object {
        if (auto k = min_multiplier(matrix_from_py(rows), vector_from_py(v)))
            return to_py(*k);
        return py::none();
    });

    py::class_<Group>(m, "Group")
        .def(py::init(&make_group), py::arg("family"), py::arg("n"))
        .def_property_readonly("label", [](const Group& g) { return g.table().label; })
        .def_property_readonly("order", [](const Group& g) { return to_py(g.table().order); })
        .def_property_readonly("classes", [](const Group& g) {
            py::list out;
            for (const auto& c : g.table().classes)
                out.append(py::make_tuple(c.label, to_py(c.size)));
            return out;
        })
        .def_property_readonly("characters", [](const Group& g) {
            std::vector<std::string> out;
            for (const auto& chi : g.table().irreducibles)
                out.push_back(chi.label);
            return out;
        })
        .def_property_readonly("degrees", [](const Group& g) { return to_py(g.table().degrees()); })
        .def("value", [](const Group& g, const py::object& chi, std::size_t cls) {
            if (cls >= g.table().num_classes())
                throw PreconditionError("class index out of range");
            return g.table().value(g.index_of(chi), cls).to_string();
        })
        .def("is_orthogonal", [](const Group& g) { return check_orthogonality(g.table()).ok; })
        .def("lcm_degrees", [](const Group& g) { return to_py(lcm_of_degrees(g.table())); })
        .def("lower_bound", [](const Group& g) { return to_py(generalized_lower_bound(g.table())); })
        .def("zero_columns", [](const Group& g) { return zero_in_every_nontrivial_column(g.table()); })
        .def("tensor", [](const Group& g, const py::object& a, const py::object& b) {
            return to_py(g.ring->tensor_decompose(g.index_of(a), g.index_of(b)));
        })
        .def("knutson_index", [](const Group& g, const py::object& chi) {
            return to_py(knutson_index_char(*g.ring, g.index_of(chi)));
        })
        .def("knutson_indices", [](const Group& g) { return to_py(knutson_indices(*g.ring)); })
        .def("knutson_index_group", [](const Group& g) { return to_py(knutson_index_group(*g.ring)); })
        .def("min_rho_search", [](const Group& g, const py::object& bound) {
            return search_to_py(min_rho_search(*g.ring, bound.is_none() ? g.table().order : from_py(bound)));
        }, py::arg("degree_bound") = py::none())
        .def("summary", [](const Group& g) {
            const auto s = summarize_knutson(g.spec, *g.ring);
            py::dict d;
            d["group"] = s.group;
            d["order"] = to_py(s.order);
            d["L"] = to_py(s.L);
            d["lower_bound"] = to_py(s.lower_bound);
            d["zero_columns"] = s.zero_columns;
            d["K"] = to_py(s.K);
            d["k_prime"] = s.k_prime ? to_py(*s.k_prime) : py::none();
            d["k_prime_reason"] = s.k_prime_reason;
            d["obstruction_confirmed"] = s.obstruction ? py::cast(s.obstruction->confirmed()) : py::none();
            return d;
        })
        .def("to_json", [](const Group& g) { return to_json(g.table()).dump(); })
        .def("__repr__", [](const Group& g) { return "<Group " + g.table().label + ">"; });

    m.def("run_suite", [](const std::string& name, std::optional<int> q) {
        const auto r = run_suite(name, q);
        py::list checks;
        for (const auto& c : r.checks)
            checks.append(py::make_tuple(c.name, c.pass, c.detail));
        return py::make_tuple(r.pass(), checks);
    }, py::arg("name"), py::arg("q") = py::none());

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
