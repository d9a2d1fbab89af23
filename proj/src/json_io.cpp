#include "mukailat/json_io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace mukailat {

Int int_from_json(const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) {
        if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
        return Int(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const Rat r = parse_rational(s);
        if (rat_den(r) != 1) throw std::invalid_argument("expected integer, got \"" + s + "\"");
        return rat_num(r);
    }
    if (j.is_number_float())
        throw std::invalid_argument("non-integer numeric rejected: " + j.dump());
    throw std::invalid_argument("expected integer, got " + j.dump());
}

json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned()) return Rat(int_from_json(j));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_float())
        throw std::invalid_argument("non-integer numeric rejected: " + j.dump());
    throw std::invalid_argument("expected rational, got " + j.dump());
}

json rat_to_json(const Rat& v) { return json(rat_to_string(v)); }

IntVec vector_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
    IntVec v;
    v.reserve(j.size());
    for (const json& e : j) v.push_back(int_from_json(e));
    return v;
}

json vector_to_json(const IntVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a matrix (array of rows)");
    std::vector<IntVec> rows;
    std::size_t cols = 0;
    for (const json& r : j) {
        IntVec row = vector_from_json(r);
        if (!rows.empty() && row.size() != cols)
            throw std::invalid_argument("ragged matrix rows");
        cols = row.size();
        rows.push_back(std::move(row));
    }
    return matrix_from_rows(rows, cols);
}

json matrix_to_json(const IntMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i)));
    return a;
}

Lattice lattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("gram"))
        throw std::invalid_argument("lattice JSON requires a \"gram\" key");
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw std::invalid_argument("lattice name must be a string");
        name = j["name"].get<std::string>();
    }
    return make_lattice(matrix_from_json(j["gram"]), std::move(name));
}

json lattice_to_json(const Lattice& l) {
    json j;
    if (!l.name.empty()) j["name"] = l.name;
    j["gram"] = matrix_to_json(l.gram);
    return j;
}

Sublattice sublattice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ambient") || !j.contains("basis"))
        throw std::invalid_argument("sublattice JSON requires \"ambient\" and \"basis\"");
    return make_sublattice(lattice_from_json(j["ambient"]), matrix_from_json(j["basis"]));
}

json sublattice_to_json(const Sublattice& s) {
    json j;
    j["ambient"] = lattice_to_json(s.ambient);
    j["basis"] = matrix_to_json(s.basis);
    return j;
}

ChargeVector charge_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lattice") || !j.contains("re") || !j.contains("im"))
        throw std::invalid_argument("charge JSON requires \"lattice\", \"re\" and \"im\"");
    const auto rats = [](const json& a) {
        if (!a.is_array()) throw std::invalid_argument("expected an array of rationals");
        RatVec v;
        v.reserve(a.size());
        for (const json& e : a) v.push_back(rat_from_json(e));
        return v;
    };
    return make_charge_vector(lattice_from_json(j["lattice"]), rats(j["re"]), rats(j["im"]));
}

json charge_to_json(const ChargeVector& c) {
    json j;
    j["lattice"] = lattice_to_json(c.lattice);
    json re = json::array(), im = json::array();
    for (const Rat& x : c.re) re.push_back(rat_to_json(x));
    for (const Rat& x : c.im) im.push_back(rat_to_json(x));
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

GroupAction action_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lattice") || !j.contains("generators"))
        throw std::invalid_argument("action JSON requires \"lattice\" and \"generators\"");
    if (!j["generators"].is_array())
        throw std::invalid_argument("\"generators\" must be an array of matrices");
    std::vector<IntMatrix> gens;
    for (const json& g : j["generators"]) gens.push_back(matrix_from_json(g));
    return make_group_action(lattice_from_json(j["lattice"]), std::move(gens));
}

json action_to_json(const GroupAction& a) {
    json j;
    j["lattice"] = lattice_to_json(a.lattice);
    json gens = json::array();
    for (const IntMatrix& g : a.generators) gens.push_back(matrix_to_json(g));
    j["generators"] = std::move(gens);
    return j;
}

json invariants_to_json(const LatticeInvariants& inv) {
    json j;
    j["rank"] = inv.rank;
    j["det"] = int_to_json(inv.det);
    j["abs_det"] = int_to_json(inv.abs_det);
    j["signature"] = json::array({inv.signature.positive, inv.signature.negative,
                                  inv.signature.zero});
    j["even"] = inv.even;
    j["unimodular"] = inv.unimodular;
    return j;
}

}  // namespace mukailat
