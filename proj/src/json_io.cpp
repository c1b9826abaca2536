#include "bsk/json_io.hpp"

#include <cctype>

#include "bsk/errors.hpp"

namespace bsk::io {

namespace {

const json& field(const json& j, const char* name) {
    if (!j.is_object())
        throw SchemaError(std::string("expected an object with field \"") + name + "\"");
    auto it = j.find(name);
    if (it == j.end())
        throw SchemaError(std::string("missing field \"") + name + "\"");
    return *it;
}

GroupParam param_from_json(const json& j) {
    if (!j.is_number_integer())
        throw SchemaError("\"k\" must be an integer");
    return GroupParam(j.get<std::int64_t>());
}

const json& array_field(const json& j, const char* name) {
    const json& a = field(j, name);
    if (!a.is_array())
        throw SchemaError(std::string("field \"") + name + "\" must be an array");
    return a;
}

} // namespace

json to_json(const Integer& v) { return v.get_str(); }

Integer integer_from_json(const json& j) {
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<std::int64_t>()));
    if (!j.is_string())
        throw SchemaError("expected a decimal string");
    const auto& s = j.get_ref<const std::string&>();
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start)
        throw SchemaError("empty decimal string");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw SchemaError("invalid decimal string \"" + s + "\"");
    return Integer(s);
}

json to_json(const BSElement& g) { return {{"num", to_json(g.num())}, {"pow", g.pow()}, {"t", to_json(g.t())}}; }

BSElement element_from_json(const json& j, GroupParam k) {
    const json& pow = field(j, "pow");
    if (!pow.is_number_unsigned() && !(pow.is_number_integer() && pow.get<std::int64_t>() >= 0))
        throw SchemaError("\"pow\" must be a non-negative integer");
    return BSElement::make(integer_from_json(field(j, "num")), pow.get<std::uint64_t>(),
                           integer_from_json(field(j, "t")), k);
}

json to_json(const GroupRingElt& p) {
    json terms = json::array();
    for (const auto& [g, c] : p.terms())
        terms.push_back({{"coeff", to_json(c)}, {"elt", to_json(g)}});
    return {{"k", p.param().value()}, {"terms", std::move(terms)}};
}

GroupRingElt ring_from_json(const json& j, GroupParam k) {
    if (j.is_string())
        return parse_ring(j.get_ref<const std::string&>(), k);
    if (j.is_object() && j.contains("k") && param_from_json(j["k"]) != k)
        throw ParameterError("group ring element over B(" + std::to_string(j["k"].get<std::int64_t>()) +
                             ") where B(" + std::to_string(k.value()) + ") was expected");
    GroupRingElt p(k);
    for (const auto& t : array_field(j, "terms"))
        p.add_term(element_from_json(field(t, "elt"), k), integer_from_json(field(t, "coeff")));
    return p;
}

GroupRingElt ring_from_json(const json& j) { return ring_from_json(j, param_from_json(field(j, "k"))); }

json to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_json(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix int_matrix_from_json(const json& j) {
    if (!j.is_array())
        throw SchemaError("matrix must be an array of rows");
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : j) {
        if (!r.is_array())
            throw SchemaError("matrix row must be an array");
        std::vector<Integer> row;
        for (const auto& v : r)
            row.push_back(integer_from_json(v));
        rows.push_back(std::move(row));
    }
    try {
        return IntMatrix::from_rows(rows);
    } catch (const PreconditionError& e) {
        throw SchemaError(e.what());
    }
}

json matrix_rows_to_json(const RingMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(to_json(m(i, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RingMatrix matrix_rows_from_json(const json& j, GroupParam k) {
    if (!j.is_array())
        throw SchemaError("matrix must be an array of rows");
    std::vector<std::vector<GroupRingElt>> rows;
    for (const auto& r : j) {
        if (!r.is_array())
            throw SchemaError("matrix row must be an array");
        std::vector<GroupRingElt> row;
        for (const auto& v : r)
            row.push_back(ring_from_json(v, k));
        rows.push_back(std::move(row));
    }
    try {
        return RingMatrix::from_rows(k, rows);
    } catch (const PreconditionError& e) {
        throw SchemaError(e.what());
    }
}

json to_json(const RingMatrix& m) { return {{"k", m.param().value()}, {"matrix", matrix_rows_to_json(m)}}; }

RingMatrix ring_matrix_from_json(const json& j) {
    return matrix_rows_from_json(field(j, "matrix"), param_from_json(field(j, "k")));
}

json to_json(const AbelianGroup& g) {
    json torsion = json::array();
    for (const auto& t : g.torsion())
        torsion.push_back(to_json(t));
    return {{"free_rank", g.free_rank()}, {"torsion", std::move(torsion)}, {"text", g.str()}};
}

AbelianGroup abelian_group_from_json(const json& j) {
    const json& rank = field(j, "free_rank");
    if (!rank.is_number_unsigned())
        throw SchemaError("\"free_rank\" must be a non-negative integer");
    std::vector<Integer> torsion;
    for (const auto& t : array_field(j, "torsion"))
        torsion.push_back(integer_from_json(t));
    AbelianGroup g = AbelianGroup::from_cyclic(rank.get<std::size_t>(), torsion);
    if (g.torsion() != torsion)
        throw SchemaError("torsion must be a divisibility chain of factors >= 2");
    return g;
}

json to_json(const ArfProvenance& a) {
    return {{"mode", a.mode == ArfMode::ExtendedFromZ ? "extended-from-Z" : "asserted"}, {"value", a.value}};
}

ArfProvenance arf_from_json(const json& j) {
    const json& mode = field(j, "mode");
    const json& value = field(j, "value");
    if (!value.is_number_integer() || (value.get<int>() != 0 && value.get<int>() != 1))
        throw SchemaError("Arf \"value\" must be 0 or 1");
    if (mode == "extended-from-Z")
        return {ArfMode::ExtendedFromZ, value.get<int>()};
    if (mode == "asserted")
        return {ArfMode::Asserted, value.get<int>()};
    throw SchemaError("Arf \"mode\" must be \"extended-from-Z\" or \"asserted\"");
}

json to_json(const HermitianForm& f) {
    json j = {{"k", f.param().value()}, {"matrix", matrix_rows_to_json(f.matrix())}};
    if (f.inverse())
        j["inverse"] = matrix_rows_to_json(*f.inverse());
    if (f.arf())
        j["arf"] = to_json(*f.arf());
    return j;
}

HermitianForm form_from_json(const json& j) {
    const GroupParam k = param_from_json(field(j, "k"));
    const json& rows = field(j, "matrix");
    std::size_t n = rows.is_array() ? rows.size() : 0;
    RingMatrix m = matrix_rows_from_json(rows, k);
    if (!m.square() || m.rows() != n)
        throw SchemaError("form matrix must be square");
    std::optional<RingMatrix> inverse;
    if (j.contains("inverse") && !j["inverse"].is_null())
        inverse = matrix_rows_from_json(j["inverse"], k);
    std::optional<ArfProvenance> arf;
    if (j.contains("arf") && !j["arf"].is_null())
        arf = arf_from_json(j["arf"]);
    try {
        return HermitianForm(std::move(m), std::move(inverse), arf);
    } catch (const PreconditionError& e) {
        throw SchemaError(e.what());
    }
}

json to_json(const ManifoldDescriptor& d) {
    json j = {{"k", d.k.value()}, {"form", to_json(d.form)}, {"w2", to_string(d.w2)}};
    j["ks"] = d.ks ? json(*d.ks) : json(nullptr);
    return j;
}

ManifoldDescriptor descriptor_from_json(const json& j) {
    const GroupParam k = param_from_json(field(j, "k"));
    HermitianForm form = form_from_json(field(j, "form"));
    const json& w2 = field(j, "w2");
    if (!w2.is_string())
        throw SchemaError("\"w2\" must be a string");
    const json& ks = field(j, "ks");
    std::optional<int> ks_value;
    if (!ks.is_null()) {
        if (!ks.is_number_integer() || (ks.get<int>() != 0 && ks.get<int>() != 1))
            throw SchemaError("\"ks\" must be 0 or 1");
        ks_value = ks.get<int>();
    }
    return {k, std::move(form), parse_w2(w2.get<std::string>()), ks_value};
}

json to_json(const LGroupTable& t) {
    return {{"L4", to_json(t.L4)}, {"L5", to_json(t.L5)}, {"L0_symmetric", to_json(t.L0_symmetric)},
            {"whitehead", to_json(t.whitehead)}};
}

namespace {
json to_json(const DescriptorInvariants& d) {
    return {{"w2", d.w2}, {"ks", d.ks}, {"rank", d.rank}, {"parity", d.parity}, {"signature", d.signature}};
}
} // namespace

json to_json(const Classification& c) {
    return {{"verdict", to_string(c.verdict)},
            {"reasons", c.reasons},
            {"invariants", {{"first", to_json(c.first)}, {"second", to_json(c.second)}}}};
}

json to_json(const RealizedClass& r) {
    json j = to_json(r.descriptor);
    if (r.ks.depends_on_arf)
        j["ks_note"] = "KS = sign/8 + Arf (mod 2); Arf unknown";
    else if (r.ks.value == KsValue::Free)
        j["ks_note"] = "KS independent of the other invariants";
    else if (r.descriptor.w2 == W2Type::III)
        j["ks_note"] = "KS forced: sign/8 + Arf (mod 2)";
    else
        j["ks_note"] = "KS forced: sign/8 (mod 2)";
    return j;
}

} // namespace bsk::io
