#include "witt/json_io.hpp"

#include <sstream>

namespace witt::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError("json: " + what); }

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
    return j.at(name);
}

ExpVec exp_from_json(const json& j, int m) {
    if (!j.is_array()) bad("alpha must be an integer array");
    if (static_cast<int>(j.size()) != m)
        throw DimMismatchError("json: alpha length " + std::to_string(j.size()) +
                               " does not match m = " + std::to_string(m));
    ExpVec a = zero_exp(m);
    for (int i = 0; i < m; ++i) {
        if (!j[static_cast<std::size_t>(i)].is_number_integer()) bad("alpha entries must be integers");
        a[static_cast<std::size_t>(i)] = j[static_cast<std::size_t>(i)].get<std::int32_t>();
    }
    return a;
}

XiMask xi_from_json(const json& j, int n) {
    if (!j.is_array()) bad("xi must be an array of indices");
    std::vector<int> idx;
    int prev = 0;
    for (const auto& e : j) {
        if (!e.is_number_integer()) bad("xi entries must be integers");
        int v = e.get<int>();
        if (v <= prev) bad("xi indices must be strictly ascending");
        prev = v;
        idx.push_back(v);
    }
    return mask_from_list(idx, n);
}

json mono_to_json(const SuperMonomial& mono, const Rational& c) {
    json t;
    t["c"] = c.str();
    t["alpha"] = json::array();
    for (auto v : mono.alpha) t["alpha"].push_back(v);
    t["xi"] = json::array();
    for (int j : list_from_mask(mono.xi)) t["xi"].push_back(j);
    return t;
}

SuperMonomial mono_from_json(const json& t, int m, int n, Rational& c) {
    c = rational_from_json(field(t, "c"));
    return SuperMonomial(exp_from_json(field(t, "alpha"), m), xi_from_json(field(t, "xi"), n));
}

json gen_to_json(const Generator& g) {
    json j;
    j["kind"] = g.kind == GenKind::D ? "d" : "del";
    j["index"] = g.index;
    return j;
}

Generator gen_from_json(const json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    const int index = field(j, "index").get<int>();
    if (kind == "d") return gen_d(index);
    if (kind == "del") return gen_del(index);
    bad("gen kind must be 'd' or 'del'");
}

} // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (!j.is_string()) bad("rational must be a string 'p' or 'p/q'");
    return Rational::parse(j.get<std::string>());
}

json to_json(const AElement& a) {
    json out = json::array();
    for (const auto& [mono, c] : a.terms()) out.push_back(mono_to_json(mono, c));
    return out;
}

AElement aelement_from_json(const json& j, int m, int n) {
    if (!j.is_array()) bad("A element must be an array of terms");
    AElement r(m, n);
    for (const auto& t : j) {
        Rational c;
        SuperMonomial mono = mono_from_json(t, m, n, c);
        r.add_term(mono, c);
    }
    return r;
}

json to_json(const WElement& w) {
    json out = json::array();
    for (const auto& [key, c] : w.terms()) {
        json t = mono_to_json(key.first, c);
        t["gen"] = gen_to_json(key.second);
        out.push_back(t);
    }
    return out;
}

WElement welement_from_json(const json& j, int m, int n) {
    if (!j.is_array()) bad("W element must be an array of terms");
    WElement r(m, n);
    for (const auto& t : j) {
        Rational c;
        SuperMonomial mono = mono_from_json(t, m, n, c);
        Generator g = gen_from_json(field(t, "gen"));
        const int bound = g.kind == GenKind::D ? m : n;
        if (g.index < 1 || g.index > bound)
            throw PreconditionError("json: generator index out of range");
        r.add_term(mono, g, c);
    }
    return r;
}

json to_json(const WTildeElement& w) {
    json out;
    out["w"] = to_json(w.w);
    out["a"] = to_json(w.a);
    return out;
}

WTildeElement wtilde_from_json(const json& j, int m, int n) {
    return WTildeElement{welement_from_json(field(j, "w"), m, n),
                         aelement_from_json(field(j, "a"), m, n)};
}

json to_json(const TensorVector& v) {
    json out = json::array();
    for (const auto& [key, c] : v.terms()) {
        json t = mono_to_json(key.first, c);
        t["vec"] = key.second;
        out.push_back(t);
    }
    return out;
}

TensorVector tensorvector_from_json(const json& j, int m, int n, int vdim) {
    if (!j.is_array()) bad("tensor vector must be an array of terms");
    TensorVector r(m, n, vdim);
    for (const auto& t : j) {
        Rational c;
        SuperMonomial mono = mono_from_json(t, m, n, c);
        const int k = field(t, "vec").get<int>();
        if (k < 0 || k >= vdim) bad("vec index out of range");
        r.add_term(mono, k, c);
    }
    return r;
}

json to_json(const GlModule& V) {
    json out;
    out["dim"] = V.dim();
    out["parity"] = V.parity();
    json e = json::object();
    const int sz = V.dims().size();
    for (int a = 1; a <= sz; ++a)
        for (int b = 1; b <= sz; ++b) {
            std::ostringstream key;
            key << a << "," << b;
            json rows = json::array();
            for (int r = 0; r < V.dim(); ++r) {
                json row = json::array();
                for (int c = 0; c < V.dim(); ++c)
                    row.push_back(V.E(a, b).at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)).str());
                rows.push_back(std::move(row));
            }
            e[key.str()] = std::move(rows);
        }
    out["E"] = std::move(e);
    return out;
}

GlModule glmodule_from_json(const json& j, int p, int q) {
    const int dim = field(j, "dim").get<int>();
    if (dim <= 0) bad("module dim must be positive");
    const json& par = field(j, "parity");
    if (!par.is_array() || static_cast<int>(par.size()) != dim) bad("parity length != dim");
    std::vector<int> parity;
    for (const auto& e : par) {
        int v = e.get<int>();
        if (v != 0 && v != 1) bad("parity entries must be 0 or 1");
        parity.push_back(v);
    }
    const GlDims d{p, q};
    const int sz = d.size();
    std::vector<QMatrix> mats(static_cast<std::size_t>(sz * sz),
                              QMatrix(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)));
    const json& e = field(j, "E");
    if (!e.is_object()) bad("E must be an object keyed 'a,b'");
    for (auto it = e.begin(); it != e.end(); ++it) {
        int a = 0, b = 0;
        char comma = 0;
        std::istringstream is(it.key());
        if (!(is >> a >> comma >> b) || comma != ',' || a < 1 || a > sz || b < 1 || b > sz)
            bad("bad E key '" + it.key() + "'");
        const json& rows = it.value();
        if (!rows.is_array() || static_cast<int>(rows.size()) != dim) bad("E matrix must have dim rows");
        QMatrix mat(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
        for (int r = 0; r < dim; ++r) {
            const json& row = rows[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<int>(row.size()) != dim) bad("E matrix row length != dim");
            for (int c = 0; c < dim; ++c)
                mat.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                    rational_from_json(row[static_cast<std::size_t>(c)]);
        }
        mats[static_cast<std::size_t>((a - 1) * sz + (b - 1))] = std::move(mat);
    }
    return GlModule(d, dim, std::move(parity), std::move(mats));
}

json to_json(const LatticeMatrix& B) {
    json out = json::array();
    for (std::size_t r = 0; r < B.dim(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < B.dim(); ++c) row.push_back(B.mat().at(r, c));
        out.push_back(std::move(row));
    }
    return out;
}

LatticeMatrix lattice_from_json(const json& j) {
    if (!j.is_array() || j.empty()) bad("lattice matrix must be a non-empty array of rows");
    const std::size_t m = j.size();
    IntMatrix b(m, m);
    for (std::size_t r = 0; r < m; ++r) {
        const json& row = j[r];
        if (!row.is_array() || row.size() != m) bad("lattice matrix must be square");
        for (std::size_t c = 0; c < m; ++c) {
            if (!row[c].is_number_integer()) bad("lattice entries must be integers");
            b.at(r, c) = row[c].get<long long>();
        }
    }
    return LatticeMatrix(std::move(b));
}

json to_json(const PairingReport& rep) {
    json out;
    out["target_weight"] = json::array();
    for (const auto& w : rep.target_weight) out["target_weight"].push_back(w.str());
    out["radii"] = rep.radii;
    out["ranks"] = rep.ranks;
    out["stabilized"] = rep.stabilized;
    out["final_rank"] = rep.final_rank();
    if (!rep.warning.empty()) out["warning"] = rep.warning;
    return out;
}

std::vector<Rational> weights_from_json(const json& j) {
    if (!j.is_array()) bad("weight vector must be an array");
    std::vector<Rational> w;
    for (const auto& e : j) w.push_back(rational_from_json(e));
    return w;
}

json weights_to_json(std::span<const Rational> w) {
    json out = json::array();
    for (const auto& v : w) out.push_back(v.str());
    return out;
}

std::vector<Rational> parse_weight_list(const std::string& csv) {
    std::vector<Rational> out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(Rational::parse(tok));
    return out;
}

ExpVec parse_int_list(const std::string& csv) {
    ExpVec out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + tok + "'");
        }
        if (pos != tok.size()) throw ParseError("bad integer '" + tok + "'");
        out.push_back(static_cast<std::int32_t>(v));
    }
    return out;
}

} // namespace witt::io
