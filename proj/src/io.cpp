#include "qhodge/io.hpp"

#include <fstream>
#include <sstream>

namespace qhodge {

namespace {

std::string scalar_str(const Scalar& c) { return c.str(); }

Scalar scalar_parse(const std::string& text, const std::string& where) {
    try {
        return Scalar::parse(text);
    } catch (const std::exception& e) {
        throw IOError(where + ": bad scalar \"" + text + "\": " + e.what());
    }
}

int int_field(const Json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number_integer()) throw IOError(where + ": missing integer field \"" + key + "\"");
    return j[key].get<int>();
}

const Json& object_field(const Json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_object()) throw IOError(where + ": missing object field \"" + key + "\"");
    return j[key];
}

std::pair<int, int> parse_index_pair(const std::string& key, const std::string& where) {
    ExponentTuple t;
    try {
        t = parse_exponents(key, 2);
    } catch (const std::exception& e) {
        throw IOError(where + ": bad index pair \"" + key + "\": " + e.what());
    }
    return {t[0], t[1]};
}

}  // namespace

Json series_to_json(const QSeries& f) {
    Json j = Json::object();
    for (const auto& [m, c] : f.coeffs()) j[exponents_str(m)] = scalar_str(c);
    return j;
}

QSeries series_from_json(const Json& j, int r, int order, const std::string& where) {
    if (!j.is_object()) throw IOError(where + ": series must be an object of exponent -> scalar");
    QSeries f(r, order);
    for (const auto& [key, val] : j.items()) {
        ExponentTuple m;
        try {
            m = parse_exponents(key, r);
        } catch (const std::exception& e) {
            throw IOError(where + ": bad exponent tuple \"" + key + "\": " + e.what());
        }
        if (total_degree(m) > order)
            throw IOError(where + ": exponent " + key + " exceeds the truncation order " + std::to_string(order));
        if (!val.is_string()) throw IOError(where + ": coefficient of " + key + " must be a string");
        f.set(m, scalar_parse(val.get<std::string>(), where));
    }
    return f;
}

Json logpoly_to_json(const LogPolySeries& f) {
    Json j = Json::object();
    for (const auto& [zexp, g] : f.terms()) j["z^(" + exponents_str(zexp) + ")"] = series_to_json(g);
    return j;
}

Json module_to_json(const FrobeniusModule& m) {
    Json j;
    j["schema"] = kModuleSchema;
    j["weight"] = m.k;
    j["dims"] = m.dims;
    Json pairing = Json::object();
    for (int a = 0; a < m.rank(); ++a)
        for (int b = a; b < m.rank(); ++b)
            if (!m.B(a, b).is_zero()) pairing[std::to_string(a) + "," + std::to_string(b)] = scalar_str(m.B(a, b));
    j["pairing"] = pairing;
    j["framing"] = m.framing;
    Json products = Json::object();
    for (int p = 0; p < m.r(); ++p)
        for (int a = 0; a < m.rank(); ++a)
            for (int c = 0; c < m.rank(); ++c)
                if (!m.L[p](c, a).is_zero())
                    products[std::to_string(m.framing[p]) + "," + std::to_string(a)][std::to_string(c)] =
                        scalar_str(m.L[p](c, a));
    j["products"] = products;
    j["real"] = m.real;
    return j;
}

FrobeniusModule module_from_json(const Json& j) {
    const std::string where = "module file";
    if (!j.is_object()) throw IOError(where + ": top level must be an object");
    if (j.value("schema", "") != kModuleSchema)
        throw IOError(where + ": field \"schema\" must be \"" + std::string(kModuleSchema) + "\"");
    FrobeniusModule m;
    m.k = int_field(j, "weight", where);
    if (!j.contains("dims") || !j["dims"].is_array()) throw IOError(where + ": missing array field \"dims\"");
    m.dims = j["dims"].get<std::vector<int>>();
    if (static_cast<int>(m.dims.size()) != m.k + 1)
        throw IOError(where + ": \"dims\" must have weight + 1 entries");
    for (int p = 0; p <= m.k; ++p)
        for (int i = 0; i < m.dims[p]; ++i) m.deg.push_back(2 * p);
    int n = m.rank();

    m.B = ScalarMat(n, n);
    for (const auto& [key, val] : object_field(j, "pairing", where).items()) {
        auto [a, b] = parse_index_pair(key, where + ", pairing");
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw IOError(where + ": pairing index (" + key + ") out of range");
        if (!val.is_string()) throw IOError(where + ": pairing value at (" + key + ") must be a string");
        Scalar c = scalar_parse(val.get<std::string>(), where + ", pairing (" + key + ")");
        m.B(a, b) = c;
        m.B(b, a) = c;
    }

    if (!j.contains("framing") || !j["framing"].is_array()) throw IOError(where + ": missing array field \"framing\"");
    m.framing = j["framing"].get<std::vector<int>>();
    for (int f : m.framing)
        if (f < 0 || f >= n) throw IOError(where + ": framing index " + std::to_string(f) + " out of range");

    m.L.assign(m.r(), ScalarMat(n, n));
    for (const auto& [key, val] : object_field(j, "products", where).items()) {
        auto [f, a] = parse_index_pair(key, where + ", products");
        int p = -1;
        for (int q = 0; q < m.r(); ++q)
            if (m.framing[q] == f) p = q;
        if (p < 0) throw IOError(where + ": product key (" + key + ") does not start with a framing index");
        if (a < 0 || a >= n) throw IOError(where + ": product key (" + key + ") out of range");
        if (!val.is_object()) throw IOError(where + ": product entry (" + key + ") must be an object");
        for (const auto& [ckey, cval] : val.items()) {
            int c;
            try {
                c = std::stoi(ckey);
            } catch (const std::exception&) {
                throw IOError(where + ": bad product target index \"" + ckey + "\"");
            }
            if (c < 0 || c >= n) throw IOError(where + ": product target " + ckey + " out of range");
            if (!cval.is_string()) throw IOError(where + ": product coefficient at (" + key + ") must be a string");
            m.L[p](c, a) = scalar_parse(cval.get<std::string>(), where + ", products (" + key + ")");
        }
    }
    m.real = j.value("real", true);
    return m;
}

Json potential_to_json(const QuantumPotential& phi) {
    Json j;
    j["schema"] = kPotentialSchema;
    j["order"] = phi.D;
    if (!phi.weight3.is_universal_zero() && !phi.weight3.is_zero()) j["weight3"] = series_to_json(phi.weight3);
    if (!phi.phi_a.empty()) {
        Json block = Json::object();
        for (const auto& [a, f] : phi.phi_a)
            if (!f.is_zero()) block[std::to_string(a)] = series_to_json(f);
        j["phi_a"] = block;
    }
    if (!phi.phi_ab.empty()) {
        Json block = Json::object();
        for (const auto& [key, f] : phi.phi_ab)
            if (!f.is_zero()) block[std::to_string(key.first) + "," + std::to_string(key.second)] = series_to_json(f);
        j["phi_ab"] = block;
    }
    return j;
}

QuantumPotential potential_from_json(const FrobeniusModule& m, const Json& j, int order_override) {
    const std::string where = "potential file";
    if (!j.is_object()) throw IOError(where + ": top level must be an object");
    if (j.value("schema", "") != kPotentialSchema)
        throw IOError(where + ": field \"schema\" must be \"" + std::string(kPotentialSchema) + "\"");
    int order = int_field(j, "order", where);
    if (order_override > 0) order = order_override;
    QuantumPotential phi = make_potential(m, order);
    int file_order = int_field(j, "order", where);
    auto read_series = [&](const Json& block, const std::string& ctx) {
        QSeries f = series_from_json(block, m.r(), file_order, ctx);
        return order_override > 0 ? f.truncate(order) : f;
    };
    if (j.contains("weight3")) phi.weight3 = read_series(j["weight3"], where + ", weight3");
    if (j.contains("phi_a"))
        for (const auto& [key, val] : object_field(j, "phi_a", where).items()) {
            int a;
            try {
                a = std::stoi(key);
            } catch (const std::exception&) {
                throw IOError(where + ": bad phi_a index \"" + key + "\"");
            }
            phi.phi_a.emplace(a, read_series(val, where + ", phi_a[" + key + "]"));
        }
    if (j.contains("phi_ab"))
        for (const auto& [key, val] : object_field(j, "phi_ab", where).items()) {
            auto [a, b] = parse_index_pair(key, where + ", phi_ab");
            phi.phi_ab.emplace(std::make_pair(a, b), read_series(val, where + ", phi_ab[" + key + "]"));
        }
    return phi;
}

Json scalar_matrix_to_json(const ScalarMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_str(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json series_matrix_to_json(const SeriesMat& m) {
    Json entries = Json::object();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) entries[std::to_string(i) + "," + std::to_string(j)] = series_to_json(m(i, j));
    return entries;
}

Json logpoly_matrix_to_json(const LogPolyMat& m) {
    Json entries = Json::object();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) entries[std::to_string(i) + "," + std::to_string(j)] = logpoly_to_json(m(i, j));
    return entries;
}

Json certificate_to_json(const Certificate& c) {
    Json items = Json::array();
    for (const auto& item : c.items) {
        Json e;
        e["name"] = item.name;
        e["passed"] = item.passed;
        if (!item.witness.empty()) e["witness"] = item.witness;
        items.push_back(e);
    }
    return items;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw IOError(path + ": " + e.what());
    }
}

FrobeniusModule load_module(const std::string& path) {
    try {
        return module_from_json(load_json(path));
    } catch (const IOError& e) {
        throw IOError(path + ": " + e.what());
    }
}

QuantumPotential load_potential(const FrobeniusModule& m, const std::string& path, int order_override) {
    try {
        return potential_from_json(m, load_json(path), order_override);
    } catch (const IOError& e) {
        throw IOError(path + ": " + e.what());
    }
}

}  // namespace qhodge
