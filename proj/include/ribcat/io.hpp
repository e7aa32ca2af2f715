#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ribcat/dagger.hpp"
#include "ribcat/errors.hpp"
#include "ribcat/report.hpp"
#include "ribcat/skeletal.hpp"
#include "ribcat/zoo.hpp"

namespace ribcat {

using Json = nlohmann::ordered_json;

/// One input file = one category (plus its optional dagger structure).
struct CategoryFile {
    std::string name;
    SkeletalData data;
    std::optional<DaggerStructure> dagger;
};

namespace detail {

inline Json scalar_to_json(const Scalar& s) {
    if (s.exact()) {
        Json terms = Json::array();
        for (unsigned k = 0; k < s.conductor(); ++k) {
            const Rational& c = s.coefficients()[k];
            if (c == 0) continue;
            terms.push_back(Json::array({k, rational_to_string(c)}));
        }
        return Json{{"cyc", terms}};
    }
    const auto z = approx(s);
    return Json{{"re", z.real()}, {"im", z.imag()}};
}

inline Scalar scalar_from_json(const Json& j, unsigned conductor) {
    if (j.contains("cyc")) {
        std::vector<Rational> coeffs(conductor, Rational(0));
        for (const auto& term : j.at("cyc")) {
            if (!term.is_array() || term.size() != 2)
                throw LoadError("malformed cyc term: expected [exponent, \"p/q\"]");
            const long long k = term.at(0).get<long long>();
            if (k < 0 || k >= static_cast<long long>(conductor))
                throw LoadError("cyc exponent " + std::to_string(k) + " outside [0, conductor)");
            coeffs[static_cast<std::size_t>(k)] += parse_rational(term.at(1).get<std::string>());
        }
        return Scalar::cyclotomic(conductor, std::move(coeffs));
    }
    if (j.contains("re") || j.contains("im"))
        return Scalar::approximate(j.value("re", 0.0), j.value("im", 0.0));
    throw LoadError("malformed scalar value: expected {\"cyc\": ...} or {\"re\", \"im\"}");
}

inline std::size_t checked_index(long long v, std::size_t rank, const char* what) {
    if (v < 0 || v >= static_cast<long long>(rank))
        throw LoadError(std::string(what) + " index " + std::to_string(v) + " outside [0, rank)");
    return static_cast<std::size_t>(v);
}

}  // namespace detail

/// Parse the JSON category format. Inputs whose unit object is not at index 0
/// are re-indexed on load.
inline CategoryFile load_category(const Json& j) {
    if (!j.is_object()) throw LoadError("category file must be a JSON object");
    for (const char* key : {"name", "rank", "labels", "dual", "fusion", "scalar_mode", "F"})
        if (!j.contains(key)) throw LoadError(std::string("missing required field \"") + key + "\"");

    const std::string name = j.at("name").get<std::string>();
    const long long rank_ll = j.at("rank").get<long long>();
    if (rank_ll < 1) throw LoadError("rank must be >= 1");
    const std::size_t rank = static_cast<std::size_t>(rank_ll);

    std::vector<std::string> labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != rank) throw LoadError("labels length disagrees with rank");
    std::vector<std::size_t> dual;
    for (const auto& d : j.at("dual")) dual.push_back(detail::checked_index(d.get<long long>(), rank, "dual"));
    if (dual.size() != rank) throw LoadError("dual length disagrees with rank");

    auto fusion = detail::empty_tensor(rank);
    for (const auto& quad : j.at("fusion")) {
        if (!quad.is_array() || quad.size() != 4) throw LoadError("fusion entries must be [a,b,c,N] quadruples");
        const std::size_t a = detail::checked_index(quad.at(0).get<long long>(), rank, "fusion");
        const std::size_t b = detail::checked_index(quad.at(1).get<long long>(), rank, "fusion");
        const std::size_t c = detail::checked_index(quad.at(2).get<long long>(), rank, "fusion");
        const long long n = quad.at(3).get<long long>();
        if (n < 0) throw LoadError("fusion multiplicity must be non-negative");
        fusion[a][b][c] = static_cast<unsigned>(n);
    }

    const std::string mode_str = j.at("scalar_mode").get<std::string>();
    if (mode_str != "exact" && mode_str != "approx")
        throw LoadError("scalar_mode must be \"exact\" or \"approx\"");
    const ScalarMode mode = mode_str == "exact" ? ScalarMode::exact : ScalarMode::approximate;
    unsigned conductor = 1;
    if (j.contains("conductor")) {
        const long long c = j.at("conductor").get<long long>();
        if (c < 1) throw LoadError("conductor must be >= 1");
        conductor = static_cast<unsigned>(c);
    } else if (mode == ScalarMode::exact) {
        throw LoadError("exact scalar_mode requires a conductor");
    }

    // locate the unit and build the re-indexing permutation (unit -> 0)
    std::size_t unit = rank;
    for (std::size_t u = 0; u < rank; ++u) {
        bool ok = true;
        for (std::size_t b = 0; ok && b < rank; ++b)
            for (std::size_t c = 0; ok && c < rank; ++c) {
                const unsigned expect = (b == c) ? 1u : 0u;
                if (fusion[u][b][c] != expect || fusion[b][u][c] != expect) ok = false;
            }
        if (ok) {
            unit = u;
            break;
        }
    }
    if (unit == rank) throw LoadError("fusion tensor has no unit object");
    std::vector<std::size_t> perm(rank);
    for (std::size_t a = 0; a < rank; ++a) perm[a] = a < unit ? a + 1 : (a == unit ? 0 : a);

    std::vector<std::string> labels2(rank);
    std::vector<std::size_t> dual2(rank);
    auto fusion2 = detail::empty_tensor(rank);
    for (std::size_t a = 0; a < rank; ++a) {
        labels2[perm[a]] = labels[a];
        dual2[perm[a]] = perm[dual[a]];
    }
    for (std::size_t a = 0; a < rank; ++a)
        for (std::size_t b = 0; b < rank; ++b)
            for (std::size_t c = 0; c < rank; ++c) fusion2[perm[a]][perm[b]][perm[c]] = fusion[a][b][c];
    FusionRing ring(std::move(labels2), std::move(dual2), std::move(fusion2));

    FTable f;
    for (const auto& entry : j.at("F")) {
        if (!entry.is_array() || entry.size() != 7)
            throw LoadError("F entries must be [a,b,c,d,e,f,value]");
        std::array<std::size_t, 6> key;
        for (int i = 0; i < 6; ++i)
            key[static_cast<std::size_t>(i)] =
                perm[detail::checked_index(entry.at(i).get<long long>(), rank, "F")];
        if (f.count(key)) throw LoadError("duplicate F entry");
        f[key] = detail::scalar_from_json(entry.at(6), conductor);
    }
    RTable r;
    if (j.contains("R"))
        for (const auto& entry : j.at("R")) {
            if (!entry.is_array() || entry.size() != 4) throw LoadError("R entries must be [a,b,c,value]");
            std::array<std::size_t, 3> key;
            for (int i = 0; i < 3; ++i)
                key[static_cast<std::size_t>(i)] =
                    perm[detail::checked_index(entry.at(i).get<long long>(), rank, "R")];
            if (r.count(key)) throw LoadError("duplicate R entry");
            r[key] = detail::scalar_from_json(entry.at(3), conductor);
        }

    std::vector<Scalar> twist, pivotal;
    if (j.contains("twist")) {
        const auto& tw = j.at("twist");
        if (tw.size() != rank) throw LoadError("twist length disagrees with rank");
        twist.resize(rank);
        for (std::size_t a = 0; a < rank; ++a)
            twist[perm[a]] = detail::scalar_from_json(tw.at(a), conductor);
    }
    if (j.contains("pivotal")) {
        const auto& pv = j.at("pivotal");
        if (pv.size() != rank) throw LoadError("pivotal length disagrees with rank");
        pivotal.resize(rank);
        for (std::size_t a = 0; a < rank; ++a)
            pivotal[perm[a]] = detail::scalar_from_json(pv.at(a), conductor);
    }

    std::optional<DaggerStructure> dagger;
    if (j.contains("dagger_phases")) {
        std::map<std::array<std::size_t, 3>, Scalar> phases;
        for (const auto& entry : j.at("dagger_phases")) {
            if (!entry.is_array() || entry.size() != 4)
                throw LoadError("dagger_phases entries must be [a,b,c,value]");
            std::array<std::size_t, 3> key;
            for (int i = 0; i < 3; ++i)
                key[static_cast<std::size_t>(i)] =
                    perm[detail::checked_index(entry.at(i).get<long long>(), rank, "dagger_phases")];
            phases[key] = detail::scalar_from_json(entry.at(3), conductor);
        }
        dagger = DaggerStructure(std::move(phases));
    }

    SkeletalData data(std::move(ring), std::move(f), std::move(r), std::move(twist), std::move(pivotal),
                      mode);
    return CategoryFile{name, std::move(data), std::move(dagger)};
}

inline CategoryFile load_category_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw LoadError("JSON parse error in " + path + ": " + e.what());
    }
    return load_category(j);
}

inline Json save_category(const std::string& name, const SkeletalData& data,
                          const DaggerStructure* dagger = nullptr) {
    const FusionRing& ring = data.ring();
    unsigned conductor = 1;
    auto absorb = [&](const Scalar& s) {
        if (s.exact()) conductor = detail::lcm_u(conductor, s.conductor());
    };
    for (const auto& [k, v] : data.f_table()) absorb(v);
    for (const auto& [k, v] : data.r_table()) absorb(v);
    for (const auto& s : data.twist_vector()) absorb(s);
    for (std::size_t a = 0; a < ring.rank(); ++a) absorb(data.pivotal(a));

    auto value_json = [&](const Scalar& s) {
        if (!s.exact()) return detail::scalar_to_json(s);
        // lift to the file conductor so every cyc entry shares one basis
        return detail::scalar_to_json(s * Scalar::root_of_unity(conductor, 0));
    };

    Json j;
    j["name"] = name;
    j["rank"] = ring.rank();
    j["labels"] = ring.labels();
    j["dual"] = ring.duals();
    Json fusion = Json::array();
    for (std::size_t a = 0; a < ring.rank(); ++a)
        for (std::size_t b = 0; b < ring.rank(); ++b)
            for (std::size_t c = 0; c < ring.rank(); ++c)
                if (ring.fusion(a, b, c) > 0) fusion.push_back(Json::array({a, b, c, ring.fusion(a, b, c)}));
    j["fusion"] = std::move(fusion);
    j["scalar_mode"] = data.mode() == ScalarMode::exact ? "exact" : "approx";
    j["conductor"] = conductor;
    Json f = Json::array();
    for (const auto& [key, value] : data.f_table())
        f.push_back(Json::array({key[0], key[1], key[2], key[3], key[4], key[5], value_json(value)}));
    j["F"] = std::move(f);
    if (data.braided()) {
        Json r = Json::array();
        for (const auto& [key, value] : data.r_table())
            r.push_back(Json::array({key[0], key[1], key[2], value_json(value)}));
        j["R"] = std::move(r);
    }
    if (data.has_twist()) {
        Json t = Json::array();
        for (const auto& s : data.twist_vector()) t.push_back(value_json(s));
        j["twist"] = std::move(t);
    }
    Json p = Json::array();
    for (std::size_t a = 0; a < ring.rank(); ++a) p.push_back(value_json(data.pivotal(a)));
    j["pivotal"] = std::move(p);
    if (dagger != nullptr && !dagger->phases().empty()) {
        Json ph = Json::array();
        for (const auto& [key, value] : dagger->phases())
            ph.push_back(Json::array({key[0], key[1], key[2], value_json(value)}));
        j["dagger_phases"] = std::move(ph);
    }
    return j;
}

inline void save_category_file(const std::string& path, const std::string& name, const SkeletalData& data,
                               const DaggerStructure* dagger = nullptr) {
    std::ofstream out(path);
    if (!out) throw LoadError("cannot open output file: " + path);
    out << save_category(name, data, dagger).dump(1) << "\n";
}

/// FNV-1a digest of the input bytes; keeps machine reports reproducible
/// without heavyweight hashing.
inline std::string digest_bytes(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

inline std::string digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return digest_bytes(ss.str());
}

inline Json check_to_json(const CheckResult& c) {
    Json j;
    j["name"] = c.name;
    j["verdict"] = c.pass ? "pass" : "fail";
    j["instances"] = c.instances;
    if (!c.note.empty()) j["note"] = c.note;
    Json fails = Json::array();
    for (const auto& f : c.failures) {
        Json jf;
        jf["instance"] = f.instance;
        jf["lhs"] = f.lhs;
        jf["rhs"] = f.rhs;
        jf["residual"] = f.residual;
        fails.push_back(std::move(jf));
    }
    j["failures"] = std::move(fails);
    return j;
}

inline Json report_to_json(const ValidationReport& r) {
    Json j;
    j["verdict"] = r.passed() ? "pass" : "fail";
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(check_to_json(c));
    j["checks"] = std::move(checks);
    j["warnings"] = r.warnings;
    return j;
}

}  // namespace ribcat
