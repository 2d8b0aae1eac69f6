#include "fatpoints/certificate.hpp"

#include <map>
#include <mutex>

#include <json.hpp>

#include "fatpoints/cutting.hpp"
#include "fatpoints/errors.hpp"
#include "fatpoints/textio.hpp"

namespace fatpoints {

using json = nlohmann::ordered_json;

const LinearSystem& CutCertificate::system() const {
    return std::visit(
        [](const auto& n) -> const LinearSystem& {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, LemmaLeaf>) {
                // expansion is cached per leaf via a thread-safe static map
                static std::map<std::pair<std::string, std::vector<std::int64_t>>, CertPtr>
                    cache;
                static std::mutex mtx;
                std::lock_guard<std::mutex> lock(mtx);
                auto key = std::make_pair(n.name, n.params);
                auto it = cache.find(key);
                if (it == cache.end())
                    it = cache.emplace(key, lemma_expand(n.name, n.params)).first;
                return it->second->system();
            } else {
                return n.system;
            }
        },
        node);
}

CertPtr make_cert(CutCertificate c) { return std::make_shared<const CutCertificate>(std::move(c)); }

namespace {

std::string rational_str(const Rational& r) { return r.str(); }

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

json system_to_json(const LinearSystem& L) {
    json j;
    j["diagram"] = format_diagram(L.diagram);
    j["mults"] = format_mults(L.mults);
    return j;
}

LinearSystem system_from_json(const json& j) {
    return {parse_diagram(j.at("diagram").get<std::string>()),
            parse_mults(j.at("mults").get<std::string>())};
}

json node_to_json(const CutCertificate& cert) {
    return std::visit(
        [](const auto& n) -> json {
            using T = std::decay_t<decltype(n)>;
            json j;
            if constexpr (std::is_same_v<T, RankLeaf>) {
                j["kind"] = "rank";
                j["system"] = system_to_json(n.system);
                j["strategy"] = n.strategy == LeafStrategy::OneMult ? "onemult" : "modular";
                if (n.strategy == LeafStrategy::ModularRank) {
                    j["seed"] = n.seed;
                    j["trials"] = n.trials;
                }
            } else if constexpr (std::is_same_v<T, EquivLeaf>) {
                j["kind"] = "equiv";
                j["system"] = system_to_json(n.system);
                j["translation"] = {n.translation.first, n.translation.second};
                j["inner"] = node_to_json(*n.inner);
            } else if constexpr (std::is_same_v<T, CutNode>) {
                j["kind"] = "cut";
                j["system"] = system_to_json(n.system);
                j["cut"] = {rational_str(n.cut.r1), rational_str(n.cut.r2),
                            rational_str(n.cut.r0)};
                j["split"] = n.mult_split;
                j["sub2"] = node_to_json(*n.sub2);
                j["sub1"] = node_to_json(*n.sub1);
            } else if constexpr (std::is_same_v<T, LemmaLeaf>) {
                j["kind"] = "lemma";
                j["name"] = n.name;
                j["params"] = n.params;
            } else {
                j["kind"] = "empty";
                j["diagram"] = format_diagram(n.system.diagram);
            }
            return j;
        },
        cert.node);
}

CutCertificate node_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rank") {
        RankLeaf n;
        n.system = system_from_json(j.at("system"));
        n.strategy = j.at("strategy").get<std::string>() == "onemult" ? LeafStrategy::OneMult
                                                                      : LeafStrategy::ModularRank;
        if (n.strategy == LeafStrategy::ModularRank) {
            n.seed = j.at("seed").get<std::uint64_t>();
            n.trials = j.at("trials").get<int>();
        }
        return CutCertificate{n};
    }
    if (kind == "equiv") {
        EquivLeaf n;
        n.system = system_from_json(j.at("system"));
        n.translation = {j.at("translation").at(0).get<std::int64_t>(),
                         j.at("translation").at(1).get<std::int64_t>()};
        n.inner = make_cert(node_from_json(j.at("inner")));
        return CutCertificate{n};
    }
    if (kind == "cut") {
        auto system = system_from_json(j.at("system"));
        AffineCut cut(parse_rational(j.at("cut").at(0).get<std::string>()),
                      parse_rational(j.at("cut").at(1).get<std::string>()),
                      parse_rational(j.at("cut").at(2).get<std::string>()));
        CutNode n{std::move(system), cut, j.at("split").get<std::vector<std::size_t>>(),
                  make_cert(node_from_json(j.at("sub2"))),
                  make_cert(node_from_json(j.at("sub1")))};
        return CutCertificate{std::move(n)};
    }
    if (kind == "lemma") {
        LemmaLeaf n;
        n.name = j.at("name").get<std::string>();
        n.params = j.at("params").get<std::vector<std::int64_t>>();
        return CutCertificate{n};
    }
    if (kind == "empty") {
        EmptyLeaf n;
        n.system = {parse_diagram(j.at("diagram").get<std::string>()), MultiplicityList{}};
        return CutCertificate{n};
    }
    throw Error(ErrorCode::Parse, "unknown certificate node kind \"" + kind + "\"");
}

} // namespace

std::string serialize_certificate(const CutCertificate& cert) {
    json j;
    j["version"] = kCertificateFormatVersion;
    j["root"] = node_to_json(cert);
    return j.dump(2);
}

CutCertificate parse_certificate(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Parse, std::string("certificate parse error: ") + e.what());
    }
    try {
        if (!j.contains("version"))
            throw Error(ErrorCode::Parse, "certificate missing \"version\" field");
        if (j.at("version").get<int>() != kCertificateFormatVersion)
            throw Error(ErrorCode::Parse, "unsupported certificate format version");
        return node_from_json(j.at("root"));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("malformed certificate: ") + e.what());
    }
}

bool operator==(const CutCertificate& a, const CutCertificate& b) {
    return node_to_json(a) == node_to_json(b);
}

} // namespace fatpoints
