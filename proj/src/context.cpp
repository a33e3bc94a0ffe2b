#include "qbw/context.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace qbw {

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int k = 0; k < len; ++k) {
        out += hex[md[k] >> 4];
        out += hex[md[k] & 15];
    }
    return out;
}

Store::Store(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path Store::path_for(const std::string& kind, const nlohmann::json& key) const {
    return root_ / kind / (sha256_hex(key.dump()) + ".json");
}

std::optional<nlohmann::json> Store::load(const std::string& kind, const nlohmann::json& key) const {
    auto path = path_for(kind, key);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    nlohmann::json rec;
    try {
        rec = nlohmann::json::parse(ss.str());
    } catch (const nlohmann::json::exception&) {
        throw CacheIntegrityError("cache file is not valid JSON: " + path.string());
    }
    if (!rec.is_object() || rec.value("schema", "") != kSchema || !rec.contains("key") || !rec.contains("payload") ||
        !rec.contains("payload_sha256"))
        throw CacheIntegrityError("cache file has wrong layout: " + path.string());
    if (rec["key"] != key) throw CacheIntegrityError("cache file key mismatch: " + path.string());
    if (rec["payload_sha256"] != sha256_hex(rec["payload"].dump()))
        throw CacheIntegrityError("cache payload digest mismatch: " + path.string());
    return rec["payload"];
}

void Store::save(const std::string& kind, const nlohmann::json& key, const nlohmann::json& payload) const {
    auto path = path_for(kind, key);
    std::filesystem::create_directories(path.parent_path());
    nlohmann::json rec{{"schema", kSchema},
                       {"kind", kind},
                       {"key", key},
                       {"payload_sha256", sha256_hex(payload.dump())},
                       {"payload", payload}};
    static std::atomic<unsigned long> counter{0};
    std::ostringstream tmpname;
    tmpname << path.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
            << counter++;
    auto tmp = path.parent_path() / tmpname.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        out << rec.dump() << '\n';
        if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

Algebra::Algebra(const CartanData& cd, std::shared_ptr<const Store> store) : cd_(&cd), store_(std::move(store)) {}

nlohmann::json Algebra::key(const char* kind, const nlohmann::json& extra) const {
    nlohmann::json k{{"kind", kind}, {"type", cd_->name()}, {"rank", cd_->rank()}};
    for (auto it = extra.begin(); it != extra.end(); ++it) k[it.key()] = it.value();
    return k;
}

Algebra::Stats Algebra::stats() const {
    std::shared_lock lock(mutex_);
    return stats_;
}

IrrepPtr Algebra::irrep(const Weight& lambda) const {
    {
        std::shared_lock lock(mutex_);
        auto it = irreps_.find(lambda);
        if (it != irreps_.end()) return it->second;
    }
    IrrepPtr m;
    bool loaded = false;
    auto k = key("irrep", {{"lambda", lambda}});
    if (store_) {
        if (auto p = store_->load("irrep", k)) {
            m = irrep_from_json(*p);
            loaded = true;
        }
    }
    if (!m) {
        m = build_irrep(*cd_, lambda);
        if (store_) store_->save("irrep", k, irrep_to_json(*m));
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = irreps_.try_emplace(lambda, m);
    if (inserted) ++(loaded ? stats_.loaded : stats_.built);
    return it->second;
}

IrrepPtr Algebra::levi(const Weight& mu, const Subset& theta) const {
    if (static_cast<int>(theta.size()) == cd_->rank()) return irrep(mu);
    auto idx = std::make_pair(mu, theta);
    {
        std::shared_lock lock(mutex_);
        auto it = levis_.find(idx);
        if (it != levis_.end()) return it->second;
    }
    IrrepPtr m;
    bool loaded = false;
    auto k = key("levi", {{"mu", mu}, {"theta", theta}});
    if (store_) {
        if (auto p = store_->load("levi", k)) {
            m = irrep_from_json(*p);
            loaded = true;
        }
    }
    if (!m) {
        m = build_levi_irrep(*cd_, mu, theta);
        if (store_) store_->save("levi", k, irrep_to_json(*m));
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = levis_.try_emplace(idx, m);
    if (inserted) ++(loaded ? stats_.loaded : stats_.built);
    return it->second;
}

IrrepSource Algebra::source() const {
    return [this](const Weight& w) { return irrep(w); };
}

CGPtr Algebra::cg(const Weight& lambda, const Weight& mu) const {
    auto idx = std::make_pair(lambda, mu);
    {
        std::shared_lock lock(mutex_);
        auto it = cgs_.find(idx);
        if (it != cgs_.end()) return it->second;
    }
    CGPtr c;
    bool loaded = false;
    auto k = key("cg", {{"lambda", lambda}, {"mu", mu}});
    if (store_) {
        if (auto p = store_->load("cg", k)) {
            c = cg_from_json(*p, source());
            loaded = true;
        }
    }
    if (!c) {
        c = decompose(irrep(lambda), irrep(mu), source());
        if (store_) store_->save("cg", k, cg_to_json(*c));
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cgs_.try_emplace(idx, c);
    if (inserted) ++(loaded ? stats_.loaded : stats_.built);
    return it->second;
}

}  // namespace qbw
