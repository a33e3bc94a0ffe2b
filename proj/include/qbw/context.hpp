#pragma once

// Shared per-algebra state: memoised irreps, Levi irreps, CG decompositions and
// derived data, optionally backed by a content-addressed store on disk.

#include <nlohmann/json.hpp>

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "qbw/tensor.hpp"
#include "qbw/uqrep.hpp"

namespace qbw {

struct CacheIntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data);

/// Files live at <root>/<kind>/<sha256 of the canonical key>.json and carry the
/// key and a digest of the payload. Writes go to a temporary file then rename.
class Store {
public:
    static constexpr const char* kSchema = "qbw-cache/1";

    explicit Store(std::filesystem::path root);
    const std::filesystem::path& root() const noexcept { return root_; }

    std::filesystem::path path_for(const std::string& kind, const nlohmann::json& key) const;
    /// nullopt when absent; CacheIntegrityError when present but damaged.
    std::optional<nlohmann::json> load(const std::string& kind, const nlohmann::json& key) const;
    void save(const std::string& kind, const nlohmann::json& key, const nlohmann::json& payload) const;

private:
    std::filesystem::path root_;
};

class Algebra {
public:
    explicit Algebra(const CartanData& cd, std::shared_ptr<const Store> store = nullptr);
    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    const CartanData& cd() const noexcept { return *cd_; }
    const Store* store() const noexcept { return store_.get(); }

    IrrepPtr irrep(const Weight& lambda) const;
    IrrepPtr levi(const Weight& mu, const Subset& theta) const;
    CGPtr cg(const Weight& lambda, const Weight& mu) const;
    IrrepSource source() const;

    /// Memoises arbitrary derived data under a string key.
    template <class T>
    std::shared_ptr<const T> memo(const std::string& key, const std::function<std::shared_ptr<const T>()>& make) const {
        {
            std::shared_lock lock(mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return std::static_pointer_cast<const T>(it->second);
        }
        auto value = make();
        std::unique_lock lock(mutex_);
        auto [it, inserted] = memo_.try_emplace(key, value);
        return std::static_pointer_cast<const T>(it->second);
    }

    struct Stats {
        std::size_t built = 0, loaded = 0;
    };
    Stats stats() const;

private:
    const CartanData* cd_;
    std::shared_ptr<const Store> store_;
    mutable std::shared_mutex mutex_;
    mutable std::map<Weight, IrrepPtr> irreps_;
    mutable std::map<std::pair<Weight, Subset>, IrrepPtr> levis_;
    mutable std::map<std::pair<Weight, Weight>, CGPtr> cgs_;
    mutable std::map<std::string, std::shared_ptr<const void>> memo_;
    mutable Stats stats_;

    nlohmann::json key(const char* kind, const nlohmann::json& extra) const;
};

}  // namespace qbw
