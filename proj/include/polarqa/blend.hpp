#pragma once

// Blended-training plans: every epoch carries all gold data; the noisy
// portion shrinks geometrically, epoch e keeping round(N·α^(e−1)) items per
// noisy dataset. Subsets are nested (one shuffle per dataset, take-first-k)
// so later epochs train on a stable core.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "polarqa/error.hpp"
#include "polarqa/rng.hpp"
#include "polarqa/rounding.hpp"

namespace polarqa {

struct DatasetSpec {
    std::string id;
    std::size_t size = 0;
};

struct ItemRef {
    std::string dataset;
    std::size_t index = 0;
    bool operator==(const ItemRef&) const = default;
    bool operator<(const ItemRef& o) const {
        return dataset != o.dataset ? dataset < o.dataset : index < o.index;
    }
};

struct EpochManifest {
    std::size_t epoch = 0;  // 1-based
    std::vector<ItemRef> item_refs;
};

struct BlendPlan {
    double alpha = 1.0;
    std::size_t epochs = 1;
    std::vector<DatasetSpec> gold_sources;
    std::vector<DatasetSpec> noisy_sources;
    std::uint64_t seed = 0;
    std::vector<EpochManifest> manifests;
};

// α^(e-1) by repeated multiplication: exact for the binary-representable
// ratios the tests pin (0, 0.25, 0.5, 1).
inline double decay_power(double alpha, std::size_t epoch_index) {
    double p = 1.0;
    for (std::size_t i = 0; i < epoch_index; ++i) p *= alpha;
    return p;
}

inline std::size_t noisy_count_at(std::size_t n, double alpha, std::size_t epoch) {
    return static_cast<std::size_t>(
        round_half_even(static_cast<double>(n) * decay_power(alpha, epoch - 1)));
}

inline BlendPlan make_blend_plan(std::vector<DatasetSpec> gold, std::vector<DatasetSpec> noisy,
                                 double alpha, std::size_t epochs, std::uint64_t seed) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw DataError("blend alpha must be in [0,1], got " + std::to_string(alpha));
    if (epochs == 0) throw DataError("blend plan needs at least one epoch");

    BlendPlan plan;
    plan.alpha = alpha;
    plan.epochs = epochs;
    plan.gold_sources = std::move(gold);
    plan.noisy_sources = std::move(noisy);
    plan.seed = seed;

    // one permutation per noisy dataset, keyed by (seed, id) so adding a
    // dataset never perturbs another's subset
    std::vector<std::vector<std::size_t>> noisy_perms;
    for (auto& ds : plan.noisy_sources) {
        std::vector<std::size_t> perm(ds.size);
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        Rng rng(derive_seed(seed, ds.id));
        rng.shuffle(perm);
        noisy_perms.push_back(std::move(perm));
    }

    for (std::size_t e = 1; e <= epochs; ++e) {
        EpochManifest m;
        m.epoch = e;
        for (auto& ds : plan.gold_sources)
            for (std::size_t i = 0; i < ds.size; ++i) m.item_refs.push_back({ds.id, i});
        for (std::size_t d = 0; d < plan.noisy_sources.size(); ++d) {
            const auto& ds = plan.noisy_sources[d];
            std::size_t k = noisy_count_at(ds.size, alpha, e);
            for (std::size_t i = 0; i < k; ++i) m.item_refs.push_back({ds.id, noisy_perms[d][i]});
        }
        plan.manifests.push_back(std::move(m));
    }
    return plan;
}

inline std::string manifest_file_name(std::size_t epoch) {
    return "epoch-" + std::to_string(epoch);
}

inline void emit_manifests(const BlendPlan& plan, const std::string& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create directory " + out_dir + ": " + ec.message());
    for (auto& m : plan.manifests) {
        const std::string path =
            (std::filesystem::path(out_dir) / manifest_file_name(m.epoch)).string();
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write: " + path);
        for (auto& ref : m.item_refs) out << ref.dataset << "\t" << ref.index << "\n";
        out.flush();
        if (!out) throw IoError("write failed: " + path);
    }
}

// Reads a manifest back (tests and external tools).
inline std::vector<ItemRef> read_manifest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open manifest: " + path);
    std::vector<ItemRef> refs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw DataError(path + ":" + std::to_string(line_no) + ": expected dataset<TAB>index");
        refs.push_back({line.substr(0, tab), std::stoull(line.substr(tab + 1))});
    }
    return refs;
}

}  // namespace polarqa
