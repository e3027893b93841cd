#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "adams/numeric.hpp"

namespace adams::oeis {

struct OeisRecord {
    std::string id;               // "A003319"
    long offset = 0;              // index of terms[0]
    std::vector<BigInt> terms;
    std::string fetched_at;       // ISO-8601 UTC, from the cache metadata
    bool offline = true;          // served from the cache without touching the network
};

struct MatchReport {
    std::string id;
    bool match = false;
    std::size_t compared = 0;
    long first_index = 0;                  // OEIS index paired with computed[0]
    std::optional<long> mismatch_index;    // first disagreeing OEIS index
    std::optional<BigInt> expected;        // OEIS value there
    std::optional<BigInt> actual;          // computed value there
};

// "A" followed by six digits; throws InvalidArgument otherwise.
std::string normalize_id(const std::string& id);

// ADAMS_SPECTRA_CACHE, else $XDG_CACHE_HOME/adams-spectra, else ~/.cache/adams-spectra.
std::filesystem::path default_cache_dir();

// "n a(n)" lines; '#' comments and blank lines are skipped.
std::vector<std::pair<long, BigInt>> parse_bfile(const std::string& text);

bool network_available() noexcept;

class Client {
public:
    explicit Client(std::filesystem::path cache_dir, bool allow_network = false);

    const std::filesystem::path& cache_dir() const noexcept { return dir_; }

    // Cache first. Without a cached copy: CacheMiss when offline,
    // NetworkError when the fetch fails.
    OeisRecord lookup(const std::string& id) const;

    // Writes the b-file verbatim plus metadata, under an advisory lock.
    void store(const std::string& id, const std::string& bfile, const std::string& fetched_at) const;

    std::filesystem::path bfile_path(const std::string& id) const;
    std::filesystem::path meta_path(const std::string& id) const;

private:
    std::string fetch(const std::string& id) const;

    std::filesystem::path dir_;
    bool allow_network_;
};

// Prefix match: computed[i] is compared with a(first_index + i). When
// first_index is absent it defaults to the record's offset.
MatchReport check(const OeisRecord& record, const std::vector<BigInt>& computed,
                  std::optional<long> first_index = std::nullopt);

} // namespace adams::oeis
