#pragma once

#include "hopfgen/groebner.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hopfgen {

// On-disk store of reduced Gröbner bases keyed by a content hash of
// (variable names, monomial order, generators). Only complete bases are stored.
// Writes go to a temporary file that is then renamed into place.
class GroebnerCache {
 public:
  explicit GroebnerCache(std::filesystem::path dir);

  // HOPFGEN_CACHE if set, else the given fallback.
  static std::filesystem::path default_dir(const std::filesystem::path& fallback);

  const std::filesystem::path& dir() const { return dir_; }

  static std::string key(const PolynomialRing& ring, const std::vector<Polynomial>& generators);

  std::optional<GroebnerBasis> load(const RingPtr& ring, const std::string& key);
  void store(const std::string& key, const GroebnerBasis& gb, std::size_t generator_count);

  struct Entry {
    std::string key;
    std::size_t basis_size = 0;
    std::size_t nvars = 0;
    unsigned max_degree = 0;
  };
  std::vector<Entry> entries() const;

  struct Counters {
    std::size_t hits = 0;
    std::size_t misses = 0;
  };
  Counters counters() const;
  void clear();

 private:
  void bump(bool hit);

  std::filesystem::path dir_;
};

// buchberger() behind the cache: a hit skips the computation entirely and sets
// stats->from_cache.
GroebnerBasis cached_groebner(RingPtr ring, const std::vector<Polynomial>& generators, const GroebnerBudget& budget,
                              GroebnerCache* cache, GroebnerStats* stats = nullptr);

}  // namespace hopfgen
