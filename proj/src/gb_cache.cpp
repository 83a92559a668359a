#include "hopfgen/gb_cache.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <atomic>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <unistd.h>

namespace hopfgen {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void atomic_write(const fs::path& target, const std::string& content) {
  fs::path tmp = target;
  static std::atomic<unsigned long> serial{0};
  tmp += ".tmp" + std::to_string(::getpid()) + "." + std::to_string(serial++) + "." +
         std::to_string(std::hash<std::string>{}(content));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw std::runtime_error("cannot move " + tmp.string() + " to " + target.string() + ": " + ec.message());
}

json poly_to_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& t : p.terms) terms.push_back(json::array({t.mono.exp, to_string(t.coef)}));
  return terms;
}

Polynomial poly_from_json(const PolynomialRing& ring, const json& j) {
  std::vector<Term> terms;
  for (const auto& t : j) {
    Monomial m{t.at(0).get<std::vector<std::uint16_t>>()};
    if (m.exp.size() != ring.nvars()) throw std::runtime_error("cache entry has wrong variable count");
    terms.push_back({std::move(m), parse_scalar(t.at(1).get<std::string>())});
  }
  return ring.from_terms(std::move(terms));
}

}  // namespace

GroebnerCache::GroebnerCache(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw std::runtime_error("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

fs::path GroebnerCache::default_dir(const fs::path& fallback) {
  if (const char* env = std::getenv("HOPFGEN_CACHE"); env && *env) return env;
  return fallback;
}

std::string GroebnerCache::key(const PolynomialRing& ring, const std::vector<Polynomial>& generators) {
  std::vector<std::string> texts;
  for (const auto& g : generators) texts.push_back(ring.format(ring.make_monic(g)));
  std::sort(texts.begin(), texts.end());
  texts.erase(std::unique(texts.begin(), texts.end()), texts.end());
  std::ostringstream os;
  os << ring.order().describe() << "|";
  for (const auto& n : ring.names()) os << n << ",";
  os << "|";
  for (const auto& t : texts) os << t << ";";
  std::ostringstream hex;
  hex << std::hex << std::setw(16) << std::setfill('0') << fnv1a(os.str());
  return hex.str();
}

std::optional<GroebnerBasis> GroebnerCache::load(const RingPtr& ring, const std::string& key) {
  fs::path file = dir_ / (key + ".json");
  std::ifstream in(file);
  if (!in) {
    bump(false);
    return std::nullopt;
  }
  try {
    json j = json::parse(in);
    if (j.at("vars").get<std::vector<std::string>>() != ring->names() || j.at("order").get<std::string>() != ring->order().describe()) {
      bump(false);
      return std::nullopt;
    }
    std::vector<Polynomial> polys;
    for (const auto& p : j.at("basis")) polys.push_back(poly_from_json(*ring, p));
    bump(true);
    return GroebnerBasis(ring, std::move(polys), true);
  } catch (const std::exception&) {
    bump(false);
    return std::nullopt;
  }
}

void GroebnerCache::store(const std::string& key, const GroebnerBasis& gb, std::size_t generator_count) {
  if (!gb.complete()) return;
  json j;
  j["key"] = key;
  j["vars"] = gb.ring().names();
  j["order"] = gb.ring().order().describe();
  j["generators"] = generator_count;
  unsigned max_degree = 0;
  json basis = json::array();
  for (const auto& p : gb.polys()) {
    basis.push_back(poly_to_json(p));
    max_degree = std::max(max_degree, gb.ring().total_degree(p));
  }
  j["basis"] = std::move(basis);
  j["basis_size"] = gb.polys().size();
  j["max_degree"] = max_degree;
  atomic_write(dir_ / (key + ".json"), j.dump());
}

std::vector<GroebnerCache::Entry> GroebnerCache::entries() const {
  std::vector<Entry> out;
  std::error_code ec;
  for (const auto& de : fs::directory_iterator(dir_, ec)) {
    if (de.path().extension() != ".json" || de.path().filename() == "stats.json") continue;
    std::ifstream in(de.path());
    try {
      json j = json::parse(in);
      out.push_back({j.at("key").get<std::string>(), j.at("basis_size").get<std::size_t>(),
                     j.at("vars").size(), j.at("max_degree").get<unsigned>()});
    } catch (const std::exception&) {
      continue;
    }
  }
  if (ec) throw std::runtime_error("cannot list cache directory " + dir_.string() + ": " + ec.message());
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
  return out;
}

GroebnerCache::Counters GroebnerCache::counters() const {
  Counters c;
  std::ifstream in(dir_ / "stats.json");
  if (!in) return c;
  try {
    json j = json::parse(in);
    c.hits = j.value("hits", std::size_t{0});
    c.misses = j.value("misses", std::size_t{0});
  } catch (const std::exception&) {
  }
  return c;
}

void GroebnerCache::bump(bool hit) {
  // counters are read-modify-write; other processes can still interleave
  static std::mutex m;
  std::lock_guard lock(m);
  Counters c = counters();
  (hit ? c.hits : c.misses)++;
  json j{{"hits", c.hits}, {"misses", c.misses}};
  atomic_write(dir_ / "stats.json", j.dump());
}

void GroebnerCache::clear() {
  std::error_code ec;
  for (const auto& de : fs::directory_iterator(dir_, ec)) {
    fs::remove_all(de.path(), ec);
    if (ec) throw std::runtime_error("cannot remove " + de.path().string() + ": " + ec.message());
  }
  if (ec) throw std::runtime_error("cannot list cache directory " + dir_.string() + ": " + ec.message());
}

GroebnerBasis cached_groebner(RingPtr ring, const std::vector<Polynomial>& generators, const GroebnerBudget& budget,
                              GroebnerCache* cache, GroebnerStats* stats) {
  std::string key;
  if (cache) {
    key = GroebnerCache::key(*ring, generators);
    if (auto hit = cache->load(ring, key)) {
      if (stats) {
        *stats = GroebnerStats{};
        stats->from_cache = true;
        stats->basis_size = hit->polys().size();
        for (const auto& p : hit->polys()) stats->max_degree = std::max(stats->max_degree, ring->total_degree(p));
      }
      return *hit;
    }
  }
  auto gb = buchberger(ring, generators, budget, stats);
  if (cache) cache->store(key, gb, generators.size());
  return gb;
}

}  // namespace hopfgen
