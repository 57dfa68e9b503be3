#include "cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "capi.hpp"

namespace burrcli {

using nlohmann::json;

namespace {

bool decided(burr_outcome o) { return o != BURR_RESOURCE_EXCEEDED; }

burr_outcome parse_outcome(const std::string& s) {
  for (auto o : {BURR_FEASIBLE, BURR_INFEASIBLE, BURR_RESOURCE_EXCEEDED})
    if (s == burr_outcome_name(o)) return o;
  throw CliError(kExitUsage, "cache: unknown outcome '" + s + "'");
}

TripleKey parse_key(const std::string& s) {
  TripleKey k;
  char c1 = 0, c2 = 0;
  std::istringstream in(s);
  if (!(in >> k.b1 >> c1 >> k.b2 >> c2 >> k.b3) || c1 != ':' || c2 != ':' || !in.eof())
    throw CliError(kExitUsage, "cache: malformed key '" + s + "'");
  return k;
}

class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path)
      : fd_(::open(path.c_str(), O_RDWR | O_CREAT, 0644)) {
    if (fd_ < 0) throw CliError(kExitUsage, "cannot open lock file " + path.string());
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      throw CliError(kExitUsage, "cannot lock " + path.string());
    }
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

ResultCache read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return {};
  std::stringstream buf;
  buf << in.rdbuf();
  return ResultCache::from_json(buf.str());
}

}  // namespace

std::string key_string(const TripleKey& k) {
  return std::to_string(k.b1) + ":" + std::to_string(k.b2) + ":" + std::to_string(k.b3);
}

std::optional<CacheEntry> ResultCache::find(const TripleKey& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool ResultCache::put(const TripleKey& key, const CacheEntry& entry) {
  auto [it, inserted] = entries_.try_emplace(key, entry);
  if (inserted) return true;
  if (decided(it->second.outcome)) return false;
  it->second = entry;
  return true;
}

std::string ResultCache::to_json() const {
  json entries = json::object();
  for (const auto& [k, e] : entries_)
    entries[key_string(k)] = {{"outcome", burr_outcome_name(e.outcome)}, {"nodes", e.nodes}};
  json doc = {{"schema_version", kSchemaVersion}, {"entries", entries}};
  return doc.dump(1) + "\n";
}

ResultCache ResultCache::from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw CliError(kExitUsage, std::string("cache: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("schema_version") ||
      doc["schema_version"] != kSchemaVersion)
    throw CliError(kExitUsage, "cache: unsupported schema version");
  ResultCache c;
  try {
    for (const auto& [k, v] : doc.at("entries").items())
      c.put(parse_key(k), {parse_outcome(v.at("outcome").get<std::string>()),
                           v.at("nodes").get<std::uint64_t>()});
  } catch (const json::exception& e) {
    throw CliError(kExitUsage, std::string("cache: malformed entry: ") + e.what());
  }
  return c;
}

ResultCache ResultCache::load(const std::filesystem::path& path) {
  FileLock lock(path.string() + ".lock");
  return read_file(path);
}

void ResultCache::save(const std::filesystem::path& path) const {
  FileLock lock(path.string() + ".lock");
  ResultCache merged = read_file(path);
  for (const auto& [k, e] : entries_) merged.put(k, e);

  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CliError(kExitUsage, "cannot write cache " + tmp.string());
    out << merged.to_json();
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace burrcli
