// Copyright 2026 The gdd6 Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// On-disk catalog of verified designs: one directory per (configuration, n)
// holding `l1-l2.gdd` files, plus an advisory manifest.json. Files are
// authoritative and re-verified on every read.

#pragma once

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gdd6/design.hpp"
#include "gdd6/error.hpp"
#include "gdd6/feasibility.hpp"
#include "gdd6/io.hpp"

namespace gdd6 {

struct CatalogKey {
  ConfigClass cfg;
  int n = 0;
  IndexPair idx;

  bool operator==(const CatalogKey&) const = default;
};

struct CatalogEntry {
  CatalogKey key;
  std::filesystem::path path;  // relative to the catalog root
  std::string recipe;          // recipe name, "imported" or "searched"
  std::string verified_at;
};

enum class EntryStatus { Valid, Corrupt };

inline std::string_view to_string(EntryStatus s) { return s == EntryStatus::Valid ? "valid" : "corrupt"; }

struct CatalogRead {
  CatalogKey key;
  std::filesystem::path path;
  EntryStatus status = EntryStatus::Corrupt;
  std::string problem;  // empty when valid
  std::optional<DesignFile> file;
};

namespace detail {

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::optional<ConfigClass> config_from_dir_tag(const std::string& tag) {
  if (tag == "c33") return kC33;
  if (tag == "c24") return kC24;
  if (tag == "c15") return kC15;
  return std::nullopt;
}

// Parses "<l1>-<l2>" strictly.
inline std::optional<IndexPair> index_from_stem(const std::string& stem) {
  const auto dash = stem.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == stem.size()) return std::nullopt;
  const auto digits = [](const std::string& s) { return std::all_of(s.begin(), s.end(), ::isdigit) && s.size() < 9; };
  const std::string a = stem.substr(0, dash), b = stem.substr(dash + 1);
  if (!digits(a) || !digits(b)) return std::nullopt;
  return IndexPair{std::stoi(a), std::stoi(b)};
}

}  // namespace detail

inline std::filesystem::path catalog_dir(const ConfigClass& cfg, int n) {
  return "c" + std::to_string(cfg.s()) + std::to_string(cfg.t()) + "-n" + std::to_string(n);
}

inline std::filesystem::path catalog_file(const CatalogKey& key) {
  return catalog_dir(key.cfg, key.n) /
         (std::to_string(key.idx.lambda1) + "-" + std::to_string(key.idx.lambda2) + ".gdd");
}

class Catalog {
 public:
  explicit Catalog(std::filesystem::path root) : root_(std::move(root)) {}

  const std::filesystem::path& root() const { return root_; }

  // Verifies the design against the claim (which must name a configuration)
  // before writing; throws MalformedDesign when it does not verify.
  CatalogEntry store(const GroupedDesign& design, const GddClaim& claim, const std::string& recipe) {
    if (!claim.config) throw Error(ErrorKind::MalformedDesign, "catalog entries need a configuration");
    const auto cfg = config_class_for(*claim.config);
    if (!cfg) throw Error(ErrorKind::MalformedDesign, "unsupported configuration " + to_string(*claim.config));
    const auto report = verify_gdd(design, claim);
    if (!report.pass)
      throw Error(ErrorKind::MalformedDesign, "refusing to store an unverified design: " + report.violations.front().witness);
    CatalogEntry entry{{*cfg, claim.n, {claim.lambda1, claim.lambda2}}, {}, recipe, detail::utc_timestamp()};
    entry.path = catalog_file(entry.key);
    std::error_code ec;
    std::filesystem::create_directories(root_ / entry.path.parent_path(), ec);
    if (ec) throw Error(ErrorKind::Io, "cannot create " + (root_ / entry.path.parent_path()).string());
    write_design_file(root_ / entry.path, design, claim);
    auto manifest = read_manifest();
    manifest.erase(std::remove_if(manifest.begin(), manifest.end(),
                                  [&](const CatalogEntry& e) { return e.key == entry.key; }),
                   manifest.end());
    manifest.push_back(entry);
    write_manifest(manifest);
    return entry;
  }

  // Re-verifies the stored file; nullopt when no file exists for the key.
  std::optional<CatalogRead> load(const CatalogKey& key) const {
    const auto rel = catalog_file(key);
    if (!std::filesystem::exists(root_ / rel)) return std::nullopt;
    return check(key, rel);
  }

  // Walks the directory tree (not the manifest) and re-verifies every file.
  std::vector<CatalogRead> scan() const {
    std::vector<CatalogRead> out;
    if (!std::filesystem::is_directory(root_)) return out;
    std::vector<std::filesystem::path> files;
    for (const auto& dir : std::filesystem::directory_iterator(root_)) {
      if (!dir.is_directory()) continue;
      for (const auto& f : std::filesystem::directory_iterator(dir.path()))
        if (f.path().extension() == ".gdd") files.push_back(std::filesystem::relative(f.path(), root_));
    }
    std::sort(files.begin(), files.end());
    for (const auto& rel : files) {
      const auto key = key_from_path(rel);
      if (!key) {
        CatalogRead bad;
        bad.path = rel;
        bad.problem = "file name does not follow c<s><t>-n<n>/<l1>-<l2>.gdd";
        out.push_back(std::move(bad));
        continue;
      }
      out.push_back(check(*key, rel));
    }
    return out;
  }

  std::vector<CatalogEntry> read_manifest() const {
    std::vector<CatalogEntry> out;
    const auto path = root_ / "manifest.json";
    if (!std::filesystem::exists(path)) return out;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(read_text_file(path));
      for (const auto& e : j.at("entries")) {
        const auto cfg = detail::config_from_dir_tag("c" + e.at("config").get<std::string>());
        if (!cfg) throw Error(ErrorKind::Parse, "manifest: unknown configuration");
        out.push_back({{*cfg, e.at("n").get<int>(), {e.at("lambda1").get<int>(), e.at("lambda2").get<int>()}},
                       e.at("path").get<std::string>(),
                       e.at("recipe").get<std::string>(),
                       e.at("verified_at").get<std::string>()});
      }
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorKind::Parse, "manifest: " + std::string(ex.what()));
    }
    return out;
  }

 private:
  static std::optional<CatalogKey> key_from_path(const std::filesystem::path& rel) {
    const std::string dir = rel.parent_path().string();
    const auto n_pos = dir.find("-n");
    if (n_pos == std::string::npos) return std::nullopt;
    const auto cfg = detail::config_from_dir_tag(dir.substr(0, n_pos));
    const std::string n_text = dir.substr(n_pos + 2);
    if (!cfg || n_text.empty() || n_text.size() > 6 || !std::all_of(n_text.begin(), n_text.end(), ::isdigit))
      return std::nullopt;
    const auto idx = detail::index_from_stem(rel.stem().string());
    if (!idx) return std::nullopt;
    return CatalogKey{*cfg, std::stoi(n_text), *idx};
  }

  CatalogRead check(const CatalogKey& key, const std::filesystem::path& rel) const {
    CatalogRead out;
    out.key = key;
    out.path = rel;
    try {
      auto file = read_design_file(root_ / rel);
      const GddClaim expected{key.n, key.idx.lambda1, key.idx.lambda2, key.cfg.configuration()};
      if (file.claim.n != key.n || file.claim.lambda1 != key.idx.lambda1 || file.claim.lambda2 != key.idx.lambda2) {
        out.problem = "header does not match the catalog key";
      } else {
        const auto report = verify_gdd(file.design, expected);
        if (!report.pass) out.problem = std::string(to_string(report.violations.front().kind)) + ": " +
                                        report.violations.front().witness;
      }
      out.file = std::move(file);
    } catch (const Error& e) {
      out.problem = e.what();
    }
    out.status = out.problem.empty() ? EntryStatus::Valid : EntryStatus::Corrupt;
    return out;
  }

  void write_manifest(const std::vector<CatalogEntry>& entries) const {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& e : entries)
      list.push_back({{"config", std::to_string(e.key.cfg.s()) + std::to_string(e.key.cfg.t())},
                      {"n", e.key.n},
                      {"lambda1", e.key.idx.lambda1},
                      {"lambda2", e.key.idx.lambda2},
                      {"path", e.path.generic_string()},
                      {"recipe", e.recipe},
                      {"verified_at", e.verified_at}});
    write_text_file(root_ / "manifest.json", nlohmann::json{{"entries", list}}.dump(2) + "\n");
  }

  std::filesystem::path root_;
};

}  // namespace gdd6
