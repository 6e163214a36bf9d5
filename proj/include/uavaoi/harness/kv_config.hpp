#pragma once

// Reader/writer for the TOML subset used by experiment configs:
//   # comment
//   [table] / [table.sub]
//   key = 42 | 3.5e-4 | true | "text" | [1, 2, "a"]   (arrays may span lines)
// Keys are stored flattened with their table prefix ("env.num_devices").

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "uavaoi/env/config.hpp"

namespace uavaoi::harness {

struct KvValue {
  enum class Type { boolean, integer, real, string, array };

  Type type = Type::integer;
  bool boolean = false;
  std::int64_t integer = 0;
  double real = 0.0;
  std::string text;
  std::vector<KvValue> items;

  static KvValue of(bool v);
  static KvValue of(std::int64_t v);
  static KvValue of(double v);
  static KvValue of(std::string v);

  bool operator==(const KvValue&) const = default;
};

class KvDocument {
 public:
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  void set(const std::string& key, KvValue value) { values_[key] = std::move(value); }
  const KvValue& at(const std::string& key) const;
  const std::map<std::string, KvValue>& values() const { return values_; }

  // Typed accessors; throw ConfigError naming the key on absence or type mismatch.
  bool get_bool(const std::string& key) const;
  std::int64_t get_int(const std::string& key) const;
  double get_real(const std::string& key) const;  // integers are widened
  std::string get_string(const std::string& key) const;
  std::vector<std::int64_t> get_int_array(const std::string& key) const;
  std::vector<std::string> get_string_array(const std::string& key) const;

  // Keys under `table.` that are not in `known`.
  std::vector<std::string> unknown_keys(const std::string& table, const std::vector<std::string>& known) const;

  // Serializes grouped by table; values round-trip exactly.
  std::string to_text() const;

 private:
  std::map<std::string, KvValue> values_;
};

KvDocument parse_kv(std::string_view text, const std::string& source = "<config>");
KvDocument load_kv_file(const std::filesystem::path& path);

// Parses one value literal, e.g. "5", "3e-4", "\"dir\"", "[1, 2]".
KvValue parse_kv_value(std::string_view literal, const std::string& key = "<value>");

// Applies "dotted.key=value". Keys that already hold a string accept an
// unquoted value.
void apply_override(KvDocument& doc, std::string_view assignment);

std::string format_real(double v);

// EnvConfig <-> [table] section. Every field except `seed` and
// `failed_upload_drains` is required when reading.
void write_env_config(KvDocument& doc, const env::EnvConfig& config, const std::string& table = "env");
env::EnvConfig read_env_config(const KvDocument& doc, const std::string& table = "env");

}  // namespace uavaoi::harness
