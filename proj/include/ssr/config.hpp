#pragma once

#include <filesystem>
#include <map>
#include <set>
#include <string>

namespace ssr {

/// Flat `key = value` text configuration. Blank lines and `#` comments are
/// ignored; later keys override earlier ones.
class KeyValues {
 public:
  static KeyValues parse(const std::string& text);
  static KeyValues load(const std::filesystem::path& path);

  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::string get_string(const std::string& key, const std::string& fallback) const;
  int get_int(const std::string& key, int fallback) const;
  double get_double(const std::string& key, double fallback) const;
  std::string require(const std::string& key) const;

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  void set(const std::string& key, int value) { values_[key] = std::to_string(value); }
  void set(const std::string& key, double value);

  /// Throws ConfigError naming the first key outside `known`.
  void reject_unknown(const std::set<std::string>& known) const;

  std::string to_string() const;
  const std::map<std::string, std::string>& entries() const { return values_; }

 private:
  std::map<std::string, std::string> values_;
};

/// Shortest decimal text that round-trips the double exactly.
std::string format_double(double v);

}  // namespace ssr
