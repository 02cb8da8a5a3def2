#pragma once

#include <map>
#include <string>
#include <vector>

#include "hmv/common.hpp"

namespace hmv {

// Typed key-value bag for catalog constructors (filled from scene files or
// directly by tests).
struct ParamMap {
  std::map<std::string, double> num;
  std::map<std::string, std::string> str;
  std::map<std::string, std::vector<double>> numlist;
  std::map<std::string, std::vector<std::string>> strlist;

  double get_num(const std::string& key) const {
    auto it = num.find(key);
    if (it == num.end()) throw ConfigError("missing numeric parameter '" + key + "'");
    return it->second;
  }
  double get_num(const std::string& key, double fallback) const {
    auto it = num.find(key);
    return it == num.end() ? fallback : it->second;
  }
  std::string get_str(const std::string& key) const {
    auto it = str.find(key);
    if (it == str.end()) throw ConfigError("missing string parameter '" + key + "'");
    return it->second;
  }
  std::string get_str(const std::string& key, const std::string& fallback) const {
    auto it = str.find(key);
    return it == str.end() ? fallback : it->second;
  }
  std::vector<double> get_numlist(const std::string& key) const {
    auto it = numlist.find(key);
    if (it == numlist.end()) throw ConfigError("missing list parameter '" + key + "'");
    return it->second;
  }
  bool has(const std::string& key) const {
    return num.count(key) || str.count(key) || numlist.count(key) || strlist.count(key);
  }

  // every catalog constructor calls this so typos in scene files are rejected
  void expect_only(const std::vector<std::string>& keys) const {
    auto known = [&](const std::string& k) {
      for (const auto& a : keys)
        if (a == k) return true;
      return false;
    };
    for (const auto& [k, v] : num)
      if (!known(k)) throw ConfigError("unknown parameter '" + k + "'");
    for (const auto& [k, v] : str)
      if (!known(k)) throw ConfigError("unknown parameter '" + k + "'");
    for (const auto& [k, v] : numlist)
      if (!known(k)) throw ConfigError("unknown parameter '" + k + "'");
    for (const auto& [k, v] : strlist)
      if (!known(k)) throw ConfigError("unknown parameter '" + k + "'");
  }
};

}  // namespace hmv
