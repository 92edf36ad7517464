#pragma once

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace multgraph {

/// 12 significant digits.
inline std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// x rounded to 12 significant digits, for serializers that print the
/// shortest round-trip representation.
inline double round_significant(double x) {
  return std::strtod(format_number(x).c_str(), nullptr);
}

/// "3,1" -> (3,1); "0" -> empty partition.
inline Partition parse_partition(const std::string &text) {
  detail::require(!text.empty(), "empty partition text (use 0 for the empty partition)");
  if (text == "0")
    return Partition{};
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception &) {
      throw DomainError("cannot parse partition '" + text + "'");
    }
    detail::require(used == tok.size() && v > 0,
                    "partition '" + text + "' must list positive integers");
    parts.push_back(v);
  }
  detail::require(text.back() != ',', "trailing comma in partition '" + text + "'");
  return Partition(std::move(parts));
}

/// "(3,1)"; the empty partition prints as "()".
inline std::string partition_label(const Partition &p) {
  return "(" + (p.empty() ? std::string() : p.to_string()) + ")";
}

} // namespace multgraph
