#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ricci/rational.hpp"

namespace ricci {

// Ordered key/value tree; serialization is byte-stable because entries
// keep their insertion order and all values are canonical strings.
class ReportNode {
  public:
    void put(const std::string& key, const std::string& value);
    void put(const std::string& key, long long value);
    void put(const std::string& key, const Rational& value);
    ReportNode& child(const std::string& key);

    // Indented "key: value" lines, two spaces per level.
    std::string serialize() const;

  private:
    void serialize_into(std::string& out, int indent) const;

    std::vector<std::pair<std::string, std::string>> scalars_;
    std::vector<std::pair<std::string, ReportNode>> children_;
};

struct ReportDocument {
    std::string schema_version = "1";
    std::string spec_echo;
    ReportNode body;

    std::string serialize() const;
};

}  // namespace ricci
