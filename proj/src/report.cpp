#include "ricci/report.hpp"

namespace ricci {

void ReportNode::put(const std::string& key, const std::string& value) {
    scalars_.emplace_back(key, value);
}

void ReportNode::put(const std::string& key, long long value) {
    scalars_.emplace_back(key, std::to_string(value));
}

void ReportNode::put(const std::string& key, const Rational& value) {
    scalars_.emplace_back(key, rational_str(value));
}

ReportNode& ReportNode::child(const std::string& key) {
    children_.emplace_back(key, ReportNode{});
    return children_.back().second;
}

void ReportNode::serialize_into(std::string& out, int indent) const {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (const auto& [key, value] : scalars_) {
        out += pad;
        out += key;
        out += ": ";
        out += value;
        out += '\n';
    }
    for (const auto& [key, node] : children_) {
        out += pad;
        out += key;
        out += ":\n";
        node.serialize_into(out, indent + 1);
    }
}

std::string ReportNode::serialize() const {
    std::string out;
    serialize_into(out, 0);
    return out;
}

std::string ReportDocument::serialize() const {
    std::string out = "schema_version: " + schema_version + "\n";
    out += "input: " + spec_echo + "\n";
    out += body.serialize();
    return out;
}

}  // namespace ricci
