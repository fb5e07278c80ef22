#include "prefalloc/error.hpp"

#include <utility>

namespace prefalloc {

ParseError::ParseError(std::string position, const std::string& message)
    : Error(position.empty() ? message : position + ": " + message), position_(std::move(position)) {}

std::string Violation::message() const {
  switch (kind) {
    case Kind::Overlap:
      return "overlap: item '" + item + "' is assigned to more than one agent (also to '" + agent + "')";
    case Kind::IrrelevantItem:
      return "irrelevant item: item '" + item + "' is not in the preference graph of agent '" + agent + "'";
    case Kind::UnknownItem:
      return "unknown item: '" + item + "' (assigned to agent '" + agent + "')";
    case Kind::UnknownAgent:
      return "unknown agent: '" + agent + "'";
  }
  return "violation";
}

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string text = "invalid allocation";
  for (const auto& v : violations) {
    text += "; ";
    text += v.message();
  }
  return text;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

SizeLimitError::SizeLimitError(const std::string& message, unsigned long long size,
                               unsigned long long limit)
    : Error(message), size_(size), limit_(limit) {}

}  // namespace prefalloc
