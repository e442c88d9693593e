#pragma once

#include <string>
#include <vector>

namespace fimod {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Accumulates named pass/fail checks.
class CheckList {
public:
  void add(std::string name, bool pass, std::string detail = {})
  {
    checks_.push_back({std::move(name), pass, std::move(detail)});
  }
  void append(const CheckList& other)
  {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }
  /// Prefixes every name with "prefix/".
  void append(const std::string& prefix, const CheckList& other)
  {
    for (const Check& c : other.checks_)
      checks_.push_back({prefix + "/" + c.name, c.pass, c.detail});
  }

  const std::vector<Check>& checks() const { return checks_; }
  std::size_t failures() const
  {
    std::size_t f = 0;
    for (const Check& c : checks_)
      f += c.pass ? 0 : 1;
    return f;
  }
  bool ok() const { return failures() == 0; }

private:
  std::vector<Check> checks_;
};

}  // namespace fimod
