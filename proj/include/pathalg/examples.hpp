#pragma once

// Registry of worked examples with their recorded outcomes. Each entry
// recomputes its outcome from scratch and compares it with the recorded one.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace pathalg {

/// Where the recorded outcome comes from: a reference computation, a value
/// computed here by an independent method, or an elementary fact.
enum class Origin { Reference, Computed, Elementary };
std::string_view to_string(Origin o);

struct ExampleOutcome {
  std::string expected;
  std::string actual;
  bool matched() const { return expected == actual; }
};

struct BuiltinExample {
  std::string name;
  std::string description;
  Origin origin;
  std::function<ExampleOutcome()> run;
};

const std::vector<BuiltinExample>& builtin_examples();
const BuiltinExample* find_example(std::string_view name);

}  // namespace pathalg
