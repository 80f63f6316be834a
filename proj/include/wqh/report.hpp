#pragma once

#include <string>
#include <vector>

namespace wqh {

/// Outcome of one named identity, aggregated over all tested index tuples.
struct Check {
  std::string id;
  bool pass = true;
  double worst_deviation = 0.0;
  std::vector<std::vector<long>> witness_indices;  // failing tuples, capped
  std::string note;
};

class Report {
 public:
  static constexpr std::size_t kMaxWitnesses = 32;

  /// Records one evaluation of identity `id` at index tuple `where`.
  void observe(const std::string& id, const std::vector<long>& where, bool ok, double deviation = 0.0);
  /// Registers an identity that is checked elsewhere or vacuously true.
  Check& entry(const std::string& id);
  void fail(const std::string& id, const std::vector<long>& where, const std::string& note = {});
  void note(const std::string& id, const std::string& text);
  void merge(const Report& other);

  bool ok() const;
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& id) const;
  bool passed(const std::string& id) const;

  /// Aligned table, one line per identity.
  std::string human() const;

 private:
  std::vector<Check> checks_;
};

}  // namespace wqh

#include <stdexcept>

namespace wqh {

/// Malformed input or unusable arguments (CLI exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A mathematical obstruction such as a singular equation (CLI exit code 1).
struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wqh
