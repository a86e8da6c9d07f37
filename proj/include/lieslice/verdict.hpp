#pragma once

#include <string>
#include <utility>

namespace lieslice {

enum class Status { Holds, Fails, NotApplicable, Inconclusive };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Holds:
      return "holds";
    case Status::Fails:
      return "fails";
    case Status::NotApplicable:
      return "not-applicable";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

/// Outcome of a mechanical check. `note` carries the witness on failure and
/// the reason when the check does not apply.
struct Verdict {
  Status status = Status::Holds;
  std::string note;

  static Verdict holds(std::string note = {}) { return {Status::Holds, std::move(note)}; }
  static Verdict fails(std::string witness) { return {Status::Fails, std::move(witness)}; }
  static Verdict not_applicable(std::string reason) { return {Status::NotApplicable, std::move(reason)}; }
  static Verdict inconclusive(std::string reason) { return {Status::Inconclusive, std::move(reason)}; }

  /// Holds or does not apply.
  bool ok() const { return status == Status::Holds || status == Status::NotApplicable; }
  bool failed() const { return status == Status::Fails; }
};

/// Fold of several verdicts: any failure wins, then inconclusive, then holds.
inline Verdict combine(const Verdict& a, const Verdict& b) {
  if (a.status == Status::Fails) return a;
  if (b.status == Status::Fails) return b;
  if (a.status == Status::Inconclusive) return a;
  if (b.status == Status::Inconclusive) return b;
  if (a.status == Status::Holds || b.status == Status::Holds) return Verdict::holds();
  return a;
}

}  // namespace lieslice
