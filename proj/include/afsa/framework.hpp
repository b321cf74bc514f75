#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace afsa {

enum class Kind { daf, hlaf, bhaf, setaf, hsaf };

std::string kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& name);

/// True iff `name` matches [A-Za-z_][A-Za-z0-9_]*.
bool valid_identifier(const std::string& name);

// A named attack: a nonempty source sequence and a single target. Sources are
// kept in stored order; parse_frame normalizes the order, to_setaf chooses it.
struct Attack {
  std::string id;
  std::vector<std::string> source;
  std::string target;

  bool operator==(const Attack&) const = default;
};

struct Violation {
  std::string code;
  std::string message;
  std::vector<std::string> ids;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;

  bool ok() const { return violations.empty(); }
};

// Immutable after construction: arguments are sorted, attacks keep their
// declaration order, lookup tables are prebuilt. Safe to share freely.
class Framework {
 public:
  Framework(Kind kind, std::vector<std::string> arguments,
            std::vector<Attack> attacks);

  Kind kind() const { return kind_; }
  const std::vector<std::string>& arguments() const { return arguments_; }
  const std::vector<Attack>& attacks() const { return attacks_; }

  bool is_argument(const std::string& id) const;
  bool is_attack(const std::string& id) const;
  bool is_element(const std::string& id) const;
  const Attack* attack(const std::string& id) const;

  /// Attacks targeting `id`, in declaration order.
  std::vector<const Attack*> attackers_of(const std::string& id) const;

  /// Canonical element order: arguments (alphabetical) then attacks
  /// (declaration order). For SETAF only arguments are labellable.
  std::vector<std::string> labellable() const;

  bool operator==(const Framework& other) const;

 private:
  Kind kind_;
  std::vector<std::string> arguments_;
  std::vector<Attack> attacks_;
  std::unordered_map<std::string, int> arg_index_;
  std::unordered_map<std::string, int> attack_index_;
};

/// Checks every kind-specific structural constraint; non-minimal set attackers
/// (SETAF/HSAF) produce warnings, never violations.
ValidationReport validate(const Framework& framework);

/// Least n such that all attacks fit the n-level relation. Requires a
/// validated framework.
int compute_level(const Framework& framework);

/// Throws ValidationError unless validate(framework).ok().
void require_valid(const Framework& framework);

/// Canonical source-member order: arguments first, then attacks, each
/// alphabetical. Used by the parser and the serializer.
std::vector<std::string> canonical_source_order(
    const std::vector<std::string>& members, const Framework& framework);

}  // namespace afsa
