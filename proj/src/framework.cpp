#include "afsa/framework.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "afsa/errors.hpp"

namespace afsa {

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::daf: return "daf";
    case Kind::hlaf: return "hlaf";
    case Kind::bhaf: return "bhaf";
    case Kind::setaf: return "setaf";
    case Kind::hsaf: return "hsaf";
  }
  return "?";
}

std::optional<Kind> kind_from_name(const std::string& name) {
  if (name == "daf") return Kind::daf;
  if (name == "hlaf") return Kind::hlaf;
  if (name == "bhaf") return Kind::bhaf;
  if (name == "setaf") return Kind::setaf;
  if (name == "hsaf") return Kind::hsaf;
  return std::nullopt;
}

bool valid_identifier(const std::string& name) {
  if (name.empty()) return false;
  auto head = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
  if (!head(name[0])) return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!tail(name[i])) return false;
  return true;
}

Framework::Framework(Kind kind, std::vector<std::string> arguments,
                     std::vector<Attack> attacks)
    : kind_(kind), arguments_(std::move(arguments)), attacks_(std::move(attacks)) {
  std::sort(arguments_.begin(), arguments_.end());
  for (std::size_t i = 0; i < arguments_.size(); ++i)
    arg_index_.emplace(arguments_[i], static_cast<int>(i));
  for (std::size_t i = 0; i < attacks_.size(); ++i)
    attack_index_.emplace(attacks_[i].id, static_cast<int>(i));
}

bool Framework::is_argument(const std::string& id) const {
  return arg_index_.count(id) != 0;
}

bool Framework::is_attack(const std::string& id) const {
  return attack_index_.count(id) != 0;
}

bool Framework::is_element(const std::string& id) const {
  return is_argument(id) || is_attack(id);
}

const Attack* Framework::attack(const std::string& id) const {
  auto it = attack_index_.find(id);
  return it == attack_index_.end() ? nullptr : &attacks_[it->second];
}

std::vector<const Attack*> Framework::attackers_of(const std::string& id) const {
  std::vector<const Attack*> out;
  for (const auto& atk : attacks_)
    if (atk.target == id) out.push_back(&atk);
  return out;
}

std::vector<std::string> Framework::labellable() const {
  std::vector<std::string> out = arguments_;
  if (kind_ != Kind::setaf)
    for (const auto& atk : attacks_) out.push_back(atk.id);
  return out;
}

bool Framework::operator==(const Framework& other) const {
  return kind_ == other.kind_ && arguments_ == other.arguments_ &&
         attacks_ == other.attacks_;
}

std::vector<std::string> canonical_source_order(
    const std::vector<std::string>& members, const Framework& framework) {
  std::vector<std::string> args, atks;
  for (const auto& m : members)
    (framework.is_argument(m) ? args : atks).push_back(m);
  std::sort(args.begin(), args.end());
  std::sort(atks.begin(), atks.end());
  args.insert(args.end(), atks.begin(), atks.end());
  return args;
}

namespace {

void add(ValidationReport& report, const std::string& code,
         const std::string& message, std::vector<std::string> ids) {
  report.violations.push_back({code, message, std::move(ids)});
}

}  // namespace

ValidationReport validate(const Framework& f) {
  ValidationReport report;

  std::unordered_set<std::string> seen;
  for (const auto& a : f.arguments()) {
    if (!valid_identifier(a))
      add(report, "bad_identifier", "invalid element identifier", {a});
    if (!seen.insert(a).second)
      add(report, "duplicate_id", "identifier declared twice", {a});
  }
  for (const auto& atk : f.attacks()) {
    if (!valid_identifier(atk.id))
      add(report, "bad_identifier", "invalid element identifier", {atk.id});
    if (!seen.insert(atk.id).second)
      add(report, "duplicate_id", "identifier declared twice", {atk.id});
  }

  // Well-foundedness: an attack may only reference arguments and attacks
  // declared before it, so the definition-dependency relation is acyclic.
  std::unordered_set<std::string> declared(f.arguments().begin(),
                                           f.arguments().end());
  for (const auto& atk : f.attacks()) {
    if (atk.source.empty())
      add(report, "empty_source", "attack source must be nonempty", {atk.id});
    for (const auto& m : atk.source)
      if (!declared.count(m))
        add(report, "undeclared_reference",
            "attack references an id not declared before it", {atk.id, m});
    if (!declared.count(atk.target))
      add(report, "undeclared_reference",
          "attack references an id not declared before it",
          {atk.id, atk.target});
    declared.insert(atk.id);
  }

  for (const auto& atk : f.attacks()) {
    switch (f.kind()) {
      case Kind::daf:
        if (atk.source.size() != 1 || !f.is_argument(atk.source[0]))
          add(report, "daf_source",
              "DAF source must be a single argument", {atk.id});
        if (!f.is_argument(atk.target))
          add(report, "daf_target", "DAF target must be an argument", {atk.id});
        break;
      case Kind::hlaf:
        if (atk.source.size() != 1 || !f.is_argument(atk.source[0]))
          add(report, "hlaf_source",
              "HLAF source must be a single argument", {atk.id});
        break;
      case Kind::bhaf:
        if (atk.source.size() != 1)
          add(report, "bhaf_source", "BHAF source must be a singleton", {atk.id});
        break;
      case Kind::setaf:
        for (const auto& m : atk.source)
          if (f.is_attack(m)) {
            add(report, "setaf_source",
                "SETAF source must contain only arguments", {atk.id, m});
            break;
          }
        if (!f.is_argument(atk.target))
          add(report, "setaf_target", "SETAF target must be an argument",
              {atk.id});
        break;
      case Kind::hsaf:
        break;  // sources and targets may be any declared elements
    }
  }

  if (f.kind() == Kind::setaf) {
    // SETAF attacks are not labellable objects, so identical set attackers of
    // one target are a single relation entry, not two tokens.
    std::set<std::pair<std::set<std::string>, std::string>> entries;
    for (const auto& atk : f.attacks()) {
      std::set<std::string> src(atk.source.begin(), atk.source.end());
      if (!entries.emplace(std::move(src), atk.target).second)
        add(report, "setaf_duplicate",
            "duplicate SETAF set attacker for the same target", {atk.id});
    }
  }

  if (f.kind() == Kind::setaf || f.kind() == Kind::hsaf) {
    for (const auto& atk : f.attacks()) {
      std::set<std::string> src(atk.source.begin(), atk.source.end());
      for (const auto& other : f.attacks()) {
        if (other.id == atk.id || other.target != atk.target) continue;
        std::set<std::string> osrc(other.source.begin(), other.source.end());
        if (osrc.size() < src.size() &&
            std::includes(src.begin(), src.end(), osrc.begin(), osrc.end())) {
          report.warnings.push_back("non-minimal set attacker " + atk.id +
                                    ": strict superset of " + other.id +
                                    " targeting " + atk.target);
          break;
        }
      }
    }
  }

  return report;
}

void require_valid(const Framework& f) {
  ValidationReport report = validate(f);
  if (report.ok()) return;
  const Violation& v = report.violations.front();
  std::string ids;
  for (const auto& id : v.ids) ids += " " + id;
  throw ValidationError("invalid framework: " + v.message + " (" + v.code +
                        ":" + ids + ")");
}

int compute_level(const Framework& f) {
  require_valid(f);
  std::unordered_map<std::string, int> level;
  int frame_level = 0;
  for (const auto& atk : f.attacks()) {
    int lvl = 0;
    auto bump = [&](const std::string& id) {
      if (f.is_attack(id)) lvl = std::max(lvl, 1 + level.at(id));
    };
    for (const auto& m : atk.source) bump(m);
    bump(atk.target);
    level[atk.id] = lvl;
    frame_level = std::max(frame_level, lvl);
  }
  return frame_level;
}

}  // namespace afsa
