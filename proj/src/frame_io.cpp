#include "afsa/frame_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>

#include "afsa/errors.hpp"
#include "json.hpp"

namespace afsa {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line;

  int col() const { return static_cast<int>(pos) + 1; }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void skip_spaces() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, col(), msg);
  }

  void expect(char c) {
    if (done() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string identifier() {
    std::size_t start = pos;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                       peek() == '_'))
      ++pos;
    if (pos == start) fail("expected identifier");
    std::string id = text.substr(start, pos - start);
    if (!valid_identifier(id)) {
      pos = start;
      fail("invalid identifier '" + id + "'");
    }
    return id;
  }
};

}  // namespace

Framework parse_frame(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  bool have_header = false;
  Kind kind = Kind::daf;
  std::vector<std::string> arguments;
  std::vector<Attack> attacks;
  std::set<std::string> declared_args;
  std::set<std::string> declared_attacks;

  auto declared = [&](const std::string& id) {
    return declared_args.count(id) || declared_attacks.count(id);
  };

  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();

    Cursor cur{raw, 0, lineno};
    cur.skip_spaces();
    if (cur.done()) continue;

    std::string keyword = cur.identifier();
    if (!have_header) {
      if (keyword != "frame")
        throw ParseError(lineno, 1, "first directive must be 'frame <kind>'");
      cur.skip_spaces();
      std::string kname = cur.identifier();
      auto k = kind_from_name(kname);
      if (!k) cur.fail("unknown frame kind '" + kname + "'");
      kind = *k;
      cur.skip_spaces();
      if (!cur.done()) cur.fail("trailing text after directive");
      have_header = true;
      continue;
    }

    if (keyword == "arg") {
      cur.skip_spaces();
      std::string id = cur.identifier();
      if (declared(id))
        cur.fail("redeclaration of '" + id + "'");
      declared_args.insert(id);
      arguments.push_back(id);
      cur.skip_spaces();
      if (!cur.done()) cur.fail("trailing text after directive");
    } else if (keyword == "atk") {
      cur.skip_spaces();
      std::string id = cur.identifier();
      if (declared(id)) cur.fail("redeclaration of '" + id + "'");
      cur.skip_spaces();
      cur.expect('=');
      cur.skip_spaces();
      cur.expect('{');
      std::vector<std::string> members;
      std::set<std::string> member_set;
      for (;;) {
        cur.skip_spaces();
        std::string m = cur.identifier();
        if (!declared(m)) cur.fail("unknown id " + m);
        if (!member_set.insert(m).second)
          cur.fail("duplicate source member '" + m + "'");
        members.push_back(m);
        cur.skip_spaces();
        if (cur.done()) cur.fail("expected ',' or '}'");
        if (cur.peek() == ',') {
          ++cur.pos;
          continue;
        }
        if (cur.peek() == '}') {
          ++cur.pos;
          break;
        }
        cur.fail("expected ',' or '}'");
      }
      cur.skip_spaces();
      cur.expect('-');
      cur.expect('>');
      cur.skip_spaces();
      std::string target = cur.identifier();
      if (!declared(target)) cur.fail("unknown id " + target);
      cur.skip_spaces();
      if (!cur.done()) cur.fail("trailing text after directive");
      declared_attacks.insert(id);
      attacks.push_back(Attack{id, std::move(members), target});
    } else if (keyword == "frame") {
      throw ParseError(lineno, 1, "duplicate frame header");
    } else {
      throw ParseError(lineno, 1, "unknown directive '" + keyword + "'");
    }
  }
  if (!have_header) throw ParseError(lineno + 1, 1, "missing 'frame <kind>' header");

  Framework framework(kind, std::move(arguments), std::move(attacks));
  std::vector<Attack> normalized;
  normalized.reserve(framework.attacks().size());
  for (const auto& atk : framework.attacks())
    normalized.push_back(Attack{
        atk.id, canonical_source_order(atk.source, framework), atk.target});
  framework = Framework(kind, framework.arguments(), std::move(normalized));

  require_valid(framework);
  return framework;
}

std::string serialize_frame(const Framework& framework) {
  require_valid(framework);
  std::string out = "frame " + kind_name(framework.kind()) + "\n";
  for (const auto& a : framework.arguments()) out += "arg " + a + "\n";
  for (const auto& atk : framework.attacks()) {
    out += "atk " + atk.id + " = {";
    auto members = canonical_source_order(atk.source, framework);
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i) out += ", ";
      out += members[i];
    }
    out += "} -> " + atk.target + "\n";
  }
  return out;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

namespace {

template <typename Map, typename Fmt>
std::string emit_lines(const std::vector<Map>& labellings, Fmt&& fmt) {
  std::string out;
  const Map* first = labellings.empty() ? nullptr : &labellings.front();
  for (const auto& lab : labellings) {
    if (first) {
      bool same = lab.size() == first->size();
      if (same) {
        auto it = first->begin();
        for (auto jt = lab.begin(); jt != lab.end(); ++jt, ++it)
          if (jt->first != it->first) {
            same = false;
            break;
          }
      }
      if (!same) throw DomainError("write_labellings: mixed-domain input");
    }
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [name, v] : lab) obj[name] = fmt(v);
    out += obj.dump();
    out += "\n";
  }
  return out;
}

}  // namespace

std::string write_labellings(const std::vector<Labelling3>& labellings,
                             LabellingMode mode) {
  if (mode == LabellingMode::three_valued)
    return emit_lines(labellings, [](Tri v) { return tri_label(v); });
  return emit_lines(labellings,
                    [](Tri v) { return format_real(tri_to_double(v)); });
}

std::string write_labellings(const std::vector<AssignmentR>& labellings) {
  return emit_lines(labellings, [](double v) { return format_real(v); });
}

}  // namespace afsa
