#include "eqconic/presets.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace eqconic {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

const std::map<std::string, std::string>& aliases() {
  static const std::map<std::string, std::string> table{
      {"1", "trivial"}, {"A3", "Z3"}, {"Vprime", "V'"}, {"V4", "Z2xZ2"}, {"Klein", "Z2xZ2"}};
  return table;
}

// Splits at '+' outside brackets.
std::vector<std::string> split_terms(std::string_view text) {
  std::vector<std::string> terms;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '[' || c == '<' || c == '(' || c == '{') ++depth;
    if (c == ']' || c == '>' || c == ')' || c == '}') --depth;
    if (c == '+' && depth == 0) {
      terms.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  terms.push_back(trim(current));
  return terms;
}

}  // namespace

const std::vector<GroupPreset>& group_presets() {
  static const std::vector<GroupPreset> presets{
      {"trivial", "<()>"},
      {"Z2", "<(12)>"},
      {"Z2d", "<(12)(34)>"},
      {"Z3", "<(123)>"},
      {"Z2xZ2", "<(12)(34),(13)(24)>"},
      {"V'", "<(12),(34)>"},
      {"Z4", "<(1234)>"},
      {"S3", "<(123),(12)>"},
      {"D8", "<(1234),(13)>"},
      {"A4", "<(123),(12)(34)>"},
      {"S4", "<(1234),(12)>"},
  };
  return presets;
}

NamedGroup parse_group(std::string_view spec) {
  std::string name = trim(spec);
  if (name.empty()) throw InputError("empty group spec");
  if (const auto it = aliases().find(name); it != aliases().end()) name = it->second;
  for (const auto& p : group_presets())
    if (p.name == name) return {p.name, PermGroup::generate(parse_generator_list(p.generators, 4), 4)};
  if (name.front() != '<' && name.front() != '(')
    throw InputError("unknown group '" + name + "'; expected a preset name or a generator list like <(12),(34)>");
  const auto gens = parse_generator_list(name, 4);
  auto group = PermGroup::generate(gens, 4);
  return {group.to_string(), std::move(group)};
}

BurnsideElement parse_sigma(std::string_view spec, const RingPtr& ring) {
  const auto& group = ring->group();
  auto result = BurnsideElement::zero(ring);
  const std::string text = trim(spec);
  if (text.empty()) throw InputError("empty sigma spec");
  for (const auto& term : split_terms(text)) {
    if (term.empty()) throw InputError("empty term in sigma spec '" + text + "'");
    std::size_t pos = 0;
    Coeff multiplier = 1;
    bool explicit_multiplier = false;
    while (pos < term.size() && std::isdigit(static_cast<unsigned char>(term[pos]))) ++pos;
    if (pos > 0) {
      if (pos > 6) throw InputError("multiplier too large in '" + term + "'");
      multiplier = std::stoll(term.substr(0, pos));
      explicit_multiplier = true;
    }
    std::string rest = trim(std::string_view(term).substr(pos));
    if (rest == "*" || rest == "{*}") {
      result = result + multiplier * BurnsideElement::point(ring);
      continue;
    }
    if (explicit_multiplier && !rest.empty() && rest.front() == '*') rest = trim(std::string_view(rest).substr(1));
    if (rest == "{*}") {
      result = result + multiplier * BurnsideElement::point(ring);
      continue;
    }
    if (rest.size() < 3 || rest.front() != '[' || rest.back() != ']')
      throw InputError("unrecognized orbit term '" + term + "'");
    const std::string inner = trim(std::string_view(rest).substr(1, rest.size() - 2));
    if (inner == "G") {
      result = result + multiplier * BurnsideElement::regular(ring);
      continue;
    }
    if (inner.rfind("G/", 0) != 0) throw InputError("unrecognized orbit term '" + term + "'");
    const std::string sub = trim(std::string_view(inner).substr(2));
    if (sub == "G") {
      result = result + multiplier * BurnsideElement::point(ring);
      continue;
    }
    if (sub.empty()) throw InputError("expected a subgroup like <(12)> or A3 in '" + term + "'");
    const auto h = sub.front() == '<' ? PermGroup::generate(parse_generator_list(sub, group.degree()), group.degree())
                                      : parse_group(sub).group;
    if (!h.is_subgroup_of(group))
      throw InputError("'" + sub + "' in '" + term + "' is not a subgroup of " + group.to_string());
    result = result + multiplier * BurnsideElement::basis(ring, ring->class_of(h));
  }
  if (!result.is_genuine() || result.cardinality() != 4)
    throw InputError("sigma '" + text + "' is not a G-set of four points (it has " +
                     std::to_string(result.cardinality()) + ")");
  return result;
}

SigmaConfig realize_sigma(const BurnsideElement& sigma) {
  if (!sigma.is_genuine() || sigma.cardinality() != 4) throw InputError("sigma must be a genuine four-point G-set");
  std::vector<std::size_t> orbit_classes;
  for (std::size_t k = sigma.coeffs().size(); k-- > 0;)
    for (Coeff n = 0; n < sigma.coeff(k); ++n) orbit_classes.push_back(k);
  return SigmaConfig::realize(sigma.ring(), orbit_classes);
}

}  // namespace eqconic
