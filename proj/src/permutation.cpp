#include "eqconic/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "eqconic/error.hpp"

namespace eqconic {

namespace {

std::string quoted(std::string_view text) { return "'" + std::string(text) + "'"; }

// Points of one cycle body (the text between parentheses), 1-based.
std::vector<int> parse_cycle_body(std::string_view body, std::string_view whole, int degree) {
  std::vector<int> points;
  const bool separated = body.find_first_of(" ,\t") != std::string_view::npos;
  if (separated) {
    std::size_t i = 0;
    while (i < body.size()) {
      if (body[i] == ' ' || body[i] == ',' || body[i] == '\t') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(body[i])))
        throw InputError("bad character in cycle " + quoted(whole));
      int value = 0;
      while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
        value = value * 10 + (body[i++] - '0');
      points.push_back(value);
    }
  } else {
    if (degree > 9 && body.size() > 1)
      throw InputError("compact cycle notation needs degree <= 9: " + quoted(whole));
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InputError("bad character in cycle " + quoted(whole));
      points.push_back(c - '0');
    }
  }
  return points;
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int image : images_) {
    if (image < 0 || image >= degree() || seen[static_cast<std::size_t>(image)])
      throw InputError("image array is not a bijection");
    seen[static_cast<std::size_t>(image)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::size_t i = 0;
  bool any = false;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw InputError("expected '(' in permutation " + quoted(text));
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw InputError("unclosed cycle in " + quoted(text));
    const auto points = parse_cycle_body(text.substr(i + 1, close - i - 1), text, degree);
    for (std::size_t k = 0; k < points.size(); ++k) {
      const int from = points[k];
      const int to = points[(k + 1) % points.size()];
      if (from < 1 || from > degree)
        throw InputError("point " + std::to_string(from) + " out of range in " + quoted(text));
      if (used[static_cast<std::size_t>(from - 1)])
        throw InputError("point " + std::to_string(from) + " repeated in " + quoted(text));
      used[static_cast<std::size_t>(from - 1)] = true;
      images[static_cast<std::size_t>(from - 1)] = to - 1;
    }
    any = true;
    i = close + 1;
  }
  if (!any) throw InputError("empty permutation text " + quoted(text));
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& right) const {
  if (right.degree() != degree()) throw InputError("composing permutations of different degree");
  std::vector<int> images(images_.size());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[x] = images_[static_cast<std::size_t>(right.images_[x])];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (std::size_t x = 0; x < images.size(); ++x)
    images[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != static_cast<int>(x)) return false;
  return true;
}

int Permutation::order() const {
  int result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    int length = 0;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

std::string Permutation::to_string() const {
  const bool compact = degree() <= 9;
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == static_cast<int>(start)) continue;
    out += '(';
    bool first = true;
    for (std::size_t x = start; !seen[x]; x = static_cast<std::size_t>(images_[x])) {
      seen[x] = true;
      if (!compact && !first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<Permutation> parse_generator_list(std::string_view text, int degree) {
  auto begin = text.find_first_not_of(" \t");
  auto end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) return {};
  text = text.substr(begin, end - begin + 1);
  if (text.front() == '<') {
    if (text.back() != '>') throw InputError("unbalanced '<' in " + quoted(text));
    text = text.substr(1, text.size() - 2);
  }

  std::vector<Permutation> result;
  std::size_t depth = 0;
  std::size_t token_start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const bool at_end = i == text.size();
    if (!at_end && text[i] == '(') ++depth;
    if (!at_end && text[i] == ')') {
      if (depth == 0) throw InputError("unbalanced ')' in " + quoted(text));
      --depth;
    }
    if (at_end || (text[i] == ',' && depth == 0)) {
      auto token = text.substr(token_start, i - token_start);
      if (token.find_first_not_of(" \t") != std::string_view::npos)
        result.push_back(Permutation::parse(token, degree));
      else if (!at_end || !result.empty())
        throw InputError("empty generator in " + quoted(text));
      token_start = i + 1;
    }
  }
  return result;
}

}  // namespace eqconic
