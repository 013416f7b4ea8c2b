#include <stdexcept>
#include <string>

#include "opdet/measures.hpp"

namespace opdet {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw std::invalid_argument("bad measure spec '" + std::string(text) + "': " + why);
}

Rational parse_parameter(std::string_view full, std::string_view body, std::string_view key) {
  if (body.substr(0, key.size()) != key || body.size() <= key.size() || body[key.size()] != '=') {
    fail(full, "expected " + std::string(key) + "=<rational>");
  }
  return Rational::parse(trim(body.substr(key.size() + 1)));
}

NodeEntry parse_node(std::string_view full, std::string_view item) {
  item = trim(item);
  if (item.empty()) fail(full, "empty node entry");
  NodeEntry entry;
  const auto caret = item.find('^');
  entry.node = Rational::parse(trim(item.substr(0, caret)));
  if (caret != std::string_view::npos) {
    const std::string mult(trim(item.substr(caret + 1)));
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(mult, &used);
    } catch (const std::exception&) {
      fail(full, "bad multiplicity '" + mult + "'");
    }
    if (used != mult.size() || value < 1) fail(full, "multiplicity must be a positive integer, got '" + mult + "'");
    entry.multiplicity = static_cast<unsigned>(value);
  }
  return entry;
}

MeasureSpec parse_impl(std::string_view full, std::string_view text) {
  text = trim(text);
  if (text == "hermite") return MeasureSpec::hermite();
  const auto colon = text.find(':');
  const auto paren = text.find('(');
  if (paren != std::string_view::npos && (colon == std::string_view::npos || paren < colon)) {
    if (trim(text.substr(0, paren)) != "modified") fail(full, "unknown measure '" + std::string(text.substr(0, paren)) + "'");
    if (text.back() != ')') fail(full, "missing ')'");
    const std::string_view inner = text.substr(paren + 1, text.size() - paren - 2);
    int depth = 0;
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (depth < 0) fail(full, "unbalanced parentheses");
      if (inner[i] == ';' && depth == 0) split = i;
    }
    if (depth != 0) fail(full, "unbalanced parentheses");
    if (split == std::string_view::npos) fail(full, "modified(...) needs '<spec>;<nodes>'");
    MeasureSpec base = parse_impl(full, inner.substr(0, split));
    std::vector<NodeEntry> entries;
    std::string_view rest = inner.substr(split + 1);
    while (true) {
      const auto comma = rest.find(',');
      entries.push_back(parse_node(full, rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return MeasureSpec::modified(base, NodeSet(std::move(entries)));
  }
  if (colon == std::string_view::npos) fail(full, "unknown measure '" + std::string(text) + "'");
  const std::string_view family = trim(text.substr(0, colon));
  const std::string_view body = trim(text.substr(colon + 1));
  if (family == "laguerre") return MeasureSpec::laguerre(parse_parameter(full, body, "alpha"));
  if (family == "gegenbauer") return MeasureSpec::gegenbauer(parse_parameter(full, body, "lambda"));
  if (family == "moments") {
    std::vector<Rational> values;
    std::string_view rest = body;
    while (true) {
      const auto comma = rest.find(',');
      values.push_back(Rational::parse(trim(rest.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return MeasureSpec::explicit_moments(std::move(values));
  }
  fail(full, "unknown measure family '" + std::string(family) + "'");
}

}  // namespace

MeasureSpec parse_measure(std::string_view text) { return parse_impl(text, text); }

}  // namespace opdet
