#include "gwcx/parse.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "gwcx/error.hpp"

namespace gwcx {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view text, std::string_view context) {
  const auto s = trim(text);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw ParseError("expected a number in '" + std::string(context) + "', got '" +
                     std::string(text) + "'");
  }
  return v;
}

std::vector<double> parse_numbers(std::string_view args, std::string_view context) {
  std::vector<double> out;
  while (true) {
    const auto comma = args.find(',');
    out.push_back(parse_number(args.substr(0, comma), context));
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return out;
}

std::pair<std::string_view, std::string_view> split_head(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("expected 'family:parameters', got '" + std::string(text) + "'");
  }
  return {trim(text.substr(0, colon)), text.substr(colon + 1)};
}

std::vector<double> arity(std::string_view args, std::size_t n, std::string_view context) {
  auto v = parse_numbers(args, context);
  if (v.size() != n) {
    throw ParseError("'" + std::string(context) + "' takes " + std::to_string(n) +
                     " parameter(s)");
  }
  return v;
}

}  // namespace

Distribution parse_distribution(std::string_view text) {
  text = trim(text);
  const auto [family, args] = split_head(text);
  if (family == "uniform") {
    const auto p = arity(args, 2, text);
    return Distribution::uniform(p[0], p[1]);
  }
  if (family == "exp") return Distribution::exponential(arity(args, 1, text)[0]);
  if (family == "powersurv") return Distribution::power_survival(arity(args, 1, text)[0]);
  if (family == "transform") {
    const auto open = args.find('(');
    if (open == std::string_view::npos || args.empty() || args.back() != ')') {
      throw ParseError("expected 'transform:NAME(<base>)', got '" + std::string(text) + "'");
    }
    const auto name = trim(args.substr(0, open));
    const auto inner = args.substr(open + 1, args.size() - open - 2);
    Transformation t = name == "exp_minus_one" ? Transformation::exp_minus_one()
                       : name == "identity"
                           ? Transformation::identity()
                           : throw ParseError("unknown transformation '" + std::string(name) + "'");
    return transform(parse_distribution(inner), t);
  }
  throw ParseError("unknown distribution family '" + std::string(family) + "'");
}

WeightFunction parse_weight(std::string_view text) {
  text = trim(text);
  const auto [family, args] = split_head(text);
  if (family == "power") return WeightFunction::power(arity(args, 1, text)[0]);
  if (family == "const") return WeightFunction::constant(arity(args, 1, text)[0]);
  if (family == "expdecay") return WeightFunction::exp_decay(arity(args, 1, text)[0]);
  throw ParseError("unknown weight family '" + std::string(family) + "'");
}

Design parse_design(std::string_view text) {
  text = trim(text);
  if (text == "single") return Design::single;
  if (text == "srs") return Design::srs;
  if (text == "minrssu") return Design::min_rssu;
  if (text == "maxrssu") return Design::max_rssu;
  throw ParseError("unknown design '" + std::string(text) + "'");
}

Variant parse_variant(std::string_view text) {
  text = trim(text);
  if (text == "past") return Variant::past;
  if (text == "residual") return Variant::residual;
  if (text == "extropy") return Variant::extropy;
  throw ParseError("unknown variant '" + std::string(text) + "'");
}

}  // namespace gwcx
