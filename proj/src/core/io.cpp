#include "core/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace toricq {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw Error(ErrorKind::Parse, "empty rational");
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    if (den.is_zero()) throw Error(ErrorKind::Parse, "zero denominator");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "bad rational '" + s + "'");
  }
}

std::string render_rational(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Scalar parse_scalar(const Json& j, const FieldSpec& field) {
  if (j.is_string())
    return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_number_integer())
    return Scalar(Rational(j.get<long long>()));
  if (j.is_object()) {
    if (!j.contains("a") || !j.contains("b"))
      throw Error(ErrorKind::Parse, "scalar object needs keys a and b");
    const Rational a = parse_rational(j.at("a").get<std::string>());
    const Rational b = parse_rational(j.at("b").get<std::string>());
    return Scalar(a, b, field);
  }
  throw Error(ErrorKind::Parse, "scalar must be a string, integer or object");
}

Json render_scalar(const Scalar& x) {
  if (x.is_rational()) return render_rational(x.rat_part());
  Json j;
  j["a"] = render_rational(x.rat_part());
  j["b"] = render_rational(x.rad_part());
  return j;
}

HRep parse_polytope(const Json& j) {
  HRep h;
  if (!j.is_object() || !j.contains("m"))
    throw Error(ErrorKind::Parse, "polytope file needs key m");
  h.m = j.at("m").get<int>();
  if (h.m < 0) throw Error(ErrorKind::Parse, "m must be non-negative");
  long k = 0;
  if (j.contains("field")) k = j.at("field").value("radicand", 0L);
  h.field = FieldSpec(k);
  for (const Json& hj : j.value("halfspaces", Json::array())) {
    HalfSpace hs;
    const Json& normal = hj.at("normal");
    if (static_cast<int>(normal.size()) != h.m)
      throw Error(ErrorKind::Parse, "normal has wrong dimension");
    for (const Json& c : normal) hs.normal.push_back(parse_scalar(c, h.field));
    hs.offset = parse_scalar(hj.at("offset"), h.field);
    const bool all_zero = std::all_of(hs.normal.begin(), hs.normal.end(),
                                      [](const Scalar& s) { return s.is_zero(); });
    if (h.m > 0 && all_zero)
      throw Error(ErrorKind::Parse, "zero normal vector");
    h.halfspaces.push_back(std::move(hs));
  }
  return h;
}

HRep parse_polytope_string(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::Parse, "invalid JSON");
  return parse_polytope(j);
}

HRep load_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_polytope_string(ss.str());
}

Vec parse_direction(const std::string& text, const FieldSpec& field) {
  Vec xi;
  if (!text.empty() && text.front() == '[') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_array())
      throw Error(ErrorKind::Parse, "direction must be a JSON array");
    for (const Json& c : j) xi.push_back(parse_scalar(c, field));
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
      xi.push_back(Scalar(parse_rational(tok)));
  }
  const bool all_zero =
      std::all_of(xi.begin(), xi.end(), [](const Scalar& s) { return s.is_zero(); });
  if (!xi.empty() && all_zero)
    throw Error(ErrorKind::Parse, "direction must be nonzero");
  return xi;
}

}  // namespace toricq
